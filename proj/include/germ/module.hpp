#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// Element of a free module R^rank over the polynomial ring: one polynomial
/// component per basis element.
struct ModuleElement {
    std::vector<Polynomial> comps;

    ModuleElement() = default;
    ModuleElement(std::size_t rank, std::size_t nvars)
        : comps(rank, Polynomial::zero(nvars)) {}
    explicit ModuleElement(std::vector<Polynomial> c) : comps(std::move(c)) {}

    std::size_t rank() const { return comps.size(); }
    std::size_t nvars() const { return comps.empty() ? 0 : comps[0].nvars(); }

    bool is_zero() const {
        for (const auto& p : comps)
            if (!p.is_zero()) return false;
        return true;
    }

    ModuleElement& operator+=(const ModuleElement& o) {
        check(o);
        for (std::size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& o) {
        check(o);
        for (std::size_t i = 0; i < comps.size(); ++i) comps[i] -= o.comps[i];
        return *this;
    }
    ModuleElement operator+(const ModuleElement& o) const {
        ModuleElement r(*this);
        r += o;
        return r;
    }
    ModuleElement operator-(const ModuleElement& o) const {
        ModuleElement r(*this);
        r -= o;
        return r;
    }

    ModuleElement times_term(const Monomial& m, const Rational& c) const {
        ModuleElement r(*this);
        for (auto& p : r.comps) p = p.times_term(m, c);
        return r;
    }

    ModuleElement operator*(const Polynomial& f) const {
        ModuleElement r(*this);
        for (auto& p : r.comps) p = p * f;
        return r;
    }

    ModuleElement operator*(const Rational& c) const {
        ModuleElement r(*this);
        for (auto& p : r.comps) p = p * c;
        return r;
    }

    bool operator==(const ModuleElement& o) const { return comps == o.comps; }
    bool operator!=(const ModuleElement& o) const { return comps != o.comps; }

  private:
    void check(const ModuleElement& o) const {
        if (comps.size() != o.comps.size())
            throw std::invalid_argument("module rank mismatch");
    }
};

/// Position of a module term: basis component plus power product.
struct ModuleMonomial {
    std::size_t comp = 0;
    Monomial mono;
};

/// Position-over-term order on module monomials, with an optional dominant
/// leading block of components (used to read off syzygies by elimination:
/// components below `elim_components` beat all others).
struct ModuleOrder {
    MonomialOrder mono = MonomialOrder::grevlex();
    std::size_t elim_components = 0;

    static ModuleOrder position_over_term(MonomialOrder m = MonomialOrder::grevlex()) {
        return {m, 0};
    }
    static ModuleOrder tag_elimination(std::size_t real_rank,
                                       MonomialOrder m = MonomialOrder::grevlex()) {
        return {m, real_rank};
    }

    bool less(const ModuleMonomial& a, const ModuleMonomial& b) const {
        if (elim_components > 0) {
            const bool a_real = a.comp < elim_components;
            const bool b_real = b.comp < elim_components;
            if (a_real != b_real) return !a_real;  // real block dominates
        }
        if (a.comp != b.comp) return a.comp > b.comp;  // lower component is greater
        return mono.less(a.mono, b.mono);
    }
};

/// Leading module term of a nonzero element under the given order.
struct ModuleTerm {
    ModuleMonomial pos;
    Rational coeff;
};

inline ModuleTerm module_leading_term(const ModuleElement& v, const ModuleOrder& order) {
    bool found = false;
    ModuleTerm best;
    for (std::size_t c = 0; c < v.rank(); ++c) {
        for (const auto& [m, q] : v.comps[c].terms()) {
            ModuleMonomial pos{c, m};
            if (!found || order.less(best.pos, pos)) {
                best = ModuleTerm{pos, q};
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("module_leading_term of zero element");
    return best;
}

}  // namespace germ
