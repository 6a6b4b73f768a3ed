#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germ/monomial.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Sparse multivariate polynomial over the rationals.  Terms are kept in a
/// map ordered by descending grevlex, so iteration order is the canonical
/// term order and no zero coefficients are ever stored.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrevlexDescending>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, Rational c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_.emplace(Monomial(nvars), std::move(c));
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t index) {
        if (index >= nvars) throw std::invalid_argument("variable index out of range");
        Polynomial p(nvars);
        Monomial m(nvars);
        m.e[index] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Polynomial term(Monomial m, Rational c) {
        Polynomial p(m.nvars());
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_term() const {
        Monomial one(nvars_);
        auto it = terms_.find(one);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial operator+(const Polynomial& o) const {
        Polynomial r(*this);
        r += o;
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial r(*this);
        r -= o;
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        Polynomial r(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial operator*(const Rational& c) const {
        Polynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
        return r;
    }
    Polynomial& operator*=(const Rational& c) { return *this = *this * c; }

    /// Multiply by a single term c * m.
    Polynomial times_term(const Monomial& m, const Rational& c) const {
        Polynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [ma, ca] : terms_) r.terms_.emplace(ma * m, ca * c);
        return r;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative polynomial power");
        Polynomial r = constant(nvars_, Rational(1));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != nvars_)
            throw std::invalid_argument("evaluate: point dimension mismatch");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m.e[i] != 0) t *= rational_pow(point[i], m.e[i]);
            acc += t;
        }
        return acc;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d(m);
            d.e[var] -= 1;
            r.add_term(d, c * m.e[var]);
        }
        return r;
    }

    /// Substitute each variable by the given polynomial (composition); the
    /// images fix the target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_)
            throw std::invalid_argument("substitute: image count mismatch");
        const std::size_t target = images.empty() ? 0 : images[0].nvars();
        Polynomial acc(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < m.e[i]; ++k) t = t * images[i];
            acc += t;
        }
        return acc;
    }

    /// Reinterpret in a ring with `new_nvars` variables, variable i mapping
    /// to index image[i].
    Polynomial map_variables(const std::vector<int>& image, std::size_t new_nvars) const {
        if (image.size() != nvars_)
            throw std::invalid_argument("map_variables: image size mismatch");
        Polynomial r(new_nvars);
        for (const auto& [m, c] : terms_) {
            Monomial t(new_nvars);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (m.e[i] == 0) continue;
                if (image[i] < 0 || static_cast<std::size_t>(image[i]) >= new_nvars)
                    throw std::invalid_argument("map_variables: image index out of range");
                t.e[static_cast<std::size_t>(image[i])] += m.e[i];
            }
            r.add_term(t, c);
        }
        return r;
    }

    /// Substitute a single variable by a polynomial in the same ring.
    Polynomial substitute_one(std::size_t var, const Polynomial& image) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            Monomial rest(m);
            const int k = rest.e[var];
            rest.e[var] = 0;
            Polynomial t = Polynomial::term(rest, c);
            for (int i = 0; i < k; ++i) t = t * image;
            r += t;
        }
        return r;
    }

    /// Discard all terms of total degree > bound (jet truncation).
    Polynomial truncate_above(int bound) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() <= bound) r.terms_.emplace(m, c);
        return r;
    }

    /// The homogeneous part of the given total degree.
    Polynomial homogeneous_part(int degree) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == degree) r.terms_.emplace(m, c);
        return r;
    }

    int lowest_degree() const {  // -1 for zero
        int d = -1;
        for (const auto& [m, c] : terms_) {
            const int k = m.degree();
            if (d < 0 || k < d) d = k;
        }
        return d;
    }

    bool is_homogeneous() const {
        return terms_.empty() || lowest_degree() == total_degree();
    }

    /// Leading monomial with respect to an arbitrary order (linear scan; the
    /// stored order is grevlex so other orders pay one pass).
    const std::pair<const Monomial, Rational>* leading_term(const MonomialOrder& order) const {
        const std::pair<const Monomial, Rational>* best = nullptr;
        for (const auto& t : terms_)
            if (!best || order.less(best->first, t.first)) best = &t;
        return best;
    }

  private:
    void check_ring(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial ring mismatch");
    }

    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace germ
