#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace germ {

/// Exponent vector of a power product; the length always equals the ambient
/// ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) {
            r.e[i] -= o.e[i];
            if (r.e[i] < 0) throw std::logic_error("monomial quotient not exact");
        }
        return r;
    }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

/// a < b in graded reverse lexicographic order.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: a < b iff the last nonzero entry of a - b is positive.
    for (std::size_t i = a.e.size(); i-- > 0;) {
        const int d = a.e[i] - b.e[i];
        if (d != 0) return d > 0;
    }
    return false;
}

/// a < b in pure lexicographic order.
inline bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        const int d = a.e[i] - b.e[i];
        if (d != 0) return d < 0;
    }
    return false;
}

/// Total order on monomials compatible with multiplication.  The elimination
/// kind is the block (product) order that makes the first `block` variables
/// dominate: any monomial involving them beats any monomial without them.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Elimination };

    Kind kind = Kind::Grevlex;
    std::size_t block = 0;  // size of the leading block for Elimination

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elimination(std::size_t block_size) {
        return {Kind::Elimination, block_size};
    }

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Grevlex: return grevlex_less(a, b);
            case Kind::Lex: return lex_less(a, b);
            case Kind::Elimination: {
                int da = 0, db = 0;
                for (std::size_t i = 0; i < block; ++i) {
                    da += a.e[i];
                    db += b.e[i];
                }
                if (da != db) return da < db;
                // Grevlex on the block part, then grevlex on the tail.
                for (std::size_t i = block; i-- > 0;) {
                    const int d = a.e[i] - b.e[i];
                    if (d != 0) return d > 0;
                }
                int ta = 0, tb = 0;
                for (std::size_t i = block; i < a.e.size(); ++i) {
                    ta += a.e[i];
                    tb += b.e[i];
                }
                if (ta != tb) return ta < tb;
                for (std::size_t i = a.e.size(); i-- > block;) {
                    const int d = a.e[i] - b.e[i];
                    if (d != 0) return d > 0;
                }
                return false;
            }
        }
        return false;
    }

    bool equal_kind(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

/// Comparator for canonical term storage: graded reverse lex, descending.
struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

}  // namespace germ
