#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "germ/module.hpp"
#include "germ/monomial.hpp"
#include "germ/polynomial.hpp"

namespace germ {

/// Reduced Groebner basis of an ideal, together with the order that produced
/// it.  The empty basis presents the zero ideal.
struct GroebnerBasis {
    std::vector<Polynomial> gens;
    MonomialOrder order = MonomialOrder::grevlex();
    bool reduced = false;
};

namespace gbdetail {

struct LeadCache {
    ModuleElement elem;
    ModuleMonomial lead;
    Rational lc;
};

inline LeadCache make_cached(ModuleElement v, const ModuleOrder& order) {
    auto lt = module_leading_term(v, order);
    return LeadCache{std::move(v), lt.pos, lt.coeff};
}

/// Full normal form: every term of the result is irreducible by the basis.
inline ModuleElement normal_form_impl(ModuleElement h, const std::vector<LeadCache>& basis,
                                      const ModuleOrder& order) {
    ModuleElement rem(h.rank(), h.nvars());
    while (!h.is_zero()) {
        const ModuleTerm t = module_leading_term(h, order);
        bool reduced_step = false;
        for (const auto& g : basis) {
            if (g.lead.comp != t.pos.comp) continue;
            if (!g.lead.mono.divides(t.pos.mono)) continue;
            const Monomial q = t.pos.mono / g.lead.mono;
            h -= g.elem.times_term(q, t.coeff / g.lc);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            rem.comps[t.pos.comp].add_term(t.pos.mono, t.coeff);
            h.comps[t.pos.comp].add_term(t.pos.mono, -t.coeff);
        }
    }
    return rem;
}

struct PairKey {
    int lcm_degree;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
        return std::tie(lcm_degree, i, j) < std::tie(o.lcm_degree, o.i, o.j);
    }
};

inline std::vector<LeadCache> buchberger_loop(std::vector<ModuleElement> gens,
                                              const ModuleOrder& order) {
    std::vector<LeadCache> basis;
    const auto add_pairs = [&](std::set<PairKey>& pending, std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (basis[i].lead.comp != basis[j].lead.comp) continue;
            const int d = lcm(basis[i].lead.mono, basis[j].lead.mono).degree();
            pending.insert(PairKey{d, i, j});
        }
    };

    std::set<PairKey> pending;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(make_cached(std::move(g), order));
        add_pairs(pending, basis.size() - 1);
    }

    const bool ring_case = !basis.empty() && basis.front().elem.rank() == 1;
    const auto pair_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        const int d = lcm(basis[a].lead.mono, basis[b].lead.mono).degree();
        return pending.count(PairKey{d, a, b}) > 0;
    };

    while (!pending.empty()) {
        const PairKey key = *pending.begin();
        pending.erase(pending.begin());
        const auto& gi = basis[key.i];
        const auto& gj = basis[key.j];

        // Product criterion (valid in the ring case only).
        if (ring_case && coprime(gi.lead.mono, gj.lead.mono)) continue;

        // Chain criterion: some other basis element divides the lcm and both
        // associated pairs were already treated.
        const Monomial l = lcm(gi.lead.mono, gj.lead.mono);
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == key.i || k == key.j) continue;
            if (basis[k].lead.comp != gi.lead.comp) continue;
            if (!basis[k].lead.mono.divides(l)) continue;
            if (!pair_pending(key.i, k) && !pair_pending(key.j, k)) skip = true;
        }
        if (skip) continue;

        ModuleElement s = gi.elem.times_term(l / gi.lead.mono, Rational(1) / gi.lc) -
                          gj.elem.times_term(l / gj.lead.mono, Rational(1) / gj.lc);
        ModuleElement r = normal_form_impl(std::move(s), basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_cached(std::move(r), order));
        add_pairs(pending, basis.size() - 1);
    }
    return basis;
}

inline bool module_mono_less_canonical(const ModuleMonomial& a, const ModuleMonomial& b,
                                       const ModuleOrder& order) {
    return order.less(a, b);
}

/// Minimalize + interreduce + normalize: the unique reduced basis, sorted by
/// descending leading module monomial.
inline std::vector<ModuleElement> reduce_basis(std::vector<LeadCache> basis,
                                               const ModuleOrder& order) {
    // Drop elements whose lead is divisible by another kept element's lead;
    // among equal leads the earliest survives.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].lead.comp != basis[i].lead.comp) continue;
            if (!basis[j].lead.mono.divides(basis[i].lead.mono)) continue;
            if (basis[j].lead.mono == basis[i].lead.mono && j > i) continue;
            keep[i] = false;
        }
    }
    std::vector<LeadCache> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Interreduce: tail-reduce each element against the others.
    std::vector<ModuleElement> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<LeadCache> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        ModuleElement r = normal_form_impl(minimal[i].elem, others, order);
        if (r.is_zero()) continue;  // fully redundant element
        const auto lt = module_leading_term(r, order);
        out.push_back(r * (Rational(1) / lt.coeff));
    }
    std::sort(out.begin(), out.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        return order.less(module_leading_term(b, order).pos, module_leading_term(a, order).pos);
    });
    return out;
}

}  // namespace gbdetail

/// Reduced Groebner basis of the submodule generated by `gens`.
inline std::vector<ModuleElement> module_groebner(std::vector<ModuleElement> gens,
                                                  const ModuleOrder& order) {
    auto basis = gbdetail::buchberger_loop(std::move(gens), order);
    return gbdetail::reduce_basis(std::move(basis), order);
}

inline ModuleElement module_normal_form(const ModuleElement& v,
                                        const std::vector<ModuleElement>& basis,
                                        const ModuleOrder& order) {
    std::vector<gbdetail::LeadCache> cached;
    cached.reserve(basis.size());
    for (const auto& g : basis) cached.push_back(gbdetail::make_cached(g, order));
    return gbdetail::normal_form_impl(v, cached, order);
}

inline bool module_contains(const std::vector<ModuleElement>& basis, const ModuleElement& v,
                            const ModuleOrder& order) {
    return module_normal_form(v, basis, order).is_zero();
}

/// Reduced Groebner basis of the ideal generated by `gens`.
inline GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens,
                                    MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<ModuleElement> wrapped;
    for (const auto& f : gens)
        if (!f.is_zero()) wrapped.push_back(ModuleElement{{f}});
    const ModuleOrder morder{order, 0};
    auto basis = module_groebner(std::move(wrapped), morder);
    GroebnerBasis out;
    out.order = order;
    out.reduced = true;
    for (auto& v : basis) out.gens.push_back(std::move(v.comps[0]));
    return out;
}

/// Unique remainder of f modulo a reduced basis; zero iff f is in the ideal.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!gb.reduced) throw std::invalid_argument("normal_form requires a reduced basis");
    std::vector<ModuleElement> basis;
    for (const auto& g : gb.gens) basis.push_back(ModuleElement{{g}});
    const ModuleOrder morder{gb.order, 0};
    return module_normal_form(ModuleElement{{f}}, basis, morder).comps[0];
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) {
    return normal_form(f, gb).is_zero();
}

inline bool ideal_is_unit(const GroebnerBasis& gb) {
    return gb.gens.size() == 1 && gb.gens[0].is_constant() && !gb.gens[0].is_zero();
}

/// Certifies the defining property: every S-polynomial of basis pairs
/// reduces to zero (no shortcut criteria applied).
inline bool buchberger_certificate(const GroebnerBasis& gb) {
    const ModuleOrder morder{gb.order, 0};
    std::vector<gbdetail::LeadCache> basis;
    for (const auto& g : gb.gens)
        basis.push_back(gbdetail::make_cached(ModuleElement{{g}}, morder));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Monomial l = lcm(basis[i].lead.mono, basis[j].lead.mono);
            ModuleElement s =
                basis[i].elem.times_term(l / basis[i].lead.mono, Rational(1) / basis[i].lc) -
                basis[j].elem.times_term(l / basis[j].lead.mono, Rational(1) / basis[j].lc);
            if (!gbdetail::normal_form_impl(std::move(s), basis, morder).is_zero()) return false;
        }
    return true;
}

/// Same certificate for module bases.
inline bool module_buchberger_certificate(const std::vector<ModuleElement>& gb,
                                          const ModuleOrder& order) {
    std::vector<gbdetail::LeadCache> basis;
    for (const auto& g : gb) basis.push_back(gbdetail::make_cached(g, order));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].lead.comp != basis[j].lead.comp) continue;
            const Monomial l = lcm(basis[i].lead.mono, basis[j].lead.mono);
            ModuleElement s =
                basis[i].elem.times_term(l / basis[i].lead.mono, Rational(1) / basis[i].lc) -
                basis[j].elem.times_term(l / basis[j].lead.mono, Rational(1) / basis[j].lc);
            if (!gbdetail::normal_form_impl(std::move(s), basis, order).is_zero()) return false;
        }
    return true;
}

/// Generating set of the syzygy module {(a_1..a_n) : sum a_i gen_i = 0},
/// computed by a Groebner run on the graph submodule [gen_i | e_i] with the
/// real components eliminated; the tag components carry the cofactors.
inline std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens) {
    if (gens.empty()) return {};
    const std::size_t r = gens[0].rank();
    const std::size_t n = gens.size();
    const std::size_t nv = gens[0].nvars();
    std::vector<ModuleElement> augmented;
    augmented.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (gens[i].rank() != r) throw std::invalid_argument("syzygies: rank mismatch");
        ModuleElement a(r + n, nv);
        for (std::size_t c = 0; c < r; ++c) a.comps[c] = gens[i].comps[c];
        a.comps[r + i] = Polynomial::constant(nv, Rational(1));
        augmented.push_back(std::move(a));
    }
    const ModuleOrder order = ModuleOrder::tag_elimination(r);
    auto gb = module_groebner(std::move(augmented), order);
    std::vector<ModuleElement> out;
    for (auto& v : gb) {
        bool real_zero = true;
        for (std::size_t c = 0; c < r; ++c)
            if (!v.comps[c].is_zero()) {
                real_zero = false;
                break;
            }
        if (!real_zero) continue;
        ModuleElement s(n, nv);
        for (std::size_t i = 0; i < n; ++i) s.comps[i] = std::move(v.comps[r + i]);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens) {
    std::vector<ModuleElement> wrapped;
    wrapped.reserve(gens.size());
    for (const auto& f : gens) wrapped.push_back(ModuleElement{{f}});
    return syzygies(wrapped);
}

/// Generators of the ideal's intersection with the subring omitting the
/// given variable block; output polynomials live in the original ring but
/// do not involve the block variables.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                         const std::vector<std::size_t>& block) {
    if (gens.empty()) return {};
    if (block.empty()) return gens;
    const std::size_t nv = gens[0].nvars();
    std::vector<bool> in_block(nv, false);
    for (auto b : block) {
        if (b >= nv) throw std::invalid_argument("eliminate: block index out of range");
        in_block[b] = true;
    }
    // Permute the block variables to the front.
    std::vector<int> fwd(nv, -1);
    std::vector<int> back(nv, -1);
    int next = 0;
    for (std::size_t i = 0; i < nv; ++i)
        if (in_block[i]) fwd[i] = next++;
    for (std::size_t i = 0; i < nv; ++i)
        if (!in_block[i]) fwd[i] = next++;
    for (std::size_t i = 0; i < nv; ++i) back[static_cast<std::size_t>(fwd[i])] = static_cast<int>(i);

    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const auto& f : gens) moved.push_back(f.map_variables(fwd, nv));
    const std::size_t bs = block.size();
    auto gb = groebner_basis(moved, MonomialOrder::elimination(bs));
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens) {
        bool uses_block = false;
        for (const auto& [m, c] : g.terms())
            for (std::size_t i = 0; i < bs && !uses_block; ++i)
                if (m.e[i] > 0) uses_block = true;
        if (!uses_block) out.push_back(g.map_variables(back, nv));
    }
    return out;
}

/// True iff f lies in the radical of the ideal, by the Rabinowitsch trick:
/// 1 in ideal + (1 - z f) in the ring extended by z.
inline bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (f.is_zero()) return true;
    const std::size_t nv = f.nvars();
    std::vector<int> emb(nv);
    for (std::size_t i = 0; i < nv; ++i) emb[i] = static_cast<int>(i);
    std::vector<Polynomial> ext;
    ext.reserve(gens.size() + 1);
    for (const auto& g : gens) ext.push_back(g.map_variables(emb, nv + 1));
    const Polynomial z = Polynomial::variable(nv + 1, nv);
    ext.push_back(Polynomial::constant(nv + 1, Rational(1)) - z * f.map_variables(emb, nv + 1));
    return ideal_is_unit(groebner_basis(ext));
}

/// Reduced Groebner bases are unique per (ideal, order): equality of ideals.
inline bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.gens == b.gens;
}

}  // namespace germ
