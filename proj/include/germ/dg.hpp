#pragma once

#include <chrono>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "germ/errors.hpp"
#include "germ/groebner.hpp"
#include "germ/model.hpp"
#include "germ/module.hpp"
#include "germ/polynomial.hpp"
#include "germ/text.hpp"

namespace germ {

/// Power of an adjoined generator inside a word.
struct GenPower {
    int gen = 0;  // index into the resolution's generator table
    int exp = 0;

    bool operator==(const GenPower& o) const { return gen == o.gen && exp == o.exp; }
};

/// Word in the adjoined generators: factors sorted by ascending generator
/// index, odd-degree generators with exponent at most one.
struct GenMonomial {
    std::vector<GenPower> factors;

    bool is_one() const { return factors.empty(); }
    bool operator==(const GenMonomial& o) const { return factors == o.factors; }
};

/// Canonical strict order on words (used for term storage and basis layout).
struct GenMonomialLess {
    bool operator()(const GenMonomial& a, const GenMonomial& b) const {
        if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
        for (std::size_t i = 0; i < a.factors.size(); ++i) {
            if (a.factors[i].gen != b.factors[i].gen) return a.factors[i].gen < b.factors[i].gen;
            if (a.factors[i].exp != b.factors[i].exp) return a.factors[i].exp < b.factors[i].exp;
        }
        return false;
    }
};

/// Element of the semi-free graded-commutative algebra R[generators]:
/// polynomial coefficients attached to generator words.
struct DgElement {
    std::size_t nvars = 0;
    std::map<GenMonomial, Polynomial, GenMonomialLess> terms;

    explicit DgElement(std::size_t nv = 0) : nvars(nv) {}

    static DgElement from_polynomial(const Polynomial& p) {
        DgElement e(p.nvars());
        if (!p.is_zero()) e.terms.emplace(GenMonomial{}, p);
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const GenMonomial& m, const Polynomial& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    DgElement& operator+=(const DgElement& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    DgElement& operator-=(const DgElement& o) {
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    DgElement operator+(const DgElement& o) const {
        DgElement r(*this);
        r += o;
        return r;
    }
    DgElement operator-(const DgElement& o) const {
        DgElement r(*this);
        r -= o;
        return r;
    }
    DgElement operator-() const {
        DgElement r(*this);
        for (auto& [m, c] : r.terms) c = -c;
        return r;
    }
    DgElement operator*(const Polynomial& p) const {
        DgElement r(nvars);
        for (const auto& [m, c] : terms) r.add_term(m, c * p);
        return r;
    }
    DgElement operator*(const Rational& q) const {
        DgElement r(nvars);
        for (const auto& [m, c] : terms) r.add_term(m, c * q);
        return r;
    }
    bool operator==(const DgElement& o) const { return terms == o.terms; }
};

/// Adjoined generator of the resolution.  Homological degree >= 1; the
/// ambient variables play the role of the degree-0 generators.
struct DgGenerator {
    std::string name;
    int degree = 1;
    DgElement differential;  // element of homological degree `degree` - 1
};

/// Semi-free graded-commutative dg-algebra resolution B -> R/I built over
/// the ambient polynomial ring by a Koszul stage plus iterated cycle
/// killing.  `verified_through` is the highest homological degree where
/// acyclicity has been certified.
struct DgResolution {
    std::vector<std::string> variables;
    std::vector<Polynomial> target_ideal;  // the f_i being resolved
    std::vector<DgGenerator> generators;
    int verified_through = 0;
    bool minimal = false;

    std::size_t nvars() const { return variables.size(); }

    int monomial_degree(const GenMonomial& m) const {
        int d = 0;
        for (const auto& f : m.factors) d += generators[static_cast<std::size_t>(f.gen)].degree * f.exp;
        return d;
    }

    bool gen_is_odd(int g) const { return generators[static_cast<std::size_t>(g)].degree % 2 == 1; }

    /// Generator counts per homological degree 0..max_degree, the ambient
    /// variables counting as degree 0.
    std::vector<int> generator_counts(int max_degree) const {
        std::vector<int> counts(static_cast<std::size_t>(max_degree) + 1, 0);
        counts[0] = static_cast<int>(nvars());
        for (const auto& g : generators)
            if (g.degree <= max_degree) ++counts[static_cast<std::size_t>(g.degree)];
        return counts;
    }

    std::vector<int> generators_of_degree(int degree) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].degree == degree) out.push_back(static_cast<int>(i));
        return out;
    }
};

namespace dgdetail {

/// w1 * w2 with the Koszul sign; returns false if the product vanishes
/// because an odd generator repeats.
inline bool multiply_words(const DgResolution& res, const GenMonomial& a, const GenMonomial& b,
                           GenMonomial& out, int& sign) {
    // Count inversions between odd factors of a and odd factors of b.
    long inversions = 0;
    for (const auto& fb : b.factors) {
        if (!res.gen_is_odd(fb.gen)) continue;
        for (const auto& fa : a.factors)
            if (res.gen_is_odd(fa.gen) && fa.gen > fb.gen) inversions += fa.exp;  // exp == 1
    }
    out.factors.clear();
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() ||
            (i < a.factors.size() && a.factors[i].gen < b.factors[j].gen)) {
            out.factors.push_back(a.factors[i++]);
        } else if (i == a.factors.size() || b.factors[j].gen < a.factors[i].gen) {
            out.factors.push_back(b.factors[j++]);
        } else {
            const int g = a.factors[i].gen;
            if (res.gen_is_odd(g)) return false;  // odd generator squared
            out.factors.push_back(GenPower{g, a.factors[i].exp + b.factors[j].exp});
            ++i;
            ++j;
        }
    }
    sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

}  // namespace dgdetail

inline DgElement dg_mul(const DgResolution& res, const DgElement& a, const DgElement& b) {
    DgElement r(a.nvars ? a.nvars : b.nvars);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            GenMonomial prod;
            int sign = 1;
            if (!dgdetail::multiply_words(res, ma, mb, prod, sign)) continue;
            Polynomial c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(prod, c);
        }
    return r;
}

inline DgElement dg_monomial_element(std::size_t nvars, const GenMonomial& m) {
    DgElement e(nvars);
    e.terms.emplace(m, Polynomial::constant(nvars, Rational(1)));
    return e;
}

/// The differential, extended from generators as an R-linear graded
/// derivation (Leibniz with Koszul signs).
inline DgElement dg_differential(const DgResolution& res, const DgElement& elem) {
    DgElement out(elem.nvars);
    for (const auto& [word, coeff] : elem.terms) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < word.factors.size(); ++i) {
            const GenPower f = word.factors[i];
            const auto& gen = res.generators[static_cast<std::size_t>(f.gen)];
            // Leibniz term: prefix * g^(exp-1) * d(g) * suffix, with the sign
            // of carrying d past the prefix; dg_mul supplies the sorting signs.
            GenMonomial prefix, suffix;
            for (std::size_t k = 0; k < i; ++k) prefix.factors.push_back(word.factors[k]);
            if (f.exp > 1) prefix.factors.push_back(GenPower{f.gen, f.exp - 1});
            for (std::size_t k = i + 1; k < word.factors.size(); ++k)
                suffix.factors.push_back(word.factors[k]);
            DgElement term = dg_mul(res, dg_monomial_element(elem.nvars, prefix), gen.differential);
            term = dg_mul(res, term, dg_monomial_element(elem.nvars, suffix));
            Polynomial scale = coeff * Rational(f.exp);
            if (prefix_degree % 2 != 0) scale = -scale;
            out += term * scale;
            prefix_degree += gen.degree * f.exp;
        }
    }
    return out;
}

inline int dg_element_degree(const DgResolution& res, const DgElement& e) {
    int d = -1;
    for (const auto& [m, c] : e.terms) {
        const int k = res.monomial_degree(m);
        if (d >= 0 && k != d) throw InvariantError("dg element is not homogeneous");
        d = k;
    }
    return d;
}

/// All words of the given homological degree, canonically sorted.
inline std::vector<GenMonomial> dg_basis(const DgResolution& res, int degree) {
    std::vector<GenMonomial> out;
    GenMonomial current;
    const auto recurse = [&](auto&& self, std::size_t g, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (g == res.generators.size()) return;
        const int d = res.generators[g].degree;
        const int max_exp = res.gen_is_odd(static_cast<int>(g)) ? 1 : remaining / d;
        // exponent 0 first
        self(self, g + 1, remaining);
        for (int e = 1; e <= max_exp && e * d <= remaining; ++e) {
            current.factors.push_back(GenPower{static_cast<int>(g), e});
            self(self, g + 1, remaining - e * d);
            current.factors.pop_back();
        }
    };
    if (degree == 0) return {GenMonomial{}};
    recurse(recurse, 0, degree);
    std::sort(out.begin(), out.end(), [](const GenMonomial& a, const GenMonomial& b) {
        return GenMonomialLess{}(a, b);
    });
    return out;
}

/// Express an element of homological degree `deg` over the standard word
/// basis of that degree.
inline ModuleElement dg_to_module(const DgResolution& res, const DgElement& e,
                                  const std::vector<GenMonomial>& basis) {
    std::map<GenMonomial, std::size_t, GenMonomialLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    ModuleElement v(basis.size(), res.nvars());
    for (const auto& [m, c] : e.terms) {
        auto it = index.find(m);
        if (it == index.end()) throw InvariantError("dg element outside the expected degree");
        v.comps[it->second] = c;
    }
    return v;
}

inline DgElement module_to_dg(const DgResolution& res, const ModuleElement& v,
                              const std::vector<GenMonomial>& basis) {
    DgElement e(res.nvars());
    for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], v.comps[i]);
    return e;
}

/// Options guarding resolution growth.
struct ResolveOptions {
    int generator_cap = 512;
    double seconds_cap = 0;  // 0 = unlimited
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void check_time() const {
        if (seconds_cap <= 0) return;
        const auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start);
        if (elapsed.count() > seconds_cap)
            throw ResourceLimitError("time cap exceeded during resolution");
    }
};

/// Koszul stage: one exterior degree-1 generator per ideal generator, with
/// differential the generator itself.
inline DgResolution koszul_stage(const PointedModel& model) {
    check_model_shape(model);
    if (!model.at_origin())
        throw InputError("koszul_stage: model must be translated to the origin");
    DgResolution res;
    res.variables = model.variables;
    res.target_ideal = model.generators;
    for (std::size_t i = 0; i < model.generators.size(); ++i) {
        DgGenerator g;
        g.name = "e" + std::to_string(i + 1);
        g.degree = 1;
        g.differential = DgElement::from_polynomial(model.generators[i]);
        res.generators.push_back(std::move(g));
    }
    res.verified_through = 0;
    return res;
}

/// Boundary generators of B_j: differentials of the degree-(j+1) words.
inline std::vector<ModuleElement> dg_boundaries(const DgResolution& res, int j,
                                                const std::vector<GenMonomial>& basis_j) {
    std::vector<ModuleElement> out;
    for (const auto& w : dg_basis(res, j + 1)) {
        DgElement img = dg_differential(res, dg_monomial_element(res.nvars(), w));
        if (img.is_zero()) continue;
        out.push_back(dg_to_module(res, img, basis_j));
    }
    return out;
}

/// Cycle generators of B_j: syzygies of the differential images of the
/// degree-j words.
inline std::vector<ModuleElement> dg_cycles(const DgResolution& res, int j,
                                            const std::vector<GenMonomial>& basis_j) {
    const auto basis_below = dg_basis(res, j - 1);
    std::vector<ModuleElement> images;
    images.reserve(basis_j.size());
    for (const auto& w : basis_j)
        images.push_back(
            dg_to_module(res, dg_differential(res, dg_monomial_element(res.nvars(), w)),
                         basis_below));
    return syzygies(images);
}

/// Adjoin one degree-(j+1) generator per homology generator of H_j; the
/// result is acyclic through degree j.
inline DgResolution kill_cycles(DgResolution res, int j, const ResolveOptions& opts = {}) {
    if (res.verified_through < j - 1)
        throw InputError("kill_cycles: resolution not verified through degree j - 1");
    const auto basis_j = dg_basis(res, j);
    const ModuleOrder order = ModuleOrder::position_over_term();

    std::vector<ModuleElement> cycles = dg_cycles(res, j, basis_j);
    std::vector<ModuleElement> span = dg_boundaries(res, j, basis_j);
    auto span_gb = module_groebner(span, order);

    int adjoined = 0;
    for (const auto& z : cycles) {
        opts.check_time();
        ModuleElement r = module_normal_form(z, span_gb, order);
        if (r.is_zero()) continue;  // already a boundary (or reachable from chosen cycles)
        DgGenerator g;
        g.degree = j + 1;
        g.differential = module_to_dg(res, r, basis_j);
        ++adjoined;
        int serial = 1;
        for (const auto& existing : res.generators)
            if (existing.degree == j + 1) ++serial;
        g.name = "w" + std::to_string(j + 1) + "_" + std::to_string(serial);
        res.generators.push_back(std::move(g));
        if (static_cast<int>(res.generators.size()) > opts.generator_cap)
            throw ResourceLimitError("generator cap exceeded while killing cycles");
        span.push_back(r);
        span_gb = module_groebner(span, order);
    }
    res.verified_through = j;
    return res;
}

/// Koszul stage followed by cycle killing in degrees 1..N-1: generators
/// through degree N, acyclicity certified through N-1.
inline DgResolution resolve_through(const PointedModel& model, int N,
                                    const ResolveOptions& opts = {}) {
    if (N < 1) throw InputError("resolve_through: window must be at least 1");
    DgResolution res = koszul_stage(model);
    for (int j = 1; j < N; ++j) res = kill_cycles(std::move(res), j, opts);
    return res;
}

/// d(d(g)) == 0 for every adjoined generator.
inline bool d_squared_certificate(const DgResolution& res) {
    for (const auto& g : res.generators)
        if (!dg_differential(res, g.differential).is_zero()) return false;
    return true;
}

/// Every degree-j cycle (from a syzygy generating set) reduces to a
/// boundary, for each verified degree j.
inline bool acyclicity_certificate(const DgResolution& res) {
    const ModuleOrder order = ModuleOrder::position_over_term();
    for (int j = 1; j <= res.verified_through; ++j) {
        const auto basis_j = dg_basis(res, j);
        auto span_gb = module_groebner(dg_boundaries(res, j, basis_j), order);
        for (const auto& z : dg_cycles(res, j, basis_j))
            if (!module_normal_form(z, span_gb, order).is_zero()) return false;
    }
    return true;
}

/// The fiber of the Kaehler differentials at the origin: one vector space
/// per homological degree with basis the generators of that degree (degree
/// 0: the variable differentials), and the linear-at-origin parts of the
/// generator differentials as boundary maps.
struct LinearizedCotangentFiber {
    std::vector<int> dims;              // dims[j], j = 0..N
    std::vector<Mat> boundary;          // boundary[j]: degree j -> degree j-1, j >= 1
    std::vector<std::vector<int>> generator_ids;  // per degree >= 1, resolution indices
};

inline LinearizedCotangentFiber cotangent_fiber(const DgResolution& res, int N) {
    if (res.verified_through < N - 1)
        throw InputError("cotangent_fiber: resolution not verified through N - 1");
    LinearizedCotangentFiber fiber;
    fiber.dims.assign(static_cast<std::size_t>(N) + 1, 0);
    fiber.generator_ids.assign(static_cast<std::size_t>(N) + 1, {});
    fiber.dims[0] = static_cast<int>(res.nvars());
    for (int j = 1; j <= N; ++j) {
        fiber.generator_ids[static_cast<std::size_t>(j)] = res.generators_of_degree(j);
        fiber.dims[static_cast<std::size_t>(j)] =
            static_cast<int>(fiber.generator_ids[static_cast<std::size_t>(j)].size());
    }
    fiber.boundary.resize(static_cast<std::size_t>(N) + 1);
    for (int j = 1; j <= N; ++j) {
        const auto& src = fiber.generator_ids[static_cast<std::size_t>(j)];
        const std::size_t rows = static_cast<std::size_t>(fiber.dims[static_cast<std::size_t>(j - 1)]);
        Mat m(rows, Vec(src.size(), Rational(0)));
        for (std::size_t col = 0; col < src.size(); ++col) {
            const DgElement& diff = res.generators[static_cast<std::size_t>(src[col])].differential;
            for (const auto& [word, coeff] : diff.terms) {
                if (j == 1) {
                    // Degree-0 target: the linear part of the coefficient.
                    if (!word.is_one()) continue;
                    for (std::size_t v = 0; v < res.nvars(); ++v)
                        m[v][col] = coeff.derivative(v).constant_term();
                } else {
                    if (word.factors.size() != 1 || word.factors[0].exp != 1) continue;
                    const int target = word.factors[0].gen;
                    const auto& tgt = fiber.generator_ids[static_cast<std::size_t>(j - 1)];
                    for (std::size_t row = 0; row < tgt.size(); ++row)
                        if (tgt[row] == target) m[row][col] = coeff.constant_term();
                }
            }
        }
        fiber.boundary[static_cast<std::size_t>(j)] = std::move(m);
    }
    // Composite-zero certificate.
    for (int j = 1; j + 1 <= N; ++j) {
        const Mat& a = fiber.boundary[static_cast<std::size_t>(j)];
        const Mat& b = fiber.boundary[static_cast<std::size_t>(j + 1)];
        if (!a.empty() && !b.empty() && mat_cols(a) == b.size() && !mat_is_zero(mat_mul(a, b)))
            throw InvariantError("linearized boundary maps do not compose to zero");
    }
    return fiber;
}

/// Homology dimensions H_j = ker(boundary_j) / im(boundary_{j+1}) for
/// j = 0..N-1.
inline std::vector<int> fiber_homology_dims(const LinearizedCotangentFiber& fiber) {
    const int N = static_cast<int>(fiber.dims.size()) - 1;
    std::vector<int> h;
    for (int j = 0; j < N; ++j) {
        const int dim = fiber.dims[static_cast<std::size_t>(j)];
        const std::size_t rank_out =
            (j == 0) ? 0 : mat_rank(fiber.boundary[static_cast<std::size_t>(j)]);
        const std::size_t rank_in = mat_rank(fiber.boundary[static_cast<std::size_t>(j + 1)]);
        h.push_back(dim - static_cast<int>(rank_out) - static_cast<int>(rank_in));
    }
    return h;
}

/// Canonical basis of ker(out) modulo im(in): kernel vectors reduced mod
/// the image column space, pruned to an independent set.
inline std::vector<Vec> fiber_homology_basis(const LinearizedCotangentFiber& fiber, int j) {
    const int dim = fiber.dims[static_cast<std::size_t>(j)];
    std::vector<Vec> kernel;
    if (j == 0) {
        for (int i = 0; i < dim; ++i) {
            Vec v(static_cast<std::size_t>(dim), Rational(0));
            v[static_cast<std::size_t>(i)] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = kernel_basis(fiber.boundary[static_cast<std::size_t>(j)]);
    }
    const Mat& image = fiber.boundary[static_cast<std::size_t>(j + 1)];
    std::vector<Vec> out;
    Mat accumulated;
    for (auto& v : kernel) {
        Vec r = image.empty() || mat_cols(image) == 0 ? v : reduce_mod_column_space(image, v);
        if (vec_is_zero(r)) continue;
        accumulated.push_back(r);
        if (mat_rank(accumulated) < accumulated.size())
            accumulated.pop_back();
        else
            out.push_back(std::move(r));
    }
    return out;
}

/// Debug dump: one line `name : degree : differential` per generator,
/// ambient variables first.
inline std::string dump_resolution(const DgResolution& res) {
    std::ostringstream out;
    for (const auto& v : res.variables) out << v << " : 0 : 0\n";
    for (const auto& g : res.generators) {
        out << g.name << " : " << g.degree << " : ";
        if (g.differential.is_zero()) {
            out << "0";
        } else {
            bool first = true;
            for (const auto& [word, coeff] : g.differential.terms) {
                std::string cs = print_polynomial(coeff, res.variables);
                std::string ws;
                for (const auto& f : word.factors) {
                    if (!ws.empty()) ws += "*";
                    ws += res.generators[static_cast<std::size_t>(f.gen)].name;
                    if (f.exp > 1) ws += "^" + std::to_string(f.exp);
                }
                std::string term;
                if (ws.empty()) {
                    term = cs;
                } else if (cs == "1") {
                    term = ws;
                } else if (cs == "-1") {
                    term = "-" + ws;
                } else if (coeff.term_count() == 1) {
                    term = cs + "*" + ws;
                } else {
                    term = "(" + cs + ")*" + ws;
                }
                if (first) {
                    out << term;
                    first = false;
                } else if (!term.empty() && term[0] == '-') {
                    out << " - " << term.substr(1);
                } else {
                    out << " + " << term;
                }
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace germ
