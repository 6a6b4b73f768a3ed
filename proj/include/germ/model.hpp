#pragma once

#include <string>
#include <vector>

#include "germ/errors.hpp"
#include "germ/linalg.hpp"
#include "germ/polynomial.hpp"
#include "germ/text.hpp"

namespace germ {

/// An affine scheme presented by ideal generators in a polynomial ring,
/// together with a marked rational point on its zero locus.  Doubles as the
/// Kuranishi presentation: the generators are the components of a section of
/// a trivial rank-n bundle over affine space.
struct PointedModel {
    std::vector<std::string> variables;
    std::vector<Polynomial> generators;
    std::vector<Rational> point;

    std::size_t nvars() const { return variables.size(); }

    bool at_origin() const {
        for (const auto& c : point)
            if (c != 0) return false;
        return true;
    }
};

using KuranishiModel = PointedModel;

inline void check_model_shape(const PointedModel& m) {
    if (m.point.size() != m.nvars())
        throw InputError("point dimension does not match variable count");
    for (const auto& f : m.generators)
        if (f.nvars() != m.nvars())
            throw InputError("generator lives in the wrong ring");
}

/// Index of the first generator not vanishing at the model's point, or -1.
inline int first_generator_off_locus(const PointedModel& m) {
    for (std::size_t i = 0; i < m.generators.size(); ++i)
        if (m.generators[i].evaluate(m.point) != 0) return static_cast<int>(i);
    return -1;
}

/// Substitute x_i -> x_i + p_i so the marked point becomes the origin.
inline PointedModel translate_to_origin(const PointedModel& m) {
    check_model_shape(m);
    const int bad = first_generator_off_locus(m);
    if (bad >= 0)
        throw InputError("point not on zero locus: generator #" + std::to_string(bad + 1) +
                         " does not vanish at the point");
    if (m.at_origin()) return m;
    std::vector<Polynomial> images;
    images.reserve(m.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i)
        images.push_back(Polynomial::variable(m.nvars(), i) +
                         Polynomial::constant(m.nvars(), m.point[i]));
    PointedModel out;
    out.variables = m.variables;
    out.point.assign(m.nvars(), Rational(0));
    out.generators.reserve(m.generators.size());
    for (const auto& f : m.generators) out.generators.push_back(f.substitute(images));
    return out;
}

/// Jacobian matrix at the origin: entry (i, j) = d f_i / d x_j evaluated at 0.
/// Requires a model already translated to the origin.
inline Mat jacobian_at(const PointedModel& m) {
    check_model_shape(m);
    if (!m.at_origin()) throw InputError("jacobian_at: model must be translated to the origin");
    Mat jac(m.generators.size(), Vec(m.nvars(), Rational(0)));
    for (std::size_t i = 0; i < m.generators.size(); ++i)
        for (std::size_t j = 0; j < m.nvars(); ++j)
            jac[i][j] = m.generators[i].derivative(j).constant_term();
    return jac;
}

}  // namespace germ
