#pragma once

// Fiberwise linear algebra of Higgs structures over the rationals. A Higgs
// structure on a fiber V is a map theta: V -> V (x) U; in a fixed basis
// u_1..u_du of U it is the tuple of component matrices theta_a, and the
// integrability condition theta ^ theta = 0 becomes pairwise commutation of
// the components. Vectors are columns; theta_a acts by left multiplication.

#include "kempf/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kempf {

struct HiggsStructure {
    std::size_t dim_v = 0;
    std::size_t dim_u = 0;
    std::vector<Mat> theta;  // dim_u square matrices of size dim_v

    HiggsStructure() = default;
    HiggsStructure(std::size_t dv, std::size_t du, std::vector<Mat> components)
        : dim_v(dv), dim_u(du), theta(std::move(components)) {
        validate();
    }

    static HiggsStructure zero(std::size_t dv, std::size_t du) {
        return HiggsStructure(dv, du, std::vector<Mat>(du, mat_zero(dv, dv)));
    }

    void validate() const {
        if (dim_v == 0) throw std::invalid_argument("HiggsStructure: dim_v must be positive");
        if (theta.size() != dim_u) throw std::invalid_argument("HiggsStructure: expected dim_u component matrices");
        for (const auto& m : theta) {
            if (m.size() != dim_v) throw std::invalid_argument("HiggsStructure: component is not dim_v x dim_v");
            for (const auto& row : m)
                if (row.size() != dim_v) throw std::invalid_argument("HiggsStructure: component is not square");
        }
    }

    bool operator==(const HiggsStructure& o) const {
        return dim_v == o.dim_v && dim_u == o.dim_u && theta == o.theta;
    }
};

using HiggsVector = Vec;

/// True iff all pairwise component commutators vanish. For dim_u <= 1 this
/// is automatic (the wedge square of a line is zero).
inline bool check_integrability(const HiggsStructure& h) {
    for (std::size_t a = 0; a + 1 < h.dim_u; ++a)
        for (std::size_t b = a + 1; b < h.dim_u; ++b)
            if (!mat_is_zero(commutator(h.theta[a], h.theta[b]))) return false;
    return true;
}

/// Tensor product structure on V1 (x) V2: component a is the Kronecker sum
/// theta1_a (x) I + I (x) theta2_a. Basis order: e_i (x) f_k -> i*dim_v2 + k.
inline HiggsStructure tensor_higgs(const HiggsStructure& h1, const HiggsStructure& h2) {
    if (h1.dim_u != h2.dim_u) throw std::invalid_argument("tensor_higgs: dim_u mismatch");
    std::vector<Mat> comps;
    comps.reserve(h1.dim_u);
    Mat i1 = mat_identity(h1.dim_v), i2 = mat_identity(h2.dim_v);
    for (std::size_t a = 0; a < h1.dim_u; ++a)
        comps.push_back(mat_add(kronecker(h1.theta[a], i2), kronecker(i1, h2.theta[a])));
    return HiggsStructure(h1.dim_v * h2.dim_v, h1.dim_u, std::move(comps));
}

/// Dual structure: component a is -(theta_a)^T. The sign makes the rank-one
/// pair tensored with its dual carry the zero structure.
inline HiggsStructure dual_higgs(const HiggsStructure& h) {
    std::vector<Mat> comps;
    comps.reserve(h.dim_u);
    for (const auto& m : h.theta) comps.push_back(mat_neg(transpose(m)));
    return HiggsStructure(h.dim_v, h.dim_u, std::move(comps));
}

/// Basis of the space of Higgs sections, i.e. the common kernel of the
/// components. Empty result means the common kernel is zero.
inline std::vector<HiggsVector> higgs_sections(const HiggsStructure& h) {
    if (h.dim_u == 0) {
        std::vector<HiggsVector> basis;
        for (std::size_t i = 0; i < h.dim_v; ++i) {
            HiggsVector e(h.dim_v, Rat(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Mat stacked;
    stacked.reserve(h.dim_u * h.dim_v);
    for (const auto& m : h.theta)
        for (const auto& row : m) stacked.push_back(row);
    return kernel_basis(std::move(stacked));
}

/// Degree-one action of Sym(U*) on the fiber: alpha in U* (dual-basis
/// coordinates) acts as sum_a alpha_a theta_a. Satisfies the Leibniz rule on
/// tensor product structures.
inline HiggsVector lambda_act(const HiggsStructure& h, const Vec& alpha, const HiggsVector& v) {
    if (alpha.size() != h.dim_u) throw std::invalid_argument("lambda_act: alpha length must equal dim_u");
    if (v.size() != h.dim_v) throw std::invalid_argument("lambda_act: vector length must equal dim_v");
    HiggsVector out(h.dim_v, Rat(0));
    for (std::size_t a = 0; a < h.dim_u; ++a) {
        if (alpha[a] == 0) continue;
        for (std::size_t i = 0; i < h.dim_v; ++i)
            for (std::size_t j = 0; j < h.dim_v; ++j) out[i] += alpha[a] * h.theta[a][i][j] * v[j];
    }
    return out;
}

/// Kronecker product of fiber vectors, matching tensor_higgs basis order.
inline HiggsVector tensor_vector(const HiggsVector& v, const HiggsVector& w) {
    HiggsVector out;
    out.reserve(v.size() * w.size());
    for (const auto& a : v)
        for (const auto& b : w) out.push_back(a * b);
    return out;
}

}  // namespace kempf
