#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// a Smith-form diagonalization for gcds of maximal minors, and the Weyl
// dimension formula for irreducible characters.

#include "kempf/root_system.hpp"

#include <stdexcept>
#include <vector>

namespace oracles {

using kempf::Int;
using IntMat = std::vector<std::vector<Int>>;

/// Diagonalize by unimodular row/column operations; returns the nonzero
/// diagonal entries. Their product is the top determinantal divisor, i.e.
/// the gcd of the rank-sized minors.
inline std::vector<Int> smith_diagonal(IntMat m) {
    using boost::multiprecision::abs;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, t = 0;
    std::vector<Int> diag;
    while (t < rows && t < cols) {
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[pr], m[t]);
        for (auto& row : m) std::swap(row[pc], row[t]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int f = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
                if (m[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(m[i], m[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int f = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

inline Int smith_top_divisor(const IntMat& m) {
    Int prod = 1;
    for (const auto& d : smith_diagonal(m)) prod *= d;
    return prod;
}

/// dim V(highest) = prod_{alpha > 0} (highest + rho, alpha) / (rho, alpha).
inline kempf::Int weyl_dim(const kempf::RootSystem& rs, const kempf::Weight& highest) {
    kempf::Rat num(1), den(1);
    const kempf::Weight rho = rs.rho();
    for (const auto& alpha : rs.positive_roots()) {
        num *= rs.inner(highest + rho, alpha);
        den *= rs.inner(rho, alpha);
    }
    kempf::Rat d = num / den;
    if (!kempf::is_integral(d)) throw std::logic_error("Weyl dimension formula produced a non-integer");
    return kempf::to_int(d);
}

}  // namespace oracles
