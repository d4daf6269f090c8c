#pragma once

// Characteristic-p separability machinery: the integer character matrix of a
// weight subset, the gcd of its maximal minors, the largest prime bound over
// all subsets, the separability index, and its maximum over exterior powers.
//
// Minor-size convention: by default "maximal minors" means minors of size
// rank(matrix). The literal convention, minors of size min(rows, cols), is
// available behind a flag; it yields gcd 0 on rank-deficient subsets, which
// is reported as an unbounded prime bound.

#include "kempf/instability.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kempf {

enum class MinorConvention { RankBased, Literal };

/// Weights of a subset S of the support as integer columns in the
/// fundamental-weight basis of the character lattice.
struct CharacterMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<Int>> cols;

    static CharacterMatrix from_weights(const std::vector<Weight>& ws) {
        if (ws.empty()) throw std::invalid_argument("CharacterMatrix: empty weight subset");
        CharacterMatrix m;
        m.rows = ws.front().size();
        for (const auto& w : ws) {
            std::vector<Int> col;
            col.reserve(m.rows);
            for (const auto& x : w.c) {
                if (!is_integral(x))
                    throw std::domain_error("CharacterMatrix: weight is not integral in the character lattice");
                col.push_back(numerator(x));
            }
            m.cols.push_back(std::move(col));
        }
        return m;
    }

    std::size_t rank() const {
        Mat m = mat_zero(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
        return kempf::rank(std::move(m));
    }
};

/// gcd of the maximal minors. Rank-based convention: minors of size
/// rank(m), with the all-zero matrix mapped to 1. Literal convention:
/// minors of size min(rows, cols); 0 when the matrix is rank deficient.
inline Int g_of(const CharacterMatrix& m, MinorConvention conv = MinorConvention::RankBased) {
    const std::size_t r = conv == MinorConvention::RankBased ? m.rank() : std::min(m.rows, m.cols.size());
    if (r == 0) return 1;
    Int g = 0;
    bool done = false;
    for_each_combination(m.rows, r, [&](const std::vector<std::size_t>& rows_idx) {
        if (done) return;
        for_each_combination(m.cols.size(), r, [&](const std::vector<std::size_t>& cols_idx) {
            if (done) return;
            std::vector<std::vector<Int>> minor(r, std::vector<Int>(r));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) minor[i][j] = m.cols[cols_idx[j]][rows_idx[i]];
            Int d = int_det(std::move(minor));
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(d));
            if (g == 1) done = true;
        });
    });
    return g;
}

/// A positive integer bound, or "unbounded" (every prime divides some g_S).
struct PrimeBound {
    bool unbounded = false;
    Int value = 1;

    friend bool operator==(const PrimeBound& a, const PrimeBound& b) {
        return a.unbounded == b.unbounded && (a.unbounded || a.value == b.value);
    }
};

inline Int largest_prime_factor(Int n) {
    if (n < 2) return 1;
    Int largest = 1;
    for (Int d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            largest = d;
            n /= d;
        }
    }
    return n > 1 ? n : largest;
}

/// All subset gcds, keyed by sorted indices into the canonically ordered
/// support.
struct SeparabilityReport {
    std::vector<Weight> support;
    std::map<std::vector<std::size_t>, Int> g_values;
    PrimeBound p_t;
    Rat height;
    bool psi_unbounded = false;
    Int psi = 1;
};

namespace detail {

inline std::map<std::vector<std::size_t>, Int> all_subset_gcds(const std::vector<Weight>& support,
                                                               MinorConvention conv, std::size_t guard) {
    if (support.size() >= 63 || (std::size_t(1) << support.size()) - 1 > guard)
        throw std::length_error("separability: subset enumeration guard exceeded");
    CharacterMatrix full = CharacterMatrix::from_weights(support);
    std::map<std::vector<std::size_t>, Int> out;
    const std::size_t total = (std::size_t(1) << support.size()) - 1;
    for (std::size_t mask = 1; mask <= total; ++mask) {
        std::vector<std::size_t> idx;
        CharacterMatrix sub;
        sub.rows = full.rows;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (mask & (std::size_t(1) << i)) {
                idx.push_back(i);
                sub.cols.push_back(full.cols[i]);
            }
        out.emplace(std::move(idx), g_of(sub, conv));
    }
    return out;
}

inline PrimeBound prime_bound_from_gcds(const std::map<std::vector<std::size_t>, Int>& gcds) {
    PrimeBound best;
    for (const auto& [idx, g] : gcds) {
        if (g == 0) return PrimeBound{true, 0};
        if (g > 1) {
            Int p = largest_prime_factor(g);
            if (p > best.value) best.value = p;
        }
    }
    return best;
}

}  // namespace detail

/// Largest prime dividing any subset gcd g_S; 1 when no g_S has a prime
/// divisor.
inline PrimeBound p_t_of(const Character& c, MinorConvention conv = MinorConvention::RankBased,
                         std::size_t guard = kDefaultSubsetGuard) {
    return detail::prime_bound_from_gcds(detail::all_subset_gcds(c.support(), conv, guard));
}

/// psi = max(height of the character, prime bound), with the full g_S table
/// for audit.
inline SeparabilityReport separability_index(const Character& c, MinorConvention conv = MinorConvention::RankBased,
                                             std::size_t guard = kDefaultSubsetGuard) {
    SeparabilityReport rep;
    rep.support = c.support();
    rep.g_values = detail::all_subset_gcds(rep.support, conv, guard);
    rep.p_t = detail::prime_bound_from_gcds(rep.g_values);
    rep.height = height_of_char(c);
    if (rep.p_t.unbounded) {
        rep.psi_unbounded = true;
        rep.psi = 0;
    } else {
        Int h = to_int(rep.height);  // 2*ht is integral on the character lattice
        rep.psi = h > rep.p_t.value ? h : rep.p_t.value;
    }
    return rep;
}

/// Maximum separability index over the exterior powers 1..dim.
inline PrimeBound psi_bar(const Character& c, MinorConvention conv = MinorConvention::RankBased,
                          std::size_t guard = kDefaultSubsetGuard) {
    Mult n = c.dim();
    if (n >= 63 || (std::size_t(1) << n) - 1 > guard)
        throw std::length_error("psi_bar: exterior-power enumeration guard exceeded");
    PrimeBound best;
    for (Mult i = 1; i <= n; ++i) {
        SeparabilityReport rep = separability_index(exterior_char(c, static_cast<std::size_t>(i)), conv, guard);
        if (rep.psi_unbounded) return PrimeBound{true, 0};
        if (rep.psi > best.value) best.value = rep.psi;
    }
    return best;
}

/// Characteristic zero, or p strictly above the psi_bar bound.
inline bool is_low_separability(const Character& c, long long p, MinorConvention conv = MinorConvention::RankBased,
                                std::size_t guard = kDefaultSubsetGuard) {
    check_characteristic(p);
    if (p == 0) return true;
    PrimeBound b = psi_bar(c, conv, guard);
    return !b.unbounded && Int(p) > b.value;
}

}  // namespace kempf
