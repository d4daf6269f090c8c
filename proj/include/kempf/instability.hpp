#pragma once

// States, the instability measure, exact nearest-point-to-origin computation
// on weight polytopes, optimal destabilizing one-parameter subgroups with
// certificates, the associated parabolic, weight filtrations, and the
// stratification index set.
//
// The nearest point of the convex hull under the Weyl-invariant norm is
// computed by two independent exact methods that must agree:
//   (a) Caratheodory face enumeration - project the origin onto the affine
//       hull of every affinely independent subset of size <= rank+1 and keep
//       the projections with non-negative barycentric coordinates;
//   (b) Wolfe's minimum-norm-point active-set descent, run in rational
//       arithmetic, which terminates finitely because corrals never repeat.
// nearest_point() runs both and cross-checks; bulk enumeration inside
// kirwan_index_set() uses the descent route alone.

#include "kempf/character.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kempf {

constexpr std::size_t kDefaultSubsetGuard = std::size_t(1) << 20;

/// The state of a vector: the set of torus weights appearing with nonzero
/// coefficient.
struct State {
    Ambient ambient;
    std::vector<Weight> weights;  // sorted, distinct, non-empty

    State(Ambient amb, std::vector<Weight> ws) : ambient(std::move(amb)), weights(std::move(ws)) {
        if (weights.empty()) throw std::invalid_argument("State: empty weight set");
        for (const auto& w : weights)
            if (w.size() != ambient.rank()) throw std::invalid_argument("State: weight rank mismatch");
        std::sort(weights.begin(), weights.end());
        weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    }
};

/// m(v, lambda): the minimum pairing <chi, lambda> over the state.
inline Rat measure(const State& s, const Weight& lam) {
    Rat best = s.ambient.pair(s.weights.front(), lam);
    for (std::size_t i = 1; i < s.weights.size(); ++i) {
        Rat v = s.ambient.pair(s.weights[i], lam);
        if (v < best) best = v;
    }
    return best;
}

namespace detail {

inline Mat pairwise_gram(const Ambient& amb, const std::vector<Weight>& pts) {
    const std::size_t n = pts.size();
    Mat k = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) k[i][j] = k[j][i] = amb.inner(pts[i], pts[j]);
    return k;
}

// Solves the equality-constrained projection of the origin onto the affine
// hull of the chosen points: minimize q(sum t_a p_a) subject to sum t_a = 1.
// Returns the barycentric coefficients, or nullopt when the subset is
// affinely dependent (the bordered Gram system is singular exactly then).
inline std::optional<Vec> affine_minimizer(const Mat& gram, const std::vector<std::size_t>& idx) {
    const std::size_t k = idx.size();
    Mat a = mat_zero(k + 1, k + 1);
    Vec rhs(k + 1, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = 2 * gram[idx[i]][idx[j]];
        a[i][k] = 1;
        a[k][i] = 1;
    }
    rhs[k] = 1;
    auto sol = solve_square(std::move(a), std::move(rhs));
    if (!sol) return std::nullopt;
    sol->pop_back();  // drop the multiplier
    return sol;
}

inline Weight combine(const Ambient& amb, const std::vector<Weight>& pts, const std::vector<std::size_t>& idx,
                      const Vec& coeffs) {
    Weight x = zero_weight(amb.rank());
    for (std::size_t i = 0; i < idx.size(); ++i) x = x + (coeffs[i] * pts[idx[i]]);
    return x;
}

inline std::vector<Weight> dedupe(std::vector<Weight> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace detail

/// One affine projection of the origin arising from a subset of the weight
/// set; in_hull marks non-negative barycentric coordinates.
struct ProjectionCandidate {
    Weight point;
    bool in_hull;
};

/// All Caratheodory candidates: projections of the origin onto affine hulls
/// of affinely independent subsets of size <= rank+1.
inline std::vector<ProjectionCandidate> caratheodory_candidates(const Ambient& amb, std::vector<Weight> pts) {
    pts = detail::dedupe(std::move(pts));
    if (pts.empty()) throw std::invalid_argument("caratheodory_candidates: empty set");
    const Mat gram = detail::pairwise_gram(amb, pts);
    std::vector<ProjectionCandidate> out;
    const std::size_t kmax = std::min(pts.size(), amb.rank() + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        for_each_combination(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
            auto coeffs = detail::affine_minimizer(gram, idx);
            if (!coeffs) return;
            bool in_hull = std::all_of(coeffs->begin(), coeffs->end(), [](const Rat& t) { return t >= 0; });
            out.push_back({detail::combine(amb, pts, idx, *coeffs), in_hull});
        });
    }
    return out;
}

/// Nearest point to the origin of the convex hull, by face enumeration.
inline Weight min_norm_point_caratheodory(const Ambient& amb, const std::vector<Weight>& pts) {
    std::optional<Weight> best;
    Rat best_q(0);
    for (auto& cand : caratheodory_candidates(amb, pts)) {
        if (!cand.in_hull) continue;
        Rat q = amb.q(cand.point);
        if (!best || q < best_q) {
            best = cand.point;
            best_q = q;
        }
    }
    return *best;  // singletons always qualify
}

/// Nearest point to the origin of the convex hull, by Wolfe's exact
/// active-set descent.
inline Weight min_norm_point_wolfe(const Ambient& amb, std::vector<Weight> pts) {
    pts = detail::dedupe(std::move(pts));
    if (pts.empty()) throw std::invalid_argument("min_norm_point_wolfe: empty set");
    const std::size_t n = pts.size();
    const Mat gram = detail::pairwise_gram(amb, pts);

    // corral: indices into pts with positive convex coefficients
    std::size_t start = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (gram[j][j] < gram[start][start]) start = j;
    std::vector<std::size_t> corral{start};
    Vec coeff{Rat(1)};

    auto x_dot_point = [&](std::size_t j) {
        Rat s(0);
        for (std::size_t a = 0; a < corral.size(); ++a) s += coeff[a] * gram[corral[a]][j];
        return s;
    };

    const std::size_t max_iter = 1000 * (n + 1) * (amb.rank() + 1);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        Rat qx(0);
        for (std::size_t a = 0; a < corral.size(); ++a) qx += coeff[a] * x_dot_point(corral[a]);

        std::size_t jstar = 0;
        Rat best = x_dot_point(0);
        for (std::size_t j = 1; j < n; ++j) {
            Rat v = x_dot_point(j);
            if (v < best) {
                best = v;
                jstar = j;
            }
        }
        if (best >= qx) return detail::combine(amb, pts, corral, coeff);  // variational optimality

        corral.push_back(jstar);
        coeff.push_back(Rat(0));

        while (true) {
            auto y = detail::affine_minimizer(gram, corral);
            if (!y) throw std::logic_error("min_norm_point_wolfe: corral became affinely dependent");
            if (std::all_of(y->begin(), y->end(), [](const Rat& t) { return t >= 0; })) {
                // keep only the support; strictly positive coefficients make
                // every later line-search step strictly positive
                std::vector<std::size_t> kept;
                Vec kept_coeff;
                for (std::size_t a = 0; a < corral.size(); ++a) {
                    if ((*y)[a] > 0) {
                        kept.push_back(corral[a]);
                        kept_coeff.push_back((*y)[a]);
                    }
                }
                corral = std::move(kept);
                coeff = std::move(kept_coeff);
                break;
            }
            // largest step toward y keeping all coefficients non-negative
            Rat theta(1);
            for (std::size_t a = 0; a < corral.size(); ++a) {
                if ((*y)[a] < 0) {
                    Rat t = coeff[a] / (coeff[a] - (*y)[a]);
                    if (t < theta) theta = t;
                }
            }
            std::vector<std::size_t> next_corral;
            Vec next_coeff;
            for (std::size_t a = 0; a < corral.size(); ++a) {
                Rat w = coeff[a] + theta * ((*y)[a] - coeff[a]);
                if (w > 0) {
                    next_corral.push_back(corral[a]);
                    next_coeff.push_back(w);
                }
            }
            corral = std::move(next_corral);
            coeff = std::move(next_coeff);
        }
    }
    throw std::logic_error("min_norm_point_wolfe: iteration guard exceeded");
}

/// The unique point of the convex hull of ws closest to the origin under the
/// Weyl-invariant norm. Runs both exact methods and insists they agree.
inline Weight nearest_point(const Ambient& amb, const std::vector<Weight>& ws) {
    Weight a = min_norm_point_wolfe(amb, ws);
    Weight b = min_norm_point_caratheodory(amb, ws);
    if (a != b) throw std::logic_error("nearest_point: method disagreement (this is a bug)");
    return a;
}

/// Sign partition of the full root set against lambda. zero_roots holds the
/// Levi part, positive_part the roots of the unipotent radical; the union of
/// the two is the root set of the parabolic. For lambda = 0 every root lands
/// in zero_roots and the data marks the full group.
struct ParabolicData {
    std::vector<Weight> zero_roots;
    std::vector<Weight> positive_part;
    std::vector<Weight> negative_part;

    bool is_full_group() const { return positive_part.empty() && negative_part.empty(); }
};

inline ParabolicData parabolic_of(const Ambient& amb, const Weight& lam) {
    ParabolicData p;
    for (const auto& r : amb.roots()) {
        Rat v = amb.pair(r, lam);
        if (v == 0)
            p.zero_roots.push_back(r);
        else if (v > 0)
            p.positive_part.push_back(r);
        else
            p.negative_part.push_back(r);
    }
    return p;
}

/// The optimal (torus-level) destabilizing data for an unstable state.
struct InstabilityCertificate {
    Weight lambda;             // nearest point of the hull, in M(T) coordinates
    Weight lambda_normalized;  // lambda / q(lambda); measure 1 against the state
    Rat measure_value;         // m(state, lambda) = q(lambda)
    Rat q_value;
    ParabolicData parabolic;
};

/// Certificate for an unstable state, or nullopt when the state is
/// semistable (the origin lies in the hull).
inline std::optional<InstabilityCertificate> optimal_destabilizer(const State& s) {
    Weight lam = nearest_point(s.ambient, s.weights);
    if (lam.is_zero()) return std::nullopt;
    InstabilityCertificate cert;
    cert.lambda = lam;
    cert.q_value = s.ambient.q(lam);
    cert.measure_value = measure(s, lam);
    cert.lambda_normalized = (Rat(1) / cert.q_value) * lam;
    cert.parabolic = parabolic_of(s.ambient, lam);
    return cert;
}

inline bool is_semistable(const State& s) { return nearest_point(s.ambient, s.weights).is_zero(); }

/// Partition of the character by pairing value against lambda, descending.
/// V^q is the union of the levels >= q.
using WeightFiltration = std::vector<std::pair<Rat, std::vector<std::pair<Weight, Mult>>>>;

inline WeightFiltration weight_filtration(const Character& c, const Weight& lam) {
    std::map<Rat, std::vector<std::pair<Weight, Mult>>, std::greater<Rat>> levels;
    for (const auto& [w, m] : c.weights) levels[c.ambient.pair(w, lam)].push_back({w, m});
    WeightFiltration out;
    out.reserve(levels.size());
    for (auto& [value, part] : levels) out.push_back({value, std::move(part)});
    return out;
}

/// Dominant representatives of the nearest points of all non-empty subsets
/// of the support, with their q-values: the index set of the instability
/// stratification.
struct StrataIndexSet {
    std::map<Weight, Rat> betas;

    bool contains(const Weight& beta) const { return betas.count(beta) != 0; }
};

inline StrataIndexSet kirwan_index_set(const Character& c, std::size_t guard = kDefaultSubsetGuard) {
    std::vector<Weight> support = c.support();
    if (support.size() >= 63 || (std::size_t(1) << support.size()) - 1 > guard)
        throw std::length_error("kirwan_index_set: subset enumeration guard exceeded");
    StrataIndexSet out;
    const std::size_t total = (std::size_t(1) << support.size()) - 1;
    for (std::size_t mask = 1; mask <= total; ++mask) {
        std::vector<Weight> subset;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(support[i]);
        Weight np = min_norm_point_wolfe(c.ambient, subset);
        auto [beta, word] = c.ambient.dominant_representative(np);
        out.betas.emplace(beta, c.ambient.q(beta));
    }
    return out;
}

/// The stratum index of a state inside a character: the dominant
/// representative of the nearest point of its weight set. Zero exactly on
/// semistable states.
inline Weight stratum_of(const State& s, const Character& c) {
    if (s.ambient != c.ambient) throw std::invalid_argument("stratum_of: ambient mismatch");
    for (const auto& w : s.weights)
        if (c.weights.find(w) == c.weights.end())
            throw std::domain_error("stratum_of: state is not contained in the character's support");
    Weight np = nearest_point(s.ambient, s.weights);
    return s.ambient.dominant_representative(np).first;
}

}  // namespace kempf
