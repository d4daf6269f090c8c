#pragma once

// Torus characters of representations as exact weight multisets. Supports
// simple ambients and products of simple types; a product concatenates
// fundamental-weight coordinates and its inner product is block diagonal.
//
// Irreducible characters come from the Freudenthal multiplicity recursion;
// tensor / exterior / symmetric powers are multiset algebra on expanded
// weight lists, so dimensions come out exactly right.

#include "kempf/root_system.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kempf {

/// A simple root system or a product of them, acting on concatenated
/// fundamental-weight coordinates.
class Ambient {
public:
    explicit Ambient(RootSystem rs) : factors_{std::move(rs)} { init(); }
    explicit Ambient(std::vector<RootSystem> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("Ambient: no factors");
        init();
    }

    const std::vector<RootSystem>& factors() const { return factors_; }
    std::size_t rank() const { return rank_; }

    std::string name() const {
        std::string s;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k) s += 'x';
            s += factors_[k].name();
        }
        return s;
    }

    Weight embed(std::size_t block, const Weight& w) const {
        Vec c(rank_, Rat(0));
        for (std::size_t i = 0; i < factors_[block].rank(); ++i) c[offsets_[block] + i] = w.c[i];
        return Weight(std::move(c));
    }

    Weight project(std::size_t block, const Weight& w) const {
        check_rank(w);
        Vec c(factors_[block].rank());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = w.c[offsets_[block] + i];
        return Weight(std::move(c));
    }

    Rat inner(const Weight& a, const Weight& b) const {
        check_rank(a);
        check_rank(b);
        Rat s(0);
        for (std::size_t k = 0; k < factors_.size(); ++k) s += factors_[k].inner(project(k, a), project(k, b));
        return s;
    }

    Rat pair(const Weight& chi, const Weight& lam) const { return inner(chi, lam); }
    Rat q(const Weight& w) const { return inner(w, w); }

    Rat height(const Weight& w) const {
        check_rank(w);
        Rat s(0);
        for (std::size_t k = 0; k < factors_.size(); ++k) s += factors_[k].height(project(k, w));
        return s;
    }

    bool is_dominant(const Weight& w) const {
        check_rank(w);
        return std::all_of(w.c.begin(), w.c.end(), [](const Rat& x) { return x >= 0; });
    }

    /// Simple reflection, indexed by global simple-root position.
    Weight reflect(std::size_t i, const Weight& w) const {
        std::size_t k = block_of(i);
        Weight r = w;
        Weight br = factors_[k].reflect(i - offsets_[k], project(k, w));
        for (std::size_t j = 0; j < factors_[k].rank(); ++j) r.c[offsets_[k] + j] = br.c[j];
        return r;
    }

    std::pair<Weight, std::vector<std::size_t>> dominant_representative(const Weight& w) const {
        Weight cur = w;
        std::vector<std::size_t> word;
        while (true) {
            std::size_t i = 0;
            while (i < rank_ && cur.c[i] >= 0) ++i;
            if (i == rank_) return {cur, word};
            cur = reflect(i, cur);
            word.push_back(i);
        }
    }

    /// All roots, embedded in the product coordinates.
    std::vector<Weight> roots() const {
        std::vector<Weight> out;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            for (const auto& r : factors_[k].roots()) out.push_back(embed(k, r));
        return out;
    }

    std::vector<Weight> positive_roots() const {
        std::vector<Weight> out;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            for (const auto& r : factors_[k].positive_roots()) out.push_back(embed(k, r));
        return out;
    }

    bool is_root(const Weight& w) const {
        check_rank(w);
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            Weight p = project(k, w);
            if (p.is_zero()) continue;
            // support must live in exactly one block
            Weight e = embed(k, p);
            return e == w && factors_[k].is_root(p);
        }
        return false;
    }

    Weight coroot(const Weight& alpha) const {
        if (!is_root(alpha)) throw std::domain_error("coroot: input is not a root of " + name());
        return (Rat(2) / inner(alpha, alpha)) * alpha;
    }

    Vec to_root_basis(const Weight& w) const {
        check_rank(w);
        Vec d;
        d.reserve(rank_);
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            Vec b = factors_[k].to_root_basis(project(k, w));
            d.insert(d.end(), b.begin(), b.end());
        }
        return d;
    }

    Weight from_root_basis(const Vec& d) const {
        if (d.size() != rank_) throw std::invalid_argument("from_root_basis: rank mismatch");
        Vec c(rank_);
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            Vec block(d.begin() + offsets_[k], d.begin() + offsets_[k] + factors_[k].rank());
            Weight w = factors_[k].from_root_basis(block);
            for (std::size_t i = 0; i < w.size(); ++i) c[offsets_[k] + i] = w.c[i];
        }
        return Weight(std::move(c));
    }

    std::vector<Weight> orbit(const Weight& w, std::size_t cap = kDefaultOrbitCap) const {
        std::set<Vec> seen{w.c};
        std::vector<Weight> out, frontier{w};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& cur : frontier) {
                out.push_back(cur);
                for (std::size_t i = 0; i < rank_; ++i) {
                    Weight r = reflect(i, cur);
                    if (seen.insert(r.c).second) {
                        if (seen.size() > cap) throw std::length_error("orbit: Weyl orbit cap exceeded");
                        next.push_back(r);
                    }
                }
            }
            frontier = std::move(next);
        }
        return out;
    }

    friend Ambient product(const Ambient& a, const Ambient& b) {
        std::vector<RootSystem> f = a.factors_;
        f.insert(f.end(), b.factors_.begin(), b.factors_.end());
        return Ambient(std::move(f));
    }

    bool operator==(const Ambient& o) const {
        if (factors_.size() != o.factors_.size()) return false;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            if (factors_[k] != o.factors_[k]) return false;
        return true;
    }
    bool operator!=(const Ambient& o) const { return !(*this == o); }

private:
    void init() {
        rank_ = 0;
        for (const auto& f : factors_) {
            offsets_.push_back(rank_);
            rank_ += f.rank();
        }
    }
    std::size_t block_of(std::size_t i) const {
        for (std::size_t k = factors_.size(); k-- > 0;)
            if (i >= offsets_[k]) return k;
        throw std::out_of_range("simple-root index out of range");
    }
    void check_rank(const Weight& w) const {
        if (w.size() != rank_) throw std::invalid_argument("weight rank mismatch for " + name());
    }

    std::vector<RootSystem> factors_;
    std::vector<std::size_t> offsets_;
    std::size_t rank_ = 0;
};

/// "A2" or "A2xA3" etc.
inline Ambient parse_ambient(const std::string& text) {
    std::vector<RootSystem> factors;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t sep = text.find('x', start);
        std::string piece = text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
        factors.push_back(parse_root_system(piece));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return Ambient(std::move(factors));
}

using Mult = std::uint64_t;
using WeightMultiset = std::map<Weight, Mult>;

/// A finite multiset of weights with multiplicities: the torus character of a
/// representation.
struct Character {
    Ambient ambient;
    WeightMultiset weights;

    Character(Ambient amb, WeightMultiset ws) : ambient(std::move(amb)), weights(std::move(ws)) {
        if (weights.empty()) throw std::invalid_argument("Character: empty weight multiset");
        for (const auto& [w, m] : weights) {
            if (w.size() != ambient.rank()) throw std::invalid_argument("Character: weight rank mismatch");
            if (m == 0) throw std::invalid_argument("Character: zero multiplicity");
        }
    }

    Mult dim() const {
        Mult d = 0;
        for (const auto& [w, m] : weights) d += m;
        return d;
    }

    std::vector<Weight> support() const {
        std::vector<Weight> s;
        s.reserve(weights.size());
        for (const auto& [w, m] : weights) s.push_back(w);
        return s;
    }

    /// Checks stability of the multiset under every simple reflection.
    bool is_weyl_stable() const {
        for (std::size_t i = 0; i < ambient.rank(); ++i) {
            WeightMultiset reflected;
            for (const auto& [w, m] : weights) reflected[ambient.reflect(i, w)] += m;
            if (reflected != weights) return false;
        }
        return true;
    }
};

inline Character trivial_character(const Ambient& amb) {
    return Character(amb, WeightMultiset{{zero_weight(amb.rank()), 1}});
}

namespace detail {

constexpr std::size_t kFreudenthalBoxCap = 10'000'000;

inline void check_integral_dominant(const RootSystem& rs, const Weight& highest) {
    if (!rs.is_dominant(highest)) throw std::domain_error("irreducible_character: highest weight is not dominant");
    for (const auto& x : highest.c)
        if (!is_integral(x)) throw std::domain_error("irreducible_character: highest weight is not integral");
}

}  // namespace detail

/// Character of the irreducible representation with the given dominant
/// integral highest weight. Multiplicities are computed by the Freudenthal
/// recursion on the dominant weights below the highest one, then spread over
/// Weyl orbits.
inline Character irreducible_character(const RootSystem& rs, const Weight& highest,
                                       std::size_t orbit_cap = kDefaultOrbitCap) {
    detail::check_integral_dominant(rs, highest);
    const std::size_t n = rs.rank();

    // Dominant weights <= highest: mu = highest - sum k_i alpha_i with
    // 0 <= k_i <= floor(root-basis coordinate of highest); every dominant mu
    // in that range occurs.
    Vec droot = rs.to_root_basis(highest);
    std::vector<long> box(n);
    Rat box_size(1);
    for (std::size_t i = 0; i < n; ++i) {
        box[i] = static_cast<long>(rat_floor(droot[i]));
        box_size *= box[i] + 1;
    }
    if (box_size > Rat(detail::kFreudenthalBoxCap))
        throw std::length_error("irreducible_character: dominant-weight box too large");

    struct DomEntry {
        Weight mu;
        long level;
    };
    std::vector<DomEntry> dominants;
    std::vector<long> k(n, 0);
    while (true) {
        Vec c = highest.c;
        long level = 0;
        for (std::size_t j = 0; j < n; ++j) {
            level += k[j];
            if (k[j] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) c[i] -= Rat(k[j] * rs.cartan()[i][j]);
        }
        Weight mu{std::move(c)};
        if (rs.is_dominant(mu)) dominants.push_back({std::move(mu), level});
        std::size_t pos = 0;
        while (pos < n && k[pos] == box[pos]) k[pos++] = 0;
        if (pos == n) break;
        ++k[pos];
    }
    std::sort(dominants.begin(), dominants.end(), [](const DomEntry& a, const DomEntry& b) {
        return a.level != b.level ? a.level < b.level : a.mu < b.mu;
    });

    const Weight rho = rs.rho();
    const Rat top_q = rs.q(highest + rho);
    std::map<Weight, Mult> dom_mult;
    for (const auto& entry : dominants) {
        if (entry.level == 0) {
            dom_mult[entry.mu] = 1;
            continue;
        }
        Rat num(0);
        for (const auto& alpha : rs.positive_roots()) {
            for (long t = 1;; ++t) {
                Weight nu = entry.mu + (Rat(t) * alpha);
                auto it = dom_mult.find(rs.dominant_representative(nu).first);
                if (it == dom_mult.end()) break;  // weight strings are contiguous
                num += Rat(it->second) * rs.inner(nu, alpha);
            }
        }
        Rat denom = top_q - rs.q(entry.mu + rho);
        Rat m = 2 * num / denom;
        if (!is_integral(m) || m <= 0) throw std::logic_error("Freudenthal recursion produced a non-positive multiplicity");
        dom_mult[entry.mu] = static_cast<Mult>(to_int(m));
    }

    WeightMultiset all;
    for (const auto& [mu, m] : dom_mult)
        for (const auto& w : rs.orbit(mu, orbit_cap)) all[w] += m;
    return Character(Ambient(rs), std::move(all));
}

inline Character irreducible_character(const Ambient& amb, const Weight& highest,
                                       std::size_t orbit_cap = kDefaultOrbitCap);

/// V(omega_1): the defining representation of the type.
inline Character standard_character(const RootSystem& rs) {
    return irreducible_character(rs, rs.fundamental_weight(0));
}

/// The adjoint representation, V(highest root).
inline Character adjoint_character(const RootSystem& rs) {
    return irreducible_character(rs, rs.highest_root());
}

inline Character tensor_char(const Character& c1, const Character& c2) {
    if (c1.ambient != c2.ambient) throw std::invalid_argument("tensor_char: ambient mismatch");
    WeightMultiset out;
    for (const auto& [w1, m1] : c1.weights)
        for (const auto& [w2, m2] : c2.weights) out[w1 + w2] += m1 * m2;
    return Character(c1.ambient, std::move(out));
}

namespace detail {

constexpr Mult kExpansionCap = 1'000'000;

inline std::vector<Weight> expanded_weights(const Character& c) {
    if (c.dim() > kExpansionCap) throw std::length_error("character too large to expand weight by weight");
    std::vector<Weight> list;
    list.reserve(static_cast<std::size_t>(c.dim()));
    for (const auto& [w, m] : c.weights)
        for (Mult i = 0; i < m; ++i) list.push_back(w);
    return list;
}

}  // namespace detail

/// Multiset of sums over i-element subsets of the expanded weight list (the
/// elementary-symmetric convention). exterior_char(c, 0) is trivial.
inline Character exterior_char(const Character& c, std::size_t i) {
    Mult n = c.dim();
    if (i > n) throw std::out_of_range("exterior_char: index exceeds dimension");
    auto list = detail::expanded_weights(c);
    std::vector<WeightMultiset> dp(i + 1);
    dp[0][zero_weight(c.ambient.rank())] = 1;
    for (std::size_t e = 0; e < list.size(); ++e) {
        for (std::size_t k = std::min(i, e + 1); k >= 1; --k)
            for (const auto& [s, m] : dp[k - 1]) dp[k][s + list[e]] += m;
    }
    return Character(c.ambient, std::move(dp[i]));
}

/// Multiset of sums over m-element sub-multisets (repetition allowed).
inline Character sym_char(const Character& c, std::size_t m) {
    auto list = detail::expanded_weights(c);
    std::vector<WeightMultiset> dp(m + 1);
    dp[0][zero_weight(c.ambient.rank())] = 1;
    for (const auto& w : list)
        for (std::size_t k = 1; k <= m; ++k)
            for (const auto& [s, mult] : dp[k - 1]) dp[k][s + w] += mult;
    return Character(c.ambient, std::move(dp[m]));
}

/// Character of the external tensor product on the product group.
inline Character external_tensor(const Character& c1, const Character& c2) {
    Ambient amb = product(c1.ambient, c2.ambient);
    WeightMultiset out;
    for (const auto& [w1, m1] : c1.weights)
        for (const auto& [w2, m2] : c2.weights) {
            Vec c = w1.c;
            c.insert(c.end(), w2.c.begin(), w2.c.end());
            out[Weight(std::move(c))] += m1 * m2;
        }
    return Character(std::move(amb), std::move(out));
}

inline Character irreducible_character(const Ambient& amb, const Weight& highest, std::size_t orbit_cap) {
    const auto& factors = amb.factors();
    Character acc = irreducible_character(factors[0], amb.project(0, highest), orbit_cap);
    for (std::size_t k = 1; k < factors.size(); ++k)
        acc = external_tensor(acc, irreducible_character(factors[k], amb.project(k, highest), orbit_cap));
    return acc;
}

/// Maximum of 2*height(mu) over the dominant weights mu in the support.
inline Rat height_of_char(const Character& c) {
    bool found = false;
    Rat best(0);
    for (const auto& [w, m] : c.weights) {
        if (!c.ambient.is_dominant(w)) continue;
        Rat h = 2 * c.ambient.height(w);
        if (!found || h > best) best = h;
        found = true;
    }
    if (!found) throw std::domain_error("height_of_char: no dominant weight in support (corrupted character)");
    return best;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Characteristic argument: a prime, or 0 meaning characteristic zero.
inline void check_characteristic(long long p) {
    if (p != 0 && !is_prime(p)) throw std::domain_error("characteristic must be a prime or zero");
}

inline bool is_low_height(const Character& c, long long p) {
    check_characteristic(p);
    return p == 0 || height_of_char(c) < p;
}

/// The tensor-product bound: ranks n1 + n2 < p + 2 (always true in
/// characteristic zero). Agrees with the low-height test for the external
/// tensor of the two standard representations.
inline bool tensor_bound_check(long long n1, long long n2, long long p) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("tensor_bound_check: ranks must be >= 1");
    check_characteristic(p);
    return p == 0 || n1 + n2 < p + 2;
}

}  // namespace kempf
