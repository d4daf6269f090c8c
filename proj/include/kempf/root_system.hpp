#pragma once

// Exact root-system data for the simple types A-G: simple roots, coroots,
// fundamental weights, the Weyl-invariant inner product, heights and
// dominant-chamber reduction. Normalization: long roots have squared length
// 2, so all pairings below are reproducible rationals.
//
// Weights are stored in the fundamental-weight basis; root-basis coordinates
// are derived through the inverse Cartan matrix. Coweights and one-parameter
// subgroups are identified into the same space through the inner product, so
// the dual pairing <chi, lambda> and the inner product coincide. Under this
// identification the coroot of alpha is the weight 2*alpha/(alpha,alpha).

#include "kempf/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kempf {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A rational weight in the fundamental-weight basis of its ambient.
struct Weight {
    Vec c;

    Weight() = default;
    explicit Weight(Vec coords) : c(std::move(coords)) {}

    std::size_t size() const { return c.size(); }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend Weight operator-(const Weight& a) {
        Weight r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Weight operator*(const Rat& s, const Weight& a) {
        Weight r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
};

inline Weight zero_weight(std::size_t rank) { return Weight(Vec(rank, Rat(0))); }

constexpr std::size_t kDefaultOrbitCap = 1'000'000;

class RootSystem {
public:
    RootSystem(Series series, std::size_t rank) : series_(series), rank_(rank) {
        validate_type();
        build_gram();
        build_cartan();
        inv_cartan_ = *inverse(cartan_rat());
        build_fund_gram();
        build_roots();
    }

    Series series() const { return series_; }
    std::size_t rank() const { return rank_; }
    std::string name() const { return std::string(1, static_cast<char>(series_)) + std::to_string(rank_); }

    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    const Mat& gram_simple() const { return gram_; }

    /// alpha_i as a Weight (fundamental coordinates are the i-th Cartan column).
    Weight simple_root(std::size_t i) const {
        Vec v(rank_, Rat(0));
        for (std::size_t j = 0; j < rank_; ++j) v[j] = cartan_[j][i];
        return Weight(std::move(v));
    }

    /// omega_i.
    Weight fundamental_weight(std::size_t i) const {
        Vec v(rank_, Rat(0));
        v[i] = 1;
        return Weight(std::move(v));
    }

    /// Half-sum of positive roots; all fundamental coordinates are 1.
    Weight rho() const { return Weight(Vec(rank_, Rat(1))); }

    const std::vector<Weight>& roots() const { return roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }

    bool is_root(const Weight& w) const { return root_set_.count(w.c) != 0; }

    /// The unique dominant root (maximal height).
    Weight highest_root() const { return highest_root_; }

    Rat inner(const Weight& a, const Weight& b) const {
        check_rank(a);
        check_rank(b);
        Rat s(0);
        for (std::size_t i = 0; i < rank_; ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < rank_; ++j) s += a.c[i] * fund_gram_[i][j] * b.c[j];
        }
        return s;
    }

    /// Dual pairing <chi, lambda>. One-parameter subgroups are identified into
    /// weight space through the inner product, so this is inner().
    Rat pair(const Weight& chi, const Weight& lam) const { return inner(chi, lam); }

    Rat q(const Weight& w) const { return inner(w, w); }

    /// 2*alpha/(alpha,alpha) for a root alpha, as a Weight.
    Weight coroot(const Weight& alpha) const {
        if (!is_root(alpha)) throw std::domain_error("coroot: input is not a root of " + name());
        return (Rat(2) / inner(alpha, alpha)) * alpha;
    }

    /// Image of a 1-PS under the inner-product identification of Y(T) (x) Q
    /// with X(T) (x) Q. Both sides share one coordinate system here, so the
    /// identification is the identity on coordinates.
    Weight one_ps_to_character(const Weight& lam) const {
        check_rank(lam);
        return lam;
    }

    Vec to_root_basis(const Weight& w) const {
        check_rank(w);
        return mat_vec(inv_cartan_, w.c);
    }

    Weight from_root_basis(const Vec& d) const {
        if (d.size() != rank_) throw std::invalid_argument("from_root_basis: rank mismatch");
        Vec c(rank_, Rat(0));
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) c[i] += Rat(cartan_[i][j]) * d[j];
        return Weight(std::move(c));
    }

    /// Sum of simple-root coordinates, extended linearly to all weights.
    Rat height(const Weight& w) const {
        Vec d = to_root_basis(w);
        Rat s(0);
        for (const auto& x : d) s += x;
        return s;
    }

    /// Simple reflection s_i.
    Weight reflect(std::size_t i, const Weight& w) const {
        check_rank(w);
        Weight r = w;
        const Rat ci = w.c[i];
        if (ci == 0) return r;
        for (std::size_t j = 0; j < rank_; ++j) r.c[j] -= ci * Rat(cartan_[j][i]);
        return r;
    }

    bool is_dominant(const Weight& w) const {
        check_rank(w);
        return std::all_of(w.c.begin(), w.c.end(), [](const Rat& x) { return x >= 0; });
    }

    /// The unique dominant weight in the Weyl orbit of w, together with the
    /// word of simple reflections mapping w to it (applied left to right).
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

    /// Full Weyl orbit of w; throws when the orbit exceeds the cap.
    std::vector<Weight> orbit(const Weight& w, std::size_t cap = kDefaultOrbitCap) const {
        std::set<Vec> seen{w.c};
        std::deque<Weight> queue{w};
        std::vector<Weight> out;
        while (!queue.empty()) {
            Weight cur = queue.front();
            queue.pop_front();
            out.push_back(cur);
            for (std::size_t i = 0; i < rank_; ++i) {
                Weight r = reflect(i, cur);
                if (seen.insert(r.c).second) {
                    if (seen.size() > cap) throw std::length_error("orbit: Weyl orbit cap exceeded");
                    queue.push_back(r);
                }
            }
        }
        return out;
    }

    bool operator==(const RootSystem& o) const { return series_ == o.series_ && rank_ == o.rank_; }
    bool operator!=(const RootSystem& o) const { return !(*this == o); }

private:
    void check_rank(const Weight& w) const {
        if (w.size() != rank_) throw std::invalid_argument("weight rank mismatch for " + name());
    }

    void validate_type() const {
        bool ok = false;
        switch (series_) {
            case Series::A: ok = rank_ >= 1; break;
            case Series::B: ok = rank_ >= 2; break;
            case Series::C: ok = rank_ >= 3; break;
            case Series::D: ok = rank_ >= 4; break;
            case Series::E: ok = rank_ >= 6 && rank_ <= 8; break;
            case Series::F: ok = rank_ == 4; break;
            case Series::G: ok = rank_ == 2; break;
        }
        if (!ok) throw std::invalid_argument("invalid simple type " + name());
    }

    void build_gram() {
        const std::size_t n = rank_;
        gram_ = mat_zero(n, n);
        auto chain = [&](std::size_t upto, const Rat& val) {
            for (std::size_t i = 0; i + 1 <= upto; ++i) gram_[i][i + 1] = gram_[i + 1][i] = val;
        };
        switch (series_) {
            case Series::A:
                for (std::size_t i = 0; i < n; ++i) gram_[i][i] = 2;
                chain(n - 1, Rat(-1));
                break;
            case Series::B:  // alpha_n short
                for (std::size_t i = 0; i < n; ++i) gram_[i][i] = 2;
                gram_[n - 1][n - 1] = 1;
                chain(n - 1, Rat(-1));
                break;
            case Series::C:  // alpha_n long
                for (std::size_t i = 0; i < n; ++i) gram_[i][i] = 1;
                gram_[n - 1][n - 1] = 2;
                chain(n - 2, Rat(-1, 2));
                gram_[n - 2][n - 1] = gram_[n - 1][n - 2] = -1;
                break;
            case Series::D:  // fork: alpha_n attached to alpha_{n-2}
                for (std::size_t i = 0; i < n; ++i) gram_[i][i] = 2;
                chain(n - 2, Rat(-1));
                gram_[n - 3][n - 1] = gram_[n - 1][n - 3] = -1;
                break;
            case Series::E: {
                for (std::size_t i = 0; i < n; ++i) gram_[i][i] = 2;
                // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4.
                std::vector<std::pair<std::size_t, std::size_t>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
                if (n >= 7) edges.push_back({5, 6});
                if (n == 8) edges.push_back({6, 7});
                for (auto [i, j] : edges) gram_[i][j] = gram_[j][i] = -1;
                break;
            }
            case Series::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                gram_[0][0] = gram_[1][1] = 2;
                gram_[2][2] = gram_[3][3] = 1;
                gram_[0][1] = gram_[1][0] = -1;
                gram_[1][2] = gram_[2][1] = -1;
                gram_[2][3] = gram_[3][2] = Rat(-1, 2);
                break;
            case Series::G:  // alpha_1 long, alpha_2 short
                gram_[0][0] = 2;
                gram_[1][1] = Rat(2, 3);
                gram_[0][1] = gram_[1][0] = -1;
                break;
        }
    }

    void build_cartan() {
        cartan_.assign(rank_, std::vector<long>(rank_, 0));
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) {
                Rat a = Rat(2) * gram_[i][j] / gram_[i][i];
                if (!is_integral(a)) throw std::logic_error("non-integer Cartan entry for " + name());
                long v = static_cast<long>(to_int(a));
                if (i == j ? v != 2 : (v > 0 || v < -3)) throw std::logic_error("Cartan entry out of range for " + name());
                cartan_[i][j] = v;
            }
    }

    Mat cartan_rat() const {
        Mat m = mat_zero(rank_, rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) m[i][j] = cartan_[i][j];
        return m;
    }

    void build_fund_gram() {
        // (omega_i, omega_j) = M_ij (alpha_j, alpha_j)/2 where omega_i = sum_j M_ij alpha_j
        // and M = (A^T)^{-1}, i.e. M_ij = inv_cartan_[j][i].
        fund_gram_ = mat_zero(rank_, rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) fund_gram_[i][j] = inv_cartan_[j][i] * gram_[j][j] / 2;
    }

    void build_roots() {
        std::deque<Weight> queue;
        for (std::size_t i = 0; i < rank_; ++i) {
            Weight a = simple_root(i);
            if (root_set_.insert(a.c).second) queue.push_back(a);
            Weight na = -a;
            if (root_set_.insert(na.c).second) queue.push_back(na);
        }
        while (!queue.empty()) {
            Weight cur = queue.front();
            queue.pop_front();
            roots_.push_back(cur);
            for (std::size_t i = 0; i < rank_; ++i) {
                Weight r = reflect(i, cur);
                if (root_set_.insert(r.c).second) queue.push_back(r);
            }
        }
        std::sort(roots_.begin(), roots_.end());
        for (const auto& r : roots_) {
            Vec d = to_root_basis(r);
            if (std::all_of(d.begin(), d.end(), [](const Rat& x) { return x >= 0; })) positive_roots_.push_back(r);
        }
        highest_root_ = positive_roots_.front();
        Rat best = height(highest_root_);
        for (const auto& r : positive_roots_) {
            Rat h = height(r);
            if (h > best) {
                best = h;
                highest_root_ = r;
            }
        }
    }

    Series series_;
    std::size_t rank_;
    Mat gram_;                              // (alpha_i, alpha_j)
    std::vector<std::vector<long>> cartan_; // a_ij = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
    Mat inv_cartan_;
    Mat fund_gram_;                         // (omega_i, omega_j)
    std::vector<Weight> roots_;
    std::vector<Weight> positive_roots_;
    std::set<Vec> root_set_;
    Weight highest_root_;
};

/// Factory matching the CLI type strings: "A1".."E8", "F4", "G2".
inline RootSystem build_root_system(Series s, std::size_t rank) { return RootSystem(s, rank); }

constexpr std::size_t kMaxRank = 50;

inline RootSystem parse_root_system(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("bad type string '" + text + "'");
    char s = text[0];
    if (s < 'A' || s > 'G') throw std::invalid_argument("bad series in type string '" + text + "'");
    unsigned long rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad rank in type string '" + text + "'");
        rank = rank * 10 + static_cast<unsigned long>(text[i] - '0');
        if (rank > kMaxRank) throw std::invalid_argument("rank too large in type string '" + text + "'");
    }
    return RootSystem(static_cast<Series>(s), rank);
}

}  // namespace kempf
