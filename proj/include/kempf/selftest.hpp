#pragma once

// Built-in invariant battery behind the `selftest` CLI subcommand. Runs a
// deterministic (fixed-seed) sweep of the structural identities the library
// promises, and reports pass/fail counts.

#include "kempf/charexpr.hpp"
#include "kempf/higgs.hpp"
#include "kempf/instability.hpp"
#include "kempf/separability.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace kempf {

struct SelfTestResult {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    void check(const std::string& name, bool ok) {
        if (ok)
            ++passed;
        else {
            ++failed;
            failures.push_back(name);
        }
    }
};

namespace detail {

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    Rat rat(long lo = -5, long hi = 5, long max_den = 7) {
        std::uniform_int_distribution<long> den(1, max_den);
        long d = den(eng_);
        std::uniform_int_distribution<long> num(lo * d, hi * d);
        return Rat(num(eng_), d);
    }

    Weight weight(std::size_t rank) {
        Vec c(rank);
        for (auto& x : c) x = rat();
        return Weight(std::move(c));
    }

    Mat matrix(std::size_t n) {
        Mat m = mat_zero(n, n);
        for (auto& row : m)
            for (auto& x : row) x = rat(-3, 3, 3);
        return m;
    }

    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(eng_);
    }

private:
    std::mt19937_64 eng_;
};

inline void selftest_root_systems(SelfTestResult& res, TestRng& rng) {
    struct Expect {
        Series s;
        std::size_t rank;
        std::size_t positive;
    };
    const std::vector<Expect> table = {{Series::A, 1, 1},  {Series::A, 2, 3}, {Series::A, 3, 6},
                                       {Series::B, 2, 4},  {Series::B, 3, 9}, {Series::C, 3, 9},
                                       {Series::D, 4, 12}, {Series::F, 4, 24}, {Series::G, 2, 6}};
    for (const auto& e : table) {
        RootSystem rs(e.s, e.rank);
        res.check(rs.name() + ": positive root count", rs.positive_roots().size() == e.positive);

        bool delta_ok = true;
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                Rat v = rs.pair(rs.fundamental_weight(i), rs.coroot(rs.simple_root(j)));
                if (v != Rat(i == j ? 1 : 0)) delta_ok = false;
            }
        res.check(rs.name() + ": <omega_i, alpha_j^vee> = delta_ij", delta_ok);

        bool winv = true, round = true, selfcert = true;
        for (int t = 0; t < 5; ++t) {
            Weight w1 = rng.weight(rs.rank()), w2 = rng.weight(rs.rank());
            for (std::size_t i = 0; i < rs.rank(); ++i)
                if (rs.inner(rs.reflect(i, w1), rs.reflect(i, w2)) != rs.inner(w1, w2)) winv = false;
            if (rs.from_root_basis(rs.to_root_basis(w1)) != w1) round = false;
            auto [dom, word] = rs.dominant_representative(w1);
            Weight img = w1;
            for (auto i : word) img = rs.reflect(i, img);
            if (img != dom || !rs.is_dominant(dom)) selfcert = false;
        }
        res.check(rs.name() + ": Weyl-invariant inner product", winv);
        res.check(rs.name() + ": basis round-trip", round);
        res.check(rs.name() + ": dominant representative self-certifies", selfcert);
    }
}

inline void selftest_higgs(SelfTestResult& res, TestRng& rng) {
    bool commuting_ok = true, noncommuting_ok = true, dual_ok = true, leibniz_ok = true, sections_ok = true;
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng.index(3);
        Mat base = rng.matrix(n);
        // polynomials in one matrix commute
        Mat p1 = mat_add(base, mat_identity(n));
        Mat p2 = mat_add(mat_mul(base, base), base);
        HiggsStructure commuting(n, 2, {p1, p2});
        if (!check_integrability(commuting)) commuting_ok = false;

        HiggsStructure random(n, 2, {rng.matrix(n), rng.matrix(n)});
        bool zero_comms = mat_is_zero(commutator(random.theta[0], random.theta[1]));
        if (check_integrability(random) != zero_comms) noncommuting_ok = false;

        if (!(dual_higgs(dual_higgs(random)) == random)) dual_ok = false;

        HiggsStructure h2(2, 2, {rng.matrix(2), rng.matrix(2)});
        HiggsStructure prod = tensor_higgs(random, h2);
        Vec alpha = {rng.rat(), rng.rat()};
        HiggsVector v(n), w(2);
        for (auto& x : v) x = rng.rat();
        for (auto& x : w) x = rng.rat();
        HiggsVector lhs = lambda_act(prod, alpha, tensor_vector(v, w));
        HiggsVector rhs = tensor_vector(lambda_act(random, alpha, v), w);
        HiggsVector rhs2 = tensor_vector(v, lambda_act(h2, alpha, w));
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (lhs[i] != rhs[i] + rhs2[i]) leibniz_ok = false;

        Mat stacked;
        for (const auto& comp : random.theta)
            for (const auto& row : comp) stacked.push_back(row);
        if (higgs_sections(random).size() + rank(stacked) != n) sections_ok = false;
    }
    res.check("higgs: polynomial components are integrable", commuting_ok);
    res.check("higgs: integrability iff commutators vanish", noncommuting_ok);
    res.check("higgs: dual is an involution", dual_ok);
    res.check("higgs: Leibniz identity on tensor structures", leibniz_ok);
    res.check("higgs: kernel dimension + stacked rank = dim_v", sections_ok);

    HiggsStructure line(1, 1, {Mat{{Rat(3, 2)}}});
    res.check("higgs: rank-1 dual tensor is the zero structure",
              tensor_higgs(line, dual_higgs(line)) == HiggsStructure::zero(1, 1));
}

inline void selftest_characters(SelfTestResult& res, TestRng&) {
    RootSystem a1(Series::A, 1), a2(Series::A, 2);
    Character std1 = standard_character(a1), adj1 = adjoint_character(a1), std2 = standard_character(a2);
    res.check("char: dim std A1 = 2", std1.dim() == 2);
    res.check("char: dim adj A1 = 3", adj1.dim() == 3);
    res.check("char: dim std A2 = 3", std2.dim() == 3);
    res.check("char: W-stability", std1.is_weyl_stable() && adj1.is_weyl_stable() && std2.is_weyl_stable());
    res.check("char: dim ext^2 std A2 = 3", exterior_char(std2, 2).dim() == 3);
    res.check("char: dim tensor", tensor_char(std2, std2).dim() == 9);
    res.check("char: height std A2 = 2", height_of_char(std2) == 2);
    res.check("char: height adj A1 = 2", height_of_char(adj1) == 2);

    bool bound_ok = true;
    for (long n1 = 2; n1 <= 4; ++n1)
        for (long n2 = 2; n2 <= 4; ++n2)
            for (long p : {2L, 3L, 5L, 7L}) {
                Character ext = external_tensor(standard_character(RootSystem(Series::A, n1 - 1)),
                                                standard_character(RootSystem(Series::A, n2 - 1)));
                if (tensor_bound_check(n1, n2, p) != is_low_height(ext, p)) bound_ok = false;
            }
    res.check("char: tensor bound matches low-height test", bound_ok);
}

inline void selftest_instability(SelfTestResult& res, TestRng& rng) {
    const std::vector<Ambient> ambients = {Ambient(RootSystem(Series::A, 1)), Ambient(RootSystem(Series::A, 2)),
                                           Ambient(RootSystem(Series::B, 2)), Ambient(RootSystem(Series::G, 2))};
    bool agree = true, cert_ok = true, equiv = true, scale = true;
    for (int t = 0; t < 30; ++t) {
        const Ambient& amb = ambients[t % ambients.size()];
        std::vector<Weight> pts;
        std::size_t npts = 1 + rng.index(6);
        for (std::size_t i = 0; i < npts; ++i) pts.push_back(rng.weight(amb.rank()));

        Weight a = min_norm_point_wolfe(amb, pts);
        Weight b = min_norm_point_caratheodory(amb, pts);
        if (a != b) agree = false;

        State s(amb, pts);
        auto cert = optimal_destabilizer(s);
        if (cert) {
            if (cert->measure_value != cert->q_value) cert_ok = false;
            if (measure(s, cert->lambda_normalized) != 1) cert_ok = false;
            for (const auto& chi : s.weights)
                if (amb.pair(chi, cert->lambda) < cert->q_value) cert_ok = false;
        } else if (!a.is_zero()) {
            cert_ok = false;
        }

        std::size_t refl = rng.index(amb.rank());
        std::vector<Weight> reflected;
        for (const auto& w : pts) reflected.push_back(amb.reflect(refl, w));
        if (min_norm_point_wolfe(amb, reflected) != amb.reflect(refl, a)) equiv = false;

        Rat c = rng.rat(1, 4, 3);  // strictly positive
        std::vector<Weight> scaled;
        for (const auto& w : pts) scaled.push_back(c * w);
        if (min_norm_point_wolfe(amb, scaled) != c * a) scale = false;
    }
    res.check("instab: Caratheodory and Wolfe agree", agree);
    res.check("instab: certificates satisfy m = q and m(normalized) = 1", cert_ok);
    res.check("instab: Weyl equivariance of the nearest point", equiv);
    res.check("instab: positive scaling of the nearest point", scale);

    RootSystem a1(Series::A, 1);
    Ambient amb1(a1);
    Character std1 = standard_character(a1), adj1 = adjoint_character(a1);
    StrataIndexSet b_std = kirwan_index_set(std1), b_adj = kirwan_index_set(adj1);
    res.check("instab: B(std A1) = {0, omega}",
              b_std.betas.size() == 2 && b_std.contains(zero_weight(1)) && b_std.contains(Weight({Rat(1)})));
    res.check("instab: B(adj A1) = {0, 2omega}",
              b_adj.betas.size() == 2 && b_adj.contains(zero_weight(1)) && b_adj.contains(Weight({Rat(2)})));
    State neg(amb1, {Weight({Rat(-1)})});
    res.check("instab: stratum of {-omega} in std A1 is omega", stratum_of(neg, std1) == Weight({Rat(1)}));
}

inline void selftest_separability(SelfTestResult& res, TestRng& rng) {
    RootSystem a1(Series::A, 1), a2(Series::A, 2);
    res.check("sep: psi(std A1) = 1", separability_index(standard_character(a1)).psi == 1);
    res.check("sep: psi(adj A1) = 2", separability_index(adjoint_character(a1)).psi == 2);
    res.check("sep: psi(std A2) = 2", separability_index(standard_character(a2)).psi == 2);
    PrimeBound bar = psi_bar(standard_character(a2));
    res.check("sep: psi_bar(std A2) = 2", !bar.unbounded && bar.value == 2);

    bool invariance = true;
    for (int t = 0; t < 20; ++t) {
        std::size_t r = 2 + rng.index(2), c = r + rng.index(3);
        CharacterMatrix m;
        m.rows = r;
        for (std::size_t j = 0; j < c; ++j) {
            std::vector<Int> col;
            for (std::size_t i = 0; i < r; ++i) col.push_back(Int(static_cast<long>(rng.index(9)) - 4));
            m.cols.push_back(col);
        }
        Int g = g_of(m);
        CharacterMatrix flipped = m;
        std::swap(flipped.cols[0], flipped.cols[c - 1]);
        for (auto& x : flipped.cols[0]) x = -x;
        if (g_of(flipped) != g) invariance = false;
    }
    res.check("sep: g is invariant under column permutation and sign flips", invariance);
}

}  // namespace detail

inline SelfTestResult run_selftest() {
    SelfTestResult res;
    detail::TestRng rng(0x5eed5eedULL);
    detail::selftest_root_systems(res, rng);
    detail::selftest_higgs(res, rng);
    detail::selftest_characters(res, rng);
    detail::selftest_instability(res, rng);
    detail::selftest_separability(res, rng);
    return res;
}

}  // namespace kempf
