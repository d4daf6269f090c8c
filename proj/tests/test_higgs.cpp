#include "kempf/higgs.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace kempf;

namespace {

Mat m2(long a, long b, long c, long d) { return {{Rat(a), Rat(b)}, {Rat(c), Rat(d)}}; }

Mat random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    Mat m = mat_zero(n, n);
    for (auto& row : m)
        for (auto& x : row) x = Rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("integrability") {
    CHECK(check_integrability(HiggsStructure(2, 1, {m2(0, 1, 1, 0)})));  // one component is always integrable
    CHECK(check_integrability(HiggsStructure(2, 2, {m2(1, 0, 0, 2), m2(3, 0, 0, 4)})));
    CHECK_FALSE(check_integrability(HiggsStructure(2, 2, {m2(0, 1, 0, 0), m2(0, 0, 1, 0)})));
    // the failing commutator is exactly diag(1, -1)
    CHECK(commutator(m2(0, 1, 0, 0), m2(0, 0, 1, 0)) == m2(1, 0, 0, -1));
}

TEST_CASE("tensor structure") {
    CHECK(tensor_higgs(HiggsStructure::zero(2, 1), HiggsStructure::zero(3, 1)) == HiggsStructure::zero(6, 1));

    // rank-1 pair tensored with its dual is the trivial structure
    HiggsStructure line(1, 1, {Mat{{Rat(5, 3)}}});
    CHECK(tensor_higgs(line, dual_higgs(line)) == HiggsStructure::zero(1, 1));

    HiggsStructure h1(2, 1, {m2(1, 0, 0, 2)});
    HiggsStructure h2(1, 1, {Mat{{Rat(3)}}});
    CHECK(tensor_higgs(h1, h2).theta[0] == m2(4, 0, 0, 5));

    CHECK_THROWS_AS(tensor_higgs(HiggsStructure::zero(2, 1), HiggsStructure::zero(2, 2)), std::invalid_argument);
}

TEST_CASE("tensor preserves integrability") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        Mat base1 = random_matrix(rng, 2), base2 = random_matrix(rng, 3);
        // polynomials in one matrix commute pairwise
        HiggsStructure h1(2, 2, {base1, mat_mul(base1, base1)});
        HiggsStructure h2(3, 2, {mat_add(base2, mat_identity(3)), mat_mul(base2, base2)});
        REQUIRE(check_integrability(h1));
        REQUIRE(check_integrability(h2));
        CHECK(check_integrability(tensor_higgs(h1, h2)));
    }
}

TEST_CASE("dual structure") {
    CHECK(dual_higgs(HiggsStructure::zero(3, 2)) == HiggsStructure::zero(3, 2));
    CHECK(dual_higgs(HiggsStructure(1, 1, {Mat{{Rat(7)}}})).theta[0] == Mat{{Rat(-7)}});
    CHECK(dual_higgs(HiggsStructure(2, 1, {m2(0, 1, 0, 0)})).theta[0] == m2(0, 0, -1, 0));

    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 10; ++trial) {
        HiggsStructure h(3, 2, {random_matrix(rng, 3), random_matrix(rng, 3)});
        CHECK(dual_higgs(dual_higgs(h)) == h);
        CHECK(check_integrability(dual_higgs(h)) == check_integrability(h));
    }
}

TEST_CASE("sections") {
    auto full = higgs_sections(HiggsStructure::zero(3, 2));
    REQUIRE(full.size() == 3);
    CHECK(full[0] == HiggsVector{Rat(1), Rat(0), Rat(0)});

    auto diag = higgs_sections(HiggsStructure(2, 1, {m2(1, 0, 0, 0)}));
    REQUIRE(diag.size() == 1);
    CHECK(diag[0] == HiggsVector{Rat(0), Rat(1)});

    // columns convention: theta * v = 0. These two components have trivial
    // common kernel...
    auto none = higgs_sections(HiggsStructure(2, 2, {m2(0, 1, 0, 0), m2(1, 0, 0, 0)}));
    CHECK(none.empty());
    // ...while transposing the first component moves both kernels to (0,1).
    auto common = higgs_sections(HiggsStructure(2, 2, {m2(0, 0, 1, 0), m2(1, 0, 0, 0)}));
    REQUIRE(common.size() == 1);
    CHECK(common[0] == HiggsVector{Rat(0), Rat(1)});
}

TEST_CASE("sections dimension formula") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + trial % 4, u = trial % 3;
        std::vector<Mat> comps;
        for (std::size_t a = 0; a < u; ++a) comps.push_back(random_matrix(rng, n));
        HiggsStructure h(n, u, comps);
        Mat stacked;
        for (const auto& comp : comps)
            for (const auto& row : comp) stacked.push_back(row);
        std::size_t r = stacked.empty() ? 0 : rank(stacked);
        CHECK(higgs_sections(h).size() + r == n);
        for (const auto& v : higgs_sections(h))
            for (std::size_t a = 0; a < u; ++a) CHECK(mat_vec(comps[a], v) == Vec(n, Rat(0)));
    }
}

TEST_CASE("lambda action") {
    HiggsStructure h(2, 1, {m2(1, 0, 0, 2)});
    CHECK(lambda_act(h, {Rat(0)}, {Rat(3), Rat(4)}) == HiggsVector{Rat(0), Rat(0)});
    CHECK(lambda_act(h, {Rat(1)}, {Rat(1), Rat(1)}) == HiggsVector{Rat(1), Rat(2)});
    CHECK_THROWS_AS(lambda_act(h, {Rat(1), Rat(1)}, {Rat(1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("Leibniz identity on tensor structures") {
    std::mt19937_64 rng(104);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    auto random_vec = [&](std::size_t n) {
        Vec v(n);
        for (auto& x : v) x = Rat(num(rng), den(rng));
        return v;
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n1 = 1 + trial % 3, n2 = 1 + (trial / 3) % 3, u = 1 + trial % 2;
        std::vector<Mat> c1, c2;
        for (std::size_t a = 0; a < u; ++a) {
            c1.push_back(random_matrix(rng, n1));
            c2.push_back(random_matrix(rng, n2));
        }
        HiggsStructure h1(n1, u, c1), h2(n2, u, c2);
        HiggsStructure prod = tensor_higgs(h1, h2);
        Vec alpha = random_vec(u);
        HiggsVector v = random_vec(n1), w = random_vec(n2);

        HiggsVector lhs = lambda_act(prod, alpha, tensor_vector(v, w));
        HiggsVector left = tensor_vector(lambda_act(h1, alpha, v), w);
        HiggsVector right = tensor_vector(v, lambda_act(h2, alpha, w));
        REQUIRE(lhs.size() == left.size());
        for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == left[i] + right[i]);
    }
}
