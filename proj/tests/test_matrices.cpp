// Generator matrices, block products, characteristic polynomials, and exact
// eigenpair verification.
#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>

#include <random>

#include "agol/cfrac.hpp"
#include "agol/errors.hpp"
#include "agol/matrices.hpp"
#include "agol/words.hpp"

using namespace agol;

namespace {

Mat3 from_rows(std::initializer_list<long> v) {
    Mat3 r;
    auto it = v.begin();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r.m[i][j] = *it++;
    }
    return r;
}

QuadExt q(long a, long b, long c, long d) {
    return QuadExt(mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d));
}

ParamWord random_admissible(std::mt19937& rng, std::size_t max_n, long max_entry) {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::uniform_int_distribution<long> pd(0, max_entry);
    std::uniform_int_distribution<long> qd(1, max_entry);
    while (true) {
        ParamWord w;
        std::size_t n = nd(rng);
        for (std::size_t i = 0; i < n; ++i) w.blocks.push_back({pd(rng), pd(rng), qd(rng)});
        if (is_valid(w)) return w;
    }
}

}  // namespace

TEST_CASE("generators") {
    CHECK(generator(1) == from_rows({1, 1, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(generator(2) == from_rows({1, 0, 0, 1, 1, 1, 0, 0, 1}));
    CHECK(generator(3) == from_rows({1, 0, 0, 0, 1, 0, 0, 1, 1}));
    CHECK_THROWS_AS(generator(0), BadIndex);
    CHECK_THROWS_AS(generator(4), BadIndex);
    for (int i = 1; i <= 3; ++i) {
        CHECK(generator(i).det() == 1);
        CHECK(generator_power(i, 0) == Mat3::identity());
        CHECK(generator_power(i, 1) == generator(i));
        CHECK(generator_power(i, 5) ==
              generator(i) * generator(i) * generator(i) * generator(i) * generator(i));
    }
}

TEST_CASE("block matrix equals generator product") {
    CHECK(block_matrix(1, 0, 1) == from_rows({2, 1, 1, 1, 1, 1, 0, 0, 1}));
    CHECK(block_matrix(0, 1, 1) == from_rows({1, 0, 0, 1, 1, 1, 1, 1, 2}));
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> e(0, 6);
    for (int i = 0; i < 200; ++i) {
        long p = e(rng), pp = e(rng), qq = 1 + e(rng);
        CHECK(block_matrix(p, pp, qq) ==
              generator_power(1, p) * generator_power(3, pp) * generator_power(2, qq));
    }
}

TEST_CASE("pinned word matrix and characteristic polynomial") {
    Mat3 m = word_matrix(ParamWord::parse("1,0,1;0,1,1"));
    CHECK(m == from_rows({4, 2, 3, 3, 2, 3, 1, 1, 2}));
    CHECK(m.det() == 1);
    CharPoly cp = char_poly(m);
    CHECK(cp.c2 == -8);
    CHECK(cp.c1 == 8);
    CHECK(cp.c0 == -1);
    // (t - 1)(t^2 - 7t + 1): 1 is always an eigenvalue of these products.
    CHECK(cp.eval(QuadExt(1)).is_zero());
    CHECK(cp.eval(q(7, 3, 2, 5)).is_zero());
    CHECK(cp.eval(q(7, -3, 2, 5)).is_zero());
}

TEST_CASE("word matrices always fix the vector (1, 0, -1) direction") {
    // Each generator fixes (1, 0, -1), so every word matrix does: eigenvalue 1.
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        ParamWord w = random_admissible(rng, 4, 3);
        Mat3 m = word_matrix(w);
        CHECK(m.det() == 1);
        CHECK(m.m[0][0] - m.m[0][2] == 1);
        CHECK(m.m[1][0] - m.m[1][2] == 0);
        CHECK(m.m[2][0] - m.m[2][2] == -1);
        CHECK(char_poly(m).eval(QuadExt(1)).is_zero());
    }
}

TEST_CASE("pinned eigenpairs verify") {
    ParamWord w = ParamWord::parse("1,0,1;0,1,1");
    Mat3 m = word_matrix(w);
    QuadVec3 v = normalized_eigenvector(w);
    CHECK(verify_eigenpair(m, q(7, 3, 2, 5), v));
    // The wrong root, a perturbed vector, and a rational lambda must all fail.
    CHECK_FALSE(verify_eigenpair(m, q(7, -3, 2, 5), v));
    CHECK_FALSE(verify_eigenpair(m, QuadExt(7), v));
    QuadVec3 bad = v;
    bad[1] = bad[1] + QuadExt::rational(1, 1000000);
    CHECK_FALSE(verify_eigenpair(m, q(7, 3, 2, 5), bad));
    QuadVec3 negated{v[0], -v[1], v[2]};
    CHECK_FALSE(verify_eigenpair(m, q(7, 3, 2, 5), negated));

    ParamWord w2 = ParamWord::parse("1,1,1");
    CHECK(verify_eigenpair(word_matrix(w2), q(2, 1, 1, 3), normalized_eigenvector(w2)));
    ParamWord w3 = ParamWord::parse("1,2,1");
    CHECK(verify_eigenpair(word_matrix(w3), q(5, 1, 2, 21), normalized_eigenvector(w3)));
}

TEST_CASE("eigenpairs verify on random words") {
    std::mt19937 rng(47);
    for (int i = 0; i < 200; ++i) {
        ParamWord w = random_admissible(rng, 4, 3);
        RectangleData r = rectangle_data(w);
        Mat3 m = word_matrix(w);
        QuadVec3 v{r.s, r.h[0], QuadExt(1) - r.s};
        CHECK(verify_eigenpair(m, r.lambda, v));
    }
}

TEST_CASE("first versus third coordinate after one block") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> e(0, 5);
    std::uniform_int_distribution<long> num(1, 40);
    for (int i = 0; i < 500; ++i) {
        long p = e(rng), pp = e(rng), qq = 1 + e(rng);
        // Positive test vector with equal first and third coordinates.
        QuadExt x1 = QuadExt::rational(num(rng), 7);
        QuadExt x2 = QuadExt::rational(num(rng), 7);
        QuadVec3 v{x1, x2, x1};
        int want = (p > pp) - (p < pp);
        CHECK(compare_13(block_matrix(p, pp, qq), v) == want);
    }
}
