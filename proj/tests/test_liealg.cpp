#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "liealg.hpp"

using namespace tki;
using cd = std::complex<double>;

namespace {

WeightVec wv(std::vector<long long> v) { return WeightVec(std::move(v)); }

cd root_of_unity(long long K) { return std::polar(1.0, 2.0 * std::numbers::pi / K); }

std::mt19937 rng(987123);

WeightVec random_weight(int rank, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<long long> v(rank);
    for (auto& c : v) c = d(rng);
    return WeightVec(std::move(v));
}

}  // namespace

TEST_CASE("cartan matrices") {
    AlgebraData b2 = build_algebra(Series::B, 2);
    CHECK(b2.cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(b2.N == 5);
    CHECK(b2.dual_coxeter == 3);

    AlgebraData b4 = build_algebra(Series::B, 4);
    CHECK(b4.cartan == std::vector<std::vector<int>>{
                           {2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -2, 2}});

    AlgebraData d4 = build_algebra(Series::D, 4);
    CHECK(d4.cartan == std::vector<std::vector<int>>{
                           {2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
    CHECK(d4.N == 8);

    CHECK_THROWS_AS(build_algebra(Series::B, 1), RankTooSmall);
    CHECK_THROWS_AS(build_algebra(Series::D, 2), RankTooSmall);
}

TEST_CASE("positive roots") {
    CHECK(build_algebra(Series::B, 2).positive_roots.size() == 4);
    CHECK(build_algebra(Series::B, 5).positive_roots.size() == 25);
    CHECK(build_algebra(Series::D, 4).positive_roots.size() == 12);
    CHECK(build_algebra(Series::D, 3).positive_roots.size() == 6);

    for (Series s : {Series::B, Series::D}) {
        AlgebraData dat = build_algebra(s, 4);
        for (const auto& r : dat.positive_roots) CHECK(root_dot2(dat, r, dat.rho) > 0);
        // highest root pairs maximally with rho
        long long best = root_dot2(dat, dat.highest_root, dat.rho);
        for (const auto& r : dat.positive_roots) CHECK(root_dot2(dat, r, dat.rho) <= best);
    }
}

TEST_CASE("weight-space metric and inner products") {
    AlgebraData b2 = build_algebra(Series::B, 2);
    WeightVec l2 = wv({0, 1});
    CHECK(inner(b2, l2, l2) == Rat::of(1, 2));  // the l/2 corner at l = 2
    CHECK(inner(b2, WeightVec::zero(2), l2) == Rat::of(0, 1));

    // brute-force rho G rho for B_3 against the printed metric
    AlgebraData b3 = build_algebra(Series::B, 3);
    // G(B_3) = 1/2 * [[2,2,1],[2,4,2],[1,2,3/2]]
    double g[3][3] = {{1.0, 1.0, 0.5}, {1.0, 2.0, 1.0}, {0.5, 1.0, 0.75}};
    double brute = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) brute += g[i][j];
    CHECK(inner(b3, b3.rho, b3.rho).value() == doctest::Approx(brute).epsilon(1e-12));

    CHECK_THROWS_AS(inner(b3, b3.rho, WeightVec::zero(2)), RankMismatch);
}

TEST_CASE("defining representation weights") {
    AlgebraData b3 = build_algebra(Series::B, 3);
    REQUIRE(b3.fund_weights.size() == 7);
    std::vector<Rat> expect{Rat::of(5, 2),  Rat::of(3, 2),  Rat::of(1, 2), Rat::of(0, 1),
                            Rat::of(-1, 2), Rat::of(-3, 2), Rat::of(-5, 2)};
    CHECK(b3.fund_rho_dots == expect);

    int zeros = 0;
    for (const auto& n : b3.fund_norms)
        if (n == Rat::of(0, 1)) ++zeros;
    CHECK(zeros == 1);

    AlgebraData d4 = build_algebra(Series::D, 4);
    REQUIRE(d4.fund_weights.size() == 8);
    for (const auto& n : d4.fund_norms) CHECK(n == Rat::of(1, 1));
    std::vector<Rat> dexp{Rat::of(3, 1), Rat::of(2, 1),  Rat::of(1, 1),  Rat::of(0, 1),
                          Rat::of(0, 1), Rat::of(-1, 1), Rat::of(-2, 1), Rat::of(-3, 1)};
    CHECK(d4.fund_rho_dots == dexp);
}

TEST_CASE("weyl reflections") {
    AlgebraData b4 = build_algebra(Series::B, 4);
    // sigma_l flips the last component and feeds it into x_{l-1}
    WeightVec x = wv({3, -2, 5, 7});
    WeightVec sx = weyl_reflect(b4, 4, x);
    CHECK(sx == wv({3, -2, 12, -7}));
    // sigma_{l-1} couples x_l + 2 x_{l-1}
    WeightVec sy = weyl_reflect(b4, 3, x);
    CHECK(sy == wv({3, 3, -5, 17}));

    AlgebraData d4 = build_algebra(Series::D, 4);
    CHECK(weyl_reflect(d4, 4, wv({0, 0, 0, 1})) == wv({0, 1, 0, -1}));

    CHECK_THROWS_AS(weyl_reflect(b4, 5, x), IndexOutOfRange);
    CHECK_THROWS_AS(weyl_reflect(b4, 0, x), IndexOutOfRange);

    for (Series s : {Series::B, Series::D}) {
        AlgebraData dat = build_algebra(s, 4);
        for (int iter = 0; iter < 50; ++iter) {
            WeightVec w = random_weight(4);
            for (int i = 1; i <= 4; ++i) {
                CHECK(weyl_reflect(dat, i, weyl_reflect(dat, i, w)) == w);
                CHECK(inner4(dat, weyl_reflect(dat, i, w), weyl_reflect(dat, i, w)) ==
                      inner4(dat, w, w));
            }
        }
    }
}

TEST_CASE("weyl group enumeration") {
    CHECK(enumerate_weyl_group(build_algebra(Series::B, 2)).size() == 8);     // 2^2 2!
    CHECK(enumerate_weyl_group(build_algebra(Series::B, 3)).size() == 48);    // 2^3 3!
    CHECK(enumerate_weyl_group(build_algebra(Series::D, 3)).size() == 24);    // 2^2 3!
    CHECK(enumerate_weyl_group(build_algebra(Series::D, 4)).size() == 192);   // 2^3 4!
    CHECK_THROWS_AS(enumerate_weyl_group(build_algebra(Series::B, 5)),
                    RankTooLargeForEnumeration);
}

TEST_CASE("character via products: closed forms") {
    AlgebraData b2 = build_algebra(Series::B, 2);
    cd t0 = root_of_unity(12);
    WeightVec l1 = wv({1, 0});
    cd ch = character_product_eval(b2, l1, t0);
    // 1 + (t^l - t^-l) / (t^1/2 - t^-1/2)
    cd expect = 1.0 + (principal_power4(t0, 8) - principal_power4(t0, -8)) /
                          (principal_power4(t0, 2) - principal_power4(t0, -2));
    CHECK(std::abs(ch - expect) < 1e-12);
    CHECK(ch.real() == doctest::Approx(4.346065).epsilon(1e-6));

    CHECK(std::abs(character_product_eval(b2, WeightVec::zero(2), t0) - cd(1.0)) < 1e-12);
}

TEST_CASE("character formulas agree") {
    // product rule vs Weyl sum vs defining-rep weight sum
    for (auto [series, rank] : {std::pair{Series::B, 2}, {Series::B, 3}, {Series::D, 3},
                                {Series::D, 4}}) {
        AlgebraData dat = build_algebra(series, rank);
        for (long long K : {12, 20, 24}) {
            cd t0 = root_of_unity(K);
            WeightVec l1 = WeightVec::zero(rank);
            l1.x[0] = 1;
            cd a = character_product_eval(dat, l1, t0);
            cd b = character_weylsum_eval(dat, l1, t0);
            cd c = fundamental_weight_sum_eval(dat, t0);
            CHECK(std::abs(a - b) < 1e-10);
            CHECK(std::abs(a - c) < 1e-10);
        }
    }

    // random dominant weights, rank <= 4
    for (auto [series, rank] : {std::pair{Series::B, 2}, {Series::D, 3}}) {
        AlgebraData dat = build_algebra(series, rank);
        cd t0 = root_of_unity(20);
        for (int iter = 0; iter < 20; ++iter) {
            WeightVec lam = random_weight(rank, 0, 2);
            cd a = character_product_eval(dat, lam, t0);
            cd b = character_weylsum_eval(dat, lam, t0);
            CHECK(std::abs(a - b) < 1e-10);
        }
    }

    // B_3 spot value quoted against the cross-oracle
    AlgebraData b3 = build_algebra(Series::B, 3);
    cd t0 = root_of_unity(20);
    WeightVec l1 = wv({1, 0, 0});
    CHECK(std::abs(character_product_eval(b3, l1, t0) -
                   character_weylsum_eval(b3, l1, t0)) < 1e-10);
    CHECK(std::abs(character_product_eval(b3, l1, t0) -
                   fundamental_weight_sum_eval(b3, t0)) < 1e-10);
}

TEST_CASE("weight sum dimensions and singularities") {
    // near t0 = 1 the weight sum approaches the dimension of the rep
    AlgebraData d4 = build_algebra(Series::D, 4);
    cd t0 = root_of_unity(100000);
    CHECK(std::abs(fundamental_weight_sum_eval(d4, t0) - cd(8.0)) < 1e-3);

    AlgebraData b3 = build_algebra(Series::B, 3);
    CHECK(std::abs(fundamental_weight_sum_eval(b3, root_of_unity(100000)) - cd(7.0)) < 1e-3);

    // a root-of-unity zero in a character denominator must be detected
    AlgebraData b2 = build_algebra(Series::B, 2);
    CHECK_THROWS_AS(character_product_eval(b2, wv({1, 0}), root_of_unity(2)),
                    SingularDenominator);
}

TEST_CASE("character precondition") {
    AlgebraData b2 = build_algebra(Series::B, 2);
    CHECK_THROWS_AS(character_product_eval(b2, wv({-1, 0}), root_of_unity(12)),
                    InvalidArgument);
}
