#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcalc.hpp"

using namespace tki;

namespace {
LaurentPoly2 A(int e = 1) { return LaurentPoly2::var_a(e); }
LaurentPoly2 Q(int e = 1) { return LaurentPoly2::var_q(e); }
}  // namespace

TEST_CASE("brackets") {
    CHECK(bracket(0, 0) == LaurentPoly2());
    CHECK(bracket(2, 0) == Q(2) - Q(-2));
    CHECK(bracket(0, 1) == A(1) - A(-1));
    CHECK(bracket(3, 1) == LaurentPoly2::mono(1, 1, 3) - LaurentPoly2::mono(1, -1, -3));

    for (int p = -5; p <= 5; ++p) {
        CHECK(bracket(p, 0) == -bracket(-p, 0));
        CHECK(bracket(p, 0).subst_q_inv() == -bracket(p, 0));
        // [p;1] under q -> q^-1 becomes q^-p a - q^p a^-1
        CHECK(bracket(p, 1).subst_q_inv() ==
              LaurentPoly2::mono(1, 1, -p) - LaurentPoly2::mono(1, -1, p));
    }
}

TEST_CASE("q-factorials") {
    CHECK(qfactorial(0).empty());
    CHECK(expand(qfactorial(0)) == LaurentPoly2(Int(1)));
    FactorBag one = qfactorial(1);
    REQUIRE(one.size() == 1);
    CHECK(one.begin()->first == pure_factor(1));
    CHECK(expand(qfactorial(3)) ==
          (Q(1) - Q(-1)) * (Q(2) - Q(-2)) * (Q(3) - Q(-3)));
    CHECK_THROWS_AS(qfactorial(-1), NegativeArgument);
}

TEST_CASE("bracket products") {
    CHECK(bracket_product(0, 0, 0) == A(1) - A(-1));
    CHECK(bracket_product(0, 1, 0) ==
          (A(1) - A(-1)) * (Q(1) * A(1) - Q(-1) * A(-1)));
    // j in {-1, 0} with shift -1: factors at exponents -2 and -1
    CHECK(bracket_product(1, 0, -1) ==
          (Q(-2) * A(1) - Q(2) * A(-1)) * (Q(-1) * A(1) - Q(1) * A(-1)));
}

TEST_CASE("denominator factor bags") {
    CHECK_THROWS_AS(pure_factor(0), ZeroDenominatorFactor);
    FactorBag bag;
    CHECK_THROWS_AS(bag_insert(bag, BracketFactor{BracketFactor::Kind::PureQ, 0, 0}),
                    ZeroDenominatorFactor);
    bag_insert(bag, pure_factor(2));
    bag_insert(bag, pure_factor(2));
    CHECK(bag.at(pure_factor(2)) == 2);
    CHECK(mixed_factor(3, 0) == pure_factor(3));

    FactorBag x = qfactorial(3), y = qfactorial(2);
    FactorBag mx = bag_union_max(x, y);
    CHECK(mx == qfactorial(3));
    FactorBag add = bag_merge_add(x, y);
    CHECK(add.at(pure_factor(1)) == 2);
    CHECK(add.at(pure_factor(3)) == 1);
    CHECK(bag_subtract(add, y) == x);
}

TEST_CASE("fraction_sum basics") {
    LaurentPoly2 x = A(2), y = Q(1) + Q(-1);
    FactorBag d2;
    bag_insert(d2, pure_factor(2));

    Fraction s = fraction_sum({{x, d2}, {y, d2}});
    CHECK(s.num == x + y);
    CHECK(s.den == d2);

    FactorBag d1;
    bag_insert(d1, pure_factor(1));
    Fraction t = fraction_sum({{LaurentPoly2(Int(1)), d1}, {LaurentPoly2(Int(1)), d2}});
    CHECK(t.num == bracket(2, 0) + bracket(1, 0));
    CHECK(t.den == bag_merge_add(d1, d2));

    Fraction empty = fraction_sum({});
    CHECK(empty.num.is_zero());
    CHECK(empty.den.empty());
}

TEST_CASE("fraction_sum against brute-force rational arithmetic") {
    std::mt19937 rng(7071);
    std::uniform_int_distribution<int> nterm(1, 4), pick(0, 5), coeff(-5, 5), exps(-3, 3);
    const std::vector<BracketFactor> pool{pure_factor(1),     pure_factor(2),
                                          pure_factor(3),     mixed_factor(0, 1),
                                          mixed_factor(1, 1), mixed_factor(-2, 1)};
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Fraction> terms;
        int n = nterm(rng);
        for (int i = 0; i < n; ++i) {
            LaurentPoly2 num;
            for (int t = 0; t < 3; ++t) {
                int c = coeff(rng);
                if (c != 0) num += LaurentPoly2::mono(c, exps(rng), exps(rng));
            }
            FactorBag den;
            int nden = pick(rng) % 3;
            for (int d = 0; d < nden; ++d) bag_insert(den, pool[pick(rng)]);
            terms.push_back({num, den});
        }
        Fraction s = fraction_sum(terms);

        // Oracle: full cross multiplication over the expanded product of all
        // denominators, then compare p/q == r/t via p t == r q.
        LaurentPoly2 full_den{Int(1)};
        for (const auto& t : terms) full_den *= expand(t.den);
        LaurentPoly2 full_num;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            LaurentPoly2 part = terms[i].num;
            for (std::size_t j = 0; j < terms.size(); ++j)
                if (j != i) part *= expand(terms[j].den);
            full_num += part;
        }
        CHECK(s.num * full_den == full_num * expand(s.den));
    }
}
