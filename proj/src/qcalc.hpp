#pragma once

#include <compare>
#include <map>
#include <vector>

#include "laurent.hpp"

namespace tki {

// One denominator factor in factored form:
//   pure-q:  [p]   = q^p a^0 - q^-p a^0      (p >= 1 in denominators)
//   mixed:   [p;y] = q^p a^y - q^-p a^-y     (y >= 1; p any integer)
struct BracketFactor {
    enum class Kind { PureQ, Mixed };
    Kind kind;
    int p;
    int y;  // 0 for pure-q

    auto operator<=>(const BracketFactor&) const = default;
};

BracketFactor pure_factor(int p);      // throws ZeroDenominatorFactor at p == 0
BracketFactor mixed_factor(int p, int y);

// Multiset of factors, factor -> multiplicity >= 1.
using FactorBag = std::map<BracketFactor, int>;

void bag_insert(FactorBag& bag, const BracketFactor& f, int multiplicity = 1);
FactorBag bag_union_max(const FactorBag& x, const FactorBag& y);
FactorBag bag_merge_add(const FactorBag& x, const FactorBag& y);
// x minus y assuming y <= x pointwise.
FactorBag bag_subtract(const FactorBag& x, const FactorBag& y);

// q^p a^y - q^-p a^-y as a polynomial; y = 0 gives [p], and [0] = 0.
LaurentPoly2 bracket(int p, int y);

LaurentPoly2 expand(const BracketFactor& f);
LaurentPoly2 expand(const FactorBag& bag);

// {[1], ..., [p]}; empty bag (value 1) for p = 0.  Throws NegativeArgument.
FactorBag qfactorial(int p);

// prod_{j=-gamma}^{beta} (q^{j+shift} a - q^{-(j+shift)} a^-1).
LaurentPoly2 bracket_product(int gamma, int beta, int shift);

// Numerator over a factored denominator; the intermediate carrier for the
// closed-form sums before the final exact division.
struct Fraction {
    LaurentPoly2 num;
    FactorBag den;
};

// Common denominator built as the multiset union maximum; each numerator is
// multiplied by the expansion of its complementary factors.
Fraction fraction_sum(const std::vector<Fraction>& terms);

}  // namespace tki
