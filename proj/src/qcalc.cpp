#include "qcalc.hpp"

namespace tki {

BracketFactor pure_factor(int p) {
    if (p == 0) throw ZeroDenominatorFactor("[0] is the zero polynomial");
    return {BracketFactor::Kind::PureQ, p, 0};
}

BracketFactor mixed_factor(int p, int y) {
    if (y == 0) return pure_factor(p);
    return {BracketFactor::Kind::Mixed, p, y};
}

void bag_insert(FactorBag& bag, const BracketFactor& f, int multiplicity) {
    if (multiplicity <= 0) throw InvalidArgument("factor multiplicity must be positive");
    if (f.kind == BracketFactor::Kind::PureQ && f.p == 0)
        throw ZeroDenominatorFactor("[0] may not appear in a denominator");
    bag[f] += multiplicity;
}

FactorBag bag_union_max(const FactorBag& x, const FactorBag& y) {
    FactorBag r = x;
    for (const auto& [f, m] : y) {
        auto [it, inserted] = r.try_emplace(f, m);
        if (!inserted && it->second < m) it->second = m;
    }
    return r;
}

FactorBag bag_merge_add(const FactorBag& x, const FactorBag& y) {
    FactorBag r = x;
    for (const auto& [f, m] : y) r[f] += m;
    return r;
}

FactorBag bag_subtract(const FactorBag& x, const FactorBag& y) {
    FactorBag r = x;
    for (const auto& [f, m] : y) {
        auto it = r.find(f);
        if (it == r.end() || it->second < m)
            throw InvalidArgument("bag_subtract: subtrahend not contained");
        it->second -= m;
        if (it->second == 0) r.erase(it);
    }
    return r;
}

LaurentPoly2 bracket(int p, int y) {
    return LaurentPoly2::mono(1, y, p) - LaurentPoly2::mono(1, -y, -p);
}

LaurentPoly2 expand(const BracketFactor& f) {
    return f.kind == BracketFactor::Kind::PureQ ? bracket(f.p, 0) : bracket(f.p, f.y);
}

LaurentPoly2 expand(const FactorBag& bag) {
    LaurentPoly2 r{Int(1)};
    for (const auto& [f, m] : bag) {
        LaurentPoly2 e = expand(f);
        for (int i = 0; i < m; ++i) r *= e;
    }
    return r;
}

FactorBag qfactorial(int p) {
    if (p < 0) throw NegativeArgument("q-factorial of negative integer");
    FactorBag bag;
    for (int j = 1; j <= p; ++j) bag_insert(bag, pure_factor(j));
    return bag;
}

LaurentPoly2 bracket_product(int gamma, int beta, int shift) {
    LaurentPoly2 r{Int(1)};
    for (int j = -gamma; j <= beta; ++j) r *= bracket(j + shift, 1);
    return r;
}

Fraction fraction_sum(const std::vector<Fraction>& terms) {
    FactorBag common;
    for (const auto& t : terms) {
        for (const auto& [f, m] : t.den)
            if (f.kind == BracketFactor::Kind::PureQ && f.p == 0)
                throw ZeroDenominatorFactor("[0] in a denominator");
        common = bag_union_max(common, t.den);
    }
    LaurentPoly2 num;
    for (const auto& t : terms) num += t.num * expand(bag_subtract(common, t.den));
    return {std::move(num), std::move(common)};
}

}  // namespace tki
