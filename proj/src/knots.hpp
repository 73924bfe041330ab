#pragma once

#include <optional>
#include <string>

#include "qcalc.hpp"

namespace tki {

// Coprime pair labelling a torus knot.  Canonical form has n >= 1; {n,m} and
// {-n,-m} are the same knot.  n = 1 (or the canonicalized {0,±1}) is the
// unknot.
struct TorusKnot {
    int n = 1;
    int m = 0;
    bool operator==(const TorusKnot&) const = default;
};

TorusKnot canonicalize(long long n, long long m);
bool is_unknot(const TorusKnot& k);

enum class InvariantKind { Homfly, Kauffman, KauffmanNeg, Alexander, Qtilde };

const char* kind_name(InvariantKind k);
InvariantKind parse_kind(const std::string& name);  // throws InvalidArgument

// Dubrovnik Kauffman polynomial Y_{n,m}(a, z) with z = q - q^-1.  Assembled
// as a sum of fractions over a factored denominator; the final exact division
// certifies the integer-coefficient Laurent result.
LaurentPoly2 kauffman(const TorusKnot& k);

// Y_{n,m}(a, -z), computed by the substitution q -> q^-1.
LaurentPoly2 kauffman_negz(const TorusKnot& k);

// Y_{n,m}(a, -z) assembled directly from its own closed form; must agree
// with kauffman_negz exactly (cross-checked in tests).
LaurentPoly2 kauffman_negz_direct(const TorusKnot& k);

// HOMFLY polynomial P_{n,m}(a, z).
LaurentPoly2 homfly(const TorusKnot& k);

// P = (Y+ + Y-)/2 + z (Y+ - Y-) / (2 (a - a^-1)); both inner divisions must
// be exact or the relation fails for the inputs.
LaurentPoly2 homfly_from_kauffman(const LaurentPoly2& ypos, const LaurentPoly2& yneg);

// Alexander-Conway polynomial: a -> 1 limit of HOMFLY, in z.
NaturalPoly alexander(const TorusKnot& k);

// Alexander-Conway via 1 + (z/4) d/da (Y(a,z) - Y(a,-z)) at a = 1.
NaturalPoly alexander_from_kauffman_derivative(const TorusKnot& k);

// Y at a = 1 (expected to be the constant 1 for torus knots).
LaurentPoly2 qtilde(const TorusKnot& k);

enum class Group { SO, SU };

// a -> q^{N-1} (SO) or a -> q^N (SU); result is univariate in q.
LaurentPoly2 specialize(const LaurentPoly2& f, Group g, int N);

struct InvariantResult {
    TorusKnot knot;
    InvariantKind kind;
    LaurentPoly2 aq;
    std::optional<NaturalPoly> az;
};

InvariantResult compute_invariant(const TorusKnot& k, InvariantKind kind);
std::string to_json(const InvariantResult& r);

}  // namespace tki
