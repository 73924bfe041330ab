#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tki {

using Int = boost::multiprecision::cpp_int;

class NaturalPoly;

// Sparse bivariate Laurent polynomial in the generators a and q with
// arbitrary-precision integer coefficients.  The representation is canonical:
// zero coefficients are never stored and the term map is ordered
// lexicographically by (e_a, e_q), so equal polynomials compare equal.
//
// All operations are exact; no floating point enters until eval().
// Values are immutable in practice (every operation returns a new value),
// which makes them safe to share between threads.
class LaurentPoly2 {
public:
    using Key = std::pair<int, int>;  // (e_a, e_q)
    using TermMap = std::map<Key, Int>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(Int c);
    explicit LaurentPoly2(long long c) : LaurentPoly2(Int(c)) {}

    static LaurentPoly2 mono(Int c, int ea, int eq);
    static LaurentPoly2 var_a(int e = 1) { return mono(1, e, 0); }
    static LaurentPoly2 var_q(int e = 1) { return mono(1, 0, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool depends_on_a() const;
    bool depends_on_q() const;

    // Coefficient of a^ea q^eq (zero if absent).
    Int coeff(int ea, int eq) const;

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 x, const LaurentPoly2& y) { return x += y; }
    friend LaurentPoly2 operator-(LaurentPoly2 x, const LaurentPoly2& y) { return x -= y; }
    friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y);
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }
    LaurentPoly2 scaled(const Int& c) const;

    bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

    // Substitutions.  The exponent maps are exact; see to_natural_z() for the
    // z-variable change.
    LaurentPoly2 subst_q_inv() const;      // q -> q^-1   (z -> -z)
    LaurentPoly2 subst_q_neg() const;      // q -> -q
    LaurentPoly2 subst_q_neg_inv() const;  // q -> -q^-1  (fixes anything in z)
    LaurentPoly2 subst_a_inv() const;      // a -> a^-1
    LaurentPoly2 subst_a_qpow(int e) const;  // a -> q^e
    LaurentPoly2 subst_a_one() const;      // a -> 1

    // Numeric substitution of one variable; requires the polynomial not to
    // depend on the other variable.
    std::complex<double> subst_q_value(std::complex<double> q0) const;
    std::complex<double> subst_a_value(std::complex<double> a0) const;

    // Term-wise d/da.
    LaurentPoly2 derivative_a() const;

    // Horner-style evaluation; coefficients go to floating point last.
    // Throws ZeroBase when a0 or q0 vanishes.
    std::complex<double> eval(std::complex<double> a0, std::complex<double> q0) const;

    int min_exp_a() const;
    int max_exp_a() const;
    int min_exp_q() const;
    int max_exp_q() const;

private:
    TermMap terms_;
    void add_term(int ea, int eq, const Int& c);
    friend LaurentPoly2 exact_div(const LaurentPoly2&, const LaurentPoly2&);
    friend class NaturalPoly;
};

// Exact division: returns h with f = g * h, performed as polynomial division
// in a with Laurent coefficients in q.  Throws NotDivisible when the
// remainder is nonzero, DivisionByZero when g = 0.
LaurentPoly2 exact_div(const LaurentPoly2& f, const LaurentPoly2& g);

// Polynomial in a (Laurent) and z (ordinary, e_z >= 0); z stands for q - q^-1.
class NaturalPoly {
public:
    using Key = std::pair<int, int>;  // (e_a, e_z)
    using TermMap = std::map<Key, Int>;

    NaturalPoly() = default;
    explicit NaturalPoly(Int c);

    static NaturalPoly mono(Int c, int ea, int ez);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool depends_on_a() const;

    NaturalPoly& operator+=(const NaturalPoly& o);
    friend NaturalPoly operator+(NaturalPoly x, const NaturalPoly& y) { return x += y; }
    bool operator==(const NaturalPoly& o) const { return terms_ == o.terms_; }

    // Expand z := q - q^-1; exact round trip with to_natural_z.
    LaurentPoly2 expand() const;

private:
    TermMap terms_;
    void add_term(int ea, int ez, const Int& c);
    friend NaturalPoly to_natural_z(const LaurentPoly2&);
};

// Rewrite f(a, q) as g(a, z) with z = q - q^-1, by greedy peeling of the top
// q-degree coefficient against powers of (q - q^-1).  Throws NotExpressible
// when some q-part is not a polynomial in z.
NaturalPoly to_natural_z(const LaurentPoly2& f);

// --- text and JSON round trip ------------------------------------------------
//
// Text grammar:   poly := ['-'] term (('+'|'-') term)*
//                 term := [int] ['*'] [var ('^' int)?] ['*' var ('^' int)?]
//                 var  := 'a' | 'q' | 'z'
// Canonical output lists terms in ascending lexicographic (e_a, e_q) order,
// matching the JSON term order.

std::string to_text(const LaurentPoly2& f);
std::string to_text(const NaturalPoly& f);
std::string to_json(const LaurentPoly2& f);
std::string to_json(const NaturalPoly& f);

LaurentPoly2 parse_poly_aq(const std::string& text);  // vars a, q
NaturalPoly parse_poly_az(const std::string& text);   // vars a, z

LaurentPoly2 poly_aq_from_json(const std::string& text);
NaturalPoly poly_az_from_json(const std::string& text);

}  // namespace tki
