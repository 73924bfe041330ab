#pragma once

#include <complex>
#include <string>
#include <vector>

#include "errors.hpp"

namespace tki {

enum class Series { B, D };

// Weight in the Dynkin basis (components against the fundamental weights).
struct WeightVec {
    std::vector<long long> x;

    WeightVec() = default;
    explicit WeightVec(std::vector<long long> v) : x(std::move(v)) {}
    static WeightVec zero(int rank) { return WeightVec(std::vector<long long>(rank, 0)); }

    int rank() const { return static_cast<int>(x.size()); }
    bool operator==(const WeightVec&) const = default;

    WeightVec operator+(const WeightVec& o) const;
    WeightVec operator-(const WeightVec& o) const;
    WeightVec operator*(long long c) const;
    WeightVec operator-() const { return *this * -1; }
};

// Exact rational with small denominator (weight-space inner products have
// denominator dividing 4).
struct Rat {
    long long num = 0;
    long long den = 1;

    static Rat of(long long n, long long d);
    bool operator==(const Rat&) const = default;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Positive root as integer coefficients against the simple roots.
struct PositiveRoot {
    std::vector<int> coeff;
};

// Exact root-system and weight data for B_l or D_l, the algebras of SO(N).
// Everything integral or quarter-integral; no floating point in the tables.
struct AlgebraData {
    Series series;
    int rank = 0;
    int N = 0;  // 2l+1 (B) or 2l (D)

    std::vector<std::vector<int>> cartan;   // g_ij
    std::vector<std::vector<int>> metric4;  // 4 * G^ij (weight-space metric)
    std::vector<int> simple_len2;           // alpha_(i) . alpha_(i), 2 or 1

    std::vector<PositiveRoot> positive_roots;
    WeightVec rho;                        // all components 1
    std::vector<WeightVec> fund_weights;  // weights of the defining (vector) rep
    std::vector<Rat> fund_norms;          // mu_i . mu_i
    std::vector<Rat> fund_rho_dots;       // rho . mu_i

    int dual_coxeter = 0;  // N - 2
    int psi_sq = 2;        // long roots normalized to length^2 = 2

    PositiveRoot highest_root;
    WeightVec highest_root_dynkin;  // theta in the Dynkin basis (theta^v = theta)
};

// Builds and verifies all tables.  Throws RankTooSmall below B_2 / D_3.
AlgebraData build_algebra(Series series, int rank);

// 4 * (x . y), exact.
long long inner4(const AlgebraData& dat, const WeightVec& x, const WeightVec& y);
Rat inner(const AlgebraData& dat, const WeightVec& x, const WeightVec& y);

// 2 * (alpha . x) for a root given by simple-root coefficients, exact.
long long root_dot2(const AlgebraData& dat, const PositiveRoot& alpha, const WeightVec& x);

// Simple Weyl reflection sigma_i, i in 1..rank.
WeightVec weyl_reflect(const AlgebraData& dat, int i, const WeightVec& x);

// Full Weyl group as matrices on Dynkin coordinates with signatures.
// Throws RankTooLargeForEnumeration above rank 4.
struct WeylElement {
    std::vector<std::vector<long long>> mat;
    int sign;
};
std::vector<WeylElement> enumerate_weyl_group(const AlgebraData& dat);
WeightVec apply(const WeylElement& w, const WeightVec& x);

// Character ch_Lambda evaluated at the principal power t0^(.), as the product
// over positive roots.  Throws SingularDenominator when a root pairing hits a
// zero of t0^{p/2} - t0^{-p/2}.
std::complex<double> character_product_eval(const AlgebraData& dat, const WeightVec& Lambda,
                                            std::complex<double> t0);

// Same character through the Weyl-sum formula (rank <= 4).
std::complex<double> character_weylsum_eval(const AlgebraData& dat, const WeightVec& Lambda,
                                            std::complex<double> t0);

// Sum over the defining-representation weights of t0^{-mu.rho}; equals the
// fundamental character.
std::complex<double> fundamental_weight_sum_eval(const AlgebraData& dat,
                                                 std::complex<double> t0);

// t0^(num4/4) by principal exponent arithmetic.
std::complex<double> principal_power4(std::complex<double> t0, long long num4);

}  // namespace tki
