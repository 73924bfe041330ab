#pragma once

#include <complex>
#include <string>
#include <vector>

#include "knots.hpp"
#include "liealg.hpp"

namespace tki {

// Finite-level evaluation context: shifted level K (integral), with the root
// of unity t0 = e^{2 pi i / K} and the fixed branch q0 = e^{i pi / K} so that
// q0^2 = t0.
struct CSContext {
    AlgebraData dat;
    long long K = 0;
    std::complex<double> t0;
    std::complex<double> q0;
};

CSContext make_cs_context(Series series, int rank, long long K);
// N >= 5 odd -> B_{(N-1)/2}; N >= 6 even -> D_{N/2}.
CSContext make_cs_context_for_N(int N, long long K);

// One term of the knot-operator action on the vacuum: a phase coefficient
// t0^{-mu^2 nm/2 - m mu.rho} paired with the weight rho + n mu.
struct VacuumTerm {
    std::complex<double> coeff;
    WeightVec weight;
};

std::vector<VacuumTerm> knot_operator_vacuum(const CSContext& ctx, long long n, long long m);

// Canonical representative in the level-K fundamental chamber.  sign 0 means
// the weight lies on a wall and is represented by the null vector.
struct ChamberState {
    int sign = 0;          // -1, 0, +1
    WeightVec weight;      // strictly dominant when sign != 0
    int reflections = 0;   // number of reflections applied
};

ChamberState reduce_to_chamber(const CSContext& ctx, const WeightVec& w);

// ((rho+Lambda)^2 - rho^2) / (2K), exact rational returned as real.
double conformal_weight(const CSContext& ctx, const WeightVec& Lambda);

// Modular T phase e^{2 pi i (h_p - c/24)} for the primary labelled p = rho + Lambda.
std::complex<double> t_matrix_phase(const CSContext& ctx, const WeightVec& Lambda);

// Normalized torus-knot invariant at finite level: framing phase times the
// reduced knot-operator sum over character ratios, divided by the unknot
// value.  All modular S prefactors cancel in the ratio.
std::complex<double> normalized_invariant(const CSContext& ctx, long long n, long long m);

struct CompareReport {
    int N = 0;
    long long K = 0;
    int n = 0, m = 0;
    std::complex<double> oracle;
    std::complex<double> closed;
    double abs_error = 0.0;
    bool pass = false;
};

// Evaluates the symbolic Kauffman polynomial at a = q0^{N-1}, q = q0 and
// compares against the finite-level value.
CompareReport compare_closed_form(const CSContext& ctx, int n, int m, double tol);

std::string to_json(const CompareReport& r);

}  // namespace tki
