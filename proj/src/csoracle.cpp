#include "csoracle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <nlohmann/json.hpp>

namespace tki {

CSContext make_cs_context(Series series, int rank, long long K) {
    CSContext ctx;
    ctx.dat = build_algebra(series, rank);
    if (K < ctx.dat.dual_coxeter + 1)
        throw InvalidArgument("shifted level K must be at least g_dual + 1");
    ctx.K = K;
    const double pi = std::numbers::pi;
    ctx.t0 = std::polar(1.0, 2.0 * pi / static_cast<double>(K));
    ctx.q0 = std::polar(1.0, pi / static_cast<double>(K));
    return ctx;
}

CSContext make_cs_context_for_N(int N, long long K) {
    if (N % 2 == 1) return make_cs_context(Series::B, (N - 1) / 2, K);
    return make_cs_context(Series::D, N / 2, K);
}

std::vector<VacuumTerm> knot_operator_vacuum(const CSContext& ctx, long long n, long long m) {
    if (std::gcd(n < 0 ? -n : n, m < 0 ? -m : m) != 1)
        throw NotCoprime("knot operator indices must be coprime");
    const AlgebraData& dat = ctx.dat;
    std::vector<VacuumTerm> out;
    out.reserve(dat.fund_weights.size());
    for (std::size_t i = 0; i < dat.fund_weights.size(); ++i) {
        const WeightVec& mu = dat.fund_weights[i];
        // exponent of t0 as a quarter-integer: -(mu^2) nm/2 - m (mu.rho)
        long long norm4 = dat.fund_norms[i].num * (4 / dat.fund_norms[i].den);
        long long rhod4 = dat.fund_rho_dots[i].num * (4 / dat.fund_rho_dots[i].den);
        long long e4 = -(norm4 * n * m) / 2 - m * rhod4;
        out.push_back({principal_power4(ctx.t0, e4), dat.rho + mu * n});
    }
    return out;
}

ChamberState reduce_to_chamber(const CSContext& ctx, const WeightVec& w) {
    const AlgebraData& dat = ctx.dat;
    if (w.rank() != dat.rank) throw RankMismatch("reduce_to_chamber: rank mismatch");
    ChamberState st;
    st.sign = 1;
    st.weight = w;
    const long long K = ctx.K;
    for (int iter = 0; iter < 100000; ++iter) {
        // wall checks first: any zero Dynkin component, or the affine wall
        for (long long c : st.weight.x)
            if (c == 0) return {0, st.weight, st.reflections};
        long long th2 = root_dot2(dat, dat.highest_root, st.weight);
        if (th2 % 2 != 0) throw Error("theta pairing must be integral");
        long long th = th2 / 2;
        if (th == K) return {0, st.weight, st.reflections};

        int neg = -1;
        for (int i = 0; i < dat.rank; ++i)
            if (st.weight.x[i] < 0) {
                neg = i;
                break;
            }
        if (neg >= 0) {
            st.weight = weyl_reflect(dat, neg + 1, st.weight);
            st.sign = -st.sign;
            ++st.reflections;
            continue;
        }
        if (th > K) {
            // affine reflection about the theta wall at level K, with
            // translation by K theta (theta^v = theta)
            st.weight = st.weight - dat.highest_root_dynkin * (th - K);
            st.sign = -st.sign;
            ++st.reflections;
            continue;
        }
        return st;  // strictly dominant, theta.w <= K-1
    }
    throw NonTermination("chamber reduction did not terminate (bug)");
}

double conformal_weight(const CSContext& ctx, const WeightVec& Lambda) {
    for (long long c : Lambda.x)
        if (c < 0) throw InvalidArgument("conformal weight of a non-dominant label");
    WeightVec p = ctx.dat.rho + Lambda;
    long long num4 = inner4(ctx.dat, p, p) - inner4(ctx.dat, ctx.dat.rho, ctx.dat.rho);
    return static_cast<double>(num4) / (8.0 * static_cast<double>(ctx.K));
}

std::complex<double> t_matrix_phase(const CSContext& ctx, const WeightVec& Lambda) {
    const AlgebraData& dat = ctx.dat;
    // c = 2yk dim(G) / K with y = 1, 2k = K - g_dual; dim SO(N) = N(N-1)/2.
    long long dim = static_cast<long long>(dat.N) * (dat.N - 1) / 2;
    double c = static_cast<double>((ctx.K - dat.dual_coxeter) * dim) / static_cast<double>(ctx.K);
    double h = conformal_weight(ctx, Lambda);
    return std::polar(1.0, 2.0 * std::numbers::pi * (h - c / 24.0));
}

std::complex<double> normalized_invariant(const CSContext& ctx, long long n, long long m) {
    const AlgebraData& dat = ctx.dat;
    std::complex<double> num = 0.0;
    for (const VacuumTerm& t : knot_operator_vacuum(ctx, n, m)) {
        ChamberState st = reduce_to_chamber(ctx, t.weight);
        if (st.sign == 0) continue;
        WeightVec lam = st.weight - dat.rho;
        num += t.coeff * static_cast<double>(st.sign) *
               character_product_eval(dat, lam, ctx.t0);
    }
    WeightVec lam1 = WeightVec::zero(dat.rank);
    lam1.x[0] = 1;
    std::complex<double> den = character_product_eval(dat, lam1, ctx.t0);

    // framing phase e^{2 pi i n m h_{rho+lambda^(1)}}, kept exact in the exponent
    long long h_num4 =
        inner4(dat, dat.rho + lam1, dat.rho + lam1) - inner4(dat, dat.rho, dat.rho);
    double phase = 2.0 * std::numbers::pi * static_cast<double>(n) * static_cast<double>(m) *
                   static_cast<double>(h_num4) / (8.0 * static_cast<double>(ctx.K));
    return std::polar(1.0, phase) * num / den;
}

CompareReport compare_closed_form(const CSContext& ctx, int n, int m, double tol) {
    CompareReport r;
    r.N = ctx.dat.N;
    r.K = ctx.K;
    r.n = n;
    r.m = m;
    r.oracle = normalized_invariant(ctx, n, m);
    TorusKnot k = canonicalize(n, m);
    std::complex<double> a0 = std::pow(ctx.q0, ctx.dat.N - 1);
    r.closed = kauffman(k).eval(a0, ctx.q0);
    r.abs_error = std::abs(r.oracle - r.closed);
    r.pass = r.abs_error <= tol;
    return r;
}

std::string to_json(const CompareReport& r) {
    nlohmann::json j;
    j["N"] = r.N;
    j["K"] = r.K;
    j["knot"] = {r.n, r.m};
    j["oracle"] = {r.oracle.real(), r.oracle.imag()};
    j["closed"] = {r.closed.real(), r.closed.imag()};
    j["abs_error"] = r.abs_error;
    j["pass"] = r.pass;
    return j.dump();
}

}  // namespace tki
