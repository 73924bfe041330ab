#include "liealg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace tki {

WeightVec WeightVec::operator+(const WeightVec& o) const {
    if (x.size() != o.x.size()) throw RankMismatch("weight rank mismatch");
    WeightVec r = *this;
    for (std::size_t i = 0; i < x.size(); ++i) r.x[i] += o.x[i];
    return r;
}

WeightVec WeightVec::operator-(const WeightVec& o) const {
    if (x.size() != o.x.size()) throw RankMismatch("weight rank mismatch");
    WeightVec r = *this;
    for (std::size_t i = 0; i < x.size(); ++i) r.x[i] -= o.x[i];
    return r;
}

WeightVec WeightVec::operator*(long long c) const {
    WeightVec r = *this;
    for (auto& v : r.x) v *= c;
    return r;
}

Rat Rat::of(long long n, long long d) {
    if (d == 0) throw InvalidArgument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

namespace {

void verify(bool cond, const char* what) {
    if (!cond) throw Error(std::string("algebra table verification failed: ") + what);
}

std::vector<int> chain_plus_double_tail(int rank, int lo, int hi, int dbl_from, int dbl_to) {
    std::vector<int> c(rank, 0);
    for (int i = lo; i <= hi; ++i) c[i] = 1;
    for (int i = dbl_from; i <= dbl_to; ++i) c[i] = 2;
    return c;
}

}  // namespace

AlgebraData build_algebra(Series series, int rank) {
    const int l = rank;
    if (series == Series::B && l < 2) throw RankTooSmall("B series needs rank >= 2");
    if (series == Series::D && l < 3) throw RankTooSmall("D series needs rank >= 3");

    AlgebraData dat;
    dat.series = series;
    dat.rank = l;
    dat.N = series == Series::B ? 2 * l + 1 : 2 * l;
    dat.dual_coxeter = dat.N - 2;
    dat.psi_sq = 2;

    // Cartan matrix: A-chain with the series-specific tail.
    dat.cartan.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) dat.cartan[i][i] = 2;
    for (int i = 0; i + 1 < l; ++i) {
        dat.cartan[i][i + 1] = -1;
        dat.cartan[i + 1][i] = -1;
    }
    if (series == Series::B) {
        dat.cartan[l - 1][l - 2] = -2;  // short last root
    } else {
        // D fork: node l attaches to l-2, not l-1.
        dat.cartan[l - 1][l - 2] = 0;
        dat.cartan[l - 2][l - 1] = 0;
        dat.cartan[l - 1][l - 3] = -1;
        dat.cartan[l - 3][l - 1] = -1;
    }

    dat.simple_len2.assign(l, 2);
    if (series == Series::B) dat.simple_len2[l - 1] = 1;

    // Weight-space metric, stored as 4*G^ij.
    dat.metric4.assign(l, std::vector<int>(l, 0));
    if (series == Series::B) {
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i < l - 1 && j < l - 1) dat.metric4[i][j] = 4 * std::min(i + 1, j + 1);
                else if (i == l - 1 && j == l - 1) dat.metric4[i][j] = l;
                else dat.metric4[i][j] = 2 * std::min(i + 1, j + 1);
            }
    } else {
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                bool si = i >= l - 2, sj = j >= l - 2;  // spinor nodes
                if (!si && !sj) dat.metric4[i][j] = 4 * std::min(i + 1, j + 1);
                else if (si && sj) dat.metric4[i][j] = (i == j) ? l : l - 2;
                else dat.metric4[i][j] = 2 * std::min(i + 1, j + 1);
            }
    }

    // alpha_(i) . lambda^(j) = delta_ij len2_i / 2, i.e. sum_k g_ki metric4[k][j]
    // must equal 2 delta_ij len2_i.
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            long long s = 0;
            for (int k = 0; k < l; ++k) s += dat.cartan[k][i] * dat.metric4[k][j];
            verify(s == (i == j ? 2 * dat.simple_len2[i] : 0), "metric vs cartan");
        }

    // Positive roots.
    auto add_root = [&dat](std::vector<int> c) { dat.positive_roots.push_back({std::move(c)}); };
    if (series == Series::B) {
        for (int j = 1; j <= l; ++j)  // beta_(j) = alpha_j + ... + alpha_l
            add_root(chain_plus_double_tail(l, j - 1, l - 1, 1, 0));
        for (int j = 1; j <= l - 1; ++j)
            for (int k = 0; k <= l - 1 - j; ++k)  // gamma_(j,k) = alpha_j .. alpha_{j+k}
                add_root(chain_plus_double_tail(l, j - 1, j - 1 + k, 1, 0));
        for (int j = 1; j <= l - 1; ++j)
            for (int k = 0; k <= l - 1 - j; ++k)  // delta: + 2(alpha_{j+k+1} .. alpha_l)
                add_root(chain_plus_double_tail(l, j - 1, j - 1 + k, j + k, l - 1));
        verify(static_cast<int>(dat.positive_roots.size()) == l * l, "positive root count");
    } else {
        for (int j = 1; j <= l; ++j)  // the simple roots
            add_root(chain_plus_double_tail(l, j - 1, j - 1, 1, 0));
        for (int j = 1; j <= l - 2; ++j) {  // beta_(j) = alpha_j + .. + alpha_{l-2} + alpha_l
            auto c = chain_plus_double_tail(l, j - 1, l - 3, 1, 0);
            c[l - 1] = 1;
            add_root(std::move(c));
        }
        for (int j = 1; j <= l - 2; ++j)
            for (int k = 1; k <= l - j; ++k)  // gamma chains, may run through the fork
                add_root(chain_plus_double_tail(l, j - 1, j - 1 + k, 1, 0));
        for (int j = 1; j <= l - 3; ++j)
            for (int k = 0; k <= l - 3 - j; ++k) {
                auto c = chain_plus_double_tail(l, j - 1, j - 1 + k, j + k, l - 3);
                c[l - 2] = 1;
                c[l - 1] = 1;
                add_root(std::move(c));
            }
        verify(static_cast<int>(dat.positive_roots.size()) == l * (l - 1), "positive root count");
    }

    dat.rho = WeightVec(std::vector<long long>(l, 1));

    for (const auto& r : dat.positive_roots)
        verify(root_dot2(dat, r, dat.rho) > 0, "positive root has positive rho pairing");

    // Defining-representation weights by the subtraction chain
    // mu_j = mu_{j-1} - alpha_(j-1), then reflection through zero.
    auto simple_root_dynkin = [&dat, l](int i) {  // column i of the Cartan matrix
        std::vector<long long> c(l);
        for (int j = 0; j < l; ++j) c[j] = dat.cartan[j][i];
        return WeightVec(std::move(c));
    };
    std::vector<WeightVec> mus;
    WeightVec mu = WeightVec::zero(l);
    mu.x[0] = 1;  // lambda^(1)
    mus.push_back(mu);
    const int chain_len = series == Series::B ? l + 1 : l;
    for (int j = 2; j <= chain_len; ++j) {
        mu = mu - simple_root_dynkin(j - 2);
        mus.push_back(mu);
    }
    if (series == Series::B) {
        verify(mus.back() == WeightVec::zero(l), "B chain ends at the zero weight");
        for (int i = 1; i <= l; ++i) mus.push_back(-mus[l - i]);  // mu_{l+1+i} = -mu_{l+1-i}
    } else {
        for (int i = 1; i <= l; ++i) mus.push_back(-mus[l - i]);  // mu_{l+i} = -mu_{l+1-i}
    }
    dat.fund_weights = std::move(mus);
    verify(static_cast<int>(dat.fund_weights.size()) == dat.N, "defining rep weight count");

    WeightVec sum = WeightVec::zero(l);
    for (const auto& w : dat.fund_weights) sum = sum + w;
    verify(sum == WeightVec::zero(l), "defining rep weights sum to zero");

    for (const auto& w : dat.fund_weights) {
        dat.fund_norms.push_back(inner(dat, w, w));
        dat.fund_rho_dots.push_back(inner(dat, dat.rho, w));
    }

    // Verify the scalar-product tables.
    if (series == Series::B) {
        for (int i = 1; i <= 2 * l + 1; ++i) {
            Rat n = dat.fund_norms[i - 1], d = dat.fund_rho_dots[i - 1];
            if (i == l + 1) {
                verify(n == Rat::of(0, 1) && d == Rat::of(0, 1), "B zero weight products");
            } else if (i <= l) {
                verify(n == Rat::of(1, 1) && d == Rat::of(2 * l - (2 * i - 1), 2), "B rho.mu table");
            } else {
                int ii = i - (l + 1);
                verify(n == Rat::of(1, 1) && d == Rat::of(-(2 * ii - 1), 2), "B rho.mu table");
            }
        }
    } else {
        for (int i = 1; i <= 2 * l; ++i) {
            Rat n = dat.fund_norms[i - 1], d = dat.fund_rho_dots[i - 1];
            verify(n == Rat::of(1, 1), "D weights are unit norm");
            if (i <= l) verify(d == Rat::of(l - i, 1), "D rho.mu table");
            else verify(d == Rat::of(-(i - l - 1), 1), "D rho.mu table");
        }
    }

    // Highest root: the unique long positive root maximizing the rho pairing.
    long long best = -1;
    for (const auto& r : dat.positive_roots) {
        long long d2 = root_dot2(dat, r, dat.rho);
        if (d2 > best) {
            best = d2;
            dat.highest_root = r;
        }
    }
    {
        long long len2_num4 = 0;  // 4 * theta.theta via Dynkin coords below
        std::vector<long long> th(l, 0);
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < l; ++i) th[j] += dat.highest_root.coeff[i] * dat.cartan[j][i];
        dat.highest_root_dynkin = WeightVec(std::move(th));
        len2_num4 = inner4(dat, dat.highest_root_dynkin, dat.highest_root_dynkin);
        verify(len2_num4 == 8, "highest root is long (length^2 = 2)");
    }

    return dat;
}

long long inner4(const AlgebraData& dat, const WeightVec& x, const WeightVec& y) {
    if (x.rank() != dat.rank || y.rank() != dat.rank) throw RankMismatch("inner: rank mismatch");
    long long s = 0;
    for (int i = 0; i < dat.rank; ++i) {
        if (x.x[i] == 0) continue;
        long long row = 0;
        for (int j = 0; j < dat.rank; ++j) row += dat.metric4[i][j] * y.x[j];
        s += x.x[i] * row;
    }
    return s;
}

Rat inner(const AlgebraData& dat, const WeightVec& x, const WeightVec& y) {
    return Rat::of(inner4(dat, x, y), 4);
}

long long root_dot2(const AlgebraData& dat, const PositiveRoot& alpha, const WeightVec& x) {
    if (x.rank() != dat.rank) throw RankMismatch("root_dot2: rank mismatch");
    long long s = 0;
    for (int i = 0; i < dat.rank; ++i) s += static_cast<long long>(alpha.coeff[i]) * dat.simple_len2[i] * x.x[i];
    return s;
}

WeightVec weyl_reflect(const AlgebraData& dat, int i, const WeightVec& x) {
    if (i < 1 || i > dat.rank) throw IndexOutOfRange("simple reflection index");
    if (x.rank() != dat.rank) throw RankMismatch("weyl_reflect: rank mismatch");
    WeightVec r = x;
    long long xi = x.x[i - 1];
    if (xi == 0) return r;
    for (int j = 0; j < dat.rank; ++j) r.x[j] -= xi * dat.cartan[j][i - 1];
    return r;
}

std::vector<WeylElement> enumerate_weyl_group(const AlgebraData& dat) {
    if (dat.rank > 4)
        throw RankTooLargeForEnumeration("Weyl group enumeration capped at rank 4");
    const int l = dat.rank;

    // Generator matrices acting on Dynkin coordinates.
    std::vector<std::vector<std::vector<long long>>> gens;
    for (int i = 0; i < l; ++i) {
        std::vector<std::vector<long long>> m(l, std::vector<long long>(l, 0));
        for (int j = 0; j < l; ++j) {
            m[j][j] = 1;
            m[j][i] -= dat.cartan[j][i];
        }
        gens.push_back(std::move(m));
    }

    auto matmul = [l](const auto& a, const auto& b) {
        std::vector<std::vector<long long>> c(l, std::vector<long long>(l, 0));
        for (int i = 0; i < l; ++i)
            for (int k = 0; k < l; ++k) {
                if (a[i][k] == 0) continue;
                for (int j = 0; j < l; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    };

    std::map<std::vector<std::vector<long long>>, int> seen;
    std::vector<WeylElement> out;
    std::vector<std::vector<long long>> id(l, std::vector<long long>(l, 0));
    for (int i = 0; i < l; ++i) id[i][i] = 1;
    seen[id] = 1;
    out.push_back({id, 1});
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            WeylElement cur = out[idx];
            for (const auto& g : gens) {
                auto m = matmul(g, cur.mat);
                if (seen.emplace(m, 1).second) {
                    out.push_back({m, -cur.sign});
                    next.push_back(out.size() - 1);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

WeightVec apply(const WeylElement& w, const WeightVec& x) {
    const int l = x.rank();
    WeightVec r = WeightVec::zero(l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) r.x[i] += w.mat[i][j] * x.x[j];
    return r;
}

std::complex<double> principal_power4(std::complex<double> t0, long long num4) {
    // t0^(num4/4) via the principal logarithm; exact for |t0| = 1 phases.
    double lg_re = std::log(std::abs(t0));
    double lg_im = std::arg(t0);
    double s = static_cast<double>(num4) / 4.0;
    return std::exp(std::complex<double>(s * lg_re, s * lg_im));
}

namespace {

constexpr double kSingularTol = 1e-9;

// Extended-precision variant: the Weyl-sum formula cancels hundreds of unit
// phases down to a possibly tiny Weyl denominator, which costs ~6 digits in
// plain double at rank 4.
std::complex<long double> power4l(std::complex<double> t0, long long num4) {
    long double lg_re = std::log(std::abs(t0));
    long double lg_im = std::arg(t0);
    long double s = static_cast<long double>(num4) / 4.0L;
    return std::exp(std::complex<long double>(s * lg_re, s * lg_im));
}

}  // namespace

std::complex<double> character_product_eval(const AlgebraData& dat, const WeightVec& Lambda,
                                            std::complex<double> t0) {
    if (Lambda.rank() != dat.rank) throw RankMismatch("character: rank mismatch");
    for (long long c : Lambda.x)
        if (c < 0) throw InvalidArgument("character argument must be dominant");
    if (t0 == std::complex<double>(0.0)) throw ZeroBase("character at t0 = 0");
    WeightVec rl = dat.rho + Lambda;
    std::complex<double> acc = 1.0;
    for (const auto& alpha : dat.positive_roots) {
        long long n2 = root_dot2(dat, alpha, rl);   // 2 alpha.(rho+Lambda)
        long long d2 = root_dot2(dat, alpha, dat.rho);
        std::complex<double> num = principal_power4(t0, n2) - principal_power4(t0, -n2);
        std::complex<double> den = principal_power4(t0, d2) - principal_power4(t0, -d2);
        if (std::abs(den) < kSingularTol)
            throw SingularDenominator("character denominator vanishes; enlarge the level");
        acc *= num / den;
    }
    return acc;
}

std::complex<double> character_weylsum_eval(const AlgebraData& dat, const WeightVec& Lambda,
                                            std::complex<double> t0) {
    if (Lambda.rank() != dat.rank) throw RankMismatch("character: rank mismatch");
    auto group = enumerate_weyl_group(dat);
    WeightVec rl = dat.rho + Lambda;
    std::complex<long double> num = 0.0L, den = 0.0L;
    for (const auto& w : group) {
        // exponents rho . w(p) as quarter-integers
        num += static_cast<long double>(w.sign) *
               power4l(t0, inner4(dat, dat.rho, apply(w, rl)));
        den += static_cast<long double>(w.sign) *
               power4l(t0, inner4(dat, dat.rho, apply(w, dat.rho)));
    }
    if (std::abs(den) < static_cast<long double>(kSingularTol))
        throw SingularDenominator("Weyl denominator vanishes; enlarge the level");
    std::complex<long double> r = num / den;
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

std::complex<double> fundamental_weight_sum_eval(const AlgebraData& dat,
                                                 std::complex<double> t0) {
    if (t0 == std::complex<double>(0.0)) throw ZeroBase("weight sum at t0 = 0");
    std::complex<double> acc = 0.0;
    for (const Rat& d : dat.fund_rho_dots)
        acc += principal_power4(t0, -d.num * (4 / d.den));
    return acc;
}

}  // namespace tki
