#include "knots.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

namespace tki {

TorusKnot canonicalize(long long n, long long m) {
    if (n == 0 && m == 0) throw NotCoprime("(0,0) is not a torus knot");
    if (std::gcd(n < 0 ? -n : n, m < 0 ? -m : m) != 1)
        throw NotCoprime("torus knot indices must be coprime");
    if (n < 0) {
        n = -n;
        m = -m;
    }
    if (n == 0) return {1, 0};  // {0,±1} is the unknot
    if (n > 1000 || m > 1000 || m < -1000)
        throw InvalidArgument("torus knot index out of supported range");
    return {static_cast<int>(n), static_cast<int>(m)};
}

bool is_unknot(const TorusKnot& k) { return k.n == 1 || k.m == 0 || k.m == 1 || k.m == -1; }

const char* kind_name(InvariantKind k) {
    switch (k) {
        case InvariantKind::Homfly: return "homfly";
        case InvariantKind::Kauffman: return "kauffman";
        case InvariantKind::KauffmanNeg: return "kauffman-neg";
        case InvariantKind::Alexander: return "alexander";
        case InvariantKind::Qtilde: return "qtilde";
    }
    return "?";
}

InvariantKind parse_kind(const std::string& name) {
    if (name == "homfly") return InvariantKind::Homfly;
    if (name == "kauffman") return InvariantKind::Kauffman;
    if (name == "kauffman-neg") return InvariantKind::KauffmanNeg;
    if (name == "alexander") return InvariantKind::Alexander;
    if (name == "qtilde") return InvariantKind::Qtilde;
    throw InvalidArgument("unknown invariant kind: " + name);
}

namespace {

void require_canonical(const TorusKnot& k) {
    if (k.n < 1) throw InvalidArgument("knot must be canonicalized first");
}

// Shared structure of the Kauffman-side sums: for each beta+gamma+1 = n the
// summand splits into a 1/[n] piece and a 1/(q^{beta-gamma} a - ...) piece,
// each carried as a Fraction over {[n] or mixed factor} * [beta]! * [gamma]!.
// `second_sign` is +1 for Y(a,z) and -1 for the direct Y(a,-z) assembly.
std::vector<Fraction> kauffman_sum_terms(int n, int m, int second_sign) {
    std::vector<Fraction> terms;
    terms.reserve(2 * n + 1);
    for (int gamma = 0; gamma <= n - 1; ++gamma) {
        int beta = n - 1 - gamma;
        LaurentPoly2 base =
            LaurentPoly2::mono((gamma % 2 == 0) ? 1 : -1, -m, -m * (beta - gamma)) *
            bracket_product(gamma, beta, 0);
        FactorBag fact = bag_merge_add(qfactorial(beta), qfactorial(gamma));

        FactorBag den1 = fact;
        bag_insert(den1, pure_factor(n));
        terms.push_back({base, std::move(den1)});

        FactorBag den2 = fact;
        bag_insert(den2, mixed_factor(beta - gamma, 1));
        terms.push_back({second_sign > 0 ? base : -base, std::move(den2)});
    }
    if (n % 2 == 0)
        terms.push_back({LaurentPoly2(Int(second_sign)), FactorBag{}});
    return terms;
}

}  // namespace

LaurentPoly2 kauffman(const TorusKnot& k) {
    require_canonical(k);
    const int n = k.n, m = k.m;
    Fraction s = fraction_sum(kauffman_sum_terms(n, m, +1));
    // prefactor a^{nm} [1] / ([1] + a - a^-1)
    LaurentPoly2 num = LaurentPoly2::mono(1, n * m, 0) * bracket(1, 0) * s.num;
    LaurentPoly2 den = expand(s.den) * (bracket(1, 0) + bracket(0, 1));
    return exact_div(num, den);
}

LaurentPoly2 kauffman_negz(const TorusKnot& k) { return kauffman(k).subst_q_inv(); }

LaurentPoly2 kauffman_negz_direct(const TorusKnot& k) {
    require_canonical(k);
    const int n = k.n, m = k.m;
    Fraction s = fraction_sum(kauffman_sum_terms(n, m, -1));
    // prefactor -a^{nm} [1] / ([1] - a + a^-1)
    LaurentPoly2 num = -(LaurentPoly2::mono(1, n * m, 0) * bracket(1, 0) * s.num);
    LaurentPoly2 den = expand(s.den) * (bracket(1, 0) - bracket(0, 1));
    return exact_div(num, den);
}

LaurentPoly2 homfly(const TorusKnot& k) {
    require_canonical(k);
    const int n = k.n, m = k.m;
    std::vector<Fraction> terms;
    terms.reserve(n);
    for (int gamma = 0; gamma <= n - 1; ++gamma) {
        int beta = n - 1 - gamma;
        LaurentPoly2 base =
            LaurentPoly2::mono((gamma % 2 == 0) ? 1 : -1, 0, -m * (beta - gamma)) *
            bracket_product(gamma, beta, 0);
        FactorBag den = bag_merge_add(qfactorial(beta), qfactorial(gamma));
        bag_insert(den, pure_factor(n));
        terms.push_back({std::move(base), std::move(den)});
    }
    Fraction s = fraction_sum(terms);
    // prefactor a^{m(n-1)} [1] / (a - a^-1)
    LaurentPoly2 num = LaurentPoly2::mono(1, m * (n - 1), 0) * bracket(1, 0) * s.num;
    bag_insert(s.den, mixed_factor(0, 1));
    return exact_div(num, expand(s.den));
}

LaurentPoly2 homfly_from_kauffman(const LaurentPoly2& ypos, const LaurentPoly2& yneg) {
    LaurentPoly2 odd = exact_div(bracket(1, 0) * (ypos - yneg), bracket(0, 1));
    return exact_div(ypos + yneg + odd, LaurentPoly2(Int(2)));
}

NaturalPoly alexander(const TorusKnot& k) {
    return to_natural_z(homfly(k).subst_a_one());
}

NaturalPoly alexander_from_kauffman_derivative(const TorusKnot& k) {
    LaurentPoly2 d = (kauffman(k) - kauffman_negz(k)).derivative_a();
    LaurentPoly2 e = d.subst_a_one() * bracket(1, 0);
    LaurentPoly2 f = exact_div(e, LaurentPoly2(Int(4)));
    return to_natural_z(f + LaurentPoly2(Int(1)));
}

LaurentPoly2 qtilde(const TorusKnot& k) { return kauffman(k).subst_a_one(); }

LaurentPoly2 specialize(const LaurentPoly2& f, Group g, int N) {
    if (N < 2) throw InvalidArgument("group rank parameter N must be >= 2");
    return f.subst_a_qpow(g == Group::SO ? N - 1 : N);
}

InvariantResult compute_invariant(const TorusKnot& k, InvariantKind kind) {
    InvariantResult r;
    r.knot = k;
    r.kind = kind;
    switch (kind) {
        case InvariantKind::Homfly:
            r.aq = homfly(k);
            r.az = to_natural_z(r.aq);
            break;
        case InvariantKind::Kauffman:
            r.aq = kauffman(k);
            r.az = to_natural_z(r.aq);
            break;
        case InvariantKind::KauffmanNeg:
            r.aq = kauffman_negz(k);
            r.az = to_natural_z(r.aq);
            break;
        case InvariantKind::Alexander: {
            NaturalPoly d = alexander(k);
            r.aq = d.expand();
            r.az = d;
            break;
        }
        case InvariantKind::Qtilde: {
            r.aq = qtilde(k);
            r.az = to_natural_z(r.aq);
            break;
        }
    }
    return r;
}

std::string to_json(const InvariantResult& r) {
    nlohmann::json j;
    j["knot"] = {r.knot.n, r.knot.m};
    j["kind"] = kind_name(r.kind);
    j["aq"] = nlohmann::json::parse(to_json(r.aq));
    j["az"] = r.az ? nlohmann::json::parse(to_json(*r.az)) : nlohmann::json(nullptr);
    return j.dump();
}

}  // namespace tki
