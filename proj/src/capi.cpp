#include "tki/tki.h"

#include <complex>
#include <cstring>
#include <string>
#include <variant>

#include "knots.hpp"
#include "verify.hpp"

using namespace tki;

struct tki_poly {
    std::variant<LaurentPoly2, NaturalPoly> value;

    const LaurentPoly2* aq() const { return std::get_if<LaurentPoly2>(&value); }
    const NaturalPoly* az() const { return std::get_if<NaturalPoly>(&value); }
    LaurentPoly2 expanded() const {
        if (const auto* p = aq()) return *p;
        return az()->expand();
    }
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tki_status fail(tki_status st, const char* msg) {
    g_last_error = msg;
    return st;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
tki_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const NotCoprime& e) {
        return fail(TKI_ERR_NOT_COPRIME, e.what());
    } catch (const ParseError& e) {
        return fail(TKI_ERR_PARSE, e.what());
    } catch (const NotDivisible& e) {
        return fail(TKI_ERR_NOT_DIVISIBLE, e.what());
    } catch (const NotExpressible& e) {
        return fail(TKI_ERR_NOT_EXPRESSIBLE, e.what());
    } catch (const SingularDenominator& e) {
        return fail(TKI_ERR_SINGULAR, e.what());
    } catch (const InvalidArgument& e) {
        return fail(TKI_ERR_USAGE, e.what());
    } catch (const Error& e) {
        return fail(TKI_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(TKI_ERR_INTERNAL, e.what());
    }
}

tki_status fail_usage(const char* msg) { return fail(TKI_ERR_USAGE, msg); }

}  // namespace

extern "C" {

const char* tki_last_error(void) { return g_last_error.c_str(); }

const char* tki_version(void) { return "1.0.0"; }

tki_status tki_compute(int n, int m, const char* kind, const char* vars, tki_poly** out) {
    if (!kind || !vars || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        std::string v = vars;
        if (v != "aq" && v != "az") throw InvalidArgument("vars must be aq or az");
        InvariantResult r = compute_invariant(canonicalize(n, m), parse_kind(kind));
        auto* p = new tki_poly;
        if (v == "aq") p->value = std::move(r.aq);
        else if (r.az) p->value = std::move(*r.az);
        else {
            delete p;
            throw NotExpressible("invariant has no z-form");
        }
        *out = p;
        return TKI_OK;
    });
}

tki_status tki_invariant_json(int n, int m, const char* kind, char** out) {
    if (!kind || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        InvariantResult r = compute_invariant(canonicalize(n, m), parse_kind(kind));
        *out = dup_string(to_json(r));
        return TKI_OK;
    });
}

tki_status tki_parse(const char* text, const char* vars, tki_poly** out) {
    if (!text || !vars || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        std::string v = vars;
        auto* p = new tki_poly;
        try {
            if (v == "aq") p->value = parse_poly_aq(text);
            else if (v == "az") p->value = parse_poly_az(text);
            else {
                delete p;
                throw InvalidArgument("vars must be aq or az");
            }
        } catch (...) {
            delete p;
            throw;
        }
        *out = p;
        return TKI_OK;
    });
}

tki_status tki_parse_json(const char* json_text, tki_poly** out) {
    if (!json_text || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        std::string s = json_text;
        auto* p = new tki_poly;
        try {
            if (s.find("\"z\"") != std::string::npos && s.find("\"q\"") == std::string::npos)
                p->value = poly_az_from_json(s);
            else
                p->value = poly_aq_from_json(s);
        } catch (...) {
            delete p;
            throw;
        }
        *out = p;
        return TKI_OK;
    });
}

tki_status tki_poly_text(const tki_poly* p, char** out) {
    if (!p || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        *out = dup_string(p->aq() ? to_text(*p->aq()) : to_text(*p->az()));
        return TKI_OK;
    });
}

tki_status tki_poly_json(const tki_poly* p, char** out) {
    if (!p || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        *out = dup_string(p->aq() ? to_json(*p->aq()) : to_json(*p->az()));
        return TKI_OK;
    });
}

tki_status tki_poly_to_natural(const tki_poly* p, tki_poly** out) {
    if (!p || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        auto* r = new tki_poly;
        try {
            r->value = p->aq() ? to_natural_z(*p->aq()) : *p->az();
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
        return TKI_OK;
    });
}

tki_status tki_poly_specialize(const tki_poly* p, const char* group, int N, tki_poly** out) {
    if (!p || !group || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        std::string g = group;
        if (g != "so" && g != "su") throw InvalidArgument("group must be so or su");
        auto* r = new tki_poly;
        try {
            r->value = specialize(p->expanded(), g == "so" ? Group::SO : Group::SU, N);
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
        return TKI_OK;
    });
}

tki_status tki_poly_eval(const tki_poly* p, double a_re, double a_im, double q_re,
                         double q_im, double out[2]) {
    if (!p || !out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        std::complex<double> v =
            p->expanded().eval({a_re, a_im}, {q_re, q_im});
        out[0] = v.real();
        out[1] = v.imag();
        return TKI_OK;
    });
}

int tki_poly_equal(const tki_poly* x, const tki_poly* y) {
    if (!x || !y) return 0;
    try {
        return x->expanded() == y->expanded() ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

void tki_poly_free(tki_poly* p) { delete p; }

void tki_string_free(char* s) { delete[] s; }

tki_status tki_verify(int max_range, const char* checks_csv, int threads, int N, long K,
                      double tol, char** json_out) {
    if (!checks_csv || !json_out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        VerifyOptions opt;
        opt.max_range = max_range;
        opt.threads = threads;
        opt.N = N;
        opt.K = K;
        opt.tol = tol;
        std::string csv = checks_csv;
        std::size_t pos = 0;
        while (pos <= csv.size()) {
            std::size_t comma = csv.find(',', pos);
            std::string item = csv.substr(pos, comma == std::string::npos ? csv.size() - pos
                                                                          : comma - pos);
            if (!item.empty()) opt.checks.insert(item);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (opt.checks.empty()) throw InvalidArgument("no checks requested");
        auto results = run_verify(opt);
        *json_out = dup_string(verify_report_json(opt, results));
        return TKI_OK;
    });
}

tki_status tki_cs_compare(int n, int m, int N, long K, double tol, char** json_out) {
    if (!json_out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        if (N < 5) throw InvalidArgument("N must be at least 5");
        CSContext ctx = make_cs_context_for_N(N, K);
        canonicalize(n, m);  // validates coprimality before any heavy work
        CompareReport r = compare_closed_form(ctx, n, m, tol);
        *json_out = dup_string(to_json(r));
        return TKI_OK;
    });
}

tki_status tki_table(int max_range, const char* kind, int threads, char** json_out) {
    if (!kind || !json_out) return fail_usage("null argument");
    return guarded([&]() -> tki_status {
        if (max_range < 2) throw InvalidArgument("table needs max_range >= 2");
        *json_out = dup_string(table_json(max_range, parse_kind(kind), threads));
        return TKI_OK;
    });
}

}  // extern "C"
