// tki command line: compute torus-knot invariants, run the symbolic
// verification suites, and cross-check against the finite-level oracle.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error,
// 3 internal identity violation (exact division failed).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tki/tki.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIdentityViolation = 3;

int exit_code_for(tki_status st) {
    switch (st) {
        case TKI_OK: return kExitOk;
        case TKI_ERR_USAGE:
        case TKI_ERR_NOT_COPRIME:
        case TKI_ERR_PARSE:
        case TKI_ERR_SINGULAR: return kExitUsage;
        case TKI_ERR_NOT_DIVISIBLE: return kExitIdentityViolation;
        default: return kExitIdentityViolation;
    }
}

int report_error(tki_status st) {
    std::cerr << "error: " << tki_last_error() << "\n";
    return exit_code_for(st);
}

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { tki_string_free(s); }
};

struct PolyGuard {
    tki_poly* p = nullptr;
    ~PolyGuard() { tki_poly_free(p); }
};

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return kExitOk;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return kExitUsage;
    }
    f << text << "\n";
    return kExitOk;
}

int resolve_threads(int threads) {
    if (threads != 0) return threads;
    if (const char* env = std::getenv("TKI_THREADS")) {
        try {
            return std::stoi(env);
        } catch (...) {
            std::cerr << "warning: ignoring malformed TKI_THREADS\n";
        }
    }
    return 0;
}

int run_compute(int n, int m, const std::string& kind, const std::string& vars,
                const std::string& format, const std::string& out_path) {
    if (format == "json") {
        StringGuard s;
        if (tki_status st = tki_invariant_json(n, m, kind.c_str(), &s.s); st != TKI_OK)
            return report_error(st);
        return emit(s.s, out_path);
    }
    PolyGuard p;
    if (tki_status st = tki_compute(n, m, kind.c_str(), vars.c_str(), &p.p); st != TKI_OK)
        return report_error(st);
    StringGuard s;
    if (tki_status st = tki_poly_text(p.p, &s.s); st != TKI_OK) return report_error(st);
    return emit(s.s, out_path);
}

int run_verify(int max, const std::string& checks, int threads, int N, long K, double tol,
               const std::string& format, const std::string& out_path) {
    StringGuard s;
    if (tki_status st = tki_verify(max, checks.c_str(), threads, N, K, tol, &s.s);
        st != TKI_OK)
        return report_error(st);
    json rep = json::parse(s.s);
    if (format == "json") {
        int rc = emit(s.s, out_path);
        if (rc != kExitOk) return rc;
    } else {
        std::string text;
        for (const auto& c : rep["checks"]) {
            text += c["pass"].get<bool>() ? "PASS" : "FAIL";
            text += "  " + c["name"].get<std::string>();
            text += "  (" + std::to_string(c["cases"].get<int>()) + " knots";
            if (!c["failures"].empty()) {
                text += "; failing:";
                for (const auto& f : c["failures"])
                    text += " {" + std::to_string(f[0].get<int>()) + "," +
                            std::to_string(f[1].get<int>()) + "}";
            }
            text += ")\n";
        }
        text += rep["pass"].get<bool>() ? "all checks passed" : "some checks FAILED";
        int rc = emit(text, out_path);
        if (rc != kExitOk) return rc;
    }
    return rep["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int run_cs_check(int n, int m, int N, long K, double tol, const std::string& format,
                 const std::string& out_path) {
    StringGuard s;
    if (tki_status st = tki_cs_compare(n, m, N, K, tol, &s.s); st != TKI_OK)
        return report_error(st);
    json rep = json::parse(s.s);
    if (format == "json") {
        int rc = emit(s.s, out_path);
        if (rc != kExitOk) return rc;
    } else {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "%s  {%d,%d}  N=%d K=%ld  |oracle-closed| = %.3e (tol %.1e)",
                      rep["pass"].get<bool>() ? "PASS" : "FAIL", n, m, N, K,
                      rep["abs_error"].get<double>(), tol);
        int rc = emit(buf, out_path);
        if (rc != kExitOk) return rc;
    }
    return rep["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int run_table(int max, const std::string& kind, int threads, const std::string& out_path) {
    StringGuard s;
    if (tki_status st = tki_table(max, kind.c_str(), threads, &s.s); st != TKI_OK)
        return report_error(st);
    return emit(s.s, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact torus-knot polynomial invariants"};
    app.require_subcommand(1);

    int n = 0, m = 0, max = 0, N = 0, threads = 0;
    long K = 0;
    double tol = 1e-8;
    std::string kind = "homfly", vars = "aq", format = "text", out_path, checks;

    auto* compute = app.add_subcommand("compute", "compute one invariant of a torus knot");
    compute->add_option("--n", n, "first index")->required();
    compute->add_option("--m", m, "second index")->required();
    compute->add_option("--invariant", kind,
                        "homfly|kauffman|kauffman-neg|alexander|qtilde");
    compute->add_option("--vars", vars, "aq|az")->check(CLI::IsMember({"aq", "az"}));
    compute->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", out_path, "write output to file");

    auto* verify = app.add_subcommand("verify", "run symbolic checks over a knot range");
    verify->add_option("--max", max, "check all coprime 1 <= n < m <= max")->required();
    verify->add_option("--checks", checks, "subset of relation,symmetry,a1,olga,oracle")
        ->default_val("relation,symmetry,a1,olga");
    verify->add_option("--threads", threads, "worker threads (0 = auto)");
    verify->add_option("--N", N, "oracle: SO(N)");
    verify->add_option("--level", K, "oracle: shifted level K");
    verify->add_option("--tol", tol, "oracle tolerance");
    verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write output to file");

    auto* cs = app.add_subcommand("cs-check", "finite-level oracle comparison for one knot");
    cs->add_option("--n", n, "first index")->required();
    cs->add_option("--m", m, "second index")->required();
    cs->add_option("--N", N, "SO(N)")->required();
    cs->add_option("--level", K, "shifted level K")->required();
    cs->add_option("--tol", tol, "tolerance");
    cs->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cs->add_option("--out", out_path, "write output to file");

    auto* table = app.add_subcommand("table", "JSON table of invariants over a knot range");
    table->add_option("--max", max, "all coprime 1 <= n < m <= max")->required();
    table->add_option("--invariant", kind, "invariant kind");
    table->add_option("--threads", threads, "worker threads (0 = auto)");
    table->add_option("--out", out_path, "write output to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    threads = resolve_threads(threads);
    if (compute->parsed()) return run_compute(n, m, kind, vars, format, out_path);
    if (verify->parsed()) return run_verify(max, checks, threads, N, K, tol, format, out_path);
    if (cs->parsed()) return run_cs_check(n, m, N, K, tol, format, out_path);
    if (table->parsed()) return run_table(max, kind, threads, out_path);
    return kExitUsage;
}
