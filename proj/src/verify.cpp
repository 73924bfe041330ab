#include "verify.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

namespace tki {

std::vector<TorusKnot> coprime_pairs(int max_range) {
    std::vector<TorusKnot> out;
    for (int n = 1; n <= max_range; ++n)
        for (int m = n + 1; m <= max_range; ++m)
            if (std::gcd(n, m) == 1) out.push_back({n, m});
    return out;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& f) {
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = hc == 0 ? 1 : static_cast<int>(hc);
    }
    threads = std::min<std::size_t>(threads, count == 0 ? 1 : count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace {

bool same_invariants(const TorusKnot& a, const TorusKnot& b) {
    for (InvariantKind kind : {InvariantKind::Homfly, InvariantKind::Kauffman,
                               InvariantKind::KauffmanNeg, InvariantKind::Alexander,
                               InvariantKind::Qtilde}) {
        InvariantResult ra = compute_invariant(a, kind);
        InvariantResult rb = compute_invariant(b, kind);
        if (!(ra.aq == rb.aq)) return false;
    }
    return true;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
    if (opt.max_range < 2) throw InvalidArgument("verify needs max_range >= 2");
    for (const auto& c : opt.checks)
        if (c != "relation" && c != "symmetry" && c != "a1" && c != "olga" && c != "oracle")
            throw InvalidArgument("unknown check: " + c);

    std::vector<TorusKnot> pairs = coprime_pairs(opt.max_range);
    const bool relation = opt.checks.count("relation") != 0;
    const bool symmetry = opt.checks.count("symmetry") != 0;
    const bool a1 = opt.checks.count("a1") != 0;
    const bool olga = opt.checks.count("olga") != 0;
    const bool oracle = opt.checks.count("oracle") != 0;

    // Oracle contexts: user-selected (N, K), or a default B/D pair probed at
    // levels safely above every character-denominator zero.
    std::vector<CSContext> contexts;
    if (oracle) {
        if (opt.N != 0 || opt.K != 0) {
            if (opt.N == 0 || opt.K == 0)
                throw InvalidArgument("oracle check needs both N and K (or neither)");
            contexts.push_back(make_cs_context_for_N(opt.N, opt.K));
        } else {
            contexts.push_back(make_cs_context_for_N(7, 20));
            contexts.push_back(make_cs_context_for_N(8, 22));
        }
    }

    struct PairOutcome {
        bool relation_ok = true, symmetry_ok = true, a1_ok = true, olga_ok = true, oracle_ok = true;
    };
    std::vector<PairOutcome> outcomes(pairs.size());

    parallel_for(pairs.size(), opt.threads, [&](std::size_t i) {
        const TorusKnot k = pairs[i];
        PairOutcome& po = outcomes[i];
        LaurentPoly2 y, yneg, p;
        if (relation || symmetry || a1 || olga) {
            y = kauffman(k);
            yneg = y.subst_q_inv();
        }
        if (relation) {
            p = homfly(k);
            po.relation_ok = homfly_from_kauffman(y, yneg) == p;
        }
        if (symmetry) po.symmetry_ok = same_invariants(k, canonicalize(k.m, k.n));
        if (a1) {
            LaurentPoly2 one{Int(1)};
            po.a1_ok = y.subst_a_one() == one && yneg.subst_a_one() == one;
        }
        if (olga) po.olga_ok = alexander(k) == alexander_from_kauffman_derivative(k);
        if (oracle) {
            for (const CSContext& ctx : contexts) {
                CompareReport r = compare_closed_form(ctx, k.n, k.m, opt.tol);
                if (!r.pass) po.oracle_ok = false;
            }
        }
    });

    std::vector<CheckResult> results;
    auto collect = [&](const char* name, auto member) {
        CheckResult cr;
        cr.name = name;
        cr.cases = static_cast<int>(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (!(outcomes[i].*member)) cr.failures.push_back(pairs[i]);
        results.push_back(std::move(cr));
    };
    if (relation) collect("relation", &PairOutcome::relation_ok);
    if (symmetry) collect("symmetry", &PairOutcome::symmetry_ok);
    if (a1) collect("a1", &PairOutcome::a1_ok);
    if (olga) collect("olga", &PairOutcome::olga_ok);
    if (oracle) collect("oracle", &PairOutcome::oracle_ok);
    return results;
}

std::string verify_report_json(const VerifyOptions& opt, const std::vector<CheckResult>& results) {
    nlohmann::json j;
    j["max"] = opt.max_range;
    bool all = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json c;
        c["name"] = r.name;
        c["cases"] = r.cases;
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& k : r.failures) fails.push_back({k.n, k.m});
        c["failures"] = fails;
        c["pass"] = r.pass();
        all = all && r.pass();
        checks.push_back(std::move(c));
    }
    j["checks"] = checks;
    j["pass"] = all;
    return j.dump();
}

std::string table_json(int max_range, InvariantKind kind, int threads) {
    std::vector<TorusKnot> pairs = coprime_pairs(max_range);
    std::vector<std::string> rows(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) {
        rows[i] = to_json(compute_invariant(pairs[i], kind));
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(nlohmann::json::parse(r));
    return arr.dump();
}

}  // namespace tki
