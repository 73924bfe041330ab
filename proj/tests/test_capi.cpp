// Exercises the shared-library surface exactly as an external client would:
// through tki/tki.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <string>

#include "tki/tki.h"

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { tki_string_free(s); }
    std::string get() const { return s ? s : ""; }
};

struct Poly {
    tki_poly* p = nullptr;
    ~Poly() { tki_poly_free(p); }
};

}  // namespace

TEST_CASE("compute and text") {
    Poly p;
    REQUIRE(tki_compute(2, 3, "homfly", "az", &p.p) == TKI_OK);
    Str s;
    REQUIRE(tki_poly_text(p.p, &s.s) == TKI_OK);
    CHECK(s.get() == "2*a^2 + a^2*z^2 - a^4");

    Poly aq;
    REQUIRE(tki_compute(2, 3, "homfly", "aq", &aq.p) == TKI_OK);
    Poly nat;
    REQUIRE(tki_poly_to_natural(aq.p, &nat.p) == TKI_OK);
    CHECK(tki_poly_equal(nat.p, p.p) == 1);

    // canonicalization happens inside
    Poly neg;
    REQUIRE(tki_compute(-2, -3, "homfly", "aq", &neg.p) == TKI_OK);
    CHECK(tki_poly_equal(neg.p, aq.p) == 1);
}

TEST_CASE("error codes") {
    Poly p;
    CHECK(tki_compute(2, 4, "homfly", "aq", &p.p) == TKI_ERR_NOT_COPRIME);
    CHECK(std::string(tki_last_error()).find("coprime") != std::string::npos);
    CHECK(tki_compute(2, 3, "jones", "aq", &p.p) == TKI_ERR_USAGE);
    CHECK(tki_compute(2, 3, "homfly", "xy", &p.p) == TKI_ERR_USAGE);
    CHECK(tki_parse("a^^2", "aq", &p.p) == TKI_ERR_PARSE);
    CHECK(tki_parse(nullptr, "aq", &p.p) == TKI_ERR_USAGE);

    Str s;
    CHECK(tki_cs_compare(2, 3, 4, 20, 1e-8, &s.s) == TKI_ERR_USAGE);   // N too small
    CHECK(tki_cs_compare(2, 3, 7, 3, 1e-8, &s.s) == TKI_ERR_USAGE);    // K below g_dual+1
    CHECK(tki_cs_compare(2, 4, 7, 20, 1e-8, &s.s) == TKI_ERR_NOT_COPRIME);
}

TEST_CASE("parse, serialize, eval, specialize") {
    Poly p;
    REQUIRE(tki_parse("q^-1 + a^2", "aq", &p.p) == TKI_OK);
    Str txt;
    REQUIRE(tki_poly_text(p.p, &txt.s) == TKI_OK);
    CHECK(txt.get() == "q^-1 + a^2");

    Str js;
    REQUIRE(tki_poly_json(p.p, &js.s) == TKI_OK);
    Poly q;
    REQUIRE(tki_parse_json(js.s, &q.p) == TKI_OK);
    CHECK(tki_poly_equal(p.p, q.p) == 1);

    double out[2];
    REQUIRE(tki_poly_eval(p.p, 2.0, 0.0, 0.5, 0.0, out) == TKI_OK);
    CHECK(out[0] == doctest::Approx(2.0 + 4.0));
    CHECK(out[1] == doctest::Approx(0.0));

    Poly sp;
    REQUIRE(tki_poly_specialize(p.p, "so", 3, &sp.p) == TKI_OK);
    Str sptxt;
    REQUIRE(tki_poly_text(sp.p, &sptxt.s) == TKI_OK);
    CHECK(sptxt.get() == "q^-1 + q^4");
    CHECK(tki_poly_specialize(p.p, "sp", 3, &sp.p) == TKI_ERR_USAGE);
}

TEST_CASE("invariant json record") {
    Str s;
    REQUIRE(tki_invariant_json(2, 3, "kauffman", &s.s) == TKI_OK);
    auto j = nlohmann::json::parse(s.get());
    CHECK(j["knot"] == nlohmann::json({2, 3}));
    CHECK(j["kind"] == "kauffman");
    CHECK(j["aq"].contains("terms"));
    CHECK(j["az"].contains("terms"));
}

TEST_CASE("verify through the library") {
    Str s;
    REQUIRE(tki_verify(5, "relation,a1", 2, 0, 0, 1e-8, &s.s) == TKI_OK);
    auto j = nlohmann::json::parse(s.get());
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 2);

    CHECK(tki_verify(5, "", 1, 0, 0, 1e-8, &s.s) == TKI_ERR_USAGE);
    CHECK(tki_verify(5, "bogus", 1, 0, 0, 1e-8, &s.s) == TKI_ERR_USAGE);
}

TEST_CASE("cs compare through the library") {
    Str s;
    REQUIRE(tki_cs_compare(2, 3, 7, 20, 1e-8, &s.s) == TKI_OK);
    auto j = nlohmann::json::parse(s.get());
    CHECK(j["pass"] == true);
    CHECK(j["N"] == 7);
    CHECK(j["K"] == 20);
    CHECK(j["abs_error"].get<double>() < 1e-8);
}

TEST_CASE("table through the library") {
    Str s;
    REQUIRE(tki_table(4, "alexander", 2, &s.s) == TKI_OK);
    auto j = nlohmann::json::parse(s.get());
    CHECK(j.is_array());
    CHECK(j.size() == 5);  // coprime pairs up to 4: 12 13 14 23 34
    for (const auto& row : j) CHECK(row["kind"] == "alexander");

    // byte-stable across runs
    Str s2;
    REQUIRE(tki_table(4, "alexander", 1, &s2.s) == TKI_OK);
    CHECK(s.get() == s2.get());
}

TEST_CASE("version string") {
    CHECK(std::string(tki_version()).find('.') != std::string::npos);
}
