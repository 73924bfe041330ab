#include "laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tki {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// LaurentPoly2
// ---------------------------------------------------------------------------

LaurentPoly2::LaurentPoly2(Int c) {
    if (c != 0) terms_[{0, 0}] = std::move(c);
}

LaurentPoly2 LaurentPoly2::mono(Int c, int ea, int eq) {
    LaurentPoly2 p;
    if (c != 0) p.terms_[{ea, eq}] = std::move(c);
    return p;
}

bool LaurentPoly2::depends_on_a() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.first != 0; });
}

bool LaurentPoly2::depends_on_q() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.second != 0; });
}

Int LaurentPoly2::coeff(int ea, int eq) const {
    auto it = terms_.find({ea, eq});
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::add_term(int ea, int eq, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({ea, eq}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
    LaurentPoly2 r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            r.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return r;
}

LaurentPoly2 LaurentPoly2::scaled(const Int& c) const {
    LaurentPoly2 r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

LaurentPoly2 LaurentPoly2::subst_q_inv() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first, -k.second}] = c;
    return r;
}

LaurentPoly2 LaurentPoly2::subst_q_neg() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_)
        r.terms_[k] = (k.second % 2 != 0) ? Int(-c) : c;
    return r;
}

LaurentPoly2 LaurentPoly2::subst_q_neg_inv() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_)
        r.terms_[{k.first, -k.second}] = (k.second % 2 != 0) ? Int(-c) : c;
    return r;
}

LaurentPoly2 LaurentPoly2::subst_a_inv() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.terms_[{-k.first, k.second}] = c;
    return r;
}

LaurentPoly2 LaurentPoly2::subst_a_qpow(int e) const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.add_term(0, k.second + e * k.first, c);
    return r;
}

LaurentPoly2 LaurentPoly2::subst_a_one() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) r.add_term(0, k.second, c);
    return r;
}

namespace {

std::complex<double> cpow_int(std::complex<double> b, long long e) {
    if (e < 0) return 1.0 / cpow_int(b, -e);
    std::complex<double> r = 1.0;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double to_double(const Int& c) { return c.convert_to<double>(); }

}  // namespace

std::complex<double> LaurentPoly2::subst_q_value(std::complex<double> q0) const {
    if (depends_on_a()) throw InvalidArgument("numeric q-substitution on a polynomial with a-dependence");
    return eval(1.0, q0);
}

std::complex<double> LaurentPoly2::subst_a_value(std::complex<double> a0) const {
    if (depends_on_q()) throw InvalidArgument("numeric a-substitution on a polynomial with q-dependence");
    return eval(a0, 1.0);
}

LaurentPoly2 LaurentPoly2::derivative_a() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) {
        if (k.first == 0) continue;
        r.terms_[{k.first - 1, k.second}] = c * k.first;
    }
    return r;
}

std::complex<double> LaurentPoly2::eval(std::complex<double> a0, std::complex<double> q0) const {
    if (a0 == std::complex<double>(0.0) || q0 == std::complex<double>(0.0))
        throw ZeroBase("evaluation base must be nonzero");
    if (terms_.empty()) return 0.0;

    // Group by a-exponent; within each group run a sparse Horner scheme in q,
    // then the same over a.  The map is already ordered by (e_a, e_q).
    std::vector<std::pair<int, std::complex<double>>> levels;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        int ea = it->first.first;
        // descending-q Horner over this a-level
        std::vector<std::pair<int, const Int*>> qs;
        for (; it != terms_.end() && it->first.first == ea; ++it)
            qs.emplace_back(it->first.second, &it->second);
        std::complex<double> acc = 0.0;
        int prev = qs.back().first;  // highest q-exponent in this level
        for (auto rit = qs.rbegin(); rit != qs.rend(); ++rit) {
            acc *= cpow_int(q0, prev - rit->first);
            acc += to_double(*rit->second);
            prev = rit->first;
        }
        acc *= cpow_int(q0, prev);
        levels.emplace_back(ea, acc);
    }
    std::complex<double> total = 0.0;
    int prev = levels.back().first;
    for (auto rit = levels.rbegin(); rit != levels.rend(); ++rit) {
        total *= cpow_int(a0, prev - rit->first);
        total += rit->second;
        prev = rit->first;
    }
    total *= cpow_int(a0, prev);
    return total;
}

int LaurentPoly2::min_exp_a() const {
    if (terms_.empty()) throw InvalidArgument("exponent range of zero polynomial");
    return terms_.begin()->first.first;
}

int LaurentPoly2::max_exp_a() const {
    if (terms_.empty()) throw InvalidArgument("exponent range of zero polynomial");
    return terms_.rbegin()->first.first;
}

int LaurentPoly2::min_exp_q() const {
    if (terms_.empty()) throw InvalidArgument("exponent range of zero polynomial");
    int m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

int LaurentPoly2::max_exp_q() const {
    if (terms_.empty()) throw InvalidArgument("exponent range of zero polynomial");
    int m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

// ---------------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------------

namespace {

// Univariate Laurent polynomials in q as exponent -> coefficient maps.
using QPoly = std::map<int, Int>;

void qadd_term(QPoly& p, int e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

QPoly qmul(const QPoly& x, const QPoly& y) {
    QPoly r;
    for (const auto& [ex, cx] : x)
        for (const auto& [ey, cy] : y) qadd_term(r, ex + ey, cx * cy);
    return r;
}

// Exact Laurent division in q; returns false when g does not divide f.
bool qdiv(const QPoly& f, const QPoly& g, QPoly& out) {
    out.clear();
    if (f.empty()) return true;
    // Lowest terms of f and g multiply, so an exact Laurent quotient has
    // minimal exponent exactly f_lo - g_lo; below that the division failed.
    const int quot_lo = f.begin()->first - g.begin()->first;
    const int gdeg = g.rbegin()->first;
    const Int& glead = g.rbegin()->second;
    QPoly r = f;
    while (!r.empty()) {
        int t = r.rbegin()->first - gdeg;
        if (t < quot_lo) return false;
        const Int& rlead = r.rbegin()->second;
        if (rlead % glead != 0) return false;
        Int c = rlead / glead;
        qadd_term(out, t, c);
        for (const auto& [eg, cg] : g) qadd_term(r, eg + t, -c * cg);
    }
    return true;
}

}  // namespace

LaurentPoly2 exact_div(const LaurentPoly2& f, const LaurentPoly2& g) {
    if (g.is_zero()) throw DivisionByZero("exact_div by zero polynomial");
    if (f.is_zero()) return LaurentPoly2();

    // View both as polynomials in a with Laurent q-coefficients.
    std::map<int, QPoly> fa, ga;
    for (const auto& [k, c] : f.terms()) fa[k.first][k.second] = c;
    for (const auto& [k, c] : g.terms()) ga[k.first][k.second] = c;

    const int g_lo = ga.begin()->first;
    const int g_hi = ga.rbegin()->first;
    const int quot_lo = fa.begin()->first - g_lo;  // lowest a-terms multiply
    const QPoly& g_lead = ga.rbegin()->second;

    std::map<int, QPoly> rem = fa;
    std::map<int, QPoly> quot;

    while (!rem.empty()) {
        int r_hi = rem.rbegin()->first;
        int t = r_hi - g_hi;
        if (t < quot_lo) throw NotDivisible("exact_div: nonzero remainder");
        QPoly c;
        if (!qdiv(rem.rbegin()->second, g_lead, c))
            throw NotDivisible("exact_div: leading coefficient not divisible");
        quot[t] = c;
        // rem -= (c * a^t) * g
        for (const auto& [ea, gq] : ga) {
            QPoly prod = qmul(c, gq);
            QPoly& slot = rem[ea + t];
            for (const auto& [e, v] : prod) qadd_term(slot, e, -v);
            if (slot.empty()) rem.erase(ea + t);
        }
    }

    LaurentPoly2 h;
    for (const auto& [ea, qp] : quot)
        for (const auto& [eq, c] : qp) h.terms_[{ea, eq}] = c;
    return h;
}

// ---------------------------------------------------------------------------
// NaturalPoly
// ---------------------------------------------------------------------------

NaturalPoly::NaturalPoly(Int c) {
    if (c != 0) terms_[{0, 0}] = std::move(c);
}

NaturalPoly NaturalPoly::mono(Int c, int ea, int ez) {
    if (ez < 0) throw InvalidArgument("z-exponent must be nonnegative");
    NaturalPoly p;
    if (c != 0) p.terms_[{ea, ez}] = std::move(c);
    return p;
}

bool NaturalPoly::depends_on_a() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.first != 0; });
}

void NaturalPoly::add_term(int ea, int ez, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({ea, ez}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NaturalPoly& NaturalPoly::operator+=(const NaturalPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LaurentPoly2 NaturalPoly::expand() const {
    LaurentPoly2 z = LaurentPoly2::var_q(1) - LaurentPoly2::var_q(-1);
    // Cache powers of z; z-degrees are small.
    std::vector<LaurentPoly2> zpow{LaurentPoly2(Int(1))};
    LaurentPoly2 r;
    for (const auto& [k, c] : terms_) {
        while (static_cast<int>(zpow.size()) <= k.second) zpow.push_back(zpow.back() * z);
        r += zpow[k.second].scaled(c) * LaurentPoly2::mono(1, k.first, 0);
    }
    return r;
}

NaturalPoly to_natural_z(const LaurentPoly2& f) {
    // Peel each fixed-a q-slice against powers of z = q - q^-1: the top
    // q-degree d coefficient of the slice must be the z^d coefficient.
    NaturalPoly out;
    std::map<int, std::map<int, Int>> slices;
    for (const auto& [k, c] : f.terms()) slices[k.first][k.second] = c;

    for (auto& [ea, slice] : slices) {
        while (!slice.empty()) {
            int d = slice.rbegin()->first;
            if (d < 0) throw NotExpressible("q-part is not a polynomial in z = q - q^-1");
            Int c = slice.rbegin()->second;
            out.add_term(ea, d, c);
            // subtract c * (q - q^-1)^d
            Int binom = 1;
            for (int j = 0; j <= d; ++j) {
                // coefficient of q^{d-2j} in (q - q^-1)^d is (-1)^j C(d, j)
                Int sub = (j % 2 != 0) ? Int(-binom) : binom;
                sub *= c;
                auto [it, inserted] = slice.try_emplace(d - 2 * j, Int(-sub));
                if (!inserted) {
                    it->second -= sub;
                    if (it->second == 0) slice.erase(it);
                } else if (it->second == 0) {
                    slice.erase(it);
                }
                binom = binom * (d - j) / (j + 1);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text serialization
// ---------------------------------------------------------------------------

namespace {

void append_term(std::string& out, bool first, const Int& c, int e1, char v1, int e2, char v2) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) out += "-";
    } else {
        out += (c < 0) ? " - " : " + ";
    }
    std::string body;
    auto add_var = [&body](char v, int e) {
        if (e == 0) return;
        if (!body.empty()) body += "*";
        body += v;
        if (e != 1) body += "^" + std::to_string(e);
    };
    add_var(v1, e1);
    add_var(v2, e2);
    if (body.empty()) {
        out += mag.str();
    } else {
        if (mag != 1) out += mag.str() + "*";
        out += body;
    }
}

template <typename TermMap>
std::string render_terms(const TermMap& terms, char second_var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        append_term(out, first, c, k.first, 'a', k.second, second_var);
        first = false;
    }
    return out;
}

}  // namespace

std::string to_text(const LaurentPoly2& f) { return render_terms(f.terms(), 'q'); }
std::string to_text(const NaturalPoly& f) { return render_terms(f.terms(), 'z'); }

// ---------------------------------------------------------------------------
// Text parsing
// ---------------------------------------------------------------------------

namespace {

struct RawPoly {
    std::map<std::pair<int, int>, Int> terms;  // (e_a, e_other)
    bool saw_q = false;
    bool saw_z = false;
};

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RawPoly run() {
        skip_ws();
        bool neg = accept_sign();
        parse_term(neg);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            parse_term(c == '-');
            skip_ws();
        }
        return std::move(out_);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    RawPoly out_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept_sign() {
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            bool neg = s_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    Int parse_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return Int(s_.substr(start, pos_ - start));
    }

    int parse_exponent() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("malformed exponent", pos_);
        Int v = parse_uint();
        if (v > 1000000) throw ParseError("exponent too large", pos_);
        int e = v.convert_to<int>();
        return neg ? -e : e;
    }

    bool is_var(char c) const { return c == 'a' || c == 'q' || c == 'z'; }

    void parse_term(bool negated) {
        Int coeff = 1;
        bool have_coeff = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coeff = parse_uint();
            have_coeff = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
            }
        }
        int ea = 0, eo = 0;
        int var_count = 0;
        while (pos_ < s_.size() && is_var(s_[pos_])) {
            if (var_count == 2) throw ParseError("too many variable factors in term", pos_);
            char v = s_[pos_++];
            int e = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                e = parse_exponent();
            }
            if (v == 'a') {
                ea += e;
            } else {
                if (v == 'q') out_.saw_q = true;
                else out_.saw_z = true;
                eo += e;
            }
            ++var_count;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || !is_var(s_[pos_]))
                    throw ParseError("expected variable after '*'", pos_);
            }
        }
        if (!have_coeff && var_count == 0)
            throw ParseError("expected term", pos_);
        if (out_.saw_q && out_.saw_z) throw ParseError("mixed q and z variables", pos_);
        if (negated) coeff = -coeff;
        auto [it, inserted] = out_.terms.try_emplace({ea, eo}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) out_.terms.erase(it);
        } else if (it->second == 0) {
            out_.terms.erase(it);
        }
    }
};

}  // namespace

LaurentPoly2 parse_poly_aq(const std::string& text) {
    RawPoly raw = Parser(text).run();
    if (raw.saw_z) throw ParseError("variable z not allowed here", 0);
    LaurentPoly2 p;
    for (const auto& [k, c] : raw.terms) p += LaurentPoly2::mono(c, k.first, k.second);
    return p;
}

NaturalPoly parse_poly_az(const std::string& text) {
    RawPoly raw = Parser(text).run();
    if (raw.saw_q) throw ParseError("variable q not allowed here", 0);
    NaturalPoly p;
    for (const auto& [k, c] : raw.terms) {
        if (k.second < 0) throw ParseError("negative z-exponent", 0);
        p += NaturalPoly::mono(c, k.first, k.second);
    }
    return p;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

template <typename TermMap>
json terms_to_json(const TermMap& terms, const char* v2) {
    json arr = json::array();
    for (const auto& [k, c] : terms) {
        json t;
        t["a"] = k.first;
        t[v2] = k.second;
        t["c"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

json poly_json(const char* v2, const json& terms) {
    return json{{"vars", {"a", v2}}, {"terms", terms}};
}

std::pair<std::map<std::pair<int, int>, Int>, std::string> terms_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what(), 0);
    }
    if (!j.contains("vars") || !j.contains("terms") || !j["vars"].is_array() ||
        j["vars"].size() != 2 || j["vars"][0] != "a")
        throw ParseError("polynomial JSON must have vars [\"a\", v] and terms", 0);
    std::string v2 = j["vars"][1];
    if (v2 != "q" && v2 != "z") throw ParseError("second variable must be q or z", 0);
    std::map<std::pair<int, int>, Int> terms;
    for (const auto& t : j["terms"]) {
        if (!t.contains("a") || !t.contains(v2) || !t.contains("c"))
            throw ParseError("term must carry a, " + v2 + ", c", 0);
        Int c(t["c"].get<std::string>());
        if (c == 0) continue;
        terms[{t["a"].get<int>(), t[v2].get<int>()}] += c;
    }
    return {std::move(terms), v2};
}

}  // namespace

std::string to_json(const LaurentPoly2& f) {
    return poly_json("q", terms_to_json(f.terms(), "q")).dump();
}

std::string to_json(const NaturalPoly& f) {
    return poly_json("z", terms_to_json(f.terms(), "z")).dump();
}

LaurentPoly2 poly_aq_from_json(const std::string& text) {
    auto [terms, v2] = terms_from_json(text);
    if (v2 != "q") throw ParseError("expected q-polynomial JSON", 0);
    LaurentPoly2 p;
    for (const auto& [k, c] : terms) p += LaurentPoly2::mono(c, k.first, k.second);
    return p;
}

NaturalPoly poly_az_from_json(const std::string& text) {
    auto [terms, v2] = terms_from_json(text);
    if (v2 != "z") throw ParseError("expected z-polynomial JSON", 0);
    NaturalPoly p;
    for (const auto& [k, c] : terms) {
        if (k.second < 0) throw ParseError("negative z-exponent", 0);
        p += NaturalPoly::mono(c, k.first, k.second);
    }
    return p;
}

}  // namespace tki
