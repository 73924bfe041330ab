/*
 * tki - exact torus-knot polynomial invariants.
 *
 * C interface to the computation core: HOMFLY, Kauffman (Dubrovnik) and
 * Alexander-Conway polynomials of torus knots from exact closed formulas,
 * symbolic identity checks between them, and a finite-level Chern-Simons
 * cross-check at roots of unity.
 *
 * All functions return a tki_status; every out-parameter is written only on
 * TKI_OK.  Strings and polynomial handles returned by the library must be
 * released with tki_string_free / tki_poly_free.  Handles are immutable and
 * may be shared between threads.
 */
#ifndef TKI_H
#define TKI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tki_status {
    TKI_OK = 0,
    TKI_ERR_USAGE = 1,          /* invalid arguments / unknown names */
    TKI_ERR_NOT_COPRIME = 2,    /* (n, m) not a torus knot */
    TKI_ERR_PARSE = 3,          /* malformed polynomial text or JSON */
    TKI_ERR_NOT_DIVISIBLE = 4,  /* exact division failed: identity violation */
    TKI_ERR_NOT_EXPRESSIBLE = 5,/* polynomial has no z-form */
    TKI_ERR_SINGULAR = 6,       /* character denominator vanished; K too small */
    TKI_ERR_INTERNAL = 7
} tki_status;

/* Opaque polynomial handle.  Carries either an (a,q) Laurent polynomial or an
 * (a,z) natural-variable polynomial; conversions keep track of which. */
typedef struct tki_poly tki_poly;

/* Human-readable message for the most recent error on this thread. */
const char *tki_last_error(void);

const char *tki_version(void);

/* --- invariants ---------------------------------------------------------- */

/* kind: "homfly" | "kauffman" | "kauffman-neg" | "alexander" | "qtilde";
 * vars: "aq" | "az".  The pair (n, m) is canonicalized internally. */
tki_status tki_compute(int n, int m, const char *kind, const char *vars, tki_poly **out);

/* Full invariant record {"knot":[n,m],"kind":...,"aq":...,"az":...}. */
tki_status tki_invariant_json(int n, int m, const char *kind, char **out);

/* --- polynomial values --------------------------------------------------- */

tki_status tki_parse(const char *text, const char *vars, tki_poly **out);
tki_status tki_parse_json(const char *json_text, tki_poly **out);
tki_status tki_poly_text(const tki_poly *p, char **out);
tki_status tki_poly_json(const tki_poly *p, char **out);

/* Rewrites an (a,q) polynomial in the natural variables (a, z). */
tki_status tki_poly_to_natural(const tki_poly *p, tki_poly **out);

/* a -> q^(N-1) for group "so", a -> q^N for "su". */
tki_status tki_poly_specialize(const tki_poly *p, const char *group, int N, tki_poly **out);

/* Evaluates at complex a and q (a z-form polynomial is expanded first).
 * out[0] = real part, out[1] = imaginary part. */
tki_status tki_poly_eval(const tki_poly *p, double a_re, double a_im,
                         double q_re, double q_im, double out[2]);

/* 1 when equal as exact polynomials (after expanding any z-form), else 0. */
int tki_poly_equal(const tki_poly *x, const tki_poly *y);

void tki_poly_free(tki_poly *p);
void tki_string_free(char *s);

/* --- batch verification and the finite-level oracle ---------------------- */

/* checks_csv: comma-separated subset of relation,symmetry,a1,olga,oracle.
 * threads = 0 picks the hardware concurrency.  N and K select the oracle
 * context (pass 0,0 for the built-in defaults).  Writes a JSON report and
 * returns TKI_OK even when checks fail; inspect "pass" in the report. */
tki_status tki_verify(int max_range, const char *checks_csv, int threads,
                      int N, long K, double tol, char **json_out);

/* Finite-level comparison report for one knot. */
tki_status tki_cs_compare(int n, int m, int N, long K, double tol, char **json_out);

/* JSON array of invariant records over all coprime 1 <= n < m <= max_range. */
tki_status tki_table(int max_range, const char *kind, int threads, char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* TKI_H */
