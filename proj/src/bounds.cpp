#include "tvb/bounds.hpp"

#include <sstream>

namespace tvb {

namespace {

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class pow_ui(unsigned base, unsigned exp) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
  return p;
}

mpz_class half_factorials(int m) {  // ceil(m/2)! * floor(m/2)!
  return factorial((m + 1) / 2) * factorial(m / 2);
}

bool even(const mpz_class& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

ClauseVerdict lower_bound_clause(const char* name, bool applicable, bool conditional,
                                 const mpz_class& count, const mpz_class& bound,
                                 const std::string& origin) {
  ClauseVerdict cv;
  cv.clause = name;
  cv.applicable = applicable;
  cv.conditional = conditional;
  if (!applicable) return cv;
  if (conditional && count == 0) {
    cv.passed = true;
    cv.note = "vacuous at count 0 (" + origin + ")";
    return cv;
  }
  cv.passed = count >= bound;
  std::ostringstream os;
  os << "count " << count.get_str() << (cv.passed ? " >= " : " < ") << bound.get_str() << " ("
     << origin << ")";
  cv.note = os.str();
  return cv;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

BoundsVerdict check_birch_bounds(const mpz_class& count, int d, int k) {
  BoundsVerdict v;

  ClauseVerdict ev;
  ev.clause = "evenness";
  ev.applicable = (k >= d + 2);
  ev.conditional = false;
  if (ev.applicable) {
    ev.passed = even(count);
    ev.note = ev.passed ? "count is even" : "count is odd";
  } else {
    ev.note = "needs k >= d+2";
  }
  v.clauses.push_back(ev);

  v.clauses.push_back(lower_bound_clause("d1-factorial", d == 1, true, count,
                                         d == 1 ? half_factorials(k) : mpz_class(0),
                                         "ceil(k/2)!*floor(k/2)!"));
  v.clauses.push_back(lower_bound_clause("planar-triple", d == 2 && k >= 6, true, count,
                                         d == 2 && k >= 6 ? mpz_class(8 * pow_ui(3, k - 6))
                                                          : mpz_class(0),
                                         "8*3^(k-6)"));
  v.clauses.push_back(lower_bound_clause("power", d >= 2 && k >= d + 2, true, count,
                                         d >= 2 && k >= d + 2 ? pow_ui(2, k - d - 1)
                                                              : mpz_class(0),
                                         "2^(k-d-1)"));
  return v;
}

BoundsVerdict check_tverberg_bounds(const mpz_class& count, int d, int r) {
  BoundsVerdict v;
  const bool prime = is_prime(r);
  // Non-prime r: every clause needs count > 0. Prime r: guaranteed.
  const bool cond = !prime;
  const std::string regime = prime ? "prime r, guaranteed" : "non-prime r, needs count > 0";

  ClauseVerdict ex;
  ex.clause = "existence";
  ex.applicable = prime;
  ex.conditional = false;
  if (prime) {
    ex.passed = count >= 1;
    ex.note = ex.passed ? "count >= 1 (" + regime + ")" : "count = 0 despite prime r";
  } else {
    ex.note = "needs prime r";
  }
  v.clauses.push_back(ex);

  ClauseVerdict ev;
  ev.clause = "evenness";
  ev.applicable = (r >= 2 * d + 2);
  ev.conditional = cond;
  if (ev.applicable) {
    if (cond && count == 0) {
      ev.passed = true;
      ev.note = "vacuous at count 0 (" + regime + ")";
    } else {
      ev.passed = even(count);
      ev.note = (ev.passed ? "count is even (" : "count is odd (") + regime + ")";
    }
  } else {
    ev.note = "needs r >= 2d+2";
  }
  v.clauses.push_back(ev);

  v.clauses.push_back(lower_bound_clause("d1-factorial", d == 1, cond, count,
                                         d == 1 ? half_factorials(r - 1) : mpz_class(0),
                                         "ceil((r-1)/2)!*floor((r-1)/2)!, " + regime));
  v.clauses.push_back(lower_bound_clause("planar-triple", d == 2 && r >= 8, cond, count,
                                         d == 2 && r >= 8 ? mpz_class(8 * pow_ui(3, r - 8))
                                                          : mpz_class(0),
                                         "8*3^(r-8), " + regime));
  v.clauses.push_back(lower_bound_clause("power", d >= 2 && r >= 2 * d + 2, cond, count,
                                         d >= 2 && r >= 2 * d + 2 ? pow_ui(2, r - 2 * d - 1)
                                                                  : mpz_class(0),
                                         "2^(r-2d-1), " + regime));
  return v;
}

mpz_class birch_bound_value(int d, int k) {
  mpz_class best = 1;
  if (d == 1) best = std::max(best, half_factorials(k));
  if (d == 2 && k >= 6) best = std::max(best, mpz_class(8 * pow_ui(3, k - 6)));
  if (d >= 2 && k >= d + 2) best = std::max(best, pow_ui(2, k - d - 1));
  return best;
}

mpz_class tverberg_bound_value(int d, int r, bool* bracketed) {
  if (bracketed) *bracketed = !is_prime(r);
  mpz_class best = 1;
  if (d == 1) best = std::max(best, half_factorials(r - 1));
  if (d == 2 && r >= 8) best = std::max(best, mpz_class(8 * pow_ui(3, r - 8)));
  if (d >= 2 && r >= 2 * d + 2) best = std::max(best, pow_ui(2, r - 2 * d - 1));
  return best;
}

bool evenness_ok(const BoundsVerdict& v) {
  for (const auto& c : v.clauses)
    if (c.clause == "evenness" && c.applicable && !c.passed) return false;
  return true;
}

bool lower_bounds_ok(const BoundsVerdict& v) {
  for (const auto& c : v.clauses)
    if (c.clause != "evenness" && c.applicable && !c.passed) return false;
  return true;
}

}  // namespace tvb
