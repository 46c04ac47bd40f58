#pragma once

#include <gmpxx.h>

#include "tvb/report.hpp"

namespace tvb {

bool is_prime(int n);

// Clause-by-clause verdicts for a birch(k) count in dimension d:
//   evenness      — count is even; applies for k >= d+2, unconditional.
//   d1-factorial  — count >= ceil(k/2)! * floor(k/2)!; d = 1 only.
//   planar-triple — count >= 8 * 3^(k-6); d = 2, k >= 6.
//   power         — count >= 2^(k-d-1); d >= 2, k >= d+2.
// The three lower bounds are conditional: vacuous when count = 0.
BoundsVerdict check_birch_bounds(const mpz_class& count, int d, int k);

// Same for a tverberg(r) count. For prime r every applicable clause is
// guaranteed outright (including "existence": count >= 1); for non-prime
// r all clauses apply only under count > 0 and are marked conditional.
//   existence     — count >= 1; prime r only.
//   evenness      — count even; r >= 2d+2.
//   d1-factorial  — count >= ceil((r-1)/2)! * floor((r-1)/2)!; d = 1.
//   planar-triple — count >= 8 * 3^(r-8); d = 2, r >= 8.
//   power         — count >= 2^(r-2d-1); d >= 2, r >= 2d+2.
BoundsVerdict check_tverberg_bounds(const mpz_class& count, int d, int r);

// Largest applicable lower bound for positive counts (1 when no clause
// applies). Used as search target by the tightness command.
mpz_class birch_bound_value(int d, int k);

// Same for tverberg; `bracketed` signals a non-prime r, where the bound
// additionally assumes count > 0.
mpz_class tverberg_bound_value(int d, int r, bool* bracketed = nullptr);

// Collapses a verdict into the two scan-row flags: the evenness clause
// vs everything else (existence and the lower bounds).
bool evenness_ok(const BoundsVerdict& v);
bool lower_bounds_ok(const BoundsVerdict& v);

}  // namespace tvb
