#ifndef MF_CLASSICAL_HPP
#define MF_CLASSICAL_HPP

#include <span>

#include "mf/qseries.hpp"

namespace mf {

/// Bernoulli number B_k (B_1 = -1/2), by the defining recurrence, memoized.
/// Safe to call from multiple threads.
Rat bernoulli(long k);

/// Divisor power sum sigma_e(n) = sum_{d | n} d^e, by trial division.
Int sigma(long n, long e);

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n
/// to precision prec; E_0 = 1 by convention.  Declared weight k.
/// Throws InvalidWeight for odd k, k = 2, or k < 0.
QSeries eisenstein(long k, long prec);

/// The discriminant cusp form q prod_{n>=1} (1-q^n)^24, expanded exactly
/// from the product.  Declared weight 12.
QSeries delta(long prec);

/// j = E_4^3 / Delta = q^-1 + 744 + 196884 q + ...; declared weight 0.
QSeries j_invariant(long prec);

/// The unique element of {0, 4, 6, 8, 10, 14} congruent to k mod 12.
/// Throws OddWeight for odd k.
long delta_residue(long k);

/// P(j) * E_14 / Delta: a weight-2 weakly holomorphic form; its constant
/// term vanishes.  poly lists the coefficients of P, lowest degree first.
QSeries weight2_form(std::span<const Rat> poly, long prec);

}  // namespace mf

#endif
