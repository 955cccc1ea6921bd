#ifndef MF_NUMBERS_HPP
#define MF_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mf {

using Int = mpz_class;
using Rat = mpq_class;

/// Rational from numerator/denominator, canonicalized.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Least non-negative residue of z mod m (m > 0).
inline std::uint64_t mod_residue(const Int& z, std::uint64_t m) {
    Int r;
    Int mod(static_cast<unsigned long>(m));
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
    return r.get_ui();
}

/// Exact quotient; throws std::logic_error if d does not divide z.
Int divexact(const Int& z, const Int& d);

bool is_prime(std::uint64_t n);

std::string to_string(const Int& z);
std::string to_string(const Rat& r);

}  // namespace mf

#endif
