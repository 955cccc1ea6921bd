#include "mf/numbers.hpp"

#include <stdexcept>

namespace mf {

Int divexact(const Int& z, const Int& d) {
    if (d == 0 || !mpz_divisible_p(z.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error("divexact: " + z.get_str() + " not divisible by " + d.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), z.get_mpz_t(), d.get_mpz_t());
    return q;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace mf
