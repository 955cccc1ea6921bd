#ifndef MF_MODPSERIES_HPP
#define MF_MODPSERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mf/qseries.hpp"

namespace mf {

/// Truncated Laurent series with coefficients in Z/p, p prime.
/// Same window rules as QSeries; every stored residue lies in [0, p).
class ModPSeries {
public:
    ModPSeries(std::uint64_t p, long valuation, std::vector<std::uint64_t> coeffs,
               std::optional<long> weight = std::nullopt);

    static ModPSeries zero(std::uint64_t p, long prec);
    static ModPSeries one(std::uint64_t p, long prec);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return zero_; }
    long valuation() const { return val_; }
    long prec() const { return prec_; }
    std::optional<long> weight() const { return weight_; }

    std::uint64_t coeff(long n) const;

    ModPSeries truncate(long new_prec) const;
    ModPSeries with_weight(long w) const;

    std::string str() const;

    /// Value equality: modulus, valuation, prec, residues (weight ignored).
    friend bool operator==(const ModPSeries& a, const ModPSeries& b);

private:
    ModPSeries() = default;
    void normalize();

    std::uint64_t p_ = 2;
    long val_ = 0;
    long prec_ = 1;
    std::vector<std::uint64_t> coeffs_;
    bool zero_ = true;
    std::optional<long> weight_;
};

ModPSeries add(const ModPSeries& a, const ModPSeries& b);
ModPSeries multiply(const ModPSeries& a, const ModPSeries& b);
/// a^e for e >= 0, by plain binary exponentiation (convolution products).
ModPSeries power(const ModPSeries& a, long e);
std::uint64_t coefficient(const ModPSeries& a, long n);

/// a^e using the Frobenius identity a(q)^p = a(q^p) mod p for every factor
/// p of e: write e = e' * p^s with p not dividing e', raise to e' literally,
/// then substitute q -> q^p s times.  Each substitution multiplies both the
/// valuation and the precision bound by p, so the result window is wider
/// than the literal power's for s > 0.
ModPSeries frobenius_power(const ModPSeries& a, long e);

/// Coefficient-wise reduction of an exact series mod p.  Throws
/// DenominatorDivisibleByP (carrying the exponent) if some denominator in
/// the window is divisible by p.
ModPSeries reduce_mod_p(const QSeries& a, std::uint64_t p);

inline ModPSeries operator+(const ModPSeries& a, const ModPSeries& b) { return add(a, b); }
inline ModPSeries operator*(const ModPSeries& a, const ModPSeries& b) { return multiply(a, b); }
inline bool operator!=(const ModPSeries& a, const ModPSeries& b) { return !(a == b); }

bool agree_on_overlap(const ModPSeries& a, const ModPSeries& b);

}  // namespace mf

#endif
