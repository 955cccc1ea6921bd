#ifndef MF_QSERIES_HPP
#define MF_QSERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mf/errors.hpp"
#include "mf/numbers.hpp"

namespace mf {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// A value represents sum_{n=val}^{prec-1} c_n q^n + O(q^prec).  Stored
/// coefficients cover exactly the window [valuation, prec); the leading
/// stored coefficient of a nonzero series is nonzero.  The all-zero series
/// keeps only its precision (it is O(q^prec) with nothing known below).
///
/// A series may carry a declared modular weight.  Arithmetic propagates it
/// (products add weights, powers scale them); mixing incompatible weights
/// drops the declaration.  The weight is metadata and does not take part
/// in value equality.
class QSeries {
public:
    /// Series from coefficients for exponents valuation..valuation+coeffs.size()-1.
    QSeries(long valuation, std::vector<Rat> coeffs,
            std::optional<long> weight = std::nullopt);

    static QSeries zero(long prec);
    /// 1 + O(q^prec), declared weight 0.
    static QSeries one(long prec);
    /// c*q^n + O(q^prec); requires prec > n.
    static QSeries monomial(const Rat& c, long n, long prec,
                            std::optional<long> weight = std::nullopt);

    bool is_zero() const { return zero_; }
    /// Lowest stored exponent; equals prec() for the zero series.
    long valuation() const { return val_; }
    long prec() const { return prec_; }
    std::optional<long> weight() const { return weight_; }

    /// Stored coefficient at exponent n; 0 below the valuation.
    /// Throws BeyondPrecision for n >= prec().
    const Rat& coeff(long n) const;

    bool is_integral() const;

    QSeries with_weight(long w) const;
    QSeries without_weight() const;

    /// Restrict to O(q^new_prec); requires new_prec <= prec().
    QSeries truncate(long new_prec) const;

    QSeries operator-() const;
    std::string str() const;

    /// Value equality on (valuation, prec, coefficients); ignores weight.
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    QSeries() = default;
    void normalize();

    long val_ = 0;
    long prec_ = 1;
    std::vector<Rat> coeffs_;  // size prec_ - val_ (empty for zero series)
    bool zero_ = true;
    std::optional<long> weight_;
};

/// Sum; prec = min of precs.
QSeries add(const QSeries& a, const QSeries& b);
/// Cauchy product; prec = min(prec_a + val_b, prec_b + val_a).
QSeries multiply(const QSeries& a, const QSeries& b);
/// a^e.  e >= 0 by binary exponentiation; e < 0 inverts first
/// (throws NegativePowerOfZero on the zero series).  The coefficient
/// window length prec-val is preserved: prec(a^e) = e*val + (prec - val).
QSeries power(const QSeries& a, long e);
/// Multiplicative inverse of a nonzero series, by back-substitution on
/// the convolution equations.
QSeries invert(const QSeries& a);
/// Coefficient at exponent n (0 below valuation; BeyondPrecision at/above prec).
Rat coefficient(const QSeries& a, long n);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return add(a, -b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b); }
QSeries operator*(const Rat& c, const QSeries& a);

inline bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

/// Coefficient-wise equality on the overlap of the two known windows.
bool agree_on_overlap(const QSeries& a, const QSeries& b);

}  // namespace mf

#endif
