#include "mf/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace mf {

namespace {
const Rat kZeroRat = Rat(0);
}

QSeries::QSeries(long valuation, std::vector<Rat> coeffs, std::optional<long> weight)
    : val_(valuation),
      prec_(valuation + static_cast<long>(coeffs.size())),
      coeffs_(std::move(coeffs)),
      zero_(false),
      weight_(weight) {
    if (coeffs_.empty()) throw Error("QSeries: empty coefficient window");
    normalize();
}

QSeries QSeries::zero(long prec) {
    QSeries s;
    s.val_ = prec;
    s.prec_ = prec;
    s.zero_ = true;
    return s;
}

QSeries QSeries::one(long prec) { return monomial(Rat(1), 0, prec, 0); }

QSeries QSeries::monomial(const Rat& c, long n, long prec, std::optional<long> weight) {
    if (prec <= n) throw Error("QSeries::monomial: prec must exceed the exponent");
    if (c == 0) {
        QSeries s = zero(prec);
        s.weight_ = weight;
        return s;
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(prec - n), Rat(0));
    coeffs[0] = c;
    return QSeries(n, std::move(coeffs), weight);
}

void QSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = prec_;
        zero_ = true;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    zero_ = false;
}

const Rat& QSeries::coeff(long n) const {
    if (n >= prec_)
        throw BeyondPrecision("coefficient at q^" + std::to_string(n) +
                              " requested, series only known mod O(q^" +
                              std::to_string(prec_) + ")");
    if (zero_ || n < val_) return kZeroRat;
    return coeffs_[static_cast<std::size_t>(n - val_)];
}

bool QSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

QSeries QSeries::with_weight(long w) const {
    QSeries s(*this);
    s.weight_ = w;
    return s;
}

QSeries QSeries::without_weight() const {
    QSeries s(*this);
    s.weight_.reset();
    return s;
}

QSeries QSeries::truncate(long new_prec) const {
    if (new_prec > prec_)
        throw BeyondPrecision("truncate to O(q^" + std::to_string(new_prec) +
                              ") exceeds known precision O(q^" + std::to_string(prec_) + ")");
    if (zero_ || new_prec <= val_) {
        QSeries s = zero(new_prec);
        s.weight_ = weight_;
        return s;
    }
    QSeries s(*this);
    s.prec_ = new_prec;
    s.coeffs_.resize(static_cast<std::size_t>(new_prec - val_));
    s.normalize();
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s(*this);
    for (Rat& c : s.coeffs_) c = -c;
    return s;
}

std::string QSeries::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(q^" << prec_ << ")";
        return os.str();
    }
    bool first = true;
    for (long n = val_; n < prec_; ++n) {
        const Rat& c = coeff(n);
        if (c == 0 && !(first && n + 1 == prec_)) continue;
        if (!first) os << " + ";
        os << to_string(c);
        if (n != 0) os << "*q^" << n;
        first = false;
    }
    os << " + O(q^" << prec_ << ")";
    return os.str();
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.zero_ == b.zero_ && a.val_ == b.val_ && a.prec_ == b.prec_ &&
           a.coeffs_ == b.coeffs_;
}

namespace {

std::optional<long> add_weight(const QSeries& a, const QSeries& b) {
    if (a.is_zero()) return b.weight();
    if (b.is_zero()) return a.weight();
    if (a.weight() && b.weight() && *a.weight() == *b.weight()) return a.weight();
    return std::nullopt;
}

std::optional<long> mul_weight(const QSeries& a, const QSeries& b) {
    if (a.weight() && b.weight()) return *a.weight() + *b.weight();
    return std::nullopt;
}

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) {
    const long prec = std::min(a.prec(), b.prec());
    const long val = std::min(a.valuation(), b.valuation());
    std::optional<long> w = add_weight(a, b);
    if (val >= prec) {
        QSeries s = QSeries::zero(prec);
        return w ? s.with_weight(*w) : s;
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(prec - val));
    for (long n = val; n < prec; ++n)
        coeffs[static_cast<std::size_t>(n - val)] = a.coeff(n) + b.coeff(n);
    return QSeries(val, std::move(coeffs), w);
}

QSeries multiply(const QSeries& a, const QSeries& b) {
    const long prec = std::min(a.prec() + b.valuation(), b.prec() + a.valuation());
    std::optional<long> w = mul_weight(a, b);
    const long val = a.valuation() + b.valuation();
    if (a.is_zero() || b.is_zero() || val >= prec) {
        QSeries s = QSeries::zero(prec);
        return w ? s.with_weight(*w) : s;
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(prec - val), Rat(0));
    Rat term;
    for (long i = a.valuation(); i < a.prec(); ++i) {
        const Rat& ai = a.coeff(i);
        if (ai == 0) continue;
        const long jmax = std::min(b.prec() - 1, prec - 1 - i);
        for (long j = b.valuation(); j <= jmax; ++j) {
            const Rat& bj = b.coeff(j);
            if (bj == 0) continue;
            term = ai * bj;
            coeffs[static_cast<std::size_t>(i + j - val)] += term;
        }
    }
    return QSeries(val, std::move(coeffs), w);
}

QSeries invert(const QSeries& a) {
    if (a.is_zero()) throw NegativePowerOfZero("cannot invert the zero series");
    const long w = a.prec() - a.valuation();
    // a = q^val * (c_0 + c_1 q + ...); invert the unit part by back-substitution.
    std::vector<Rat> d(static_cast<std::size_t>(w));
    const Rat& c0 = a.coeff(a.valuation());
    d[0] = make_rat(c0.get_den(), c0.get_num());
    for (long n = 1; n < w; ++n) {
        Rat acc(0);
        for (long i = 1; i <= n; ++i)
            acc += a.coeff(a.valuation() + i) * d[static_cast<std::size_t>(n - i)];
        d[static_cast<std::size_t>(n)] = -acc * d[0];
    }
    std::optional<long> wt;
    if (a.weight()) wt = -*a.weight();
    return QSeries(-a.valuation(), std::move(d), wt);
}

QSeries power(const QSeries& a, long e) {
    if (e < 0) {
        if (a.is_zero()) throw NegativePowerOfZero("negative power of the zero series");
        return power(invert(a), -e);
    }
    if (a.is_zero()) {
        // empty product is exactly 1; otherwise O(q^prec)^e = O(q^{e*prec})
        if (e == 0) return QSeries::one(1);
        QSeries s = QSeries::zero(a.prec() * e);
        return a.weight() ? s.with_weight(*a.weight() * e) : s;
    }
    // Window length is preserved: prec(a^e) = e*val + (prec - val).
    QSeries result = QSeries::one(a.prec() - a.valuation());
    QSeries base = a;
    long r = e;
    while (r > 0) {
        if (r & 1) result = multiply(result, base);
        r >>= 1;
        if (r > 0) base = multiply(base, base);
    }
    if (a.weight())
        result = result.with_weight(*a.weight() * e);
    else if (e != 0)
        result = result.without_weight();
    return result;
}

Rat coefficient(const QSeries& a, long n) { return a.coeff(n); }

QSeries operator*(const Rat& c, const QSeries& a) {
    if (c == 0 || a.is_zero()) {
        QSeries s = QSeries::zero(a.prec());
        return a.weight() ? s.with_weight(*a.weight()) : s;
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(a.prec() - a.valuation()));
    for (long n = a.valuation(); n < a.prec(); ++n)
        coeffs[static_cast<std::size_t>(n - a.valuation())] = c * a.coeff(n);
    return QSeries(a.valuation(), std::move(coeffs), a.weight());
}

bool agree_on_overlap(const QSeries& a, const QSeries& b) {
    const long lo = std::min(a.valuation(), b.valuation());
    const long hi = std::min(a.prec(), b.prec());
    for (long n = lo; n < hi; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

}  // namespace mf
