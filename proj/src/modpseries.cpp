#include "mf/modpseries.hpp"

#include <algorithm>
#include <sstream>

namespace mf {

namespace {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// p prime
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void check_modulus(std::uint64_t p) {
    if (p >= (1ull << 31) || !is_prime(p))
        throw Error("ModPSeries: modulus must be a prime < 2^31");
}

}  // namespace

ModPSeries::ModPSeries(std::uint64_t p, long valuation, std::vector<std::uint64_t> coeffs,
                       std::optional<long> weight)
    : p_(p),
      val_(valuation),
      prec_(valuation + static_cast<long>(coeffs.size())),
      coeffs_(std::move(coeffs)),
      zero_(false),
      weight_(weight) {
    check_modulus(p);
    if (coeffs_.empty()) throw Error("ModPSeries: empty coefficient window");
    for (std::uint64_t& c : coeffs_)
        if (c >= p_) throw Error("ModPSeries: residue out of range [0, p)");
    normalize();
}

ModPSeries ModPSeries::zero(std::uint64_t p, long prec) {
    check_modulus(p);
    ModPSeries s;
    s.p_ = p;
    s.val_ = prec;
    s.prec_ = prec;
    s.zero_ = true;
    return s;
}

ModPSeries ModPSeries::one(std::uint64_t p, long prec) {
    if (prec <= 0) throw Error("ModPSeries::one: prec must be positive");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(prec), 0);
    c[0] = 1;
    return ModPSeries(p, 0, std::move(c), 0);
}

void ModPSeries::normalize() {
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

std::uint64_t ModPSeries::coeff(long n) const {
    if (n >= prec_)
        throw BeyondPrecision("coefficient at q^" + std::to_string(n) +
                              " requested, series only known mod O(q^" +
                              std::to_string(prec_) + ")");
    if (zero_ || n < val_) return 0;
    return coeffs_[static_cast<std::size_t>(n - val_)];
}

ModPSeries ModPSeries::truncate(long new_prec) const {
    if (new_prec > prec_)
        throw BeyondPrecision("truncate beyond known precision");
    if (zero_ || new_prec <= val_) {
        ModPSeries s = zero(p_, new_prec);
        s.weight_ = weight_;
        return s;
    }
    ModPSeries s(*this);
    s.prec_ = new_prec;
    s.coeffs_.resize(static_cast<std::size_t>(new_prec - val_));
    s.normalize();
    return s;
}

ModPSeries ModPSeries::with_weight(long w) const {
    ModPSeries s(*this);
    s.weight_ = w;
    return s;
}

std::string ModPSeries::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(q^" << prec_ << ") mod " << p_;
        return os.str();
    }
    bool first = true;
    for (long n = val_; n < prec_; ++n) {
        if (coeff(n) == 0) continue;
        if (!first) os << " + ";
        os << coeff(n);
        if (n != 0) os << "*q^" << n;
        first = false;
    }
    os << " + O(q^" << prec_ << ") mod " << p_;
    return os.str();
}

bool operator==(const ModPSeries& a, const ModPSeries& b) {
    return a.p_ == b.p_ && a.zero_ == b.zero_ && a.val_ == b.val_ &&
           a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
}

namespace {

void check_same_modulus(const ModPSeries& a, const ModPSeries& b) {
    if (a.modulus() != b.modulus())
        throw Error("mixed moduli: " + std::to_string(a.modulus()) + " vs " +
                    std::to_string(b.modulus()));
}

std::optional<long> add_weight(const ModPSeries& a, const ModPSeries& b) {
    if (a.is_zero()) return b.weight();
    if (b.is_zero()) return a.weight();
    if (a.weight() && b.weight() && *a.weight() == *b.weight()) return a.weight();
    return std::nullopt;
}

}  // namespace

ModPSeries add(const ModPSeries& a, const ModPSeries& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    const long prec = std::min(a.prec(), b.prec());
    const long val = std::min(a.valuation(), b.valuation());
    std::optional<long> w = add_weight(a, b);
    if (val >= prec) {
        ModPSeries s = ModPSeries::zero(p, prec);
        return w ? s.with_weight(*w) : s;
    }
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(prec - val));
    for (long n = val; n < prec; ++n)
        coeffs[static_cast<std::size_t>(n - val)] = (a.coeff(n) + b.coeff(n)) % p;
    return ModPSeries(p, val, std::move(coeffs), w);
}

ModPSeries multiply(const ModPSeries& a, const ModPSeries& b) {
    check_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    const long prec = std::min(a.prec() + b.valuation(), b.prec() + a.valuation());
    std::optional<long> w;
    if (a.weight() && b.weight()) w = *a.weight() + *b.weight();
    const long val = a.valuation() + b.valuation();
    if (a.is_zero() || b.is_zero() || val >= prec) {
        ModPSeries s = ModPSeries::zero(p, prec);
        return w ? s.with_weight(*w) : s;
    }
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(prec - val), 0);
    for (long i = a.valuation(); i < a.prec(); ++i) {
        const std::uint64_t ai = a.coeff(i);
        if (ai == 0) continue;
        const long jmax = std::min(b.prec() - 1, prec - 1 - i);
        for (long j = b.valuation(); j <= jmax; ++j) {
            std::uint64_t& slot = coeffs[static_cast<std::size_t>(i + j - val)];
            slot = (slot + ai * b.coeff(j)) % p;
        }
    }
    return ModPSeries(p, val, std::move(coeffs), w);
}

ModPSeries power(const ModPSeries& a, long e) {
    if (e < 0) throw Error("ModPSeries power: negative exponents not supported");
    if (a.is_zero()) {
        if (e == 0) return ModPSeries::one(a.modulus(), 1);
        ModPSeries s = ModPSeries::zero(a.modulus(), a.prec() * e);
        return a.weight() ? s.with_weight(*a.weight() * e) : s;
    }
    ModPSeries result = ModPSeries::one(a.modulus(), a.prec() - a.valuation());
    ModPSeries base = a;
    long r = e;
    while (r > 0) {
        if (r & 1) result = multiply(result, base);
        r >>= 1;
        if (r > 0) base = multiply(base, base);
    }
    if (a.weight())
        result = result.with_weight(*a.weight() * e);
    return result;
}

std::uint64_t coefficient(const ModPSeries& a, long n) { return a.coeff(n); }

namespace {

// q -> q^p substitution: realizes a(q)^p mod p with window scaled by p.
ModPSeries substitute_qp(const ModPSeries& a) {
    const long p = static_cast<long>(a.modulus());
    std::optional<long> w;
    if (a.weight()) w = *a.weight() * p;
    if (a.is_zero()) {
        ModPSeries s = ModPSeries::zero(a.modulus(), a.prec() * p);
        return w ? s.with_weight(*w) : s;
    }
    const long val = a.valuation() * p;
    const long prec = a.prec() * p;
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(prec - val), 0);
    for (long n = a.valuation(); n < a.prec(); ++n)
        coeffs[static_cast<std::size_t>((n - a.valuation()) * p)] = a.coeff(n);
    return ModPSeries(a.modulus(), val, std::move(coeffs), w);
}

}  // namespace

ModPSeries frobenius_power(const ModPSeries& a, long e) {
    if (e < 0) throw Error("frobenius_power: exponent must be non-negative");
    if (e == 0) return power(a, 0);
    const long p = static_cast<long>(a.modulus());
    long rest = e;
    int frob_steps = 0;
    while (rest % p == 0) {
        rest /= p;
        ++frob_steps;
    }
    ModPSeries result = power(a, rest);
    for (int i = 0; i < frob_steps; ++i) result = substitute_qp(result);
    return result;
}

bool agree_on_overlap(const ModPSeries& a, const ModPSeries& b) {
    if (a.modulus() != b.modulus()) return false;
    const long lo = std::min(a.valuation(), b.valuation());
    const long hi = std::min(a.prec(), b.prec());
    for (long n = lo; n < hi; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

ModPSeries reduce_mod_p(const QSeries& a, std::uint64_t p) {
    if (p >= (1ull << 31) || !is_prime(p))
        throw Error("reduce_mod_p: modulus must be a prime < 2^31");
    if (a.is_zero()) {
        ModPSeries s = ModPSeries::zero(p, a.prec());
        return a.weight() ? s.with_weight(*a.weight()) : s;
    }
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(a.prec() - a.valuation()));
    for (long n = a.valuation(); n < a.prec(); ++n) {
        const Rat& c = a.coeff(n);
        const std::uint64_t den = mod_residue(c.get_den(), p);
        if (den == 0)
            throw DenominatorDivisibleByP(
                "coefficient at q^" + std::to_string(n) + " has denominator divisible by " +
                    std::to_string(p),
                n);
        const std::uint64_t num = mod_residue(c.get_num(), p);
        coeffs[static_cast<std::size_t>(n - a.valuation())] = num * inv_mod(den, p) % p;
    }
    return ModPSeries(p, a.valuation(), std::move(coeffs), a.weight());
}

}  // namespace mf
