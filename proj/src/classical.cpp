#include "mf/classical.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "mf/errors.hpp"

namespace mf {

namespace {
std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_cache;  // guarded by bernoulli_mutex
}  // namespace

Rat bernoulli(long k) {
    if (k < 0) throw Error("bernoulli: negative index");
    if (k % 2 == 1 && k > 1) return Rat(0);
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) {
        bernoulli_cache.push_back(Rat(1));
        bernoulli_cache.push_back(make_rat(-1, 2));
    }
    // sum_{i=0}^{n} C(n+1, i) B_i = 0 for n >= 1
    while (static_cast<long>(bernoulli_cache.size()) <= k) {
        const long n = static_cast<long>(bernoulli_cache.size());
        Rat acc(0);
        for (long i = 0; i < n; ++i)
            acc += Rat(binomial(static_cast<unsigned long>(n + 1),
                                static_cast<unsigned long>(i))) *
                   bernoulli_cache[static_cast<std::size_t>(i)];
        bernoulli_cache.push_back(-acc / Rat(n + 1));
    }
    return bernoulli_cache[static_cast<std::size_t>(k)];
}

Int sigma(long n, long e) {
    if (n <= 0) throw Error("sigma: n must be positive");
    Int total(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += int_pow(Int(d), static_cast<unsigned long>(e));
        const long codivisor = n / d;
        if (codivisor != d)
            total += int_pow(Int(codivisor), static_cast<unsigned long>(e));
    }
    return total;
}

QSeries eisenstein(long k, long prec) {
    if (prec < 1) throw Error("eisenstein: prec must be positive");
    if (k == 0) return QSeries::one(prec);
    if (k < 4 || k % 2 != 0)
        throw InvalidWeight("eisenstein: weight must be 0 or an even integer >= 4, got " +
                            std::to_string(k));
    const Rat factor = Rat(-2 * k) / bernoulli(k);
    std::vector<Rat> coeffs(static_cast<std::size_t>(prec));
    coeffs[0] = Rat(1);
    for (long n = 1; n < prec; ++n)
        coeffs[static_cast<std::size_t>(n)] = factor * Rat(sigma(n, k - 1));
    return QSeries(0, std::move(coeffs), k);
}

QSeries delta(long prec) {
    if (prec < 2) return QSeries::zero(prec).with_weight(12);
    // q * prod_{n>=1} (1 - q^n)^24, factors expanded binomially and folded
    // in with truncation at window length prec - 1.
    const long window = prec - 1;
    std::vector<Int> acc(static_cast<std::size_t>(window), Int(0));
    acc[0] = 1;
    std::vector<Int> next(static_cast<std::size_t>(window));
    for (long n = 1; n < window; ++n) {
        std::fill(next.begin(), next.end(), Int(0));
        for (long i = 0; i * n < window && i <= 24; ++i) {
            Int c = binomial(24, static_cast<unsigned long>(i));
            if (i % 2 == 1) c = -c;
            for (long m = 0; m + i * n < window; ++m) {
                if (acc[static_cast<std::size_t>(m)] == 0) continue;
                next[static_cast<std::size_t>(m + i * n)] +=
                    c * acc[static_cast<std::size_t>(m)];
            }
        }
        acc.swap(next);
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(window));
    for (long m = 0; m < window; ++m)
        coeffs[static_cast<std::size_t>(m)] = Rat(acc[static_cast<std::size_t>(m)]);
    return QSeries(1, std::move(coeffs), 12);
}

QSeries j_invariant(long prec) {
    const QSeries e4cubed = power(eisenstein(4, prec + 1), 3);
    const QSeries delta_inv = power(delta(prec + 2), -1);
    return multiply(e4cubed, delta_inv);  // prec = min(prec+1-1, prec+0) = prec
}

long delta_residue(long k) {
    if (k % 2 != 0) throw OddWeight("delta_residue: weight must be even");
    long r = k % 12;
    if (r < 0) r += 12;
    return r == 2 ? 14 : r;
}

QSeries weight2_form(std::span<const Rat> poly, long prec) {
    if (poly.empty()) throw Error("weight2_form: polynomial must be nonempty");
    const long degree = static_cast<long>(poly.size()) - 1;
    // j^degree costs degree units of window; the final division by Delta two more.
    const long work = prec + degree + 2;
    const QSeries j = j_invariant(work - 1);
    QSeries pj = QSeries::monomial(poly[static_cast<std::size_t>(degree)], 0, work, 0);
    for (long i = degree - 1; i >= 0; --i) {
        pj = multiply(pj, j);
        pj = add(pj, QSeries::monomial(poly[static_cast<std::size_t>(i)], 0, work, 0));
    }
    const QSeries e14 = eisenstein(14, work);
    const QSeries delta_inv = power(delta(work), -1);
    QSeries result = multiply(multiply(pj, e14), delta_inv);
    if (result.prec() < prec)
        throw PrecisionTooSmall("weight2_form: internal window fell short");
    return result.truncate(prec).with_weight(2);
}

}  // namespace mf
