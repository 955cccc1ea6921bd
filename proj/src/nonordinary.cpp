#include "mf/nonordinary.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "mf/classical.hpp"
#include "mf/errors.hpp"
#include "mf/hecke.hpp"
#include "mf/modpseries.hpp"

namespace mf {

namespace {

void require_odd_prime_ge5(long p, const char* where) {
    if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
        throw Error(std::string(where) + ": p must be a prime >= 5, got " + std::to_string(p));
}

void require_even(long k, const char* where) {
    if (k % 2 != 0)
        throw InvalidWeight(std::string(where) + ": weight must be even, got " + std::to_string(k));
}

long to_long_checked(const Int& z, const char* what) {
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        throw Error(std::string(what) + " out of range: " + z.get_str());
    return z.get_si();
}

// 2m/B_m as an integer, via the closed form 432 - 60m - 432(-1)^{m/2};
// cross-checked against the Bernoulli value.
long eisenstein_coeff_constant(long m) {
    const long sign = (m / 2) % 2 == 0 ? 1 : -1;
    const long value = 432 - 60 * m - 432 * sign;
    if (Rat(2 * m) / bernoulli(m) != Rat(value))
        throw Error("2m/B_m closed form mismatch at m = " + std::to_string(m));
    return value;
}

// Least non-negative residue of a p-integral rational.
std::uint64_t residue_of_rat(const Rat& c, long p, long exponent) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p);
    const std::uint64_t den = mod_residue(c.get_den(), pp);
    if (den == 0)
        throw DenominatorDivisibleByP("coefficient at q^" + std::to_string(exponent) +
                                          " has denominator divisible by " + std::to_string(p),
                                      exponent);
    std::uint64_t inv = 1;
    // den^(p-2) mod p
    std::uint64_t base = den, e = pp - 2;
    while (e) {
        if (e & 1) inv = inv * base % pp;
        base = base * base % pp;
        e >>= 1;
    }
    return mod_residue(c.get_num(), pp) * inv % pp;
}

}  // namespace

bool is_admissible_m(long m) {
    return std::find(kAdmissibleM.begin(), kAdmissibleM.end(), m) != kAdmissibleM.end();
}

QSeries g_form(long m, long prec) {
    if (!is_admissible_m(m))
        throw InvalidM("g_form: m must lie in {4, 6, 8, 10, 14}, got " + std::to_string(m));
    const long im = (m / 2) % 2 == 0 ? 1 : -1;
    const long e6 = (1 + im) / 2;
    const long e4 = (m + 1 + 3 * im) / 4;
    QSeries g = multiply(j_invariant(prec + 1), power(eisenstein(4, prec + 2), -e4));
    if (e6 != 0) g = multiply(g, power(eisenstein(6, prec + 2), e6));
    g = g.truncate(prec);
    if (!g.weight() || *g.weight() != 2 - m)
        throw Error("g_form: weight bookkeeping broke");
    return g;
}

Criterion weight_criterion(long k, long p) {
    require_odd_prime_ge5(p, "weight_criterion");
    require_even(k, "weight_criterion");
    for (long m : kAdmissibleM) {
        const long r = (k - m) % (p - 1);
        if (r == 0) return {k, p, m};
    }
    return {k, p, std::nullopt};
}

long part1_minimal_a(long p, long k, long m) {
    long a = 0;
    Int pa(1);
    while ((m - 2) * pa < k - 2) {
        pa *= p;
        ++a;
    }
    return a;
}

Part1Exponents solve_part1(long p, long k, long m, long b) {
    require_odd_prime_ge5(p, "solve_part1");
    require_even(k, "solve_part1");
    if (!is_admissible_m(m))
        throw InvalidM("solve_part1: m must lie in {4, 6, 8, 10, 14}");
    if ((k - m) % (p - 1) != 0)
        throw CriterionFails("solve_part1: (p-1) does not divide k-m for p = " +
                             std::to_string(p) + ", k = " + std::to_string(k) +
                             ", m = " + std::to_string(m));

    const long a = part1_minimal_a(p, k, m);
    if (b < a)
        throw BTooSmall("solve_part1: b = " + std::to_string(b) + " below minimal a = " +
                        std::to_string(a));
    const Int pb = int_pow(Int(p), static_cast<unsigned long>(b));
    const Int c = divexact((m - 2) * pb + 2 - k, Int(p - 1));
    if (c < 0) throw Error("solve_part1: negative c");
    return {p, k, m, a, b, c};
}

Certificate certify_theorem1(const QSeries& f, long k, long p, long m, long b, bool exact) {
    require_odd_prime_ge5(p, "certify_theorem1");
    require_even(k, "certify_theorem1");
    if (!f.weight() || *f.weight() != k)
        throw WeightMismatch("certify_theorem1: f must carry declared weight " +
                             std::to_string(k));

    const Part1Exponents exps = solve_part1(p, k, m, b);
    const Int pa = int_pow(Int(p), static_cast<unsigned long>(exps.a));
    const Int pb = int_pow(Int(p), static_cast<unsigned long>(b));
    if (!(Int(f.valuation()) > -pa))
        throw Error("certify_theorem1: ord_infinity(f) must exceed -p^a");
    if (!(pb < Int(f.prec())))
        throw PrecisionTooSmall("certify_theorem1: need prec(f) > p^b = " + pb.get_str());
    const long pb_l = to_long_checked(pb, "p^b");
    const long c_l = to_long_checked(exps.c, "exponent c");

    // The exact product has weight (2-m)p^b + (p-1)c + k = 2 by construction;
    // refuse to run the vanishing check unless that is so.
    if ((2 - m) * pb + (p - 1) * exps.c + k != 2)
        throw WeightMismatch("certify_theorem1: product weight is not 2");

    Certificate cert;
    cert.kind = "theorem1";
    cert.k = k;
    cert.p = p;
    cert.add_param("m", std::to_string(m));
    cert.add_param("a", std::to_string(exps.a));
    cert.add_param("b", std::to_string(b));
    cert.add_param("c", exps.c.get_str());

    const long w = pb_l + std::max(0L, -f.valuation()) + 2;
    if (exact) {
        const QSeries g_pow = power(g_form(m, w), pb_l);
        const QSeries e_pow = power(eisenstein(p - 1, w + 1), c_l);
        const QSeries product = multiply(multiply(g_pow, e_pow), f);
        if (!product.weight() || *product.weight() != 2)
            throw WeightMismatch("certify_theorem1: declared weights do not sum to 2");
        const Rat ct = product.coeff(0);
        cert.add_check({"constant_term_exact", to_string(ct), "0", ct == 0});
    } else {
        const ModPSeries g_p = reduce_mod_p(g_form(m, w), static_cast<std::uint64_t>(p));
        const ModPSeries f_p = reduce_mod_p(f, static_cast<std::uint64_t>(p));
        const ModPSeries product = multiply(frobenius_power(g_p, pb_l), f_p);
        const std::uint64_t ct = product.coeff(0);
        cert.add_check({"constant_term_mod_p", std::to_string(ct), "0", ct == 0});
    }

    // a_f(p^b) = -(2m/B_m) a_f(0) mod p
    const long constant = eisenstein_coeff_constant(m);
    const std::uint64_t lhs = residue_of_rat(f.coeff(pb_l), p, pb_l);
    const std::uint64_t a0 = residue_of_rat(f.coeff(0), p, 0);
    const std::uint64_t rhs =
        mod_residue(Int(-constant) * Int(static_cast<long>(a0)), static_cast<std::uint64_t>(p));
    cert.add_check({"target_congruence", std::to_string(lhs), std::to_string(rhs), lhs == rhs});

    cert.finalize();
    return cert;
}

std::vector<Part2Decomposition> decompose_part2(long k, long p) {
    require_odd_prime_ge5(p, "decompose_part2");
    require_even(k, "decompose_part2");
    if (k > 2) throw InvalidWeight("decompose_part2: weight must be <= 2");

    const long n = 2 - k;
    std::vector<Part2Decomposition> out;
    if (n % (p - 1) == 0) out.push_back({n / (p - 1), 0, 1});
    long t = 1;
    for (Int pt(p); pt <= n; pt *= p, ++t) {
        for (long s = 1; Int(s) * pt <= n; ++s) {
            if (s == 2) continue;
            const Int rest = n - s * pt;
            if (rest % (p - 1) != 0) continue;
            out.push_back({to_long_checked(rest / (p - 1), "r"), s, t});
        }
    }
    std::sort(out.begin(), out.end(), [](const Part2Decomposition& x, const Part2Decomposition& y) {
        if (x.t != y.t) return x.t > y.t;
        if (x.s != y.s) return x.s > y.s;
        return x.r < y.r;
    });
    for (const Part2Decomposition& d : out)
        if (d.s % 2 != 0) throw Error("decompose_part2: odd s slipped through");
    return out;
}

std::pair<long, long> four_six_rep(long n) {
    if (n == 0) return {0, 0};
    if (n < 0 || n % 2 != 0 || n == 2)
        throw NotRepresentable("four_six_rep: " + std::to_string(n) +
                               " is not of the form 4c1 + 6c2");
    if (n % 4 == 0) return {n / 4, 0};
    return {(n - 6) / 4, 1};
}

Certificate certify_theorem2(const QSeries& f, long k, long p, long u, long v) {
    require_odd_prime_ge5(p, "certify_theorem2");
    require_even(k, "certify_theorem2");
    if (k > 2)
        throw InvalidWeight("certify_theorem2: weight must be <= 2, got " + std::to_string(k));
    if (!f.weight() || *f.weight() != k)
        throw WeightMismatch("certify_theorem2: f must carry declared weight " +
                             std::to_string(k));
    if (u < 1 || v < u)
        throw Error("certify_theorem2: need 1 <= u <= v");

    // First decomposition that covers v; s = 0 covers any t.
    const std::vector<Part2Decomposition> decs = decompose_part2(k, p);
    const Part2Decomposition* selected = nullptr;
    for (const Part2Decomposition& d : decs)
        if (d.s == 0 || d.t >= v) {
            selected = &d;
            break;
        }
    if (!selected)
        throw NoDecomposition("certify_theorem2: no decomposition 2-k = r(p-1) + s p^t with t >= " +
                              std::to_string(v));

    Part2Exponents exps;
    exps.p = p;
    exps.k = k;
    exps.r = selected->r;
    exps.s = selected->s;
    exps.t = selected->s == 0 ? v : selected->t;  // t is free when s = 0
    exps.u = u;
    exps.v = v;

    const Int pu = int_pow(Int(p), static_cast<unsigned long>(u));
    const Int pv = int_pow(Int(p), static_cast<unsigned long>(v));
    if (!(Int(f.valuation()) > -pu))
        throw Error("certify_theorem2: ord_infinity(f) must exceed -p^u");
    if (!(pv < Int(f.prec())))
        throw PrecisionTooSmall("certify_theorem2: need prec(f) > p^v = " + pv.get_str());
    const long pu_l = to_long_checked(pu, "p^u");
    const long pv_l = to_long_checked(pv, "p^v");

    const long su = to_long_checked(
        Int(exps.s) * int_pow(Int(p), static_cast<unsigned long>(exps.t - u)), "s p^{t-u}");
    const long sv = to_long_checked(
        Int(exps.s) * int_pow(Int(p), static_cast<unsigned long>(exps.t - v)), "s p^{t-v}");
    std::tie(exps.c1, exps.c2) = four_six_rep(su);
    std::tie(exps.c1p, exps.c2p) = four_six_rep(sv);
    const long r = exps.r;
    const long c1 = exps.c1, c2 = exps.c2, c1p = exps.c1p, c2p = exps.c2p;

    Certificate cert;
    cert.kind = "theorem2";
    cert.k = k;
    cert.p = p;
    cert.add_param("r", std::to_string(exps.r));
    cert.add_param("s", std::to_string(exps.s));
    cert.add_param("t", std::to_string(exps.t));
    cert.add_param("u", std::to_string(exps.u));
    cert.add_param("v", std::to_string(exps.v));
    cert.add_param("c1", std::to_string(exps.c1));
    cert.add_param("c2", std::to_string(exps.c2));
    cert.add_param("c1p", std::to_string(exps.c1p));
    cert.add_param("c2p", std::to_string(exps.c2p));

    const long we = std::max(pu_l, pv_l) + std::max(0L, -f.valuation()) + 2;
    const QSeries e4 = eisenstein(4, we);
    const QSeries e6 = eisenstein(6, we);
    const QSeries ep_pow = power(eisenstein(p - 1, we), r);

    // (i) weight-2 product for the constant-term statement at u
    {
        const QSeries inner = multiply(power(e4, c1), power(e6, c2));
        const QSeries product = multiply(multiply(power(inner, pu_l), ep_pow), f);
        if (!product.weight() || *product.weight() != 2)
            throw WeightMismatch("certify_theorem2: product (i) weight is not 2");
        const Rat ct = product.coeff(0);
        cert.add_check({"constant_term_u", to_string(ct), "0", ct == 0});
    }

    // (ii) a_f(0) = 0 mod p
    const std::uint64_t a0 = residue_of_rat(f.coeff(0), p, 0);
    cert.add_check({"af0_mod_p", std::to_string(a0), "0", a0 == 0});

    // (iii) weight-2 product with j^{p^v} for the statement at v
    {
        const QSeries j_pow = power(j_invariant(pv_l + std::max(0L, -f.valuation()) + 2), pv_l);
        const QSeries inner = multiply(power(e4, c1p), power(e6, c2p));
        const QSeries product =
            multiply(multiply(multiply(j_pow, power(inner, pv_l)), ep_pow), f);
        if (!product.weight() || *product.weight() != 2)
            throw WeightMismatch("certify_theorem2: product (iii) weight is not 2");
        const Rat ct = product.coeff(0);
        cert.add_check({"constant_term_v", to_string(ct), "0", ct == 0});
    }

    // (iv) a_f(p^v) = 0 mod p via a_f(p^v) + (744 + 240 c1' - 504 c2') a_f(0) = 0
    {
        const std::uint64_t apv = residue_of_rat(f.coeff(pv_l), p, pv_l);
        const Int combined = Int(static_cast<long>(apv)) +
                             Int(744 + 240 * c1p - 504 * c2p) * Int(static_cast<long>(a0));
        const bool congruence = mod_residue(combined, static_cast<std::uint64_t>(p)) == 0;
        cert.add_check({"af_pv_mod_p", std::to_string(apv), "0", congruence && apv == 0});
    }

    cert.finalize();
    return cert;
}

Certificate certify_hatada(long k, long p) {
    require_even(k, "certify_hatada");
    Certificate cert;
    cert.kind = "hatada";
    cert.k = k;
    cert.p = p;
    cert.add_check({"p_in_{2,3}", std::to_string(p), "2 or 3", p == 2 || p == 3});
    cert.add_check({"weight_at_least_12", std::to_string(k), ">= 12", k >= 12});
    cert.finalize();
    return cert;
}

Certificate certify_weight_criterion(long k, long p) {
    const Criterion crit = weight_criterion(k, p);
    if (!crit.m)
        throw CriterionFails("weight criterion fails: no m in {4,6,8,10,14} with (p-1) | (k-m)" +
                             std::string(" for k = ") + std::to_string(k) + ", p = " +
                             std::to_string(p));
    const long m = *crit.m;
    const Part1Exponents exps = solve_part1(p, k, m, part1_minimal_a(p, k, m));

    Certificate cert;
    cert.kind = "weight-criterion";
    cert.k = k;
    cert.p = p;
    cert.add_param("m", std::to_string(m));
    cert.add_param("a", std::to_string(exps.a));
    cert.add_param("b", std::to_string(exps.b));
    cert.add_param("c", exps.c.get_str());

    const long residue = ((k - m) % (p - 1) + (p - 1)) % (p - 1);
    cert.add_check({"criterion_divisibility", std::to_string(residue), "0", residue == 0});

    const Int pa = int_pow(Int(p), static_cast<unsigned long>(exps.a));
    cert.add_check({"a_bound",
                    (Int(k - 2)).get_str() + " <= " + Int((m - 2) * pa).get_str(),
                    "k-2 <= (m-2)p^a", k - 2 <= (m - 2) * pa});
    const Int combination = exps.c * (p - 1) - (m - 2) * pa;
    cert.add_check({"exponent_identity", combination.get_str(), std::to_string(2 - k),
                    Int(2 - k) == combination});

    cert.finalize();
    return cert;
}

Certificate certify_nilpotency(long k, long p) {
    const auto [nonordinary, data] = is_nonordinary_space(k, p);
    Certificate cert;
    cert.kind = "nilpotency";
    cert.k = k;
    cert.p = p;
    const long dim = static_cast<long>(data.matrix.dim());
    cert.add_param("dim", std::to_string(dim));
    cert.add_param("charpoly", poly_str(data.charpoly));
    cert.add_check({"charpoly_mod_p", poly_mod_str(data.charpoly_mod_p),
                    dim > 1 ? "x^" + std::to_string(dim) : "x", nonordinary});
    cert.finalize();
    return cert;
}

namespace {

std::vector<long> strip_23(const std::vector<long>& primes, const char* where) {
    std::vector<long> out;
    for (long p : primes) {
        if (p == 2 || p == 3) continue;
        require_odd_prime_ge5(p, where);
        out.push_back(p);
    }
    return out;
}

}  // namespace

long family_weight(const std::vector<long>& primes, long j, long m) {
    if (j < 0) throw Error("family_weight: j must be non-negative");
    if (!is_admissible_m(m)) throw InvalidM("family_weight: m must lie in {4, 6, 8, 10, 14}");
    const std::vector<long> ps = strip_23(primes, "family_weight");
    if (ps.empty()) throw Error("family_weight: need at least one prime >= 5");
    Int product(1);
    for (long p : ps) product *= (p - 1);
    return to_long_checked(Int(j) * product + m, "family weight");
}

long family_b(const std::vector<long>& primes, long k, long m) {
    if (!is_admissible_m(m)) throw InvalidM("family_b: m must lie in {4, 6, 8, 10, 14}");
    require_even(k, "family_b");
    const std::vector<long> ps = strip_23(primes, "family_b");
    if (ps.empty()) throw Error("family_b: need at least one prime >= 5");
    long b = 0;
    for (long p : ps) {
        long bp = 0;
        Int pb(1);
        while (!(k - 2 < (m - 2) * pb)) {
            pb *= p;
            ++bp;
        }
        b = std::max(b, bp);
    }
    return b;
}

}  // namespace mf
