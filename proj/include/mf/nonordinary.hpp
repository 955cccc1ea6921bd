#ifndef MF_NONORDINARY_HPP
#define MF_NONORDINARY_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mf/certificate.hpp"
#include "mf/qseries.hpp"

namespace mf {

/// The admissible weights A: E_m has weight m and g_m has weight 2 - m.
inline constexpr std::array<long, 5> kAdmissibleM = {4, 6, 8, 10, 14};

bool is_admissible_m(long m);

/// The weakly holomorphic form g_m = j * E6^{(1+i^m)/2} / E4^{(m+1+3i^m)/4}
/// with i^m = (-1)^{m/2}; leading term q^-1, declared weight 2 - m.
/// Concretely: g_4 = j E6/E4^2, g_6 = j/E4, g_8 = j E6/E4^3,
/// g_10 = j/E4^2, g_14 = j/E4^3.
QSeries g_form(long m, long prec);

/// Weight criterion at (k, p): the smallest m in A with (p-1) | (k-m).
struct Criterion {
    long k;
    long p;
    std::optional<long> m;
};

Criterion weight_criterion(long k, long p);

/// Exponents for the part-1 certificate: a minimal with k-2 <= (m-2)p^a,
/// b >= a, and c >= 0 with 2-k = c(p-1) - (m-2)p^b.
struct Part1Exponents {
    long p;
    long k;
    long m;
    long a;
    long b;
    Int c;
};

/// Smallest a >= 0 with k - 2 <= (m-2) p^a; the default (and minimal) b.
long part1_minimal_a(long p, long k, long m);

/// Throws CriterionFails when (p-1) does not divide k-m, BTooSmall when b < a.
Part1Exponents solve_part1(long p, long k, long m, long b);

/// Part-1 certificate for f of declared weight k: the weight-2 product
/// g_m^{p^b} E_{p-1}^c f has vanishing constant term (checked exactly in
/// exact mode, or mod p through Frobenius powering in mod-p mode), and
/// a_f(p^b) = -(2m/B_m) a_f(0) mod p with 2m/B_m = 432 - 60m - 432(-1)^{m/2}.
/// Failed checks are recorded in the certificate, not thrown.
Certificate certify_theorem1(const QSeries& f, long k, long p, long m, long b,
                             bool exact = true);

/// One solution of 2 - k = r(p-1) + s p^t.
struct Part2Decomposition {
    long r;
    long s;
    long t;

    bool operator==(const Part2Decomposition&) const = default;
};

/// All decompositions 2-k = r(p-1) + s p^t with r, s >= 0, s != 2, t >= 1,
/// s p^t <= 2-k, sorted by t descending then s descending.  When s = 0 the
/// value of t is immaterial; such solutions are listed once with t = 1.
/// Empty result is a valid answer.  Every returned s is even.
std::vector<Part2Decomposition> decompose_part2(long k, long p);

/// The representation 4 c1 + 6 c2 = n with maximal c1 (so c2 in {0, 1}).
/// Throws NotRepresentable for odd n and for n = 2.
std::pair<long, long> four_six_rep(long n);

/// Exponents for the part-2 certificate.
struct Part2Exponents {
    long p;
    long k;
    long r;
    long s;
    long t;
    long u;
    long v;
    long c1;
    long c2;
    long c1p;
    long c2p;
};

/// Part-2 certificate for f of declared weight k <= 2: constant terms of
/// (E4^c1 E6^c2)^{p^u} E_{p-1}^r f and j^{p^v} (E4^c1' E6^c2')^{p^v} E_{p-1}^r f
/// vanish exactly, and a_f(0) = a_f(p^v) = 0 mod p.  Uses the first
/// decomposition (in decompose_part2 order) whose t covers v; s = 0
/// solutions cover any v.  Throws NoDecomposition when none fits.
Certificate certify_theorem2(const QSeries& f, long k, long p, long u, long v);

/// Unconditional non-ordinarity at p = 2, 3 for all eigenforms of even
/// weight k >= 12.
Certificate certify_hatada(long k, long p);

/// Arithmetic-only certificate that the weight criterion holds at (k, p):
/// records m, the minimal a, b = a and c, and checks the defining identities.
Certificate certify_weight_criterion(long k, long p);

/// Nilpotency certificate: charpoly(T_p on S_k) = x^{dim S_k} mod p.
Certificate certify_nilpotency(long k, long p);

/// k_S(j, m) = j * prod_{p in S}(p-1) + m; satisfies the weight criterion
/// with this m at every p in S.  Primes 2 and 3 are ignored (they are
/// unconditional).
long family_weight(const std::vector<long>& primes, long j, long m);

/// Smallest b >= 0 with k - 2 < (m-2) p^b for every p in S (2 and 3 ignored).
long family_b(const std::vector<long>& primes, long k, long m);

}  // namespace mf

#endif
