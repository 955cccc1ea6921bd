// Acceptance suite: one pass/fail line per criterion, exit code = failures.
// Every tolerance is exact; the printed budget is the expected wall-clock
// bound for the criterion on commodity hardware.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "mf/classical.hpp"
#include "mf/errors.hpp"
#include "mf/form_parser.hpp"
#include "mf/hecke.hpp"
#include "mf/modpseries.hpp"
#include "mf/nonordinary.hpp"
#include "mf/table.hpp"

using namespace mf;

namespace {

struct Failure : std::runtime_error {
    explicit Failure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool condition, const std::string& what) {
    if (!condition) throw Failure(what);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string getenv_or_fail(const char* name) {
    const char* value = std::getenv(name);
    if (!value) throw Failure(std::string(name) + " is not set");
    return value;
}

// golden values: a(1)..a(19) of the weight-26 eigenform
const std::vector<std::string> kGoldenF26 = {
    "1",
    "-48",
    "-195804",
    "-33552128",
    "-741989850",
    "9398592",
    "39080597192",
    "3221114880",
    "-808949403027",
    "35615512800",
    "8419515299052",
    "6569640870912",
    "-81651045335314",
    "-1875868665216",
    "145284580589400",
    "1125667983917056",
    "-2519900028948078",
    "38829571345296",
    "-6082056370308940",
};

const std::vector<long> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};

// ---------------------------------------------------------------- criteria

void criterion1_table() {
    const std::string bin = getenv_or_fail("NONORD_BIN");
    const std::string golden = read_file(getenv_or_fail("TESTDATA_DIR") + "/table_reference.csv");
    const std::string out_path = "acceptance_table.csv";
    const std::string command = bin + " table --primes 2,3,5,7,11,13,17,19 --range 12..42 --out " +
                                out_path + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "table command failed");
    const std::string produced = read_file(out_path);
    std::remove(out_path.c_str());
    require(produced == golden, "table differs from the committed grid");

    // spot-check the row sets straight from the library as well
    const NonordinaryTable table = nonordinary_table(kPrimes, 12, 42);
    std::set<long> row19;
    for (std::size_t ki = 0; ki < table.weights.size(); ++ki)
        if (table.cell(7, ki).present) row19.insert(table.weights[ki]);
    require(row19 == std::set<long>{14, 22, 24, 26, 28, 32, 40, 42}, "row 19 mismatch");
}

void criterion2_f26_golden() {
    const QSeries composed =
        multiply(multiply(delta(20), eisenstein(6, 20)), power(eisenstein(4, 20), 2));
    const QSeries eigen = eigenform(26, 20);
    for (long n = 1; n <= 19; ++n) {
        const Rat expected = Rat(Int(kGoldenF26[static_cast<std::size_t>(n - 1)]));
        require(coefficient(composed, n) == expected,
                "delta E6 E4^2 coefficient differs at q^" + std::to_string(n));
        require(coefficient(eigen, n) == expected,
                "eigenform coefficient differs at q^" + std::to_string(n));
    }
}

void criterion3_f26_nonordinary() {
    for (long p : kPrimes) {
        const Int ap(kGoldenF26[static_cast<std::size_t>(p - 1)]);
        require(mod_residue(ap, static_cast<std::uint64_t>(p)) == 0,
                "a(" + std::to_string(p) + ") is not 0 mod " + std::to_string(p));
    }
}

void criterion4_theorem1_certificate() {
    const Part1Exponents exps = solve_part1(5, 26, 6, 2);
    require(exps.c == 19, "c != 19");

    const QSeries f26 = eigenform(26, 40);

    const auto exact_start = std::chrono::steady_clock::now();
    const Certificate exact = certify_theorem1(f26, 26, 5, 6, 2, true);
    const double exact_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - exact_start).count();
    require(exact.verified, "exact certificate not verified");
    require(exact.checks.size() == 2 && exact.checks[0].name == "constant_term_exact" &&
                exact.checks[0].observed == "0",
            "constant term of g_6^25 E_4^19 f_26 is not exactly 0");
    require(exact.checks[1].pass && exact.checks[1].observed == "0",
            "a_f(25) is not 0 mod 5");

    const auto modp_start = std::chrono::steady_clock::now();
    const Certificate modp = certify_theorem1(f26, 26, 5, 6, 2, false);
    const double modp_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - modp_start).count();
    require(modp.verified, "mod-p certificate not verified");

    std::cout << "      (exact mode " << exact_seconds << "s, mod-p mode " << modp_seconds
              << "s)\n";
}

void criterion5_theorem2_certificate() {
    const QSeries f = parse_form("E4*E6*delta^-1", 12);
    require(coefficient(f, 0) == Rat(-240), "a_f(0) != -240");
    const Certificate cert = certify_theorem2(f, -2, 5, 1, 1);
    require(cert.verified, "certificate not verified");
    for (const CertCheck& check : cert.checks)
        require(check.pass, "check failed: " + check.name);
    require(cert.checks[0].name == "constant_term_u" && cert.checks[0].observed == "0",
            "constant term of E4 f is not exactly 0");
    require(cert.checks[2].name == "constant_term_v" && cert.checks[2].observed == "0",
            "constant term of j^5 E4 f is not exactly 0");
}

void criterion6_eisenstein_congruence() {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) {
        const ModPSeries reduced =
            reduce_mod_p(eisenstein(p - 1, 200), static_cast<std::uint64_t>(p));
        require(reduced == ModPSeries::one(static_cast<std::uint64_t>(p), 200),
                "E_{p-1} != 1 mod p at p = " + std::to_string(p));
    }
}

void criterion7_weight2_constant_terms() {
    std::mt19937_64 rng(7321);
    std::uniform_int_distribution<long> coeff_dist(-1000, 1000);
    std::uniform_int_distribution<int> degree_dist(0, 8);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rat> poly(static_cast<std::size_t>(degree_dist(rng)) + 1);
        for (Rat& c : poly) c = Rat(coeff_dist(rng));
        const QSeries h = weight2_form(poly, 64);
        require(coefficient(h, 0) == 0, "constant term of P(j) E14/Delta is nonzero");
    }
    const std::vector<Rat> one_poly = {Rat(1)};
    const QSeries h = weight2_form(one_poly, 64);
    const QSeries j = j_invariant(64);
    for (long n = -1; n < 64; ++n)
        require(coefficient(h, n) == Rat(-n) * coefficient(j, n),
                "E14/Delta coefficient differs from -n c_j(n) at n = " + std::to_string(n));
}

void criterion8_hatada() {
    for (long p : {2L, 3L})
        for (long k = 12; k <= 42; k += 2) {
            const long dim_s = dimensions(k).dim_s;
            if (dim_s < 1) continue;  // no eigenforms to constrain
            const auto [nonordinary, data] = is_nonordinary_space(k, p);
            require(nonordinary, "charpoly(T_" + std::to_string(p) + " on S_" +
                                     std::to_string(k) + ") != x^dim mod p");
        }
}

void criterion9_criterion_soundness() {
    for (long k = 12; k <= 60; k += 2)
        for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) {
            if (!weight_criterion(k, p).m) continue;
            if (dimensions(k).dim_s < 1) continue;  // vacuously non-ordinary
            require(is_nonordinary_space(k, p).first,
                    "criterion holds but nilpotency fails at (k, p) = (" + std::to_string(k) +
                        ", " + std::to_string(p) + ")");
        }
}

QSeries random_series(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> val_dist(-3, 3);
    std::uniform_int_distribution<long> window_dist(3, 9);
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 3);
    std::vector<Rat> coeffs(static_cast<std::size_t>(window_dist(rng)));
    for (Rat& c : coeffs) c = make_rat(num_dist(rng), den_dist(rng));
    if (coeffs[0] == 0) coeffs[0] = 1;
    return QSeries(val_dist(rng), std::move(coeffs));
}

void criterion10_property_suites() {
    // ring laws
    std::mt19937_64 rng(123123);
    for (int trial = 0; trial < 100; ++trial) {
        const QSeries a = random_series(rng);
        const QSeries b = random_series(rng);
        const QSeries c = random_series(rng);
        require(a * b == b * a, "commutativity");
        require((a * b) * c == a * (b * c), "associativity");
        require((a + b) + c == a + (b + c), "additive associativity");
        require(agree_on_overlap(a * (b + c), a * b + a * c), "distributivity");
    }

    // Frobenius power vs literal power through e = 125
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
        std::uniform_int_distribution<std::uint64_t> coeff_dist(0, p - 1);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<std::uint64_t> coeffs(6);
            for (std::uint64_t& c : coeffs) c = coeff_dist(rng);
            if (coeffs[0] == 0) coeffs[0] = 1;
            const ModPSeries a(p, -1, coeffs);
            for (long e = 0; e <= 125; ++e)
                require(agree_on_overlap(frobenius_power(a, e), power(a, e)),
                        "frobenius_power differs from the literal power");
        }
    }

    // Miller bases through weight 60 at precision 200
    for (long k = 12; k <= 60; k += 2) {
        const FormSpace space = miller_basis(k, 200);
        for (long i = 0; i < space.dim_m; ++i) {
            const QSeries& f = space.basis[static_cast<std::size_t>(i)];
            require(f.is_integral(), "non-integral Miller basis");
            require(f.valuation() == i && f.coeff(i) == 1, "lost unitriangularity");
            for (long n = 0; n < space.dim_m; ++n)
                if (n != i && f.coeff(n) != 0) throw Failure("lost unitriangularity");
        }
    }

    // Hecke commutativity samples
    for (long k = 24; k <= 42; k += 2) {
        const long prec = 5 * dimensions(k).dim_s + 1;
        const IntMatrix t2 = hecke_matrix(k, 2, prec).matrix;
        const IntMatrix t3 = hecke_matrix(k, 3, prec).matrix;
        const IntMatrix t5 = hecke_matrix(k, 5, prec).matrix;
        require(t2 * t3 == t3 * t2 && t2 * t5 == t5 * t2 && t3 * t5 == t5 * t3,
                "Hecke operators do not commute at k = " + std::to_string(k));
    }

    // four_six_rep exhaustive through 200
    for (long n = 0; n <= 200; ++n) {
        long best_c1 = -1;
        for (long x = 0; 4 * x <= n; ++x)
            if ((n - 4 * x) % 6 == 0) best_c1 = std::max(best_c1, x);
        if (best_c1 < 0) {
            try {
                four_six_rep(n);
                throw Failure("four_six_rep accepted unrepresentable " + std::to_string(n));
            } catch (const NotRepresentable&) {
            }
        } else {
            const auto [c1, c2] = four_six_rep(n);
            require(4 * c1 + 6 * c2 == n && c1 == best_c1,
                    "four_six_rep wrong at n = " + std::to_string(n));
        }
    }

    // 2m/B_m closed form on A
    for (long m : kAdmissibleM) {
        const long sign = (m / 2) % 2 == 0 ? 1 : -1;
        require(Rat(2 * m) / bernoulli(m) == Rat(432 - 60 * m - 432 * sign),
                "2m/B_m identity fails at m = " + std::to_string(m));
    }

    // family weights: criterion holds at every member prime; b is minimal
    const std::vector<long> s = {5, 7, 11, 13, 17, 19};
    for (long j : {0L, 1L})
        for (long m : kAdmissibleM) {
            const long k = family_weight(s, j, m);
            for (long p : s)
                require(weight_criterion(k, p).m.has_value(),
                        "family weight misses the criterion");
            const long b = family_b(s, k, m);
            for (long p : s)
                require(Int(k - 2) < (m - 2) * int_pow(Int(p), static_cast<unsigned long>(b)),
                        "family_b bound violated");
            if (b > 0) {
                bool tight = false;
                for (long p : s)
                    if (!(Int(k - 2) <
                          (m - 2) * int_pow(Int(p), static_cast<unsigned long>(b - 1))))
                        tight = true;
                require(tight, "family_b not minimal");
            }
        }
}

struct CriterionCase {
    int number;
    std::string label;
    double budget_seconds;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<CriterionCase> criteria = {
        {1, "reference table reproduction (CLI, byte-exact)", 5.0, criterion1_table},
        {2, "f_26 golden expansion (19 coefficients, exact)", 1.0, criterion2_f26_golden},
        {3, "f_26 non-ordinary at every prime of S", 1.0, criterion3_f26_nonordinary},
        {4, "theorem-1 certificate at (k=26, p=5, m=6, b=2)", 30.0,
         criterion4_theorem1_certificate},
        {5, "theorem-2 certificate for E4 E6/Delta at p=5", 5.0,
         criterion5_theorem2_certificate},
        {6, "E_{p-1} = 1 mod p to precision 200, six primes", 5.0,
         criterion6_eisenstein_congruence},
        {7, "weight-2 constant terms vanish (50 random P, prec 64)", 10.0,
         criterion7_weight2_constant_terms},
        {8, "Hatada check: charpoly nilpotent at p=2,3 for k=12..42", 10.0, criterion8_hatada},
        {9, "criterion-soundness sweep k=12..60, p=5..19", 60.0,
         criterion9_criterion_soundness},
        {10, "property suites (ring laws, Frobenius, Miller, Hecke, reps)", 60.0,
         criterion10_property_suites},
    };

    int failures = 0;
    for (const CriterionCase& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criterion.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[64];
        std::snprintf(timing, sizeof(timing), "%.2fs, budget %.0fs", seconds,
                      criterion.budget_seconds);
        if (error.empty()) {
            std::cout << "[PASS] criterion " << criterion.number << ": " << criterion.label << " ("
                      << timing << ")\n";
            if (seconds > criterion.budget_seconds)
                std::cout << "       warning: over budget\n";
        } else {
            std::cout << "[FAIL] criterion " << criterion.number << ": " << criterion.label << " ("
                      << timing << "): " << error << "\n";
            ++failures;
        }
    }
    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
