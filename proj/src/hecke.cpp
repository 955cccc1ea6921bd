#include "mf/hecke.hpp"

#include <algorithm>
#include <string>

#include "mf/classical.hpp"
#include "mf/errors.hpp"

namespace mf {

Dimensions dimensions(long k) {
    if (k % 2 != 0 || k < 4)
        throw InvalidWeight("dimensions: weight must be even and >= 4, got " +
                            std::to_string(k));
    const long dim_m = (k % 12 == 2) ? k / 12 : k / 12 + 1;
    return {dim_m, dim_m - 1};
}

FormSpace miller_basis(long k, long prec) {
    const Dimensions dims = dimensions(k);
    if (prec < dims.dim_m)
        throw PrecisionTooSmall("miller_basis: prec " + std::to_string(prec) +
                                " below dim M_k = " + std::to_string(dims.dim_m));

    // Spanning set Delta^i E4^alpha E6^beta of weight k with leading term q^i,
    // beta in {0, 1} fixed by k - 12i mod 4.
    const QSeries e4 = eisenstein(4, prec);
    const QSeries e6 = eisenstein(6, prec);
    const QSeries dlt = delta(prec);
    std::vector<QSeries> basis;
    basis.reserve(static_cast<std::size_t>(dims.dim_m));
    for (long i = 0; i < dims.dim_m; ++i) {
        const long rest = k - 12 * i;
        const long beta = (rest % 4 == 0) ? 0 : 1;
        const long alpha = (rest - 6 * beta) / 4;
        QSeries f = power(e4, alpha);
        if (beta) f = multiply(f, e6);
        if (i > 0) f = multiply(f, power(dlt, i));
        basis.push_back(f.truncate(prec));
    }

    // Back-substitute bottom-up so that basis[i] = q^i + O(q^{dim_m}).
    for (long i = dims.dim_m - 2; i >= 0; --i)
        for (long m = i + 1; m < dims.dim_m; ++m) {
            const Rat c = basis[static_cast<std::size_t>(i)].coeff(m);
            if (c == 0) continue;
            basis[static_cast<std::size_t>(i)] =
                add(basis[static_cast<std::size_t>(i)],
                    (-c) * basis[static_cast<std::size_t>(m)]);
        }

    for (long i = 0; i < dims.dim_m; ++i) {
        const QSeries& f = basis[static_cast<std::size_t>(i)];
        if (!f.is_integral())
            throw Error("miller_basis: non-integral coefficient in reduced basis (k=" +
                        std::to_string(k) + ", i=" + std::to_string(i) + ")");
        if (f.valuation() != i || f.coeff(i) != 1)
            throw Error("miller_basis: lost unitriangularity (k=" + std::to_string(k) + ")");
    }
    return {k, dims.dim_m, dims.dim_s, prec, std::move(basis)};
}

HeckeData hecke_matrix(long k, long p, long prec) {
    const Dimensions dims = dimensions(k);
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw Error("hecke_matrix: p must be prime");
    if (prec < p * dims.dim_s + 1)
        throw PrecisionTooSmall("hecke_matrix: need prec >= p*dim_s + 1 = " +
                                std::to_string(p * dims.dim_s + 1) + ", got " +
                                std::to_string(prec));

    const FormSpace space = miller_basis(k, prec);
    const Int pk1 = int_pow(Int(p), static_cast<unsigned long>(k - 1));
    const std::size_t dim = static_cast<std::size_t>(dims.dim_s);

    // (T_p f)(n) = a_f(pn) + p^{k-1} a_f(n/p); reading coefficients q^1..q^{dim_s}
    // of T_p f_i gives its coordinates in the cuspidal basis f_1..f_{dim_s}.
    IntMatrix matrix(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const QSeries& f = space.basis[i + 1];
        for (std::size_t row = 0; row < dim; ++row) {
            const long n = static_cast<long>(row) + 1;
            Rat entry = f.coeff(p * n);
            if (n % p == 0) entry += Rat(pk1) * f.coeff(n / p);
            if (!is_integer(entry))
                throw Error("hecke_matrix: non-integer entry");
            matrix.at(row, i) = entry.get_num();
        }
    }

    std::vector<Int> cp = charpoly(matrix);
    std::vector<std::uint64_t> cp_mod = poly_mod(cp, static_cast<std::uint64_t>(p));
    return {k, p, std::move(matrix), std::move(cp), std::move(cp_mod)};
}

std::pair<bool, HeckeData> is_nonordinary_space(long k, long p) {
    const Dimensions dims = dimensions(k);
    if (dims.dim_s < 1)
        throw Error("is_nonordinary_space: S_k is trivial for k = " + std::to_string(k));
    HeckeData data = hecke_matrix(k, p, p * dims.dim_s + 1);
    const bool nonordinary =
        is_x_power(data.charpoly_mod_p, static_cast<std::size_t>(dims.dim_s));
    return {nonordinary, std::move(data)};
}

QSeries eigenform(long k, long prec) {
    const Dimensions dims = dimensions(k);
    if (dims.dim_s != 1)
        throw DimensionNotOne("eigenform: dim S_" + std::to_string(k) + " = " +
                              std::to_string(dims.dim_s) + ", need 1");
    const FormSpace space = miller_basis(k, std::max(prec, dims.dim_m));
    return space.basis[1].truncate(prec).with_weight(k);
}

bool prime_power_eigenvalue_congruence(const QSeries& f, long k, long p, long m) {
    if (m < 1) throw Error("prime_power_eigenvalue_congruence: m must be >= 1");
    const Int pm1 = m >= 2 ? int_pow(Int(p), static_cast<unsigned long>(m - 1)) : Int(1);
    const Int pm = pm1 * (m >= 1 ? Int(p) : Int(1));
    const Int pm_next = pm * Int(p);
    if (pm_next >= f.prec())
        throw PrecisionTooSmall("prime_power_eigenvalue_congruence: need prec > p^{m+1}");

    auto a = [&f](const Int& n) {
        Rat c = f.coeff(n.get_si());
        if (!is_integer(c)) throw Error("eigenform coefficient not integral");
        return c.get_num();
    };

    const Int ap = a(Int(p));
    const Int apm = a(pm);
    // a(p) a(p^m) = a(p^{m+1}) + p^{k-1} a(p^{m-1})
    const bool recursion =
        ap * apm == a(pm_next) + int_pow(Int(p), static_cast<unsigned long>(k - 1)) * a(pm1);
    // a(p^m) = a(p)^m mod p
    Int power_of_ap;
    mpz_powm_ui(power_of_ap.get_mpz_t(), ap.get_mpz_t(), static_cast<unsigned long>(m),
                Int(p).get_mpz_t());
    const bool congruence =
        mod_residue(apm, static_cast<std::uint64_t>(p)) ==
        mod_residue(power_of_ap, static_cast<std::uint64_t>(p));
    return recursion && congruence;
}

}  // namespace mf
