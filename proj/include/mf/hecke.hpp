#ifndef MF_HECKE_HPP
#define MF_HECKE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mf/linalg.hpp"
#include "mf/qseries.hpp"

namespace mf {

struct Dimensions {
    long dim_m;
    long dim_s;
};

/// dim M_k and dim S_k at level one; k even, k >= 4.
Dimensions dimensions(long k);

/// M_k with its Miller basis: basis[i] = q^i + O(q^{dim_m}), integral.
struct FormSpace {
    long weight;
    long dim_m;
    long dim_s;
    long prec;
    std::vector<QSeries> basis;  // size dim_m, indexed by leading exponent
};

/// Row-reduces the monomial spanning set {E4^a E6^b Delta^c : 4a+6b+12c = k}
/// to the unitriangular basis.  Requires prec >= dim_m (PrecisionTooSmall).
FormSpace miller_basis(long k, long prec);

/// T_p on the cuspidal Miller basis of S_k, with exact characteristic
/// polynomial and its reduction mod p.
struct HeckeData {
    long weight;
    long p;
    IntMatrix matrix;
    std::vector<Int> charpoly;                 // monic, degree dim_s, low first
    std::vector<std::uint64_t> charpoly_mod_p;
};

/// Requires prec >= p*dim_s + 1 so T_p images are determined through q^{dim_s}.
HeckeData hecke_matrix(long k, long p, long prec);

/// True iff charpoly(T_p on S_k) = x^{dim_s} mod p, i.e. every Hecke
/// eigenvalue of weight k is 0 modulo every prime above p.  Requires
/// dim S_k >= 1.  Returns the HeckeData as evidence.
std::pair<bool, HeckeData> is_nonordinary_space(long k, long p);

/// The unique normalized Hecke eigenform of weight k, for the six weights
/// with dim S_k = 1 (12, 16, 18, 20, 22, 26).  Throws DimensionNotOne.
QSeries eigenform(long k, long prec);

/// Checks the exact Hecke recursion a(p)a(p^m) = a(p^{m+1}) + p^{k-1}a(p^{m-1})
/// together with a(p^m) = a(p)^m mod p; returns the conjunction.
/// Needs coefficients through q^{p^{m+1}}.
bool prime_power_eigenvalue_congruence(const QSeries& f, long k, long p, long m);

}  // namespace mf

#endif
