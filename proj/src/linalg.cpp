#include "mf/linalg.hpp"

#include <sstream>

#include "mf/errors.hpp"

namespace mf {

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (dim_ != other.dim_) throw Error("matrix product: dimension mismatch");
    IntMatrix result(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                result.at(i, j) += aik * other.at(k, j);
        }
    return result;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

std::vector<Int> charpoly(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    if (n == 0) return c;

    auto trace = [n](const IntMatrix& m) {
        Int t(0);
        for (std::size_t i = 0; i < n; ++i) t += m.at(i, i);
        return t;
    };

    // M_1 = I, then M_k = A M_{k-1} + c_{n-k+1} I and c_{n-k} = -tr(A M_k)/k.
    IntMatrix am = a;  // A * M_1
    c[n - 1] = -trace(am);
    for (std::size_t k = 2; k <= n; ++k) {
        IntMatrix m = am;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        am = a * m;
        c[n - k] = divexact(-trace(am), Int(static_cast<unsigned long>(k)));
    }
    return c;
}

std::vector<std::uint64_t> poly_mod(const std::vector<Int>& poly, std::uint64_t p) {
    std::vector<std::uint64_t> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) out[i] = mod_residue(poly[i], p);
    return out;
}

bool is_x_power(const std::vector<std::uint64_t>& poly_mod_p, std::size_t n) {
    if (poly_mod_p.size() != n + 1) return false;
    if (poly_mod_p[n] != 1) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (poly_mod_p[i] != 0) return false;
    return true;
}

namespace {

template <typename Coeff, typename Str>
std::string render_poly(const std::vector<Coeff>& poly, Str&& coeff_str) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = poly.size(); i-- > 0;) {
        if (coeff_str(poly[i]) == "0" && poly.size() > 1) continue;
        if (!first) os << " + ";
        os << coeff_str(poly[i]);
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string poly_str(const std::vector<Int>& poly) {
    return render_poly(poly, [](const Int& c) { return c.get_str(); });
}

std::string poly_mod_str(const std::vector<std::uint64_t>& poly) {
    return render_poly(poly, [](std::uint64_t c) { return std::to_string(c); });
}

}  // namespace mf
