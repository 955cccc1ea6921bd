#ifndef MF_LINALG_HPP
#define MF_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mf/numbers.hpp"

namespace mf {

/// Dense square matrix over Z.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Int(0)) {}

    std::size_t dim() const { return dim_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    std::string str() const;

private:
    std::size_t dim_;
    std::vector<Int> data_;
};

/// Coefficients of det(xI - A), lowest degree first; monic of degree dim.
/// Faddeev-LeVerrier with exact integer divisions.
std::vector<Int> charpoly(const IntMatrix& a);

/// Reduce polynomial coefficients mod p into [0, p).
std::vector<std::uint64_t> poly_mod(const std::vector<Int>& poly, std::uint64_t p);

/// True iff the mod-p polynomial is exactly x^n (monic, all lower terms 0).
bool is_x_power(const std::vector<std::uint64_t>& poly_mod_p, std::size_t n);

std::string poly_str(const std::vector<Int>& poly);
std::string poly_mod_str(const std::vector<std::uint64_t>& poly);

}  // namespace mf

#endif
