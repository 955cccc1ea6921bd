#include <doctest.h>

#include <random>
#include <vector>

#include "mf/linalg.hpp"

using namespace mf;

namespace {

// Independent oracle: det(xI - A) by Laplace expansion over Z[x].
using Poly = std::vector<Int>;  // low degree first

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly det{Int(0)};
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        Poly term = poly_mul(m[0][col], poly_det(minor));
        if (col % 2 == 1)
            for (Int& c : term) c = -c;
        det = poly_add(det, term);
    }
    return det;
}

Poly charpoly_oracle(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                m[i][j] = Poly{-a.at(i, j), Int(1)};  // x - a_ii
            else
                m[i][j] = Poly{-a.at(i, j)};
        }
    Poly det = poly_det(m);
    det.resize(n + 1, Int(0));
    return det;
}

}  // namespace

TEST_CASE("charpoly on small fixed matrices") {
    IntMatrix a1(1);
    a1.at(0, 0) = 2;
    CHECK(charpoly(a1) == std::vector<Int>{Int(-2), Int(1)});

    IntMatrix a2(2);
    a2.at(0, 0) = 1;
    a2.at(0, 1) = 2;
    a2.at(1, 0) = 3;
    a2.at(1, 1) = 4;
    // x^2 - 5x - 2
    CHECK(charpoly(a2) == std::vector<Int>{Int(-2), Int(-5), Int(1)});

    IntMatrix id3(3);
    for (std::size_t i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(charpoly(id3) == std::vector<Int>{Int(-1), Int(3), Int(-3), Int(1)});
}

TEST_CASE("charpoly against the Laplace-expansion oracle") {
    std::mt19937_64 rng(1122334455);
    std::uniform_int_distribution<long> entry(-20, 20);
    for (std::size_t dim = 1; dim <= 5; ++dim) {
        for (int trial = 0; trial < 10; ++trial) {
            IntMatrix a(dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) a.at(i, j) = entry(rng);
            CHECK(charpoly(a) == charpoly_oracle(a));
        }
    }
}

TEST_CASE("poly_mod and is_x_power") {
    const std::vector<Int> poly = {Int(-10), Int(15), Int(1)};
    CHECK(poly_mod(poly, 5) == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(is_x_power(poly_mod(poly, 5), 2));
    CHECK_FALSE(is_x_power(poly_mod(poly, 3), 2));
    CHECK(is_x_power({1}, 0));
    CHECK_FALSE(is_x_power({0, 2}, 1));
}

TEST_CASE("matrix product") {
    IntMatrix a(2), b(2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    b.at(0, 0) = 5;
    b.at(0, 1) = 6;
    b.at(1, 0) = 7;
    b.at(1, 1) = 8;
    const IntMatrix ab = a * b;
    CHECK(ab.at(0, 0) == 19);
    CHECK(ab.at(0, 1) == 22);
    CHECK(ab.at(1, 0) == 43);
    CHECK(ab.at(1, 1) == 50);
}
