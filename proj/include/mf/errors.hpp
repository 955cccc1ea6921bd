#ifndef MF_ERRORS_HPP
#define MF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mf {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// q-series arithmetic
struct BeyondPrecision : Error {
    explicit BeyondPrecision(const std::string& what) : Error(what) {}
};
struct NegativePowerOfZero : Error {
    explicit NegativePowerOfZero(const std::string& what) : Error(what) {}
};
struct DenominatorDivisibleByP : Error {
    DenominatorDivisibleByP(const std::string& what, long exponent)
        : Error(what), exponent(exponent) {}
    long exponent;  // offending q-exponent
};

// classical constructors and spaces
struct InvalidWeight : Error {
    explicit InvalidWeight(const std::string& what) : Error(what) {}
};
struct OddWeight : Error {
    explicit OddWeight(const std::string& what) : Error(what) {}
};
struct PrecisionTooSmall : Error {
    explicit PrecisionTooSmall(const std::string& what) : Error(what) {}
};
struct DimensionNotOne : Error {
    explicit DimensionNotOne(const std::string& what) : Error(what) {}
};

// certificate machinery
struct InvalidM : Error {
    explicit InvalidM(const std::string& what) : Error(what) {}
};
struct CriterionFails : Error {
    explicit CriterionFails(const std::string& what) : Error(what) {}
};
struct BTooSmall : Error {
    explicit BTooSmall(const std::string& what) : Error(what) {}
};
struct NotRepresentable : Error {
    explicit NotRepresentable(const std::string& what) : Error(what) {}
};
struct NoDecomposition : Error {
    explicit NoDecomposition(const std::string& what) : Error(what) {}
};
struct WeightMismatch : Error {
    explicit WeightMismatch(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

}  // namespace mf

#endif
