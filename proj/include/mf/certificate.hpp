#ifndef MF_CERTIFICATE_HPP
#define MF_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <vector>

namespace mf {

/// One named assertion inside a certificate, with the exact values observed.
/// Big integers are rendered as decimal strings.
struct CertCheck {
    std::string name;
    std::string observed;
    std::string expected;
    bool pass = false;

    bool operator==(const CertCheck&) const = default;
};

/// Serializable record of one non-ordinarity proof: which criterion ran,
/// the solved exponents, and every congruence / constant-term check
/// performed.  verified is the conjunction of all checks.
struct Certificate {
    std::string kind;  // hatada | weight-criterion | nilpotency | theorem1 | theorem2
    long k = 0;
    long p = 0;
    std::vector<std::pair<std::string, std::string>> params;  // insertion-ordered
    std::vector<CertCheck> checks;
    bool verified = false;

    void add_param(const std::string& name, const std::string& value) {
        params.emplace_back(name, value);
    }
    void add_check(CertCheck check) { checks.push_back(std::move(check)); }
    /// Recompute verified from the checks.
    void finalize();

    bool operator==(const Certificate&) const = default;
};

/// Stable JSON rendering: {"kind", "k", "p", "params", "checks", "verified"},
/// all big integers as decimal strings.  indent < 0 gives compact output.
std::string certificate_to_json(const Certificate& cert, int indent = 2);
Certificate certificate_from_json(const std::string& json_text);

}  // namespace mf

#endif
