#include "mf/certificate.hpp"

#include <algorithm>

#include <json.hpp>

#include "mf/errors.hpp"

namespace mf {

void Certificate::finalize() {
    verified = !checks.empty() &&
               std::all_of(checks.begin(), checks.end(),
                           [](const CertCheck& c) { return c.pass; });
}

std::string certificate_to_json(const Certificate& cert, int indent) {
    nlohmann::ordered_json j;
    j["kind"] = cert.kind;
    j["k"] = cert.k;
    j["p"] = cert.p;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : cert.params) params[name] = value;
    j["params"] = params;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CertCheck& check : cert.checks) {
        nlohmann::ordered_json c;
        c["name"] = check.name;
        c["observed"] = check.observed;
        c["expected"] = check.expected;
        c["pass"] = check.pass;
        checks.push_back(c);
    }
    j["checks"] = checks;
    j["verified"] = cert.verified;
    return j.dump(indent);
}

Certificate certificate_from_json(const std::string& json_text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("certificate JSON parse error: ") + e.what());
    }
    Certificate cert;
    cert.kind = j.at("kind").get<std::string>();
    cert.k = j.at("k").get<long>();
    cert.p = j.at("p").get<long>();
    for (const auto& [name, value] : j.at("params").items())
        cert.add_param(name, value.get<std::string>());
    for (const auto& c : j.at("checks")) {
        CertCheck check;
        check.name = c.at("name").get<std::string>();
        check.observed = c.at("observed").get<std::string>();
        check.expected = c.at("expected").get<std::string>();
        check.pass = c.at("pass").get<bool>();
        cert.add_check(check);
    }
    cert.verified = j.at("verified").get<bool>();
    return cert;
}

}  // namespace mf
