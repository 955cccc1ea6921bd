#include <doctest.h>

#include "mf/certificate.hpp"
#include "mf/classical.hpp"
#include "mf/hecke.hpp"
#include "mf/nonordinary.hpp"

using namespace mf;

TEST_CASE("JSON round-trip for every certificate kind") {
    std::vector<Certificate> certs;
    certs.push_back(certify_hatada(12, 2));
    certs.push_back(certify_weight_criterion(26, 5));
    certs.push_back(certify_nilpotency(26, 19));
    certs.push_back(certify_theorem1(eigenform(26, 30), 26, 5, 6, 2, false));
    {
        const QSeries f = multiply(multiply(eisenstein(4, 12), eisenstein(6, 12)),
                                   power(delta(12), -1));
        certs.push_back(certify_theorem2(f, -2, 5, 1, 1));
    }
    for (const Certificate& cert : certs) {
        const std::string json = certificate_to_json(cert);
        CHECK(certificate_from_json(json) == cert);
        // serialization is deterministic
        CHECK(certificate_to_json(certificate_from_json(json)) == json);
    }
}

TEST_CASE("big integers are decimal strings in JSON") {
    Certificate cert;
    cert.kind = "theorem1";
    cert.k = 26;
    cert.p = 5;
    cert.add_param("c", "123456789012345678901234567890");
    cert.add_check({"value", "-81651045335314", "0", false});
    cert.finalize();
    CHECK_FALSE(cert.verified);
    const std::string json = certificate_to_json(cert);
    CHECK(json.find("\"123456789012345678901234567890\"") != std::string::npos);
    CHECK(json.find("\"-81651045335314\"") != std::string::npos);
    CHECK(certificate_from_json(json) == cert);
}

TEST_CASE("verified is the conjunction of the checks") {
    Certificate cert;
    cert.kind = "nilpotency";
    cert.add_check({"a", "1", "1", true});
    cert.add_check({"b", "2", "0", false});
    cert.finalize();
    CHECK_FALSE(cert.verified);
    cert.checks[1].pass = true;
    cert.finalize();
    CHECK(cert.verified);

    Certificate empty;
    empty.finalize();
    CHECK_FALSE(empty.verified);
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(certificate_from_json("not json"), Error);
    CHECK_THROWS_AS(certificate_from_json("{}"), std::exception);
}
