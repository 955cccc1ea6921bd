// nonord: exact q-expansions, Hecke nilpotency tests and machine-checkable
// non-ordinarity certificates for level-one modular forms.
//
// Exit codes: 0 success / certificate verified, 1 certificate not verified,
// 2 cross-verification mismatch, 3 precondition or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mf/classical.hpp"
#include "mf/errors.hpp"
#include "mf/form_parser.hpp"
#include "mf/hecke.hpp"
#include "mf/nonordinary.hpp"
#include "mf/table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnverified = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitPrecondition = 3;

const char* error_name(const mf::Error& e) {
    if (dynamic_cast<const mf::BeyondPrecision*>(&e)) return "BeyondPrecision";
    if (dynamic_cast<const mf::NegativePowerOfZero*>(&e)) return "NegativePowerOfZero";
    if (dynamic_cast<const mf::DenominatorDivisibleByP*>(&e)) return "DenominatorDivisibleByP";
    if (dynamic_cast<const mf::InvalidWeight*>(&e)) return "InvalidWeight";
    if (dynamic_cast<const mf::OddWeight*>(&e)) return "OddWeight";
    if (dynamic_cast<const mf::PrecisionTooSmall*>(&e)) return "PrecisionTooSmall";
    if (dynamic_cast<const mf::DimensionNotOne*>(&e)) return "DimensionNotOne";
    if (dynamic_cast<const mf::InvalidM*>(&e)) return "InvalidM";
    if (dynamic_cast<const mf::CriterionFails*>(&e)) return "CriterionFails";
    if (dynamic_cast<const mf::BTooSmall*>(&e)) return "BTooSmall";
    if (dynamic_cast<const mf::NotRepresentable*>(&e)) return "NotRepresentable";
    if (dynamic_cast<const mf::NoDecomposition*>(&e)) return "NoDecomposition";
    if (dynamic_cast<const mf::WeightMismatch*>(&e)) return "WeightMismatch";
    if (dynamic_cast<const mf::ParseError*>(&e)) return "ParseError";
    return "Error";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw mf::Error("cannot open output file: " + out_path);
    out << text;
}

std::vector<long> parse_primes(const std::string& csv) {
    std::vector<long> primes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw mf::Error("empty entry in prime list");
        primes.push_back(std::stol(item));
    }
    if (primes.empty()) throw mf::Error("prime list is empty");
    return primes;
}

std::pair<long, long> parse_range(const std::string& range) {
    const std::size_t sep = range.find("..");
    if (sep == std::string::npos)
        throw mf::Error("range must look like 12..42, got '" + range + "'");
    return {std::stol(range.substr(0, sep)), std::stol(range.substr(sep + 2))};
}

std::string render_series_plain(const mf::QSeries& s) {
    std::ostringstream os;
    for (long n = s.valuation(); n < s.prec(); ++n)
        os << n << ": " << mf::to_string(s.coeff(n)) << "\n";
    return os.str();
}

std::string render_series_json(const std::string& form, const mf::QSeries& s) {
    nlohmann::ordered_json j;
    j["form"] = form;
    j["valuation"] = s.valuation();
    j["prec"] = s.prec();
    if (s.weight()) j["weight"] = *s.weight();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (long n = s.valuation(); n < s.prec(); ++n)
        coeffs.push_back({{"n", n}, {"value", mf::to_string(s.coeff(n))}});
    j["coefficients"] = coeffs;
    return j.dump(2) + "\n";
}

struct ExpandOptions {
    std::string form;
    long prec = 16;
    std::string format = "plain";
    std::string out;
};

struct EigenformOptions {
    long k = 12;
    long prec = 16;
    std::string format = "plain";
    std::string out;
};

struct TableOptions {
    std::string primes = "2,3,5,7,11,13,17,19";
    std::string range = "12..42";
    bool cross_verify = false;
    std::string verify_against;
    std::string format = "csv";
    std::string out;
    int jobs = 1;
};

struct CertifyOptions {
    std::string kind;
    long k = 0;
    long p = 0;
    long m = 0;
    long b = 0;
    long u = 1;
    long v = 0;
    bool has_m = false;
    bool has_b = false;
    std::string form;
    long prec = 0;
    std::string mode = "exact";
    std::string out;
};

int run_expand(const ExpandOptions& opt) {
    const mf::QSeries s = mf::parse_form(opt.form, opt.prec);
    emit(opt.format == "json" ? render_series_json(opt.form, s) : render_series_plain(s),
         opt.out);
    return kExitOk;
}

int run_eigenform(const EigenformOptions& opt) {
    const mf::QSeries f = mf::eigenform(opt.k, opt.prec);
    const std::string name = "eigenform" + std::to_string(opt.k);
    emit(opt.format == "json" ? render_series_json(name, f) : render_series_plain(f), opt.out);
    return kExitOk;
}

int run_table(const TableOptions& opt) {
    const std::vector<long> primes = parse_primes(opt.primes);
    const auto [k_min, k_max] = parse_range(opt.range);
    const mf::NonordinaryTable table =
        mf::nonordinary_table(primes, k_min, k_max, opt.cross_verify, opt.jobs);

    std::string rendered;
    if (opt.format == "csv")
        rendered = mf::table_to_csv(table);
    else if (opt.format == "markdown")
        rendered = mf::table_to_markdown(table);
    else if (opt.format == "json")
        rendered = mf::table_to_json(table) + "\n";
    else
        rendered = mf::table_to_plain(table);
    emit(rendered, opt.out);

    int code = kExitOk;
    if (!table.mismatches.empty()) {
        for (const auto& [p, k] : table.mismatches)
            std::cerr << "cross-verification mismatch: marked cell (p=" << p << ", k=" << k
                      << ") is not nilpotent\n";
        code = kExitMismatch;
    }
    for (const auto& [p, k] : table.extras)
        std::cerr << "note: unmarked cell (p=" << p << ", k=" << k
                  << ") is nilpotent anyway\n";

    if (!opt.verify_against.empty()) {
        std::ifstream ref(opt.verify_against, std::ios::binary);
        if (!ref) throw mf::Error("cannot open reference table: " + opt.verify_against);
        std::stringstream buf;
        buf << ref.rdbuf();
        if (buf.str() != mf::table_to_csv(table)) {
            std::cerr << "cross-verification mismatch: computed table differs from "
                      << opt.verify_against << "\n";
            code = kExitMismatch;
        }
    }
    return code;
}

int run_certify(const CertifyOptions& opt) {
    mf::Certificate cert;
    if (opt.kind == "theorem1") {
        const long m = opt.has_m ? opt.m : [&] {
            const mf::Criterion crit = mf::weight_criterion(opt.k, opt.p);
            if (!crit.m)
                throw mf::CriterionFails("no m in {4,6,8,10,14} with (p-1) | (k-m) for k = " +
                                         std::to_string(opt.k) + ", p = " + std::to_string(opt.p));
            return *crit.m;
        }();
        const long b = opt.has_b ? opt.b : mf::part1_minimal_a(opt.p, opt.k, m);
        mf::solve_part1(opt.p, opt.k, m, b);  // validate before any expansion work
        const mf::Int pb_int = mf::int_pow(mf::Int(opt.p), static_cast<unsigned long>(b));
        if (pb_int > 1000000)
            throw mf::PrecisionTooSmall("p^b = " + pb_int.get_str() + " is too large to expand");
        const long pb = pb_int.get_si();
        const long prec = opt.prec > 0 ? opt.prec : pb + 15;
        const mf::QSeries f = opt.form.empty() ? mf::eigenform(opt.k, prec)
                                               : mf::parse_form(opt.form, prec);
        cert = mf::certify_theorem1(f, opt.k, opt.p, m, b, opt.mode != "modp");
    } else if (opt.kind == "theorem2") {
        if (opt.form.empty())
            throw mf::Error("theorem2 requires --form (a weakly holomorphic form of weight <= 2)");
        const long v = opt.v > 0 ? opt.v : opt.u;
        if (opt.u < 1 || v < opt.u)
            throw mf::Error("theorem2 requires 1 <= u <= v");
        const mf::Int pv_int = mf::int_pow(mf::Int(opt.p), static_cast<unsigned long>(v));
        if (pv_int > 1000000)
            throw mf::PrecisionTooSmall("p^v = " + pv_int.get_str() + " is too large to expand");
        const long prec = opt.prec > 0 ? opt.prec : pv_int.get_si() + 15;
        const mf::QSeries f = mf::parse_form(opt.form, prec);
        cert = mf::certify_theorem2(f, opt.k, opt.p, opt.u, v);
    } else if (opt.kind == "nilpotency") {
        cert = mf::certify_nilpotency(opt.k, opt.p);
    } else if (opt.kind == "hatada") {
        cert = mf::certify_hatada(opt.k, opt.p);
    } else if (opt.kind == "weight-criterion") {
        cert = mf::certify_weight_criterion(opt.k, opt.p);
    } else {
        throw mf::Error("unknown certificate kind '" + opt.kind +
                        "' (expected theorem1, theorem2, nilpotency, hatada, weight-criterion)");
    }

    emit(mf::certificate_to_json(cert) + "\n", opt.out);
    return cert.verified ? kExitOk : kExitUnverified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-expansion arithmetic and non-ordinarity certificates "
                 "for level-one modular forms"};
    app.require_subcommand(1);

    ExpandOptions expand_opt;
    CLI::App* expand = app.add_subcommand("expand", "print coefficients of a form expression");
    expand->add_option("form", expand_opt.form,
                       "product expression, e.g. \"delta*E6*E4^2\" or \"j\"")
        ->required();
    expand->add_option("--prec", expand_opt.prec, "expansion precision: coefficients known through q^(prec-1)")
        ->check(CLI::PositiveNumber);
    expand->add_option("--format", expand_opt.format)->check(CLI::IsMember({"plain", "json"}));
    expand->add_option("--out", expand_opt.out, "write output to a file");

    EigenformOptions eigen_opt;
    CLI::App* eigen = app.add_subcommand("eigenform", "print a dimension-one Hecke eigenform");
    eigen->add_option("--k", eigen_opt.k, "weight (12, 16, 18, 20, 22 or 26)")->required();
    eigen->add_option("--prec", eigen_opt.prec)->check(CLI::PositiveNumber);
    eigen->add_option("--format", eigen_opt.format)->check(CLI::IsMember({"plain", "json"}));
    eigen->add_option("--out", eigen_opt.out);

    TableOptions table_opt;
    CLI::App* table = app.add_subcommand("table", "non-ordinarity table over primes and weights");
    table->add_option("--primes", table_opt.primes, "comma-separated primes");
    table->add_option("--range", table_opt.range, "even weight range, e.g. 12..42");
    table->add_flag("--cross-verify", table_opt.cross_verify,
                    "re-verify marked cells through the Hecke nilpotency test");
    table->add_option("--verify-against", table_opt.verify_against,
                      "compare the computed CSV against a reference file");
    table->add_option("--format", table_opt.format)
        ->check(CLI::IsMember({"csv", "markdown", "json", "plain"}));
    table->add_option("--jobs", table_opt.jobs, "worker threads for table cells")
        ->check(CLI::PositiveNumber);
    table->add_option("--out", table_opt.out);

    CertifyOptions cert_opt;
    CLI::App* certify = app.add_subcommand("certify", "emit a certificate as JSON");
    certify->add_option("kind", cert_opt.kind,
                        "theorem1 | theorem2 | nilpotency | hatada | weight-criterion")
        ->required();
    certify->add_option("--k", cert_opt.k, "weight")->required();
    certify->add_option("--p", cert_opt.p, "prime")->required();
    CLI::Option* m_opt = certify->add_option("--m", cert_opt.m, "element of {4,6,8,10,14}");
    CLI::Option* b_opt = certify->add_option("--b", cert_opt.b, "exponent b >= a (default: minimal)");
    certify->add_option("--u", cert_opt.u, "theorem2 exponent u >= 1");
    certify->add_option("--v", cert_opt.v, "theorem2 exponent v, u <= v <= t (default u)");
    certify->add_option("--form", cert_opt.form, "form expression (default: eigenform of weight k)");
    certify->add_option("--prec", cert_opt.prec, "expansion precision for the form");
    certify->add_option("--mode", cert_opt.mode, "theorem1 constant-term route")
        ->check(CLI::IsMember({"exact", "modp"}));
    certify->add_option("--out", cert_opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    cert_opt.has_m = m_opt->count() > 0;
    cert_opt.has_b = b_opt->count() > 0;

    try {
        if (expand->parsed()) return run_expand(expand_opt);
        if (eigen->parsed()) return run_eigenform(eigen_opt);
        if (table->parsed()) return run_table(table_opt);
        if (certify->parsed()) return run_certify(cert_opt);
    } catch (const mf::Error& e) {
        std::cerr << "precondition failed: " << error_name(e) << ": " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitPrecondition;
}
