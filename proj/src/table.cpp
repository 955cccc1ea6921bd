#include "mf/table.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mf/errors.hpp"
#include "mf/hecke.hpp"
#include "mf/nonordinary.hpp"

namespace mf {

namespace {

void fill_cell(TableCell& cell, bool cross_verify) {
    const long p = cell.p;
    const long k = cell.k;
    if (p == 2 || p == 3) {
        cell.present = true;
        cell.criterion_cert = certify_hatada(k, p);
    } else {
        const Criterion crit = weight_criterion(k, p);
        cell.present = crit.m.has_value();
        if (cell.present) cell.criterion_cert = certify_weight_criterion(k, p);
    }
    if (cross_verify && dimensions(k).dim_s >= 1)
        cell.nilpotency_cert = certify_nilpotency(k, p);
}

}  // namespace

NonordinaryTable nonordinary_table(const std::vector<long>& primes, long k_min, long k_max,
                                   bool cross_verify, int jobs) {
    if (k_min % 2 != 0 || k_min < 12)
        throw InvalidWeight("nonordinary_table: k_min must be even and >= 12");
    if (k_max % 2 != 0) throw InvalidWeight("nonordinary_table: k_max must be even");
    for (long p : primes)
        if (!is_prime(static_cast<std::uint64_t>(p)))
            throw Error("nonordinary_table: " + std::to_string(p) + " is not prime");

    NonordinaryTable table;
    table.primes = primes;
    for (long k = k_min; k <= k_max; k += 2) table.weights.push_back(k);
    table.cross_verified = cross_verify;
    table.cells.resize(table.primes.size() * table.weights.size());
    for (std::size_t pi = 0; pi < table.primes.size(); ++pi)
        for (std::size_t ki = 0; ki < table.weights.size(); ++ki) {
            TableCell& cell = table.cells[pi * table.weights.size() + ki];
            cell.p = table.primes[pi];
            cell.k = table.weights[ki];
        }

    const std::size_t n = table.cells.size();
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (workers <= 1 || n <= 1) {
        for (TableCell& cell : table.cells) fill_cell(cell, cross_verify);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = static_cast<std::size_t>(w); i < n;
                         i += static_cast<std::size_t>(workers))
                        fill_cell(table.cells[i], cross_verify);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        for (std::thread& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    if (cross_verify) {
        for (const TableCell& cell : table.cells) {
            if (!cell.nilpotency_cert) continue;
            const bool nilpotent = cell.nilpotency_cert->verified;
            if (cell.present && !nilpotent) table.mismatches.emplace_back(cell.p, cell.k);
            if (!cell.present && nilpotent) table.extras.emplace_back(cell.p, cell.k);
        }
    }
    return table;
}

std::string table_to_csv(const NonordinaryTable& table) {
    std::ostringstream os;
    os << "p";
    for (long k : table.weights) os << "," << k;
    os << "\n";
    for (std::size_t pi = 0; pi < table.primes.size(); ++pi) {
        os << table.primes[pi];
        for (std::size_t ki = 0; ki < table.weights.size(); ++ki)
            os << "," << (table.cell(pi, ki).present ? "x" : "");
        os << "\n";
    }
    return os.str();
}

std::string table_to_markdown(const NonordinaryTable& table) {
    std::ostringstream os;
    os << "| p |";
    for (long k : table.weights) os << " " << k << " |";
    os << "\n|---|";
    for (std::size_t ki = 0; ki < table.weights.size(); ++ki) os << "---|";
    os << "\n";
    for (std::size_t pi = 0; pi < table.primes.size(); ++pi) {
        os << "| " << table.primes[pi] << " |";
        for (std::size_t ki = 0; ki < table.weights.size(); ++ki) {
            if (table.cell(pi, ki).present)
                os << " " << table.weights[ki] << " |";
            else
                os << "  |";
        }
        os << "\n";
    }
    return os.str();
}

std::string table_to_plain(const NonordinaryTable& table) {
    std::size_t width = 2;
    for (long k : table.weights)
        width = std::max(width, std::to_string(k).size());
    for (long p : table.primes)
        width = std::max(width, std::to_string(p).size());

    std::ostringstream os;
    auto pad = [&os, width](const std::string& s) {
        os << s;
        for (std::size_t i = s.size(); i < width + 1; ++i) os << ' ';
    };
    pad("p");
    for (long k : table.weights) pad(std::to_string(k));
    os << "\n";
    for (std::size_t pi = 0; pi < table.primes.size(); ++pi) {
        pad(std::to_string(table.primes[pi]));
        for (std::size_t ki = 0; ki < table.weights.size(); ++ki)
            pad(table.cell(pi, ki).present ? std::to_string(table.weights[ki]) : ".");
        os << "\n";
    }
    return os.str();
}

std::string table_to_json(const NonordinaryTable& table, int indent) {
    nlohmann::ordered_json j;
    j["primes"] = table.primes;
    j["weights"] = table.weights;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const TableCell& cell : table.cells) {
        nlohmann::ordered_json c;
        c["p"] = cell.p;
        c["k"] = cell.k;
        c["present"] = cell.present;
        if (cell.criterion_cert)
            c["certificate"] =
                nlohmann::ordered_json::parse(certificate_to_json(*cell.criterion_cert));
        if (cell.nilpotency_cert)
            c["nilpotency"] =
                nlohmann::ordered_json::parse(certificate_to_json(*cell.nilpotency_cert));
        cells.push_back(c);
    }
    j["cells"] = cells;
    j["cross_verified"] = table.cross_verified;
    auto pairs = [](const std::vector<std::pair<long, long>>& v) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [p, k] : v) arr.push_back({{"p", p}, {"k", k}});
        return arr;
    };
    j["mismatches"] = pairs(table.mismatches);
    j["extras"] = pairs(table.extras);
    return j.dump(indent);
}

}  // namespace mf
