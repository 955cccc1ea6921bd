#ifndef MF_TABLE_HPP
#define MF_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mf/certificate.hpp"

namespace mf {

struct TableCell {
    long p = 0;
    long k = 0;
    bool present = false;
    std::optional<Certificate> criterion_cert;   // hatada or weight-criterion
    std::optional<Certificate> nilpotency_cert;  // only with cross-verification
};

/// Non-ordinarity table over a prime set and an even weight range.
/// A cell is marked when p is 2 or 3 or the weight criterion holds; marks
/// are criterion-generated only.  Cross-verification runs the nilpotency
/// test on every cell with dim S_k >= 1: marked cells that fail land in
/// mismatches, unmarked cells that pass land in extras.
struct NonordinaryTable {
    std::vector<long> primes;
    std::vector<long> weights;
    std::vector<TableCell> cells;  // row-major, primes x weights
    bool cross_verified = false;
    std::vector<std::pair<long, long>> mismatches;  // (p, k)
    std::vector<std::pair<long, long>> extras;      // (p, k)

    const TableCell& cell(std::size_t prime_index, std::size_t weight_index) const {
        return cells[prime_index * weights.size() + weight_index];
    }
};

/// Requires k_min >= 12 even; an empty range (k_min > k_max) gives an empty
/// table.  jobs > 1 distributes independent cells across threads; output is
/// identical regardless.
NonordinaryTable nonordinary_table(const std::vector<long>& primes, long k_min, long k_max,
                                   bool cross_verify = false, int jobs = 1);

/// CSV grid: header row of weights, one row per prime, cells "x" or "".
std::string table_to_csv(const NonordinaryTable& table);
/// Markdown grid with the weight repeated in present cells.
std::string table_to_markdown(const NonordinaryTable& table);
/// Fixed-width text grid.
std::string table_to_plain(const NonordinaryTable& table);
/// Full machine-readable form including per-cell certificates.
std::string table_to_json(const NonordinaryTable& table, int indent = 2);

}  // namespace mf

#endif
