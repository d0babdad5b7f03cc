#include "adnil/counting.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "adnil/insertion.hpp"
#include "adnil/partition.hpp"
#include "adnil/root_poset.hpp"

namespace adnil {

namespace {

constexpr long long kMax = std::numeric_limits<long long>::max();

long long narrow(__int128 value, const char* what) {
    if (value > static_cast<__int128>(kMax)) throw std::overflow_error(what);
    return static_cast<long long>(value);
}

}  // namespace

long long catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: negative index");
    long long c = 1;
    for (int j = 1; j <= k; ++j) {
        // C_j = C_{j-1} * 2(2j-1)/(j+1), exact at every step.
        const __int128 t = static_cast<__int128>(c) * 2 * (2 * j - 1) / (j + 1);
        c = narrow(t, "catalan: value exceeds 64-bit range");
    }
    return c;
}

long long binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        narrow(r, "binomial: value exceeds 64-bit range");
    }
    return static_cast<long long>(r);
}

long long narayana(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
        throw std::invalid_argument("narayana: need 1 <= k <= n");
    }
    const __int128 product = static_cast<__int128>(binomial(n, k)) * binomial(n, k - 1);
    return narrow(product / n, "narayana: value exceeds 64-bit range");
}

long long count_paths_with_udu(int rank, int r) {
    if (rank < 1 || r < 0 || r > rank) {
        throw std::invalid_argument("count_paths_with_udu: need 0 <= r <= rank");
    }
    const int m = rank - r;
    __int128 sum = 0;
    for (int k = 0; 2 * k <= m; ++k) {
        sum += static_cast<__int128>(binomial(m, 2 * k)) * catalan(k);
    }
    const __int128 total = static_cast<__int128>(binomial(rank, r)) * sum;
    return narrow(total, "count_paths_with_udu: value exceeds 64-bit range");
}

const char* census_source_name(CensusSource source) {
    switch (source) {
        case CensusSource::Formula: return "formula";
        case CensusSource::UduOfInsertion: return "udu-census";
        case CensusSource::IdealCompatibles: return "ideal-census";
    }
    return "unknown";
}

CensusTable census(int rank, CensusSource source) {
    if (rank < 1 || rank > kMaxCensusRank) {
        throw std::invalid_argument("census: rank " + std::to_string(rank) +
                                    " outside 1.." + std::to_string(kMaxCensusRank));
    }
    CensusTable table{rank, source, std::vector<long long>(static_cast<std::size_t>(rank + 1), 0)};
    switch (source) {
        case CensusSource::Formula:
            for (int r = 0; r <= rank; ++r) {
                table.counts[static_cast<std::size_t>(r)] = count_paths_with_udu(rank, r);
            }
            break;
        case CensusSource::UduOfInsertion:
            for (const LPartition& lambda : enumerate_partitions(rank)) {
                ++table.counts[static_cast<std::size_t>(count_udu(peak_insertion_path(lambda)))];
            }
            break;
        case CensusSource::IdealCompatibles:
            for (const LPartition& lambda : enumerate_partitions(rank)) {
                const RootIdeal ideal = RootIdeal::from_partition(lambda);
                ++table.counts[max_compatible_simples(ideal).size()];
            }
            break;
    }
    return table;
}

std::string census_csv(const std::vector<CensusTable>& tables) {
    std::string out = "l,r,count,source\n";
    for (const CensusTable& table : tables) {
        for (int r = 0; r <= table.rank; ++r) {
            out += std::to_string(table.rank);
            out.push_back(',');
            out += std::to_string(r);
            out.push_back(',');
            out += std::to_string(table.counts[static_cast<std::size_t>(r)]);
            out.push_back(',');
            out += census_source_name(table.source);
            out.push_back('\n');
        }
    }
    return out;
}

}  // namespace adnil
