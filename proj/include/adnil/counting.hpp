#pragma once

#include <string>
#include <vector>

namespace adnil {

// Largest rank accepted by the census enumerations.
inline constexpr int kMaxCensusRank = 10;

/// The k-th Catalan number, exact; throws std::overflow_error past the
/// 64-bit signed range.
long long catalan(int k);

/// Exact binomial coefficient; 0 outside the triangle, overflow-checked.
long long binomial(int n, int k);

/// (1/n) C(n,k) C(n,k-1): Dyck paths of half-length n with k peaks.
/// Requires 1 <= k <= n.
long long narayana(int n, int k);

/// Closed form for the number of Dyck paths of half-length rank+1 with
/// exactly r udu factors: C(rank,r) * sum_k C(rank-r, 2k) Catalan(k).
long long count_paths_with_udu(int rank, int r);

enum class CensusSource {
    Formula,           // the closed form above
    UduOfInsertion,    // scan udu over the peak-insertion image of every partition
    IdealCompatibles,  // size of the maximal compatible simple set per ideal
};

const char* census_source_name(CensusSource source);

struct CensusTable {
    int rank = 0;
    CensusSource source = CensusSource::Formula;
    std::vector<long long> counts;  // index r = 0..rank

    friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Histogram over all Catalan(rank+1) objects (or the closed form). The
/// three sources agree on every rank.
CensusTable census(int rank, CensusSource source);

/// "l,r,count,source" rows, one per (rank, r) per table, header included.
std::string census_csv(const std::vector<CensusTable>& tables);

}  // namespace adnil
