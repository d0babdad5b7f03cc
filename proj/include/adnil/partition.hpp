#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adnil/dyck.hpp"

namespace adnil {

// Largest rank accepted by the enumeration helpers.
inline constexpr int kMaxEnumRank = 16;

// A weakly decreasing tuple of l nonnegative parts whose Ferrers diagram
// fits inside the staircase (l, l-1, ..., 1). Trailing zeros are stored
// explicitly so row indices stay stable.
class LPartition {
public:
    LPartition(int rank, std::vector<int> parts);  // validates

    static LPartition zero(int rank);
    static LPartition staircase(int rank);

    // Parses "5,3,1,1,1,0,0"; the number of parts must equal `rank`.
    static LPartition parse(std::string_view text, int rank);

    int rank() const noexcept { return rank_; }
    const std::vector<int>& parts() const noexcept { return parts_; }

    // 1-based row read; rows past the rank read as 0.
    int part(int row) const;

    std::string to_string() const;

    friend bool operator==(const LPartition&, const LPartition&) = default;

private:
    int rank_ = 0;
    std::vector<int> parts_;
};

/// The Dyck path of half-length rank+1 tracing the diagram boundary from
/// the bottom of the diagonal upward: a vertical unit step becomes u, a
/// horizontal one becomes d.
DyckPath boundary_path(const LPartition& lambda);

/// Inverse of boundary_path. The path must have half-length rank+1.
LPartition partition_from_boundary(const DyckPath& path, int rank);

/// All partitions of the given rank, lexicographically descending by part
/// sequence (staircase first, all zeros last). Exactly Catalan(rank+1) values.
std::vector<LPartition> enumerate_partitions(int rank);

}  // namespace adnil
