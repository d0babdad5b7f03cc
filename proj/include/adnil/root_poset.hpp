#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adnil/partition.hpp"

namespace adnil {

// The positive root alpha_start + ... + alpha_end of A_l, 1 <= start <= end <= l.
// In epsilon coordinates this is epsilon_start - epsilon_{end+1}.
struct PositiveRoot {
    int start = 1;
    int end = 1;

    bool contains(const PositiveRoot& other) const noexcept {
        return start <= other.start && other.end <= end;
    }

    friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

// epsilon_from - epsilon_to with from != to; positive exactly when from < to.
struct EpsilonPair {
    int from = 0;
    int to = 0;

    bool positive() const noexcept { return from < to; }

    friend bool operator==(const EpsilonPair&, const EpsilonPair&) = default;
};

inline EpsilonPair to_epsilon(const PositiveRoot& r) noexcept { return {r.start, r.end + 1}; }
inline EpsilonPair negated(const EpsilonPair& e) noexcept { return {e.to, e.from}; }
inline PositiveRoot root_from_epsilon(const EpsilonPair& e) { return {e.from, e.to - 1}; }

/// Root addition in type A: defined exactly when the sum is again a root.
std::optional<EpsilonPair> add_roots(const EpsilonPair& x, const EpsilonPair& y);

// A set of pairwise incomparable roots (no interval contains another), kept
// sorted by start index. Starts are pairwise distinct, ends likewise.
class Antichain {
public:
    Antichain() = default;
    explicit Antichain(std::vector<PositiveRoot> roots);  // validates

    // Parses "1-3,2-5,5-7"; a bare "5" is accepted for the simple root 5-5.
    // The empty string is the empty antichain.
    static Antichain parse(std::string_view text, int rank);

    const std::vector<PositiveRoot>& roots() const noexcept { return roots_; }
    std::size_t size() const noexcept { return roots_.size(); }
    std::string to_string() const;

    friend bool operator==(const Antichain&, const Antichain&) = default;

private:
    std::vector<PositiveRoot> roots_;
};

// An upward closed set of positive roots of A_rank: with every root it
// contains all superintervals. The combinatorial face of a nilpotent ideal
// of the Borel subalgebra.
class RootIdeal {
public:
    explicit RootIdeal(int rank);  // the empty ideal

    static RootIdeal from_antichain(const Antichain& antichain, int rank);

    // Row i of the staircase holds the lambda_i largest-end roots starting
    // at i; this inverts to_partition.
    static RootIdeal from_partition(const LPartition& lambda);

    int rank() const noexcept { return rank_; }
    const std::vector<PositiveRoot>& roots() const noexcept { return roots_; }
    std::size_t size() const noexcept { return roots_.size(); }
    bool contains(const PositiveRoot& root) const;

    /// The minimal roots: members with no proper subinterval inside. An
    /// antichain, and from_antichain of it rebuilds the ideal.
    Antichain minimal_roots() const;

    /// lambda_i = number of roots starting at i.
    LPartition to_partition() const;

    friend bool operator==(const RootIdeal&, const RootIdeal&) = default;

private:
    int rank_ = 0;
    std::vector<PositiveRoot> roots_;  // sorted
};

// A subset of the simple roots {1..rank}.
struct SimpleSubset {
    int rank = 0;
    std::vector<int> indices;  // sorted

    static SimpleSubset from_mask(int rank, unsigned mask);

    bool contains(int i) const;
    bool subset_of(const SimpleSubset& other) const;
    std::size_t size() const noexcept { return indices.size(); }
    std::string to_string() const;

    friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;
};

/// Raw definition of "ideal of the parabolic for `simples`": the ideal avoids
/// every root supported inside `simples` and is closed under adding any
/// positive root as well as either sign of those supported roots. Serves as
/// the oracle for max_compatible_simples.
bool is_ideal_of_parabolic(const RootIdeal& ideal, const SimpleSubset& simples);

/// The largest subset of simple roots whose parabolic still has the ideal:
/// everything except the start and end indices of the minimal roots.
SimpleSubset max_compatible_simples(const RootIdeal& ideal);

// Antichain members whose start index is the end index of some member
// (self-coincidence included, so every simple root member is chained).
struct AntichainSplit {
    std::vector<PositiveRoot> chained;
    std::vector<PositiveRoot> solo;
};

AntichainSplit split_antichain(const Antichain& antichain);

/// For each minimal root, the insertion-table coordinates (row, slot) of the
/// boundary segment under its diagram cell. A bijection onto the ledger
/// support; chained roots land on chained entries and solo roots on solo
/// entries.
std::vector<std::pair<PositiveRoot, std::pair<int, int>>> insertion_coordinates(
    const RootIdeal& ideal);

/// The duality on ideals: push the partition through the peak-insertion map,
/// read the resulting path back through the boundary map. Sends an ideal
/// with p minimal roots to one with rank - p.
RootIdeal dual_ideal(const RootIdeal& ideal);

}  // namespace adnil
