#pragma once

#include <utility>
#include <vector>

#include "adnil/dyck.hpp"
#include "adnil/partition.hpp"

namespace adnil {

// Largest rank for which partition_from_peak_insertion keeps a lookup table.
inline constexpr int kMaxInversionRank = 12;

// The columns where the diagram boundary touches the diagonal x+y = rank+1,
// read bottom to top: 0 < contacts[0] < ... < contacts[k-1] <= rank. Empty
// exactly when the partition is zero.
struct DiagonalProfile {
    int rank = 0;
    std::vector<int> contacts;

    int count() const noexcept { return static_cast<int>(contacts.size()); }

    // contact(j) for j = 1..count() is the j-th column; by convention
    // contact(j) = 0 for j <= 0 and rank+1 for j > count().
    int contact(int j) const {
        if (j <= 0) return 0;
        if (j > count()) return rank + 1;
        return contacts[static_cast<std::size_t>(j - 1)];
    }

    friend bool operator==(const DiagonalProfile&, const DiagonalProfile&) = default;
};

DiagonalProfile diagonal_profile(const LPartition& lambda);

/// The largest / smallest partitions whose boundary realizes the profile.
/// Every partition with that profile sits between the two, componentwise.
LPartition largest_with_profile(const DiagonalProfile& profile);
LPartition smallest_with_profile(const DiagonalProfile& profile);

// Peak-insertion prescription read off the partition boundary between
// consecutive diagonal contacts. Row j (1-based, j = 1..k+1) lists, slot by
// slot, how many peaks to insert on each maximal-height peak of the path
// built so far; the construction consumes rows k+1 (the seed, giving the
// initial peak count) down to 1.
struct InsertionTable {
    int rank = 0;
    DiagonalProfile profile;
    std::vector<std::vector<int>> words;  // words[j-1] holds row j

    int rows() const noexcept { return static_cast<int>(words.size()); }
    const std::vector<int>& word(int j) const { return words[static_cast<std::size_t>(j - 1)]; }

    // One less than the slot count of row j (the number of down steps the
    // boundary takes inside that strip).
    int height(int j) const { return static_cast<int>(word(j).size()) - 1; }

    // The diagram row whose value equals contact(j); the shape of the rows
    // below it, down to the next contact, is what row j encodes.
    int anchor_row(int j) const { return rank - profile.contact(j + 1) + 2; }

    friend bool operator==(const InsertionTable&, const InsertionTable&) = default;
};

InsertionTable insertion_table(const LPartition& lambda);

/// The peak-insertion bijection onto Dyck paths of half-length rank+1:
/// start from (ud)^{seed} and work the table rows top to bottom, inserting
/// word(j)[t] peaks on the (t+1)-th maximal-height peak of the path the row
/// started from. A zero entry skips its target peak but still consumes it.
DyckPath peak_insertion_path(const LPartition& lambda);

/// The same construction keeping every intermediate path; front() is the
/// seed path, back() the final one. k+1 entries for a profile of count k.
std::vector<DyckPath> peak_insertion_trace(const LPartition& lambda);

/// Inverse of peak_insertion_path via a memoized per-rank lookup table.
/// Only available for rank <= kMaxInversionRank.
LPartition partition_from_peak_insertion(const DyckPath& path, int rank);

// Classification of the nonzero insertion entries by the kind of peak they
// land on. A `chained` entry lands on the closing peak of a consecutive
// group of maximal-height peaks (not a u-peak, so the insertion of a peaks
// adds a-1 udu factors); a `solo` entry lands on a u-peak and adds a-2.
// Entries are (row, slot) pairs with row <= profile count.
struct UduLedger {
    std::vector<std::pair<int, int>> support;  // nonzero entries, sorted
    std::vector<std::pair<int, int>> chained;
    std::vector<std::pair<int, int>> solo;
    std::vector<int> running;   // udu counts of the trace paths, seed first
    int predicted_udu = 0;      // rank - 2*#solo - #chained
};

UduLedger udu_ledger(const LPartition& lambda);

/// rank - 2*#solo - #chained; equals count_udu(peak_insertion_path(lambda)).
int predicted_udu(const LPartition& lambda);

/// rank + 1 - #support; equals count_peaks(peak_insertion_path(lambda)).
int predicted_peaks(const LPartition& lambda);

}  // namespace adnil
