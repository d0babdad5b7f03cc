#include "adnil/insertion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace adnil {

DiagonalProfile diagonal_profile(const LPartition& lambda) {
    DiagonalProfile profile{lambda.rank(), {}};
    // Walk the boundary: from column v the next contact is the value of the
    // row just below where column v meets the diagonal. Strictly decreasing,
    // so this terminates.
    int v = lambda.part(1);
    while (v != 0) {
        profile.contacts.push_back(v);
        v = lambda.part(lambda.rank() - v + 2);
    }
    std::reverse(profile.contacts.begin(), profile.contacts.end());
    return profile;
}

LPartition largest_with_profile(const DiagonalProfile& profile) {
    const int l = profile.rank;
    const int k = profile.count();
    if (k == 0) return LPartition::zero(l);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(l));
    for (int j = k; j >= 1; --j) {
        const int copies =
            (j == k) ? l - profile.contact(k) + 1 : profile.contact(j + 1) - profile.contact(j);
        parts.insert(parts.end(), static_cast<std::size_t>(copies), profile.contact(j));
    }
    parts.insert(parts.end(), static_cast<std::size_t>(profile.contact(1) - 1), 0);
    return LPartition(l, std::move(parts));
}

LPartition smallest_with_profile(const DiagonalProfile& profile) {
    const int l = profile.rank;
    const int k = profile.count();
    if (k == 0) return LPartition::zero(l);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(l));
    parts.push_back(profile.contact(k));
    for (int j = k - 1; j >= 1; --j) {
        const int copies = (j == k - 1) ? l - profile.contact(k) + 1
                                        : profile.contact(j + 2) - profile.contact(j + 1);
        parts.insert(parts.end(), static_cast<std::size_t>(copies), profile.contact(j));
    }
    parts.insert(parts.end(), static_cast<std::size_t>(profile.contact(2) - 2), 0);
    return LPartition(l, std::move(parts));
}

InsertionTable insertion_table(const LPartition& lambda) {
    const int l = lambda.rank();
    InsertionTable table{l, diagonal_profile(lambda), {}};
    const DiagonalProfile& profile = table.profile;
    const int k = profile.count();
    table.words.resize(static_cast<std::size_t>(k + 1));
    for (int j = 1; j <= k; ++j) {
        const int r = table.anchor_row(j);  // lambda's row r equals contact(j)
        int h;
        if (j >= 2) {
            h = profile.contact(j + 1) - profile.contact(j) - 1;
        } else {
            // Row 1 descends only through the rows that still hold boxes.
            h = 0;
            while (lambda.part(r + h + 1) > 0) ++h;
        }
        std::vector<int>& row = table.words[static_cast<std::size_t>(j - 1)];
        row.resize(static_cast<std::size_t>(h + 1));
        row[0] = profile.contact(j) - lambda.part(r + 1);
        for (int t = 1; t < h; ++t) {
            row[static_cast<std::size_t>(t)] = lambda.part(r + t) - lambda.part(r + t + 1);
        }
        if (h >= 1) {
            row[static_cast<std::size_t>(h)] = lambda.part(r + h) - profile.contact(j - 1);
        }
    }
    // Seed row: the initial path has l + 1 - contact(k) peaks.
    table.words[static_cast<std::size_t>(k)] = {l - profile.contact(k) + 1};
    return table;
}

namespace {

// Applies one table row to `base`: entry t lands on the (t+1)-th
// maximal-height peak of `base` itself, so the targets are fixed before any
// replacement happens.
std::string apply_insertion_word(const std::string& base, const std::vector<int>& counts) {
    const auto targets = max_peak_offsets(DyckPath(base));
    std::string out;
    std::size_t prev = 0;
    for (std::size_t t = 0; t < counts.size(); ++t) {
        if (counts[t] == 0) continue;
        const std::size_t at = targets[t];
        out.append(base, prev, at - prev);
        out.push_back('u');
        for (int c = 0; c < counts[t]; ++c) out.append("ud");
        out.push_back('d');
        prev = at + 2;
    }
    out.append(base, prev, std::string::npos);
    return out;
}

std::string seed_word(int peaks) {
    std::string word;
    word.reserve(static_cast<std::size_t>(2 * peaks));
    for (int i = 0; i < peaks; ++i) word.append("ud");
    return word;
}

}  // namespace

DyckPath peak_insertion_path(const LPartition& lambda) {
    const InsertionTable table = insertion_table(lambda);
    const int k = table.profile.count();
    std::string word = seed_word(table.word(k + 1)[0]);
    for (int j = k; j >= 1; --j) word = apply_insertion_word(word, table.word(j));
    return DyckPath(std::move(word));
}

std::vector<DyckPath> peak_insertion_trace(const LPartition& lambda) {
    const InsertionTable table = insertion_table(lambda);
    const int k = table.profile.count();
    std::vector<DyckPath> trace;
    trace.reserve(static_cast<std::size_t>(k + 1));
    std::string word = seed_word(table.word(k + 1)[0]);
    trace.emplace_back(DyckPath(word));
    for (int j = k; j >= 1; --j) {
        word = apply_insertion_word(word, table.word(j));
        trace.emplace_back(DyckPath(word));
    }
    return trace;
}

namespace {

using InversionTable = std::unordered_map<std::string, std::vector<int>>;

const InversionTable& inversion_table_for(int rank) {
    static std::shared_mutex mutex;
    static std::map<int, InversionTable> cache;
    {
        std::shared_lock lock(mutex);
        if (const auto it = cache.find(rank); it != cache.end()) return it->second;
    }
    std::unique_lock lock(mutex);
    if (const auto it = cache.find(rank); it != cache.end()) return it->second;
    InversionTable table;
    for (const LPartition& lambda : enumerate_partitions(rank)) {
        table.emplace(peak_insertion_path(lambda).word(), lambda.parts());
    }
    return cache.emplace(rank, std::move(table)).first->second;
}

}  // namespace

LPartition partition_from_peak_insertion(const DyckPath& path, int rank) {
    if (rank < 1 || rank > kMaxInversionRank) {
        throw std::invalid_argument("partition_from_peak_insertion: rank " +
                                    std::to_string(rank) + " outside the inversion bound " +
                                    std::to_string(kMaxInversionRank));
    }
    if (path.half_length() != rank + 1) {
        throw std::invalid_argument("partition_from_peak_insertion: path half-length " +
                                    std::to_string(path.half_length()) +
                                    " does not match rank " + std::to_string(rank) + " + 1");
    }
    const InversionTable& table = inversion_table_for(rank);
    const auto it = table.find(path.word());
    if (it == table.end()) {
        throw std::logic_error("partition_from_peak_insertion: path has no preimage");
    }
    return LPartition(rank, it->second);
}

UduLedger udu_ledger(const LPartition& lambda) {
    const InsertionTable table = insertion_table(lambda);
    const int l = lambda.rank();
    const int k = table.profile.count();
    UduLedger ledger;
    int udu = l - lambda.part(1);  // udu count of the seed path (ud)^{l+1-lambda_1}
    ledger.running.push_back(udu);
    for (int j = k; j >= 1; --j) {
        // An entry lands on a closing peak exactly when its 1-based target
        // index is a prefix sum of the row that created those peaks.
        std::set<int> closing_targets;
        int sum = 0;
        for (const int a : table.word(j + 1)) {
            sum += a;
            closing_targets.insert(sum);
        }
        const std::vector<int>& row = table.word(j);
        for (int t = 0; t < static_cast<int>(row.size()); ++t) {
            const int a = row[static_cast<std::size_t>(t)];
            if (a == 0) continue;
            ledger.support.emplace_back(j, t);
            if (closing_targets.count(t + 1)) {
                ledger.chained.emplace_back(j, t);
                udu += a - 1;
            } else {
                ledger.solo.emplace_back(j, t);
                udu += a - 2;
            }
        }
        ledger.running.push_back(udu);
    }
    std::sort(ledger.support.begin(), ledger.support.end());
    std::sort(ledger.chained.begin(), ledger.chained.end());
    std::sort(ledger.solo.begin(), ledger.solo.end());
    ledger.predicted_udu = l - 2 * static_cast<int>(ledger.solo.size()) -
                           static_cast<int>(ledger.chained.size());
    return ledger;
}

int predicted_udu(const LPartition& lambda) { return udu_ledger(lambda).predicted_udu; }

int predicted_peaks(const LPartition& lambda) {
    return lambda.rank() + 1 - static_cast<int>(udu_ledger(lambda).support.size());
}

}  // namespace adnil
