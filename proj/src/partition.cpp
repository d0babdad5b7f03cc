#include "adnil/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace adnil {

LPartition::LPartition(int rank, std::vector<int> parts)
    : rank_(rank), parts_(std::move(parts)) {
    if (rank_ < 1) throw std::invalid_argument("LPartition: rank must be positive");
    if (static_cast<int>(parts_.size()) != rank_) {
        throw std::invalid_argument("LPartition: expected " + std::to_string(rank_) +
                                    " parts, got " + std::to_string(parts_.size()));
    }
    for (int i = 1; i <= rank_; ++i) {
        const int value = parts_[static_cast<std::size_t>(i - 1)];
        if (value < 0) {
            throw std::invalid_argument("LPartition: part " + std::to_string(i) +
                                        " is negative");
        }
        if (i > 1 && value > parts_[static_cast<std::size_t>(i - 2)]) {
            throw std::invalid_argument("LPartition: parts must be weakly decreasing (row " +
                                        std::to_string(i) + ")");
        }
        if (value > rank_ + 1 - i) {
            throw std::invalid_argument("LPartition: part " + std::to_string(i) + " is " +
                                        std::to_string(value) + ", exceeds the staircase bound " +
                                        std::to_string(rank_ + 1 - i));
        }
    }
}

LPartition LPartition::zero(int rank) {
    return LPartition(rank, std::vector<int>(static_cast<std::size_t>(rank), 0));
}

LPartition LPartition::staircase(int rank) {
    std::vector<int> parts(static_cast<std::size_t>(rank));
    std::iota(parts.rbegin(), parts.rend(), 1);
    return LPartition(rank, std::move(parts));
}

LPartition LPartition::parse(std::string_view text, int rank) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("LPartition: bad part token '" + std::string(token) +
                                        "'");
        }
        parts.push_back(value);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return LPartition(rank, std::move(parts));
}

int LPartition::part(int row) const {
    if (row < 1) throw std::out_of_range("LPartition::part: row must be >= 1");
    if (row > rank_) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

std::string LPartition::to_string() const {
    std::string out;
    for (int i = 0; i < rank_; ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(parts_[static_cast<std::size_t>(i)]);
    }
    return out;
}

DyckPath boundary_path(const LPartition& lambda) {
    const int l = lambda.rank();
    std::string word;
    word.reserve(static_cast<std::size_t>(2 * l + 2));
    for (int i = l; i >= 0; --i) {
        const int here = (i == 0) ? l + 1 : lambda.part(i);
        const int below = (i == l) ? 0 : lambda.part(i + 1);
        word.push_back('u');
        word.append(static_cast<std::size_t>(here - below), 'd');
    }
    return DyckPath(std::move(word));
}

LPartition partition_from_boundary(const DyckPath& path, int rank) {
    if (path.half_length() != rank + 1) {
        throw std::invalid_argument("partition_from_boundary: path half-length " +
                                    std::to_string(path.half_length()) + " does not match rank " +
                                    std::to_string(rank) + " + 1");
    }
    // Split the word into u d^{c_rank} u d^{c_{rank-1}} ... u d^{c_0}.
    std::vector<int> runs;
    runs.reserve(static_cast<std::size_t>(rank + 1));
    for (const char c : path.word()) {
        if (c == 'u') {
            runs.push_back(0);
        } else {
            ++runs.back();
        }
    }
    std::vector<int> parts(static_cast<std::size_t>(rank));
    int acc = 0;
    for (int i = rank; i >= 1; --i) {
        acc += runs[static_cast<std::size_t>(rank - i)];
        parts[static_cast<std::size_t>(i - 1)] = acc;
    }
    return LPartition(rank, std::move(parts));
}

std::vector<LPartition> enumerate_partitions(int rank) {
    if (rank < 1) throw std::invalid_argument("enumerate_partitions: rank must be positive");
    if (rank > kMaxEnumRank) {
        throw std::invalid_argument("enumerate_partitions: rank " + std::to_string(rank) +
                                    " exceeds the bound " + std::to_string(kMaxEnumRank));
    }
    std::vector<LPartition> out;
    std::vector<int> parts(static_cast<std::size_t>(rank), 0);
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (row > rank) {
            out.emplace_back(rank, parts);
            return;
        }
        for (int v = std::min(cap, rank + 1 - row); v >= 0; --v) {
            parts[static_cast<std::size_t>(row - 1)] = v;
            self(self, row + 1, v);
        }
    };
    rec(rec, 1, rank);
    return out;
}

}  // namespace adnil
