#include "adnil/root_poset.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "adnil/insertion.hpp"

namespace adnil {

std::optional<EpsilonPair> add_roots(const EpsilonPair& x, const EpsilonPair& y) {
    if (x.to == y.from && x.from != y.to) return EpsilonPair{x.from, y.to};
    if (y.to == x.from && y.from != x.to) return EpsilonPair{y.from, x.to};
    return std::nullopt;
}

Antichain::Antichain(std::vector<PositiveRoot> roots) : roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end());
    for (const PositiveRoot& root : roots_) {
        if (root.start < 1 || root.start > root.end) {
            throw std::invalid_argument("Antichain: bad root " + std::to_string(root.start) +
                                        "-" + std::to_string(root.end));
        }
    }
    for (std::size_t i = 0; i + 1 < roots_.size(); ++i) {
        const PositiveRoot& a = roots_[i];
        const PositiveRoot& b = roots_[i + 1];
        // Sorted by start, so comparability shows up as equal starts or
        // non-increasing ends.
        if (a.start == b.start || a.end >= b.end) {
            throw std::invalid_argument("Antichain: roots " + std::to_string(a.start) + "-" +
                                        std::to_string(a.end) + " and " +
                                        std::to_string(b.start) + "-" + std::to_string(b.end) +
                                        " are comparable");
        }
    }
}

Antichain Antichain::parse(std::string_view text, int rank) {
    std::string_view trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
    if (trimmed.empty()) return Antichain();
    std::vector<PositiveRoot> roots;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = std::min(trimmed.find(',', pos), trimmed.size());
        std::string_view token = trimmed.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) {
            throw std::invalid_argument("Antichain: empty token");
        }
        const std::size_t dash = token.find('-');
        int start = 0;
        int end = 0;
        const auto read = [&token](std::size_t from, std::size_t to, int& out) {
            const auto [ptr, ec] =
                std::from_chars(token.data() + from, token.data() + to, out);
            return ec == std::errc() && ptr == token.data() + to;
        };
        bool ok;
        if (dash == std::string_view::npos) {
            ok = read(0, token.size(), start);
            end = start;
        } else {
            ok = read(0, dash, start) && read(dash + 1, token.size(), end);
        }
        if (!ok) {
            throw std::invalid_argument("Antichain: bad root token '" + std::string(token) + "'");
        }
        if (start < 1 || start > end || end > rank) {
            throw std::invalid_argument("Antichain: root " + std::string(token) +
                                        " outside rank " + std::to_string(rank));
        }
        roots.push_back({start, end});
        if (comma == trimmed.size()) break;
        pos = comma + 1;
    }
    return Antichain(std::move(roots));
}

std::string Antichain::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(roots_[i].start);
        out.push_back('-');
        out += std::to_string(roots_[i].end);
    }
    return out;
}

RootIdeal::RootIdeal(int rank) : rank_(rank) {
    if (rank_ < 1) throw std::invalid_argument("RootIdeal: rank must be positive");
}

RootIdeal RootIdeal::from_antichain(const Antichain& antichain, int rank) {
    RootIdeal ideal(rank);
    std::set<PositiveRoot> closure;
    for (const PositiveRoot& root : antichain.roots()) {
        if (root.end > rank) {
            throw std::invalid_argument("RootIdeal: root end " + std::to_string(root.end) +
                                        " outside rank " + std::to_string(rank));
        }
        for (int p = 1; p <= root.start; ++p) {
            for (int q = root.end; q <= rank; ++q) closure.insert({p, q});
        }
    }
    ideal.roots_.assign(closure.begin(), closure.end());
    return ideal;
}

RootIdeal RootIdeal::from_partition(const LPartition& lambda) {
    const int l = lambda.rank();
    RootIdeal ideal(l);
    for (int i = 1; i <= l; ++i) {
        for (int j = l + 1 - lambda.part(i); j <= l; ++j) ideal.roots_.push_back({i, j});
    }
    std::sort(ideal.roots_.begin(), ideal.roots_.end());
    return ideal;
}

bool RootIdeal::contains(const PositiveRoot& root) const {
    return std::binary_search(roots_.begin(), roots_.end(), root);
}

Antichain RootIdeal::minimal_roots() const {
    std::vector<PositiveRoot> minimal;
    for (const PositiveRoot& root : roots_) {
        const bool left_trim = root.start < root.end && contains({root.start + 1, root.end});
        const bool right_trim = root.start < root.end && contains({root.start, root.end - 1});
        if (!left_trim && !right_trim) minimal.push_back(root);
    }
    return Antichain(std::move(minimal));
}

LPartition RootIdeal::to_partition() const {
    std::vector<int> parts(static_cast<std::size_t>(rank_), 0);
    for (const PositiveRoot& root : roots_) ++parts[static_cast<std::size_t>(root.start - 1)];
    return LPartition(rank_, std::move(parts));
}

SimpleSubset SimpleSubset::from_mask(int rank, unsigned mask) {
    SimpleSubset subset{rank, {}};
    for (int i = 1; i <= rank; ++i) {
        if (mask & (1u << (i - 1))) subset.indices.push_back(i);
    }
    return subset;
}

bool SimpleSubset::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

bool SimpleSubset::subset_of(const SimpleSubset& other) const {
    return std::includes(other.indices.begin(), other.indices.end(), indices.begin(),
                         indices.end());
}

std::string SimpleSubset::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(indices[i]);
    }
    return out;
}

namespace {

// All intervals fully supported inside `simples`.
std::vector<PositiveRoot> supported_intervals(const SimpleSubset& simples) {
    std::vector<PositiveRoot> intervals;
    for (const int i : simples.indices) {
        for (int j = i; j <= simples.rank && simples.contains(j); ++j) {
            intervals.push_back({i, j});
        }
    }
    return intervals;
}

}  // namespace

bool is_ideal_of_parabolic(const RootIdeal& ideal, const SimpleSubset& simples) {
    const int l = ideal.rank();
    if (simples.rank != l) {
        throw std::invalid_argument("is_ideal_of_parabolic: rank mismatch");
    }
    const std::vector<PositiveRoot> supported = supported_intervals(simples);
    for (const PositiveRoot& root : supported) {
        if (ideal.contains(root)) return false;
    }
    std::vector<EpsilonPair> betas;
    for (int i = 1; i <= l; ++i) {
        for (int j = i; j <= l; ++j) betas.push_back(to_epsilon(PositiveRoot{i, j}));
    }
    for (const PositiveRoot& root : supported) betas.push_back(negated(to_epsilon(root)));
    for (const PositiveRoot& alpha : ideal.roots()) {
        const EpsilonPair a = to_epsilon(alpha);
        for (const EpsilonPair& beta : betas) {
            const auto sum = add_roots(a, beta);
            if (sum && sum->positive() && !ideal.contains(root_from_epsilon(*sum))) {
                return false;
            }
        }
    }
    return true;
}

SimpleSubset max_compatible_simples(const RootIdeal& ideal) {
    std::vector<bool> blocked(static_cast<std::size_t>(ideal.rank() + 1), false);
    const Antichain minimal = ideal.minimal_roots();
    for (const PositiveRoot& root : minimal.roots()) {
        blocked[static_cast<std::size_t>(root.start)] = true;
        blocked[static_cast<std::size_t>(root.end)] = true;
    }
    SimpleSubset subset{ideal.rank(), {}};
    for (int i = 1; i <= ideal.rank(); ++i) {
        if (!blocked[static_cast<std::size_t>(i)]) subset.indices.push_back(i);
    }
    return subset;
}

AntichainSplit split_antichain(const Antichain& antichain) {
    std::set<int> ends;
    for (const PositiveRoot& root : antichain.roots()) ends.insert(root.end);
    AntichainSplit split;
    for (const PositiveRoot& root : antichain.roots()) {
        (ends.count(root.start) ? split.chained : split.solo).push_back(root);
    }
    return split;
}

std::vector<std::pair<PositiveRoot, std::pair<int, int>>> insertion_coordinates(
    const RootIdeal& ideal) {
    const int l = ideal.rank();
    const DiagonalProfile profile = diagonal_profile(ideal.to_partition());
    std::vector<std::pair<PositiveRoot, std::pair<int, int>>> out;
    const Antichain minimal = ideal.minimal_roots();
    for (const PositiveRoot& root : minimal.roots()) {
        const int depth = l + 1 - root.end;  // the diagram cell column, = lambda_{root.start}
        int row = 1;
        while (profile.contact(row) < depth) ++row;
        const int slot = root.start - (l - profile.contact(row + 1) + 2);
        out.push_back({root, {row, slot}});
    }
    return out;
}

RootIdeal dual_ideal(const RootIdeal& ideal) {
    const DyckPath path = peak_insertion_path(ideal.to_partition());
    return RootIdeal::from_partition(partition_from_boundary(path, ideal.rank()));
}

}  // namespace adnil
