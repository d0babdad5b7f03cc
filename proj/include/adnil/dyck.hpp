#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adnil {

// Largest half-length accepted by enumerate_dyck_paths.
inline constexpr int kMaxDyckHalfLength = 16;

// Parse failure for Dyck words. `position` is 1-based and points at the
// first offending letter; for an unbalanced word it points at the first
// u step that is never closed.
class DyckParseError : public std::runtime_error {
public:
    enum class Kind { IllegalCharacter, NegativePrefix, Unbalanced };

    DyckParseError(Kind kind, std::size_t position, const std::string& message)
        : std::runtime_error(message), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

// A balanced word over {u, d} whose prefix sums never go negative.
// Immutable value; the canonical text form is the lowercase word.
class DyckPath {
public:
    DyckPath() = default;                 // the empty path
    explicit DyckPath(std::string word);  // validates; lowercase only

    // Case-insensitive parse of user input.
    static DyckPath parse(std::string_view text);

    const std::string& word() const noexcept { return word_; }
    int half_length() const noexcept { return static_cast<int>(word_.size() / 2); }
    bool empty() const noexcept { return word_.empty(); }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    std::string word_;
};

/// Number of ud factors.
int count_peaks(const DyckPath& path);

/// Number of udu factors.
int count_udu(const DyckPath& path);

/// Peaks immediately followed by a u step. Equals count_udu on every path.
int count_u_peaks(const DyckPath& path);

/// 0-based offsets of the u step of every peak, left to right.
std::vector<std::size_t> peak_offsets(const DyckPath& path);

/// 0-based offsets of the u step of the peaks at maximal height.
std::vector<std::size_t> max_peak_offsets(const DyckPath& path);

/// Replaces the `index`-th maximal-height peak (1-based, left to right),
/// written ud, by u(ud)^count d. The result is one level higher and 2*count
/// steps longer. Throws std::out_of_range when there is no such peak.
DyckPath insert_peaks(const DyckPath& path, int index, int count);

/// All Dyck paths of half-length n, in lexicographic order with u < d.
std::vector<DyckPath> enumerate_dyck_paths(int n);

// Comparison in the u < d letter order (not ASCII order).
bool dyck_word_less(std::string_view a, std::string_view b);

}  // namespace adnil
