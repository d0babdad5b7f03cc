#include "adnil/dyck.hpp"

#include <algorithm>
#include <cctype>

namespace adnil {

namespace {

// Validates a lowercase u/d word; throws the position-aware errors.
void validate_word(std::string_view word) {
    int height = 0;
    std::size_t last_rise_from_zero = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const char c = word[i];
        if (c != 'u' && c != 'd') {
            throw DyckParseError(DyckParseError::Kind::IllegalCharacter, i + 1,
                                 "illegal character '" + std::string(1, c) +
                                     "' at position " + std::to_string(i + 1));
        }
        if (c == 'u') {
            if (height == 0) last_rise_from_zero = i + 1;
            ++height;
        } else {
            if (height == 0) {
                throw DyckParseError(DyckParseError::Kind::NegativePrefix, i + 1,
                                     "negative prefix at position " + std::to_string(i + 1));
            }
            --height;
        }
    }
    if (height != 0) {
        throw DyckParseError(DyckParseError::Kind::Unbalanced, last_rise_from_zero,
                             "unbalanced word: " + std::to_string(height) +
                                 " unmatched u, first at position " +
                                 std::to_string(last_rise_from_zero));
    }
}

std::vector<std::size_t> peak_offsets_of(std::string_view word) {
    std::vector<std::size_t> offsets;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == 'u' && word[i + 1] == 'd') offsets.push_back(i);
    }
    return offsets;
}

std::vector<std::size_t> max_peak_offsets_of(std::string_view word) {
    int height = 0;
    int max_height = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        height += word[i] == 'u' ? 1 : -1;
        if (word[i] == 'u' && word[i + 1] == 'd') max_height = std::max(max_height, height);
    }
    std::vector<std::size_t> offsets;
    height = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        height += word[i] == 'u' ? 1 : -1;
        if (word[i] == 'u' && word[i + 1] == 'd' && height == max_height) offsets.push_back(i);
    }
    return offsets;
}

}  // namespace

DyckPath::DyckPath(std::string word) : word_(std::move(word)) { validate_word(word_); }

DyckPath DyckPath::parse(std::string_view text) {
    if (text.empty()) {
        throw DyckParseError(DyckParseError::Kind::Unbalanced, 1, "empty word");
    }
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return DyckPath(std::move(lowered));
}

int count_peaks(const DyckPath& path) {
    return static_cast<int>(peak_offsets_of(path.word()).size());
}

int count_udu(const DyckPath& path) {
    const std::string& w = path.word();
    int n = 0;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        if (w[i] == 'u' && w[i + 1] == 'd' && w[i + 2] == 'u') ++n;
    }
    return n;
}

int count_u_peaks(const DyckPath& path) {
    const std::string& w = path.word();
    int n = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == 'u' && w[i + 1] == 'd' && i + 2 < w.size() && w[i + 2] == 'u') ++n;
    }
    return n;
}

std::vector<std::size_t> peak_offsets(const DyckPath& path) {
    return peak_offsets_of(path.word());
}

std::vector<std::size_t> max_peak_offsets(const DyckPath& path) {
    return max_peak_offsets_of(path.word());
}

DyckPath insert_peaks(const DyckPath& path, int index, int count) {
    if (count < 1) throw std::invalid_argument("insert_peaks: count must be positive");
    const auto peaks = max_peak_offsets_of(path.word());
    if (index < 1 || static_cast<std::size_t>(index) > peaks.size()) {
        throw std::out_of_range("insert_peaks: requested maximal-height peak #" +
                                std::to_string(index) + " but the path has " +
                                std::to_string(peaks.size()));
    }
    const std::size_t at = peaks[static_cast<std::size_t>(index) - 1];
    std::string out;
    out.reserve(path.word().size() + 2 * static_cast<std::size_t>(count));
    out.append(path.word(), 0, at);
    out.push_back('u');
    for (int i = 0; i < count; ++i) out.append("ud");
    out.push_back('d');
    out.append(path.word(), at + 2, std::string::npos);
    return DyckPath(std::move(out));
}

std::vector<DyckPath> enumerate_dyck_paths(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_dyck_paths: negative half-length");
    if (n > kMaxDyckHalfLength) {
        throw std::invalid_argument("enumerate_dyck_paths: half-length " + std::to_string(n) +
                                    " exceeds the bound " + std::to_string(kMaxDyckHalfLength));
    }
    std::vector<DyckPath> out;
    std::string word(static_cast<std::size_t>(2 * n), 'u');
    auto rec = [&](auto&& self, int pos, int open, int closed) -> void {
        if (pos == 2 * n) {
            out.emplace_back(DyckPath(word));
            return;
        }
        if (open < n) {
            word[static_cast<std::size_t>(pos)] = 'u';
            self(self, pos + 1, open + 1, closed);
        }
        if (closed < open) {
            word[static_cast<std::size_t>(pos)] = 'd';
            self(self, pos + 1, open, closed + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

bool dyck_word_less(std::string_view a, std::string_view b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] == 'u';  // u sorts before d
    }
    return a.size() < b.size();
}

}  // namespace adnil
