#include "adnil/lie_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace adnil {

std::vector<MatrixUnit> ideal_units(const RootIdeal& ideal) {
    std::vector<MatrixUnit> units;
    units.reserve(ideal.size());
    for (const PositiveRoot& root : ideal.roots()) units.push_back({root.start, root.end + 1});
    std::sort(units.begin(), units.end());
    return units;
}

bool is_lie_ideal(const RootIdeal& ideal, const SimpleSubset& simples) {
    const int l = ideal.rank();
    if (l > kMaxLieRank) {
        throw std::invalid_argument("is_lie_ideal: rank " + std::to_string(l) +
                                    " exceeds the oracle bound " + std::to_string(kMaxLieRank));
    }
    if (simples.rank != l) throw std::invalid_argument("is_lie_ideal: rank mismatch");
    const int n = l + 1;

    // Intervals fully supported in `simples`; the ideal must avoid them.
    std::vector<PositiveRoot> supported;
    for (const int i : simples.indices) {
        for (int j = i; j <= l && simples.contains(j); ++j) supported.push_back({i, j});
    }
    for (const PositiveRoot& root : supported) {
        if (ideal.contains(root)) return false;
    }

    const std::vector<MatrixUnit> units = ideal_units(ideal);
    const auto in_span = [&units](int row, int col) {
        return std::binary_search(units.begin(), units.end(), MatrixUnit{row, col});
    };

    // Basis of the parabolic: the whole upper triangle, the negative units of
    // the supported intervals, and the diagonal.
    std::vector<MatrixUnit> basis;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) basis.push_back({a, b});
    }
    for (const PositiveRoot& root : supported) basis.push_back({root.end + 1, root.start});
    for (int a = 1; a <= n; ++a) basis.push_back({a, a});

    for (const MatrixUnit& x : basis) {
        if (x.row == x.col) continue;  // diagonal units only rescale each E_cd
        for (const MatrixUnit& y : units) {
            // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
            const bool first = x.col == y.row;
            const bool second = y.col == x.row;
            if (first && second) return false;  // E_aa - E_bb leaves the nilradical
            if (first && !in_span(x.row, y.col)) return false;
            if (second && !in_span(y.row, x.col)) return false;
        }
    }
    return true;
}

}  // namespace adnil
