#pragma once

#include <vector>

#include "adnil/root_poset.hpp"

namespace adnil {

// Largest rank accepted by the matrix-unit oracle ((rank+1)-square matrices).
inline constexpr int kMaxLieRank = 6;

// The elementary matrix E_{row,col} of the (rank+1)-square matrix algebra.
struct MatrixUnit {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const MatrixUnit&, const MatrixUnit&) = default;
};

/// The matrix units spanning the ideal: root [i,j] becomes E_{i,j+1}.
/// Always strictly upper triangular. Sorted.
std::vector<MatrixUnit> ideal_units(const RootIdeal& ideal);

/// Ground-truth check that the span of ideal_units(ideal) is a Lie ideal of
/// the parabolic attached to `simples`, by bracketing every basis element of
/// the parabolic (upper units, negative units of the supported intervals,
/// diagonal units) against every ideal unit with the structure constants
/// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb. Exact integer arithmetic.
bool is_lie_ideal(const RootIdeal& ideal, const SimpleSubset& simples);

}  // namespace adnil
