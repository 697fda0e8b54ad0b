#pragma once

#include <vector>

#include "severi/base_field.hpp"

namespace severi {

using ScalarRow = std::vector<Scalar>;

/// In-place reduced row echelon form over k; returns pivot columns. Zero rows
/// are dropped from `rows`.
std::vector<int> rref_base(const BaseField& k, std::vector<ScalarRow>& rows);

int rank_base(const BaseField& k, std::vector<ScalarRow> rows);

/// Basis of {x : A x = 0} for an r x c matrix given by rows.
std::vector<ScalarRow> nullspace_base(const BaseField& k, std::vector<ScalarRow> rows, int cols);

}  // namespace severi
