#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "e6voa/scalar.hpp"

namespace e6voa::linalg {

// Sparse row: column index -> nonzero rational.
using SparseRow = std::map<std::size_t, Scalar>;

// Exact nullspace of the matrix whose rows are given.  Elimination is
// fraction-free over the integers (each row is scaled to a primitive integer
// vector first) and single-threaded, so the result is deterministic.  Each
// basis vector is primitive integral with its first nonzero entry positive.
std::vector<std::vector<Scalar>> nullspace(const std::vector<SparseRow>& rows, std::size_t ncols);

// Rank of the same matrix.
std::size_t rank(const std::vector<SparseRow>& rows, std::size_t ncols);

// Scale to a primitive integer vector with positive leading entry.
std::vector<Scalar> normalize(std::vector<Scalar> v);

}  // namespace e6voa::linalg
