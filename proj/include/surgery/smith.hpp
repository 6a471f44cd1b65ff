#pragma once

#include <optional>
#include <vector>

#include "surgery/int_matrix.hpp"

namespace surgery {

/// U·A·V = D with U, V unimodular, D diagonal with non-negative entries
/// forming a divisibility chain d1 | d2 | ...
struct SNFResult {
    IntMatrix u, d, v;

    std::vector<Int> diagonal() const;
    /// Nonzero diagonal entries.
    std::vector<Int> invariant_factors() const;
    long rank() const;
};

SNFResult smith_normal_form(const IntMatrix& a);

/// Nonzero invariant factors only, computed without transform tracking.
/// Unit pivots are eliminated sparsely first; the leftover core (torsion
/// and non-unit pivots) goes through the dense routine.
std::vector<Int> invariant_factors(const SparseIntMatrix& a);

long rank(const SparseIntMatrix& a);

/// One integral solution of A·x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve(const SparseIntMatrix& a, const std::vector<Int>& b);

/// Columns form a basis of the integer kernel of A (a primitive sublattice
/// basis, since it comes from a unimodular change of coordinates).
IntMatrix kernel_basis(const IntMatrix& a);

} // namespace surgery
