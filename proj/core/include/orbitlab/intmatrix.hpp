// Dense arbitrary-precision integer matrices and the exact eliminations the
// library is built on: fraction-free (Bareiss) rank and the rational kernel.
// Smith normal form lives in homology.hpp; it is deliberately a separate
// algorithm so the two can serve as cross-checks of one another.
#pragma once

#include <vector>

#include "orbitlab/numeric.hpp"

namespace orbitlab {

struct IntMatrix {
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows(rows), cols(cols),
        entries(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;  // row-major

  Int& at(int r, int c) {
    return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                   static_cast<size_t>(c)];
  }
  const Int& at(int r, int c) const {
    return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                   static_cast<size_t>(c)];
  }
};

// Rank over the rationals by fraction-free Gaussian elimination (Bareiss).
// Exact; never touches floating point.
int exact_rank(const IntMatrix& m);

// Basis of the rational kernel {x : M x = 0}, returned as primitive integer
// vectors (content 1, first nonzero entry positive), one per free column of
// the reduced echelon form, in column order. Empty when M is injective.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

}  // namespace orbitlab
