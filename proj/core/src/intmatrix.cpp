#include "orbitlab/intmatrix.hpp"

namespace orbitlab {

int exact_rank(const IntMatrix& m) {
  IntMatrix a = m;
  int rank = 0;
  Int prev_pivot = 1;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    // Pick the absolutely smallest nonzero entry in this column as the pivot
    // (keeps intermediate growth down; determinism by first occurrence).
    int pivot_row = -1;
    for (int r = row; r < a.rows; ++r) {
      if (a.at(r, col) == 0) continue;
      if (pivot_row < 0 ||
          abs(a.at(r, col)) < abs(a.at(pivot_row, col)))
        pivot_row = r;
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row)
      for (int c = col; c < a.cols; ++c)
        a.at(row, c).swap(a.at(pivot_row, c));
    const Int pivot = a.at(row, col);
    // Bareiss step: a[r][c] <- (pivot*a[r][c] - a[r][col]*a[row][c]) / prev.
    for (int r = row + 1; r < a.rows; ++r) {
      const Int factor = a.at(r, col);
      for (int c = col; c < a.cols; ++c) {
        Int value = pivot * a.at(r, c) - factor * a.at(row, c);
        a.at(r, c) = value / prev_pivot;  // exact by Bareiss's identity
      }
    }
    prev_pivot = pivot;
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

Int vector_content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

}  // namespace

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
  // Gauss-Jordan over the rationals, implemented on integer rows with a
  // common denominator folded away: rows are kept primitive after each step.
  IntMatrix a = m;
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int pivot_row = -1;
    for (int r = row; r < a.rows; ++r)
      if (a.at(r, col) != 0) { pivot_row = r; break; }
    if (pivot_row < 0) continue;
    if (pivot_row != row)
      for (int c = 0; c < a.cols; ++c) a.at(row, c).swap(a.at(pivot_row, c));
    // Cross-multiply the column away in every other row (full Jordan form).
    for (int r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Int p = a.at(row, col), q = a.at(r, col);
      for (int c = 0; c < a.cols; ++c)
        a.at(r, c) = p * a.at(r, c) - q * a.at(row, c);
      // Keep rows primitive so entries stay small.
      Int g = 0;
      for (int c = 0; c < a.cols; ++c) g = gcd(g, a.at(r, c));
      if (g > 1)
        for (int c = 0; c < a.cols; ++c) a.at(r, c) /= g;
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }

  // Free columns parameterize the kernel. For free column f, the kernel
  // vector has x_f = lcm-scaled 1 and x_{pivot col} = -a[row][f]/a[row][pc].
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols), false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<Int>> kernel;
  for (int f = 0; f < a.cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    // x_f = L, x_{pc(r)} = -L * a[r][f] / a[r][pc(r)] with L the lcm of the
    // pivot entries, so everything is integral.
    Int L = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      L = lcm(L, a.at(static_cast<int>(r), pivot_col_of_row[r]));
    std::vector<Int> x(static_cast<size_t>(a.cols), Int(0));
    x[static_cast<size_t>(f)] = L;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      const Int pivot = a.at(static_cast<int>(r), pivot_col_of_row[r]);
      x[static_cast<size_t>(pivot_col_of_row[r])] =
          -L * a.at(static_cast<int>(r), f) / pivot;
    }
    Int g = vector_content(x);
    if (g > 1)
      for (Int& xi : x) xi /= g;
    // First nonzero entry positive.
    for (const Int& xi : x) {
      if (xi == 0) continue;
      if (xi < 0)
        for (Int& xj : x) xj = -xj;
      break;
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

}  // namespace orbitlab
