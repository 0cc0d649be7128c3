#include "orbitlab/homology.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

std::string simplex_string(const Simplex& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(
    std::vector<Simplex> simplices) {
  SimplicialComplex c;
  for (Simplex& s : simplices) {
    if (s.empty())
      throw Error(ErrorCode::NotAComplex, "empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::NotAComplex,
                  "repeated vertex in simplex " + simplex_string(s));
    size_t q = s.size() - 1;
    if (c.by_dim.size() <= q) c.by_dim.resize(q + 1);
    c.by_dim[q].push_back(std::move(s));
  }
  for (auto& bucket : c.by_dim) {
    std::sort(bucket.begin(), bucket.end());
    auto dup = std::adjacent_find(bucket.begin(), bucket.end());
    if (dup != bucket.end())
      throw Error(ErrorCode::NotAComplex,
                  "duplicate simplex " + simplex_string(*dup));
  }
  for (size_t q = 1; q < c.by_dim.size(); ++q) {
    const auto& lower = c.by_dim[q - 1];
    for (const Simplex& s : c.by_dim[q]) {
      Simplex face(s.begin() + 1, s.end());
      for (size_t k = 0; k <= s.size() - 1; ++k) {
        // face = s with entry k removed
        if (!std::binary_search(lower.begin(), lower.end(), face))
          throw Error(ErrorCode::NotAComplex,
                      "missing face " + simplex_string(face) + " of " +
                          simplex_string(s));
        if (k + 1 < s.size()) face[k] = s[k];
      }
    }
  }
  return c;
}

SimplicialComplex SimplicialComplex::from_maximal(
    const std::vector<Simplex>& maximal) {
  std::set<Simplex> closure;
  for (Simplex s : maximal) {
    std::sort(s.begin(), s.end());
    if (s.empty())
      throw Error(ErrorCode::NotAComplex, "empty simplex");
    if (s.size() > 8 * sizeof(unsigned) - 1)
      throw Error(ErrorCode::NotAComplex, "simplex too large");
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      Simplex sub;
      for (size_t k = 0; k < s.size(); ++k)
        if (mask & (1u << k)) sub.push_back(s[k]);
      closure.insert(std::move(sub));
    }
  }
  return from_simplices(
      std::vector<Simplex>(closure.begin(), closure.end()));
}

SimplicialComplex complex_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("bad complex JSON: ") + e.what());
  }
  if (!j.is_array())
    throw Error(ErrorCode::InvalidArgument,
                "complex JSON must be an array of simplices");
  std::vector<Simplex> maximal;
  for (const auto& item : j) {
    if (!item.is_array())
      throw Error(ErrorCode::InvalidArgument,
                  "each simplex must be an array of integers");
    Simplex s;
    for (const auto& v : item) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::InvalidArgument,
                    "each simplex must be an array of integers");
      s.push_back(v.get<int>());
    }
    maximal.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(maximal);
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& complex) {
  std::vector<IntMatrix> mats;
  for (int q = 1; q <= complex.dim(); ++q) {
    const auto& lower = complex.by_dim[static_cast<size_t>(q) - 1];
    const auto& upper = complex.by_dim[static_cast<size_t>(q)];
    IntMatrix m;
    m.rows = static_cast<int>(lower.size());
    m.cols = static_cast<int>(upper.size());
    m.entries.assign(static_cast<size_t>(m.rows) * m.cols, Int(0));
    for (size_t col = 0; col < upper.size(); ++col) {
      const Simplex& s = upper[col];
      Simplex face(s.begin() + 1, s.end());
      for (size_t k = 0; k < s.size(); ++k) {
        auto it = std::lower_bound(lower.begin(), lower.end(), face);
        size_t row = static_cast<size_t>(it - lower.begin());
        m.entries[row * upper.size() + col] = (k % 2 == 0) ? 1 : -1;
        if (k + 1 < s.size()) face[k] = s[k];
      }
    }
    mats.push_back(std::move(m));
  }
  return mats;
}

namespace {

// Row-major dense view with O(1) row swaps.
struct Work {
  int rows, cols;
  std::vector<std::vector<Int>> a;

  explicit Work(IntMatrix m) : rows(m.rows), cols(m.cols) {
    a.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
      a.emplace_back(m.entries.begin() + static_cast<size_t>(r) * cols,
                     m.entries.begin() + static_cast<size_t>(r + 1) * cols);
  }
};

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
  Work w(std::move(m));
  auto& a = w.a;
  std::vector<Int> factors;
  int bound = std::min(w.rows, w.cols);

  for (int r = 0; r < bound; ++r) {
    // Smallest-absolute-value pivot in the trailing submatrix.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = r; i < w.rows; ++i)
      for (int j = r; j < w.cols; ++j) {
        if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
        Int mag = abs(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        if (pi < 0 || mag < best) {
          pi = i;
          pj = j;
          best = mag;
          if (best == 1) goto found;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero
  found:
    std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pi)]);
    if (pj != r)
      for (int i = 0; i < w.rows; ++i)
        std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(r)],
                  a[static_cast<size_t>(i)][static_cast<size_t>(pj)]);

    for (bool settled = false; !settled;) {
      settled = true;
      // Clear the pivot column. Truncated division leaves a remainder
      // smaller than the pivot; promote it and sweep again.
      for (int i = r + 1; i < w.rows; ++i) {
        Int& head = a[static_cast<size_t>(i)][static_cast<size_t>(r)];
        if (head == 0) continue;
        Int q = head / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
        if (q != 0) {
          for (int j = r; j < w.cols; ++j) {
            Int& pivot_row = a[static_cast<size_t>(r)][static_cast<size_t>(j)];
            if (pivot_row != 0)
              a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                  q * pivot_row;
          }
        }
        if (head != 0) {
          std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(i)]);
          settled = false;
        }
      }
      if (!settled) continue;
      // Clear the pivot row the same way.
      for (int j = r + 1; j < w.cols; ++j) {
        Int head = a[static_cast<size_t>(r)][static_cast<size_t>(j)];
        if (head == 0) continue;
        Int q = head / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
        if (q != 0) {
          for (int i = r; i < w.rows; ++i) {
            Int& pivot_col = a[static_cast<size_t>(i)][static_cast<size_t>(r)];
            if (pivot_col != 0)
              a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                  q * pivot_col;
          }
        }
        if (a[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0) {
          for (int i = 0; i < w.rows; ++i)
            std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(r)],
                      a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          settled = false;
        }
      }
      if (!settled) continue;
      // Divisibility: the pivot must divide the rest of the submatrix.
      // Unit pivots always do.
      Int pivot = a[static_cast<size_t>(r)][static_cast<size_t>(r)];
      if (pivot != 1 && pivot != -1) {
        for (int i = r + 1; i < w.rows && settled; ++i)
          for (int j = r + 1; j < w.cols; ++j)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] % pivot !=
                0) {
              // Fold the offending row into the pivot row; the next sweep
              // shrinks the pivot toward the gcd.
              for (int jj = r; jj < w.cols; ++jj)
                a[static_cast<size_t>(r)][static_cast<size_t>(jj)] +=
                    a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
              settled = false;
              break;
            }
      }
    }
    factors.push_back(abs(a[static_cast<size_t>(r)][static_cast<size_t>(r)]));
  }
  return factors;
}

namespace {

HomologyGroups groups_from_snfs(const SimplicialComplex& complex,
                                const std::vector<std::vector<Int>>& snfs) {
  HomologyGroups hg;
  int top = complex.dim();
  for (int q = 0; q <= top; ++q) {
    int rank_down =
        q == 0 ? 0 : static_cast<int>(snfs[static_cast<size_t>(q) - 1].size());
    int rank_up =
        q == top ? 0 : static_cast<int>(snfs[static_cast<size_t>(q)].size());
    hg.free_rank.push_back(complex.count(q) - rank_down - rank_up);
    std::vector<Int> tor;
    if (q < top)
      for (const Int& d : snfs[static_cast<size_t>(q)])
        if (d > 1) tor.push_back(d);
    hg.torsion.push_back(std::move(tor));
  }
  return hg;
}

}  // namespace

const std::vector<Int>& HomologyGroups::torsion_at(int q) const {
  static const std::vector<Int> none;
  return q >= 0 && q < static_cast<int>(torsion.size())
             ? torsion[static_cast<size_t>(q)]
             : none;
}

HomologyGroups homology(const SimplicialComplex& complex) {
  std::vector<std::vector<Int>> snfs;
  for (IntMatrix& m : boundary_matrices(complex))
    snfs.push_back(smith_normal_form(std::move(m)));
  return groups_from_snfs(complex, snfs);
}

HomologyGroups reduced_homology(const SimplicialComplex& complex) {
  HomologyGroups hg = homology(complex);
  if (!hg.free_rank.empty()) --hg.free_rank.front();
  return hg;
}

std::string group_string(int free_rank, const std::vector<Int>& torsion) {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::ostringstream out;
  if (free_rank == 1) {
    out << "Z";
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
  }
  for (const Int& d : torsion) {
    if (out.tellp() > 0) out << " + ";
    out << "Z/" << d;
  }
  return out.str();
}

}  // namespace orbitlab
