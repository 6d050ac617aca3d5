#pragma once

// The chessboard complex of non-attacking rook placements: face
// enumeration, simplicial boundary matrices, homology ranks over the
// integers, and the dictionary between auxiliary configurations and faces.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cakecut/config.hpp"

namespace cakecut {

struct Square {
  int row = 0;  // 1-based
  int col = 0;  // 1-based

  friend bool operator==(const Square& a, const Square& b) {
    return a.row == b.row && a.col == b.col;
  }
  friend bool operator<(const Square& a, const Square& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

// A set of pairwise non-attacking rooks, kept sorted lexicographically.
struct RookFace {
  std::vector<Square> squares;

  int dim() const { return static_cast<int>(squares.size()) - 1; }

  friend bool operator==(const RookFace& a, const RookFace& b) { return a.squares == b.squares; }
  friend bool operator<(const RookFace& a, const RookFace& b) { return a.squares < b.squares; }
};

struct ChessComplex {
  int m = 1;  // rows
  int n = 1;  // columns

  ChessComplex(int rows, int cols) : m(rows), n(cols) {
    if (m < 1 || n < 1) throw std::invalid_argument("board needs at least one row and column");
  }
};

inline bool is_face(const ChessComplex& c, const std::vector<Square>& squares) {
  for (const Square& s : squares) {
    if (s.row < 1 || s.row > c.m || s.col < 1 || s.col > c.n) {
      throw std::invalid_argument("square outside the board");
    }
  }
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      if (squares[i].row == squares[j].row || squares[i].col == squares[j].col) return false;
    }
  }
  return true;
}

// All faces of the given dimension (dim+1 rooks), sorted lexicographically.
// Squares within a face are sorted, so rows appear strictly increasing.
inline std::vector<RookFace> enumerate_faces(const ChessComplex& c, int dim) {
  std::vector<RookFace> out;
  const int k = dim + 1;
  if (k < 1 || k > c.m || k > c.n) return out;

  std::vector<Square> current;
  std::vector<bool> col_used(c.n + 1, false);
  auto recurse = [&](auto&& self, int min_row) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(RookFace{current});
      return;
    }
    int remaining = k - static_cast<int>(current.size());
    for (int row = min_row; row + remaining - 1 <= c.m; ++row) {
      for (int col = 1; col <= c.n; ++col) {
        if (col_used[col]) continue;
        current.push_back(Square{row, col});
        col_used[col] = true;
        self(self, row + 1);
        col_used[col] = false;
        current.pop_back();
      }
    }
  };
  recurse(recurse, 1);
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline long long face_count_formula(const ChessComplex& c, int rooks) {
  long long fact = 1;
  for (int i = 2; i <= rooks; ++i) fact *= i;
  return binomial(c.m, rooks) * binomial(c.n, rooks) * fact;
}

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;  // row-major

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

inline IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out{x.rows, y.cols, std::vector<long long>(static_cast<std::size_t>(x.rows) * y.cols, 0)};
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  }
  return out;
}

// Simplicial boundary: rows indexed by (dim-1)-faces, columns by dim-faces,
// both in enumeration order; signs follow the lexicographic square order
// within each face.
inline IntMatrix boundary_matrix(const ChessComplex& c, int dim) {
  if (dim < 1) throw std::invalid_argument("boundary needs dim >= 1");
  const auto faces = enumerate_faces(c, dim);
  const auto subfaces = enumerate_faces(c, dim - 1);
  std::map<std::vector<Square>, int> index;
  for (std::size_t i = 0; i < subfaces.size(); ++i) index[subfaces[i].squares] = static_cast<int>(i);

  IntMatrix out{static_cast<int>(subfaces.size()), static_cast<int>(faces.size()),
                std::vector<long long>(subfaces.size() * faces.size(), 0)};
  for (std::size_t j = 0; j < faces.size(); ++j) {
    const auto& sq = faces[j].squares;
    for (std::size_t drop = 0; drop < sq.size(); ++drop) {
      std::vector<Square> sub;
      sub.reserve(sq.size() - 1);
      for (std::size_t t = 0; t < sq.size(); ++t) {
        if (t != drop) sub.push_back(sq[t]);
      }
      out.at(index.at(sub), static_cast<int>(j)) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

namespace detail {

inline constexpr long long kSnfOverflowGuard = 1LL << 55;

// Diagonalizes an integer matrix by row/column operations and returns the
// non-zero diagonal entries. The count is the rank; any entry of absolute
// value > 1 certifies torsion in the corresponding quotient (the product of
// the diagonal equals the product of the invariant factors up to sign, so
// the torsion flag does not depend on the reduction path).
inline std::vector<long long> smith_diagonal(IntMatrix m) {
  std::vector<long long> diag;
  const int rows = m.rows;
  const int cols = m.cols;
  int t = 0;
  auto guard = [](long long v) {
    if (v > kSnfOverflowGuard || v < -kSnfOverflowGuard) {
      throw std::runtime_error("integer overflow during Smith reduction");
    }
    return v;
  };
  while (t < rows && t < cols) {
    // Smallest-magnitude pivot keeps the entries from growing.
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        long long v = m.at(i, j);
        if (v != 0 && (pi == -1 || std::llabs(v) < best)) {
          pi = i;
          pj = j;
          best = std::llabs(v);
        }
      }
    }
    if (pi == -1) break;
    if (pi != t) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    }
    if (pj != t) {
      for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pj));
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        long long q = m.at(i, t) / m.at(t, t);
        for (int j = t; j < cols; ++j) m.at(i, j) = guard(m.at(i, j) - q * m.at(t, j));
        if (m.at(i, t) != 0) {
          // Remainder is a strictly smaller pivot; promote it.
          for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        long long q = m.at(t, j) / m.at(t, t);
        for (int i = t; i < rows; ++i) m.at(i, j) = guard(m.at(i, j) - q * m.at(i, t));
        if (m.at(t, j) != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          dirty = true;
        }
      }
    }
    diag.push_back(std::llabs(m.at(t, t)));
    ++t;
  }
  return diag;
}

}  // namespace detail

struct HomologySummary {
  int dim = 0;
  long long betti = 0;  // reduced Betti number
  bool torsion = false;
  std::vector<long long> torsion_factors;  // diagonal entries > 1 (not normalized)
};

// Reduced integer homology of the complex via Smith normal form, with the
// augmentation map accounting for reduced degree 0.
inline std::vector<HomologySummary> homology_ranks(const ChessComplex& c) {
  std::vector<long long> counts;
  long long total = 0;
  for (int d = 0;; ++d) {
    long long f = face_count_formula(c, d + 1);
    if (f == 0) break;
    counts.push_back(f);
    total += f;
  }
  if (total > 1'000'000) {
    throw std::runtime_error(
        "board too large for dense integer reduction; use a field-coefficient rank (Z/2) instead");
  }

  const int top = static_cast<int>(counts.size()) - 1;
  // ranks[d] = rank of the boundary map from d-chains; augmentation at d=0.
  std::vector<long long> ranks(top + 2, 0);
  std::vector<std::vector<long long>> nonunit(top + 2);
  ranks[0] = 1;  // augmentation of a non-empty complex
  for (int d = 1; d <= top; ++d) {
    auto diag = detail::smith_diagonal(boundary_matrix(c, d));
    ranks[d] = static_cast<long long>(diag.size());
    for (long long v : diag) {
      if (v != 1) nonunit[d].push_back(v);
    }
  }

  std::vector<HomologySummary> out;
  for (int d = 0; d <= top; ++d) {
    HomologySummary s;
    s.dim = d;
    s.betti = counts[d] - ranks[d] - (d + 1 <= top ? ranks[d + 1] : 0);
    s.torsion_factors = (d + 1 <= top) ? nonunit[d + 1] : std::vector<long long>{};
    s.torsion = !s.torsion_factors.empty();
    out.push_back(std::move(s));
  }
  return out;
}

// Face of the r x (2r-1) board carried by a representative: one rook per
// occupied plate, at the plate's non-degenerate tile when it serves one
// (those squares carry the tile lengths as barycentric weights), otherwise
// at its lowest-index degenerate tile. The positive-weight squares are
// shared by all equivalent representatives; the degenerate choices are not.
inline RookFace config_to_face(const AuxConfig& c) {
  const auto ts = c.cut.tiles();
  RookFace face;
  for (int plate = 1; plate <= c.r; ++plate) {
    int chosen = 0;
    for (int i = 1; i <= c.cut.tile_count(); ++i) {
      if (c.plate_of_tile(i) != plate) continue;
      if (!ts[i - 1].degenerate()) {
        chosen = i;
        break;
      }
      if (chosen == 0) chosen = i;
    }
    if (chosen != 0) face.squares.push_back(Square{plate, chosen});
  }
  return face;
}

}  // namespace cakecut
