// Copyright 2026 The antilat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Latin squares, orthogonal pairs, (semi)magic squares, and their relation to
// antilattices: Latin antilattices, semimagic antilattices and even graphs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antilat/antilattice.hpp"
#include "antilat/error.hpp"
#include "antilat/mols_tables.hpp"
#include "antilat/rectband.hpp"

namespace antilat {

  class NotLatin : public Error {
   public:
    using Error::Error;
  };

  class SizeMismatch : public Error {
   public:
    using Error::Error;
  };

  /// The square is not a permutation of 1, ..., n^2.
  class BadEntries : public Error {
   public:
    using Error::Error;
  };

  class NotDecomposable : public Error {
   public:
    using Error::Error;
  };

  /// No pair of orthogonal Latin squares exists for this side.
  class Nonexistent : public Error {
   public:
    explicit Nonexistent(std::size_t n)
        : Error("no pair of orthogonal Latin squares of side "
                + std::to_string(n) + " exists"),
          side_(n) {}

    std::size_t side() const noexcept {
      return side_;
    }

   private:
    std::size_t side_;
  };

  /// An n x n array of integers.
  class Square {
   public:
    using value_type = std::int64_t;

    Square() = default;

    Square(std::size_t n, std::vector<value_type> cells)
        : n_(n), cells_(std::move(cells)) {
      if (cells_.size() != n_ * n_) {
        throw InvalidArgument("a square of side " + std::to_string(n_) + " needs "
                              + std::to_string(n_ * n_) + " cells");
      }
    }

    Square(std::vector<std::vector<value_type>> const& rows) : n_(rows.size()) {
      for (auto const& r : rows) {
        if (r.size() != n_) {
          throw InvalidArgument("square rows must all have length "
                                + std::to_string(n_));
        }
        cells_.insert(cells_.end(), r.begin(), r.end());
      }
    }

    template <typename F>
    static Square from_function(std::size_t n, F&& f) {
      std::vector<value_type> cells(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          cells[i * n + j] = f(i, j);
        }
      }
      return Square(n, std::move(cells));
    }

    std::size_t size() const noexcept {
      return n_;
    }

    value_type at(std::size_t i, std::size_t j) const {
      return cells_[i * n_ + j];
    }

    std::vector<value_type> const& cells() const noexcept {
      return cells_;
    }

    Square transposed() const {
      return from_function(n_, [this](std::size_t i, std::size_t j) { return at(j, i); });
    }

    std::vector<std::vector<value_type>> to_rows() const {
      std::vector<std::vector<value_type>> out(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(cells_.begin() + i * n_, cells_.begin() + (i + 1) * n_);
      }
      return out;
    }

    friend bool operator==(Square const&, Square const&) = default;

   private:
    std::size_t             n_ = 0;
    std::vector<value_type> cells_;
  };

  /// Every row and every column is a permutation of the symbols in row 0.
  inline bool is_latin_square(Square const& s) {
    auto const n = s.size();
    if (n == 0) {
      return false;
    }
    std::vector<Square::value_type> symbols(s.cells().begin(), s.cells().begin() + n);
    std::sort(symbols.begin(), symbols.end());
    if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end()) {
      return false;
    }
    std::vector<Square::value_type> line(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
          line[j] = pass == 0 ? s.at(i, j) : s.at(j, i);
        }
        std::sort(line.begin(), line.end());
        if (line != symbols) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool are_orthogonal(Square const& p, Square const& q) {
    if (p.size() != q.size()) {
      throw SizeMismatch("squares of sides " + std::to_string(p.size()) + " and "
                         + std::to_string(q.size()));
    }
    if (!is_latin_square(p) || !is_latin_square(q)) {
      throw NotLatin("orthogonality is only defined for Latin squares");
    }
    std::vector<std::pair<Square::value_type, Square::value_type>> pairs;
    pairs.reserve(p.cells().size());
    for (std::size_t k = 0; k < p.cells().size(); ++k) {
      pairs.emplace_back(p.cells()[k], q.cells()[k]);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
  }

  /// Two orthogonal Latin squares on the symbols 1, ..., n.
  class MolsPair {
   public:
    MolsPair(Square first, Square second)
        : first_(std::move(first)), second_(std::move(second)) {
      for (auto const* s : {&first_, &second_}) {
        for (auto v : s->cells()) {
          if (v < 1 || v > static_cast<Square::value_type>(s->size())) {
            throw InvalidArgument("MOLS symbols must be 1, ..., n");
          }
        }
      }
      if (!are_orthogonal(first_, second_)) {
        throw InvalidArgument("the squares are not orthogonal");
      }
    }

    std::size_t size() const noexcept {
      return first_.size();
    }
    Square const& first() const noexcept {
      return first_;
    }
    Square const& second() const noexcept {
      return second_;
    }

    friend bool operator==(MolsPair const&, MolsPair const&) = default;

   private:
    Square first_;
    Square second_;
  };

  /// Cell (i, j) becomes (a(i, j) - 1) * n + b(i, j).
  inline Square choi_euler(MolsPair const& m) {
    auto const n = static_cast<Square::value_type>(m.size());
    return Square::from_function(m.size(), [&](std::size_t i, std::size_t j) {
      return (m.first().at(i, j) - 1) * n + m.second().at(i, j);
    });
  }

  inline bool is_permutation_of_1_to_n2(Square const& s) {
    std::vector<Square::value_type> v = s.cells();
    std::sort(v.begin(), v.end());
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != static_cast<Square::value_type>(k + 1)) {
        return false;
      }
    }
    return true;
  }

  /// Inverse of choi_euler: split v - 1 into base-n digits (hi, lo) and add 1.
  inline MolsPair decompose_to_mols(Square const& s) {
    if (!is_permutation_of_1_to_n2(s)) {
      throw BadEntries("the square is not a permutation of 1, ..., n^2");
    }
    auto const n  = static_cast<Square::value_type>(s.size());
    auto       hi = Square::from_function(s.size(), [&](std::size_t i, std::size_t j) {
      return (s.at(i, j) - 1) / n + 1;
    });
    auto       lo = Square::from_function(s.size(), [&](std::size_t i, std::size_t j) {
      return (s.at(i, j) - 1) % n + 1;
    });
    if (!is_latin_square(hi)) {
      throw NotDecomposable("the high base-" + std::to_string(n)
                            + " digits do not form a Latin square");
    }
    if (!is_latin_square(lo)) {
      throw NotDecomposable("the low base-" + std::to_string(n)
                            + " digits do not form a Latin square");
    }
    return MolsPair(std::move(hi), std::move(lo));
  }

  inline bool is_semimagic(Square const& s) {
    if (!is_permutation_of_1_to_n2(s)) {
      throw BadEntries("the square is not a permutation of 1, ..., n^2");
    }
    auto const n      = s.size();
    auto const target = static_cast<Square::value_type>(n * (n * n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      Square::value_type row = 0, col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row += s.at(i, j);
        col += s.at(j, i);
      }
      if (row != target || col != target) {
        return false;
      }
    }
    return true;
  }

  inline bool is_magic(Square const& s) {
    if (!is_semimagic(s)) {
      return false;
    }
    auto const         n = s.size();
    Square::value_type d = 0, a = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d += s.at(i, i);
      a += s.at(i, n - 1 - i);
    }
    auto const target = static_cast<Square::value_type>(n * (n * n + 1) / 2);
    return d == target && a == target;
  }

  ////////////////////////////////////////////////////////////////////////
  // MOLS generation
  ////////////////////////////////////////////////////////////////////////

  /// Composite pair: symbol (a - 1) * n' + a' at ((i, i'), (j, j')).
  inline MolsPair kronecker(MolsPair const& x, MolsPair const& y) {
    auto const n2   = y.size();
    auto       comp = [&](Square const& a, Square const& b) {
      return Square::from_function(x.size() * n2, [&](std::size_t i, std::size_t j) {
        return (a.at(i / n2, j / n2) - 1) * static_cast<Square::value_type>(n2)
               + b.at(i % n2, j % n2);
      });
    };
    return MolsPair(comp(x.first(), y.first()), comp(x.second(), y.second()));
  }

  /// a(i, j) = i + j + 1 and b(i, j) = i + 2j + 1 modulo an odd n.
  inline MolsPair cyclic_mols(std::size_t n) {
    if (n % 2 == 0) {
      throw InvalidArgument("the cyclic construction needs an odd side");
    }
    auto a = Square::from_function(n, [n](std::size_t i, std::size_t j) {
      return static_cast<Square::value_type>((i + j) % n + 1);
    });
    auto b = Square::from_function(n, [n](std::size_t i, std::size_t j) {
      return static_cast<Square::value_type>((i + 2 * j) % n + 1);
    });
    return MolsPair(std::move(a), std::move(b));
  }

  /// Finds a mate of a (symbols 1..n) by choosing, symbol by symbol, a
  /// transversal of a disjoint from the cells already used. Deterministic:
  /// rows are filled top to bottom, columns tried in increasing order.
  /// Returns nullopt when no mate exists.
  inline std::optional<Square> search_orthogonal_mate(Square const& a) {
    auto const        n = a.size();
    std::vector<int>  mate(n * n, 0);
    std::vector<char> col_used(n), sym_used(n);
    // Depth-first over (symbol, row); cells of mate hold the symbol or 0.
    std::vector<std::size_t> chosen(n * n, 0);
    std::size_t              symbol = 0, row = 0;
    std::size_t              col    = 0;
    auto depth = [&] { return symbol * n + row; };
    while (true) {
      if (symbol == n) {
        std::vector<Square::value_type> cells(mate.begin(), mate.end());
        return Square(n, std::move(cells));
      }
      bool placed = false;
      for (; col < n; ++col) {
        auto const s = static_cast<std::size_t>(a.at(row, col) - 1);
        if (col_used[col] || sym_used[s] || mate[row * n + col] != 0) {
          continue;
        }
        col_used[col]         = 1;
        sym_used[s]           = 1;
        mate[row * n + col]   = int(symbol + 1);
        chosen[depth()]       = col;
        placed                = true;
        break;
      }
      if (placed) {
        if (++row == n) {
          row = 0;
          ++symbol;
          std::fill(col_used.begin(), col_used.end(), 0);
          std::fill(sym_used.begin(), sym_used.end(), 0);
        }
        col = 0;
        continue;
      }
      // Backtrack one step.
      if (depth() == 0) {
        return std::nullopt;
      }
      if (row == 0) {
        --symbol;
        row = n - 1;
        // Rebuild the used sets of the transversal being resumed.
        std::fill(col_used.begin(), col_used.end(), 0);
        std::fill(sym_used.begin(), sym_used.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
          auto const c = chosen[symbol * n + r];
          col_used[c]  = 1;
          sym_used[static_cast<std::size_t>(a.at(r, c) - 1)] = 1;
        }
      } else {
        --row;
      }
      auto const c = chosen[depth()];
      col_used[c]  = 0;
      sym_used[static_cast<std::size_t>(a.at(row, c) - 1)] = 0;
      mate[row * n + c] = 0;
      col = c + 1;
    }
  }

  /// The Cayley table of the elementary abelian 2-group, symbols 1..n.
  inline Square xor_square(std::size_t n) {
    return Square::from_function(n, [](std::size_t i, std::size_t j) {
      return static_cast<Square::value_type>((i ^ j) + 1);
    });
  }

  namespace detail {

    inline MolsPair frozen_pair(std::size_t n) {
      auto const  data = n == 4 ? std::span<int const>(mols_tables::side4)
                                 : std::span<int const>(mols_tables::side8);
      auto        make = [n](auto const& cells) {
        return Square(n, std::vector<Square::value_type>(cells.begin(), cells.end()));
      };
      return MolsPair(xor_square(n), make(data));
    }

    /// Expands a quasi-difference matrix over Z_m with three points at
    /// infinity into an orthogonal array OA(4, m + 3): rows 0 and 1 index
    /// the cell, rows 2 and 3 are the two symbols.
    inline MolsPair mols_from_qdm(std::size_t m, std::span<int const> qdm) {
      constexpr std::size_t infinite = 3;
      auto const            cols     = qdm.size() / 4;
      auto const            n        = m + infinite;
      std::vector<Square::value_type> a(n * n, 0), b(n * n, 0);
      auto put = [&](std::size_t r, std::size_t c, std::size_t x, std::size_t y) {
        a[r * n + c] = static_cast<Square::value_type>(x + 1);
        b[r * n + c] = static_cast<Square::value_type>(y + 1);
      };
      for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t t = 0; t < m; ++t) {
          std::size_t v[4];
          for (std::size_t r = 0; r < 4; ++r) {
            auto const d = qdm[r * cols + c];
            if (d < 0) {
              // The k-th blank of row r stands for the k-th infinite point.
              std::size_t k = 0;
              for (std::size_t c2 = 0; c2 < c; ++c2) {
                k += qdm[r * cols + c2] < 0;
              }
              v[r] = m + k;
            } else {
              v[r] = (std::size_t(d) + t) % m;
            }
          }
          put(v[0], v[1], v[2], v[3]);
        }
      }
      for (std::size_t x = 0; x < infinite; ++x) {
        for (std::size_t y = 0; y < infinite; ++y) {
          put(m + x, m + y, m + (x + y) % infinite, m + (x + 2 * y) % infinite);
        }
      }
      return MolsPair(Square(n, std::move(a)), Square(n, std::move(b)));
    }

    inline MolsPair power_of_two_mols(std::size_t n) {
      // n = 2^k with k >= 2 splits into factors 4 and 8.
      std::size_t k = 0;
      while ((std::size_t(1) << k) < n) {
        ++k;
      }
      std::optional<MolsPair> result;
      auto                    mul = [&](MolsPair const& f) {
        result = result ? kronecker(*result, f) : f;
      };
      if (k % 2 == 1) {
        mul(frozen_pair(8));
        k -= 3;
      }
      for (; k > 0; k -= 2) {
        mul(frozen_pair(4));
      }
      return *result;
    }

  }  // namespace detail

  /// Search for a quasi-difference matrix over Z_m (m odd, m >= 7) with three
  /// points at infinity, in the layout used by the frozen tables. Returns an
  /// empty vector if max_nodes search nodes do not reach a solution.
  std::vector<int> search_qdm(std::size_t m, std::uint64_t max_nodes);

  /// A pair of orthogonal Latin squares of side n on symbols 1..n.
  ///
  /// Odd n uses the cyclic pair; powers of two at least 4 compose the frozen
  /// sides 4 and 8; sides 2 (mod 4) from 10 on come from a quasi-difference
  /// matrix over Z_{d-3} for a factor d; everything else is a Kronecker
  /// composition of those. Sides 2 and 6 throw Nonexistent.
  MolsPair generate_mols(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Latin and semimagic antilattices
  ////////////////////////////////////////////////////////////////////////

  /// M is the k x k normal matrix and J holds choi_euler(m) - 1.
  inline Antilattice latin_antilattice_from_mols(MolsPair const& m) {
    auto const           k = m.size();
    auto const           s = choi_euler(m);
    std::vector<Element> cells;
    cells.reserve(k * k);
    for (auto v : s.cells()) {
      cells.push_back(static_cast<Element>(v - 1));
    }
    return Antilattice(GeneratingMatrix::normal(k, k), GeneratingMatrix(k, k, std::move(cells)));
  }

  /// Component squares of the join matrix of a square antilattice, after
  /// normalising: entry (r, c) of the first is 1 + the meet row of J(r, c),
  /// of the second 1 + its meet column. Throws if n is not square.
  inline std::pair<Square, Square> join_components(Antilattice const& n) {
    if (!type_of(n).square) {
      throw InvalidArgument("join components need a square antilattice");
    }
    auto const norm = normalize(n);
    auto const& m    = norm.meet_matrix();
    auto const& j    = norm.join_matrix();
    auto        comp = [&](bool row) {
      return Square::from_function(j.rows(), [&](std::size_t r, std::size_t c) {
        auto const e = j.at(r, c);
        return static_cast<Square::value_type>((row ? m.row_of(e) : m.col_of(e)) + 1);
      });
    };
    return {comp(true), comp(false)};
  }

  inline bool is_latin_antilattice(Antilattice const& n) {
    if (!type_of(n).square) {
      return false;
    }
    auto const [first, second] = join_components(n);
    return is_latin_square(first) && is_latin_square(second);
  }

  /// J of the normalised presentation read as a square on 1..n (square type
  /// only).
  inline Square join_square(Antilattice const& n) {
    if (!type_of(n).square) {
      throw InvalidArgument("the join matrix is not square");
    }
    auto const  norm = normalize(n);
    auto const& j    = norm.join_matrix();
    return Square::from_function(j.rows(), [&](std::size_t r, std::size_t c) {
      return static_cast<Square::value_type>(j.at(r, c) + 1);
    });
  }

  inline constexpr std::size_t default_semimagic_max_order = 36;

  /// Semimagic antilattice test. Only square antilattices qualify.
  ///
  /// Presentation mode normalises the stored meet matrix and tests the join
  /// matrix. Exhaustive mode tries every row and column permutation of the
  /// meet matrix, i.e. every relabelling that keeps it in normal form.
  inline bool is_semimagic_antilattice(Antilattice const& n,
                                       bool               exhaustive = false,
                                       std::size_t max_order = default_semimagic_max_order) {
    if (!type_of(n).square) {
      return false;
    }
    if (!exhaustive) {
      return is_semimagic(join_square(n));
    }
    if (n.size() > max_order) {
      throw OrderGuardExceeded(n.size(), max_order);
    }
    auto const& m = n.meet_matrix();
    auto const& j = n.join_matrix();
    auto const  k = m.rows();
    auto const  target
        = static_cast<std::int64_t>(k * (k * k + 1) / 2) - static_cast<std::int64_t>(k);
    std::vector<std::size_t> row_rank(k), col_rank(k);
    std::iota(row_rank.begin(), row_rank.end(), std::size_t(0));
    // Labels are row_rank[row] * k + col_rank[col] (0-based), so each line
    // sum separates into a row part and a column part.
    do {
      std::iota(col_rank.begin(), col_rank.end(), std::size_t(0));
      do {
        bool ok = true;
        for (std::size_t line = 0; line < k && ok; ++line) {
          std::int64_t row_sum = 0, col_sum = 0;
          for (std::size_t t = 0; t < k; ++t) {
            auto const x = j.at(line, t);
            auto const y = j.at(t, line);
            row_sum += std::int64_t(row_rank[m.row_of(x)] * k + col_rank[m.col_of(x)]);
            col_sum += std::int64_t(row_rank[m.row_of(y)] * k + col_rank[m.col_of(y)]);
          }
          ok = row_sum == target && col_sum == target;
        }
        if (ok) {
          return true;
        }
      } while (std::next_permutation(col_rank.begin(), col_rank.end()));
    } while (std::next_permutation(row_rank.begin(), row_rank.end()));
    return false;
  }

  inline bool is_magic_antilattice(Antilattice const& n) {
    return type_of(n).square && is_magic(join_square(n));
  }

  ////////////////////////////////////////////////////////////////////////
  // Even graphs
  ////////////////////////////////////////////////////////////////////////

  enum class EdgeColor { hh, vv, hv, vh };

  inline char const* to_string(EdgeColor c) noexcept {
    switch (c) {
      case EdgeColor::hh:
        return "hh";
      case EdgeColor::vv:
        return "vv";
      case EdgeColor::hv:
        return "hv";
      case EdgeColor::vh:
        return "vh";
    }
    return "?";
  }

  struct EvenEdge {
    Element   u;  // u < v
    Element   v;
    EdgeColor color;

    friend bool operator==(EvenEdge const&, EvenEdge const&) = default;
  };

  /// Graph on the carrier whose edges are the two-element subantilattices,
  /// one colored edge per collinearity pattern (same row/column of M, same
  /// row/column of J).
  struct EvenGraph {
    std::size_t           order = 0;
    std::vector<EvenEdge> edges;

    bool empty() const noexcept {
      return edges.empty();
    }

    /// Distinct vertex pairs carrying at least one edge.
    std::vector<std::pair<Element, Element>> vertex_pairs() const {
      std::vector<std::pair<Element, Element>> out;
      for (auto const& e : edges) {
        out.emplace_back(e.u, e.v);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  };

  inline EvenGraph even_graph(Antilattice const& n) {
    EvenGraph   g{n.size(), {}};
    auto const& m = n.meet_matrix();
    auto const& j = n.join_matrix();
    for (Element a = 0; a < n.size(); ++a) {
      for (Element b = a + 1; b < n.size(); ++b) {
        if (m.same_row(a, b) && j.same_row(a, b)) {
          g.edges.push_back({a, b, EdgeColor::hh});
        }
        if (m.same_col(a, b) && j.same_col(a, b)) {
          g.edges.push_back({a, b, EdgeColor::vv});
        }
        if (m.same_row(a, b) && j.same_col(a, b)) {
          g.edges.push_back({a, b, EdgeColor::hv});
        }
        if (m.same_col(a, b) && j.same_row(a, b)) {
          g.edges.push_back({a, b, EdgeColor::vh});
        }
      }
    }
    return g;
  }

}  // namespace antilat

#include "antilat/mols.ipp"
