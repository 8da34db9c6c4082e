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

// Rectangular bands as generating matrices.
//
// A p x q generating matrix G whose entries are the elements of a carrier
// in some order defines the rectangular band
//
//     G(i, j) * G(k, l) = G(i, l),
//
// so rows are the R-classes and columns the L-classes. This header converts
// between Cayley tables and generating matrices (including the linear-time
// extraction), brings matrices to normal form, forms Kronecker products, and
// recognises cartesian partitions.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antilat/cayley.hpp"
#include "antilat/error.hpp"
#include "antilat/partition.hpp"

namespace antilat {

  class GeneratingMatrix {
   public:
    GeneratingMatrix() = default;

    GeneratingMatrix(std::size_t rows, std::size_t cols, std::vector<Element> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
      if (rows_ == 0 || cols_ == 0) {
        throw InvalidArgument("a generating matrix needs a positive shape");
      }
      if (cells_.size() != rows_ * cols_) {
        throw InvalidArgument("a " + std::to_string(rows_) + "x"
                              + std::to_string(cols_) + " matrix needs "
                              + std::to_string(rows_ * cols_) + " cells, got "
                              + std::to_string(cells_.size()));
      }
      auto const n = cells_.size();
      row_of_.assign(n, n);
      col_of_.assign(n, n);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          auto const e = cells_[i * cols_ + j];
          if (e >= n) {
            throw InvalidArgument("matrix entry " + std::to_string(e)
                                  + " is outside the carrier [0, "
                                  + std::to_string(n) + ")");
          }
          if (row_of_[e] != n) {
            throw InvalidArgument("matrix entry " + std::to_string(e)
                                  + " occurs twice");
          }
          row_of_[e] = i;
          col_of_[e] = j;
        }
      }
    }

    GeneratingMatrix(std::vector<std::vector<Element>> const& rows)
        : GeneratingMatrix(rows.size(),
                           rows.empty() ? 0 : rows.front().size(),
                           flatten(rows)) {}

    /// The p x q matrix whose i-th row is iq, ..., iq + q - 1.
    static GeneratingMatrix normal(std::size_t p, std::size_t q) {
      std::vector<Element> cells(p * q);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        cells[i] = i;
      }
      return GeneratingMatrix(p, q, std::move(cells));
    }

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    std::size_t size() const noexcept {
      return cells_.size();
    }

    Element at(std::size_t i, std::size_t j) const {
      return cells_[i * cols_ + j];
    }

    std::size_t row_of(Element e) const {
      return row_of_[e];
    }
    std::size_t col_of(Element e) const {
      return col_of_[e];
    }

    /// The rectangular band product x * y.
    Element product(Element x, Element y) const {
      return at(row_of_[x], col_of_[y]);
    }

    bool same_row(Element x, Element y) const {
      return row_of_[x] == row_of_[y];
    }
    bool same_col(Element x, Element y) const {
      return col_of_[x] == col_of_[y];
    }
    bool collinear(Element x, Element y) const {
      return same_row(x, y) || same_col(x, y);
    }

    std::span<Element const> cells() const noexcept {
      return cells_;
    }

    std::vector<std::vector<Element>> to_rows() const {
      std::vector<std::vector<Element>> out(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        out[i].assign(cells_.begin() + i * cols_, cells_.begin() + (i + 1) * cols_);
      }
      return out;
    }

    bool is_normal() const {
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] != i) {
          return false;
        }
      }
      return true;
    }

    /// Apply the element bijection old -> relabeling[old] to every cell.
    GeneratingMatrix relabeled(std::span<Element const> relabeling) const {
      std::vector<Element> cells(cells_.size());
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        cells[i] = relabeling[cells_[i]];
      }
      return GeneratingMatrix(rows_, cols_, std::move(cells));
    }

    /// Row i of the result is row row_order[i] of *this; likewise columns.
    GeneratingMatrix permuted(std::span<std::size_t const> row_order,
                              std::span<std::size_t const> col_order) const {
      std::vector<Element> cells(cells_.size());
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          cells[i * cols_ + j] = at(row_order[i], col_order[j]);
        }
      }
      return GeneratingMatrix(rows_, cols_, std::move(cells));
    }

    GeneratingMatrix transposed() const {
      std::vector<Element> cells(cells_.size());
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          cells[j * rows_ + i] = at(i, j);
        }
      }
      return GeneratingMatrix(cols_, rows_, std::move(cells));
    }

    friend bool operator==(GeneratingMatrix const& a, GeneratingMatrix const& b) {
      return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

   private:
    static std::vector<Element>
    flatten(std::vector<std::vector<Element>> const& rows) {
      std::vector<Element> out;
      for (auto const& r : rows) {
        if (r.size() != rows.front().size()) {
          throw InvalidArgument("generating matrix rows differ in length");
        }
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }

    std::size_t          rows_ = 0;
    std::size_t          cols_ = 0;
    std::vector<Element> cells_;
    std::vector<std::size_t> row_of_;
    std::vector<std::size_t> col_of_;
  };

  inline CayleyTable band_from_generating_matrix(GeneratingMatrix const& g) {
    return CayleyTable::from_function(
        g.size(), [&](Element x, Element y) { return g.product(x, y); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Linear-time extraction
  ////////////////////////////////////////////////////////////////////////

  /// Everything observed while running the four-step extraction on a table.
  ///
  /// The anchor is element 0. The first row holds the distinct values a*y and
  /// the first column the distinct values x*a, both in order of first
  /// appearance as y (resp. x) runs through the carrier. The body cell in the
  /// row of x and the column of y receives x*y, and y*x is checked to equal a.
  struct RectangularityTrace {
    std::size_t p = 0;  // length of the first column
    std::size_t q = 0;  // length of the first row
    /// Cells of the p x q layout (only meaningful when shape_ok).
    std::vector<Element> cells;
    bool shape_ok = false;  // a*a = a and p * q = n
    bool filled   = false;  // shape_ok and every element placed exactly once
    /// First (x, y) with y*x != a, if any.
    std::optional<std::pair<Element, Element>> failed_check;
    std::size_t lookups = 0;  // Cayley table reads performed

    bool rectangular() const noexcept {
      return filled && !failed_check.has_value();
    }
  };

  inline RectangularityTrace rectangularity_trace(CayleyTable const& t) {
    RectangularityTrace tr;
    auto const          n      = t.size();
    Element const       a      = 0;
    auto                lookup = [&](Element x, Element y) {
      ++tr.lookups;
      return t(x, y);
    };

    std::vector<char>    seen(n, 0);
    std::vector<Element> first_row{a}, first_col{a};
    if (lookup(a, a) != a) {
      return tr;
    }
    seen[a] = 1;
    for (Element y = 0; y < n; ++y) {
      auto const ay = lookup(a, y);
      if (!seen[ay]) {
        seen[ay] = 1;
        first_row.push_back(ay);
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    seen[a] = 1;
    for (Element x = 0; x < n; ++x) {
      auto const xa = lookup(x, a);
      if (!seen[xa]) {
        seen[xa] = 1;
        first_col.push_back(xa);
      }
    }
    tr.p = first_col.size();
    tr.q = first_row.size();
    if (tr.p * tr.q != n) {
      return tr;
    }
    tr.shape_ok = true;
    tr.cells.assign(n, 0);
    std::fill(seen.begin(), seen.end(), 0);
    bool duplicate = false;
    for (std::size_t i = 0; i < tr.p; ++i) {
      auto const x = first_col[i];
      for (std::size_t j = 0; j < tr.q; ++j) {
        auto const y = first_row[j];
        auto const u = lookup(x, y);
        auto const v = lookup(y, x);
        tr.cells[i * tr.q + j] = u;
        if (seen[u]) {
          duplicate = true;
        }
        seen[u] = 1;
        if (v != a && !tr.failed_check) {
          tr.failed_check = std::make_pair(x, y);
        }
      }
    }
    tr.filled = !duplicate;
    return tr;
  }

  /// The generating matrix of t, or nullopt when t is not rectangular.
  ///
  /// Runs in O(n) table lookups, but only decides rectangularity for tables
  /// already known to be bands: the associativity of t is not examined, and a
  /// non-associative table can be accepted (see band_and_rectangular).
  inline std::optional<GeneratingMatrix>
  extract_generating_matrix(CayleyTable const& t, std::size_t* lookups = nullptr) {
    auto tr = rectangularity_trace(t);
    if (lookups != nullptr) {
      *lookups = tr.lookups;
    }
    if (!tr.rectangular()) {
      return std::nullopt;
    }
    return GeneratingMatrix(tr.p, tr.q, std::move(tr.cells));
  }

  /// Associativity, idempotence and then the linear extraction.
  inline std::optional<GeneratingMatrix> band_and_rectangular(CayleyTable const& t) {
    if (!is_idempotent(t) || !is_associative(t)) {
      return std::nullopt;
    }
    return extract_generating_matrix(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form and products
  ////////////////////////////////////////////////////////////////////////

  struct NormalForm {
    GeneratingMatrix     matrix;
    /// relabeling[old] is the label of old in the normal matrix.
    std::vector<Element> relabeling;
  };

  inline NormalForm to_normal_form(GeneratingMatrix const& g) {
    NormalForm nf;
    nf.relabeling.resize(g.size());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        nf.relabeling[g.at(i, j)] = i * g.cols() + j;
      }
    }
    nf.matrix = GeneratingMatrix::normal(g.rows(), g.cols());
    return nf;
  }

  /// Kronecker product; the pair (g, h) is encoded as g * |H| + h.
  inline GeneratingMatrix kronecker(GeneratingMatrix const& g, GeneratingMatrix const& h) {
    auto const           rows = g.rows() * h.rows();
    auto const           cols = g.cols() * h.cols();
    std::vector<Element> cells(rows * cols);
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t k = 0; k < h.rows(); ++k) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
          for (std::size_t l = 0; l < h.cols(); ++l) {
            cells[(i * h.rows() + k) * cols + (j * h.cols() + l)]
                = g.at(i, j) * h.size() + h.at(k, l);
          }
        }
      }
    }
    return GeneratingMatrix(rows, cols, std::move(cells));
  }

  ////////////////////////////////////////////////////////////////////////
  // Cartesian partitions
  ////////////////////////////////////////////////////////////////////////

  /// A partition of the carrier induced by a partition of the rows and a
  /// partition of the columns of a generating matrix: two elements are
  /// related iff their rows are related and their columns are related.
  struct CartesianPartition {
    Partition row_partition;
    Partition col_partition;
    Partition element_partition;
  };

  /// Element partition induced by row and column partitions of g.
  inline Partition induced_partition(GeneratingMatrix const& g,
                                     Partition const&        rows,
                                     Partition const&        cols) {
    std::vector<std::size_t> key(g.size());
    for (Element e = 0; e < g.size(); ++e) {
      key[e] = rows.block_of(g.row_of(e)) * cols.block_count()
               + cols.block_of(g.col_of(e));
    }
    return Partition::from_labels(key);
  }

  /// The witnessing row and column partitions, or nullopt when part is not
  /// cartesian for g.
  inline std::optional<CartesianPartition> is_cartesian(GeneratingMatrix const& g,
                                                        Partition const& part) {
    if (part.size() != g.size()) {
      throw InvalidArgument("partition and matrix have different carriers");
    }
    // Related elements force their rows and their columns together; part is
    // cartesian iff those forced row/column partitions induce nothing more.
    DisjointSets rows(g.rows()), cols(g.cols());
    std::vector<Element> first(part.block_count(), g.size());
    for (Element e = 0; e < g.size(); ++e) {
      auto& f = first[part.block_of(e)];
      if (f == g.size()) {
        f = e;
      } else {
        rows.unite(g.row_of(f), g.row_of(e));
        cols.unite(g.col_of(f), g.col_of(e));
      }
    }
    CartesianPartition cp{Partition::from_disjoint_sets(rows),
                          Partition::from_disjoint_sets(cols),
                          Partition{}};
    cp.element_partition = induced_partition(g, cp.row_partition, cp.col_partition);
    if (cp.element_partition != part) {
      return std::nullopt;
    }
    return cp;
  }

  /// Quotient matrix of a cartesian partition: row and column blocks in
  /// order of their least index, cells are element-partition block ids.
  inline GeneratingMatrix quotient_matrix(GeneratingMatrix const&  g,
                                          CartesianPartition const& cp) {
    auto const row_blocks = cp.row_partition.blocks();
    auto const col_blocks = cp.col_partition.blocks();
    std::vector<Element> cells;
    cells.reserve(row_blocks.size() * col_blocks.size());
    for (auto const& rb : row_blocks) {
      for (auto const& cb : col_blocks) {
        cells.push_back(cp.element_partition.block_of(g.at(rb.front(), cb.front())));
      }
    }
    return GeneratingMatrix(row_blocks.size(), col_blocks.size(), std::move(cells));
  }

}  // namespace antilat
