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

// Out-of-line parts of latin.hpp: the quasi-difference matrix search and
// the MOLS generator.

#pragma once

#include <random>

namespace antilat {

  namespace detail {

    /// Randomised depth-first search with restarts over the free entries of
    /// a quasi-difference matrix in the fixed layout, column by column.
    class QdmSearch {
     public:
      explicit QdmSearch(std::size_t m) : m_(m), cols_(m + 6) {
        grid_.assign(4 * cols_, 0);
        for (std::size_t c = 0; c < cols_; ++c) {
          bool first = true;
          for (std::size_t r = 0; r < 4; ++r) {
            if (blank(r, c)) {
              grid_[r * cols_ + c] = -1;
            } else if (first) {
              first = false;  // pinned to 0
            } else {
              vars_.push_back(r * cols_ + c);
            }
          }
        }
      }

      bool blank(std::size_t r, std::size_t c) const {
        auto const lo = m_ - 6 + 3 * r;
        return c >= lo && c < lo + 3;
      }

      std::vector<int> run(std::uint64_t max_nodes) {
        std::mt19937_64 rng(m_);
        std::uint64_t   budget = 20000;
        std::uint64_t   spent  = 0;
        order_.assign(vars_.size(), std::vector<int>(m_));
        while (spent < max_nodes) {
          for (auto& o : order_) {
            std::iota(o.begin(), o.end(), 0);
            std::shuffle(o.begin(), o.end(), rng);
          }
          used_.assign(6 * m_, 0);
          nodes_ = 0;
          limit_ = std::min(budget, max_nodes - spent);
          if (assign(0)) {
            return grid_;
          }
          spent += nodes_;
          budget += budget / 2;
        }
        return {};
      }

     private:
      static std::size_t pair_index(std::size_t i, std::size_t j) {
        // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
        static constexpr std::size_t base[3] = {0, 3, 5};
        return base[i] + (j - i - 1);
      }

      bool assign(std::size_t k) {
        if (k == vars_.size()) {
          return true;
        }
        if (++nodes_ > limit_) {
          return false;
        }
        auto const  r = vars_[k] / cols_;
        auto const  c = vars_[k] % cols_;
        std::size_t slots[3];
        for (int v : order_[k]) {
          std::size_t taken = 0;
          bool        ok    = true;
          for (std::size_t i = 0; i < r && ok; ++i) {
            auto const other = grid_[i * cols_ + c];
            if (other < 0) {
              continue;
            }
            auto const s = pair_index(i, r) * m_ + std::size_t((other - v + int(m_)) % int(m_));
            if (used_[s]) {
              ok = false;
            } else {
              used_[s]       = 1;
              slots[taken++] = s;
            }
          }
          if (ok) {
            grid_[r * cols_ + c] = v;
            if (assign(k + 1)) {
              return true;
            }
          }
          for (std::size_t t = 0; t < taken; ++t) {
            used_[slots[t]] = 0;
          }
          if (nodes_ > limit_) {
            break;
          }
        }
        grid_[r * cols_ + c] = 0;
        return false;
      }

      std::size_t                   m_;
      std::size_t                   cols_;
      std::vector<std::size_t>      vars_;
      std::vector<std::vector<int>> order_;
      std::vector<int>              grid_;
      std::vector<char>             used_;
      std::uint64_t                 nodes_ = 0;
      std::uint64_t                 limit_ = 0;
    };

    inline MolsPair qdm_mols(std::size_t n) {
      auto const m = n - 3;
      for (auto const& q : mols_tables::qdms) {
        if (q.m == m) {
          return mols_from_qdm(m, q.entries);
        }
      }
      auto grid = search_qdm(m, std::uint64_t(1) << 32);
      if (grid.empty()) {
        throw Error("quasi-difference matrix search for side " + std::to_string(n)
                    + " ran out of budget");
      }
      return mols_from_qdm(m, grid);
    }

  }  // namespace detail

  inline std::vector<int> search_qdm(std::size_t m, std::uint64_t max_nodes) {
    if (m < 7 || m % 2 == 0) {
      throw InvalidArgument("quasi-difference matrix search needs an odd m >= 7");
    }
    return detail::QdmSearch(m).run(max_nodes);
  }

  inline MolsPair generate_mols(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("MOLS side must be positive");
    }
    if (n == 1) {
      return MolsPair(Square(1, {1}), Square(1, {1}));
    }
    if (n == 2 || n == 6) {
      throw Nonexistent(n);
    }
    std::size_t two = 1, odd = n;
    while (odd % 2 == 0) {
      odd /= 2;
      two *= 2;
    }
    if (two == 1) {
      return cyclic_mols(odd);
    }
    if (two >= 4) {
      auto p = detail::power_of_two_mols(two);
      return odd == 1 ? p : kronecker(p, cyclic_mols(odd));
    }
    // n = 2 * odd with odd >= 5: the smallest divisor d >= 5 of odd gives
    // the quasi-difference side 2d; the odd cofactor is cyclic.
    std::size_t d = 5;
    while (odd % d != 0) {
      d += 2;
    }
    auto base = detail::qdm_mols(2 * d);
    return d == odd ? base : kronecker(base, cyclic_mols(odd / d));
  }

}  // namespace antilat
