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

// Set partitions of a finite carrier {0, ..., n - 1} and a small
// union-find used to build them.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "antilat/error.hpp"

namespace antilat {

  /// Union-find with path halving and union by size.
  class DisjointSets {
   public:
    DisjointSets() = default;

    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
      std::iota(parent_.begin(), parent_.end(), std::size_t(0));
    }

    std::size_t size() const noexcept {
      return parent_.size();
    }

    std::size_t find(std::size_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    /// Returns true if x and y were in different sets.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (size_[x] < size_[y]) {
        std::swap(x, y);
      }
      parent_[y] = x;
      size_[x] += size_[y];
      return true;
    }

    bool same(std::size_t x, std::size_t y) {
      return find(x) == find(y);
    }

   private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
  };

  /// A partition of {0, ..., n - 1}.
  ///
  /// Blocks are numbered in order of their least element, so two partitions
  /// are equal exactly when their label vectors are equal.
  class Partition {
   public:
    Partition() = default;

    /// Build from arbitrary block labels; labels are renumbered canonically.
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& labels) {
      Partition                result;
      std::vector<std::size_t> seen;
      std::size_t              next = 0;
      result.block_of_.resize(labels.size());
      // Labels may be sparse (e.g. row * q + col keys), so map through a
      // lookup table sized by the largest label.
      Label max_label = 0;
      for (auto l : labels) {
        max_label = std::max(max_label, l);
      }
      seen.assign(labels.empty() ? 0 : std::size_t(max_label) + 1, npos);
      for (std::size_t x = 0; x < labels.size(); ++x) {
        auto& slot = seen[std::size_t(labels[x])];
        if (slot == npos) {
          slot = next++;
        }
        result.block_of_[x] = slot;
      }
      result.block_count_ = next;
      return result;
    }

    static Partition from_blocks(std::size_t                           n,
                                 std::vector<std::vector<Element>> const& blocks) {
      std::vector<std::size_t> label(n, npos);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
          throw InvalidArgument("partition has an empty block");
        }
        for (auto x : blocks[b]) {
          if (x >= n) {
            throw InvalidArgument("partition element " + std::to_string(x)
                                  + " is outside the carrier");
          }
          if (label[x] != npos) {
            throw InvalidArgument("partition element " + std::to_string(x)
                                  + " occurs in two blocks");
          }
          label[x] = b;
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (label[x] == npos) {
          throw InvalidArgument("partition does not cover element "
                                + std::to_string(x));
        }
      }
      return from_labels(label);
    }

    static Partition from_disjoint_sets(DisjointSets& sets) {
      std::vector<std::size_t> label(sets.size());
      for (std::size_t x = 0; x < label.size(); ++x) {
        label[x] = sets.find(x);
      }
      return from_labels(label);
    }

    static Partition identity(std::size_t n) {
      std::vector<std::size_t> label(n);
      std::iota(label.begin(), label.end(), std::size_t(0));
      return from_labels(label);
    }

    static Partition universal(std::size_t n) {
      return from_labels(std::vector<std::size_t>(n, 0));
    }

    std::size_t size() const noexcept {
      return block_of_.size();
    }

    std::size_t block_count() const noexcept {
      return block_count_;
    }

    std::size_t block_of(Element x) const {
      return block_of_[x];
    }

    bool related(Element x, Element y) const {
      return block_of_[x] == block_of_[y];
    }

    std::vector<std::size_t> const& labels() const noexcept {
      return block_of_;
    }

    bool is_identity() const noexcept {
      return block_count_ == size();
    }

    bool is_universal() const noexcept {
      return block_count_ <= 1;
    }

    /// Blocks ordered by least element, each sorted ascending.
    std::vector<std::vector<Element>> blocks() const {
      std::vector<std::vector<Element>> result(block_count_);
      for (Element x = 0; x < size(); ++x) {
        result[block_of_[x]].push_back(x);
      }
      return result;
    }

    std::vector<std::size_t> block_sizes() const {
      std::vector<std::size_t> result(block_count_, 0);
      for (auto b : block_of_) {
        ++result[b];
      }
      return result;
    }

    /// True if every block of *this lies inside a block of other.
    bool refines(Partition const& other) const {
      if (other.size() != size()) {
        return false;
      }
      std::vector<std::size_t> image(block_count_, npos);
      for (Element x = 0; x < size(); ++x) {
        auto& slot = image[block_of_[x]];
        if (slot == npos) {
          slot = other.block_of_[x];
        } else if (slot != other.block_of_[x]) {
          return false;
        }
      }
      return true;
    }

    /// Common refinement.
    static Partition meet(Partition const& a, Partition const& b) {
      check_same_size(a, b);
      std::vector<std::size_t> label(a.size());
      for (Element x = 0; x < a.size(); ++x) {
        label[x] = a.block_of_[x] * b.block_count_ + b.block_of_[x];
      }
      return from_labels(label);
    }

    /// Transitive closure of the union.
    static Partition join(Partition const& a, Partition const& b) {
      check_same_size(a, b);
      DisjointSets sets(a.size());
      a.merge_into(sets);
      b.merge_into(sets);
      return from_disjoint_sets(sets);
    }

    /// Unite every pair of related elements in sets.
    void merge_into(DisjointSets& sets) const {
      std::vector<Element> first(block_count_, npos);
      for (Element x = 0; x < size(); ++x) {
        auto& f = first[block_of_[x]];
        if (f == npos) {
          f = x;
        } else {
          sets.unite(f, x);
        }
      }
    }

    /// Bracket-pipe rendering such as "1,13|2,14|5", with elements shifted
    /// by base.
    std::string to_string(std::size_t base = 0) const {
      std::string out;
      bool        first_block = true;
      for (auto const& block : blocks()) {
        if (!first_block) {
          out += '|';
        }
        first_block = false;
        for (std::size_t i = 0; i < block.size(); ++i) {
          if (i != 0) {
            out += ',';
          }
          out += std::to_string(block[i] + base);
        }
      }
      return out;
    }

    /// Parse the bracket-pipe notation; surrounding brackets and whitespace
    /// are optional.
    static Partition parse(std::string_view text, std::size_t n, std::size_t base) {
      auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
          s.remove_prefix(1);
        }
        while (!s.empty()
               && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'
                   || s.back() == '\n')) {
          s.remove_suffix(1);
        }
        return s;
      };
      text = strip(text);
      if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') {
          throw InvalidArgument("unbalanced '[' in partition literal");
        }
        text = strip(text.substr(1, text.size() - 2));
      }
      std::vector<std::vector<Element>> blocks;
      std::vector<Element>              current;
      std::size_t                       value     = 0;
      bool                              in_number = false;
      auto                              flush_number = [&] {
        if (!in_number) {
          throw InvalidArgument("missing element in partition literal");
        }
        if (value < base) {
          throw InvalidArgument("element " + std::to_string(value)
                                + " is below the base " + std::to_string(base));
        }
        current.push_back(value - base);
        value     = 0;
        in_number = false;
      };
      for (char c : text) {
        if (c >= '0' && c <= '9') {
          if (value > std::numeric_limits<std::size_t>::max() / 10) {
            throw InvalidArgument("element out of range in partition literal");
          }
          value     = value * 10 + std::size_t(c - '0');
          in_number = true;
        } else if (c == ',') {
          flush_number();
        } else if (c == '|') {
          flush_number();
          blocks.push_back(std::move(current));
          current.clear();
        } else if (c != ' ' && c != '\t') {
          throw InvalidArgument(std::string("unexpected character '") + c
                                + "' in partition literal");
        }
      }
      flush_number();
      blocks.push_back(std::move(current));
      return from_blocks(n, blocks);
    }

    friend bool operator==(Partition const&, Partition const&) = default;

    friend bool operator<(Partition const& a, Partition const& b) {
      return a.block_of_ < b.block_of_;
    }

   private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    static void check_same_size(Partition const& a, Partition const& b) {
      if (a.size() != b.size()) {
        throw MixedCarrier("partitions of carriers of different sizes");
      }
    }

    std::vector<std::size_t> block_of_;
    std::size_t              block_count_ = 0;
  };

  struct PartitionHash {
    std::size_t operator()(Partition const& p) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto l : p.labels()) {
        h ^= l + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

}  // namespace antilat
