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

// Text formats.
//
//   alat 1            cay 1             square N
//   base B            base B            <N rows of N integers>
//   M p q             n N
//   <p rows of q>     op NAME
//   J r s             <N rows of N>
//   <r rows of s>     [op NAME ...]
//
// Blank lines and text after '#' are ignored; CRLF is accepted. Entries are
// written with the file's base and held 0-based in memory.

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antilat/antilattice.hpp"
#include "antilat/cayley.hpp"
#include "antilat/error.hpp"
#include "antilat/latin.hpp"
#include "antilat/rectband.hpp"

namespace antilat {

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// 1-based line number, 0 when the error is not tied to a line.
    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  struct AlatFile {
    std::size_t base = 1;
    Antilattice antilattice;

    friend bool operator==(AlatFile const&, AlatFile const&) = default;
  };

  struct CayOperation {
    std::string name;
    CayleyTable table;

    friend bool operator==(CayOperation const&, CayOperation const&) = default;
  };

  struct CayFile {
    std::size_t               base = 1;
    std::vector<CayOperation> operations;

    std::size_t order() const noexcept {
      return operations.empty() ? 0 : operations.front().table.size();
    }

    friend bool operator==(CayFile const&, CayFile const&) = default;
  };

  namespace detail {

    class LineReader {
     public:
      explicit LineReader(std::istream& in) : in_(in) {}

      /// Next non-blank line split into tokens, or nullopt at end of input.
      std::optional<std::vector<std::string_view>> next() {
        while (std::getline(in_, text_)) {
          ++line_;
          if (!text_.empty() && text_.back() == '\r') {
            text_.pop_back();
          }
          if (auto hash = text_.find('#'); hash != std::string::npos) {
            text_.erase(hash);
          }
          std::vector<std::string_view> tokens;
          std::string_view              rest(text_);
          while (true) {
            auto const b = rest.find_first_not_of(" \t");
            if (b == std::string_view::npos) {
              break;
            }
            auto const e = rest.find_first_of(" \t", b);
            tokens.push_back(rest.substr(b, e == std::string_view::npos ? e : e - b));
            if (e == std::string_view::npos) {
              break;
            }
            rest.remove_prefix(e);
          }
          if (!tokens.empty()) {
            return tokens;
          }
        }
        return std::nullopt;
      }

      std::vector<std::string_view> expect(char const* what) {
        auto t = next();
        if (!t) {
          throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
        }
        return std::move(*t);
      }

      std::size_t line() const noexcept {
        return line_;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(line_, what);
      }

      std::int64_t integer(std::string_view token) const {
        std::int64_t v{};
        auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || p != token.data() + token.size()) {
          fail("expected an integer, got '" + std::string(token) + "'");
        }
        return v;
      }

      std::size_t count(std::string_view token) const {
        auto const v = integer(token);
        if (v < 1) {
          fail("expected a positive integer, got '" + std::string(token) + "'");
        }
        return static_cast<std::size_t>(v);
      }

      /// Reads a "KEYWORD value" line.
      std::size_t keyword_value(std::string_view keyword) {
        auto t = expect(std::string(keyword).c_str());
        if (t.size() != 2 || t[0] != keyword) {
          fail("expected '" + std::string(keyword) + " <integer>'");
        }
        auto const v = integer(t[1]);
        if (v < 0) {
          fail(std::string(keyword) + " must be non-negative");
        }
        return static_cast<std::size_t>(v);
      }

      /// Reads rows x cols integers, one row per line; the source line of
      /// each row goes to row_lines when given.
      std::vector<std::int64_t> block(std::size_t rows, std::size_t cols,
                                      std::vector<std::size_t>* row_lines = nullptr) {
        std::vector<std::int64_t> out;
        out.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i) {
          auto t = expect("a matrix row");
          if (row_lines) {
            row_lines->push_back(line_);
          }
          if (t.size() != cols) {
            fail("expected " + std::to_string(cols) + " entries, got "
                 + std::to_string(t.size()));
          }
          for (auto tok : t) {
            out.push_back(integer(tok));
          }
        }
        return out;
      }

      void header(std::string_view tag) {
        auto t = expect("a header");
        if (t.size() != 2 || t[0] != tag) {
          fail("expected '" + std::string(tag) + " 1'");
        }
        if (t[1] != "1") {
          fail("unsupported " + std::string(tag) + " version '" + std::string(t[1]) + "'");
        }
      }

      std::size_t base() {
        auto const b = keyword_value("base");
        if (b > 1) {
          fail("base must be 0 or 1");
        }
        return b;
      }

     private:
      std::istream& in_;
      std::string   text_;
      std::size_t   line_ = 0;
    };

    inline GeneratingMatrix read_matrix_block(LineReader& in, std::string_view name,
                                              std::size_t base) {
      auto t = in.expect("a matrix header");
      if (t.size() != 3 || t[0] != name) {
        in.fail("expected '" + std::string(name) + " <rows> <cols>'");
      }
      auto const rows       = in.count(t[1]);
      auto const cols       = in.count(t[2]);
      std::vector<std::size_t> row_lines;
      auto const               raw = in.block(rows, cols, &row_lines);
      auto const               n   = rows * cols;
      std::vector<Element> cells;
      std::vector<char>    seen(n, 0);
      for (std::size_t k = 0; k < raw.size(); ++k) {
        auto const v    = raw[k] - static_cast<std::int64_t>(base);
        auto const line = row_lines[k / cols];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw ParseError(line, std::string(name) + " entry " + std::to_string(raw[k])
                                     + " is outside " + std::to_string(base) + ".."
                                     + std::to_string(base + n - 1));
        }
        if (seen[std::size_t(v)]++) {
          throw ParseError(line, std::string(name) + " entry " + std::to_string(raw[k])
                                     + " is repeated");
        }
        cells.push_back(static_cast<Element>(v));
      }
      return GeneratingMatrix(rows, cols, std::move(cells));
    }

    inline void write_matrix_block(std::ostream& out, char name, GeneratingMatrix const& g,
                                   std::size_t base) {
      out << name << ' ' << g.rows() << ' ' << g.cols() << '\n';
      for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
          out << (j ? " " : "") << g.at(i, j) + base;
        }
        out << '\n';
      }
    }

    inline void expect_end(LineReader& in) {
      if (in.next()) {
        in.fail("unexpected trailing content");
      }
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // .alat
  ////////////////////////////////////////////////////////////////////////

  inline AlatFile parse_alat(std::istream& is) {
    detail::LineReader in(is);
    in.header("alat");
    AlatFile f;
    f.base    = in.base();
    auto meet = detail::read_matrix_block(in, "M", f.base);
    auto join = detail::read_matrix_block(in, "J", f.base);
    if (meet.size() != join.size()) {
      throw ParseError(in.line(), "M has " + std::to_string(meet.size()) + " cells but J has "
                                      + std::to_string(join.size()));
    }
    detail::expect_end(in);
    f.antilattice = Antilattice(std::move(meet), std::move(join));
    return f;
  }

  inline AlatFile parse_alat(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_alat(is);
  }

  inline std::string format_alat(AlatFile const& f) {
    std::ostringstream out;
    out << "alat 1\nbase " << f.base << '\n';
    detail::write_matrix_block(out, 'M', f.antilattice.meet_matrix(), f.base);
    detail::write_matrix_block(out, 'J', f.antilattice.join_matrix(), f.base);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // .cay
  ////////////////////////////////////////////////////////////////////////

  inline CayFile parse_cay(std::istream& is) {
    detail::LineReader in(is);
    in.header("cay");
    CayFile f;
    f.base       = in.base();
    auto const n = in.keyword_value("n");
    if (n == 0) {
      in.fail("n must be positive");
    }
    while (auto t = in.next()) {
      if (t->size() != 2 || (*t)[0] != "op") {
        in.fail("expected 'op <name>'");
      }
      if (f.operations.size() == 2) {
        in.fail("at most two op blocks are allowed");
      }
      std::string name((*t)[1]);
      std::vector<std::size_t> row_lines;
      auto const               raw = in.block(n, n, &row_lines);
      std::vector<Element> entries;
      entries.reserve(raw.size());
      for (std::size_t k = 0; k < raw.size(); ++k) {
        auto const v = raw[k] - static_cast<std::int64_t>(f.base);
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw ParseError(row_lines[k / n], "entry " + std::to_string(raw[k])
                                                   + " is outside "
                                                   + std::to_string(f.base) + ".."
                                                   + std::to_string(f.base + n - 1));
        }
        entries.push_back(static_cast<Element>(v));
      }
      f.operations.push_back({std::move(name), CayleyTable(n, std::move(entries))});
    }
    if (f.operations.empty()) {
      throw ParseError(in.line(), "expected at least one op block");
    }
    return f;
  }

  inline CayFile parse_cay(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_cay(is);
  }

  inline std::string format_cay(CayFile const& f) {
    std::ostringstream out;
    out << "cay 1\nbase " << f.base << "\nn " << f.order() << '\n';
    for (auto const& op : f.operations) {
      out << "op " << op.name << '\n';
      auto const n = op.table.size();
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          out << (y ? " " : "") << op.table(x, y) + f.base;
        }
        out << '\n';
      }
    }
    return out.str();
  }

  /// The meet and join of a two-operation file, chosen by the names "meet"
  /// and "join" when both are present and by position otherwise.
  inline std::pair<CayleyTable const*, CayleyTable const*> meet_and_join(CayFile const& f) {
    if (f.operations.size() != 2) {
      throw InvalidArgument("an antilattice needs two op blocks, the file has "
                            + std::to_string(f.operations.size()));
    }
    auto const& a = f.operations[0];
    auto const& b = f.operations[1];
    if (a.name == "join" && b.name == "meet") {
      return {&b.table, &a.table};
    }
    return {&a.table, &b.table};
  }

  ////////////////////////////////////////////////////////////////////////
  // Squares
  ////////////////////////////////////////////////////////////////////////

  inline Square parse_square(std::istream& is) {
    detail::LineReader in(is);
    auto const         n   = in.keyword_value("square");
    if (n == 0) {
      in.fail("square side must be positive");
    }
    auto raw = in.block(n, n);
    detail::expect_end(in);
    return Square(n, std::move(raw));
  }

  inline Square parse_square(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_square(is);
  }

  inline std::string format_square(Square const& s) {
    std::ostringstream out;
    out << "square " << s.size() << '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        out << (j ? " " : "") << s.at(i, j);
      }
      out << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Files
  ////////////////////////////////////////////////////////////////////////

  inline std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw Error("cannot write '" + path + "'");
    }
  }

  enum class FileKind { alat, cay, square, unknown };

  /// Classifies a file by the first token of its first non-blank line.
  inline FileKind detect_kind(std::string_view text) {
    std::istringstream is{std::string(text)};
    detail::LineReader in(is);
    auto               t = in.next();
    if (!t) {
      return FileKind::unknown;
    }
    auto const head = (*t)[0];
    if (head == "alat") {
      return FileKind::alat;
    }
    if (head == "cay") {
      return FileKind::cay;
    }
    if (head == "square") {
      return FileKind::square;
    }
    return FileKind::unknown;
  }

  /// An antilattice from either file kind; `.cay` input goes through
  /// antilattice_from_tables.
  inline AlatFile load_antilattice(std::string const& path) {
    auto const text = read_text_file(path);
    switch (detect_kind(text)) {
      case FileKind::alat:
        return parse_alat(text);
      case FileKind::cay: {
        auto const f           = parse_cay(text);
        auto const [meet, join] = meet_and_join(f);
        return {f.base, antilattice_from_tables(*meet, *join)};
      }
      default:
        throw ParseError(1, "'" + path + "' is neither an alat nor a cay file");
    }
  }

}  // namespace antilat
