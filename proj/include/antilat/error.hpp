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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antilat {

  /// Elements of a finite carrier are the indices 0, ..., n - 1.
  using Element = std::size_t;

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A value violated its structural invariants (bad table, bad matrix,
  /// malformed partition, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  /// Which operation of a double band an error refers to.
  enum class Operation { meet, join };

  inline char const* to_string(Operation op) noexcept {
    return op == Operation::meet ? "meet" : "join";
  }

  class NotABand : public Error {
   public:
    explicit NotABand(std::string const& what_arg) : Error(what_arg) {}
    NotABand(Operation op, std::string const& detail)
        : Error(std::string("the ") + to_string(op)
                + " table is not a band: " + detail),
          op_(op),
          has_op_(true) {}

    bool has_operation() const noexcept {
      return has_op_;
    }
    Operation operation() const noexcept {
      return op_;
    }

   private:
    Operation op_     = Operation::meet;
    bool      has_op_ = false;
  };

  class NotRectangular : public Error {
   public:
    NotRectangular(Operation op, std::string const& detail)
        : Error(std::string("the ") + to_string(op)
                + " table is not a rectangular band: " + detail),
          op_(op) {}

    Operation operation() const noexcept {
      return op_;
    }

   private:
    Operation op_;
  };

  /// Raised when an enumeration would exceed the configured order guard.
  class OrderGuardExceeded : public Error {
   public:
    OrderGuardExceeded(std::size_t order, std::size_t limit)
        : Error("order " + std::to_string(order)
                + " exceeds the configured guard of "
                + std::to_string(limit)),
          order_(order),
          limit_(limit) {}

    std::size_t order() const noexcept {
      return order_;
    }
    std::size_t limit() const noexcept {
      return limit_;
    }

   private:
    std::size_t order_;
    std::size_t limit_;
  };

  /// Congruences of different antilattices were combined.
  class MixedCarrier : public Error {
   public:
    using Error::Error;
  };

}  // namespace antilat
