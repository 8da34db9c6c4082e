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

#include <iosfwd>
#include <string>
#include <vector>

#include "antilat/report.hpp"

namespace antilat::cli {

  inline constexpr int exit_ok      = 0;
  inline constexpr int exit_skipped = 1;  // --strict and a predicate was skipped
  inline constexpr int exit_error   = 2;

  /// Runs the command line args (without the program name).
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  /// Flat report object with a fixed key order; skipped values are the
  /// string "skipped".
  std::string report_json(ClassificationReport const& r, ClassifyOptions const& opt);

  /// One "key  value" line per field, values aligned.
  std::string report_text(ClassificationReport const& r, ClassifyOptions const& opt);

}  // namespace antilat::cli
