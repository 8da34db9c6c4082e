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

// Umbrella header.

#pragma once

#include "antilat/antilattice.hpp"
#include "antilat/cayley.hpp"
#include "antilat/congruence.hpp"
#include "antilat/dot.hpp"
#include "antilat/error.hpp"
#include "antilat/io.hpp"
#include "antilat/latin.hpp"
#include "antilat/partition.hpp"
#include "antilat/rectband.hpp"
#include "antilat/regularity.hpp"
#include "antilat/report.hpp"
