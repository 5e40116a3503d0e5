// Copyright 2026 The minbrace Authors
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

#include <cstdint>
#include <vector>

#include "minbrace/graph.hpp"
#include "minbrace/iso.hpp"

namespace minbrace::detail {

/// Canonical form of a rows x cols multiplicity matrix in row-major order,
/// rows being class A. Skips the connectivity check.
CanonicalForm canonical_form_dense(std::size_t rows, std::size_t cols,
                                   const std::uint8_t* cells);

/// Multiplicity matrix of g, A-vertices as rows.
std::vector<std::uint8_t> dense_cells(const BipartiteGraph& g);

}  // namespace minbrace::detail
