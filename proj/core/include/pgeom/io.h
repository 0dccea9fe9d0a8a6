// Copyright 2026 The pgeom Authors
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

// Text files for point sets, subspace lists and graphs. Lines starting
// with '#' and blank lines are ignored on input.
//
//   points:     one point per line, "a:b:c" with field indices
//   subspaces:  per subspace a header "kxm" then k rows "a:b:c"
//   graphs:     see WriteAdjacency

#ifndef PGEOM_IO_H_
#define PGEOM_IO_H_

#include <string>
#include <vector>

#include "pgeom/graph.h"
#include "pgeom/polar.h"
#include "pgeom/projspace.h"

namespace pgeom {

std::string FormatPoints(const std::vector<Vec>& pts, const std::string& comment = "");
std::vector<Vec> ParsePoints(const std::string& text);

std::string FormatSubspaces(const std::vector<Subspace>& subs,
                            const std::string& comment = "");
// n is the ambient projective dimension; rows must have n + 1 entries.
std::vector<Subspace> ParseSubspaces(const std::string& text, int n);

// "alternating|hermitian|quadratic n q" followed by the n + 1 rows of the
// Gram (or upper triangular coefficient) matrix.
std::string FormatForm(const Form& form, const std::string& comment = "");
Form ParseForm(const std::string& text);

// Throw std::runtime_error on I/O failure.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string ContentHash(const std::string& text);

}  // namespace pgeom

#endif  // PGEOM_IO_H_
