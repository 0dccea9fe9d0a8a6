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

#include "pgeom/io.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pgeom {

namespace {

std::string CommentBlock(const std::string& comment) {
  std::string out;
  std::istringstream in(comment);
  std::string line;
  while (std::getline(in, line)) out += "# " + line + "\n";
  return out;
}

// Content lines with comments and blanks dropped, trailing CR stripped.
std::vector<std::string> ContentLines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

}  // namespace

std::string FormatPoints(const std::vector<Vec>& pts, const std::string& comment) {
  std::string out = CommentBlock(comment);
  for (const Vec& v : pts) out += FormatPoint(v) + "\n";
  return out;
}

std::vector<Vec> ParsePoints(const std::string& text) {
  std::vector<Vec> out;
  for (const std::string& line : ContentLines(text)) {
    out.push_back(ParsePoint(line));
    if (out.back().size() != out.front().size()) {
      throw std::invalid_argument("points of different lengths");
    }
  }
  return out;
}

std::string FormatSubspaces(const std::vector<Subspace>& subs, const std::string& comment) {
  std::string out = CommentBlock(comment);
  for (const Subspace& s : subs) out += FormatSubspace(s);
  return out;
}

std::vector<Subspace> ParseSubspaces(const std::string& text, int n) {
  const std::vector<std::string> lines = ContentLines(text);
  std::vector<Subspace> out;
  size_t i = 0;
  while (i < lines.size()) {
    const std::string& head = lines[i++];
    const size_t x = head.find('x');
    if (x == std::string::npos) throw std::invalid_argument("bad subspace header: " + head);
    const int k = std::stoi(head.substr(0, x));
    const int m = std::stoi(head.substr(x + 1));
    if (m != n + 1 || k < 0 || k > m) {
      throw std::invalid_argument("subspace header does not fit the space: " + head);
    }
    Subspace s;
    s.n = n;
    for (int r = 0; r < k; ++r) {
      if (i >= lines.size()) throw std::invalid_argument("truncated subspace");
      Vec v = ParsePoint(lines[i++]);
      if (static_cast<int>(v.size()) != m) throw std::invalid_argument("row of wrong length");
      s.rows.push_back(std::move(v));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string FormatForm(const Form& form, const std::string& comment) {
  static const char* kKinds[] = {"alternating", "hermitian", "quadratic"};
  std::string out = CommentBlock(comment);
  out += std::string(kKinds[static_cast<int>(form.kind)]) + " " + std::to_string(form.n) + " " +
         std::to_string(form.field->q()) + "\n";
  for (const Vec& row : form.gram) out += FormatPoint(row) + "\n";
  return out;
}

Form ParseForm(const std::string& text) {
  const std::vector<std::string> lines = ContentLines(text);
  if (lines.empty()) throw std::invalid_argument("empty form");
  std::istringstream head(lines[0]);
  std::string kind;
  int n = -1;
  uint64_t q = 0;
  if (!(head >> kind >> n >> q) || n < 1) {
    throw std::invalid_argument("bad form header: " + lines[0]);
  }
  Form form;
  if (kind == "alternating") {
    form.kind = FormKind::kAlternating;
  } else if (kind == "hermitian") {
    form.kind = FormKind::kHermitian;
  } else if (kind == "quadratic") {
    form.kind = FormKind::kQuadratic;
  } else {
    throw std::invalid_argument("unknown form kind: " + kind);
  }
  form.n = n;
  form.field = Field::OfOrder(q);
  if (lines.size() != static_cast<size_t>(n) + 2) {
    throw std::invalid_argument("form needs n + 1 rows");
  }
  for (int i = 0; i <= n; ++i) {
    Vec row = ParsePoint(lines[i + 1]);
    if (row.size() != static_cast<size_t>(n) + 1) throw std::invalid_argument("bad form row");
    for (Elt x : row) {
      if (x >= q) throw std::invalid_argument("form entry outside the field");
    }
    form.gram.push_back(std::move(row));
  }
  return form;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string ContentHash(const std::string& text) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kHex[h & 15];
  return out;
}

}  // namespace pgeom
