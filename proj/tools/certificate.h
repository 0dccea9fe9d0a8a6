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

// Certificates emitted by the pgeom tool. A certificate names a claim, the
// parameters it was checked under, the verdict and the witness files by
// relative path and content hash. Everything except the wall time enters
// the payload hash, so reruns can be compared byte for byte.

#ifndef PGEOM_TOOLS_CERTIFICATE_H_
#define PGEOM_TOOLS_CERTIFICATE_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "pgeom/switching.h"

namespace pgeom::tool {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exit codes shared by every verb.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

struct WitnessFile {
  std::string path;   // relative to the certificate
  std::string hash;
};

struct Certificate {
  std::string claim_id;
  Json parameters = Json::object();
  Verdict verdict = Verdict::kInconclusive;
  std::vector<WitnessFile> files;
  Json data = Json::object();       // inline witness data
  Json counters = Json::object();
  // Verb invocations that recompute verdict and data: entries
  // {"verb", "label", "args"} with file arguments relative to the
  // certificate's directory.
  Json replay = Json::array();
  double wall_seconds = 0;

  void Set(bool ok) { verdict = ok ? Verdict::kVerified : Verdict::kRefuted; }
  void AddFile(const std::string& path, const std::string& text);

  // Payload without the wall time, and its hash.
  Json Payload() const;
  std::string PayloadHash() const;
  Json ToJson() const;
  std::string ToText() const;
  static Certificate FromJson(const Json& j);
};

int ExitCode(Verdict v);
Verdict ParseVerdict(const std::string& s);

}  // namespace pgeom::tool

#endif  // PGEOM_TOOLS_CERTIFICATE_H_
