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

// The verbs of the pgeom tool. Each verb returns a certificate; the driver
// prints it and maps the verdict to the exit status.

#ifndef PGEOM_TOOLS_COMMANDS_H_
#define PGEOM_TOOLS_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "certificate.h"

namespace pgeom::tool {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int64_t budget_nodes = 50'000'000;
  double budget_seconds = 3600;
  std::string out;             // directory for certificates and witness files
  std::string format = "text";
};

// Options of every verb in one place; each verb reads what it needs.
struct Args {
  std::vector<std::string> positional;
  std::string space;           // descriptor such as "H:3:q2=9"
  std::string form;            // form file, instead of a descriptor
  std::string kind;
  std::string type;
  std::string params;          // "v,k,lambda,mu"
  uint64_t q = 0;
  int n = 0;
  int k = 1;
  int i = 1;
  int64_t m = -1;              // expected regularity, -1 for any
  bool maximal = false;
  bool extendable = false;
  int64_t max_triangles = 50'000'000;
  std::vector<int> criteria;

  Json ToJson() const;
  static Args FromJson(const Json& j);
};

Certificate CmdCatalog(const Options& opt, const Args& args);
Certificate CmdConstruct(const Options& opt, const Args& args);
Certificate CmdVerify(const Options& opt, const Args& args);
Certificate CmdGraph(const Options& opt, const Args& args);
Certificate CmdSwitch(const Options& opt, const Args& args);
Certificate CmdScheme(const Options& opt, const Args& args);
Certificate CmdCode(const Options& opt, const Args& args);
Certificate CmdReplay(const Options& opt, const Args& args, std::ostream& progress);

// Names accepted by `construct` and claims accepted by `verify`.
const std::vector<std::string>& ConstructionNames();
const std::vector<std::string>& ClaimNames();

}  // namespace pgeom::tool

#endif  // PGEOM_TOOLS_COMMANDS_H_
