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

// pgeom: finite polar geometry from the command line.
//
//   pgeom catalog H 2 9
//   pgeom construct segre-hemisystem --space H:3:q2=9 --out corpus
//   pgeom verify regular-system --space Q-:5:3 --k 1 lines.txt
//   pgeom verify certificate corpus/segre-hemisystem-H3q9.json
//   pgeom replay
//
// Exit status: 0 verified, 1 refuted or inconclusive, 2 usage or budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "commands.h"
#include "pgeom/io.h"
#include "pgeom/projspace.h"

namespace {

using pgeom::tool::Args;
using pgeom::tool::Certificate;
using pgeom::tool::Options;

// Ends the process once the wall-clock budget is spent. Budgets are never
// silent: the exit status says so.
void StartWatchdog(double seconds) {
  if (seconds <= 0) return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::fprintf(stderr, "pgeom: budget exhausted (--budget-seconds %.0f)\n", seconds);
    std::fflush(stderr);
    std::_Exit(pgeom::tool::kExitUsage);
  }).detach();
}

int Emit(const Options& opt, Certificate c, double seconds) {
  c.wall_seconds = seconds;
  const std::string json = c.ToJson().dump(2) + "\n";
  if (!opt.out.empty()) {
    std::filesystem::create_directories(opt.out);
    pgeom::WriteTextFile((std::filesystem::path(opt.out) / (c.claim_id + ".json")).string(), json);
  }
  std::cout << (opt.format == "json" ? json : c.ToText());
  return pgeom::tool::ExitCode(c.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgeom: constructions and certificates for finite polar spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  Args args;
  app.add_option("--budget-nodes", opt.budget_nodes, "Search and enumeration node budget")
      ->capture_default_str();
  app.add_option("--budget-seconds", opt.budget_seconds, "Wall-clock budget (0: none)")
      ->capture_default_str();
  app.add_option("--out", opt.out, "Directory for certificates and witness files");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto space_opts = [&](CLI::App* c) {
    c->add_option("--space", args.space, "Space descriptor, e.g. H:3:q2=9 or Q-:5:3");
    c->add_option("--form", args.form, "Form file, instead of --space");
  };

  CLI::App* catalog = app.add_subcommand("catalog", "Point and subspace counts of a polar space");
  catalog->add_option("args", args.positional, "e.g. H 2 9");
  space_opts(catalog);

  CLI::App* construct = app.add_subcommand("construct", "Build a named object and certify it");
  construct->add_option("name", args.positional, "Construction name")->required();
  space_opts(construct);
  construct->add_option("--q", args.q, "Field order");
  construct->add_option("--m", args.m, "Regularity");
  construct->add_option("--kind", args.kind, "Unital kind: classical, bm, bt");

  CLI::App* verify = app.add_subcommand("verify", "Check a claim against witness files");
  verify->add_option("claim", args.positional, "Claim name then files")->required();
  space_opts(verify);
  verify->add_option("--k", args.k, "Vector dimension of the counted subspaces");
  verify->add_option("--m", args.m, "Expected regularity");
  verify->add_option("--q", args.q, "Field order");
  verify->add_option("--params", args.params, "Expected SRG parameters v,k,lambda,mu");
  verify->add_flag("--maximal", args.maximal, "Also require maximality");
  verify->add_flag("--extendable", args.extendable, "Require an explicit extension point");

  CLI::App* graph = app.add_subcommand("graph", "Build a graph and certify its parameters");
  graph->add_option("what", args.positional,
                    "collinearity, dual-polar, nu, unital, linrep or hemisystem-lines")
      ->required();
  space_opts(graph);
  graph->add_option("--i", args.i, "Relation of the dual polar graph");
  graph->add_option("--n", args.n, "Projective dimension for nu");
  graph->add_option("--q", args.q, "Field order");
  graph->add_option("--kind", args.kind, "Unital kind");

  CLI::App* sw = app.add_subcommand("switch", "Switch NU(n+1, q^2) and certify the mate");
  sw->add_option("--n", args.n, "Projective dimension")->capture_default_str();
  sw->add_option("--q", args.q, "Square root of the field order");
  sw->add_option("--type", args.type, "Plane type: line or pencil");
  sw->add_option("--max-triangles", args.max_triangles, "Triple census budget");

  CLI::App* scheme = app.add_subcommand("scheme", "Association scheme of the generators");
  space_opts(scheme);
  scheme->add_option("subset", args.positional, "Optional generator file");

  CLI::App* code = app.add_subcommand("code", "Code of a point set and its two-weight bridge");
  code->add_option("points", args.positional, "Point file, or Hermitian line file");
  space_opts(code);
  code->add_option("--q", args.q, "Field order");

  CLI::App* replay = app.add_subcommand("replay", "Run the acceptance corpus");
  replay->add_option("--criteria", args.criteria, "Criterion numbers")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pgeom::tool::kExitUsage;
  }
  StartWatchdog(opt.budget_seconds);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    Certificate c;
    if (*catalog) c = CmdCatalog(opt, args);
    if (*construct) c = CmdConstruct(opt, args);
    if (*verify) c = CmdVerify(opt, args);
    if (*graph) c = CmdGraph(opt, args);
    if (*sw) c = CmdSwitch(opt, args);
    if (*scheme) c = CmdScheme(opt, args);
    if (*code) c = CmdCode(opt, args);
    if (*replay) c = CmdReplay(opt, args, std::cerr);
    return Emit(opt, std::move(c), elapsed());
  } catch (const pgeom::tool::UsageError& e) {
    std::cerr << "pgeom: " << e.what() << "\n\n" << app.help();
    return pgeom::tool::kExitUsage;
  } catch (const pgeom::BudgetError& e) {
    std::cerr << "pgeom: budget exhausted: " << e.what() << "\n";
    return pgeom::tool::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pgeom: " << e.what() << "\n";
    return pgeom::tool::kExitUsage;
  }
}
