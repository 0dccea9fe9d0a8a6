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

#include "certificate.h"

#include <cstdio>
#include <stdexcept>

#include "pgeom/io.h"

namespace pgeom::tool {

namespace {

const char kArtifactVersion[] = "0.3.0";

void AppendText(const Json& j, const std::string& indent, std::string* out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      *out += indent + key + ":\n";
      AppendText(value, indent + "  ", out);
    } else {
      *out += indent + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) +
              "\n";
    }
  }
}

}  // namespace

void Certificate::AddFile(const std::string& path, const std::string& text) {
  files.push_back({path, ContentHash(text)});
}

Json Certificate::Payload() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["claim_id"] = claim_id;
  j["artifact_version"] = kArtifactVersion;
  j["parameters"] = parameters;
  j["verdict"] = VerdictName(verdict);
  Json w = Json::object();
  w["files"] = Json::array();
  for (const WitnessFile& f : files) w["files"].push_back({{"path", f.path}, {"hash", f.hash}});
  w["data"] = data;
  j["witness"] = w;
  j["counters"] = counters;
  j["replay"] = replay;
  return j;
}

std::string Certificate::PayloadHash() const { return ContentHash(Payload().dump()); }

Json Certificate::ToJson() const {
  Json j = Payload();
  j["payload_hash"] = PayloadHash();
  char t[32];
  std::snprintf(t, sizeof(t), "%.3f", wall_seconds);
  j["wall_seconds"] = std::stod(t);
  return j;
}

std::string Certificate::ToText() const {
  std::string out = "claim: " + claim_id + "\nverdict: " + VerdictName(verdict) + "\n";
  if (!parameters.empty()) {
    out += "parameters:\n";
    AppendText(parameters, "  ", &out);
  }
  if (!data.empty()) {
    out += "result:\n";
    AppendText(data, "  ", &out);
  }
  if (!counters.empty()) {
    out += "counters:\n";
    AppendText(counters, "  ", &out);
  }
  for (const WitnessFile& f : files) out += "file: " + f.path + " " + f.hash + "\n";
  return out;
}

Certificate Certificate::FromJson(const Json& j) {
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion) {
    throw std::invalid_argument("unsupported certificate schema");
  }
  Certificate c;
  c.claim_id = j.at("claim_id").get<std::string>();
  c.parameters = j.at("parameters");
  c.verdict = ParseVerdict(j.at("verdict").get<std::string>());
  for (const auto& f : j.at("witness").at("files")) {
    c.files.push_back({f.at("path").get<std::string>(), f.at("hash").get<std::string>()});
  }
  c.data = j.at("witness").at("data");
  c.counters = j.at("counters");
  c.replay = j.at("replay");
  return c;
}

int ExitCode(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return kExitVerified;
    case Verdict::kBudgetExhausted: return kExitUsage;
    default: return kExitRefuted;
  }
}

Verdict ParseVerdict(const std::string& s) {
  for (Verdict v : {Verdict::kVerified, Verdict::kRefuted, Verdict::kInconclusive,
                    Verdict::kBudgetExhausted}) {
    if (VerdictName(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict: " + s);
}

}  // namespace pgeom::tool
