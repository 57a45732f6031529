// Copyright 2026 The Orbikit Authors
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

// orbikit: command-line front end.
//
//   orbikit optimize --p P --q Q [--kind K] [--in objective.json] [--out F]
//   orbikit emit     --p P --q Q [--kind K] --system extended|compact|sci
//                    [--format lp|mps|json] [--in objective.json] [--cap N]
//   orbikit lift     --p P --q Q --in x.json
//   orbikit separate --p P --q Q --in x.json
//   orbikit stats    --p P --q Q [--kind K] --system S [--cap N]
//   orbikit verify   --p P --q Q [--suite all|cuts|integrality|projection|
//                    sci|transform] [--seed N]
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 bad parameters,
// 4 size cap exceeded, 5 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orbikit/core.hpp"
#include "orbikit/error.hpp"
#include "orbikit/formulations.hpp"
#include "orbikit/json_io.hpp"
#include "orbikit/lifting.hpp"
#include "orbikit/lp_io.hpp"
#include "orbikit/optimizer.hpp"
#include "orbikit/sci.hpp"
#include "orbikit/verify.hpp"

namespace orbikit {
namespace {

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kBadInput = 2,
  kBadParams = 3,
  kSizeCapExceeded = 4,
  kIoError = 5,
};

struct Options {
  int p = 0;
  int q = 0;
  std::string kind = "packing";
  std::string format;
  std::string emit_format = "lp";
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> cap;
  std::string system;
  std::string suite = "all";

  Params params() const { return Params(p, q); }
  Kind ParsedKind() const {
    try {
      return ParseKind(kind);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidParams, e.what());
    }
  }
  std::uint64_t Cap() const { return cap ? *cap : DefaultSizeCap(); }
};

void AddCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "number of rows")->required();
  cmd->add_option("--q", o.q, "number of columns")->required();
  cmd->add_option("--kind", o.kind, "packing or partitioning")
      ->check(CLI::IsMember({"packing", "partitioning"}));
  cmd->add_option("--in", o.in, "input JSON file");
  cmd->add_option("--out", o.out, "output file (default: standard output)");
}

std::string ReadInput(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << is.rdbuf();
  if (is.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  return buffer.str();
}

bool IsBlank(const std::string& text) {
  return text.find_first_not_of(" \t\r\n") == std::string::npos;
}

// A matrix from --in; a missing flag or an empty file gives the zero matrix.
OrbiMatrix ReadMatrix(const Options& o) {
  if (o.in.empty()) return OrbiMatrix(o.params());
  const std::string text = ReadInput(o.in);
  if (IsBlank(text)) return OrbiMatrix(o.params());
  return MatrixFromJson(ParseJson(text), o.params());
}

void WriteOutput(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::kIo, "cannot write standard output");
    return;
  }
  std::ofstream os(o.out, std::ios::binary);
  if (!os) throw Error(ErrorCode::kIo, "cannot open '" + o.out + "' for writing");
  os << text;
  os.close();
  if (!os) throw Error(ErrorCode::kIo, "cannot write '" + o.out + "'");
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

void RequireJson(const Options& o) {
  if (!o.format.empty() && o.format != "json") {
    throw Error(ErrorCode::kInvalidParams, "this subcommand only writes json");
  }
}

LinearSystem BuildSystem(const Options& o) {
  const Params params = o.params();
  const Kind kind = o.ParsedKind();
  if (o.system == "extended") return ExtendedSystem(params, kind);
  if (o.system == "compact") return CompactSystem(params, kind);
  return SciSystem(params, kind, o.Cap());
}

int RunOptimize(const Options& o) {
  RequireJson(o);
  const Kind kind = o.ParsedKind();
  const OrbiMatrix d = ReadMatrix(o);
  WriteOutput(o, Dump(OptResultToJson(Optimize(d, kind), kind)));
  return kOk;
}

int RunEmit(const Options& o) {
  LinearSystem system = BuildSystem(o);
  if (!o.in.empty()) {
    const OrbiMatrix d = ReadMatrix(o);
    system.SetObjective(o.system == "compact" ? CompactObjective(system, d)
                                              : CellObjective(system, d));
  }
  const SystemStats stats = system.Stats();
  std::cerr << "vars=" << stats.num_vars << " cons=" << stats.num_constraints
            << " nnz=" << stats.num_nonzeros << "\n";
  std::string name = o.system + "_" + std::to_string(o.p) + "_" + std::to_string(o.q);
  if (o.ParsedKind() == Kind::kPartitioning) name += "_partitioning";
  if (o.emit_format == "json") {
    WriteOutput(o, Dump(SystemToJson(system)));
    return kOk;
  }
  std::ostringstream os;
  Emit(system, o.emit_format == "mps" ? FileFormat::kMps : FileFormat::kLp, os, name);
  WriteOutput(o, os.str());
  return kOk;
}

int RunLift(const Options& o) {
  RequireJson(o);
  const OrbiMatrix x = ReadMatrix(o);
  const Flow y = Lift(x);
  Json j = FlowToJson(y);
  const std::string violation = ExtendedViolation({x, y}, Kind::kPacking);
  j["feasible"] = violation.empty();
  if (!violation.empty()) j["violation"] = violation;
  WriteOutput(o, Dump(j));
  return kOk;
}

int RunSeparate(const Options& o) {
  RequireJson(o);
  const OrbiMatrix x = ReadMatrix(o);
  const std::optional<SCInequality> sci = Separate(x);
  Json j{{"p", o.p}, {"q", o.q}, {"sci", sci ? SciToJson(*sci, x) : Json(nullptr)}};
  WriteOutput(o, Dump(j));
  return kOk;
}

int RunStats(const Options& o) {
  RequireJson(o);
  const SystemStats stats = BuildSystem(o).Stats();
  Json j{{"system", o.system}, {"kind", KindName(o.ParsedKind())}, {"p", o.p}, {"q", o.q}};
  j.update(StatsToJson(stats));
  WriteOutput(o, Dump(j));
  return kOk;
}

int RunVerify(const Options& o) {
  RequireJson(o);
  Suite suite;
  try {
    suite = ParseSuite(o.suite);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidParams, e.what());
  }
  const VerifyReport report = RunSuite(o.params(), suite, o.seed);
  WriteOutput(o, Dump(report.ToJson()));
  return report.passed() ? kOk : kVerifyFailed;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
    case ErrorCode::kInfeasible:
    case ErrorCode::kUnbounded:
      return kBadInput;
    case ErrorCode::kInvalidParams:
      return kBadParams;
    case ErrorCode::kSizeCap:
      return kSizeCapExceeded;
    case ErrorCode::kIo:
      return kIoError;
  }
  return kBadInput;
}

int Main(int argc, char** argv) {
  CLI::App app{"Orbitope toolkit: optimization, extended formulations, lifting, separation"};
  app.require_subcommand(1);
  Options o;

  CLI::App* optimize = app.add_subcommand("optimize", "maximize <d, x> over the orbitope");
  AddCommon(optimize, o);
  optimize->add_option("--format", o.format, "json");

  CLI::App* emit = app.add_subcommand("emit", "write a constraint system");
  AddCommon(emit, o);
  emit->add_option("--system", o.system)
      ->required()
      ->check(CLI::IsMember({"extended", "compact", "sci"}));
  emit->add_option("--format", o.emit_format, "lp, mps or json")
      ->check(CLI::IsMember({"lp", "mps", "json"}));
  emit->add_option("--cap", o.cap, "limit on the number of SCIs");

  CLI::App* lift = app.add_subcommand("lift", "lift x to a unit flow");
  AddCommon(lift, o);
  lift->add_option("--format", o.format, "json");

  CLI::App* separate = app.add_subcommand("separate", "find a violated SCI");
  AddCommon(separate, o);
  separate->add_option("--format", o.format, "json");

  CLI::App* stats = app.add_subcommand("stats", "size of a constraint system");
  AddCommon(stats, o);
  stats->add_option("--system", o.system)
      ->required()
      ->check(CLI::IsMember({"extended", "compact", "sci"}));
  stats->add_option("--format", o.format, "json");
  stats->add_option("--cap", o.cap, "limit on the number of SCIs");

  CLI::App* verify = app.add_subcommand("verify", "cross-check against brute-force oracles");
  AddCommon(verify, o);
  verify->add_option("--suite", o.suite, "all, cuts, integrality, projection, sci, transform");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--format", o.format, "json");
  verify->add_option("--cap", o.cap, "limit on the number of SCIs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadParams;
  }

  try {
    o.params();  // validates p >= q >= 1 before dispatch
    if (o.cap && *o.cap == 0) throw Error(ErrorCode::kInvalidParams, "--cap must be positive");
    // Size caps flow through DefaultSizeCap; --cap takes precedence.
    if (o.cap) setenv("ORBIKIT_CAP", std::to_string(*o.cap).c_str(), 1);
    if (optimize->parsed()) return RunOptimize(o);
    if (emit->parsed()) return RunEmit(o);
    if (lift->parsed()) return RunLift(o);
    if (separate->parsed()) return RunSeparate(o);
    if (stats->parsed()) return RunStats(o);
    return RunVerify(o);
  } catch (const Error& e) {
    std::cerr << "orbikit: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "orbikit: internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace
}  // namespace orbikit

int main(int argc, char** argv) { return orbikit::Main(argc, argv); }
