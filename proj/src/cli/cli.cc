// Copyright 2026 The Tapaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tapaudit/cli/cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "nlohmann/json.hpp"
#include "tapaudit/attacks/pairing.h"
#include "tapaudit/attacks/presence.h"
#include "tapaudit/attacks/suppression.h"
#include "tapaudit/audit/drop_check.h"
#include "tapaudit/audit/privacy_audit.h"
#include "tapaudit/cli/manifest.h"
#include "tapaudit/common/csv.h"
#include "tapaudit/common/status_macros.h"
#include "tapaudit/distributions/difference.h"
#include "tapaudit/distributions/scale_fit.h"
#include "tapaudit/mechanism/table_io.h"
#include "tapaudit/synth/releases.h"
#include "tapaudit/synth/scenario_io.h"
#include "tapaudit/synth/scenarios.h"

namespace tapaudit {
namespace {

using json = nlohmann::json;

// Everything a subcommand produces before it touches the disk.
struct CommandOutput {
  std::map<std::string, std::string> files;
  std::map<std::string, std::string> inputs;
  json config = json::object();
  std::string stdout_text;
  int exit_code = kExitOk;
};

// Values bound to flags. One instance per invocation.
struct Flags {
  std::string out_dir = ".";
  uint64_t seed = 0;
  CLI::Option* seed_option = nullptr;

  std::string scenario;
  std::string config_path;

  std::string raw_path;
  std::string table_path;
  double scale = 1.4;
  double threshold = 18;
  bool perturb_zeros = false;
  bool zero_skip = false;
  bool no_round = false;

  std::string route;
  std::string on_location;
  std::string off_location;
  int duration_bins = 2;
  bool manual_tap_off = false;
  std::string method = "mle";

  int64_t count = 0;
  int64_t neighbor = 0;
  std::string epsilon_grid;

  double total = 0;
  std::string components;
  double alpha = 0.05;
  std::string interval = "tail-bound";

  double value = 0;

  double percent = 0;
  int64_t rows = 0;

  std::string manifest_path;
};

absl::Status InsufficientData(absl::string_view message) {
  return absl::FailedPreconditionError(message);
}

int ExitCodeFor(const absl::Status& status) {
  return status.code() == absl::StatusCode::kFailedPrecondition
             ? kExitInsufficientData
             : kExitUsage;
}

absl::StatusOr<std::string> ReadInput(const std::string& path,
                                      CommandOutput& output) {
  absl::StatusOr<std::string> bytes = ReadFileBytes(path);
  if (!bytes.ok()) return absl::InvalidArgumentError(bytes.status().message());
  output.inputs[path] = Sha256Hex(*bytes);
  return bytes;
}

absl::StatusOr<double> ParseNumberFlag(absl::string_view text,
                                       absl::string_view flag) {
  absl::StatusOr<double> value =
      ParseDouble(absl::StripAsciiWhitespace(text));
  if (!value.ok() || !std::isfinite(*value)) {
    return absl::InvalidArgumentError(
        absl::StrCat(flag, ": '", text, "' is not a finite number"));
  }
  return value;
}

absl::StatusOr<std::vector<double>> ParseNumberList(absl::string_view text,
                                                    absl::string_view flag) {
  std::vector<double> values;
  if (absl::StripAsciiWhitespace(text).empty()) return values;
  for (absl::string_view part : absl::StrSplit(text, ',')) {
    ASSIGN_OR_RETURN(double v, ParseNumberFlag(part, flag));
    values.push_back(v);
  }
  return values;
}

absl::StatusOr<ReleaseConfig> MechanismConfig(const Flags& flags) {
  ASSIGN_OR_RETURN(NoiseScale scale, NoiseScale::Create(flags.scale));
  ReleaseConfig config{.scale = scale};
  config.threshold = flags.threshold;
  config.zero_skip = !flags.perturb_zeros;
  config.round_output = !flags.no_round;
  if (flags.seed_option != nullptr && flags.seed_option->count() > 0) {
    config.seed = flags.seed;
  }
  RETURN_IF_ERROR(config.Validate());
  return config;
}

json MechanismJson(const ReleaseConfig& config) {
  return json{{"scale", config.scale.value()},
              {"threshold", config.threshold},
              {"zero_skip", config.zero_skip},
              {"round_output", config.round_output}};
}

absl::Status RequireSeed(const Flags& flags, absl::string_view command) {
  if (flags.seed_option->count() == 0) {
    return absl::InvalidArgumentError(
        absl::StrCat(command, " needs --seed; runs are never seeded from the "
                              "clock"));
  }
  return absl::OkStatus();
}

template <typename Writer, typename Value>
std::string Render(Writer writer, const Value& value) {
  std::ostringstream out;
  writer(out, value);
  return out.str();
}

absl::StatusOr<CommandOutput> Gen(const Flags& flags) {
  RETURN_IF_ERROR(RequireSeed(flags, "gen"));
  CommandOutput output;
  ScenarioConfig scenario;
  if (!flags.config_path.empty()) {
    ASSIGN_OR_RETURN(std::string text, ReadInput(flags.config_path, output));
    std::istringstream in(text);
    ASSIGN_OR_RETURN(scenario, ReadScenarioConfig(in));
    output.config["config_path"] = flags.config_path;
  } else {
    absl::StatusOr<ScenarioConfig> builtin = BuiltinScenario(flags.scenario);
    if (!builtin.ok()) {
      return absl::InvalidArgumentError(builtin.status().message());
    }
    scenario = *std::move(builtin);
    output.config["scenario"] = flags.scenario;
  }
  scenario.seed = flags.seed;
  ASSIGN_OR_RETURN(RawDataset raw, GenerateRaw(scenario));
  output.files["raw.csv"] = Render(WriteRawEventsCsv, raw);
  output.files["scenario.txt"] = Render(WriteScenarioConfig, scenario);
  output.config["events"] = raw.events.size();
  output.stdout_text = absl::StrCat("generated ", raw.events.size(),
                                    " events for scenario '", scenario.name,
                                    "'\n");
  return output;
}

absl::StatusOr<CommandOutput> Release(const Flags& flags) {
  RETURN_IF_ERROR(RequireSeed(flags, "release"));
  CommandOutput output;
  ASSIGN_OR_RETURN(ReleaseConfig config, MechanismConfig(flags));
  ASSIGN_OR_RETURN(std::string text, ReadInput(flags.raw_path, output));
  std::istringstream in(text);
  absl::StatusOr<RawDataset> raw = ReadRawEventsCsv(in);
  if (!raw.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(flags.raw_path, ": ", raw.status().message()));
  }
  ASSIGN_OR_RETURN(DerivedReleases releases, DeriveReleases(*raw, config));
  output.files["time_loc.csv"] =
      Render(WriteReleasedTableCsv, releases.time_and_location);
  output.files["time_only.csv"] =
      Render(WriteReleasedTableCsv, releases.time_only);
  output.files["loc_only.csv"] =
      Render(WriteReleasedTableCsv, releases.location_only);
  output.files["ledger.csv"] = Render(WriteLedgerCsv, releases.ledger);
  output.config["mechanism"] = MechanismJson(config);
  output.stdout_text =
      absl::StrCat("released ", releases.time_and_location.entries.size(),
                   " time/location cells, ", releases.time_only.entries.size(),
                   " time-only and ", releases.location_only.entries.size(),
                   " location-only cells\n");
  return output;
}

std::string DifferenceHistogram(const DifferenceSample& sample, double b_hat) {
  std::map<int64_t, int64_t> counts;
  for (double d : sample.values) ++counts[std::llround(d)];
  const int64_t reach = static_cast<int64_t>(
      std::ceil(12.0 * std::min(std::max(b_hat, 1.0), 1000.0)));
  const int64_t lo = std::min(counts.begin()->first, -reach);
  const int64_t hi = std::max(counts.rbegin()->first, reach);
  const NoiseScale scale = *NoiseScale::Create(std::max(b_hat, kMinFitScale));
  const double n = static_cast<double>(sample.values.size());
  std::ostringstream out;
  out << "difference,observed_frequency,model_density\n";
  for (int64_t d = lo; d <= hi; ++d) {
    auto it = counts.find(d);
    const double observed = it == counts.end() ? 0.0 : it->second / n;
    WriteCsvRow(out, {absl::StrCat(d), FormatDouble(observed),
                      FormatDouble(DiffPdf(static_cast<double>(d), scale))});
  }
  return out.str();
}

absl::StatusOr<CommandOutput> FitNoise(const Flags& flags) {
  CommandOutput output;
  PairSpec spec{.route = flags.route,
                .on_location = flags.on_location,
                .off_location = flags.off_location,
                .trip_duration_bins = flags.duration_bins,
                .auto_tap_off = !flags.manual_tap_off};
  RETURN_IF_ERROR(spec.Validate());
  FitMethod method;
  if (flags.method == "mle") {
    method = FitMethod::kMle;
  } else if (flags.method == "moments") {
    method = FitMethod::kMoments;
  } else {
    return absl::InvalidArgumentError("--method must be mle or moments");
  }
  ASSIGN_OR_RETURN(std::string text, ReadInput(flags.table_path, output));
  if (absl::StripAsciiWhitespace(text).empty()) {
    return InsufficientData(absl::StrCat(flags.table_path, " is empty"));
  }
  std::istringstream in(text);
  absl::StatusOr<ReleasedTable> table = ReadReleasedTableCsv(in);
  if (!table.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(flags.table_path, ": ", table.status().message()));
  }
  ASSIGN_OR_RETURN(PairedDifferences pairs, PairPointToPoint(*table, spec));
  const size_t needed = method == FitMethod::kMle ? 1 : 2;
  if (pairs.sample.values.size() < needed) {
    return InsufficientData(absl::StrCat(
        "no usable pairs from '", spec.on_location, "' to '",
        spec.off_location, "' (", pairs.skipped_suppressed,
        " skipped as suppressed)"));
  }
  absl::StatusOr<ScaleEstimate> estimate =
      method == FitMethod::kMle ? FitScaleMle(pairs.sample)
                                : FitScaleMoments(pairs.sample);
  if (!estimate.ok()) return InsufficientData(estimate.status().message());
  std::vector<std::string> warnings = pairs.warnings;
  warnings.insert(warnings.end(), estimate->warnings.begin(),
                  estimate->warnings.end());

  json report{{"b_hat", estimate->b_hat},
              {"method", std::string(FitMethodName(estimate->method))},
              {"sample_size", estimate->sample_size},
              {"stderr", std::isfinite(estimate->stderr_approx)
                             ? json(estimate->stderr_approx)
                             : json(nullptr)},
              {"log_likelihood", estimate->log_likelihood
                                     ? json(*estimate->log_likelihood)
                                     : json(nullptr)},
              {"degenerate", estimate->degenerate},
              {"skipped_suppressed", pairs.skipped_suppressed},
              {"warnings", warnings}};
  const std::string line = report.dump() + "\n";
  output.files["fit_noise.json"] = line;
  output.files["differences.csv"] =
      DifferenceHistogram(pairs.sample, estimate->b_hat);
  output.config["pair"] = {{"route", spec.route},
                           {"on_location", spec.on_location},
                           {"off_location", spec.off_location},
                           {"duration_bins", spec.trip_duration_bins},
                           {"auto_tap_off", spec.auto_tap_off}};
  output.config["method"] = flags.method;
  output.stdout_text = line;
  return output;
}

absl::StatusOr<CommandOutput> Audit(const Flags& flags) {
  CommandOutput output;
  ASSIGN_OR_RETURN(ReleaseConfig config, MechanismConfig(flags));
  if (!config.round_output) {
    return absl::InvalidArgumentError(
        "audit enumerates the rounded output; drop --no-round");
  }
  std::vector<double> grid = DefaultEpsilonGrid();
  if (!flags.epsilon_grid.empty()) {
    ASSIGN_OR_RETURN(grid, ParseNumberList(flags.epsilon_grid,
                                           "--epsilon-grid"));
    if (grid.empty()) {
      return absl::InvalidArgumentError("--epsilon-grid is empty");
    }
  }
  absl::StatusOr<DpAuditResult> result =
      AuditPair(flags.count, flags.neighbor, config, grid);
  if (!result.ok()) return absl::InvalidArgumentError(result.status().message());

  const std::string witness =
      result->witness ? absl::StrCat(result->witness->atom) : "";
  std::ostringstream csv;
  csv << "epsilon,delta,witness_atom\n";
  double max_delta = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    WriteCsvRow(csv, {FormatDouble(grid[i]), FormatDouble(result->delta[i]),
                      witness});
    max_delta = std::max(max_delta, result->delta[i]);
  }
  output.files["audit.csv"] = csv.str();
  output.config["mechanism"] = MechanismJson(config);
  output.config["count"] = flags.count;
  output.config["neighbor"] = flags.neighbor;
  output.config["epsilon_grid"] = grid;

  json summary{{"count", flags.count},
               {"neighbor", flags.neighbor},
               {"max_delta", max_delta},
               {"max_atom_ratio", std::isfinite(result->max_atom_ratio)
                                      ? json(result->max_atom_ratio)
                                      : json("inf")}};
  if (result->witness) {
    summary["witness"] = {{"atom", result->witness->atom},
                          {"probability", result->witness->pr_possible},
                          {"producing_count", result->witness->producing_count}};
    output.exit_code = kExitViolation;
  } else {
    summary["witness"] = nullptr;
  }
  output.stdout_text = summary.dump() + "\n";
  return output;
}

absl::StatusOr<CommandOutput> EstimateSuppressedCommand(const Flags& flags) {
  CommandOutput output;
  ASSIGN_OR_RETURN(NoiseScale scale, NoiseScale::Create(flags.scale));
  ASSIGN_OR_RETURN(IntervalMethod method, ParseIntervalMethod(flags.interval));
  ASSIGN_OR_RETURN(std::vector<double> components,
                   ParseNumberList(flags.components, "--components"));
  ASSIGN_OR_RETURN(SuppressionEstimate estimate,
                   EstimateSuppressed(flags.total, components, scale,
                                      flags.alpha, method));
  json line{{"point_estimate", estimate.point_estimate},
            {"half_width", estimate.half_width},
            {"interval_low", estimate.interval_low},
            {"interval_high", estimate.interval_high},
            {"alpha", estimate.alpha},
            {"noise_terms", estimate.noise_terms},
            {"method", std::string(IntervalMethodName(estimate.method))},
            {"captured_integers", estimate.captured_integers}};
  output.stdout_text = line.dump() + "\n";
  output.files["estimate.jsonl"] = output.stdout_text;
  output.config = {{"total", flags.total},
                   {"components", components},
                   {"scale", flags.scale},
                   {"alpha", flags.alpha},
                   {"interval", flags.interval}};
  return output;
}

absl::StatusOr<CommandOutput> DetectPresenceCommand(const Flags& flags) {
  CommandOutput output;
  if (!std::isfinite(flags.value) || flags.value < 0) {
    return absl::InvalidArgumentError("--value must be finite and >= 0");
  }
  ASSIGN_OR_RETURN(ReleaseConfig config, MechanismConfig(flags));
  const PresenceVerdict verdict = DetectPresence(flags.value, config);
  json line{{"verdict", std::string(PresenceName(verdict.verdict))},
            {"released_value", verdict.released_value},
            {"threshold", verdict.threshold},
            {"zero_skip", verdict.zero_skip}};
  output.stdout_text = line.dump() + "\n";
  output.files["presence.jsonl"] = output.stdout_text;
  output.config["mechanism"] = MechanismJson(config);
  output.config["value"] = flags.value;
  return output;
}

absl::StatusOr<CommandOutput> DropCheck(const Flags& flags) {
  CommandOutput output;
  ASSIGN_OR_RETURN(DropVerdict verdict,
                   CheckDropConsistency(flags.percent, flags.rows));
  json line{{"consistent", verdict.consistent},
            {"implied_rows", verdict.implied_rows},
            {"whole_rows", verdict.whole_rows}};
  output.stdout_text = line.dump() + "\n";
  output.files["drop_check.jsonl"] = output.stdout_text;
  output.config = {{"percent", flags.percent}, {"rows", flags.rows}};
  return output;
}

// Arguments minus --out and its value, for the manifest.
std::vector<std::string> WithoutOut(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (absl::StartsWith(args[i], "--out=")) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

absl::Status WriteArtifacts(const Flags& flags, absl::string_view subcommand,
                            const std::vector<std::string>& args,
                            const CommandOutput& output) {
  std::error_code ec;
  std::filesystem::create_directories(flags.out_dir, ec);
  if (ec) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cannot create output directory ", flags.out_dir, ": ", ec.message()));
  }
  RunManifest manifest;
  manifest.subcommand = std::string(subcommand);
  manifest.args = WithoutOut(args);
  if (flags.seed_option->count() > 0) manifest.seed = flags.seed;
  manifest.config = output.config;
  manifest.inputs = output.inputs;
  for (const auto& [name, contents] : output.files) {
    const std::string path = (std::filesystem::path(flags.out_dir) / name);
    RETURN_IF_ERROR(WriteFileAtomic(path, contents));
    manifest.outputs[name] = Sha256Hex(contents);
  }
  const std::string path =
      std::filesystem::path(flags.out_dir) / kManifestFile;
  return WriteFileAtomic(path, ManifestToJson(manifest).dump(2) + "\n");
}

void AddMechanismFlags(CLI::App* command, Flags& flags, bool rounding) {
  command->add_option("--scale", flags.scale, "Laplace noise scale b")
      ->capture_default_str();
  command->add_option("--threshold", flags.threshold, "Release threshold t")
      ->capture_default_str();
  auto* perturb = command->add_flag(
      "--perturb-zeros", flags.perturb_zeros,
      "Perturb raw zeros like every other count (the corrected mechanism)");
  auto* skip = command->add_flag(
      "--zero-skip", flags.zero_skip,
      "Release raw zeros unperturbed (the published mechanism; default)");
  perturb->excludes(skip);
  if (rounding) {
    command->add_flag("--no-round", flags.no_round,
                      "Keep released values unrounded");
  }
}

absl::StatusOr<std::vector<std::string>> RerunArgs(const Flags& flags) {
  absl::StatusOr<std::string> text = ReadFileBytes(flags.manifest_path);
  if (!text.ok()) return absl::InvalidArgumentError(text.status().message());
  const json parsed = json::parse(*text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrCat(flags.manifest_path, " is not valid JSON"));
  }
  ASSIGN_OR_RETURN(RunManifest manifest, ManifestFromJson(parsed));
  for (const auto& [path, hash] : manifest.inputs) {
    absl::StatusOr<std::string> bytes = ReadFileBytes(path);
    if (!bytes.ok() || Sha256Hex(*bytes) != hash) {
      return absl::InvalidArgumentError(
          absl::StrCat("input ", path, " is missing or has changed"));
    }
  }
  if (manifest.args.empty() || manifest.args.front() == "rerun") {
    return absl::InvalidArgumentError("manifest has nothing to rerun");
  }
  std::vector<std::string> args = manifest.args;
  args.push_back("--out");
  args.push_back(flags.out_dir);
  return args;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Flags flags;
  CLI::App app{"Audit and attack thresholded Laplace count releases",
               "tapaudit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", flags.out_dir, "Output directory")
      ->capture_default_str();
  flags.seed_option =
      app.add_option("--seed", flags.seed, "Seed for every random draw");

  CLI::App* gen = app.add_subcommand("gen", "Generate synthetic tap events");
  auto* scenario_opt = gen->add_option(
      "--scenario", flags.scenario,
      "Built-in scenario: secret-ferry, night-bus or manly-ferry");
  auto* config_opt =
      gen->add_option("--config", flags.config_path, "Scenario config file");
  scenario_opt->excludes(config_opt);
  gen->require_option(1);

  CLI::App* release =
      app.add_subcommand("release", "Derive the three released tables");
  release->add_option("--raw", flags.raw_path, "Raw events CSV")->required();
  AddMechanismFlags(release, flags, /*rounding=*/true);

  CLI::App* fit = app.add_subcommand(
      "fit-noise", "Recover the noise scale from point-to-point pairs");
  fit->add_option("--table", flags.table_path, "Released time/location CSV")
      ->required();
  fit->add_option("--on-location", flags.on_location, "Boarding location")
      ->required();
  fit->add_option("--off-location", flags.off_location, "Alighting location")
      ->required();
  fit->add_option("--duration-bins", flags.duration_bins,
                  "Trip duration in 15-minute bins")
      ->capture_default_str();
  fit->add_option("--route", flags.route, "Route label for the report");
  fit->add_flag("--manual-tap-off", flags.manual_tap_off,
                "Passengers may skip tapping off on this route");
  fit->add_option("--method", flags.method, "mle or moments")
      ->capture_default_str();

  CLI::App* audit =
      app.add_subcommand("audit", "Exact (epsilon, delta) audit of one cell");
  audit->add_option("--count", flags.count, "Raw count c")->required();
  audit->add_option("--neighbor", flags.neighbor, "Neighboring count c'")
      ->required();
  audit->add_option("--epsilon-grid", flags.epsilon_grid,
                    "Comma-separated epsilons (default: 21 points on "
                    "[0.01, 10])");
  AddMechanismFlags(audit, flags, /*rounding=*/false);

  CLI::App* estimate = app.add_subcommand(
      "estimate-suppressed", "Estimate a suppressed cell from a marginal");
  estimate->add_option("--total", flags.total, "Released marginal total")
      ->required();
  estimate->add_option("--components", flags.components,
                       "Comma-separated released components")
      ->required();
  estimate->add_option("--scale", flags.scale, "Laplace noise scale b")
      ->capture_default_str();
  estimate->add_option("--alpha", flags.alpha, "1 - confidence level")
      ->capture_default_str();
  estimate->add_option("--interval", flags.interval,
                       "tail-bound or intersection")
      ->capture_default_str();

  CLI::App* presence = app.add_subcommand(
      "detect-presence", "Does a released value prove someone was there?");
  presence->add_option("--value", flags.value, "Released value")->required();
  AddMechanismFlags(presence, flags, /*rounding=*/true);

  CLI::App* drop = app.add_subcommand(
      "drop-check", "Is a reported dropped-row percentage possible?");
  drop->add_option("--percent", flags.percent, "Reported percentage")
      ->required();
  drop->add_option("--rows", flags.rows, "Total row count")->required();

  CLI::App* rerun =
      app.add_subcommand("rerun", "Re-execute the run a manifest records");
  rerun->add_option("--manifest", flags.manifest_path, "manifest.json")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tapaudit: " << e.what() << '\n';
    return kExitUsage;
  }

  if (rerun->parsed()) {
    absl::StatusOr<std::vector<std::string>> replay = RerunArgs(flags);
    if (!replay.ok()) {
      err << "tapaudit: " << replay.status().message() << '\n';
      return kExitUsage;
    }
    return RunCli(*replay, out, err);
  }

  CLI::App* chosen = app.get_subcommands().front();
  absl::StatusOr<CommandOutput> output;
  if (chosen == gen) {
    output = Gen(flags);
  } else if (chosen == release) {
    output = Release(flags);
  } else if (chosen == fit) {
    output = FitNoise(flags);
  } else if (chosen == audit) {
    output = Audit(flags);
  } else if (chosen == estimate) {
    output = EstimateSuppressedCommand(flags);
  } else if (chosen == presence) {
    output = DetectPresenceCommand(flags);
  } else {
    output = DropCheck(flags);
  }
  if (!output.ok()) {
    err << "tapaudit " << chosen->get_name() << ": "
        << output.status().message() << '\n';
    return ExitCodeFor(output.status());
  }
  if (absl::Status status =
          WriteArtifacts(flags, chosen->get_name(), args, *output);
      !status.ok()) {
    err << "tapaudit: " << status.message() << '\n';
    return kExitUsage;
  }
  out << output->stdout_text;
  return output->exit_code;
}

}  // namespace tapaudit
