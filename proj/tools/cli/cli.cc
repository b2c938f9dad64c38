//
// Copyright 2026 The Camo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "camo/baseline.h"
#include "camo/checksum.h"
#include "camo/dataset.h"
#include "camo/errors.h"
#include "camo/eval.h"
#include "camo/level_spec.h"
#include "camo/pipeline.h"

namespace camo::cli {
namespace {

namespace fs = std::filesystem;

std::string FormatDouble(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

// Options shared by every command that camouflages text.
struct ConfigFlags {
  std::string config;
  std::string glyphs;
  std::string stopwords;
  std::vector<std::pair<std::string, CLI::Option*>> overrides;
  std::vector<std::string> values;
  std::string methods;
  CLI::Option* methods_opt = nullptr;
  std::string glyph_tier;
  CLI::Option* glyph_tier_opt = nullptr;
};

void AddConfigFlags(CLI::App* app, ConfigFlags* flags) {
  app->add_option("--config", flags->config,
                  "Level override file (key = value under [level N vK] "
                  "headers)")
      ->envname("CAMO_CONFIG");
  app->add_option("--glyphs", flags->glyphs,
                  "Glyph table file; its sections replace the built-in ones");
  app->add_option("--stopwords", flags->stopwords,
                  "Stopword list, one word per line");
  const auto keys = OverrideKeyDefaults();
  flags->values.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::string name = keys[i].first;
    std::replace(name.begin(), name.end(), '_', '-');
    CLI::Option* opt = app->add_option(
        "--" + name, flags->values[i],
        "Set " + keys[i].first + " at every level (default " +
            keys[i].second + ")");
    opt->group("Level parameters");
    flags->overrides.emplace_back(keys[i].first, opt);
  }
  flags->methods_opt =
      app->add_option("--methods", flags->methods,
                      "Comma-separated methods for every level (default L1 "
                      "leetspeak, L2 leetspeak,punct_camo, L3 all three)")
          ->group("Level parameters");
  flags->glyph_tier_opt =
      app->add_option("--glyph-tier", flags->glyph_tier,
                      "Glyph tier for every level (default L1 basic, L2 "
                      "intermediate, L3 advanced)")
          ->group("Level parameters");
}

PipelineConfig BuildConfig(const ConfigFlags& flags) {
  PipelineConfig config;
  Overlay overlay;
  if (!flags.config.empty()) overlay = LoadOverrides(flags.config);
  std::string text;
  if (flags.methods_opt->count() > 0) text += "methods = " + flags.methods + "\n";
  if (flags.glyph_tier_opt->count() > 0) {
    text += "glyph_tier = " + flags.glyph_tier + "\n";
  }
  for (std::size_t i = 0; i < flags.overrides.size(); ++i) {
    if (flags.overrides[i].second->count() == 0) continue;
    text += flags.overrides[i].first + " = " + flags.values[i] + "\n";
  }
  if (!text.empty()) {
    const Overlay extra = ParseOverrides(text, "<command line>");
    overlay.entries.insert(overlay.entries.end(), extra.entries.begin(),
                           extra.entries.end());
  }
  if (!overlay.empty()) config.specs = SpecSet::Canonical().WithOverlay(overlay);
  if (!flags.glyphs.empty()) config.glyphs = GlyphBook::Load(flags.glyphs);
  if (!flags.stopwords.empty()) {
    config.stopwords = StopwordList::Load(flags.stopwords);
  }
  return config;
}

void AddSeed(CLI::App* app, std::uint64_t* seed) {
  app->add_option("--seed", *seed, "Master seed")->capture_default_str();
}

// Writes to `path`, or to `out` when the path is empty or "-".
void Emit(const std::string& path, const std::string& content,
          std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  WriteFileBytes(path, content);
  err << Sha256Hex(content) << "  " << path << "\n";
}

std::size_t CountApplied(const std::vector<CamouflagedInstance>& data) {
  return static_cast<std::size_t>(std::count_if(
      data.begin(), data.end(), [](const auto& ci) { return ci.camo_applied; }));
}

// The test set a manifest was generated from: --gold when given, otherwise
// the recorded path (as given, then relative to the manifest). The file must
// match the recorded checksum.
std::vector<Instance> ResolveGold(const SuiteManifest& manifest,
                                  const fs::path& manifest_path,
                                  const std::string& gold_flag) {
  fs::path path = gold_flag;
  if (path.empty()) {
    path = manifest.source_path;
    if (path.is_relative() && !fs::exists(path)) {
      path = manifest_path.parent_path() / manifest.source_path;
    }
  }
  if (!fs::exists(path)) {
    throw IoError("gold dataset not found: " + path.string());
  }
  if (FileSha256Hex(path) != manifest.source_checksum) {
    throw ValidationError("manifest mismatch: " + path.string() +
                          " does not match the recorded source checksum");
  }
  ReadOptions options;
  options.require_label = true;
  std::vector<Instance> gold = ReadDataset(path, options);
  if (gold.size() != manifest.source_instances) {
    throw ValidationError("manifest mismatch: " + path.string() + " has " +
                          std::to_string(gold.size()) + " instances, " +
                          "manifest records " +
                          std::to_string(manifest.source_instances));
  }
  return gold;
}

std::vector<CamouflagedInstance> ReadEntry(const SuiteManifest& manifest,
                                           const fs::path& manifest_path,
                                           const SuiteEntry& entry) {
  const fs::path path = manifest_path.parent_path() / entry.path;
  if (FileSha256Hex(path) != entry.checksum) {
    throw ValidationError("manifest mismatch: checksum of " + path.string() +
                          " differs from " + EntryKey(entry));
  }
  auto data = ReadCamouflagedDataset(path);
  if (data.size() != manifest.source_instances) {
    throw ValidationError("manifest mismatch: " + path.string() +
                          " has the wrong instance count");
  }
  return data;
}

struct ExtraSpec {
  std::string model;
  std::string name;
  std::string gold;
  std::string pred;
};

// MODEL:NAME=GOLD,PRED
ExtraSpec ParseExtra(const std::string& value) {
  const std::size_t colon = value.find(':');
  const std::size_t eq = value.find('=', colon == std::string::npos ? 0 : colon);
  const std::size_t comma =
      eq == std::string::npos ? std::string::npos : value.find(',', eq);
  if (colon == std::string::npos || eq == std::string::npos ||
      comma == std::string::npos || colon == 0 || eq == colon + 1) {
    throw ValidationError("--extra expects MODEL:NAME=GOLD,PRED, got '" +
                          value + "'");
  }
  return {value.substr(0, colon), value.substr(colon + 1, eq - colon - 1),
          value.substr(eq + 1, comma - eq - 1), value.substr(comma + 1)};
}

int Dispatch(CLI::App& app, const std::vector<std::string>& args,
             std::ostream& out, std::ostream& err) {
  app.require_subcommand(1);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  // transform
  struct {
    std::string in, out;
    int level = 1;
    std::string version;
    int percent = 100;
    std::uint64_t seed = kDefaultSeed;
    ConfigFlags config;
  } tr;
  CLI::App* transform = app.add_subcommand(
      "transform", "Camouflage a dataset at one level, version and percent");
  transform->add_option("--in", tr.in, "Input dataset (.jsonl)")
      ->required();
  transform->add_option("--out", tr.out, "Output file (default stdout)");
  transform->add_option("--level", tr.level, "Complexity level")
      ->required()
      ->check(CLI::Range(1, 3));
  transform->add_option("--version", tr.version, "Word ratio version")
      ->required()
      ->check(CLI::IsMember({"v1", "v2"}));
  transform->add_option("--percent", tr.percent, "Camouflaged instances (%)")
      ->capture_default_str()
      ->check(CLI::Range(0, 100));
  AddSeed(transform, &tr.seed);
  AddConfigFlags(transform, &tr.config);

  // suite
  struct {
    std::string in, outdir;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    bool force = false;
    ConfigFlags config;
  } su;
  su.jobs = hw;
  CLI::App* suite = app.add_subcommand(
      "suite", "Generate the 30 camouflaged test files and a manifest");
  suite->add_option("--in", su.in, "Test dataset (.jsonl)")
      ->required();
  suite->add_option("--outdir", su.outdir, "Output directory")->required();
  AddSeed(suite, &su.seed);
  suite->add_option("--jobs", su.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  suite->add_flag("--force", su.force, "Overwrite existing outputs");
  AddConfigFlags(suite, &su.config);

  // train-data
  struct {
    std::string in, out, mode;
    int percent = 100;
    std::uint64_t epoch = 0;
    std::uint64_t seed = kDefaultSeed;
    ConfigFlags config;
  } td;
  CLI::App* train_data = app.add_subcommand(
      "train-data", "Materialize a static training set or one dynamic epoch");
  train_data->add_option("--in", td.in, "Training dataset (.jsonl)")
      ->required();
  train_data->add_option("--out", td.out, "Output file (default stdout)");
  train_data->add_option("--mode", td.mode, "static or dynamic")
      ->required()
      ->check(CLI::IsMember({"static", "dynamic"}));
  train_data->add_option("--percent", td.percent, "Camouflaged instances (%)")
      ->capture_default_str()
      ->check(CLI::Range(0, 100));
  train_data->add_option("--epoch", td.epoch, "Epoch (dynamic mode)")
      ->capture_default_str();
  AddSeed(train_data, &td.seed);
  AddConfigFlags(train_data, &td.config);

  // baseline-train
  struct {
    std::string train, out, mode = "naive";
    int percent = 100;
    std::uint64_t seed = kDefaultSeed;
    BaselineOptions options;
    ConfigFlags config;
  } bt;
  CLI::App* baseline_train = app.add_subcommand(
      "baseline-train", "Train the hashed n-gram baseline classifier");
  baseline_train->add_option("--train", bt.train, "Training dataset (.jsonl)")
      ->required();
  baseline_train->add_option("--out", bt.out, "Model file")->required();
  baseline_train
      ->add_option("--mode", bt.mode, "naive, static or dynamic")
      ->capture_default_str()
      ->check(CLI::IsMember({"naive", "static", "dynamic"}));
  baseline_train
      ->add_option("--percent", bt.percent,
                   "Camouflaged training instances (%), static/dynamic")
      ->capture_default_str()
      ->check(CLI::Range(0, 100));
  baseline_train->add_option("--epochs", bt.options.epochs, "SGD epochs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  baseline_train
      ->add_option("--lr", bt.options.learning_rate, "Initial learning rate")
      ->capture_default_str();
  baseline_train->add_option("--l2", bt.options.l2, "L2 penalty")
      ->capture_default_str();
  AddSeed(baseline_train, &bt.seed);
  AddConfigFlags(baseline_train, &bt.config);

  // baseline-predict
  struct {
    std::string model, in, out, manifest, outdir, gold;
    bool force = false;
  } bp;
  CLI::App* baseline_predict = app.add_subcommand(
      "baseline-predict",
      "Predict one dataset, or every test of a suite with --manifest");
  baseline_predict->add_option("--model", bp.model, "Model file")
      ->required();
  CLI::Option* in_opt =
      baseline_predict->add_option("--in", bp.in, "Dataset to predict");
  baseline_predict->add_option("--out", bp.out,
                               "Prediction file (default stdout)");
  CLI::Option* manifest_opt =
      baseline_predict
          ->add_option("--manifest", bp.manifest, "Suite manifest");
  baseline_predict->add_option(
      "--outdir", bp.outdir,
      "Directory for <key>.jsonl prediction files (with --manifest)");
  baseline_predict->add_option("--gold", bp.gold,
                               "Original test set (default: from manifest)");
  baseline_predict->add_flag("--force", bp.force, "Overwrite existing outputs");
  in_opt->excludes(manifest_opt);

  // eval
  struct {
    std::string gold, pred;
  } ev;
  CLI::App* eval = app.add_subcommand("eval", "F1-macro of one prediction file");
  eval->add_option("--gold", ev.gold, "Labelled dataset")
      ->required();
  eval->add_option("--pred", ev.pred, "Prediction file")
      ->required();

  // report
  struct {
    std::string manifest, gold, out, table_csv, figure_csv;
    std::vector<std::string> models, extras;
  } rp;
  CLI::App* report = app.add_subcommand(
      "report", "Robustness report over a suite for one or more models");
  report->add_option("--manifest", rp.manifest, "Suite manifest")
      ->required();
  report->add_option("--gold", rp.gold,
                     "Original test set (default: from manifest)");
  report
      ->add_option("--model", rp.models,
                   "NAME=DIR with original.jsonl and <key>.jsonl predictions")
      ->required();
  report->add_option("--extra", rp.extras,
                     "MODEL:NAME=GOLD,PRED row for an external test file");
  report->add_option("--out", rp.out, "JSON report (default stdout)");
  report->add_option("--table-csv", rp.table_csv, "Table view CSV");
  report->add_option("--figure-csv", rp.figure_csv, "Figure view CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (transform->parsed()) {
    const PipelineConfig config = BuildConfig(tr.config);
    const auto data = ReadDataset(tr.in);
    const auto result = CamouflageDataset(data, tr.level,
                                          ParseVersion(tr.version), tr.percent,
                                          tr.seed, config);
    err << "transform: " << CountApplied(result) << "/" << result.size()
        << " instances camouflaged\n";
    Emit(tr.out, SerializeCamouflagedDataset(result), out, err);
    return kExitOk;
  }

  if (suite->parsed()) {
    const PipelineConfig config = BuildConfig(su.config);
    const auto data = ReadDataset(su.in);
    SuiteOptions options;
    options.force = su.force;
    options.jobs = su.jobs;
    const SuiteManifest manifest =
        GenerateSuite(data, su.in, FileSha256Hex(su.in), su.seed, su.outdir,
                      config, options);
    for (const SuiteEntry& entry : manifest.entries) {
      err << entry.checksum << "  " << (fs::path(su.outdir) / entry.path).string()
          << "  (" << entry.camouflaged << "/" << entry.instances << ")\n";
    }
    const fs::path manifest_path = fs::path(su.outdir) / kManifestFileName;
    err << FileSha256Hex(manifest_path) << "  " << manifest_path.string()
        << "\n";
    err << "suite: " << manifest.entries.size() + 1 << " tests\n";
    return kExitOk;
  }

  if (train_data->parsed()) {
    const PipelineConfig config = BuildConfig(td.config);
    const auto data = ReadDataset(td.in);
    if (td.mode == "static" && td.epoch != 0) {
      throw ValidationError("--epoch applies to dynamic mode only");
    }
    const auto result =
        td.mode == "static"
            ? StaticTrainingSet(data, td.percent, td.seed, config)
            : DynamicView(data, td.percent, td.seed, td.epoch, config);
    err << "train-data: " << CountApplied(result) << "/" << result.size()
        << " instances camouflaged\n";
    Emit(td.out, SerializeCamouflagedDataset(result), out, err);
    return kExitOk;
  }

  if (baseline_train->parsed()) {
    const PipelineConfig config = BuildConfig(bt.config);
    ReadOptions read;
    read.require_label = true;
    const auto data = ReadDataset(bt.train, read);
    const TrainingMode mode = TrainingMode::Parse(bt.mode, bt.percent);
    bt.options.seed = bt.seed;
    const BaselineModel model = TrainBaseline(data, mode, bt.options, config);
    const std::string bytes = model.Serialize();
    WriteFileBytes(bt.out, bytes);
    err << "baseline-train: " << mode.Name() << ", " << data.size()
        << " instances\n";
    err << Sha256Hex(bytes) << "  " << bt.out << "\n";
    return kExitOk;
  }

  if (baseline_predict->parsed()) {
    const BaselineModel model = BaselineModel::Load(bp.model);
    if (!bp.in.empty()) {
      const auto data = ReadDataset(bp.in);
      Emit(bp.out, SerializePredictions(PredictBaseline(model, data)), out,
           err);
      return kExitOk;
    }
    if (bp.manifest.empty()) {
      throw ValidationError("baseline-predict needs --in or --manifest");
    }
    if (bp.outdir.empty()) {
      throw ValidationError("--manifest requires --outdir");
    }
    const SuiteManifest manifest = ReadManifest(bp.manifest);
    std::vector<std::pair<std::string, std::vector<Instance>>> jobs;
    jobs.emplace_back(std::string(kOriginalKey),
                      ResolveGold(manifest, bp.manifest, bp.gold));
    for (const SuiteEntry& entry : manifest.entries) {
      jobs.emplace_back(EntryKey(entry),
                        AsInstances(ReadEntry(manifest, bp.manifest, entry)));
    }
    std::error_code ec;
    fs::create_directories(bp.outdir, ec);
    if (ec) throw IoError("cannot create " + bp.outdir + ": " + ec.message());
    for (const auto& [key, data] : jobs) {
      const fs::path path = fs::path(bp.outdir) / (key + ".jsonl");
      if (!bp.force && fs::exists(path)) {
        throw IoError("refusing to overwrite " + path.string() +
                      " (use --force)");
      }
      const std::string content =
          SerializePredictions(PredictBaseline(model, data));
      WriteFileBytes(path, content);
      err << Sha256Hex(content) << "  " << path.string() << "\n";
    }
    return kExitOk;
  }

  if (eval->parsed()) {
    ReadOptions read;
    read.require_label = true;
    const auto gold = ReadDataset(ev.gold, read);
    const PredictionSet pred = ReadPredictions(ev.pred);
    out << FormatDouble(ScorePredictions(gold, pred)) << "\n";
    return kExitOk;
  }

  if (report->parsed()) {
    const SuiteManifest manifest = ReadManifest(rp.manifest);
    const auto gold = ResolveGold(manifest, rp.manifest, rp.gold);
    std::vector<RobustnessReport> reports;
    for (const std::string& spec : rp.models) {
      const std::size_t eq = spec.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ValidationError("--model expects NAME=DIR, got '" + spec + "'");
      }
      const std::string name = spec.substr(0, eq);
      const fs::path dir = spec.substr(eq + 1);
      if (!fs::is_directory(dir)) {
        throw IoError("prediction directory not found: " + dir.string());
      }
      std::map<std::string, PredictionSet> predictions;
      std::vector<std::string> keys = {std::string(kOriginalKey)};
      for (const SuiteEntry& entry : manifest.entries) {
        keys.push_back(EntryKey(entry));
      }
      for (const std::string& key : keys) {
        const fs::path path = dir / (key + ".jsonl");
        if (fs::exists(path)) predictions[key] = ReadPredictions(path);
      }
      reports.push_back(BuildReport(manifest, gold, predictions, name));
    }
    for (const std::string& value : rp.extras) {
      const ExtraSpec extra = ParseExtra(value);
      const auto it = std::find_if(
          reports.begin(), reports.end(),
          [&](const RobustnessReport& r) { return r.model == extra.model; });
      if (it == reports.end()) {
        throw ValidationError("--extra names unknown model '" + extra.model +
                              "'");
      }
      ReadOptions read;
      read.require_label = true;
      AddExternalResult(&*it, extra.name, ReadDataset(extra.gold, read),
                        ReadPredictions(extra.pred));
    }
    Emit(rp.out, ReportsToJson(reports), out, err);
    if (!rp.table_csv.empty()) {
      Emit(rp.table_csv, ReportsToTableCsv(reports), out, err);
    }
    if (!rp.figure_csv.empty()) {
      Emit(rp.figure_csv, ReportsToFigureCsv(reports), out, err);
    }
    return kExitOk;
  }
  return kExitValidation;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Word camouflage toolkit: adversarial datasets and robustness "
               "evaluation",
               "camo"};
  try {
    return Dispatch(app, args, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int Main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace camo::cli
