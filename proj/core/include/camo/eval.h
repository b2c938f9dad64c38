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

// Scoring and robustness reports.

#ifndef CAMO_EVAL_H_
#define CAMO_EVAL_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "camo/dataset.h"
#include "camo/pipeline.h"

namespace camo {

// Unweighted mean of per-class F1 over the classes present in `gold`.
// A class with no true positives scores 0 (including 0/0 cases). Throws
// ValidationError on empty or unequal inputs.
double F1Macro(const std::vector<Label>& gold, const std::vector<Label>& pred);

// Relative drop in percent: (orig - variant) / orig * 100. Negative when the
// variant scores higher; nullopt when orig <= 0.
std::optional<double> PerformanceReduction(double f1_original,
                                           double f1_variant);

// {"id": "...", "label": ...} per line.
struct PredictionSet {
  std::string source;
  std::vector<std::pair<std::string, Label>> predictions;
};

PredictionSet ParsePredictions(std::string_view content,
                               std::string_view source_name = "<predictions>");
PredictionSet ReadPredictions(const std::filesystem::path& path);
std::string SerializePredictions(const PredictionSet& predictions);

// F1Macro after aligning predictions to `gold` by id. The id sets must
// match exactly; gold instances must be labelled.
double ScorePredictions(const std::vector<Instance>& gold,
                        const PredictionSet& predictions);

struct VariantResult {
  std::string key;
  int level = 1;
  Version version = Version::kV1;
  int percent = 100;
  bool present = false;
  double f1 = 0.0;
  std::optional<double> reduction;  // percent, relative
  double absolute_delta = 0.0;      // F1 points, original - variant
};

struct ExternalResult {
  std::string name;
  double f1 = 0.0;
  std::optional<double> reduction;
  double absolute_delta = 0.0;
};

struct RobustnessReport {
  std::string model;
  double original_f1 = 0.0;
  // The model predicts a single class on the original set; reductions are
  // then reported as N/A.
  bool collapsed = false;
  std::vector<VariantResult> variants;  // manifest order
  std::vector<ExternalResult> external;

  const VariantResult* Find(int level, Version version, int percent) const;
  // Reduction on the 100% file of one (level, version).
  std::optional<double> TableReduction(int level, Version version) const;
  // Mean of the six TableReduction values that are defined.
  std::optional<double> TableAverage() const;
  // Mean over the five percentages of one (level, version).
  std::optional<double> PercentMean(int level, Version version) const;
  // Mean over every present variant.
  std::optional<double> OverallMean() const;
};

// Builds the report from predictions keyed by manifest entry key (see
// EntryKey) plus kOriginalKey. Variants without predictions are marked
// absent. Throws ValidationError for keys the manifest does not list or a
// missing original.
RobustnessReport BuildReport(
    const SuiteManifest& manifest, const std::vector<Instance>& gold,
    const std::map<std::string, PredictionSet>& predictions,
    std::string model_name = "model");

// Adds a row for an externally produced camouflaged test file.
void AddExternalResult(RobustnessReport* report, std::string name,
                       const std::vector<Instance>& gold,
                       const PredictionSet& predictions);

// One JSON document holding every report.
std::string ReportsToJson(const std::vector<RobustnessReport>& reports);

// Table view: model, original F1, the six 100% reductions (1.1 .. 3.2),
// their average, then the same columns as absolute F1-point deltas.
std::string ReportsToTableCsv(const std::vector<RobustnessReport>& reports);

// Figure view: one row per (model, level, version, percent).
std::string ReportsToFigureCsv(const std::vector<RobustnessReport>& reports);

}  // namespace camo

#endif  // CAMO_EVAL_H_
