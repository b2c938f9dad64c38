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

#include "camo/eval.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_map>

#include "camo/checksum.h"
#include "camo/errors.h"
#include "camo/utf8.h"
#include "json.hpp"

namespace camo {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<int, Version>, 6> kColumns = {{
    {1, Version::kV1},
    {1, Version::kV2},
    {2, Version::kV1},
    {2, Version::kV2},
    {3, Version::kV1},
    {3, Version::kV2},
}};

std::string ColumnName(int level, Version version) {
  return std::to_string(level) + "." +
         (version == Version::kV1 ? "1" : "2");
}

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s = buf;
  if (s == "-0.0" || s == "-0.0000") s.erase(0, 1);
  return s;
}

double RoundTo(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

std::optional<double> Mean(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

Json OptionalNumber(const std::optional<double>& v, int decimals) {
  return v ? Json(RoundTo(*v, decimals)) : Json(nullptr);
}

}  // namespace

double F1Macro(const std::vector<Label>& gold, const std::vector<Label>& pred) {
  if (gold.empty()) throw ValidationError("F1 of an empty label set");
  if (gold.size() != pred.size()) {
    throw ValidationError("gold and predicted label counts differ");
  }
  const std::set<Label> classes(gold.begin(), gold.end());
  double total = 0.0;
  for (const Label& c : classes) {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      const bool g = gold[i] == c;
      const bool p = pred[i] == c;
      tp += g && p;
      fp += !g && p;
      fn += g && !p;
    }
    if (tp > 0) {
      total += 2.0 * static_cast<double>(tp) /
               static_cast<double>(2 * tp + fp + fn);
    }
  }
  return total / static_cast<double>(classes.size());
}

std::optional<double> PerformanceReduction(double f1_original,
                                           double f1_variant) {
  if (!(f1_original > 0.0)) return std::nullopt;
  return (f1_original - f1_variant) / f1_original * 100.0;
}

PredictionSet ParsePredictions(std::string_view content,
                               std::string_view source_name) {
  PredictionSet out;
  out.source = std::string(source_name);
  // Prediction lines have no text field; parse them directly.
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::set<std::string> ids;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    ++line_no;
    const std::string_view line = TrimAscii(content.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    Json j;
    try {
      ValidateUtf8(line);
      j = Json::parse(line);
    } catch (const std::exception& e) {
      throw ParseError(out.source, line_no, e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j.contains("label")) {
      throw ParseError(out.source, line_no, "expected {\"id\", \"label\"}");
    }
    std::string id;
    if (j["id"].is_string()) {
      id = j["id"].get<std::string>();
    } else if (j["id"].is_number_integer()) {
      id = std::to_string(j["id"].get<std::int64_t>());
    } else {
      throw ParseError(out.source, line_no, "bad id");
    }
    Label label;
    if (j["label"].is_number_integer()) {
      label = j["label"].get<std::int64_t>();
    } else if (j["label"].is_string()) {
      label = j["label"].get<std::string>();
    } else {
      throw ParseError(out.source, line_no, "bad label");
    }
    if (!ids.insert(id).second) {
      throw ParseError(out.source, line_no, "duplicate id '" + id + "'");
    }
    out.predictions.emplace_back(std::move(id), std::move(label));
  }
  return out;
}

PredictionSet ReadPredictions(const std::filesystem::path& path) {
  return ParsePredictions(ReadFileBytes(path), path.string());
}

std::string SerializePredictions(const PredictionSet& predictions) {
  std::string out;
  for (const auto& [id, label] : predictions.predictions) {
    Json j;
    j["id"] = id;
    std::visit([&](const auto& v) { j["label"] = v; }, label);
    out += j.dump();
    out += '\n';
  }
  return out;
}

double ScorePredictions(const std::vector<Instance>& gold,
                        const PredictionSet& predictions) {
  std::unordered_map<std::string, const Label*> by_id;
  for (const auto& [id, label] : predictions.predictions) {
    by_id.emplace(id, &label);
  }
  if (by_id.size() != gold.size()) {
    throw ValidationError(predictions.source + ": " +
                          std::to_string(by_id.size()) +
                          " predictions for " + std::to_string(gold.size()) +
                          " gold instances");
  }
  std::vector<Label> g;
  std::vector<Label> p;
  g.reserve(gold.size());
  p.reserve(gold.size());
  for (const Instance& instance : gold) {
    if (!instance.label) {
      throw ValidationError("gold instance '" + instance.id + "' has no label");
    }
    const auto it = by_id.find(instance.id);
    if (it == by_id.end()) {
      throw ValidationError(predictions.source + ": no prediction for id '" +
                            instance.id + "'");
    }
    g.push_back(*instance.label);
    p.push_back(*it->second);
  }
  return F1Macro(g, p);
}

const VariantResult* RobustnessReport::Find(int level, Version version,
                                            int percent) const {
  for (const VariantResult& v : variants) {
    if (v.level == level && v.version == version && v.percent == percent) {
      return &v;
    }
  }
  return nullptr;
}

std::optional<double> RobustnessReport::TableReduction(int level,
                                                       Version version) const {
  const VariantResult* v = Find(level, version, 100);
  if (v == nullptr || !v->present) return std::nullopt;
  return v->reduction;
}

std::optional<double> RobustnessReport::TableAverage() const {
  std::vector<double> values;
  for (const auto& [level, version] : kColumns) {
    if (const auto r = TableReduction(level, version)) values.push_back(*r);
  }
  return Mean(values);
}

std::optional<double> RobustnessReport::PercentMean(int level,
                                                    Version version) const {
  std::vector<double> values;
  for (const VariantResult& v : variants) {
    if (v.level == level && v.version == version && v.present && v.reduction) {
      values.push_back(*v.reduction);
    }
  }
  return Mean(values);
}

std::optional<double> RobustnessReport::OverallMean() const {
  std::vector<double> values;
  for (const VariantResult& v : variants) {
    if (v.present && v.reduction) values.push_back(*v.reduction);
  }
  return Mean(values);
}

RobustnessReport BuildReport(
    const SuiteManifest& manifest, const std::vector<Instance>& gold,
    const std::map<std::string, PredictionSet>& predictions,
    std::string model_name) {
  for (const auto& [key, unused] : predictions) {
    if (key != kOriginalKey && manifest.Find(key) == nullptr) {
      throw ValidationError("predictions for unknown manifest entry '" + key +
                            "'");
    }
  }
  const auto original = predictions.find(std::string(kOriginalKey));
  if (original == predictions.end()) {
    throw ValidationError("predictions for the original test set are required");
  }

  RobustnessReport report;
  report.model = std::move(model_name);
  report.original_f1 = ScorePredictions(gold, original->second);
  std::set<Label> predicted;
  for (const auto& [id, label] : original->second.predictions) {
    predicted.insert(label);
  }
  std::set<Label> gold_classes;
  for (const Instance& instance : gold) gold_classes.insert(*instance.label);
  report.collapsed = predicted.size() < 2 && gold_classes.size() >= 2;

  for (const SuiteEntry& entry : manifest.entries) {
    VariantResult v;
    v.key = EntryKey(entry);
    v.level = entry.level;
    v.version = entry.version;
    v.percent = entry.percent;
    const auto it = predictions.find(v.key);
    if (it != predictions.end()) {
      v.present = true;
      v.f1 = ScorePredictions(gold, it->second);
      v.absolute_delta = report.original_f1 - v.f1;
      if (!report.collapsed) {
        v.reduction = PerformanceReduction(report.original_f1, v.f1);
      }
    }
    report.variants.push_back(std::move(v));
  }
  return report;
}

void AddExternalResult(RobustnessReport* report, std::string name,
                       const std::vector<Instance>& gold,
                       const PredictionSet& predictions) {
  ExternalResult r;
  r.name = std::move(name);
  r.f1 = ScorePredictions(gold, predictions);
  r.absolute_delta = report->original_f1 - r.f1;
  if (!report->collapsed) {
    r.reduction = PerformanceReduction(report->original_f1, r.f1);
  }
  report->external.push_back(std::move(r));
}

std::string ReportsToJson(const std::vector<RobustnessReport>& reports) {
  Json root;
  root["format"] = "camo-report/1";
  Json models = Json::array();
  for (const RobustnessReport& r : reports) {
    Json m;
    m["model"] = r.model;
    m["original_f1"] = r.original_f1;
    m["collapsed"] = r.collapsed;
    Json variants = Json::array();
    for (const VariantResult& v : r.variants) {
      Json j;
      j["key"] = v.key;
      j["level"] = v.level;
      j["version"] = std::string(VersionName(v.version));
      j["percent"] = v.percent;
      j["present"] = v.present;
      if (v.present) {
        j["f1"] = v.f1;
        j["reduction"] = OptionalNumber(v.reduction, 1);
        j["reduction_raw"] = v.reduction ? Json(*v.reduction) : Json(nullptr);
        j["absolute_delta"] = v.absolute_delta;
      }
      variants.push_back(std::move(j));
    }
    m["variants"] = std::move(variants);

    Json table;
    for (const auto& [level, version] : kColumns) {
      table[ColumnName(level, version)] =
          OptionalNumber(r.TableReduction(level, version), 1);
    }
    table["Avg"] = OptionalNumber(r.TableAverage(), 1);
    m["table_view"] = std::move(table);

    Json figure;
    for (const auto& [level, version] : kColumns) {
      Json curve = Json::array();
      for (const int p : kSuitePercents) {
        const VariantResult* v = r.Find(level, version, p);
        Json point;
        point["percent"] = p;
        point["reduction"] = (v != nullptr && v->present)
                                 ? OptionalNumber(v->reduction, 1)
                                 : Json("absent");
        curve.push_back(std::move(point));
      }
      figure[ColumnName(level, version)] = std::move(curve);
    }
    m["figure_view"] = std::move(figure);

    Json averages;
    for (const auto& [level, version] : kColumns) {
      averages[ColumnName(level, version)] =
          OptionalNumber(r.PercentMean(level, version), 1);
    }
    averages["overall"] = OptionalNumber(r.OverallMean(), 1);
    m["percent_averages"] = std::move(averages);

    Json external = Json::array();
    for (const ExternalResult& e : r.external) {
      Json j;
      j["name"] = e.name;
      j["f1"] = e.f1;
      j["reduction"] = OptionalNumber(e.reduction, 1);
      j["absolute_delta"] = e.absolute_delta;
      external.push_back(std::move(j));
    }
    m["external"] = std::move(external);
    models.push_back(std::move(m));
  }
  root["models"] = std::move(models);
  return root.dump(2) + "\n";
}

std::string ReportsToTableCsv(const std::vector<RobustnessReport>& reports) {
  std::string out = "model,original_f1";
  for (const auto& [level, version] : kColumns) {
    out += "," + ColumnName(level, version);
  }
  out += ",Avg";
  for (const auto& [level, version] : kColumns) {
    out += ",abs_" + ColumnName(level, version);
  }
  out += ",abs_Avg\n";

  for (const RobustnessReport& r : reports) {
    out += r.model + "," + Fixed(r.original_f1, 4);
    const auto cell = [](const std::optional<double>& v, bool present) {
      if (!present) return std::string("absent");
      return v ? Fixed(*v, 1) : std::string("N/A");
    };
    for (const auto& [level, version] : kColumns) {
      const VariantResult* v = r.Find(level, version, 100);
      const bool present = v != nullptr && v->present;
      out += "," + cell(present ? v->reduction : std::nullopt, present);
    }
    out += "," + cell(r.TableAverage(), true);
    std::vector<double> deltas;
    for (const auto& [level, version] : kColumns) {
      const VariantResult* v = r.Find(level, version, 100);
      if (v != nullptr && v->present) {
        out += "," + Fixed(v->absolute_delta, 4);
        deltas.push_back(v->absolute_delta);
      } else {
        out += ",absent";
      }
    }
    const auto mean = Mean(deltas);
    out += "," + (mean ? Fixed(*mean, 4) : std::string("absent")) + "\n";
  }
  return out;
}

std::string ReportsToFigureCsv(const std::vector<RobustnessReport>& reports) {
  std::string out = "model,level,version,percent,f1,reduction\n";
  for (const RobustnessReport& r : reports) {
    for (const VariantResult& v : r.variants) {
      out += r.model + "," + std::to_string(v.level) + "," +
             std::string(VersionName(v.version)) + "," +
             std::to_string(v.percent) + ",";
      if (!v.present) {
        out += "absent,absent\n";
        continue;
      }
      out += Fixed(v.f1, 4) + "," +
             (v.reduction ? Fixed(*v.reduction, 1) : std::string("N/A")) +
             "\n";
    }
  }
  return out;
}

}  // namespace camo
