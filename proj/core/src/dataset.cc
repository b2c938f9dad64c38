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

#include "camo/dataset.h"

#include <unordered_set>

#include "camo/checksum.h"
#include "camo/errors.h"
#include "camo/pipeline.h"
#include "camo/utf8.h"
#include "json.hpp"

namespace camo {
namespace {

using Json = nlohmann::ordered_json;

template <typename Fn>
void ForEachLine(std::string_view content, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    ++line_no;
    std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (TrimAscii(line).empty()) continue;
    fn(line, line_no);
  }
}

Json ParseLine(std::string_view line, const std::string& src,
               std::size_t line_no) {
  try {
    ValidateUtf8(line);
  } catch (const DecodeError& e) {
    throw ParseError(src, line_no, e.what());
  }
  Json record;
  try {
    record = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(src, line_no, std::string("malformed JSON: ") + e.what());
  }
  if (!record.is_object()) {
    throw ParseError(src, line_no, "record must be a JSON object");
  }
  return record;
}

std::optional<Label> ParseLabel(const Json& record, const std::string& src,
                                std::size_t line_no) {
  const auto it = record.find("label");
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (it->is_number_integer()) return Label(it->get<std::int64_t>());
  if (it->is_string()) return Label(it->get<std::string>());
  throw ParseError(src, line_no, "label must be a string or an integer");
}

std::string ParseId(const Json& record, std::size_t record_no,
                    const std::string& src, std::size_t line_no) {
  const auto it = record.find("id");
  if (it == record.end() || it->is_null()) return std::to_string(record_no);
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<std::int64_t>());
  throw ParseError(src, line_no, "id must be a string or an integer");
}

Json BaseJson(const Instance& instance, const std::string& text) {
  Json j;
  j["id"] = instance.id;
  j["text"] = text;
  if (instance.label) {
    std::visit([&](const auto& v) { j["label"] = v; }, *instance.label);
  }
  return j;
}

}  // namespace

std::string LabelToString(const Label& label) {
  if (const auto* i = std::get_if<std::int64_t>(&label)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(label);
}

std::vector<Instance> ParseDataset(std::string_view content,
                                   std::string_view source_name,
                                   const ReadOptions& options,
                                   IngestStats* stats) {
  const std::string src(source_name);
  std::vector<Instance> out;
  std::unordered_set<std::string> ids;
  std::unordered_set<std::string> texts;
  IngestStats local;
  std::size_t record_no = 0;

  ForEachLine(content, [&](std::string_view line, std::size_t line_no) {
    const Json record = ParseLine(line, src, line_no);
    const auto text_it = record.find("text");
    if (text_it == record.end() || !text_it->is_string()) {
      throw ParseError(src, line_no, "missing string field 'text'");
    }
    Instance instance;
    instance.id = ParseId(record, record_no++, src, line_no);
    instance.text = text_it->get<std::string>();
    instance.label = ParseLabel(record, src, line_no);
    if (options.require_label && !instance.label) {
      throw ParseError(src, line_no, "missing label");
    }
    ++local.records;
    if (options.preprocess) {
      if (CodePointCount(TrimAscii(instance.text)) < 3) {
        ++local.dropped_short;
        return;
      }
      if (!texts.insert(instance.text).second) {
        ++local.dropped_duplicate;
        return;
      }
    }
    if (!ids.insert(instance.id).second) {
      throw ParseError(src, line_no, "duplicate id '" + instance.id + "'");
    }
    out.push_back(std::move(instance));
  });
  if (stats != nullptr) *stats = local;
  return out;
}

std::vector<Instance> ReadDataset(const std::filesystem::path& path,
                                  const ReadOptions& options,
                                  IngestStats* stats) {
  return ParseDataset(ReadFileBytes(path), path.string(), options, stats);
}

std::string SerializeDataset(const std::vector<Instance>& instances) {
  std::string out;
  for (const Instance& instance : instances) {
    out += BaseJson(instance, instance.text).dump();
    out += '\n';
  }
  return out;
}

void WriteDataset(const std::filesystem::path& path,
                  const std::vector<Instance>& instances) {
  WriteFileBytes(path, SerializeDataset(instances));
}

CamouflagedInstance Passthrough(const Instance& instance) {
  CamouflagedInstance ci;
  ci.base = instance;
  ci.text = instance.text;
  return ci;
}

std::string SerializeCamouflaged(const CamouflagedInstance& ci) {
  Json j = BaseJson(ci.base, ci.text);
  Json camo;
  camo["applied"] = ci.camo_applied;
  camo["level"] = ci.level ? Json(*ci.level) : Json(nullptr);
  camo["version"] =
      ci.version ? Json(std::string(VersionName(*ci.version))) : Json(nullptr);
  Json mods = Json::array();
  for (const ModificationRecord& m : ci.modifications) {
    Json mod;
    mod["start"] = m.start;
    mod["end"] = m.end;
    mod["orig"] = m.original;
    mod["repl"] = m.replacement;
    mod["method"] = std::string(MethodName(m.method));
    mods.push_back(std::move(mod));
  }
  camo["mods"] = std::move(mods);
  j["camo"] = std::move(camo);
  return j.dump();
}

std::string SerializeCamouflagedDataset(
    const std::vector<CamouflagedInstance>& instances) {
  std::string out;
  for (const CamouflagedInstance& ci : instances) {
    out += SerializeCamouflaged(ci);
    out += '\n';
  }
  return out;
}

std::vector<CamouflagedInstance> ParseCamouflagedDataset(
    std::string_view content, std::string_view source_name) {
  const std::string src(source_name);
  std::vector<CamouflagedInstance> out;
  std::unordered_set<std::string> ids;
  std::size_t record_no = 0;

  ForEachLine(content, [&](std::string_view line, std::size_t line_no) {
    const Json record = ParseLine(line, src, line_no);
    CamouflagedInstance ci;
    ci.base.id = ParseId(record, record_no++, src, line_no);
    ci.base.label = ParseLabel(record, src, line_no);
    if (!ids.insert(ci.base.id).second) {
      throw ParseError(src, line_no, "duplicate id '" + ci.base.id + "'");
    }
    try {
      ci.text = record.at("text").get<std::string>();
      const auto camo_it = record.find("camo");
      if (camo_it != record.end()) {
        const Json& camo = *camo_it;
        ci.camo_applied = camo.at("applied").get<bool>();
        if (!camo.at("level").is_null()) ci.level = camo["level"].get<int>();
        if (!camo.at("version").is_null()) {
          ci.version = ParseVersion(camo["version"].get<std::string>());
        }
        for (const Json& mod : camo.at("mods")) {
          ModificationRecord m;
          m.instance_id = ci.base.id;
          m.start = mod.at("start").get<std::size_t>();
          m.end = mod.at("end").get<std::size_t>();
          m.original = mod.at("orig").get<std::string>();
          m.replacement = mod.at("repl").get<std::string>();
          m.method = ParseMethod(mod.at("method").get<std::string>());
          m.level = ci.level.value_or(0);
          m.version = ci.version.value_or(Version::kV1);
          ci.modifications.push_back(std::move(m));
        }
      }
    } catch (const Json::exception& e) {
      throw ParseError(src, line_no, std::string("bad record: ") + e.what());
    } catch (const ConfigError& e) {
      throw ParseError(src, line_no, e.what());
    }
    if (ci.camo_applied != !ci.modifications.empty()) {
      throw IntegrityError("instance '" + ci.base.id +
                           "': applied flag disagrees with its records");
    }
    ci.base.text = Revert(ci);
    out.push_back(std::move(ci));
  });
  return out;
}

std::vector<CamouflagedInstance> ReadCamouflagedDataset(
    const std::filesystem::path& path) {
  return ParseCamouflagedDataset(ReadFileBytes(path), path.string());
}

std::vector<Instance> AsInstances(
    const std::vector<CamouflagedInstance>& instances) {
  std::vector<Instance> out;
  out.reserve(instances.size());
  for (const CamouflagedInstance& ci : instances) {
    out.push_back({ci.base.id, ci.text, ci.base.label});
  }
  return out;
}

}  // namespace camo
