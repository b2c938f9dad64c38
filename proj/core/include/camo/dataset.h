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

// Line-delimited dataset records.
//
//   {"id": "17", "text": "...", "label": 1}
//
// Camouflaged outputs append
//
//   "camo": {"applied": true, "level": 2, "version": "v1",
//            "mods": [{"start": 4, "end": 9, "orig": "fake",
//                      "repl": "f-a-k-e", "method": "punct_camo"}]}
//
// with start/end as byte offsets into the original text.

#ifndef CAMO_DATASET_H_
#define CAMO_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "camo/engines.h"
#include "camo/level_spec.h"
#include "camo/rng.h"

namespace camo {

using Label = std::variant<std::int64_t, std::string>;

std::string LabelToString(const Label& label);

struct Instance {
  std::string id;
  std::string text;
  std::optional<Label> label;

  bool operator==(const Instance&) const = default;
};

struct IngestStats {
  std::size_t records = 0;
  std::size_t dropped_short = 0;
  std::size_t dropped_duplicate = 0;
};

struct ReadOptions {
  // Drop texts under three characters after trimming and exact duplicate
  // texts (first occurrence wins). Case is never altered.
  bool preprocess = true;
  bool require_label = false;
};

// Missing ids are assigned from the 0-based record number. Throws
// ParseError (with line number) on malformed lines, duplicate ids or
// invalid UTF-8.
std::vector<Instance> ParseDataset(std::string_view content,
                                   std::string_view source_name = "<dataset>",
                                   const ReadOptions& options = {},
                                   IngestStats* stats = nullptr);
std::vector<Instance> ReadDataset(const std::filesystem::path& path,
                                  const ReadOptions& options = {},
                                  IngestStats* stats = nullptr);

std::string SerializeDataset(const std::vector<Instance>& instances);
void WriteDataset(const std::filesystem::path& path,
                  const std::vector<Instance>& instances);

struct CamouflagedInstance {
  Instance base;
  // The camouflaged text; equals base.text when nothing was applied.
  std::string text;
  bool camo_applied = false;
  std::optional<int> level;
  std::optional<Version> version;
  // Ascending by start.
  std::vector<ModificationRecord> modifications;
  SeedPath seed_path;
};

// An unmodified copy of `instance`.
CamouflagedInstance Passthrough(const Instance& instance);

std::string SerializeCamouflaged(const CamouflagedInstance& ci);
std::string SerializeCamouflagedDataset(
    const std::vector<CamouflagedInstance>& instances);

// Reads a camouflaged file back. base.text is not stored in the file and is
// reconstructed from the records, so a bad record raises IntegrityError.
std::vector<CamouflagedInstance> ParseCamouflagedDataset(
    std::string_view content, std::string_view source_name = "<dataset>");
std::vector<CamouflagedInstance> ReadCamouflagedDataset(
    const std::filesystem::path& path);

// Plain instances (id, camouflaged text, label) for prediction.
std::vector<Instance> AsInstances(
    const std::vector<CamouflagedInstance>& instances);

}  // namespace camo

#endif  // CAMO_DATASET_H_
