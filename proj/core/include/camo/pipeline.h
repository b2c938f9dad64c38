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

// Instance-level camouflage, evaluation suites and adversarial training
// sets.
//
// Seed paths (all under the caller's master seed, epoch 0 unless noted):
//
//   suite/L<l>/v<v>/p<p>/select        instance order for one suite file
//   suite/L<l>/v<v>/p<p>/<id>          transforms of one instance
//   static/select, static/<id>         static training set
//   dynamic/select, dynamic/<id>       dynamic view, epoch = training epoch

#ifndef CAMO_PIPELINE_H_
#define CAMO_PIPELINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "camo/dataset.h"
#include "camo/glyph_table.h"
#include "camo/level_spec.h"
#include "camo/rng.h"
#include "camo/text_analysis.h"

namespace camo {

// Everything a transform depends on besides the seed.
struct PipelineConfig {
  SpecSet specs = SpecSet::Canonical();
  GlyphBook glyphs = GlyphBook::Default();
  StopwordList stopwords = StopwordList::Default();
};

// Keywords are taken in rank order and camouflaged until
// TargetKeywordCount of them changed; keywords no configured method can
// alter are skipped. Records are spliced right to left so original offsets
// stay valid. The label is never touched.
CamouflagedInstance CamouflageInstance(const Instance& instance,
                                       const LevelSpec& spec,
                                       const GlyphBook& glyphs,
                                       const StopwordList& stopwords, Rng& rng,
                                       const SeedPath& seed_path = {});

// round_half_up(percent / 100 * n).
std::size_t SelectionCount(std::size_t n, int percent);

// Uniform sample without replacement of SelectionCount(n, percent) indices,
// ascending. The draws are a Fisher-Yates pass: for i = 0, 1, ...
// swap(i, i + UniformInt(n - i)).
std::vector<std::size_t> SelectInstances(std::size_t n, int percent, Rng& rng);

// Reconstructs the original text. Throws IntegrityError naming the instance
// when a record does not match the camouflaged text.
std::string Revert(const CamouflagedInstance& ci);

// Mean over camouflaged instances of records / content words.
double MeanCamouflagedWordFraction(
    const std::vector<CamouflagedInstance>& instances,
    const StopwordList& stopwords = StopwordList::Default());

// One fixed (level, version, percent) variant. Instances are visited in the
// selection order and camouflaged until SelectionCount of them changed, so
// the count is exact whenever enough instances carry a camouflageable
// keyword. Everything else is copied through untouched.
std::vector<CamouflagedInstance> CamouflageDataset(
    const std::vector<Instance>& instances, int level, Version version,
    int percent, std::uint64_t master_seed, const PipelineConfig& config);

// Training-set camouflage with a uniformly drawn level and version per
// selected instance. `domain` is "static" or "dynamic".
std::vector<CamouflagedInstance> MixedCamouflage(
    const std::vector<Instance>& instances, int percent,
    std::uint64_t master_seed, std::string_view domain, std::uint64_t epoch,
    const PipelineConfig& config);

std::vector<CamouflagedInstance> StaticTrainingSet(
    const std::vector<Instance>& instances, int percent,
    std::uint64_t master_seed, const PipelineConfig& config = {});

std::vector<CamouflagedInstance> DynamicView(
    const std::vector<Instance>& instances, int percent,
    std::uint64_t master_seed, std::uint64_t epoch,
    const PipelineConfig& config = {});

// Epoch-indexed dynamic camouflage. View(e) is a pure function of the
// constructor arguments and e; iteration starts at epoch 0 and never ends.
class DynamicEpochs {
 public:
  DynamicEpochs(std::vector<Instance> instances, int percent,
                std::uint64_t master_seed, PipelineConfig config = {});

  std::vector<CamouflagedInstance> View(std::uint64_t epoch) const;

  class iterator {
   public:
    using value_type = std::vector<CamouflagedInstance>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const DynamicEpochs* owner, std::uint64_t epoch)
        : owner_(owner), epoch_(epoch) {}

    value_type operator*() const { return owner_->View(epoch_); }
    iterator& operator++() {
      ++epoch_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++epoch_;
      return copy;
    }
    std::uint64_t epoch() const { return epoch_; }
    bool operator==(const iterator&) const = default;
    bool operator==(std::unreachable_sentinel_t) const { return false; }

   private:
    const DynamicEpochs* owner_ = nullptr;
    std::uint64_t epoch_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  std::unreachable_sentinel_t end() const { return {}; }

 private:
  std::vector<Instance> instances_;
  int percent_;
  std::uint64_t master_seed_;
  PipelineConfig config_;
};

inline constexpr std::array<int, 5> kSuitePercents = {10, 25, 50, 75, 100};
inline constexpr int kSuiteTests = 31;

struct SuiteEntry {
  int level = 1;
  Version version = Version::kV1;
  int percent = 100;
  std::string path;  // relative to the manifest
  std::string checksum;
  std::size_t instances = 0;
  std::size_t camouflaged = 0;
  bool canonical = true;
};

struct SuiteManifest {
  std::string source_path;
  std::string source_checksum;
  std::size_t source_instances = 0;
  std::uint64_t master_seed = 0;
  std::vector<SuiteEntry> entries;

  const SuiteEntry* Find(std::string_view key) const;
};

// "L2.v1.p50"
std::string EntryKey(int level, Version version, int percent);
std::string EntryKey(const SuiteEntry& entry);
// "L2_v1_p50.jsonl"
std::string EntryFileName(int level, Version version, int percent);

inline constexpr std::string_view kManifestFileName = "manifest.json";
inline constexpr std::string_view kOriginalKey = "original";

std::string SerializeManifest(const SuiteManifest& manifest);
SuiteManifest ParseManifest(std::string_view content,
                            std::string_view source_name = "<manifest>");
SuiteManifest ReadManifest(const std::filesystem::path& path);

struct SuiteOptions {
  bool force = false;
  unsigned jobs = 1;
};

// Writes the 30 variant files, then the manifest. Output is independent of
// `jobs`. Refuses (IoError) to overwrite existing outputs unless forced.
SuiteManifest GenerateSuite(const std::vector<Instance>& test,
                            const std::string& source_path,
                            const std::string& source_checksum,
                            std::uint64_t master_seed,
                            const std::filesystem::path& outdir,
                            const PipelineConfig& config = {},
                            const SuiteOptions& options = {});

}  // namespace camo

#endif  // CAMO_PIPELINE_H_
