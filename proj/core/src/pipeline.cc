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

#include "camo/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "camo/checksum.h"
#include "camo/engines.h"
#include "camo/errors.h"
#include "json.hpp"

namespace camo {
namespace {

using Json = nlohmann::ordered_json;

std::string VariantPrefix(int level, Version version, int percent) {
  return "suite/L" + std::to_string(level) + "/" +
         std::string(VersionName(version)) + "/p" + std::to_string(percent);
}

void CheckPercent(int percent) {
  if (percent < 0 || percent > 100) {
    throw ValidationError("percent must lie in [0, 100], got " +
                          std::to_string(percent));
  }
}

// Shuffled visiting order; its first SelectionCount entries are exactly
// what SelectInstances returns for the same generator state.
std::vector<std::size_t> SelectionOrder(std::size_t n, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + rng.UniformInt(n - i);
    std::swap(order[i], order[j]);
  }
  return order;
}

// Camouflages instances in `order` until `target` of them changed.
// `transform` maps an index to its camouflaged form.
template <typename Transform>
std::vector<CamouflagedInstance> CamouflageSelected(
    const std::vector<Instance>& instances,
    const std::vector<std::size_t>& order, std::size_t target,
    Transform&& transform) {
  std::vector<CamouflagedInstance> out;
  out.reserve(instances.size());
  for (const Instance& instance : instances) out.push_back(Passthrough(instance));
  std::size_t done = 0;
  for (std::size_t k = 0; k < order.size() && done < target; ++k) {
    CamouflagedInstance ci = transform(order[k]);
    if (!ci.camo_applied) continue;
    out[order[k]] = std::move(ci);
    ++done;
  }
  return out;
}

}  // namespace

CamouflagedInstance CamouflageInstance(const Instance& instance,
                                       const LevelSpec& spec,
                                       const GlyphBook& glyphs,
                                       const StopwordList& stopwords, Rng& rng,
                                       const SeedPath& seed_path) {
  CamouflagedInstance ci = Passthrough(instance);
  ci.seed_path = seed_path;

  const std::vector<Token> tokens = Tokenize(instance.text);
  const std::size_t target = TargetKeywordCount(
      ContentWordCount(tokens, stopwords), spec.word_ratio, spec.max_top_n);
  if (target == 0) return ci;

  std::vector<ModificationRecord> records;
  for (const Keyword& kw : RankKeywords(tokens, stopwords)) {
    if (records.size() == target) break;
    auto record = CamouflageToken(tokens[kw.token_index], kw.token_index,
                                  instance.id, spec, glyphs, rng);
    if (record) records.push_back(std::move(*record));
  }
  if (records.empty()) return ci;

  std::sort(records.begin(), records.end(),
            [](const ModificationRecord& a, const ModificationRecord& b) {
              return a.start < b.start;
            });
  std::string text = instance.text;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    text.replace(it->start, it->end - it->start, it->replacement);
  }
  ci.text = std::move(text);
  ci.camo_applied = true;
  ci.level = spec.level;
  ci.version = spec.version;
  ci.modifications = std::move(records);
  return ci;
}

std::size_t SelectionCount(std::size_t n, int percent) {
  CheckPercent(percent);
  return (static_cast<std::size_t>(percent) * n + 50) / 100;
}

std::vector<std::size_t> SelectInstances(std::size_t n, int percent,
                                         Rng& rng) {
  const std::size_t k = SelectionCount(n, percent);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
    const std::size_t j = i + rng.UniformInt(n - i);
    std::swap(order[i], order[j]);
  }
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::string Revert(const CamouflagedInstance& ci) {
  const std::string& text = ci.text;
  std::string out;
  std::size_t cursor = 0;        // position in the camouflaged text
  std::size_t original_end = 0;  // end of the previous record, original
  long long delta = 0;           // camouflaged offset - original offset
  for (const ModificationRecord& m : ci.modifications) {
    const auto fail = [&](const std::string& why) {
      return IntegrityError("instance '" + ci.base.id + "': " + why);
    };
    if (m.end < m.start || m.end - m.start != m.original.size()) {
      throw fail("record span does not match its original text");
    }
    if (m.start < original_end) throw fail("records overlap or are unsorted");
    const long long camo_start = static_cast<long long>(m.start) + delta;
    if (camo_start < static_cast<long long>(cursor) ||
        static_cast<std::size_t>(camo_start) + m.replacement.size() >
            text.size() ||
        text.compare(static_cast<std::size_t>(camo_start),
                     m.replacement.size(), m.replacement) != 0) {
      throw fail("replacement '" + m.replacement + "' not found at offset " +
                 std::to_string(camo_start));
    }
    out.append(text, cursor, static_cast<std::size_t>(camo_start) - cursor);
    out += m.original;
    cursor = static_cast<std::size_t>(camo_start) + m.replacement.size();
    original_end = m.end;
    delta += static_cast<long long>(m.replacement.size()) -
             static_cast<long long>(m.original.size());
  }
  out.append(text, cursor, std::string::npos);
  return out;
}

double MeanCamouflagedWordFraction(
    const std::vector<CamouflagedInstance>& instances,
    const StopwordList& stopwords) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const CamouflagedInstance& ci : instances) {
    if (!ci.camo_applied) continue;
    const std::size_t words =
        ContentWordCount(Tokenize(ci.base.text), stopwords);
    if (words == 0) continue;
    sum += static_cast<double>(ci.modifications.size()) /
           static_cast<double>(words);
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::vector<CamouflagedInstance> CamouflageDataset(
    const std::vector<Instance>& instances, int level, Version version,
    int percent, std::uint64_t master_seed, const PipelineConfig& config) {
  const LevelSpec& spec = config.specs.Get(level, version);
  const std::string prefix = VariantPrefix(level, version, percent);
  Rng select = DeriveRng({master_seed, prefix + "/select", 0});
  const std::vector<std::size_t> order =
      SelectionOrder(instances.size(), select);
  return CamouflageSelected(
      instances, order, SelectionCount(instances.size(), percent),
      [&](std::size_t idx) {
        const SeedPath path{master_seed, prefix + "/" + instances[idx].id, 0};
        Rng rng = DeriveRng(path);
        return CamouflageInstance(instances[idx], spec, config.glyphs,
                                  config.stopwords, rng, path);
      });
}

std::vector<CamouflagedInstance> MixedCamouflage(
    const std::vector<Instance>& instances, int percent,
    std::uint64_t master_seed, std::string_view domain, std::uint64_t epoch,
    const PipelineConfig& config) {
  const std::string prefix(domain);
  Rng select = DeriveRng({master_seed, prefix + "/select", epoch});
  const std::vector<std::size_t> order =
      SelectionOrder(instances.size(), select);
  return CamouflageSelected(
      instances, order, SelectionCount(instances.size(), percent),
      [&](std::size_t idx) {
        const SeedPath path{master_seed, prefix + "/" + instances[idx].id,
                            epoch};
        Rng rng = DeriveRng(path);
        const int level = 1 + static_cast<int>(rng.UniformInt(3));
        const Version version = static_cast<Version>(rng.UniformInt(2));
        return CamouflageInstance(instances[idx],
                                  config.specs.Get(level, version),
                                  config.glyphs, config.stopwords, rng, path);
      });
}

std::vector<CamouflagedInstance> StaticTrainingSet(
    const std::vector<Instance>& instances, int percent,
    std::uint64_t master_seed, const PipelineConfig& config) {
  return MixedCamouflage(instances, percent, master_seed, "static", 0, config);
}

std::vector<CamouflagedInstance> DynamicView(
    const std::vector<Instance>& instances, int percent,
    std::uint64_t master_seed, std::uint64_t epoch,
    const PipelineConfig& config) {
  return MixedCamouflage(instances, percent, master_seed, "dynamic", epoch,
                         config);
}

DynamicEpochs::DynamicEpochs(std::vector<Instance> instances, int percent,
                             std::uint64_t master_seed, PipelineConfig config)
    : instances_(std::move(instances)),
      percent_(percent),
      master_seed_(master_seed),
      config_(std::move(config)) {
  CheckPercent(percent_);
}

std::vector<CamouflagedInstance> DynamicEpochs::View(
    std::uint64_t epoch) const {
  return DynamicView(instances_, percent_, master_seed_, epoch, config_);
}

std::string EntryKey(int level, Version version, int percent) {
  return "L" + std::to_string(level) + "." + std::string(VersionName(version)) +
         ".p" + std::to_string(percent);
}

std::string EntryKey(const SuiteEntry& entry) {
  return EntryKey(entry.level, entry.version, entry.percent);
}

std::string EntryFileName(int level, Version version, int percent) {
  return "L" + std::to_string(level) + "_" + std::string(VersionName(version)) +
         "_p" + std::to_string(percent) + ".jsonl";
}

const SuiteEntry* SuiteManifest::Find(std::string_view key) const {
  for (const SuiteEntry& e : entries) {
    if (EntryKey(e) == key) return &e;
  }
  return nullptr;
}

std::string SerializeManifest(const SuiteManifest& manifest) {
  Json j;
  j["format"] = "camo-suite/1";
  j["tests"] = kSuiteTests;
  j["master_seed"] = manifest.master_seed;
  Json original;
  original["key"] = std::string(kOriginalKey);
  original["path"] = manifest.source_path;
  original["checksum"] = manifest.source_checksum;
  original["instances"] = manifest.source_instances;
  j["original"] = std::move(original);
  Json entries = Json::array();
  for (const SuiteEntry& e : manifest.entries) {
    Json entry;
    entry["key"] = EntryKey(e);
    entry["level"] = e.level;
    entry["version"] = std::string(VersionName(e.version));
    entry["percent"] = e.percent;
    entry["path"] = e.path;
    entry["checksum"] = e.checksum;
    entry["instances"] = e.instances;
    entry["camouflaged"] = e.camouflaged;
    entry["canonical"] = e.canonical;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

SuiteManifest ParseManifest(std::string_view content,
                            std::string_view source_name) {
  const std::string src(source_name);
  SuiteManifest manifest;
  try {
    const Json j = Json::parse(content);
    manifest.master_seed = j.at("master_seed").get<std::uint64_t>();
    const Json& original = j.at("original");
    manifest.source_path = original.at("path").get<std::string>();
    manifest.source_checksum = original.at("checksum").get<std::string>();
    manifest.source_instances = original.at("instances").get<std::size_t>();
    for (const Json& e : j.at("entries")) {
      SuiteEntry entry;
      entry.level = e.at("level").get<int>();
      entry.version = ParseVersion(e.at("version").get<std::string>());
      entry.percent = e.at("percent").get<int>();
      entry.path = e.at("path").get<std::string>();
      entry.checksum = e.at("checksum").get<std::string>();
      entry.instances = e.at("instances").get<std::size_t>();
      entry.camouflaged = e.at("camouflaged").get<std::size_t>();
      entry.canonical = e.at("canonical").get<bool>();
      manifest.entries.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw ValidationError(src + ": bad manifest: " + e.what());
  }
  return manifest;
}

SuiteManifest ReadManifest(const std::filesystem::path& path) {
  return ParseManifest(ReadFileBytes(path), path.string());
}

SuiteManifest GenerateSuite(const std::vector<Instance>& test,
                            const std::string& source_path,
                            const std::string& source_checksum,
                            std::uint64_t master_seed,
                            const std::filesystem::path& outdir,
                            const PipelineConfig& config,
                            const SuiteOptions& options) {
  struct Job {
    int level;
    Version version;
    int percent;
  };
  std::vector<Job> jobs;
  for (int level = 1; level <= 3; ++level) {
    for (const Version v : {Version::kV1, Version::kV2}) {
      for (const int p : kSuitePercents) jobs.push_back({level, v, p});
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create " + outdir.string() + ": " + ec.message());
  if (!options.force) {
    std::vector<std::string> names = {std::string(kManifestFileName)};
    for (const Job& job : jobs) {
      names.push_back(EntryFileName(job.level, job.version, job.percent));
    }
    for (const std::string& name : names) {
      if (std::filesystem::exists(outdir / name)) {
        throw IoError("refusing to overwrite " + (outdir / name).string() +
                      " (use --force)");
      }
    }
  }

  SuiteManifest manifest;
  manifest.source_path = source_path;
  manifest.source_checksum = source_checksum;
  manifest.source_instances = test.size();
  manifest.master_seed = master_seed;
  manifest.entries.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto worker = [&]() {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        const Job& job = jobs[k];
        const auto data = CamouflageDataset(test, job.level, job.version,
                                            job.percent, master_seed, config);
        const std::string content = SerializeCamouflagedDataset(data);
        SuiteEntry& entry = manifest.entries[k];
        entry.level = job.level;
        entry.version = job.version;
        entry.percent = job.percent;
        entry.path = EntryFileName(job.level, job.version, job.percent);
        entry.checksum = Sha256Hex(content);
        entry.instances = data.size();
        entry.camouflaged = static_cast<std::size_t>(
            std::count_if(data.begin(), data.end(),
                          [](const auto& ci) { return ci.camo_applied; }));
        entry.canonical = IsCanonical(config.specs.Get(job.level, job.version));
        WriteFileBytes(outdir / entry.path, content);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.jobs, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  WriteFileBytes(outdir / kManifestFileName, SerializeManifest(manifest));
  return manifest;
}

}  // namespace camo
