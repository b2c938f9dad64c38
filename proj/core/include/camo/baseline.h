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

// A small text classifier for robustness experiments: multinomial logistic
// regression over hashed character 2/3/4-grams.

#ifndef CAMO_BASELINE_H_
#define CAMO_BASELINE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "camo/dataset.h"
#include "camo/eval.h"
#include "camo/pipeline.h"
#include "camo/rng.h"

namespace camo {

struct TrainingMode {
  enum class Kind { kNaive, kStatic, kDynamic };
  Kind kind = Kind::kNaive;
  int percent = 0;  // camouflaged share of training instances

  // "naive", "static" or "dynamic"; the latter two need a percent.
  static TrainingMode Parse(std::string_view kind, int percent);
  std::string Name() const;  // "naive", "static(75)", ...
  bool operator==(const TrainingMode&) const = default;
};

struct BaselineOptions {
  std::uint64_t seed = kDefaultSeed;
  int epochs = 5;
  double learning_rate = 0.1;  // decays as lr / (1 + step / n_train)
  double l2 = 1e-6;
  bool operator==(const BaselineOptions&) const = default;
};

// Sparse, L2-normalised feature vector: (bucket, value), buckets ascending.
using FeatureVector = std::vector<std::pair<std::uint32_t, double>>;

inline constexpr int kHashBits = 18;
inline constexpr std::uint32_t kHashDim = 1u << kHashBits;

// Character n-grams (n = 2, 3, 4) over the ASCII-lowercased text padded with
// one space on each side, hashed with 64-bit FNV-1a into kHashDim buckets.
FeatureVector HashedFeatures(std::string_view text);

class BaselineModel {
 public:
  const std::vector<Label>& classes() const { return classes_; }
  const TrainingMode& mode() const { return mode_; }
  const BaselineOptions& options() const { return options_; }

  std::vector<double> Scores(std::string_view text) const;
  // Argmax of Scores; ties go to the earlier class.
  const Label& Predict(std::string_view text) const;

  std::string Serialize() const;
  static BaselineModel Deserialize(std::string_view bytes);
  void Save(const std::filesystem::path& path) const;
  static BaselineModel Load(const std::filesystem::path& path);

  bool operator==(const BaselineModel&) const = default;

 private:
  friend BaselineModel TrainBaseline(const std::vector<Instance>&,
                                     const TrainingMode&,
                                     const BaselineOptions&,
                                     const PipelineConfig&);

  std::vector<Label> classes_;
  std::vector<double> bias_;     // one per class
  std::vector<double> weights_;  // class-major, classes x kHashDim
  TrainingMode mode_;
  BaselineOptions options_;
  std::size_t train_instances_ = 0;
};

// Seeded SGD, single-threaded. Each epoch visits the training data in an
// order drawn from DeriveRng({seed, "baseline/order", epoch}). Static mode
// trains on StaticTrainingSet(train, percent, seed); dynamic mode on
// DynamicView(train, percent, seed, epoch) for each epoch. Throws
// ValidationError with fewer than two classes or unlabelled instances.
BaselineModel TrainBaseline(const std::vector<Instance>& train,
                            const TrainingMode& mode,
                            const BaselineOptions& options = {},
                            const PipelineConfig& config = {});

PredictionSet PredictBaseline(const BaselineModel& model,
                              const std::vector<Instance>& data);

}  // namespace camo

#endif  // CAMO_BASELINE_H_
