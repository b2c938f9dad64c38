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

#include "camo/baseline.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <set>

#include "camo/checksum.h"
#include "camo/errors.h"
#include "camo/utf8.h"
#include "json.hpp"

namespace camo {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kMagic = "CAMOBL1\n";

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t Fnv1a(std::uint64_t h, std::string_view bytes) {
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

void AppendDoubles(const std::vector<double>& values, std::string* out) {
  for (const double v : values) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      out->push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
    }
  }
}

std::vector<double> ReadDoubles(std::string_view bytes, std::size_t count,
                                std::size_t* offset) {
  if (bytes.size() < *offset + 8 * count) {
    throw ValidationError("model file is truncated");
  }
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
      bits |= static_cast<std::uint64_t>(
                  static_cast<unsigned char>(bytes[*offset + 8 * k + i]))
              << (8 * i);
    }
    out[k] = std::bit_cast<double>(bits);
  }
  *offset += 8 * count;
  return out;
}

Json LabelJson(const Label& label) {
  Json j;
  std::visit([&](const auto& v) { j = v; }, label);
  return j;
}

struct Example {
  FeatureVector features;
  std::size_t label = 0;  // class index
};

std::vector<Example> MakeExamples(const std::vector<Instance>& data,
                                  const std::vector<Label>& classes) {
  std::vector<Example> out;
  out.reserve(data.size());
  for (const Instance& instance : data) {
    const auto it =
        std::lower_bound(classes.begin(), classes.end(), *instance.label);
    out.push_back({HashedFeatures(instance.text),
                   static_cast<std::size_t>(it - classes.begin())});
  }
  return out;
}

}  // namespace

TrainingMode TrainingMode::Parse(std::string_view kind, int percent) {
  TrainingMode mode;
  if (kind == "naive") {
    mode.kind = Kind::kNaive;
    mode.percent = 0;
    return mode;
  }
  if (kind == "static") {
    mode.kind = Kind::kStatic;
  } else if (kind == "dynamic") {
    mode.kind = Kind::kDynamic;
  } else {
    throw ValidationError("unknown training mode '" + std::string(kind) +
                          "' (expected naive, static or dynamic)");
  }
  if (percent < 0 || percent > 100) {
    throw ValidationError("percent must lie in [0, 100]");
  }
  mode.percent = percent;
  return mode;
}

std::string TrainingMode::Name() const {
  switch (kind) {
    case Kind::kNaive:
      return "naive";
    case Kind::kStatic:
      return "static(" + std::to_string(percent) + ")";
    case Kind::kDynamic:
      return "dynamic(" + std::to_string(percent) + ")";
  }
  return "naive";
}

FeatureVector HashedFeatures(std::string_view text) {
  const std::string padded = " " + AsciiLowerString(text) + " ";
  const std::vector<CodePoint> cps = DecodeUtf8(padded);
  std::vector<std::uint32_t> buckets;
  for (std::size_t n = 2; n <= 4; ++n) {
    if (cps.size() < n) break;
    const std::uint64_t seed = Fnv1a(kFnvOffset, std::string(1, char('0' + n)));
    for (std::size_t i = 0; i + n <= cps.size(); ++i) {
      const std::size_t begin = cps[i].offset;
      const std::size_t end = cps[i + n - 1].offset + cps[i + n - 1].length;
      const std::uint64_t h =
          Fnv1a(seed, std::string_view(padded).substr(begin, end - begin));
      buckets.push_back(static_cast<std::uint32_t>(h & (kHashDim - 1)));
    }
  }
  std::sort(buckets.begin(), buckets.end());
  FeatureVector features;
  for (const std::uint32_t b : buckets) {
    if (!features.empty() && features.back().first == b) {
      features.back().second += 1.0;
    } else {
      features.emplace_back(b, 1.0);
    }
  }
  double norm = 0.0;
  for (const auto& [b, v] : features) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (auto& [b, v] : features) v /= norm;
  }
  return features;
}

std::vector<double> BaselineModel::Scores(std::string_view text) const {
  const FeatureVector features = HashedFeatures(text);
  std::vector<double> scores(bias_);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const double* w = weights_.data() + c * kHashDim;
    for (const auto& [b, v] : features) scores[c] += w[b] * v;
  }
  return scores;
}

const Label& BaselineModel::Predict(std::string_view text) const {
  if (classes_.empty()) throw ValidationError("model has no classes");
  const std::vector<double> scores = Scores(text);
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return classes_[best];
}

std::string BaselineModel::Serialize() const {
  Json header;
  Json classes = Json::array();
  for (const Label& c : classes_) classes.push_back(LabelJson(c));
  header["classes"] = std::move(classes);
  header["dim"] = kHashDim;
  header["ngrams"] = {2, 3, 4};
  header["mode"] = TrainingMode::Parse(mode_.kind == TrainingMode::Kind::kNaive
                                           ? "naive"
                                           : (mode_.kind ==
                                                      TrainingMode::Kind::kStatic
                                                  ? "static"
                                                  : "dynamic"),
                                       mode_.percent)
                       .Name();
  header["percent"] = mode_.percent;
  header["seed"] = options_.seed;
  header["epochs"] = options_.epochs;
  header["learning_rate"] = options_.learning_rate;
  header["l2"] = options_.l2;
  header["train_instances"] = train_instances_;

  std::string out(kMagic);
  out += header.dump();
  out += '\n';
  AppendDoubles(bias_, &out);
  AppendDoubles(weights_, &out);
  return out;
}

BaselineModel BaselineModel::Deserialize(std::string_view bytes) {
  if (bytes.substr(0, kMagic.size()) != kMagic) {
    throw ValidationError("not a baseline model file");
  }
  const std::size_t eol = bytes.find('\n', kMagic.size());
  if (eol == std::string_view::npos) {
    throw ValidationError("model file is truncated");
  }
  BaselineModel model;
  try {
    const Json header =
        Json::parse(bytes.substr(kMagic.size(), eol - kMagic.size()));
    if (header.at("dim").get<std::uint32_t>() != kHashDim) {
      throw ValidationError("model hash dimension mismatch");
    }
    for (const Json& c : header.at("classes")) {
      if (c.is_number_integer()) {
        model.classes_.emplace_back(c.get<std::int64_t>());
      } else {
        model.classes_.emplace_back(c.get<std::string>());
      }
    }
    const std::string mode = header.at("mode").get<std::string>();
    model.mode_ = TrainingMode::Parse(mode.substr(0, mode.find('(')),
                                      header.at("percent").get<int>());
    model.options_.seed = header.at("seed").get<std::uint64_t>();
    model.options_.epochs = header.at("epochs").get<int>();
    model.options_.learning_rate = header.at("learning_rate").get<double>();
    model.options_.l2 = header.at("l2").get<double>();
    model.train_instances_ = header.at("train_instances").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("bad model header: ") + e.what());
  }
  std::size_t offset = eol + 1;
  const std::size_t k = model.classes_.size();
  model.bias_ = ReadDoubles(bytes, k, &offset);
  model.weights_ = ReadDoubles(bytes, k * kHashDim, &offset);
  if (offset != bytes.size()) {
    throw ValidationError("trailing bytes in model file");
  }
  return model;
}

void BaselineModel::Save(const std::filesystem::path& path) const {
  WriteFileBytes(path, Serialize());
}

BaselineModel BaselineModel::Load(const std::filesystem::path& path) {
  return Deserialize(ReadFileBytes(path));
}

BaselineModel TrainBaseline(const std::vector<Instance>& train,
                            const TrainingMode& mode,
                            const BaselineOptions& options,
                            const PipelineConfig& config) {
  std::set<Label> class_set;
  for (const Instance& instance : train) {
    if (!instance.label) {
      throw ValidationError("training instance '" + instance.id +
                            "' has no label");
    }
    class_set.insert(*instance.label);
  }
  if (class_set.size() < 2) {
    throw ValidationError("training data needs at least two classes");
  }
  if (options.epochs < 1) throw ValidationError("epochs must be >= 1");

  BaselineModel model;
  model.classes_.assign(class_set.begin(), class_set.end());
  model.mode_ = mode;
  model.options_ = options;
  model.train_instances_ = train.size();
  const std::size_t k = model.classes_.size();
  model.bias_.assign(k, 0.0);
  // Weights are stored as scale * raw so L2 decay is O(1) per step.
  std::vector<double> raw(k * kHashDim, 0.0);
  double scale = 1.0;

  std::vector<Example> examples;
  if (mode.kind == TrainingMode::Kind::kNaive) {
    examples = MakeExamples(train, model.classes_);
  } else if (mode.kind == TrainingMode::Kind::kStatic) {
    examples = MakeExamples(
        AsInstances(StaticTrainingSet(train, mode.percent, options.seed,
                                      config)),
        model.classes_);
  }

  const double n = static_cast<double>(train.size());
  std::uint64_t step = 0;
  std::vector<double> probs(k);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    if (mode.kind == TrainingMode::Kind::kDynamic) {
      examples = MakeExamples(
          AsInstances(DynamicView(train, mode.percent, options.seed,
                                  static_cast<std::uint64_t>(epoch), config)),
          model.classes_);
    }
    std::vector<std::size_t> order(examples.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng = DeriveRng(
        {options.seed, "baseline/order", static_cast<std::uint64_t>(epoch)});
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      std::swap(order[i], order[i + rng.UniformInt(order.size() - i)]);
    }

    for (const std::size_t idx : order) {
      const Example& ex = examples[idx];
      const double lr =
          options.learning_rate / (1.0 + static_cast<double>(step) / n);
      ++step;

      double max_logit = -INFINITY;
      for (std::size_t c = 0; c < k; ++c) {
        double z = model.bias_[c];
        const double* w = raw.data() + c * kHashDim;
        double dot = 0.0;
        for (const auto& [b, v] : ex.features) dot += w[b] * v;
        z += scale * dot;
        probs[c] = z;
        max_logit = std::max(max_logit, z);
      }
      double total = 0.0;
      for (double& p : probs) {
        p = std::exp(p - max_logit);
        total += p;
      }

      scale *= 1.0 - lr * options.l2;
      for (std::size_t c = 0; c < k; ++c) {
        const double grad = probs[c] / total - (c == ex.label ? 1.0 : 0.0);
        model.bias_[c] -= lr * grad;
        double* w = raw.data() + c * kHashDim;
        const double step_size = lr * grad / scale;
        for (const auto& [b, v] : ex.features) w[b] -= step_size * v;
      }
      if (scale < 1e-6) {
        for (double& w : raw) w *= scale;
        scale = 1.0;
      }
    }
  }

  model.weights_.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) model.weights_[i] = raw[i] * scale;
  return model;
}

PredictionSet PredictBaseline(const BaselineModel& model,
                              const std::vector<Instance>& data) {
  PredictionSet out;
  out.source = "baseline:" + model.mode().Name();
  out.predictions.reserve(data.size());
  for (const Instance& instance : data) {
    out.predictions.emplace_back(instance.id, model.Predict(instance.text));
  }
  return out;
}

}  // namespace camo
