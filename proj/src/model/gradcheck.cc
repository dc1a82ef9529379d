// Copyright 2026 The CSC Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csc/model/gradcheck.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "csc/error.h"
#include "csc/rng.h"

namespace csc::model {

double RelativeError(double analytic, double numeric) {
  const double denom =
      std::max({std::abs(analytic), std::abs(numeric), 1e-8});
  return std::abs(analytic - numeric) / denom;
}

double NumericGradient(const ModelParams& params,
                       std::span<const Example> batch, std::size_t flat_index,
                       double h) {
  ModelParams probe = params;
  const Transformer model(probe);
  const double original = probe.values.at(flat_index);
  probe.values[flat_index] = original + h;
  const double plus = BatchLoss(model, batch).loss;
  probe.values[flat_index] = original - h;
  const double minus = BatchLoss(model, batch).loss;
  return (plus - minus) / (2.0 * h);
}

namespace {

const TensorInfo& Owner(const ParamLayout& layout, std::size_t flat_index) {
  for (const TensorInfo& t : layout.tensors()) {
    if (flat_index >= t.offset && flat_index < t.offset + t.size()) return t;
  }
  throw IndexError("parameter index out of range");
}

}  // namespace

GradientCheckReport GradientCheckAt(const ModelParams& params,
                                    std::span<const Example> batch,
                                    const std::vector<std::size_t>& indices,
                                    double h) {
  const Transformer model(params);
  Gradients grads(params.layout);
  LossAndGrads(model, batch, &grads);
  GradientCheckReport report;
  for (std::size_t index : indices) {
    const double analytic = grads.values.at(index);
    const double numeric = NumericGradient(params, batch, index, h);
    const double err = RelativeError(analytic, numeric);
    report.probes.push_back(
        {Owner(params.layout, index).name, index, analytic, numeric, err});
    report.max_rel_error = std::max(report.max_rel_error, err);
  }
  return report;
}

GradientCheckReport GradientCheck(const ModelParams& params,
                                  std::span<const Example> batch,
                                  int probe_count, std::uint64_t seed,
                                  double h) {
  const ModelConfig& c = params.config;
  if (c.d_model > 16 || c.layers != 1) {
    throw InputError("gradient check expects d_model <= 16 and one layer");
  }
  if (batch.empty()) throw EmptyBatch("gradient check needs a batch");
  Rng rng(seed);
  std::set<std::size_t> chosen;
  std::vector<std::size_t> indices;
  auto take = [&](std::size_t index) {
    if (chosen.insert(index).second) indices.push_back(index);
  };
  if (c.conditioning == Conditioning::kCrEmbedding) {
    const TensorInfo& bins = params.layout.Find("bin_emb");
    std::vector<int> used;
    for (const Example& ex : batch) used.push_back(ex.bin);
    for (int i = 0; i < 2 && static_cast<int>(indices.size()) < probe_count;
         ++i) {
      const int bin = used[rng.UniformInt(used.size())];
      take(bins.offset + (bin - 1) * bins.cols + rng.UniformInt(bins.cols));
    }
  }
  const std::size_t total = params.layout.total_size();
  while (static_cast<int>(indices.size()) < probe_count &&
         chosen.size() < total) {
    take(rng.UniformInt(total));
  }
  return GradientCheckAt(params, batch, indices, h);
}

}  // namespace csc::model
