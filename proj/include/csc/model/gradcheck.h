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

#ifndef CSC_MODEL_GRADCHECK_H_
#define CSC_MODEL_GRADCHECK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "csc/model/params.h"
#include "csc/model/transformer.h"

namespace csc::model {

struct GradientProbe {
  std::string tensor;
  std::size_t flat_index;  // into ModelParams::values
  double analytic;
  double numeric;
  double rel_error;
};

struct GradientCheckReport {
  double max_rel_error = 0.0;
  std::vector<GradientProbe> probes;
};

// |a - n| / max(|a|, |n|, 1e-8).
double RelativeError(double analytic, double numeric);

// Central difference of the batch loss with respect to one scalar.
double NumericGradient(const ModelParams& params,
                       std::span<const Example> batch, std::size_t flat_index,
                       double h = 1e-5);

// Compares analytic gradients with central differences on `probe_count`
// random scalars. Under cr_embedding conditioning at least two probes come
// from bin_embedding rows used by the batch. Requires d_model <= 16 and a
// single layer.
GradientCheckReport GradientCheck(const ModelParams& params,
                                  std::span<const Example> batch,
                                  int probe_count, std::uint64_t seed,
                                  double h = 1e-5);

// Probes explicit flat indices.
GradientCheckReport GradientCheckAt(const ModelParams& params,
                                    std::span<const Example> batch,
                                    const std::vector<std::size_t>& indices,
                                    double h = 1e-5);

}  // namespace csc::model

#endif  // CSC_MODEL_GRADCHECK_H_
