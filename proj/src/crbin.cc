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

#include "csc/crbin.h"

#include <charconv>
#include <cmath>

#include "csc/error.h"

namespace csc {

BinConfig::BinConfig(double delta) : delta_(delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw InputError("bin width must lie in (0, 1]");
  }
  // The epsilon absorbs representation error, e.g. 1/0.05 = 19.999...
  num_bins_ = static_cast<int>(std::ceil(1.0 / delta - 1e-9));
  if (num_bins_ < 1) num_bins_ = 1;
  while (num_bins_ * delta_ < 1.0 - 1e-12) ++num_bins_;
}

double ClipGamma(double gamma) {
  if (!std::isfinite(gamma) || gamma <= 0.0) {
    throw InvalidGamma("compression rate must be positive, got " +
                       std::to_string(gamma));
  }
  return gamma < 1.0 ? gamma : 1.0;
}

int Quantize(double gamma, const BinConfig& config) {
  if (!std::isfinite(gamma) || gamma <= 0.0 || gamma > 1.0) {
    throw InvalidGamma("compression rate outside (0, 1]: " +
                       std::to_string(gamma));
  }
  const int n = config.num_bins();
  const double delta = config.delta();
  int b = static_cast<int>(std::floor(gamma / delta)) + 1;
  if (b > n) b = n;
  if (b < 1) b = 1;
  // Agree exactly with the interval bounds computed in GetBinInterval.
  while (b > 1 && gamma < (b - 1) * delta) --b;
  while (b < n && gamma >= b * delta) ++b;
  return b;
}

int QuantizeClipped(double gamma, const BinConfig& config) {
  return Quantize(ClipGamma(gamma), config);
}

BinInterval GetBinInterval(int bin, const BinConfig& config) {
  const int n = config.num_bins();
  if (bin < 1 || bin > n) {
    throw InvalidBin("bin " + std::to_string(bin) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  const double delta = config.delta();
  if (bin == n) return {(bin - 1) * delta, 1.0, true};
  return {(bin - 1) * delta, bin * delta, false};
}

std::string FormatDelta(double delta) {
  char buf[32];
  auto result = std::to_chars(buf, buf + sizeof(buf), delta);
  return std::string(buf, result.ptr);
}

}  // namespace csc
