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

#ifndef CSC_CRBIN_H_
#define CSC_CRBIN_H_

#include <string>

namespace csc {

// Equal-width partition of (0, 1] into ceil(1/delta) bins. Bin b (1-based)
// covers [(b-1)*delta, b*delta); the last bin is [(n-1)*delta, 1] and may be
// shorter than delta when delta does not divide 1.
class BinConfig {
 public:
  explicit BinConfig(double delta = 0.2);

  double delta() const { return delta_; }
  int num_bins() const { return num_bins_; }

  friend bool operator==(const BinConfig& a, const BinConfig& b) {
    return a.delta_ == b.delta_;
  }

 private:
  double delta_;
  int num_bins_;
};

struct BinInterval {
  double lo;
  double hi;
  bool hi_inclusive;

  double midpoint() const { return 0.5 * (lo + (hi < 1.0 ? hi : 1.0)); }
};

// min(gamma, 1). Throws InvalidGamma for gamma <= 0 or non-finite input.
double ClipGamma(double gamma);

// Bin index in [1, num_bins] for gamma in (0, 1]. Throws InvalidGamma
// outside that range; callers clip first.
int Quantize(double gamma, const BinConfig& config);

// Quantize(ClipGamma(gamma)).
int QuantizeClipped(double gamma, const BinConfig& config);

// Inverse of Quantize. Throws InvalidBin for an out-of-range index.
BinInterval GetBinInterval(int bin, const BinConfig& config);

std::string FormatDelta(double delta);

}  // namespace csc

#endif  // CSC_CRBIN_H_
