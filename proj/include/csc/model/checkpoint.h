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

#ifndef CSC_MODEL_CHECKPOINT_H_
#define CSC_MODEL_CHECKPOINT_H_

#include <cstdint>
#include <string>

#include "csc/crbin.h"
#include "csc/model/params.h"

namespace csc::model {

inline constexpr char kCheckpointMagic[4] = {'C', 'S', 'C', '1'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

// Layout: magic "CSC1", u32 version, u32 config length + JSON config, u32
// tensor count, then per tensor u32 name length + name, u32 rank, u64 dims,
// and little-endian f64 values. All integers little-endian.
void SaveCheckpoint(const ModelParams& params, const std::string& path);

// Throws BadMagic, VersionMismatch or DimensionMismatch (including for
// truncated files); nothing is returned unless the whole file validates.
ModelParams LoadCheckpoint(const std::string& path);

// As above, additionally throwing ConfigMismatch when the stored bin width
// differs from `expected`.
ModelParams LoadCheckpoint(const std::string& path, const BinConfig& expected);

}  // namespace csc::model

#endif  // CSC_MODEL_CHECKPOINT_H_
