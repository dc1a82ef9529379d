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

#include "csc/model/checkpoint.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "csc/error.h"

namespace csc::model {
namespace {

class ByteWriter {
 public:
  void U32(std::uint32_t v) { Le(v, 4); }
  void U64(std::uint64_t v) { Le(v, 8); }
  void F64(double v) { U64(std::bit_cast<std::uint64_t>(v)); }
  void Bytes(const std::string& s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
  const std::vector<char>& buffer() const { return buf_; }

 private:
  void Le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  std::vector<char> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::vector<char> data) : data_(std::move(data)) {}

  std::uint32_t U32() { return static_cast<std::uint32_t>(Le(4)); }
  std::uint64_t U64() { return Le(8); }
  double F64() { return std::bit_cast<double>(U64()); }
  std::string Bytes(std::size_t n) {
    Need(n);
    std::string s(data_.data() + pos_, n);
    pos_ += n;
    return s;
  }
  bool at_end() const { return pos_ == data_.size(); }

 private:
  void Need(std::size_t n) const {
    if (data_.size() - pos_ < n) {
      throw DimensionMismatch("checkpoint is truncated");
    }
  }
  std::uint64_t Le(int n) {
    Need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i]))
           << (8 * i);
    }
    pos_ += static_cast<std::size_t>(n);
    return v;
  }

  std::vector<char> data_;
  std::size_t pos_ = 0;
};

}  // namespace

void SaveCheckpoint(const ModelParams& params, const std::string& path) {
  ByteWriter w;
  w.Bytes(std::string(kCheckpointMagic, 4));
  w.U32(kCheckpointVersion);
  const std::string config = params.config.ToJson().dump();
  w.U32(static_cast<std::uint32_t>(config.size()));
  w.Bytes(config);
  const auto& tensors = params.layout.tensors();
  w.U32(static_cast<std::uint32_t>(tensors.size()));
  for (const TensorInfo& t : tensors) {
    w.U32(static_cast<std::uint32_t>(t.name.size()));
    w.Bytes(t.name);
    if (t.is_vector()) {
      w.U32(1);
      w.U64(t.rows);
    } else {
      w.U32(2);
      w.U64(t.rows);
      w.U64(t.cols);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      w.F64(params.values[t.offset + i]);
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(w.buffer().data(), static_cast<std::streamsize>(w.buffer().size()));
  if (!out) throw IoError("write failure on " + path);
}

ModelParams LoadCheckpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<char> data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  if (data.size() < 4 || std::memcmp(data.data(), kCheckpointMagic, 4) != 0) {
    throw BadMagic(path + " is not a checkpoint");
  }
  ByteReader r(std::move(data));
  r.Bytes(4);
  const std::uint32_t version = r.U32();
  if (version != kCheckpointVersion) {
    throw VersionMismatch("checkpoint version " + std::to_string(version) +
                          ", expected " + std::to_string(kCheckpointVersion));
  }
  const std::string config_text = r.Bytes(r.U32());
  const nlohmann::json config_json =
      nlohmann::json::parse(config_text, nullptr, false);
  if (config_json.is_discarded()) {
    throw DimensionMismatch("checkpoint config block is corrupt");
  }
  ModelParams params(ModelConfig::FromJson(config_json));
  const auto& tensors = params.layout.tensors();
  if (r.U32() != tensors.size()) {
    throw DimensionMismatch("checkpoint tensor count does not match config");
  }
  for (const TensorInfo& t : tensors) {
    const std::string name = r.Bytes(r.U32());
    if (name != t.name) {
      throw DimensionMismatch("expected tensor " + t.name + ", found " + name);
    }
    const std::uint32_t rank = r.U32();
    std::vector<std::uint64_t> dims;
    for (std::uint32_t i = 0; i < rank && i < 3; ++i) dims.push_back(r.U64());
    const bool ok = t.is_vector()
                        ? (rank == 1 && dims[0] == t.rows)
                        : (rank == 2 && dims[0] == t.rows && dims[1] == t.cols);
    if (!ok) throw DimensionMismatch("shape mismatch for tensor " + t.name);
    for (std::size_t i = 0; i < t.size(); ++i) {
      params.values[t.offset + i] = r.F64();
    }
  }
  if (!r.at_end()) throw DimensionMismatch("trailing bytes after tensors");
  return params;
}

ModelParams LoadCheckpoint(const std::string& path, const BinConfig& expected) {
  ModelParams params = LoadCheckpoint(path);
  if (!(params.config.bins == expected)) {
    throw ConfigMismatch("checkpoint bin width " +
                         FormatDelta(params.config.bins.delta()) +
                         " differs from requested " +
                         FormatDelta(expected.delta()));
  }
  return params;
}

}  // namespace csc::model
