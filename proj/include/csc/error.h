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

#ifndef CSC_ERROR_H_
#define CSC_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csc {

// Root of every error raised by the toolkit. The CLI maps subclasses of
// InputError to exit status 1 and everything else to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

#define CSC_DEFINE_ERROR(Name, Base)  \
  class Name : public Base {          \
   public:                            \
    using Base::Base;                 \
  };

CSC_DEFINE_ERROR(EmptyText, InputError)
CSC_DEFINE_ERROR(EmptyDocument, InputError)
CSC_DEFINE_ERROR(IoError, InputError)
CSC_DEFINE_ERROR(EmptyReference, InputError)
CSC_DEFINE_ERROR(PairCountMismatch, InputError)
CSC_DEFINE_ERROR(InvalidGamma, InputError)
CSC_DEFINE_ERROR(AugmentInfeasible, InputError)
CSC_DEFINE_ERROR(InvalidBin, InputError)
CSC_DEFINE_ERROR(InvalidCount, InputError)
CSC_DEFINE_ERROR(IndexError, InputError)
CSC_DEFINE_ERROR(LengthError, InputError)
CSC_DEFINE_ERROR(EmptyBatch, InputError)
CSC_DEFINE_ERROR(ConfigMismatch, InputError)
CSC_DEFINE_ERROR(CheckpointError, InputError)
CSC_DEFINE_ERROR(BadMagic, CheckpointError)
CSC_DEFINE_ERROR(VersionMismatch, CheckpointError)
CSC_DEFINE_ERROR(DimensionMismatch, CheckpointError)

#undef CSC_DEFINE_ERROR

// Malformed corpus record; carries the 1-based line number.
class SchemaError : public InputError {
 public:
  SchemaError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace csc

#endif  // CSC_ERROR_H_
