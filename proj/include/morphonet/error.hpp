// Copyright 2026 The Morphonet Authors.
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

#ifndef MORPHONET_ERROR_HPP_
#define MORPHONET_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace morphonet {

enum class ErrorCode {
  kInvalidInput,  // malformed argument or value out of range
  kLookup,        // unknown lexeme
  kIngest,        // malformed or duplicate lexicon record
  kIo,            // file could not be read or written
  kVersion,       // snapshot version mismatch or corrupt snapshot
  kSize,          // input exceeds a brute-force bound
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace morphonet

#endif  // MORPHONET_ERROR_HPP_
