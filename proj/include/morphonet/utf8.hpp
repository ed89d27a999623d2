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

#ifndef MORPHONET_UTF8_HPP_
#define MORPHONET_UTF8_HPP_

#include <string>
#include <string_view>

namespace morphonet::utf8 {

// Decodes UTF-8 into Unicode scalar values. Throws Error(kInvalidInput) on
// malformed sequences, overlong encodings and surrogates.
std::u32string Decode(std::string_view text);

std::string Encode(std::u32string_view text);

// Number of scalar values in a valid UTF-8 string.
std::size_t Length(std::string_view text);

}  // namespace morphonet::utf8

#endif  // MORPHONET_UTF8_HPP_
