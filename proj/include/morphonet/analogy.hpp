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

#ifndef MORPHONET_ANALOGY_HPP_
#define MORPHONET_ANALOGY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphonet {

// Formal analogy between strings.
//
// The production test compares edit signatures: the minimal edit script of
// each pair, chosen deterministically by backtracking through the
// Levenshtein lattice, with runs of matches merged and their content replaced
// by a wildcard. a:b::c:d holds iff signature(a, b) == signature(c, d).
//
// IsAnalogyOracle decides the factorization definition by exhaustive search
// over consumed positions in the four strings. It is a slow reference.
//
// Every function works on Unicode scalar values; UTF-8 overloads decode
// their arguments first.

enum class EditKind : char { kInsert = 'I', kDelete = 'D', kMatch = 'M', kSubstitute = 'S' };

// One edit operation. Strings are UTF-8; an empty string stands for epsilon.
struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::string source;
  std::string target;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

using EditScript = std::vector<EditOp>;

inline constexpr std::string_view kWildcard = "@";

struct EditSignature {
  std::vector<EditOp> ops;

  // True for the signature of a pair of identical non-empty strings.
  bool IsIdentity() const;

  friend bool operator==(const EditSignature&, const EditSignature&) = default;
};

// (|a|+1) x (|b|+1) matrix of prefix Levenshtein distances with unit costs.
class EditLattice {
 public:
  EditLattice(std::size_t rows, std::size_t cols) : cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const { return cols_ == 0 ? 0 : cells_.size() / cols_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  int& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  int distance() const { return cells_.back(); }

 private:
  std::size_t cols_;
  std::vector<int> cells_;
};

EditLattice EditMatrix(std::u32string_view a, std::u32string_view b);
EditLattice EditMatrix(std::string_view a, std::string_view b);

// Walks from the last cell back to the origin. At each cell the predecessor
// must account exactly for the cell's cost; among those the left cell
// (insertion) wins, then the upper one (deletion), then the diagonal (match
// or substitution).
EditScript BacktrackPath(const EditLattice& lattice, std::u32string_view a, std::u32string_view b);
EditScript BacktrackPath(const EditLattice& lattice, std::string_view a, std::string_view b);

// Merges maximal runs of consecutive matches into one match op.
EditScript Simplify(const EditScript& script);

EditSignature Signature(std::u32string_view a, std::u32string_view b);
EditSignature Signature(std::string_view a, std::string_view b);

bool IsAnalogy(std::string_view a, std::string_view b, std::string_view c, std::string_view d);
bool IsAnalogy(const EditSignature& ab, const EditSignature& cd);

// Number of insertions, deletions and substitutions in a script.
std::size_t Cost(const EditScript& script);

// Factorization-based analogy test: a:b::c:d iff the four strings admit
// factorizations of a common length n with, for every i,
// (f_i(b), f_i(c)) in {(f_i(a), f_i(d)), (f_i(d), f_i(a))}. Empty factors are
// allowed. Throws Error(kSize) if any string is longer than max_len scalars.
bool IsAnalogyOracle(std::string_view a, std::string_view b, std::string_view c,
                     std::string_view d, std::size_t max_len = 12);

// Smallest n for which such factorizations exist, or nullopt.
std::optional<std::size_t> MinFactorizationLength(std::string_view a, std::string_view b,
                                                  std::string_view c, std::string_view d,
                                                  std::size_t max_len = 12);

// Checks explicit factorizations (factors of a, b, c, d, in that order)
// against the definition above.
bool SatisfiesFactorization(std::span<const std::string> a, std::span<const std::string> b,
                            std::span<const std::string> c, std::span<const std::string> d);

std::string ToString(const EditOp& op);
std::string ToString(const EditScript& script);
std::string ToString(const EditSignature& signature);

}  // namespace morphonet

#endif  // MORPHONET_ANALOGY_HPP_
