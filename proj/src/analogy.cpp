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

#include "morphonet/analogy.hpp"

#include <algorithm>
#include <deque>

#include "morphonet/error.hpp"
#include "morphonet/utf8.hpp"

namespace morphonet {

bool EditSignature::IsIdentity() const {
  return ops.size() == 1 && ops[0].kind == EditKind::kMatch;
}

EditLattice EditMatrix(std::u32string_view a, std::u32string_view b) {
  EditLattice lattice(a.size() + 1, b.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) lattice.at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) lattice.at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int diagonal = lattice.at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
      const int insertion = lattice.at(i, j - 1) + 1;
      const int deletion = lattice.at(i - 1, j) + 1;
      lattice.at(i, j) = std::min({diagonal, insertion, deletion});
    }
  }
  return lattice;
}

EditLattice EditMatrix(std::string_view a, std::string_view b) {
  return EditMatrix(utf8::Decode(a), utf8::Decode(b));
}

EditScript BacktrackPath(const EditLattice& lattice, std::u32string_view a,
                         std::u32string_view b) {
  if (lattice.rows() != a.size() + 1 || lattice.cols() != b.size() + 1) {
    throw Error(ErrorCode::kInvalidInput, "lattice shape does not match strings");
  }
  auto one = [](char32_t c) { return utf8::Encode(std::u32string_view(&c, 1)); };

  EditScript reversed;
  std::size_t i = a.size();
  std::size_t j = b.size();
  while (i > 0 || j > 0) {
    const int here = lattice.at(i, j);
    if (j > 0 && lattice.at(i, j - 1) + 1 == here) {
      reversed.push_back({EditKind::kInsert, "", one(b[j - 1])});
      --j;
    } else if (i > 0 && lattice.at(i - 1, j) + 1 == here) {
      reversed.push_back({EditKind::kDelete, one(a[i - 1]), ""});
      --i;
    } else {
      if (a[i - 1] == b[j - 1]) {
        reversed.push_back({EditKind::kMatch, one(a[i - 1]), one(b[j - 1])});
      } else {
        reversed.push_back({EditKind::kSubstitute, one(a[i - 1]), one(b[j - 1])});
      }
      --i;
      --j;
    }
  }
  return EditScript(reversed.rbegin(), reversed.rend());
}

EditScript BacktrackPath(const EditLattice& lattice, std::string_view a, std::string_view b) {
  return BacktrackPath(lattice, utf8::Decode(a), utf8::Decode(b));
}

EditScript Simplify(const EditScript& script) {
  EditScript out;
  for (const EditOp& op : script) {
    if (op.kind == EditKind::kMatch && !out.empty() && out.back().kind == EditKind::kMatch) {
      out.back().source += op.source;
      out.back().target += op.target;
    } else {
      out.push_back(op);
    }
  }
  return out;
}

EditSignature Signature(std::u32string_view a, std::u32string_view b) {
  EditSignature sig{Simplify(BacktrackPath(EditMatrix(a, b), a, b))};
  for (EditOp& op : sig.ops) {
    if (op.kind == EditKind::kMatch) {
      op.source = kWildcard;
      op.target = kWildcard;
    }
  }
  return sig;
}

EditSignature Signature(std::string_view a, std::string_view b) {
  return Signature(utf8::Decode(a), utf8::Decode(b));
}

bool IsAnalogy(const EditSignature& ab, const EditSignature& cd) { return ab == cd; }

bool IsAnalogy(std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
  return Signature(a, b) == Signature(c, d);
}

std::size_t Cost(const EditScript& script) {
  return static_cast<std::size_t>(std::count_if(
      script.begin(), script.end(), [](const EditOp& op) { return op.kind != EditKind::kMatch; }));
}

namespace {

// Search space of the factorization oracle. A factor of the first kind
// satisfies f(b) = f(a) and f(c) = f(d); one of the second kind f(b) = f(d)
// and f(c) = f(a). Since empty factors are allowed, a factor can be built
// one character at a time: the first kind advances (a, b) together or
// (c, d) together, the second kind (a, c) or (b, d).
class FactorizationSpace {
 public:
  FactorizationSpace(std::string_view a, std::string_view b, std::string_view c,
                     std::string_view d, std::size_t max_len)
      : s_{utf8::Decode(a), utf8::Decode(b), utf8::Decode(c), utf8::Decode(d)} {
    for (const auto& s : s_) {
      if (s.size() > max_len) {
        throw Error(ErrorCode::kSize, "factorization oracle refuses strings longer than " +
                                          std::to_string(max_len) + " characters");
      }
    }
    for (int k = 0; k < 4; ++k) dims_[k] = s_[k].size() + 1;
  }

  std::size_t StateCount() const { return dims_[0] * dims_[1] * dims_[2] * dims_[3]; }
  std::size_t Encode(const std::array<std::size_t, 4>& p) const {
    return ((p[0] * dims_[1] + p[1]) * dims_[2] + p[2]) * dims_[3] + p[3];
  }
  std::array<std::size_t, 4> Goal() const {
    return {s_[0].size(), s_[1].size(), s_[2].size(), s_[3].size()};
  }
  // Length balance is necessary: |a| + |d| == |b| + |c|.
  bool Balanced() const {
    return s_[0].size() + s_[3].size() == s_[1].size() + s_[2].size();
  }

  // Calls visit(next_position, kind) for each single-character move.
  template <typename Visit>
  void Moves(const std::array<std::size_t, 4>& p, Visit&& visit) const {
    static constexpr int kPairs[4][3] = {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}};
    for (const auto& pair : kPairs) {
      const int x = pair[0];
      const int y = pair[1];
      if (p[x] < s_[x].size() && p[y] < s_[y].size() && s_[x][p[x]] == s_[y][p[y]]) {
        auto next = p;
        ++next[x];
        ++next[y];
        visit(next, pair[2]);
      }
    }
  }

 private:
  std::array<std::u32string, 4> s_;
  std::array<std::size_t, 4> dims_{};
};

}  // namespace

bool IsAnalogyOracle(std::string_view a, std::string_view b, std::string_view c,
                     std::string_view d, std::size_t max_len) {
  FactorizationSpace space(a, b, c, d, max_len);
  if (!space.Balanced()) return false;
  const auto goal = space.Goal();
  std::vector<char> seen(space.StateCount(), 0);
  std::vector<std::array<std::size_t, 4>> stack{{0, 0, 0, 0}};
  seen[0] = 1;
  while (!stack.empty()) {
    const auto p = stack.back();
    stack.pop_back();
    if (p == goal) return true;
    space.Moves(p, [&](const std::array<std::size_t, 4>& next, int) {
      const std::size_t id = space.Encode(next);
      if (!seen[id]) {
        seen[id] = 1;
        stack.push_back(next);
      }
    });
  }
  return false;
}

std::optional<std::size_t> MinFactorizationLength(std::string_view a, std::string_view b,
                                                  std::string_view c, std::string_view d,
                                                  std::size_t max_len) {
  FactorizationSpace space(a, b, c, d, max_len);
  if (!space.Balanced()) return std::nullopt;
  const auto goal = space.Goal();
  // State = (position, kind of the open factor); kind 2 means no factor yet.
  // Moves within the open factor are free, switching kind opens a new one.
  constexpr std::size_t kKinds = 3;
  constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(space.StateCount() * kKinds, kUnreached);
  std::deque<std::pair<std::array<std::size_t, 4>, std::size_t>> queue;
  best[space.Encode({0, 0, 0, 0}) * kKinds + 2] = 0;
  queue.push_back({{0, 0, 0, 0}, 2});
  while (!queue.empty()) {
    const auto [p, kind] = queue.front();
    queue.pop_front();
    const std::size_t cost = best[space.Encode(p) * kKinds + kind];
    if (p == goal) return cost;
    space.Moves(p, [&](const std::array<std::size_t, 4>& next, int move_kind) {
      const auto k = static_cast<std::size_t>(move_kind);
      const std::size_t step = (k == kind) ? 0 : 1;
      const std::size_t id = space.Encode(next) * kKinds + k;
      if (best[id] == kUnreached || cost + step < best[id]) {
        best[id] = cost + step;
        if (step == 0) {
          queue.push_front({next, k});
        } else {
          queue.push_back({next, k});
        }
      }
    });
  }
  return std::nullopt;
}

bool SatisfiesFactorization(std::span<const std::string> a, std::span<const std::string> b,
                            std::span<const std::string> c, std::span<const std::string> d) {
  const std::size_t n = a.size();
  if (b.size() != n || c.size() != n || d.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const bool straight = b[i] == a[i] && c[i] == d[i];
    const bool crossed = b[i] == d[i] && c[i] == a[i];
    if (!straight && !crossed) return false;
  }
  return true;
}

std::string ToString(const EditOp& op) {
  constexpr std::string_view kEpsilon = "\xCE\xB5";  // U+03B5
  std::string out = "(";
  out += static_cast<char>(op.kind);
  out += ',';
  out += op.source.empty() ? std::string(kEpsilon) : op.source;
  out += ',';
  out += op.target.empty() ? std::string(kEpsilon) : op.target;
  out += ')';
  return out;
}

std::string ToString(const EditScript& script) {
  std::string out = "(";
  for (std::size_t k = 0; k < script.size(); ++k) {
    if (k > 0) out += ", ";
    out += ToString(script[k]);
  }
  out += ')';
  return out;
}

std::string ToString(const EditSignature& signature) { return ToString(signature.ops); }

}  // namespace morphonet
