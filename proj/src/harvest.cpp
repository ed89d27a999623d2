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

#include "morphonet/harvest.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "morphonet/analogy.hpp"
#include "morphonet/error.hpp"
#include "morphonet/utf8.hpp"

namespace morphonet {

AnalogyQuadruplet Canonical(AnalogyQuadruplet q) {
  if (std::tie(q.c, q.d, q.a, q.b) < std::tie(q.a, q.b, q.c, q.d)) {
    std::swap(q.a, q.c);
    std::swap(q.b, q.d);
  }
  return q;
}

void NeighborhoodIndex::Set(std::size_t lexeme, std::vector<std::size_t> ranked) {
  Entry entry;
  entry.sorted = ranked;
  std::sort(entry.sorted.begin(), entry.sorted.end());
  entry.ranked = std::move(ranked);
  lists_[lexeme] = std::move(entry);
}

const std::vector<std::size_t>* NeighborhoodIndex::Find(std::size_t lexeme) const {
  auto it = lists_.find(lexeme);
  return it == lists_.end() ? nullptr : &it->second.ranked;
}

bool NeighborhoodIndex::Contains(std::size_t lexeme, std::size_t neighbor) const {
  auto it = lists_.find(lexeme);
  if (it == lists_.end()) return false;
  return std::binary_search(it->second.sorted.begin(), it->second.sorted.end(), neighbor);
}

void CandidateQuadruplets(const NeighborhoodIndex& index, std::size_t a,
                          const std::function<void(const Candidate&)>& emit,
                          CandidateTally* tally) {
  const auto* own = index.Find(a);
  if (own == nullptr) {
    throw Error(ErrorCode::kLookup, "no neighborhood for lexeme index " + std::to_string(a));
  }
  std::vector<std::size_t> pool;
  for (std::size_t n : *own) {
    if (n != a) pool.push_back(n);
  }
  for (std::size_t x = 0; x < pool.size(); ++x) {
    const std::size_t b = pool[x];
    const auto* b_list = index.Find(b);
    for (std::size_t y = x + 1; y < pool.size(); ++y) {
      const std::size_t c = pool[y];
      if (tally) ++tally->pairs;
      if (b_list == nullptr || index.Find(c) == nullptr) {
        if (tally) ++tally->skipped_pairs;
        continue;
      }
      for (std::size_t d : *b_list) {
        if (d == a || d == b || d == c) continue;
        if (index.Contains(c, d)) emit(Candidate{a, b, c, d});
      }
    }
  }
}

namespace {

// Runs body(i) for i in [0, n) on up to `threads` workers. Results must be
// written to per-index slots so the outcome is independent of scheduling.
template <typename Body>
void ParallelFor(std::size_t n, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::size_t> Ranked(const NeighborList& list) {
  std::vector<std::size_t> out;
  out.reserve(list.size());
  for (const auto& n : list) out.push_back(n.lexeme);
  return out;
}

}  // namespace

HarvestResult Harvest(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                      std::span<const Lexeme> seeds, const HarvestOptions& options) {
  if (options.k < 1) throw Error(ErrorCode::kInvalidInput, "k must be at least 1");
  if (options.steps < 1) throw Error(ErrorCode::kInvalidInput, "steps must be at least 1");

  HarvestResult result;
  result.seeds.resize(seeds.size());
  std::vector<std::optional<std::size_t>> resolved(seeds.size());
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    result.seeds[s].seed = seeds[s];
    resolved[s] = graph.Find(seeds[s]);
    if (!resolved[s]) result.seeds[s].error = "unknown lexeme " + ToString(seeds[s]);
  }

  // Neighborhoods of the seeds, then of everything they list.
  NeighborhoodIndex index;
  auto fill = [&](const std::vector<std::size_t>& wanted) {
    std::vector<NeighborList> lists(wanted.size());
    ParallelFor(wanted.size(), options.threads, [&](std::size_t i) {
      lists[i] = Neighbors(graph, weighting, wanted[i], options.k, options.steps);
    });
    for (std::size_t i = 0; i < wanted.size(); ++i) index.Set(wanted[i], Ranked(lists[i]));
  };
  std::set<std::size_t> first;
  for (const auto& r : resolved) {
    if (r) first.insert(*r);
  }
  fill({first.begin(), first.end()});
  std::set<std::size_t> second;
  for (std::size_t a : first) {
    for (std::size_t n : *index.Find(a)) {
      if (index.Find(n) == nullptr) second.insert(n);
    }
  }
  fill({second.begin(), second.end()});

  std::vector<std::u32string> decoded(graph.lexeme_count());
  std::vector<char> decoded_ready(graph.lexeme_count(), 0);
  for (std::size_t a : first) {
    for (std::size_t n : *index.Find(a)) decoded_ready[n] = 1;
    decoded_ready[a] = 1;
  }
  for (std::size_t b : second) {
    for (std::size_t n : *index.Find(b)) decoded_ready[n] = 1;
  }
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    if (decoded_ready[i]) decoded[i] = utf8::Decode(graph.lexeme(i).lemma);
  }

  std::vector<std::vector<AnalogyQuadruplet>> per_seed(seeds.size());
  ParallelFor(seeds.size(), options.threads, [&](std::size_t s) {
    if (!resolved[s]) return;
    const std::size_t a = *resolved[s];
    std::unordered_map<std::size_t, EditSignature> with_a;
    std::unordered_map<std::uint64_t, EditSignature> pair_cache;
    const auto n = static_cast<std::uint64_t>(graph.lexeme_count());
    auto pair_signature = [&](std::size_t x, std::size_t y) -> const EditSignature& {
      const std::uint64_t key = static_cast<std::uint64_t>(x) * n + y;
      auto it = pair_cache.find(key);
      if (it == pair_cache.end()) {
        it = pair_cache.emplace(key, Signature(decoded[x], decoded[y])).first;
      }
      return it->second;
    };

    CandidateTally tally;
    std::vector<AnalogyQuadruplet>& accepted = per_seed[s];
    CandidateQuadruplets(
        index, a,
        [&](const Candidate& q) {
          ++result.seeds[s].candidates;
          // Equal signatures imply equal length differences.
          const auto diff_ab = static_cast<long>(decoded[q.b].size()) -
                               static_cast<long>(decoded[q.a].size());
          const auto diff_cd = static_cast<long>(decoded[q.d].size()) -
                               static_cast<long>(decoded[q.c].size());
          if (diff_ab != diff_cd) return;
          auto it = with_a.find(q.b);
          if (it == with_a.end()) {
            it = with_a.emplace(q.b, Signature(decoded[q.a], decoded[q.b])).first;
          }
          const EditSignature& ab = it->second;
          if (ab.IsIdentity()) return;
          if (!IsAnalogy(ab, pair_signature(q.c, q.d))) return;
          accepted.push_back(AnalogyQuadruplet{graph.lexeme(q.a), graph.lexeme(q.b),
                                               graph.lexeme(q.c), graph.lexeme(q.d),
                                               weighting.mode});
        },
        &tally);
    result.seeds[s].analogies = accepted.size();
    result.seeds[s].skipped_pairs = tally.skipped_pairs;
  });

  std::set<AnalogyQuadruplet> merged;
  for (auto& list : per_seed) {
    for (auto& q : list) merged.insert(Canonical(std::move(q)));
  }
  result.quadruplets.assign(merged.begin(), merged.end());
  return result;
}

}  // namespace morphonet
