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

#include "morphonet/morphonet.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "morphonet/analogy.hpp"
#include "morphonet/error.hpp"
#include "morphonet/graph.hpp"
#include "morphonet/harvest.hpp"
#include "morphonet/io.hpp"
#include "morphonet/utf8.hpp"
#include "morphonet/walk.hpp"

struct mn_lexicon {
  std::vector<morphonet::Entry> entries;
  std::vector<std::string> names;
};

struct mn_graph {
  morphonet::BipartiteGraph graph;
  std::vector<std::string> names;
  mutable std::string report;
};

struct mn_neighbors {
  std::vector<std::string> words;
  std::vector<double> activations;
  std::string text;
};

struct mn_harvest {
  morphonet::HarvestResult result;
  morphonet::Mode mode = morphonet::Mode::kBoth;
  std::vector<std::array<std::string, 4>> words;
  std::vector<std::string> seed_names;
  std::string text;
  mutable std::string summary;
};

namespace {

using morphonet::Error;
using morphonet::ErrorCode;

thread_local std::string g_last_error;

mn_status Fail(mn_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

mn_status FromCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return MN_ERR_INVALID_INPUT;
    case ErrorCode::kLookup: return MN_ERR_LOOKUP;
    case ErrorCode::kIngest: return MN_ERR_INGEST;
    case ErrorCode::kIo: return MN_ERR_IO;
    case ErrorCode::kVersion: return MN_ERR_VERSION;
    case ErrorCode::kSize: return MN_ERR_SIZE;
  }
  return MN_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
mn_status Guard(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return MN_OK;
  } catch (const Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(MN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(MN_ERR_INTERNAL, e.what());
  }
}

#define MN_REQUIRE(cond, what) \
  if (!(cond)) return Fail(MN_ERR_INVALID_ARGUMENT, what)

morphonet::Mode ToMode(mn_mode mode) {
  switch (mode) {
    case MN_MODE_FORMAL: return morphonet::Mode::kFormalOnly;
    case MN_MODE_SEMANTIC: return morphonet::Mode::kSemanticOnly;
    case MN_MODE_BOTH: break;
  }
  return morphonet::Mode::kBoth;
}

morphonet::BuildParams ToParams(const mn_config& config) {
  return morphonet::BuildParams{config.min_n, config.prune != 0, config.formal_share};
}

std::vector<std::string> Names(const std::vector<morphonet::Lexeme>& lexemes) {
  std::vector<std::string> names;
  names.reserve(lexemes.size());
  for (const auto& l : lexemes) names.push_back(morphonet::ToString(l));
  return names;
}

std::string Percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * fraction);
  return buf;
}

}  // namespace

extern "C" {

const char* mn_version(void) { return "1.0.0"; }

const char* mn_status_string(mn_status status) {
  switch (status) {
    case MN_OK: return "ok";
    case MN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MN_ERR_INVALID_INPUT: return "invalid input";
    case MN_ERR_LOOKUP: return "lookup error";
    case MN_ERR_INGEST: return "ingest error";
    case MN_ERR_IO: return "I/O error";
    case MN_ERR_VERSION: return "snapshot version error";
    case MN_ERR_SIZE: return "size limit exceeded";
    case MN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mn_last_error(void) { return g_last_error.c_str(); }

void mn_config_init(mn_config* config) {
  if (config == nullptr) return;
  config->min_n = 3;
  config->formal_share = 0.5;
  config->steps = 2;
  config->k = 100;
  config->mode = MN_MODE_BOTH;
  config->prune = 1;
  config->threads = 1;
}

mn_status mn_config_validate(const mn_config* config) {
  g_last_error.clear();
  MN_REQUIRE(config != nullptr, "config is null");
  MN_REQUIRE(config->min_n >= 1, "min_n must be >= 1");
  MN_REQUIRE(config->formal_share >= 0.0 && config->formal_share <= 1.0,
             "formal_share must lie in [0, 1]");
  MN_REQUIRE(config->steps >= 2 && config->steps % 2 == 0, "steps must be even and >= 2");
  MN_REQUIRE(config->k >= 1, "k must be >= 1");
  MN_REQUIRE(config->mode == MN_MODE_FORMAL || config->mode == MN_MODE_SEMANTIC ||
                 config->mode == MN_MODE_BOTH,
             "unknown mode");
  return MN_OK;
}

mn_status mn_mode_parse(const char* name, mn_mode* out) {
  g_last_error.clear();
  MN_REQUIRE(name != nullptr && out != nullptr, "null argument");
  const auto mode = morphonet::ParseMode(name);
  if (!mode) {
    return Fail(MN_ERR_INVALID_ARGUMENT,
                std::string("unknown mode '") + name + "' (expected form, sem or form+sem)");
  }
  switch (*mode) {
    case morphonet::Mode::kFormalOnly: *out = MN_MODE_FORMAL; break;
    case morphonet::Mode::kSemanticOnly: *out = MN_MODE_SEMANTIC; break;
    case morphonet::Mode::kBoth: *out = MN_MODE_BOTH; break;
  }
  return MN_OK;
}

const char* mn_mode_name(mn_mode mode) {
  return morphonet::ModeName(ToMode(mode)).data();
}

mn_status mn_lexicon_load(const char* path, mn_lexicon** out) {
  MN_REQUIRE(path != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return Guard([&] {
    auto lexicon = std::make_unique<mn_lexicon>();
    lexicon->entries = morphonet::io::LoadLexicon(path);
    for (const auto& e : lexicon->entries) lexicon->names.push_back(morphonet::ToString(e.lexeme));
    *out = lexicon.release();
  });
}

size_t mn_lexicon_size(const mn_lexicon* lexicon) {
  return lexicon == nullptr ? 0 : lexicon->entries.size();
}

const char* mn_lexicon_entry(const mn_lexicon* lexicon, size_t i) {
  if (lexicon == nullptr || i >= lexicon->names.size()) return nullptr;
  return lexicon->names[i].c_str();
}

void mn_lexicon_free(mn_lexicon* lexicon) { delete lexicon; }

mn_status mn_graph_build(const mn_lexicon* lexicon, const mn_config* config, mn_graph** out) {
  MN_REQUIRE(lexicon != nullptr && config != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return Guard([&] {
    auto graph = std::make_unique<mn_graph>();
    graph->graph = morphonet::BuildGraph(lexicon->entries, ToParams(*config));
    graph->names = Names(graph->graph.lexemes());
    *out = graph.release();
  });
}

mn_status mn_graph_save(const mn_graph* graph, const char* path) {
  MN_REQUIRE(graph != nullptr && path != nullptr, "null argument");
  return Guard([&] { morphonet::io::SaveGraph(graph->graph, std::filesystem::path(path)); });
}

mn_status mn_graph_load(const char* path, mn_graph** out) {
  MN_REQUIRE(path != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return Guard([&] {
    auto graph = std::make_unique<mn_graph>();
    graph->graph = morphonet::io::LoadGraph(std::filesystem::path(path));
    graph->names = Names(graph->graph.lexemes());
    *out = graph.release();
  });
}

mn_status mn_graph_stats(const mn_graph* graph, mn_stats* out) {
  MN_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return Guard([&] {
    const auto s = morphonet::Stats(graph->graph);
    const bool pruned = graph->graph.params().prune;
    auto hapax = [&](std::size_t complete, std::size_t reduced, std::size_t degree_one) {
      if (complete == 0) return 0.0;
      const std::size_t removed = pruned ? complete - reduced : degree_one;
      return static_cast<double>(removed) / static_cast<double>(complete);
    };
    out->lexemes = s.lexemes;
    out->isolated_lexemes = s.isolated_lexemes;
    out->formal_features = s.formal_features;
    out->semantic_features = s.semantic_features;
    out->formal_edges = s.formal_edges;
    out->semantic_edges = s.semantic_edges;
    out->formal_complete = s.complete.formal;
    out->semantic_complete = s.complete.semantic;
    out->formal_hapax = hapax(s.complete.formal, s.formal_features, s.formal_hapax);
    out->semantic_hapax = hapax(s.complete.semantic, s.semantic_features, s.semantic_hapax);
    out->total_hapax = hapax(s.complete.formal + s.complete.semantic,
                             s.formal_features + s.semantic_features,
                             s.formal_hapax + s.semantic_hapax);
  });
}

mn_status mn_graph_params(const mn_graph* graph, mn_config* config) {
  MN_REQUIRE(graph != nullptr && config != nullptr, "null argument");
  const auto& p = graph->graph.params();
  config->min_n = p.min_n;
  config->prune = p.prune ? 1 : 0;
  config->formal_share = p.formal_share;
  return MN_OK;
}

size_t mn_graph_lexeme_count(const mn_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.lexeme_count();
}

const char* mn_graph_lexeme(const mn_graph* graph, size_t i) {
  if (graph == nullptr || i >= graph->names.size()) return nullptr;
  return graph->names[i].c_str();
}

const char* mn_graph_report(const mn_graph* graph) {
  if (graph == nullptr) return "";
  mn_stats s{};
  if (mn_graph_stats(graph, &s) != MN_OK) return "";
  std::ostringstream out;
  out << "features\tcomplete\treduced\thapax\n";
  out << "formal\t" << s.formal_complete << '\t' << s.formal_features << '\t'
      << Percent(s.formal_hapax) << '\n';
  out << "semantic\t" << s.semantic_complete << '\t' << s.semantic_features << '\t'
      << Percent(s.semantic_hapax) << '\n';
  out << "total\t" << (s.formal_complete + s.semantic_complete) << '\t'
      << (s.formal_features + s.semantic_features) << '\t' << Percent(s.total_hapax) << '\n';
  out << "lexemes\t" << s.lexemes << "\t(isolated " << s.isolated_lexemes << ")\n";
  out << "edges\t" << (s.formal_edges + s.semantic_edges) << "\t(formal " << s.formal_edges
      << ", semantic " << s.semantic_edges << ")\n";
  graph->report = out.str();
  return graph->report.c_str();
}

void mn_graph_free(mn_graph* graph) { delete graph; }

mn_status mn_neighbors_compute(const mn_graph* graph, const char* word, const mn_config* config,
                               mn_neighbors** out) {
  MN_REQUIRE(graph != nullptr && word != nullptr && config != nullptr && out != nullptr,
             "null argument");
  *out = nullptr;
  if (mn_status st = mn_config_validate(config); st != MN_OK) return st;
  return Guard([&] {
    const auto& g = graph->graph;
    const auto seed = morphonet::ParseLexeme(word);
    const auto weighting = morphonet::Weighting(g, ToMode(config->mode), config->formal_share);
    const auto list = morphonet::Neighbors(g, weighting, seed,
                                           static_cast<std::size_t>(config->k), config->steps);
    auto result = std::make_unique<mn_neighbors>();
    std::ostringstream text;
    morphonet::io::WriteNeighbors(g, list, text);
    result->text = text.str();
    for (const auto& n : list) {
      result->words.push_back(graph->names[n.lexeme]);
      result->activations.push_back(n.activation);
    }
    *out = result.release();
  });
}

size_t mn_neighbors_count(const mn_neighbors* neighbors) {
  return neighbors == nullptr ? 0 : neighbors->words.size();
}

mn_status mn_neighbors_get(const mn_neighbors* neighbors, size_t i, const char** word,
                           double* activation) {
  MN_REQUIRE(neighbors != nullptr, "null argument");
  MN_REQUIRE(i < neighbors->words.size(), "neighbor index out of range");
  if (word) *word = neighbors->words[i].c_str();
  if (activation) *activation = neighbors->activations[i];
  return MN_OK;
}

const char* mn_neighbors_text(const mn_neighbors* neighbors) {
  return neighbors == nullptr ? "" : neighbors->text.c_str();
}

namespace {

mn_status WriteText(const std::string& text, const char* path) {
  return Guard([&] {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, std::string("cannot open ") + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, std::string("write failed for ") + path);
  });
}

}  // namespace

mn_status mn_neighbors_write(const mn_neighbors* neighbors, const char* path) {
  MN_REQUIRE(neighbors != nullptr && path != nullptr, "null argument");
  return WriteText(neighbors->text, path);
}

void mn_neighbors_free(mn_neighbors* neighbors) { delete neighbors; }

mn_status mn_signature(const char* a, const char* b, char** signature) {
  MN_REQUIRE(a != nullptr && b != nullptr && signature != nullptr, "null argument");
  *signature = nullptr;
  return Guard([&] {
    const std::string text = morphonet::ToString(morphonet::Signature(a, b));
    char* copy = static_cast<char*>(std::malloc(text.size() + 1));
    if (copy == nullptr) throw std::bad_alloc();
    std::memcpy(copy, text.c_str(), text.size() + 1);
    *signature = copy;
  });
}

mn_status mn_is_analogy(const char* a, const char* b, const char* c, const char* d,
                        int* result) {
  MN_REQUIRE(a && b && c && d && result, "null argument");
  return Guard([&] { *result = morphonet::IsAnalogy(a, b, c, d) ? 1 : 0; });
}

mn_status mn_is_analogy_oracle(const char* a, const char* b, const char* c, const char* d,
                               size_t max_len, int* result) {
  MN_REQUIRE(a && b && c && d && result, "null argument");
  return Guard([&] { *result = morphonet::IsAnalogyOracle(a, b, c, d, max_len) ? 1 : 0; });
}

void mn_string_free(char* s) { std::free(s); }

mn_status mn_harvest_run(const mn_graph* graph, const char* const* seeds, size_t seed_count,
                         const mn_config* config, mn_harvest** out) {
  MN_REQUIRE(graph != nullptr && config != nullptr && out != nullptr, "null argument");
  MN_REQUIRE(seed_count == 0 || seeds != nullptr, "seeds is null");
  *out = nullptr;
  for (size_t i = 0; i < seed_count; ++i) MN_REQUIRE(seeds[i] != nullptr, "null seed");
  if (mn_status st = mn_config_validate(config); st != MN_OK) return st;
  return Guard([&] {
    const auto& g = graph->graph;
    auto harvest = std::make_unique<mn_harvest>();
    harvest->mode = ToMode(config->mode);

    // Seeds that fail to parse are kept as reports, like unknown seeds.
    std::vector<morphonet::Lexeme> lexemes;
    std::vector<std::optional<std::string>> parse_errors;
    if (seed_count == 0) {
      lexemes = g.lexemes();
      parse_errors.resize(lexemes.size());
      harvest->seed_names = graph->names;
    } else {
      for (size_t i = 0; i < seed_count; ++i) {
        harvest->seed_names.emplace_back(seeds[i]);
        try {
          lexemes.push_back(morphonet::ParseLexeme(seeds[i]));
          parse_errors.emplace_back();
        } catch (const Error& e) {
          lexemes.push_back(morphonet::Lexeme{"", morphonet::Pos::kX});
          parse_errors.emplace_back(e.what());
        }
      }
    }

    const auto weighting = morphonet::Weighting(g, harvest->mode, config->formal_share);
    morphonet::HarvestOptions options;
    options.k = static_cast<std::size_t>(config->k);
    options.steps = config->steps;
    options.threads = config->threads;
    harvest->result = morphonet::Harvest(g, weighting, lexemes, options);
    for (size_t i = 0; i < parse_errors.size(); ++i) {
      if (parse_errors[i]) harvest->result.seeds[i].error = parse_errors[i];
    }

    std::ostringstream text;
    morphonet::io::WriteQuadruplets(harvest->result.quadruplets, text);
    harvest->text = text.str();
    for (const auto& q : harvest->result.quadruplets) {
      harvest->words.push_back({morphonet::ToString(q.a), morphonet::ToString(q.b),
                                morphonet::ToString(q.c), morphonet::ToString(q.d)});
    }
    *out = harvest.release();
  });
}

size_t mn_harvest_count(const mn_harvest* harvest) {
  return harvest == nullptr ? 0 : harvest->words.size();
}

mn_status mn_harvest_get(const mn_harvest* harvest, size_t i, const char* words[4]) {
  MN_REQUIRE(harvest != nullptr && words != nullptr, "null argument");
  MN_REQUIRE(i < harvest->words.size(), "quadruplet index out of range");
  for (int k = 0; k < 4; ++k) words[k] = harvest->words[i][k].c_str();
  return MN_OK;
}

size_t mn_harvest_seed_count(const mn_harvest* harvest) {
  return harvest == nullptr ? 0 : harvest->result.seeds.size();
}

mn_status mn_harvest_seed(const mn_harvest* harvest, size_t i, const char** seed,
                          size_t* analogies, const char** error) {
  MN_REQUIRE(harvest != nullptr, "null argument");
  MN_REQUIRE(i < harvest->result.seeds.size(), "seed index out of range");
  const auto& report = harvest->result.seeds[i];
  if (seed) *seed = harvest->seed_names[i].c_str();
  if (analogies) *analogies = report.analogies;
  if (error) *error = report.error ? report.error->c_str() : nullptr;
  return MN_OK;
}

size_t mn_harvest_error_count(const mn_harvest* harvest) {
  if (harvest == nullptr) return 0;
  size_t n = 0;
  for (const auto& s : harvest->result.seeds) n += s.error ? 1 : 0;
  return n;
}

const char* mn_harvest_text(const mn_harvest* harvest) {
  return harvest == nullptr ? "" : harvest->text.c_str();
}

mn_status mn_harvest_write(const mn_harvest* harvest, const char* path) {
  MN_REQUIRE(harvest != nullptr && path != nullptr, "null argument");
  return WriteText(harvest->text, path);
}

const char* mn_harvest_summary(const mn_harvest* harvest, int by_length) {
  if (harvest == nullptr) return "";
  std::ostringstream out;
  // correct / errors are left empty for manual review.
  out << "configuration\tanalogies\tcorrect\terrors\n";
  out << morphonet::ModeName(harvest->mode) << '\t' << harvest->result.quadruplets.size()
      << "\t\t\n";
  if (by_length) {
    // Quadruplets are attributed to every seed that produced them, before
    // cross-seed deduplication.
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_len;  // seeds, analogies
    for (const auto& s : harvest->result.seeds) {
      if (s.error) continue;
      auto& row = by_len[morphonet::utf8::Length(s.seed.lemma)];
      ++row.first;
      row.second += s.analogies;
    }
    out << "\nlength\tseeds\tanalogies\tcorrect\terrors\n";
    for (const auto& [len, row] : by_len) {
      out << len << '\t' << row.first << '\t' << row.second << "\t\t\n";
    }
  }
  out << "\nseed\tanalogies\n";
  for (std::size_t i = 0; i < harvest->result.seeds.size(); ++i) {
    const auto& s = harvest->result.seeds[i];
    out << harvest->seed_names[i] << '\t';
    if (s.error) {
      out << "error: " << *s.error;
    } else {
      out << s.analogies;
    }
    out << '\n';
  }
  harvest->summary = out.str();
  return harvest->summary.c_str();
}

void mn_harvest_free(mn_harvest* harvest) { delete harvest; }

}  // extern "C"
