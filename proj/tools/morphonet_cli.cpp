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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphonet/morphonet.h"

namespace {

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

int Report(mn_status status) {
  std::cerr << "morphonet: " << mn_status_string(status);
  if (*mn_last_error() != '\0') std::cerr << ": " << mn_last_error();
  std::cerr << '\n';
  return kRuntimeError;
}

// Owning wrappers for the C handles.
template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr_) Free(ptr_);
  }
  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using Lexicon = Handle<mn_lexicon, mn_lexicon_free>;
using Graph = Handle<mn_graph, mn_graph_free>;
using NeighborsHandle = Handle<mn_neighbors, mn_neighbors_free>;
using HarvestHandle = Handle<mn_harvest, mn_harvest_free>;

struct GraphSource {
  std::string input;
  std::string snapshot;
  int min_n = 3;
  bool no_prune = false;
  std::optional<double> formal_share;
};

void AddGraphSource(CLI::App* cmd, GraphSource& src) {
  auto* group = cmd->add_option_group("source", "graph source");
  group->add_option("--input", src.input, "lexicon file to build the graph from");
  group->add_option("--snapshot", src.snapshot, "graph snapshot written by 'build'");
  group->require_option(1);
  cmd->add_option("--min-n", src.min_n, "minimum formal n-gram length (with --input)");
  cmd->add_flag("--no-prune", src.no_prune, "keep hapax features (with --input)");
  cmd->add_option("--formal-share", src.formal_share,
                  "share of activation sent to formal features (default: graph's)");
}

// Loads or builds the graph and fills min_n/prune/formal_share of `config`.
mn_status OpenGraph(const GraphSource& src, mn_config& config, Graph& graph) {
  if (!src.snapshot.empty()) {
    if (mn_status st = mn_graph_load(src.snapshot.c_str(), graph.out()); st != MN_OK) return st;
    mn_graph_params(graph.get(), &config);
  } else {
    config.min_n = src.min_n;
    config.prune = src.no_prune ? 0 : 1;
    Lexicon lexicon;
    if (mn_status st = mn_lexicon_load(src.input.c_str(), lexicon.out()); st != MN_OK) return st;
    if (mn_status st = mn_graph_build(lexicon.get(), &config, graph.out()); st != MN_OK) return st;
  }
  if (src.formal_share) config.formal_share = *src.formal_share;
  return MN_OK;
}

bool WriteFile(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "morphonet: cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::vector<std::string> ReadSeeds(const std::string& path, bool& ok) {
  std::vector<std::string> seeds;
  std::ifstream in(path);
  ok = static_cast<bool>(in);
  if (!ok) {
    std::cerr << "morphonet: cannot read seed file " << path << '\n';
    return seeds;
  }
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    seeds.push_back(line);
  }
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivational structure of a lexicon from a lexeme/feature graph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mn_version()));

  mn_config config;
  mn_config_init(&config);
  std::string output;
  std::string mode_name = "form+sem";

  // build
  auto* build = app.add_subcommand("build", "build a graph snapshot and print feature counts");
  std::string build_input;
  std::string build_snapshot;
  bool build_no_prune = false;
  build->add_option("--input", build_input, "lexicon file")->required();
  build->add_option("--snapshot", build_snapshot, "snapshot file to write");
  build->add_option("--min-n", config.min_n, "minimum formal n-gram length")->capture_default_str();
  build->add_option("--formal-share", config.formal_share, "formal share of activation")
      ->capture_default_str();
  build->add_flag("--no-prune", build_no_prune, "keep hapax features");
  build->add_option("--output", output, "write the report here instead of stdout");

  // neighbors
  auto* neighbors = app.add_subcommand("neighbors", "rank the morphological neighbors of a word");
  GraphSource neighbors_src;
  std::string word;
  AddGraphSource(neighbors, neighbors_src);
  neighbors->add_option("word", word, "headword as pos.lemma, e.g. V.fructifier")->required();
  neighbors->add_option("--mode", mode_name, "form, sem or form+sem")->capture_default_str();
  neighbors->add_option("--k", config.k, "number of neighbors")->capture_default_str();
  neighbors->add_option("--steps", config.steps, "propagation steps (even)")->capture_default_str();
  neighbors->add_option("--output", output, "write the ranking here instead of stdout");

  // check
  auto* check = app.add_subcommand("check", "test a formal analogy a:b::c:d");
  std::vector<std::string> words;
  check->add_option("words", words, "a b c d")->required()->expected(4);

  // harvest
  auto* harvest = app.add_subcommand("harvest", "collect analogies from neighborhoods");
  GraphSource harvest_src;
  std::string seeds_path;
  bool by_length = false;
  AddGraphSource(harvest, harvest_src);
  harvest->add_option("--mode", mode_name, "form, sem or form+sem")->capture_default_str();
  harvest->add_option("--k", config.k, "neighbors per lexeme")->capture_default_str();
  harvest->add_option("--steps", config.steps, "propagation steps (even)")->capture_default_str();
  harvest->add_option("--seeds", seeds_path, "file with one pos.lemma per line (default: all)");
  harvest->add_option("--output", output,
                      "quadruplet file (default: stdout, summary then goes to stderr)");
  harvest->add_flag("--by-length", by_length, "add counts per seed length to the summary");
  harvest->add_option("--threads", config.threads, "worker threads, 0 = all cores")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    char* ab = nullptr;
    char* cd = nullptr;
    int verdict = 0;
    mn_status st = mn_signature(words[0].c_str(), words[1].c_str(), &ab);
    if (st == MN_OK) st = mn_signature(words[2].c_str(), words[3].c_str(), &cd);
    if (st == MN_OK) {
      st = mn_is_analogy(words[0].c_str(), words[1].c_str(), words[2].c_str(), words[3].c_str(),
                         &verdict);
    }
    if (st != MN_OK) {
      mn_string_free(ab);
      mn_string_free(cd);
      return Report(st);
    }
    std::cout << words[0] << ':' << words[1] << "::" << words[2] << ':' << words[3] << '\t'
              << (verdict ? "true" : "false") << '\n';
    std::cout << "sigma(" << words[0] << ',' << words[1] << ")\t" << ab << '\n';
    std::cout << "sigma(" << words[2] << ',' << words[3] << ")\t" << cd << '\n';
    if (verdict && words[0] == words[1] && words[2] == words[3]) {
      std::cerr << "morphonet: warning: degenerate analogy (both pairs are identities)\n";
    }
    mn_string_free(ab);
    mn_string_free(cd);
    return 0;
  }

  if (mn_mode_parse(mode_name.c_str(), &config.mode) != MN_OK) {
    std::cerr << "morphonet: " << mn_last_error() << '\n';
    return kUsageError;
  }

  if (*build) {
    config.prune = build_no_prune ? 0 : 1;
    if (mn_config_validate(&config) != MN_OK) {
      std::cerr << "morphonet: " << mn_last_error() << '\n';
      return kUsageError;
    }
    Lexicon lexicon;
    Graph graph;
    if (mn_status st = mn_lexicon_load(build_input.c_str(), lexicon.out()); st != MN_OK) {
      return Report(st);
    }
    if (mn_status st = mn_graph_build(lexicon.get(), &config, graph.out()); st != MN_OK) {
      return Report(st);
    }
    if (!build_snapshot.empty()) {
      if (mn_status st = mn_graph_save(graph.get(), build_snapshot.c_str()); st != MN_OK) {
        return Report(st);
      }
    }
    const char* report = mn_graph_report(graph.get());
    if (output.empty()) {
      std::cout << report;
    } else if (!WriteFile(output, report)) {
      return kRuntimeError;
    }
    return 0;
  }

  GraphSource& src = *neighbors ? neighbors_src : harvest_src;
  {
    mn_config probe = config;
    probe.min_n = src.min_n;
    if (src.formal_share) probe.formal_share = *src.formal_share;
    if (mn_config_validate(&probe) != MN_OK) {
      std::cerr << "morphonet: " << mn_last_error() << '\n';
      return kUsageError;
    }
  }
  Graph graph;
  if (mn_status st = OpenGraph(src, config, graph); st != MN_OK) return Report(st);

  if (*neighbors) {
    NeighborsHandle list;
    if (mn_status st = mn_neighbors_compute(graph.get(), word.c_str(), &config, list.out());
        st != MN_OK) {
      return Report(st);
    }
    if (output.empty()) {
      std::cout << mn_neighbors_text(list.get());
    } else if (mn_status st = mn_neighbors_write(list.get(), output.c_str()); st != MN_OK) {
      return Report(st);
    }
    return 0;
  }

  std::vector<std::string> seeds;
  if (!seeds_path.empty()) {
    bool ok = false;
    seeds = ReadSeeds(seeds_path, ok);
    if (!ok) return kRuntimeError;
    if (seeds.empty()) {
      std::cerr << "morphonet: warning: seed file " << seeds_path << " lists no seeds\n";
    }
  }
  if (!seeds_path.empty() && seeds.empty()) {
    if (!output.empty() && !WriteFile(output, "")) return kRuntimeError;
    return 0;
  }
  std::vector<const char*> seed_ptrs;
  for (const auto& s : seeds) seed_ptrs.push_back(s.c_str());

  HarvestHandle result;
  if (mn_status st = mn_harvest_run(graph.get(), seed_ptrs.data(), seed_ptrs.size(), &config,
                                    result.out());
      st != MN_OK) {
    return Report(st);
  }
  for (size_t i = 0; i < mn_harvest_seed_count(result.get()); ++i) {
    const char* seed = nullptr;
    const char* error = nullptr;
    mn_harvest_seed(result.get(), i, &seed, nullptr, &error);
    if (error) std::cerr << "morphonet: warning: seed " << seed << ": " << error << '\n';
  }
  if (mn_harvest_seed_count(result.get()) > 0 &&
      mn_harvest_error_count(result.get()) == mn_harvest_seed_count(result.get())) {
    std::cerr << "morphonet: warning: no seed could be resolved\n";
  }
  const char* summary = mn_harvest_summary(result.get(), by_length ? 1 : 0);
  if (output.empty()) {
    std::cout << mn_harvest_text(result.get());
    std::cerr << summary;
  } else {
    if (mn_status st = mn_harvest_write(result.get(), output.c_str()); st != MN_OK) {
      return Report(st);
    }
    std::cout << summary;
  }
  return 0;
}
