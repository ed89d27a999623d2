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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Tolerances and time limits are fixed below.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "morphonet/analogy.hpp"
#include "morphonet/graph.hpp"
#include "morphonet/harvest.hpp"
#include "morphonet/io.hpp"
#include "morphonet/walk.hpp"
#include "oracles.hpp"

namespace {

using namespace morphonet;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kRowTolerance = 1e-9;
constexpr double kWalkTolerance = 1e-9;
constexpr double kSplitTolerance = 1e-12;

const std::string kData = MORPHONET_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double Millis(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string Fixed(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string Sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int RunCli(const std::string& args) {
  const std::string command = std::string("'") + MORPHONET_CLI + "' " + args;
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Kinds(const EditScript& script) {
  std::string s;
  for (const auto& op : script) s.push_back(static_cast<char>(op.kind));
  return s;
}

// 1
Outcome SignatureGolden() {
  Outcome o;
  const EditSignature expected{{{EditKind::kInsert, "", "i"},
                                {EditKind::kInsert, "", "n"},
                                {EditKind::kMatch, "@", "@"},
                                {EditKind::kSubstitute, "x", "s"},
                                {EditKind::kInsert, "", "e"},
                                {EditKind::kInsert, "", "m"},
                                {EditKind::kInsert, "", "e"},
                                {EditKind::kInsert, "", "n"},
                                {EditKind::kInsert, "", "t"}}};
  const auto start = Clock::now();
  const auto first = Signature("fructueux", "infructueusement");
  const double first_ms = Millis(start);
  const auto second = Signature("soucieux", "insoucieusement");
  if (!(first == expected)) o.Fail("fructueux: " + ToString(first));
  if (!(second == expected)) o.Fail("soucieux: " + ToString(second));
  if (first_ms >= 1.0) o.Fail("took " + Fixed(first_ms) + " ms");
  if (o.pass) o.detail = ToString(first) + " in " + Fixed(first_ms, 4) + " ms";
  return o;
}

// 2
Outcome LatticeGolden() {
  Outcome o;
  const auto lattice = EditMatrix("fructueux", "infructueusement");
  if (lattice.distance() != 8) o.Fail("final cell " + std::to_string(lattice.distance()));
  const auto path = BacktrackPath(lattice, std::string_view("fructueux"),
                                  std::string_view("infructueusement"));
  std::string ops;
  for (const auto& op : path) {
    ops += static_cast<char>(op.kind);
    if (op.kind == EditKind::kSubstitute) ops += "(" + op.source + ">" + op.target + ")";
  }
  const std::string expected = "IIMMMMMMMMS(x>s)IIIII";
  if (ops != expected) o.Fail("path " + ops);
  std::string inserted;
  for (const auto& op : path) {
    if (op.kind == EditKind::kInsert) inserted += op.target;
  }
  if (inserted != "inement") o.Fail("inserted " + inserted);
  if (o.pass) o.detail = "final cell 8, path " + ops;
  return o;
}

// 3
Outcome AnalogyGolden() {
  Outcome o;
  struct Quad {
    const char *a, *b, *c, *d;
  };
  const std::vector<Quad> golden = {
      {"fructifier", "fructification", "rectifier", "rectification"},
      {"kataba", "maktoubon", "fa3ala", "maf3oulon"},
      {"fructification", "identification", "fructifier", "identifier"},
      {"fructifiant", "fructificateur", "glorifiant", "glorificateur"},
      {"fructueux", "affectueux", "infructuosité", "inaffectuosité"},
      {"frugivore", "végétivore", "frugalement", "végétalement"},
      {"fruitarien", "végétarien", "fruitarisme", "végétarisme"},
      {"fruitier", "laitier", "fruiterie", "laiterie"},
      {"fructueusement", "affectueusement", "fructuosité", "affectuosité"},
      {"fruité", "fruste", "truité", "truste"},
      {"fruit", "frumentaire", "instruit", "instrumentaire"},
      {"fruiterie", "friterie", "effruiter", "effriter"},
  };
  const auto start = Clock::now();
  std::size_t passed = 0;
  for (const auto& q : golden) {
    if (IsAnalogy(q.a, q.b, q.c, q.d)) {
      ++passed;
    } else {
      o.Fail(std::string(q.a) + ":" + q.b + "::" + q.c + ":" + q.d +
             " signatures differ");
    }
  }
  const bool oracle = IsAnalogyOracle("kataba", "maktoubon", "fa3ala", "maf3oulon");
  const auto n = MinFactorizationLength("kataba", "maktoubon", "fa3ala", "maf3oulon");
  const double ms = Millis(start);
  if (!oracle) o.Fail("arabic oracle false");
  if (n != 7u) o.Fail("arabic factorization length " + (n ? std::to_string(*n) : "none"));
  if (ms >= 100.0) o.Fail("took " + Fixed(ms) + " ms");
  o.detail = std::to_string(passed) + "/" + std::to_string(golden.size()) +
             " signature tests true; arabic oracle " + (oracle ? "true" : "false") +
             " at n=" + (n ? std::to_string(*n) : "none") + "; " + Fixed(ms) + " ms" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 4
Outcome Soundness() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string example;
  auto check = [&](const std::string& a, const std::string& b, const std::string& c,
                   const std::string& d) {
    ++checked;
    if (!IsAnalogyOracle(a, b, c, d)) {
      if (violations++ == 0) example = a + ":" + b + "::" + c + ":" + d;
    }
  };

  // Exhaustive up to length 4: group pairs by signature, then every pair of
  // pairs sharing a signature is an analogy.
  const auto words = gen::AllStrings("abc", 4);
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> by_signature;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      by_signature[ToString(Signature(words[i], words[j]))].push_back({i, j});
    }
  }
  std::size_t exhaustive = 0;
  for (const auto& [sig, pairs] : by_signature) {
    for (const auto& [a, b] : pairs) {
      for (const auto& [c, d] : pairs) {
        check(words[a], words[b], words[c], words[d]);
        ++exhaustive;
      }
    }
  }

  // 10 000 random quadruplets up to length 8: half uniform, half built from
  // a random common factorization so that many of them are analogies.
  gen::Rng rng(20261016);
  std::size_t random_true = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string w[4];
    if (trial % 2 == 0) {
      for (auto& s : w) s = gen::RandomString(rng, "abc", 0, 8);
    } else {
      const std::size_t factors = rng() % 5 + 1;
      for (std::size_t f = 0; f < factors; ++f) {
        const std::string u = gen::RandomString(rng, "abc", 0, 2);
        const std::string v = gen::RandomString(rng, "abc", 0, 2);
        if (rng() % 2) {
          w[0] += u, w[1] += u, w[2] += v, w[3] += v;
        } else {
          w[0] += u, w[1] += v, w[2] += u, w[3] += v;
        }
      }
      bool fits = true;
      for (auto& s : w) fits = fits && s.size() <= 8;
      if (!fits) {
        --trial;
        continue;
      }
    }
    if (IsAnalogy(w[0], w[1], w[2], w[3])) {
      ++random_true;
      check(w[0], w[1], w[2], w[3]);
    }
  }
  const double s = Millis(start) / 1000.0;
  if (violations > 0) o.Fail(std::to_string(violations) + " violations, e.g. " + example);
  if (s >= 300.0) o.Fail("took " + Fixed(s, 1) + " s");
  if (o.pass) {
    o.detail = std::to_string(exhaustive) + " exhaustive and " + std::to_string(random_true) +
               " random signature analogies confirmed, 0 violations, " + Fixed(s, 1) + " s";
  }
  return o;
}

bool HasOutgoingMass(const BipartiteGraph& g, const EdgeWeighting& w, std::size_t i) {
  for (std::size_t k = 0; k < g.FeaturesOf(i).size(); ++k) {
    if (w.lexeme_weights[g.LexemeRowBegin(i) + k] > 0) return true;
  }
  return false;
}

// 5
Outcome Stochasticity() {
  Outcome o;
  gen::Rng rng(505);
  std::size_t rows = 0;
  std::size_t walks = 0;
  double worst_row = 0.0;
  double worst_walk = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen::RandomGraph(rng, 200);
    for (Mode mode : {Mode::kFormalOnly, Mode::kSemanticOnly, Mode::kBoth}) {
      const auto w = Weighting(g, mode);
      const auto m = oracle::Densify(g, w);
      for (const auto& row : m) {
        double sum = 0.0;
        for (double x : row) sum += x;
        if (sum == 0.0) continue;
        ++rows;
        worst_row = std::max(worst_row, std::abs(sum - 1.0));
      }
      for (std::size_t seed = 0; seed < g.lexeme_count(); ++seed) {
        if (!HasOutgoingMass(g, w, seed)) continue;
        for (int steps : {1, 2, 3, 4}) {
          const auto a = Spread(g, w, seed, steps);
          for (const auto& [v, mass] : a.mass) {
            if ((v < g.lexeme_count()) != (steps % 2 == 0)) {
              o.Fail("parity broken at step " + std::to_string(steps));
            }
          }
          if (steps == 2) {
            ++walks;
            worst_walk = std::max(worst_walk, std::abs(a.Total() - 1.0));
          }
        }
      }
    }
  }
  if (worst_row > kRowTolerance) o.Fail("row sum off by " + Sci(worst_row));
  if (worst_walk > kRowTolerance) o.Fail("activation sum off by " + Sci(worst_walk));
  if (o.pass) {
    o.detail = std::to_string(rows) + " rows, max |sum-1| " + Sci(worst_row) + "; " +
               std::to_string(walks) + " walks, max |total-1| " + Sci(worst_walk) +
               "; parity exact";
  }
  return o;
}

// 6
Outcome WalkEquivalence() {
  Outcome o;
  const auto start = Clock::now();
  gen::Rng rng(606);
  double worst = 0.0;
  std::size_t seeds = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen::RandomGraph(rng, 200);
    const Mode mode = static_cast<Mode>(trial % 3);
    const auto w = Weighting(g, mode);
    const auto m = oracle::DenseTransition(g, mode, 0.5);
    for (std::size_t seed = 0; seed < g.lexeme_count(); ++seed) {
      const auto sparse = Spread(g, w, seed, 2);
      const auto dense = oracle::DenseSpread(m, seed, 2);
      for (std::size_t v = 0; v < dense.size(); ++v) {
        worst = std::max(worst, std::abs(sparse.At(v) - dense[v]));
      }
      ++seeds;
    }
  }
  const double s = Millis(start) / 1000.0;
  if (worst > kWalkTolerance) o.Fail("max abs difference " + Sci(worst));
  if (s >= 30.0) o.Fail("took " + Fixed(s, 1) + " s");
  if (o.pass) {
    o.detail = std::to_string(seeds) + " seeds, max abs difference " + Sci(worst) +
               ", " + Fixed(s, 2) + " s";
  }
  return o;
}

// 7
Outcome SplitSemantics() {
  Outcome o;
  std::size_t both = 0;
  std::size_t single = 0;
  double worst = 0.0;
  auto check = [&](const BipartiteGraph& g) {
    const auto w = Weighting(g, Mode::kBoth);
    for (std::size_t i = 0; i < g.lexeme_count(); ++i) {
      const auto a = Spread(g, w, i, 1);
      double formal = 0.0;
      double semantic = 0.0;
      for (const auto& [v, mass] : a.mass) {
        const auto kind = g.feature(v - g.lexeme_count()).kind;
        (kind == FeatureKind::kFormal ? formal : semantic) += mass;
      }
      bool has_formal = false;
      bool has_semantic = false;
      for (auto f : g.FeaturesOf(i)) {
        (g.feature(f).kind == FeatureKind::kFormal ? has_formal : has_semantic) = true;
      }
      if (has_formal && has_semantic) {
        ++both;
        worst = std::max({worst, std::abs(formal - 0.5), std::abs(semantic - 0.5)});
      } else if (has_formal || has_semantic) {
        ++single;
        worst = std::max(worst, std::abs(formal + semantic - 1.0));
        if ((has_formal ? semantic : formal) != 0.0) o.Fail("mass on absent kind");
      }
    }
  };
  check(BuildGraph(io::LoadLexicon(kData + "/synthetic50.lex"), BuildParams{}));
  check(BuildGraph(io::LoadLexicon(kData + "/planted12.lex"), BuildParams{}));
  gen::Rng rng(707);
  for (int trial = 0; trial < 50; ++trial) check(gen::RandomGraph(rng, 200));
  if (worst > kSplitTolerance) o.Fail("split off by " + Sci(worst));
  if (both == 0 || single == 0) o.Fail("missing lexeme shapes");
  if (o.pass) {
    o.detail = std::to_string(both) + " two-kind and " + std::to_string(single) +
               " one-kind lexemes, max error " + Sci(worst);
  }
  return o;
}

// 8
Outcome HapaxPruning() {
  Outcome o;
  gen::Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen::RandomGraph(rng, 200);
    const auto p = PruneHapax(g);
    for (std::size_t f = 0; f < p.feature_count(); ++f) {
      if (p.FeatureDegree(f) < 2) o.Fail("degree < 2 after pruning");
    }
    if (!(PruneHapax(p) == p)) o.Fail("not idempotent");
  }
  const auto entries = io::LoadLexicon(kData + "/synthetic50.lex");
  std::map<std::string, std::size_t> formal, semantic;
  for (const auto& e : entries) {
    for (const auto& k : oracle::FormalNgrams(e.lexeme.lemma, 3)) ++formal[k];
    for (const auto& k : oracle::SemanticNgrams(e.definitions)) ++semantic[k];
  }
  std::size_t formal_kept = 0;
  std::size_t semantic_kept = 0;
  for (const auto& [k, n] : formal) formal_kept += n >= 2;
  for (const auto& [k, n] : semantic) semantic_kept += n >= 2;
  const auto g = BuildGraph(entries, BuildParams{});
  const auto s = Stats(g);
  if (s.complete.formal != formal.size() || s.complete.semantic != semantic.size()) {
    o.Fail("complete counts differ");
  }
  if (s.formal_features != formal_kept || s.semantic_features != semantic_kept) {
    o.Fail("reduced counts differ");
  }
  for (std::size_t f = 0; f < g.feature_count(); ++f) {
    if (g.FeatureDegree(f) < 2) o.Fail("synthetic graph keeps a hapax");
  }
  if (o.pass) {
    o.detail = "100 random graphs; synthetic50 formal " + std::to_string(formal.size()) + "->" +
               std::to_string(formal_kept) + ", semantic " + std::to_string(semantic.size()) +
               "->" + std::to_string(semantic_kept) + " as enumerated";
  }
  return o;
}

// 9
Outcome EndToEndHarvest(const fs::path& dir) {
  Outcome o;
  const auto out = dir / "planted.tsv";
  const auto start = Clock::now();
  const int code = RunCli("harvest --input '" + kData + "/planted12.lex' --k 12 --mode form+sem" +
                          " --output '" + out.string() + "' >/dev/null 2>&1");
  const double s = Millis(start) / 1000.0;
  if (code != 0) {
    o.Fail("exit code " + std::to_string(code));
    return o;
  }
  const auto g = BuildGraph(io::LoadLexicon(kData + "/planted12.lex"), BuildParams{});
  const auto expected = oracle::ExhaustiveHarvest(g, Mode::kBoth, 0.5, 12, g.lexemes());
  std::ostringstream text;
  io::WriteQuadruplets(std::vector<AnalogyQuadruplet>(expected.begin(), expected.end()), text);
  const std::string got = ReadFile(out);
  if (got != text.str()) o.Fail("output differs from exhaustive search");
  const std::set<std::string> grid{"V.fructifier", "N.fructification", "V.rectifier",
                                   "N.rectification"};
  std::set<std::string> used;
  std::istringstream lines(got);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    std::istringstream fields(line);
    std::string word;
    for (int k = 0; k < 4 && std::getline(fields, word, '\t'); ++k) used.insert(word);
  }
  if (used != grid) o.Fail("output is not the planted grid");
  if (got.find("V.fructifier\tN.fructification\tV.rectifier\tN.rectification\t\n") ==
      std::string::npos) {
    o.Fail("headline analogy missing");
  }
  if (s >= 10.0) o.Fail("took " + Fixed(s, 2) + " s");
  if (RunCli("harvest --input '" + kData + "/synthetic50.lex' --k 30 --by-length --output '" +
             (dir / "by-length.tsv").string() + "' >/dev/null 2>&1") != 0) {
    o.Fail("--by-length run failed");
  }
  if (o.pass) {
    o.detail = std::to_string(count) + " quadruplets over the 4 grid words, equal to exhaustive " +
               "search, " + Fixed(s * 1000.0, 1) + " ms";
  }
  return o;
}

// 10
Outcome Determinism(const fs::path& dir) {
  Outcome o;
  std::vector<std::string> neighbors, harvests;
  for (int i = 0; i < 3; ++i) {
    const auto n = dir / ("n" + std::to_string(i));
    const auto h = dir / ("h" + std::to_string(i));
    const std::string threads = std::to_string(i + 1);
    if (RunCli("neighbors V.fructifier --input '" + kData + "/fructifier.lex' --k 40 --output '" +
               n.string() + "' >/dev/null 2>&1") != 0 ||
        RunCli("harvest --input '" + kData + "/synthetic50.lex' --k 40 --threads " + threads +
               " --output '" + h.string() + "' >/dev/null 2>&1") != 0) {
      o.Fail("run failed");
      return o;
    }
    neighbors.push_back(ReadFile(n));
    harvests.push_back(ReadFile(h));
  }
  for (int i = 1; i < 3; ++i) {
    if (neighbors[i] != neighbors[0]) o.Fail("neighbors output differs");
    if (harvests[i] != harvests[0]) o.Fail("harvest output differs");
  }
  if (harvests[0].empty()) o.Fail("harvest output empty");
  if (o.pass) o.detail = "3 runs each of neighbors and harvest (1-3 threads) byte-identical";
  return o;
}

}  // namespace

int main() {
  std::string pattern = (fs::temp_directory_path() / "morphonet-acceptance-XXXXXX").string();
  const fs::path dir = mkdtemp(pattern.data());

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"signature golden", SignatureGolden},
      {"edit lattice golden", LatticeGolden},
      {"analogy golden suite", AnalogyGolden},
      {"soundness against factorization oracle", Soundness},
      {"stochasticity and conservation", Stochasticity},
      {"walk equals dense matrix power", WalkEquivalence},
      {"formal/semantic split", SplitSemantics},
      {"hapax pruning", HapaxPruning},
      {"end-to-end planted harvest", [&] { return EndToEndHarvest(dir); }},
      {"determinism", [&] { return Determinism(dir); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  fs::remove_all(dir);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
