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

#include "morphonet/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "morphonet/error.hpp"

namespace morphonet::io {
namespace {

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::ifstream OpenIn(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  return out;
}

void Finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

Definition ParseDefinition(std::string_view text) {
  Definition definition;
  Segment segment;
  for (std::string_view word : Split(text, ' ')) {
    if (word.empty()) {
      throw Error(ErrorCode::kIngest, "empty token (double space?)");
    }
    if (word == "|") {
      if (segment.empty()) throw Error(ErrorCode::kIngest, "empty definition segment");
      definition.push_back(std::move(segment));
      segment.clear();
      continue;
    }
    try {
      segment.push_back(ParseToken(word));
    } catch (const Error& e) {
      throw Error(ErrorCode::kIngest, e.what());
    }
  }
  if (segment.empty()) throw Error(ErrorCode::kIngest, "empty definition segment");
  definition.push_back(std::move(segment));
  return definition;
}

}  // namespace

std::vector<Entry> ParseLexicon(std::istream& in, const std::string& source) {
  std::vector<Entry> entries;
  std::map<Lexeme, std::size_t> first_line;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = source + ":" + std::to_string(number) + ": ";
    try {
      const auto fields = Split(line, '\t');
      if (fields.size() < 2) {
        throw Error(ErrorCode::kIngest, "expected '<pos> TAB <lemma> [TAB <definition>]...'");
      }
      const auto pos = ParsePos(fields[0]);
      if (!pos) throw Error(ErrorCode::kIngest, "unknown POS tag '" + std::string(fields[0]) + "'");
      Entry entry;
      entry.lexeme = Lexeme{std::string(fields[1]), *pos};
      try {
        ValidateLemma(entry.lexeme.lemma);
      } catch (const Error& e) {
        throw Error(ErrorCode::kIngest, e.what());
      }
      for (std::size_t f = 2; f < fields.size(); ++f) {
        entry.definitions.push_back(ParseDefinition(fields[f]));
      }
      auto [it, inserted] = first_line.emplace(entry.lexeme, number);
      if (!inserted) {
        throw Error(ErrorCode::kIngest, "duplicate lexeme " + ToString(entry.lexeme) +
                                            " (first defined on line " +
                                            std::to_string(it->second) + ")");
      }
      entries.push_back(std::move(entry));
    } catch (const Error& e) {
      throw Error(ErrorCode::kIngest, where + e.what());
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error in " + source);
  return entries;
}

std::vector<Entry> LoadLexicon(const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return ParseLexicon(in, path.string());
}

void WriteLexicon(std::span<const Entry> entries, std::ostream& out) {
  for (const Entry& e : entries) {
    out << PosChar(e.lexeme.pos) << '\t' << e.lexeme.lemma;
    for (const Definition& definition : e.definitions) {
      out << '\t';
      for (std::size_t s = 0; s < definition.size(); ++s) {
        if (s > 0) out << " | ";
        for (std::size_t t = 0; t < definition[s].size(); ++t) {
          if (t > 0) out << ' ';
          out << ToString(definition[s][t]);
        }
      }
    }
    out << '\n';
  }
}

void WriteLexicon(std::span<const Entry> entries, const std::filesystem::path& path) {
  auto out = OpenOut(path);
  WriteLexicon(entries, out);
  Finish(out, path);
}

namespace {

constexpr std::string_view kMagic = "morphonet-snapshot";

std::string HexDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::hex);
  return std::string(buf, end);
}

class SnapshotReader {
 public:
  SnapshotReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  std::string Line() {
    std::string line;
    if (!std::getline(in_, line)) Corrupt("unexpected end of file");
    ++number_;
    return line;
  }

  // Reads "<tag>\t<fields...>" and returns the fields.
  std::vector<std::string> Record(std::string_view tag, std::size_t fields) {
    const std::string line = Line();
    auto parts = Split(line, '\t');
    if (parts.size() != fields + 1 || parts[0] != tag) {
      Corrupt("expected '" + std::string(tag) + "' record");
    }
    return {parts.begin() + 1, parts.end()};
  }

  template <typename T>
  T Number(std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      Corrupt("bad number '" + std::string(text) + "'");
    }
    return value;
  }

  double Hex(std::string_view text) {
    double value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value, std::chars_format::hex);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      Corrupt("bad float '" + std::string(text) + "'");
    }
    return value;
  }

  [[noreturn]] void Corrupt(const std::string& why) const {
    throw Error(ErrorCode::kVersion, "corrupt snapshot " + source_ + " at line " +
                                         std::to_string(number_) + ": " + why);
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t number_ = 0;
};

}  // namespace

void SaveGraph(const BipartiteGraph& graph, std::ostream& out) {
  const BuildParams& p = graph.params();
  out << kMagic << '\t' << kSnapshotVersion << '\n';
  out << "params\t" << p.min_n << '\t' << (p.prune ? 1 : 0) << '\t' << HexDouble(p.formal_share)
      << '\n';
  out << "complete\t" << graph.complete_counts().formal << '\t'
      << graph.complete_counts().semantic << '\n';
  out << "lexemes\t" << graph.lexeme_count() << '\n';
  for (const Lexeme& l : graph.lexemes()) out << ToString(l) << '\n';
  out << "features\t" << graph.feature_count() << '\n';
  for (const Feature& f : graph.features()) out << static_cast<char>(f.kind) << '\t' << f.key << '\n';
  out << "edges\t" << graph.edge_count() << '\n';
  for (std::size_t i = 0; i < graph.lexeme_count(); ++i) {
    const auto row = graph.FeaturesOf(i);
    out << row.size();
    for (auto f : row) out << ' ' << f;
    out << '\n';
  }
  out << "end\n";
}

void SaveGraph(const BipartiteGraph& graph, const std::filesystem::path& path) {
  auto out = OpenOut(path);
  SaveGraph(graph, out);
  Finish(out, path);
}

BipartiteGraph LoadGraph(std::istream& in, const std::string& source) {
  SnapshotReader r(in, source);
  {
    const std::string header = r.Line();
    const auto parts = Split(header, '\t');
    if (parts.size() != 2 || parts[0] != kMagic) r.Corrupt("missing snapshot header");
    const int version = r.Number<int>(parts[1]);
    if (version != kSnapshotVersion) {
      throw Error(ErrorCode::kVersion, source + ": snapshot version " + std::to_string(version) +
                                           " is not supported (this build reads version " +
                                           std::to_string(kSnapshotVersion) + ")");
    }
  }
  BuildParams params;
  {
    const auto f = r.Record("params", 3);
    params.min_n = r.Number<int>(f[0]);
    const int prune = r.Number<int>(f[1]);
    if (prune != 0 && prune != 1) r.Corrupt("prune flag must be 0 or 1");
    params.prune = prune == 1;
    params.formal_share = r.Hex(f[2]);
  }
  FeatureCounts complete;
  {
    const auto f = r.Record("complete", 2);
    complete.formal = r.Number<std::size_t>(f[0]);
    complete.semantic = r.Number<std::size_t>(f[1]);
  }
  std::vector<Lexeme> lexemes(r.Number<std::size_t>(r.Record("lexemes", 1)[0]));
  for (auto& l : lexemes) {
    try {
      l = ParseLexeme(r.Line());
    } catch (const Error& e) {
      r.Corrupt(e.what());
    }
  }
  std::vector<Feature> features(r.Number<std::size_t>(r.Record("features", 1)[0]));
  for (auto& f : features) {
    const std::string line = r.Line();
    if (line.size() < 3 || line[1] != '\t' || (line[0] != 'F' && line[0] != 'S')) {
      r.Corrupt("bad feature record");
    }
    f.kind = static_cast<FeatureKind>(line[0]);
    f.key = line.substr(2);
  }
  const auto edges = r.Number<std::size_t>(r.Record("edges", 1)[0]);
  std::vector<std::vector<BipartiteGraph::Index>> rows(lexemes.size());
  std::size_t seen_edges = 0;
  for (auto& row : rows) {
    const std::string line = r.Line();
    const auto parts = Split(line, ' ');
    const auto count = r.Number<std::size_t>(parts[0]);
    if (parts.size() != count + 1) r.Corrupt("edge count mismatch");
    for (std::size_t k = 1; k < parts.size(); ++k) {
      row.push_back(r.Number<BipartiteGraph::Index>(parts[k]));
    }
    seen_edges += count;
  }
  if (seen_edges != edges) r.Corrupt("total edge count mismatch");
  if (r.Line() != "end") r.Corrupt("missing end marker");
  try {
    return BipartiteGraph::FromTables(std::move(lexemes), std::move(features), rows, params,
                                      complete);
  } catch (const Error& e) {
    r.Corrupt(e.what());
  }
}

BipartiteGraph LoadGraph(const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return LoadGraph(in, path.string());
}

void WriteQuadruplets(std::span<const AnalogyQuadruplet> quads, std::ostream& out) {
  for (const auto& q : quads) {
    out << ToString(q.a) << '\t' << ToString(q.b) << '\t' << ToString(q.c) << '\t'
        << ToString(q.d) << "\t\n";
  }
}

void WriteQuadruplets(std::span<const AnalogyQuadruplet> quads,
                      const std::filesystem::path& path) {
  auto out = OpenOut(path);
  WriteQuadruplets(quads, out);
  Finish(out, path);
}

std::string FormatActivation(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void WriteNeighbors(const BipartiteGraph& graph, const NeighborList& list, std::ostream& out) {
  for (std::size_t r = 0; r < list.size(); ++r) {
    out << (r + 1) << '\t' << ToString(graph.lexeme(list[r].lexeme)) << '\t'
        << FormatActivation(list[r].activation) << '\n';
  }
}

void WriteNeighbors(const BipartiteGraph& graph, const NeighborList& list,
                    const std::filesystem::path& path) {
  auto out = OpenOut(path);
  WriteNeighbors(graph, list, out);
  Finish(out, path);
}

}  // namespace morphonet::io
