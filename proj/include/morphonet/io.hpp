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

#ifndef MORPHONET_IO_HPP_
#define MORPHONET_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "morphonet/graph.hpp"
#include "morphonet/harvest.hpp"
#include "morphonet/lexicon.hpp"
#include "morphonet/walk.hpp"

namespace morphonet::io {

// Lexicon files are UTF-8, one headword per line:
//
//   <pos> TAB <lemma> [TAB <definition>]...
//
// A definition is a sequence of segments separated by a standalone "|";
// a segment is a space-separated list of "pos.lemma" tokens. Blank lines and
// lines starting with '#' are ignored. Errors carry the line number.
std::vector<Entry> ParseLexicon(std::istream& in, const std::string& source = "<stream>");
std::vector<Entry> LoadLexicon(const std::filesystem::path& path);

void WriteLexicon(std::span<const Entry> entries, std::ostream& out);
void WriteLexicon(std::span<const Entry> entries, const std::filesystem::path& path);

inline constexpr int kSnapshotVersion = 1;

// Versioned text snapshot. Floating-point parameters are written in
// hexadecimal so that loading restores them bit for bit.
void SaveGraph(const BipartiteGraph& graph, std::ostream& out);
void SaveGraph(const BipartiteGraph& graph, const std::filesystem::path& path);
BipartiteGraph LoadGraph(std::istream& in, const std::string& source = "<stream>");
BipartiteGraph LoadGraph(const std::filesystem::path& path);

// One line per quadruplet: four "pos.lemma" fields and an empty review
// column, all tab-separated.
void WriteQuadruplets(std::span<const AnalogyQuadruplet> quads, std::ostream& out);
void WriteQuadruplets(std::span<const AnalogyQuadruplet> quads,
                      const std::filesystem::path& path);

// One line per neighbor: rank (from 1), "pos.lemma", activation printed with
// 12 significant digits.
void WriteNeighbors(const BipartiteGraph& graph, const NeighborList& list, std::ostream& out);
void WriteNeighbors(const BipartiteGraph& graph, const NeighborList& list,
                    const std::filesystem::path& path);

std::string FormatActivation(double value);

}  // namespace morphonet::io

#endif  // MORPHONET_IO_HPP_
