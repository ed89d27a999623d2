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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "morphonet/analogy.hpp"
#include "morphonet/error.hpp"
#include "morphonet/utf8.hpp"
#include "oracles.hpp"

namespace morphonet {
namespace {

std::string Kinds(const EditScript& script) {
  std::string s;
  for (const auto& op : script) s.push_back(static_cast<char>(op.kind));
  return s;
}

EditScript Path(const std::string& a, const std::string& b) {
  return BacktrackPath(EditMatrix(a, b), a, b);
}

EditOp Ins(const char* t) { return {EditKind::kInsert, "", t}; }
EditOp Sub(const char* s, const char* t) { return {EditKind::kSubstitute, s, t}; }
EditOp Match(const char* s) { return {EditKind::kMatch, s, s}; }

const EditSignature kFructueuxSignature{{Ins("i"), Ins("n"), Match("@"), Sub("x", "s"), Ins("e"),
                                         Ins("m"), Ins("e"), Ins("n"), Ins("t")}};

TEST(EditMatrix, FructueuxFinalCell) {
  const auto m = EditMatrix("fructueux", "infructueusement");
  EXPECT_EQ(m.rows(), 10u);
  EXPECT_EQ(m.cols(), 17u);
  EXPECT_EQ(m.distance(), 8);
}

TEST(EditMatrix, TrivialShapes) {
  const auto same = EditMatrix("abcd", "abcd");
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(same.at(i, i), 0);
  EXPECT_EQ(EditMatrix("", "xyz").distance(), 3);
  EXPECT_EQ(EditMatrix("xyz", "").distance(), 3);
  EXPECT_EQ(EditMatrix("", "").distance(), 0);
}

TEST(EditMatrix, EveryCellIsPrefixDistance) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = utf8::Decode(gen::RandomString(rng, "abc", 0, 7));
    const auto b = utf8::Decode(gen::RandomString(rng, "abc", 0, 7));
    const auto m = EditMatrix(a, b);
    for (std::size_t i = 0; i <= a.size(); ++i) {
      for (std::size_t j = 0; j <= b.size(); ++j) {
        ASSERT_EQ(static_cast<std::size_t>(m.at(i, j)),
                  oracle::Levenshtein(a.substr(0, i), b.substr(0, j)));
      }
    }
  }
}

TEST(Backtrack, FructueuxSequence) {
  const auto script = Path("fructueux", "infructueusement");
  EXPECT_EQ(Kinds(script), "IIMMMMMMMMSIIIII");
  const EditScript expected{Ins("i"),  Ins("n"),  Match("f"), Match("r"), Match("u"), Match("c"),
                            Match("t"), Match("u"), Match("e"), Match("u"), Sub("x", "s"),
                            Ins("e"),  Ins("m"),  Ins("e"),  Ins("n"),  Ins("t")};
  EXPECT_EQ(script, expected);
  EXPECT_EQ(Cost(script), 8u);
}

TEST(Backtrack, SmallCases) {
  EXPECT_EQ(Kinds(Path("abc", "abd")), "MMS");
  EXPECT_EQ(oracle::PreferredAlignment(U"abc", U"abd"), "MMS");
  EXPECT_EQ(Kinds(Path("abc", "abc")), "MMM");
  EXPECT_EQ(Kinds(Path("", "ab")), "II");
  EXPECT_EQ(Kinds(Path("ab", "")), "DD");
  EXPECT_TRUE(Path("", "").empty());
}

TEST(Backtrack, AgreesWithExhaustiveAlignmentSearch) {
  for (const auto& a : gen::AllStrings("ab", 4)) {
    for (const auto& b : gen::AllStrings("ab", 4)) {
      ASSERT_EQ(Kinds(Path(a, b)), oracle::PreferredAlignment(utf8::Decode(a), utf8::Decode(b)))
          << a << " -> " << b;
    }
  }
  gen::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = gen::RandomString(rng, "abc", 0, 6);
    const auto b = gen::RandomString(rng, "abc", 0, 6);
    ASSERT_EQ(Kinds(Path(a, b)), oracle::PreferredAlignment(utf8::Decode(a), utf8::Decode(b)));
  }
}

TEST(Backtrack, ScriptReconstructsBothStringsAtMinimalCost) {
  gen::Rng rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = gen::RandomString(rng, "abcd", 0, 10);
    const auto b = gen::RandomString(rng, "abcd", 0, 10);
    const auto script = Path(a, b);
    std::string source, target;
    for (const auto& op : script) {
      source += op.source;
      target += op.target;
      switch (op.kind) {
        case EditKind::kMatch: EXPECT_EQ(op.source, op.target); break;
        case EditKind::kSubstitute: EXPECT_NE(op.source, op.target); break;
        case EditKind::kInsert: EXPECT_TRUE(op.source.empty()); break;
        case EditKind::kDelete: EXPECT_TRUE(op.target.empty()); break;
      }
    }
    EXPECT_EQ(source, a);
    EXPECT_EQ(target, b);
    EXPECT_EQ(Cost(script), oracle::Levenshtein(utf8::Decode(a), utf8::Decode(b)));
  }
}

TEST(Backtrack, AccentsAreSingleCharacters) {
  const auto script = Path("fruité", "fruite");
  EXPECT_EQ(Kinds(script), "MMMMMS");
  EXPECT_EQ(script.back(), Sub("é", "e"));
}

TEST(Simplify, MergesMatchRuns) {
  const auto s = Simplify(Path("fructueux", "infructueusement"));
  const EditScript expected{Ins("i"),          Ins("n"),  Match("fructueu"), Sub("x", "s"),
                            Ins("e"),          Ins("m"),  Ins("e"),          Ins("n"),
                            Ins("t")};
  EXPECT_EQ(s, expected);
  EXPECT_EQ(Simplify(Path("abc", "abc")), (EditScript{Match("abc")}));
  const auto no_match = Path("ab", "cd");
  EXPECT_EQ(Simplify(no_match), no_match);
}

TEST(Simplify, IdempotentAndCostPreserving) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = gen::RandomString(rng, "abc", 0, 9);
    const auto b = gen::RandomString(rng, "abc", 0, 9);
    const auto script = Path(a, b);
    const auto once = Simplify(script);
    EXPECT_EQ(Simplify(once), once);
    EXPECT_EQ(Cost(once), Cost(script));
    for (std::size_t i = 1; i < once.size(); ++i) {
      EXPECT_FALSE(once[i].kind == EditKind::kMatch && once[i - 1].kind == EditKind::kMatch);
    }
  }
}

TEST(Signature, FructueuxAndSoucieux) {
  EXPECT_EQ(Signature("fructueux", "infructueusement"), kFructueuxSignature);
  EXPECT_EQ(Signature("soucieux", "insoucieusement"), kFructueuxSignature);
  EXPECT_EQ(ToString(kFructueuxSignature),
            "((I,ε,i), (I,ε,n), (M,@,@), (S,x,s), (I,ε,e), (I,ε,m), (I,ε,e), (I,ε,n), (I,ε,t))");
}

TEST(Signature, Identity) {
  const auto s = Signature("abc", "abc");
  EXPECT_EQ(s, (EditSignature{{Match("@")}}));
  EXPECT_TRUE(s.IsIdentity());
  EXPECT_FALSE(kFructueuxSignature.IsIdentity());
}

struct Quad {
  const char *a, *b, *c, *d;
};

TEST(IsAnalogy, GoldenQuadruplets) {
  const std::vector<Quad> golden = {
      {"fructifier", "fructification", "rectifier", "rectification"},
      {"fructification", "identification", "fructifier", "identifier"},
      {"fructifiant", "fructificateur", "glorifiant", "glorificateur"},
      {"frugivore", "végétivore", "frugalement", "végétalement"},
      {"fruitarien", "végétarien", "fruitarisme", "végétarisme"},
      {"fruitier", "laitier", "fruiterie", "laiterie"},
      {"fructueusement", "affectueusement", "fructuosité", "affectuosité"},
      {"fruité", "fruste", "truité", "truste"},
      {"fruit", "frumentaire", "instruit", "instrumentaire"},
      {"fruiterie", "friterie", "effruiter", "effriter"},
      {"fructueux", "infructueusement", "soucieux", "insoucieusement"},
  };
  for (const auto& q : golden) {
    EXPECT_TRUE(IsAnalogy(q.a, q.b, q.c, q.d)) << q.a << ":" << q.b << "::" << q.c << ":" << q.d;
    EXPECT_TRUE(IsAnalogyOracle(q.a, q.b, q.c, q.d, 16));
  }
}

TEST(IsAnalogy, FructueuxAffectueuxWithMeansExchanged) {
  EXPECT_TRUE(IsAnalogy("fructueux", "infructuosité", "affectueux", "inaffectuosité"));
  EXPECT_TRUE(IsAnalogyOracle("fructueux", "affectueux", "infructuosité", "inaffectuosité", 16));
}

TEST(IsAnalogy, DegenerateAndSymmetric) {
  EXPECT_TRUE(IsAnalogy("abc", "abc", "xy", "xy"));
  gen::Rng rng(29);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string w[4];
    for (auto& s : w) s = gen::RandomString(rng, "abc", 0, 6);
    EXPECT_TRUE(IsAnalogy(w[0], w[1], w[0], w[1]));
    EXPECT_EQ(IsAnalogy(w[0], w[1], w[2], w[3]), IsAnalogy(w[2], w[3], w[0], w[1]));
    EXPECT_EQ(IsAnalogy(w[0], w[1], w[2], w[3]),
              IsAnalogy(Signature(w[0], w[1]), Signature(w[2], w[3])));
  }
}

TEST(Oracle, ArabicFactorizationOfLengthSeven) {
  EXPECT_TRUE(IsAnalogyOracle("kataba", "maktoubon", "fa3ala", "maf3oulon"));
  EXPECT_EQ(MinFactorizationLength("kataba", "maktoubon", "fa3ala", "maf3oulon"), 7u);
  const std::vector<std::string> a{"", "k", "a", "t", "a", "b", "a"};
  const std::vector<std::string> b{"ma", "k", "", "t", "ou", "b", "on"};
  const std::vector<std::string> c{"", "f", "a", "3", "a", "l", "a"};
  const std::vector<std::string> d{"ma", "f", "", "3", "ou", "l", "on"};
  EXPECT_TRUE(SatisfiesFactorization(a, b, c, d));
  auto broken = d;
  broken[0] = "m";
  broken[1] = "af";
  EXPECT_FALSE(SatisfiesFactorization(a, b, c, broken));
}

TEST(Oracle, SmallCases) {
  EXPECT_FALSE(IsAnalogyOracle("ab", "ba", "x", "x"));
  EXPECT_TRUE(IsAnalogyOracle("", "", "", ""));
  for (const auto& x : gen::AllStrings("ab", 3)) {
    for (const auto& y : gen::AllStrings("ab", 3)) EXPECT_TRUE(IsAnalogyOracle(x, y, x, y));
  }
  try {
    IsAnalogyOracle("abcdefghijklm", "a", "b", "c");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSize);
  }
}

TEST(Oracle, MinLengthExistsExactlyWhenOracleHolds) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string w[4];
    for (auto& s : w) s = gen::RandomString(rng, "ab", 0, 4);
    EXPECT_EQ(IsAnalogyOracle(w[0], w[1], w[2], w[3]),
              MinFactorizationLength(w[0], w[1], w[2], w[3]).has_value());
  }
}

TEST(Soundness, SignatureImpliesFactorizationShortStrings) {
  const auto words = gen::AllStrings("ab", 3);
  std::size_t analogies = 0;
  for (const auto& a : words) {
    for (const auto& b : words) {
      const auto ab = Signature(a, b);
      for (const auto& c : words) {
        for (const auto& d : words) {
          if (!IsAnalogy(ab, Signature(c, d))) continue;
          ++analogies;
          ASSERT_TRUE(IsAnalogyOracle(a, b, c, d)) << a << ":" << b << "::" << c << ":" << d;
        }
      }
    }
  }
  EXPECT_GT(analogies, 0u);
}

}  // namespace
}  // namespace morphonet
