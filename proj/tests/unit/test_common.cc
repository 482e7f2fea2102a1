// tests/unit/test_common.cc

// Copyright 2026 The rrassess Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "rrassess/common/csv.h"
#include "rrassess/common/error.h"
#include "rrassess/common/hash.h"

using namespace rrassess;

TEST_SUITE("common") {

TEST_CASE("fnv1a64 matches published vectors") {
  Fnv1a64 h;
  CHECK(h.Digest() == 0xcbf29ce484222325ULL);
  h.Update("a");
  CHECK(h.Digest() == 0xaf63dc4c8601ec8cULL);
  Fnv1a64 g;
  g.Update("foobar");
  CHECK(g.Digest() == 0x85944171f73967e8ULL);
  CHECK(g.HexDigest() == "85944171f73967e8");
}

TEST_CASE("seed mixing separates streams") {
  CHECK(MixSeed(1, 2) != MixSeed(2, 1));
  CHECK(MixSeed(1, 2) == MixSeed(1, 2));
  CHECK(MixSeed(0, 0) != MixSeed(0, 1));
}

TEST_CASE("csv round trip keeps comments, header and empty fields") {
  CsvTable t;
  t.comments = {"stamp seed=7"};
  t.header = {"a", "b", "c"};
  t.rows = {{"1", "", "x"}, {"2.5", "nan?", ""}};
  const CsvTable back = CsvTable::Parse(t.Serialize());
  CHECK(back.comments == t.comments);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK(back.Column("b") == 1);
  CHECK(back.Column("zz") == -1);
}

TEST_CASE("reals survive formatting") {
  for (double v : {0.0, -1.5, 1.0 / 3.0, 6.02214076e23, 1e-300}) {
    auto parsed = ParseReal(FormatReal(v));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == v);
  }
  CHECK(FormatReal(std::nullopt) == "NA");
  CHECK_FALSE(ParseReal("").has_value());
}

TEST_CASE("missing file is a data error naming the path") {
  try {
    ReadFileBytes("/nonexistent/rrassess/file.bin");
    FAIL("expected DataError");
  } catch (const DataError &e) {
    CHECK(std::string(e.what()).find("/nonexistent/rrassess/file.bin") !=
          std::string::npos);
  }
}

}
