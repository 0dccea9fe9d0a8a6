// Copyright 2026 The pgeom Authors
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

#include "pgeom/io.h"

#include <filesystem>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "pgeom/polar.h"

namespace pgeom {
namespace {

TEST(IoTest, PointsRoundTripIgnoringComments) {
  const std::vector<Vec> pts = {{1, 0, 2}, {0, 1, 1}, {0, 0, 1}};
  const std::string text = FormatPoints(pts, "three points");
  EXPECT_EQ(text.rfind("#", 0), 0u);
  EXPECT_EQ(ParsePoints(text), pts);
  EXPECT_EQ(ParsePoints("# c\n\n1:2\n"), (std::vector<Vec>{{1, 2}}));
}

TEST(IoTest, SubspacesRoundTrip) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 3, 3);
  const std::vector<Subspace>& gens = ps->Generators();
  const std::vector<Subspace> some(gens.begin(), gens.begin() + 7);
  EXPECT_EQ(ParseSubspaces(FormatSubspaces(some), 3), some);
}

TEST(IoTest, FormRoundTripKeepsThePolarSpace) {
  for (const char* d : {"W:3:3", "Q-:5:2", "H:3:q2=9", "Q:4:5"}) {
    PolarPtr ps = PolarSpace::Make(ParseDescriptor(d));
    const Form back = ParseForm(FormatForm(ps->form(), d));
    EXPECT_EQ(back.kind, ps->form().kind);
    EXPECT_EQ(back.n, ps->form().n);
    EXPECT_EQ(back.field->q(), ps->field().q());
    EXPECT_EQ(back.gram, ps->form().gram);
    PolarPtr again = PolarSpace::FromForm(back);
    EXPECT_EQ(again->num_points(), ps->num_points()) << d;
    EXPECT_EQ(again->family(), ps->family()) << d;
  }
}

TEST(IoTest, MalformedInputThrows) {
  EXPECT_THROW(ParsePoints("1:x:2\n"), std::invalid_argument);
  EXPECT_THROW(ParseForm("symmetric 3 3\n"), std::invalid_argument);
  EXPECT_THROW(ReadTextFile("/nonexistent/pgeom/file"), std::runtime_error);
}

TEST(IoTest, ContentHashIsStableAndSensitive) {
  EXPECT_EQ(ContentHash("abc"), ContentHash("abc"));
  EXPECT_NE(ContentHash("abc"), ContentHash("abd"));
  EXPECT_EQ(ContentHash("").size(), 16u);
}

TEST(IoTest, FileRoundTrip) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "pgeom_io_test.txt").string();
  WriteTextFile(path, "hello\n");
  EXPECT_EQ(ReadTextFile(path), "hello\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace pgeom
