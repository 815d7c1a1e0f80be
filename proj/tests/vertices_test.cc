// Copyright 2026 The Spectravert Authors
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

#include "spectravert/vertices.h"

#include <gtest/gtest.h>

#include <cstdlib>

#include "test_util.h"

namespace spectravert {
namespace {

using testing::count_stable_sets;
using testing::count_vertex_covers;
using testing::rat;

TEST(EnumerateTest, PathStableSets) {
  const VertexCatalog cat = enumerate_vertices(make_family(FamilyKind::kLiftedTh, Graph::path(3)));
  EXPECT_TRUE(cat.match);
  ASSERT_EQ(cat.vertices.size(), 5U);
  EXPECT_EQ(cat.vertices[4].object, CombinatorialObject::of_subset({0, 2}));
  for (const auto& v : cat.vertices) {
    EXPECT_EQ(rank(v.matrix), 1U);
    EXPECT_TRUE(v.report.is_vertex);
  }
}

TEST(EnumerateTest, ElliptopeOnThreeLabels) {
  const VertexCatalog cat = enumerate_vertices(make_family(FamilyKind::kElliptope, Graph::empty(3)));
  EXPECT_TRUE(cat.match);
  EXPECT_EQ(cat.vertices.size(), 4U);
  for (const auto& v : cat.vertices) EXPECT_EQ(v.object.subset.front(), 0U);
}

TEST(EnumerateTest, Theta3PathHasOnlyTheMiddleVertex) {
  const VertexCatalog cat = enumerate_vertices(make_family(FamilyKind::kTheta3, Graph::path(3)));
  EXPECT_TRUE(cat.match);
  ASSERT_EQ(cat.vertices.size(), 1U);
  EXPECT_EQ(cat.vertices[0].object, CombinatorialObject::of_basis(1));
}

TEST(EnumerateTest, CountsAgainstBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      const std::size_t stable = count_stable_sets(n, g.edges());
      const std::size_t covers = count_vertex_covers(n, g.edges());
      EXPECT_EQ(enumerate_vertices(make_family(FamilyKind::kLiftedTh, g)).vertices.size(), stable);
      EXPECT_EQ(enumerate_vertices(make_family(FamilyKind::kKgVc, g)).vertices.size(), covers);
      std::size_t full_degree = 0;
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t deg = 0;
        for (std::size_t j = 0; j < n; ++j) deg += j != k && g.has_edge(j, k);
        full_degree += deg == n - 1;
      }
      EXPECT_EQ(enumerate_vertices(make_family(FamilyKind::kTheta3, g)).vertices.size(), full_degree);
    }
    const Graph e = Graph::empty(n);
    EXPECT_EQ(enumerate_vertices(make_family(FamilyKind::kElliptope, e)).vertices.size(), std::size_t{1} << (n - 1));
    EXPECT_EQ(enumerate_vertices(make_family(FamilyKind::kBq, e)).vertices.size(), std::size_t{1} << n);
  }
}

TEST(EnumerateTest, GateIsEnforced) {
  ::setenv("SPECTRAVERT_GATE", "2", 1);
  EXPECT_THROW(enumerate_vertices(make_family(FamilyKind::kBq, Graph::empty(3))), InvalidArgument);
  ::unsetenv("SPECTRAVERT_GATE");
}

TEST(NegativeWitnessTest, Elliptope2MidpointIsIdentity) {
  const auto ws = negative_witnesses(make_family(FamilyKind::kElliptope, Graph::empty(2)));
  ASSERT_EQ(ws.size(), 2U);
  EXPECT_EQ(ws[1].description, "slater");
  for (const auto& w : ws) {
    EXPECT_EQ(w.matrix, SymMat::identity(Labels::range(2)));
    EXPECT_TRUE(w.rejected);
    EXPECT_EQ(w.report.dim_direct, 2U);
  }
  const auto ws3 = negative_witnesses(make_family(FamilyKind::kElliptope, Graph::empty(3)));
  ASSERT_EQ(ws3.size(), 7U);
  for (const auto& w : ws3) EXPECT_TRUE(w.rejected) << w.description;
}

TEST(NegativeWitnessTest, LiftedK2AndBqSingleVertex) {
  const auto k2 = negative_witnesses(make_family(FamilyKind::kLiftedTh, Graph::complete(2)));
  ASSERT_FALSE(k2.empty());
  EXPECT_EQ(k2[0].description, "midpoint {} {1}");
  EXPECT_FALSE(k2[0].report.is_vertex);
  EXPECT_TRUE(k2[0].rejected);
  const auto bq1 = negative_witnesses(make_family(FamilyKind::kBq, Graph::empty(1)));
  ASSERT_EQ(bq1.size(), 2U);
  EXPECT_TRUE(bq1[0].rejected);
  EXPECT_EQ(bq1[0].matrix, SymMat::from_mat(Mat{{1, rat(1, 2)}, {rat(1, 2), rat(1, 2)}}, bq1[0].matrix.labels()));
}

TEST(SuiteTest, LiftedThOnTwoVertices) {
  SuiteOptions o;
  o.n_max = 2;
  o.families = {FamilyKind::kLiftedTh};
  const SuiteReport r = verify_suite(o);
  ASSERT_EQ(r.cells.size(), 3U);
  EXPECT_EQ(r.cells[1].predicted, 4U);
  EXPECT_EQ(r.cells[2].predicted, 3U);
  EXPECT_EQ(r.failures, 0U);
}

TEST(SuiteTest, SingleVertexEverywhere) {
  SuiteOptions o;
  o.n_max = 1;
  const SuiteReport r = verify_suite(o);
  EXPECT_EQ(r.failures, 0U);
  for (const auto& c : r.cells) {
    EXPECT_TRUE(c.match) << c.family;
    EXPECT_EQ(c.found, c.predicted);
    EXPECT_GE(c.found, 1U);
    EXPECT_LE(c.found, 2U);
  }
}

TEST(SuiteTest, AllFamiliesUpToThree) {
  SuiteOptions o;
  o.n_max = 3;
  o.threads = 3;
  const SuiteReport r = verify_suite(o);
  EXPECT_EQ(r.failures, 0U);
  for (const auto& c : r.cells) EXPECT_TRUE(c.error.empty()) << c.error;
  o.threads = 1;
  const SuiteReport serial = verify_suite(o);
  ASSERT_EQ(serial.cells.size(), r.cells.size());
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    EXPECT_EQ(serial.cells[i].graph, r.cells[i].graph);
    EXPECT_EQ(serial.cells[i].family, r.cells[i].family);
    EXPECT_EQ(serial.cells[i].found, r.cells[i].found);
  }
}

TEST(SuiteTest, SamplingIsSeededAndDistinct) {
  const auto a = suite_graphs(5, 20, 7);
  const auto b = suite_graphs(5, 20, 7);
  ASSERT_EQ(a.size(), 20U);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(a[i] == a[j]);
  }
  EXPECT_EQ(suite_graphs(3, 1, 1).size(), 8U);
}

}  // namespace
}  // namespace spectravert
