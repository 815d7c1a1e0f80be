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

#include "spectravert/spectra.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"

namespace spectravert {
namespace {

using testing::rat;

std::size_t pairs(std::size_t n) { return n * (n - 1) / 2; }

TEST(FamilyNameTest, RoundTrip) {
  for (FamilyKind k : all_families()) EXPECT_EQ(parse_family(family_name(k)), k);
  EXPECT_EQ(parse_family("lifted_th_prime"), FamilyKind::kLiftedThPrime);
  EXPECT_EQ(parse_family("kg_vc"), FamilyKind::kKgVc);
  EXPECT_FALSE(parse_family("theta").has_value());
}

TEST(BuildTest, ConstraintCounts) {
  const Graph p3 = Graph::path(3);
  struct Row {
    FamilyKind kind;
    std::size_t order, eq, ineq;
  };
  const Row rows[] = {
      {FamilyKind::kElliptope, 3, 3, 0},
      {FamilyKind::kElliptopePrime, 4, 4, pairs(3)},
      {FamilyKind::kElliptopeDoublePrime, 4, 4, pairs(3)},
      {FamilyKind::kBq, 4, 4, 0},
      {FamilyKind::kBqPrime, 4, 4, pairs(3)},
      {FamilyKind::kBqDoublePrime, 4, 4, pairs(3)},
      {FamilyKind::kLiftedTh, 4, 6, 0},
      {FamilyKind::kLiftedThPrime, 4, 6, 1},
      {FamilyKind::kLiftedThPlus, 4, 4, 2},
      {FamilyKind::kKgVc, 4, 6, 0},
      {FamilyKind::kKgVcPrime, 4, 6, 1},
      {FamilyKind::kTheta3, 3, 3, 0},
  };
  for (const Row& r : rows) {
    const Spectrahedron c = build(make_family(r.kind, p3));
    EXPECT_EQ(c.order(), r.order) << family_name(r.kind);
    EXPECT_EQ(c.eq.size(), r.eq) << family_name(r.kind);
    EXPECT_EQ(c.ineq.size(), r.ineq) << family_name(r.kind);
    EXPECT_EQ(c.family, family_name(r.kind));
    EXPECT_NO_THROW(validate(c)) << family_name(r.kind);
  }
}

TEST(BuildTest, EveryFamilyHasAValidSlaterWitness) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      for (FamilyKind k : all_families()) {
        const Spectrahedron c = build(make_family(k, g));
        ASSERT_TRUE(c.slater.has_value());
        EXPECT_TRUE(is_pd(*c.slater));
        EXPECT_TRUE(is_feasible(c, *c.slater)) << family_name(k) << " " << g.to_string();
      }
    }
  }
}

TEST(BuildTest, LiftedLabelsAndErrors) {
  const Spectrahedron c = build(make_family(FamilyKind::kLiftedTh, Graph::path(2)));
  EXPECT_EQ(c.labels[0], "0");
  EXPECT_EQ(c.labels[2], "2");
  EXPECT_THROW(build(make_family(FamilyKind::kBq, Graph::empty(0))), InvalidArgument);
  const Graph zero(Labels({"0", "1"}), {});
  EXPECT_THROW(build(make_family(FamilyKind::kBq, zero)), InvalidArgument);
  EXPECT_NO_THROW(build(make_family(FamilyKind::kElliptope, zero)));
  EXPECT_THROW(make_family(FamilyKind::kTheta3, Graph::path(2), {{{0, 2}}, {}}), InvalidArgument);
}

TEST(BuildTest, Theta3SplitSigns) {
  const Graph k2 = Graph::complete(2);
  const Spectrahedron plus = build(make_family(FamilyKind::kTheta3, k2, {{{0, 1}}, {}}));
  ASSERT_EQ(plus.ineq.size(), 1U);
  // X_12 >= 0 is stored as -X_12 <= 0.
  EXPECT_EQ(frobenius(plus.ineq[0].matrix, dyad({1, 1}, plus.labels)), Rat(-1));
  const Spectrahedron minus = build(make_family(FamilyKind::kTheta3, k2, {{}, {{0, 1}}}));
  EXPECT_EQ(frobenius(minus.ineq[0].matrix, dyad({1, 1}, minus.labels)), Rat(1));
}

TEST(MembershipTest, HandChecks) {
  const Spectrahedron e2 = build(make_family(FamilyKind::kElliptope, Graph::empty(2)));
  EXPECT_TRUE(is_feasible(e2, dyad({1, -1}, e2.labels)));
  EXPECT_FALSE(is_feasible(e2, dyad({1, 2}, e2.labels)));
  EXPECT_FALSE(is_feasible(e2, SymMat::from_mat(Mat{{1, 2}, {2, 1}}, e2.labels)));
  EXPECT_THROW(is_feasible(e2, SymMat::identity(Labels::range(3))), InvalidArgument);
}

TEST(RankOneTest, VectorsPerFamily) {
  const Graph p3 = Graph::path(3);
  EXPECT_EQ(rank_one_vector(make_family(FamilyKind::kElliptope, p3), CombinatorialObject::parse_signs("+-+")),
            (Vec{1, -1, 1}));
  EXPECT_EQ(rank_one_vector(make_family(FamilyKind::kElliptopePrime, p3), CombinatorialObject::parse_signs("--+")),
            (Vec{1, -1, -1, 1}));
  EXPECT_EQ(rank_one_vector(make_family(FamilyKind::kLiftedTh, p3), CombinatorialObject::of_subset({0, 2})),
            (Vec{1, 1, 0, 1}));
  EXPECT_EQ(rank_one_vector(make_family(FamilyKind::kKgVc, p3), CombinatorialObject::of_subset({1})),
            (Vec{1, -1, 1, -1}));
  EXPECT_EQ(rank_one_vector(make_family(FamilyKind::kTheta3, p3), CombinatorialObject::of_basis(1)), (Vec{0, 1, 0}));
  EXPECT_THROW(rank_one_vector(make_family(FamilyKind::kTheta3, p3), CombinatorialObject::of_subset({1})),
               InvalidArgument);
  EXPECT_THROW(rank_one_vector(make_family(FamilyKind::kBq, p3), CombinatorialObject::of_subset({1, 0})),
               InvalidArgument);
  EXPECT_THROW(CombinatorialObject::parse_signs("+x"), InvalidArgument);
}

// Feasibility of every candidate dyad is exactly the combinatorial
// prediction: stable sets, vertex covers, or everything.
TEST(RankOneTest, PredictedFeasibilityIsExact) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      for (FamilyKind k : all_families()) {
        const FamilySpec spec = make_family(k, g);
        const Spectrahedron c = build(spec);
        std::vector<CombinatorialObject> objs;
        for (const auto& s : enumerate_subsets(n)) {
          if (k == FamilyKind::kTheta3) break;
          const bool signs = k == FamilyKind::kElliptope || k == FamilyKind::kElliptopePrime ||
                             k == FamilyKind::kElliptopeDoublePrime;
          objs.push_back(signs ? CombinatorialObject::of_signs(s) : CombinatorialObject::of_subset(s));
        }
        if (k == FamilyKind::kTheta3) {
          for (std::size_t b = 0; b < n; ++b) objs.push_back(CombinatorialObject::of_basis(b));
        }
        for (const auto& obj : objs) {
          const SymMat x = dyad(rank_one_vector(spec, obj), c.labels);
          EXPECT_EQ(is_feasible(c, x), predicted_feasible(spec, obj))
              << family_name(k) << " " << g.to_string() << " " << obj.to_string(g);
        }
      }
    }
  }
}

TEST(RankOneTest, PointIsCheckedWhenPredicted) {
  const FamilySpec spec = make_family(FamilyKind::kLiftedTh, Graph::path(3));
  const SymMat x = rank_one_point(spec, CombinatorialObject::of_subset({0, 2}));
  EXPECT_EQ(x, dyad({1, 1, 0, 1}, x.labels()));
  // Not stable: returned without the feasibility assertion.
  EXPECT_FALSE(is_feasible(build(spec), rank_one_point(spec, CombinatorialObject::of_subset({0, 1}))));
}

TEST(TransformTest, FlipIsAnInvolution) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Mat f = transform_matrix(TransformName::kFlip, Labels::range(n)).l;
    EXPECT_EQ(f * f, Mat::identity(n + 1));
  }
}

TEST(TransformTest, FlipAndSigmaOnVectors) {
  const Labels v = Labels::range(3);
  const Mat f = transform_matrix(TransformName::kFlip, v).l;
  const Mat s = transform_matrix(TransformName::kSignToIncid, v).l;
  // 1 (+) chi_{1,3} -> 1 (+) chi_{2}.
  EXPECT_EQ(f * (Vec{1, 1, 0, 1}), (Vec{1, 0, 1, 0}));
  // 1 (+) (+,-,+) -> 1 (+) chi_{1,3}.
  EXPECT_EQ(s * (Vec{1, 1, -1, 1}), (Vec{1, 1, 0, 1}));
}

TEST(TransformTest, PushforwardMapsMembership) {
  std::mt19937_64 rng(5);
  const Spectrahedron c = build(make_family(FamilyKind::kLiftedTh, Graph::path(3)));
  const CongruenceTransform t = transform_matrix(TransformName::kFlip, Graph::path(3).vertices());
  const Spectrahedron image = pushforward(c, t);
  EXPECT_TRUE(is_feasible(image, *image.slater));
  EXPECT_TRUE(is_pd(*image.slater));
  for (const auto& s : enumerate_subsets(3)) {
    Vec x{1, 0, 0, 0};
    for (std::size_t i : s) x[i + 1] = 1;
    const SymMat xx = dyad(x, c.labels);
    EXPECT_EQ(is_feasible(c, xx), is_feasible(image, congruence(t.l, xx)));
  }
  EXPECT_THROW(pushforward(c, CongruenceTransform{Mat(4, 4), TransformName::kCustom, c.labels}), InvalidArgument);
  EXPECT_THROW(custom_transform(Mat(4, 4), c.labels), InvalidArgument);
}

TEST(TransformTest, SigmaPushforwardOfElliptopeContainsBqVertices) {
  const Labels v = Labels::range(3);
  const Spectrahedron e = build(make_family(FamilyKind::kElliptope, Graph(v.prepend("0"), {})));
  const Spectrahedron image = pushforward(e, transform_matrix(TransformName::kSignToIncid, v));
  for (const auto& s : enumerate_subsets(3)) {
    Vec x{1, 0, 0, 0};
    for (std::size_t i : s) x[i + 1] = 1;
    EXPECT_TRUE(is_feasible(image, dyad(x, image.labels)));
  }
}

TEST(LaplacianTest, WeightsAndErrors) {
  const Graph k2 = Graph::complete(2);
  EXPECT_EQ(laplacian(k2), SymMat::from_mat(Mat{{1, -1}, {-1, 1}}, k2.vertices()));
  EXPECT_EQ(laplacian(k2, {{{0, 1}, rat(3, 2)}}), SymMat::from_mat(Mat{{rat(3, 2), rat(-3, 2)}, {rat(-3, 2), rat(3, 2)}}, k2.vertices()));
  EXPECT_THROW(laplacian(k2, {{{0, 1}, Rat(-1)}}), InvalidArgument);
  EXPECT_THROW(laplacian(Graph::empty(2), {{{0, 1}, Rat(1)}}), InvalidArgument);
  EXPECT_TRUE(laplacian(Graph::empty(3)).is_zero());
}

TEST(LiftTest, FreeRootPadsConstraints) {
  const Spectrahedron e = build(make_family(FamilyKind::kElliptope, Graph::empty(2)));
  const Spectrahedron lifted = lift_with_free_root(e);
  EXPECT_EQ(lifted.order(), 3U);
  EXPECT_EQ(lifted.eq.size(), 2U);
  EXPECT_EQ(lifted.eq[0].matrix(1, 1), Rat(1));
  EXPECT_EQ(sgn(lifted.eq[0].matrix(0, 0)), 0);
  EXPECT_NO_THROW(validate(lifted));
}

TEST(AdjointTest, WeightedSum) {
  const Spectrahedron e = build(make_family(FamilyKind::kElliptope, Graph::empty(2)));
  const SymMat s = adjoint_eq(e, {rat(1, 2), Rat(3)});
  EXPECT_EQ(s, SymMat::from_mat(Mat{{rat(1, 2), 0}, {0, 3}}, e.labels));
  EXPECT_THROW(adjoint_eq(e, {Rat(1)}), InvalidArgument);
}

}  // namespace
}  // namespace spectravert
