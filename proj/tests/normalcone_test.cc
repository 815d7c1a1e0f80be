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

#include "spectravert/normalcone.h"

#include <gtest/gtest.h>

#include <random>
#include <variant>

#include "test_util.h"

namespace spectravert {
namespace {

using testing::binomial2;
using testing::gram;
using testing::random_mat;
using testing::rat;

Spectrahedron elliptope(std::size_t n) { return build(make_family(FamilyKind::kElliptope, Graph::empty(n))); }

TEST(ConjugateFaceTest, Examples) {
  const Labels l3 = Labels::range(3);
  EXPECT_EQ(conjugate_face(dyad({1, 0, 0}, l3)).dim, 3U);
  const ConjugateFace pd = conjugate_face(SymMat::identity(l3));
  EXPECT_EQ(pd.dim, 0U);
  EXPECT_TRUE(pd.span_basis.empty());
  EXPECT_EQ(conjugate_face(SymMat(Labels::range(2))).dim, 3U);
  EXPECT_THROW(conjugate_face(SymMat::from_mat(Mat{{0, 1}, {1, 0}})), InvalidArgument);
}

TEST(ConjugateFaceTest, InvariantsOnRandomPsd) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t r = trial % (n + 1);
    const SymMat x = gram(random_mat(rng, n, r), Labels::range(n));
    const ConjugateFace face = conjugate_face(x);
    EXPECT_EQ(face.dim, binomial2(face.nullbasis.dim()));
    EXPECT_EQ(face.nullbasis.dim(), n - rank(x));
    for (const auto& b : face.nullbasis.vectors) {
      for (const auto& v : x.apply(b)) EXPECT_EQ(sgn(v), 0);
    }
    for (const auto& s : face.span_basis) EXPECT_EQ(sgn(frobenius(s, x)), 0);
  }
}

TEST(RelintFaceTest, Examples) {
  const Labels l2 = Labels::range(2), l3 = Labels::range(3);
  EXPECT_TRUE(in_relint_conjugate_face(dyad({1, 0}, l2), dyad({0, 1}, l2)));
  EXPECT_FALSE(in_relint_conjugate_face(dyad({1, 0, 0}, l3), dyad({0, 1, 0}, l3)));
  EXPECT_TRUE(in_relint_conjugate_face(SymMat::identity(l3), SymMat(l3)));
  EXPECT_FALSE(in_relint_conjugate_face(dyad({1, 0}, l2), dyad({1, 1}, l2)));
}

TEST(NormalConeTest, DirectRouteExamples) {
  const Spectrahedron e2 = elliptope(2);
  EXPECT_EQ(normal_cone_dim_direct(e2, dyad({1, -1}, e2.labels)), 3U);
  EXPECT_EQ(normal_cone_dim_direct(e2, SymMat::identity(e2.labels)), 2U);
  const Spectrahedron t = build(make_family(FamilyKind::kTheta3, Graph::complete(3)));
  EXPECT_EQ(normal_cone_dim_direct(t, rat(1, 3) * SymMat::identity(t.labels)), 4U);
}

TEST(NormalConeTest, FormulaRouteExamples) {
  const Spectrahedron e2 = elliptope(2);
  EXPECT_EQ(normal_cone_dim_formula(e2, SymMat::identity(e2.labels)), 2U);
  EXPECT_EQ(normal_cone_dim_formula(e2, dyad({1, -1}, e2.labels)), 3U);
}

TEST(NormalConeTest, IsVertexExamples) {
  const FamilySpec p3 = make_family(FamilyKind::kLiftedTh, Graph::path(3));
  const Spectrahedron c = build(p3);
  const NormalConeReport r = is_vertex(c, rank_one_point(p3, CombinatorialObject::of_subset({0, 2})));
  EXPECT_TRUE(r.is_vertex);
  EXPECT_EQ(r.ambient_dim, 10U);
  EXPECT_EQ(r.nullity, 3U);
  EXPECT_FALSE(is_vertex(elliptope(3), SymMat::identity(Labels::range(3))).is_vertex);
  const Spectrahedron bq = build(make_family(FamilyKind::kBq, Graph::empty(2)));
  const SymMat mid = rat(1, 2) * (dyad({1, 0, 0}, bq.labels) + dyad({1, 1, 1}, bq.labels));
  const NormalConeReport m = is_vertex(bq, mid);
  EXPECT_FALSE(m.is_vertex);
  EXPECT_EQ(m.dim_direct, m.dim_formula);
}

TEST(NormalConeTest, ActiveSetIsExact) {
  const FamilySpec spec = make_family(FamilyKind::kLiftedThPlus, Graph::path(3));
  const Spectrahedron c = build(spec);
  EXPECT_EQ(active_inequalities(c, rank_one_point(spec, CombinatorialObject::of_subset({0}))),
            (std::vector<std::size_t>{0, 1}));
  // The witness has zero off-diagonal entries on V, so both rows are tight.
  EXPECT_EQ(active_inequalities(c, *c.slater).size(), 2U);
  const SymMat off = *c.slater - rat(1, 100) * sym_outer(unit_vector(4, 1), unit_vector(4, 2), c.labels);
  ASSERT_TRUE(is_feasible(c, off));
  EXPECT_EQ(active_inequalities(c, off), (std::vector<std::size_t>{1}));
}

TEST(NormalConeTest, RefusesWithoutSlaterOrFeasibility) {
  Spectrahedron e2 = elliptope(2);
  const SymMat x = dyad({1, 1}, e2.labels);
  EXPECT_THROW(is_vertex(e2, SymMat::from_mat(Mat{{2, 0}, {0, 1}}, e2.labels)), InvalidArgument);
  e2.slater.reset();
  EXPECT_THROW(normal_cone_dim_direct(e2, x), InvalidArgument);
  EXPECT_THROW(normal_cone_dim_formula(e2, x), InvalidArgument);
  EXPECT_THROW(rank_one_vertex_test(e2, {1, 1}), InvalidArgument);
}

TEST(RankOneTest, Examples) {
  EXPECT_TRUE(rank_one_vertex_test(elliptope(2), {1, -1}));
  const Spectrahedron t = build(make_family(FamilyKind::kTheta3, Graph::empty(2)));
  EXPECT_FALSE(rank_one_vertex_test(t, {1, 0}));
  const Spectrahedron k2 = build(make_family(FamilyKind::kLiftedTh, Graph::complete(2)));
  EXPECT_TRUE(rank_one_vertex_test(k2, {1, 1, 0}));
  EXPECT_THROW(rank_one_vertex_test(k2, {0, 0, 0}), InvalidArgument);
  EXPECT_THROW(rank_one_vertex_test(k2, {1, 1, 1}), InvalidArgument);
}

TEST(RankOneTest, AgreesWithFullReport) {
  for (const Graph& g : all_labeled_graphs(3)) {
    for (FamilyKind k : all_families()) {
      const FamilySpec spec = make_family(k, g);
      const Spectrahedron c = build(spec);
      for (const auto& s : enumerate_subsets(3)) {
        CombinatorialObject obj = CombinatorialObject::of_subset(s);
        if (k == FamilyKind::kTheta3) {
          if (s.size() != 1) continue;
          obj = CombinatorialObject::of_basis(s[0]);
        } else if (k == FamilyKind::kElliptope || k == FamilyKind::kElliptopePrime ||
                   k == FamilyKind::kElliptopeDoublePrime) {
          obj = CombinatorialObject::of_signs(s);
        }
        const Vec v = rank_one_vector(spec, obj);
        const SymMat x = dyad(v, c.labels);
        if (!is_feasible(c, x)) continue;
        EXPECT_EQ(rank_one_vertex_test(c, v), is_vertex(c, x).is_vertex);
      }
    }
  }
}

TEST(ModularRankTest, ElliptopeExamples) {
  const Spectrahedron e3 = elliptope(3);
  const SymMat v1 = dyad({1, 1, 1}, e3.labels);
  const SymMat v2 = dyad({1, -1, 1}, e3.labels);
  const auto r1 = modular_rank_dim(e3, v1);
  ASSERT_TRUE(std::holds_alternative<std::size_t>(r1));
  EXPECT_EQ(std::get<std::size_t>(r1), 6U);
  const SymMat mid = rat(1, 2) * (v1 + v2);
  ASSERT_EQ(rank(mid), 2U);
  const auto r2 = modular_rank_dim(e3, mid);
  ASSERT_TRUE(std::holds_alternative<std::size_t>(r2));
  EXPECT_EQ(std::get<std::size_t>(r2), 4U);
  EXPECT_EQ(normal_cone_dim_direct(e3, mid), 4U);
}

TEST(ModularRankTest, HypothesisFailures) {
  const Spectrahedron bq = build(make_family(FamilyKind::kBq, Graph::empty(2)));
  const auto r = modular_rank_dim(bq, *bq.slater);
  ASSERT_TRUE(std::holds_alternative<HypothesisFailure>(r));
  EXPECT_EQ(std::get<HypothesisFailure>(r).kind, HypothesisFailure::Kind::kZeroRhs);
  const Spectrahedron lp = build(make_family(FamilyKind::kLiftedThPlus, Graph::complete(2)));
  EXPECT_EQ(std::get<HypothesisFailure>(modular_rank_dim(lp, *lp.slater)).kind,
            HypothesisFailure::Kind::kHasInequalities);
  // tr X = 1 together with X_11 = 1: ranks 2 + 1 but the sum has rank 2.
  Spectrahedron overlap = elliptope(2);
  overlap.eq.resize(1);
  overlap.eq.push_back({SymMat::identity(overlap.labels), Rat(2)});
  const SymMat x = SymMat::identity(overlap.labels);
  EXPECT_EQ(std::get<HypothesisFailure>(modular_rank_dim(overlap, x)).kind,
            HypothesisFailure::Kind::kRankNotAdditive);
}

TEST(RankBoundTest, ElliptopeCertificate) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Spectrahedron e = elliptope(n);
    std::vector<Vec> h{unit_vector(n, n - 1)};
    for (std::size_t i = 0; i + 1 < n; ++i) h.push_back(unit_vector(n, i));
    std::vector<SymMat> vertices{dyad(Vec(n, Rat(1)), e.labels)};
    EXPECT_EQ(verify_rank_bound_certificate(e, h, vertices), 1U);
    const std::vector<SymMat> bad{SymMat::identity(e.labels)};
    EXPECT_THROW(verify_rank_bound_certificate(e, h, bad), std::logic_error);
  }
}

TEST(RankBoundTest, FreeRootLiftForcesRankOne) {
  const Spectrahedron lifted = lift_with_free_root(elliptope(3));
  std::vector<Vec> h;
  for (std::size_t i = 0; i < 4; ++i) h.push_back(unit_vector(4, i));
  EXPECT_EQ(verify_rank_bound_certificate(lifted, h), 1U);
}

TEST(RankBoundTest, InvalidCertificates) {
  const Spectrahedron e = elliptope(3);
  const std::vector<Vec> dependent{{0, 0, 1}, {1, 0, 0}, {2, 0, 0}};
  EXPECT_THROW(verify_rank_bound_certificate(e, dependent), InvalidArgument);
  const std::vector<Vec> not_null{{1, 0, 0}, {1, 1, 0}};
  EXPECT_THROW(verify_rank_bound_certificate(e, not_null), InvalidArgument);
  const std::vector<Vec> single{{1, 0, 0}};
  EXPECT_THROW(verify_rank_bound_certificate(e, single), InvalidArgument);
}

CombinatorialObject some_vertex(FamilyKind k) {
  switch (k) {
    case FamilyKind::kTheta3:
      return CombinatorialObject::of_basis(1);
    case FamilyKind::kElliptope:
    case FamilyKind::kElliptopePrime:
    case FamilyKind::kElliptopeDoublePrime:
      return CombinatorialObject::of_signs({0});
    case FamilyKind::kKgVc:
    case FamilyKind::kKgVcPrime:
      return CombinatorialObject::of_subset({1});
    default:
      return CombinatorialObject::of_subset({0});
  }
}

TEST(DualFormulaTest, AgreeOnConvexCombinations) {
  std::mt19937_64 rng(37);
  for (FamilyKind k : all_families()) {
    const FamilySpec spec = make_family(k, Graph::path(3));
    const Spectrahedron c = build(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const Rat lambda = rat(static_cast<long>(rng() % 4), 4);
      const SymMat x = lambda * *c.slater + (1 - lambda) * dyad(rank_one_vector(spec, some_vertex(k)), c.labels);
      ASSERT_TRUE(is_feasible(c, x)) << family_name(k);
      EXPECT_EQ(normal_cone_dim_direct(c, x), normal_cone_dim_formula(c, x)) << family_name(k);
    }
  }
}

}  // namespace
}  // namespace spectravert
