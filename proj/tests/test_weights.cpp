#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kmdk/kmdk.hpp"

using namespace kmdk;

namespace {

const Gcm A2 = Gcm::from_rows({{2, -1}, {-1, 2}});
const Gcm AffA1 = Gcm::from_rows({{2, -2}, {-2, 2}});
const Gcm AffA2 = Gcm::from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
const Gcm Twisted = Gcm::from_rows({{2, -1}, {-4, 2}});
const Gcm Hyp2 = Gcm::from_rows({{2, -3}, {-3, 2}});
const Gcm Rank3 = Gcm::from_rows({{2, -1, -2}, {-1, 2, -1}, {-1, -1, 2}});
const Gcm Ext4 = Gcm::from_rows({{2, -1, -1, 0}, {-1, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}});

std::optional<Errc> code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return std::nullopt;
}

Weight random_weight(std::mt19937 &rng, const Realization &R, int span) {
  std::uniform_int_distribution<Int> d(-span, span);
  Weight w(R.dim());
  for (auto &x : w)
    x = d(rng);
  return w;
}

// naive determinant for the nondegeneracy check
Int det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 1)
    return m[0][0];
  Int d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

} // namespace

TEST(Realization, Examples) {
  Realization a2(A2);
  EXPECT_EQ(a2.rank(), 2);
  EXPECT_EQ(a2.c, 0);
  Realization aff(AffA1);
  EXPECT_EQ(aff.rank(), 3);
  EXPECT_EQ(aff.complement, std::vector<int>{0});
  EXPECT_EQ(aff.root(0), (Weight{2, -2, 1}));
  EXPECT_EQ(aff.root(1), (Weight{-2, 2, 0}));
  Realization e10(load_gcm(KMDK_GCM_DIR "/e10.gcm"));
  EXPECT_EQ(e10.rank(), 10);
  EXPECT_EQ(e10.c, 0);
}

TEST(Realization, E10Nondegenerate) {
  Gcm a = load_gcm(KMDK_GCM_DIR "/e10.gcm");
  std::vector<std::vector<Int>> m(10, std::vector<Int>(10));
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      m[i][j] = a(i, j);
  EXPECT_EQ(det(m), -1);
}

// α_j(h_i) = a_ij, and the simple roots are independent with the complement block
TEST(Realization, Invariants) {
  for (const Gcm &a : {A2, AffA1, AffA2, Twisted, Hyp2, Rank3, Ext4}) {
    Realization R(a);
    EXPECT_EQ(R.rank(), 2 * a.size() - matrix_rank(a));
    std::vector<std::vector<Rational>> M;
    for (int j = 0; j < a.size(); ++j) {
      std::vector<Rational> row;
      for (int i = 0; i < a.size(); ++i)
        EXPECT_EQ(R.root(j)[i], a(i, j));
      for (int k = 0; k < R.dim(); ++k)
        row.push_back(R.root(j)[k]);
      M.push_back(row);
    }
    EXPECT_EQ(rational_rank(M), a.size());
  }
}

TEST(Reflect, Examples) {
  Realization R(AffA1);
  EXPECT_EQ(reflect(R, 0, Weight{-1, 2, 0}), (Weight{1, 0, 1}));
  EXPECT_EQ(reflect(R, 1, Weight{3, 0, 5}), (Weight{3, 0, 5}));
  EXPECT_EQ(code_of([&] { reflect(R, 2, R.zero()); }), Errc::IndexOutOfRange);
}

TEST(Reflect, FormulaAndInvolution) {
  std::mt19937 rng(11);
  for (const Gcm &a : {A2, AffA1, AffA2, Twisted, Rank3, Ext4}) {
    Realization R(a);
    for (int t = 0; t < 100; ++t) {
      Weight lam = random_weight(rng, R, 6);
      for (int i = 0; i < a.size(); ++i) {
        Weight mu = reflect(R, i, lam);
        // α_i(h_j) = a_ji
        for (int j = 0; j < a.size(); ++j)
          EXPECT_EQ(mu[j], lam[j] - lam[i] * a(j, i));
        EXPECT_EQ(mu[i], -lam[i]);
        EXPECT_EQ(reflect(R, i, mu), lam);
      }
    }
  }
}

TEST(ChamberReduce, Examples) {
  CoxeterGroup G(AffA1);
  auto r = chamber_reduce(G, Weight{-1, 2, 0});
  ASSERT_EQ(r.status, ConeStatus::InCone);
  EXPECT_EQ(r.mu, (Weight{1, 0, 1}));
  EXPECT_EQ(r.w, G.normal_form({0}));
  auto d = chamber_reduce(G, Weight{2, 3, -4});
  EXPECT_EQ(d.status, ConeStatus::InCone);
  EXPECT_EQ(d.steps, 0);
  EXPECT_TRUE(d.w.is_identity());
  auto n = chamber_reduce(G, Weight{-1, 0, 0});
  EXPECT_EQ(n.status, ConeStatus::NotInCone);
  EXPECT_EQ(n.level, Int{-1});
  // nonzero level 0 off the fixed line
  EXPECT_EQ(chamber_reduce(G, Weight{1, -1, 0}).status, ConeStatus::NotInCone);
  EXPECT_EQ(chamber_reduce(G, Weight{0, 0, 7}).status, ConeStatus::InCone);
}

TEST(ChamberReduce, Budget) {
  CoxeterGroup G(Hyp2);
  auto u = chamber_reduce(G, Weight{-1, 1}, 0);
  EXPECT_EQ(u.status, ConeStatus::Undecided);
  EXPECT_EQ(code_of([&] { chamber_reduce(G, Weight{-1, 1}, -1); }), Errc::UsageError);
  // a negative weight of a hyperbolic group is outside the cone: walk never ends
  EXPECT_EQ(chamber_reduce(G, Weight{-1, -1}, 200).status, ConeStatus::Undecided);
}

// the chamber representative does not depend on which negative index is reflected
TEST(ChamberReduce, Confluence) {
  std::mt19937 rng(3);
  for (const Gcm &a : {A2, AffA1, AffA2, Hyp2, Rank3, Ext4}) {
    CoxeterGroup G(a);
    const Realization &R = G.realization();
    int decided = 0;
    for (int t = 0; t < 300; ++t) {
      Weight lam = random_weight(rng, R, 4);
      auto r = chamber_reduce(G, lam, 400);
      if (r.status != ConeStatus::InCone)
        continue;
      ++decided;
      EXPECT_EQ(G.act(r.w, lam), r.mu);
      EXPECT_TRUE(is_dominant(R, r.mu));
      Weight x = lam;
      Word applied;
      for (int steps = 0; steps < 1000; ++steps) {
        std::vector<int> neg;
        for (int i = 0; i < a.size(); ++i)
          if (x[i] < 0)
            neg.push_back(i);
        if (neg.empty())
          break;
        const int i = neg[std::uniform_int_distribution<std::size_t>(0, neg.size() - 1)(rng)];
        reflect_in_place(R, i, x);
        applied.push_back(i);
      }
      EXPECT_EQ(x, r.mu);
      EXPECT_EQ(G.act(Word(applied.rbegin(), applied.rend()), lam), r.mu);
    }
    EXPECT_GT(decided, 10);
  }
}

TEST(ChamberReduce, ConeClosedUnderAddition) {
  std::mt19937 rng(5);
  for (const Gcm &a : {AffA1, AffA2, Hyp2, Rank3, Ext4}) {
    CoxeterGroup G(a);
    const Realization &R = G.realization();
    std::vector<Weight> in;
    for (int t = 0; t < 400 && in.size() < 25; ++t) {
      Weight lam = random_weight(rng, R, 3);
      if (chamber_reduce(G, lam, 400).status == ConeStatus::InCone)
        in.push_back(lam);
    }
    ASSERT_GE(in.size(), 5u);
    for (const auto &x : in)
      for (const auto &y : in) {
        auto s = chamber_reduce(G, add(x, y), 4000);
        EXPECT_EQ(s.status, ConeStatus::InCone);
      }
  }
}

TEST(Stratum, Examples) {
  Realization R(AffA1);
  EXPECT_EQ(stratum(R, R.zero()), R.gcm.all());
  EXPECT_TRUE(stratum(R, R.rho()).empty());
  EXPECT_EQ(stratum(R, Weight{2, 0, 0}), NodeSet::of({1}));
  EXPECT_EQ(code_of([&] { stratum(R, Weight{-1, 0, 0}); }), Errc::NotDominant);
}

// stabilizer of a dominant weight inside a ball is the parabolic of its stratum
TEST(Stratum, Stabilizer) {
  std::mt19937 rng(9);
  for (const Gcm &a : {A2, AffA1, Rank3, Ext4}) {
    CoxeterGroup G(a);
    const Realization &R = G.realization();
    auto ball = G.ball(5);
    for (int t = 0; t < 20; ++t) {
      Weight lam = random_weight(rng, R, 2);
      for (int i = 0; i < a.size(); ++i)
        lam[i] = std::abs(lam[i]);
      NodeSet K = stratum(R, lam);
      for (const auto &w : ball) {
        const bool fixes = G.act(w, lam) == lam;
        bool in_K = true;
        for (int i : w.word)
          in_K = in_K && K.contains(i);
        EXPECT_EQ(fixes, in_K);
      }
    }
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(Realization(A2).rho(), (Weight{1, 1}));
  EXPECT_EQ(Realization(AffA1).rho(), (Weight{1, 1, 0}));
  EXPECT_EQ(weyl_element_rho(Realization(Rank3)), (Weight{1, 1, 1}));
}

TEST(Level, Examples) {
  CoxeterGroup G(AffA1);
  const Realization &R = G.realization();
  EXPECT_EQ(G.kac_labels(), (std::vector<Int>{1, 1}));
  EXPECT_EQ(affine_level(G, R.rho()), 2);
  EXPECT_EQ(affine_level(G, R.zero()), 0);
  EXPECT_EQ(code_of([&] { affine_level(CoxeterGroup(Hyp2), Weight{1, 1}); }), Errc::NotAffine);
  CoxeterGroup T(Twisted);
  EXPECT_EQ(T.kac_labels(), (std::vector<Int>{2, 1}));
  CoxeterGroup A(AffA2);
  EXPECT_EQ(affine_level(A, A.realization().rho()), 3);
}

TEST(Level, Invariant) {
  std::mt19937 rng(13);
  for (const Gcm &a : {AffA1, AffA2, Twisted}) {
    CoxeterGroup G(a);
    const Realization &R = G.realization();
    for (int t = 0; t < 200; ++t) {
      Weight lam = random_weight(rng, R, 9);
      for (int i = 0; i < a.size(); ++i)
        EXPECT_EQ(affine_level(G, reflect(R, i, lam)), affine_level(G, lam));
    }
  }
}

TEST(Barycenter, Examples) {
  Realization R(Rank3);
  EXPECT_EQ(barycenter_weight(R, NodeSet{}), (Weight{1, 1, 1}));
  EXPECT_EQ(barycenter_weight(R, NodeSet::of({0, 2})), (Weight{0, 1, 0}));
  EXPECT_EQ(code_of([&] { barycenter_weight(R, R.gcm.all()); }), Errc::NotProper);
  for (NodeSet J : spherical_poset(Rank3).members)
    EXPECT_EQ(stratum(R, barycenter_weight(R, J)), J);
}
