#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "kmdk/kmdk.hpp"
#include "oracles.hpp"

using namespace kmdk;

namespace {

oracle::Rows rows_of(const Gcm &a) {
  oracle::Rows r(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      r[i].push_back(a(i, j));
  return r;
}

Kind kind_of(oracle::Verdict v) {
  switch (v) {
  case oracle::Verdict::Finite: return Kind::Finite;
  case oracle::Verdict::Affine: return Kind::Affine;
  default: return Kind::Indefinite;
  }
}

// every GCM with off-diagonal entries in [lo, 0] of the given size
std::vector<Gcm> grid(int n, int lo) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pairs.push_back({i, j});
  std::vector<Gcm> out;
  const int vals = -lo + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < 2 * pairs.size(); ++k)
    total *= static_cast<std::size_t>(vals);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
      m[i][i] = 2;
    std::size_t c = code;
    bool ok = true;
    for (auto [i, j] : pairs) {
      m[i][j] = -static_cast<Int>(c % vals);
      c /= vals;
      m[j][i] = -static_cast<Int>(c % vals);
      c /= vals;
      ok = ok && ((m[i][j] == 0) == (m[j][i] == 0));
    }
    if (ok)
      out.push_back(Gcm::from_rows(m));
  }
  return out;
}

Gcm extended4() {
  return Gcm::from_rows({{2, -1, -1, 0}, {-1, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}});
}

} // namespace

TEST(Parse, SmallestMatrix) {
  Gcm a = parse_gcm("n 1\n2\n");
  EXPECT_EQ(a.size(), 1);
  EXPECT_EQ(a(0, 0), 2);
}

TEST(Parse, AffineA1Echo) {
  Gcm a = parse_gcm("# comment\nn 2\n2 -2   # trailing\n-2 2\n");
  EXPECT_EQ(a, Gcm::from_rows({{2, -2}, {-2, 2}}));
}

TEST(Parse, Labels) {
  Gcm a = parse_gcm("n 2\nlabels a b\n2 -1\n-1 2\n");
  EXPECT_EQ(a.label(1), "b");
  EXPECT_EQ(a.index_of("a"), 0);
  EXPECT_FALSE(a.default_labels());
}

TEST(Parse, ZeroPatternViolation) {
  try {
    parse_gcm("n 2\n2 -1\n0 2\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::NotAGCM);
    EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
  }
}

TEST(Parse, Malformed) {
  for (const char *bad : {"", "n x\n", "n 2\n2 -1\n", "n 2\n2 -1 0\n-1 2\n", "m 2\n2 0\n0 2\n",
                          "n 2\n2 a\n-1 2\n"}) {
    try {
      parse_gcm(bad);
      FAIL() << bad;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), Errc::MalformedFile) << bad;
    }
  }
}

TEST(Parse, Invariants) {
  for (auto m : std::vector<std::vector<std::vector<Int>>>{
           {{1, 0}, {0, 2}}, {{2, 1}, {-1, 2}}, {{2, 0}, {-1, 2}}}) {
    try {
      Gcm::from_rows(m);
      FAIL();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), Errc::NotAGCM);
    }
  }
}

TEST(Parse, BundledFiles) {
  for (const char *f : {"a2", "b2", "g2", "affine_a1", "affine_a2", "twisted_a2",
                        "rank2_hyperbolic", "rank3_compact", "extended4", "e9", "e10"}) {
    Gcm a = load_gcm(std::string(KMDK_GCM_DIR) + "/" + f + ".gcm");
    EXPECT_EQ(parse_gcm(a.canonical_text()), a) << f;
  }
}

TEST(Classify, Examples) {
  auto t = classify_type(Gcm::from_rows({{2, -1}, {-1, 2}}));
  EXPECT_EQ(t.kind, Kind::Finite);
  EXPECT_TRUE(t.compact_type);
  EXPECT_FALSE(t.extended_compact);

  t = classify_type(Gcm::from_rows({{2, -2}, {-2, 2}}));
  EXPECT_EQ(t.kind, Kind::Affine);
  EXPECT_TRUE(t.compact_type);

  Gcm r3 = Gcm::from_rows({{2, -1, -2}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_EQ(determinant(r3, r3.all()), -3);
  t = classify_type(r3);
  EXPECT_EQ(t.kind, Kind::Indefinite);
  EXPECT_TRUE(t.compact_type);

  t = classify_type(extended4());
  EXPECT_EQ(t.kind, Kind::Indefinite);
  EXPECT_FALSE(t.compact_type);
  ASSERT_TRUE(t.extended_compact);
  EXPECT_EQ(t.extended_compact->core, NodeSet::of({0, 1, 2}));
  EXPECT_EQ(t.extended_compact->extra, NodeSet::of({3}));
}

TEST(Classify, NamedAffine) {
  EXPECT_EQ(classify_type(Gcm::from_rows({{2, -1}, {-4, 2}})).kind, Kind::Affine);
  for (auto m : std::vector<std::vector<std::vector<Int>>>{
           {{2, -1}, {-1, 2}}, {{2, -2}, {-1, 2}}, {{2, -1}, {-3, 2}}})
    EXPECT_EQ(classify_type(Gcm::from_rows(m)).kind, Kind::Finite);
}

TEST(Classify, GridAgainstPrincipalMinors) {
  std::size_t checked = 0;
  for (int n : {2, 3})
    for (const Gcm &a : grid(n, -3)) {
      auto t = classify_type(a);
      ASSERT_EQ(t.kind, kind_of(oracle::matrix_verdict(rows_of(a)))) << a.canonical_text();
      if (t.indecomposable && t.kind == Kind::Affine) {
        EXPECT_TRUE(t.compact_type) << a.canonical_text();
      }
      if (t.kind == Kind::Finite) {
        EXPECT_TRUE(t.compact_type);
        EXPECT_FALSE(t.extended_compact);
      }
      ++checked;
    }
  EXPECT_GT(checked, 1000u);
}

// submatrix finite type <=> the Weyl group enumeration terminates
TEST(Classify, FiniteIffGroupFinite) {
  for (int n : {2, 3})
    for (const Gcm &a : grid(n, -3)) {
      SubsetTypes types(a);
      for (NodeSet J : subsets_of(a.all())) {
        if (J.empty())
          continue;
        oracle::MatrixGroup G(rows_of(a.restrict(J)));
        const bool finite = G.order(200).has_value(); // finite rank <= 3 groups have order <= 48
        ASSERT_EQ(types.finite(J), finite) << a.canonical_text() << " J=" << J.bits;
      }
    }
}

TEST(Classify, PermutationInvariant) {
  for (const Gcm &a : grid(3, -2)) {
    std::vector<int> p{0, 1, 2};
    auto base = classify_type(a);
    while (std::next_permutation(p.begin(), p.end())) {
      std::vector<std::vector<Int>> m(3, std::vector<Int>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          m[i][j] = a(p[i], p[j]);
      auto t = classify_type(Gcm::from_rows(m));
      EXPECT_EQ(t.kind, base.kind);
      EXPECT_EQ(t.compact_type, base.compact_type);
      EXPECT_EQ(t.symmetrizable, base.symmetrizable);
      EXPECT_EQ(t.extended_compact.has_value(), base.extended_compact.has_value());
    }
  }
}

TEST(Classify, Symmetrizer) {
  for (int n : {2, 3})
    for (const Gcm &a : grid(n, -3)) {
      auto t = classify_type(a);
      if (!t.symmetrizable)
        continue;
      ASSERT_EQ(t.symmetrizer.size(), static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        EXPECT_GT(t.symmetrizer[i], 0);
        for (int j = 0; j < n; ++j)
          EXPECT_EQ(t.symmetrizer[i] * a(i, j), t.symmetrizer[j] * a(j, i));
      }
    }
  // a cycle with a non-cancelling product is not symmetrizable
  auto t = classify_type(Gcm::from_rows({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}));
  EXPECT_FALSE(t.symmetrizable);
}

// the extended compact partition is unique: brute force over all partitions
TEST(Classify, ExtendedCompactUnique) {
  std::vector<Gcm> cases{extended4(), Gcm::from_rows({{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}})};
  for (const Gcm &a : grid(3, -2))
    cases.push_back(a);
  for (const Gcm &a : cases) {
    SubsetTypes types(a);
    std::vector<NodeSet> found;
    for (NodeSet I0 : subsets_of(a.all())) {
      if (I0.empty() || I0 == a.all())
        continue;
      bool ok = true;
      for (NodeSet J : subsets_of(a.all()))
        ok = ok && (types.finite(J) == !I0.subset_of(J));
      if (ok)
        found.push_back(I0);
    }
    auto t = classify_type(a);
    ASSERT_LE(found.size(), 1u);
    EXPECT_EQ(t.extended_compact.has_value(), found.size() == 1) << a.canonical_text();
    if (t.extended_compact) {
      EXPECT_EQ(t.extended_compact->core, found[0]);
      EXPECT_EQ(t.extended_compact->core | t.extended_compact->extra, a.all());
      EXPECT_FALSE(t.extended_compact->core.intersects(t.extended_compact->extra));
    }
  }
}

TEST(Spherical, Examples) {
  auto P = spherical_poset(Gcm::from_rows({{2, -2}, {-2, 2}}));
  EXPECT_EQ(P.members, (std::vector<NodeSet>{NodeSet{}, NodeSet::of({0}), NodeSet::of({1})}));

  P = spherical_poset(Gcm::from_rows({{2, -1, -2}, {-1, 2, -1}, {-1, -1, 2}}));
  EXPECT_EQ(P.members.size(), 7u);
  EXPECT_FALSE(P.contains(NodeSet::full(3)));

  P = spherical_poset(extended4());
  for (NodeSet J : subsets_of(NodeSet::full(4)))
    EXPECT_EQ(P.contains(J), !NodeSet::of({0, 1, 2}).subset_of(J));
}

TEST(Spherical, DownwardClosed) {
  for (const Gcm &a : grid(3, -3)) {
    auto P = spherical_poset(a);
    for (NodeSet J : P.members)
      for (NodeSet J2 : subsets_of(J))
        EXPECT_TRUE(P.contains(J2));
    for (int i = 0; i < 3; ++i)
      EXPECT_TRUE(P.contains(NodeSet::of({i})));
    EXPECT_TRUE(P.contains(NodeSet{}));
  }
}

TEST(CoxeterMatrix, Table) {
  EXPECT_EQ(coxeter_matrix(Gcm::from_rows({{2, -1}, {-1, 2}}))[0][1], 3);
  EXPECT_EQ(coxeter_matrix(Gcm::from_rows({{2, -2}, {-2, 2}}))[0][1], coxeter_infinity);
  EXPECT_EQ(coxeter_matrix(Gcm::from_rows({{2, 0}, {0, 2}}))[0][1], 2);
  EXPECT_EQ(coxeter_matrix(Gcm::from_rows({{2, -1}, {-2, 2}}))[0][1], 4);
  EXPECT_EQ(coxeter_matrix(Gcm::from_rows({{2, -1}, {-3, 2}}))[0][1], 6);
  EXPECT_EQ(coxeter_matrix(Gcm::from_rows({{2, -1}, {-1, 2}}))[1][1], 1);
}

// (r_i r_j)^m = e under the root action, and no smaller power is
TEST(CoxeterMatrix, RootActionOrders) {
  for (const Gcm &a : grid(3, -3)) {
    auto m = coxeter_matrix(a);
    oracle::MatrixGroup G(rows_of(a));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        auto x = G.mul(G.gens[i], G.gens[j]);
        auto p = x;
        int order = 0;
        for (int k = 1; k <= 40; ++k) {
          if (p == G.identity()) {
            order = k;
            break;
          }
          p = G.mul(p, x);
        }
        EXPECT_EQ(order, m[i][j]) << a.canonical_text() << i << j;
      }
  }
}
