#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "gcm.hpp"
#include "snf.hpp"

namespace kmdk {

inline std::string set_text(NodeSet s, const Gcm &a) {
  std::string out = "{";
  bool first = true;
  for (int i : s.elements()) {
    out += (first ? "" : ",") + a.label(i);
    first = false;
  }
  return out + "}";
}

// Strictly increasing chains (proper inclusions) in a family of subsets,
// grouped by length; each chain lists its members smallest first.
inline std::vector<std::vector<std::vector<NodeSet>>> chains_of(const std::vector<NodeSet> &P) {
  std::vector<std::vector<std::vector<NodeSet>>> out;
  std::vector<std::vector<NodeSet>> layer;
  for (NodeSet J : P)
    layer.push_back({J});
  while (!layer.empty()) {
    out.push_back(layer);
    std::vector<std::vector<NodeSet>> next;
    for (const auto &c : layer)
      for (NodeSet J : P)
        if (c.back().proper_subset_of(J)) {
          auto d = c;
          d.push_back(J);
          next.push_back(std::move(d));
        }
    layer = std::move(next);
  }
  return out;
}

struct CellComplex {
  std::vector<Int> dims;
  std::vector<SparseMatrix> boundary; // boundary[p] : C_p -> C_{p-1}; [0] empty
};

struct SimplicialComplexDesc {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::vector<int>>> simplices; // [dim] -> sorted vertex tuples

  std::vector<Int> f_vector() const {
    std::vector<Int> f;
    for (const auto &s : simplices)
      f.push_back(static_cast<Int>(s.size()));
    return f;
  }

  CellComplex cells() const {
    CellComplex cc;
    std::vector<std::map<std::vector<int>, int>> index(simplices.size());
    for (std::size_t d = 0; d < simplices.size(); ++d) {
      cc.dims.push_back(static_cast<Int>(simplices[d].size()));
      for (std::size_t k = 0; k < simplices[d].size(); ++k)
        index[d][simplices[d][k]] = static_cast<int>(k);
    }
    cc.boundary.emplace_back();
    for (std::size_t d = 1; d < simplices.size(); ++d) {
      SparseMatrix b(static_cast<int>(simplices[d - 1].size()),
                     static_cast<int>(simplices[d].size()));
      for (std::size_t k = 0; k < simplices[d].size(); ++k) {
        const auto &s = simplices[d][k];
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto face = s;
          face.erase(face.begin() + static_cast<long>(i));
          b.add(index[d - 1].at(face), static_cast<int>(k), i % 2 ? -1 : 1);
        }
      }
      cc.boundary.push_back(std::move(b));
    }
    return cc;
  }
};

// Subcomplex membership flags, [dim][cell].
using CellFlags = std::vector<std::vector<bool>>;

// H^*(X, Y) over the integers: cochains on the cells outside Y.
inline IntegerCohomology snf_cohomology(const CellComplex &X, const CellFlags &relative_to = {}) {
  const std::size_t top = X.dims.size();
  std::vector<std::vector<int>> keep(top);
  for (std::size_t d = 0; d < top; ++d) {
    keep[d].assign(static_cast<std::size_t>(X.dims[d]), -1);
    int k = 0;
    for (Int c = 0; c < X.dims[d]; ++c) {
      bool sub = d < relative_to.size() && relative_to[d][static_cast<std::size_t>(c)];
      if (!sub)
        keep[d][static_cast<std::size_t>(c)] = k++;
    }
  }
  std::vector<Int> dims;
  for (std::size_t d = 0; d < top; ++d) {
    Int k = 0;
    for (int x : keep[d])
      k += x >= 0;
    dims.push_back(k);
  }
  std::vector<SparseMatrix> cob;
  for (std::size_t d = 0; d + 1 < top; ++d) {
    SparseMatrix m(static_cast<int>(dims[d + 1]), static_cast<int>(dims[d]));
    for (const auto &[rc, v] : X.boundary[d + 1].entries) {
      int face = keep[d][static_cast<std::size_t>(rc.first)];
      int cell = keep[d + 1][static_cast<std::size_t>(rc.second)];
      if (face >= 0 && cell >= 0)
        m.add(cell, face, v);
    }
    cob.push_back(std::move(m));
  }
  return cochain_cohomology(dims, cob);
}

inline SimplicialComplexDesc nerve_complex(const SphericalPoset &P, const Gcm &a) {
  if (P.contains(a.all()))
    fail(Errc::NotNonFinite, "finite-type matrix: the poset has a terminal object");
  SimplicialComplexDesc s;
  std::map<std::uint32_t, int> vid;
  for (NodeSet J : P.members) {
    vid[J.bits] = static_cast<int>(s.vertices.size());
    s.vertices.push_back(set_text(J, a));
  }
  for (const auto &layer : chains_of(P.members)) {
    std::vector<std::vector<int>> simp;
    for (const auto &c : layer) {
      std::vector<int> t;
      for (NodeSet J : c)
        t.push_back(vid.at(J.bits));
      std::sort(t.begin(), t.end());
      simp.push_back(std::move(t));
    }
    std::sort(simp.begin(), simp.end());
    s.simplices.push_back(std::move(simp));
  }
  return s;
}

// Poset of cell types: S(A) in general, {J ∪ J_0 : J ⊊ I_0} for the extended case.
struct DavisShape {
  std::vector<NodeSet> poset;
  NodeSet bottom; // chamber stabiliser type: J_0, or ∅
};

inline DavisShape davis_shape(const CoxeterGroup &G) {
  DavisShape s;
  const auto &t = G.type();
  if (t.extended_compact) {
    const auto &e = *t.extended_compact;
    for (NodeSet J : subsets_of(e.core))
      if (J != e.core)
        s.poset.push_back(J | e.extra);
    std::sort(s.poset.begin(), s.poset.end());
    s.bottom = e.extra;
  } else {
    s.poset = spherical_poset(G.gcm()).members;
  }
  return s;
}

struct DavisCell {
  CoxeterElement rep;          // minimal in W_K rep W_{chain.front()}
  std::vector<NodeSet> chain;
  bool operator==(const DavisCell &) const = default;
  auto operator<=>(const DavisCell &o) const {
    if (auto c = rep <=> o.rep; c != 0)
      return c;
    std::vector<std::uint32_t> a, b;
    for (auto s : chain)
      a.push_back(s.bits);
    for (auto s : o.chain)
      b.push_back(s.bits);
    return a <=> b;
  }
};

// Chambers of length <= L in W_K \ Σ (Σ_0 in the extended case) glued along
// their faces; the frontier holds cells that also meet longer chambers.
struct DavisTruncation {
  NodeSet K;
  int L = 0;
  DavisShape shape;
  std::vector<CoxeterElement> chambers;
  std::vector<std::vector<DavisCell>> cells;
  CellFlags frontier;

  CellComplex complex(const CoxeterGroup &G) const {
    CellComplex cc;
    std::vector<std::map<DavisCell, int>> index(cells.size());
    for (std::size_t d = 0; d < cells.size(); ++d) {
      cc.dims.push_back(static_cast<Int>(cells[d].size()));
      for (std::size_t k = 0; k < cells[d].size(); ++k)
        index[d][cells[d][k]] = static_cast<int>(k);
    }
    cc.boundary.emplace_back();
    for (std::size_t d = 1; d < cells.size(); ++d) {
      SparseMatrix b(static_cast<int>(cells[d - 1].size()), static_cast<int>(cells[d].size()));
      for (std::size_t k = 0; k < cells[d].size(); ++k) {
        const DavisCell &c = cells[d][k];
        for (std::size_t i = 0; i < c.chain.size(); ++i) {
          DavisCell f;
          f.chain = c.chain;
          f.chain.erase(f.chain.begin() + static_cast<long>(i));
          f.rep = i == 0 ? G.min_double(c.rep, K, f.chain.front()) : c.rep;
          b.add(index[d - 1].at(f), static_cast<int>(k), i % 2 ? -1 : 1);
        }
      }
      cc.boundary.push_back(std::move(b));
    }
    return cc;
  }
};

inline DavisTruncation davis_truncation(const CoxeterGroup &G, NodeSet K, int L) {
  DavisTruncation t;
  t.K = K;
  t.L = L;
  t.shape = davis_shape(G);
  const NodeSet B = t.shape.bottom;
  for (auto &w : G.ball(L))
    if (G.in_double(w, K, B))
      t.chambers.push_back(w);
  auto layers = chains_of(t.shape.poset);
  std::map<std::uint32_t, std::vector<CoxeterElement>> parab;
  auto parabolic = [&](NodeSet T) -> const std::vector<CoxeterElement> & {
    auto it = parab.find(T.bits);
    if (it == parab.end())
      it = parab.emplace(T.bits, G.parabolic(T)).first;
    return it->second;
  };
  for (const auto &layer : layers) {
    std::set<DavisCell> found;
    for (const auto &w : t.chambers)
      for (const auto &c : layer)
        found.insert(DavisCell{G.min_double(w, K, c.front()), c});
    t.cells.emplace_back(found.begin(), found.end());
  }
  for (auto &dim : t.cells) {
    std::vector<bool> f(dim.size(), false);
    for (std::size_t k = 0; k < dim.size(); ++k) {
      const DavisCell &c = dim[k];
      for (const auto &u : parabolic(c.chain.front()))
        if (G.min_double(G.multiply(c.rep, u), K, B).length() > L) {
          f[k] = true;
          break;
        }
    }
    t.frontier.push_back(std::move(f));
  }
  return t;
}

// H^*(U_L, frontier) for the truncation at L.
inline IntegerCohomology truncated_cohomology(const CoxeterGroup &G, NodeSet K, int L) {
  auto t = davis_truncation(G, K, L);
  return snf_cohomology(t.complex(G), t.frontier);
}

enum class Verdict { Full, Empty, Silent };

constexpr const char *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Full: return "full";
  case Verdict::Empty: return "empty";
  case Verdict::Silent: return "silent";
  }
  return "?";
}

struct SectorStep {
  CoxeterElement chamber; // minimal element of the chamber
  CoxeterElement tag;     // longest ^K W element of the chamber
  NodeSet ascents;        // P_k
  Verdict verdict = Verdict::Silent;
};

struct SectorReport {
  NodeSet K;
  int L = 0;
  int n = 0;
  NodeSet core, extra; // I_0, J_0
  std::vector<SectorStep> steps;
  bool compact = false;
  std::size_t full_steps = 0;             // over all scanned chambers
  std::vector<CoxeterElement> generators; // full tags of length <= L

  IntegerCohomology cohomology() const {
    IntegerCohomology h;
    h.degrees.assign(static_cast<std::size_t>(n + 1), DegreeGroup{});
    if (compact)
      h.degrees[0].rank = 1;
    h.degrees[static_cast<std::size_t>(n)].rank += static_cast<Int>(generators.size());
    return h;
  }
  // the same count, truncated by chambers instead of tags
  IntegerCohomology chamber_cohomology() const {
    IntegerCohomology h;
    h.degrees.assign(static_cast<std::size_t>(n + 1), DegreeGroup{});
    if (compact)
      h.degrees[0].rank = 1;
    h.degrees[static_cast<std::size_t>(n)].rank += static_cast<Int>(full_steps);
    return h;
  }
};

inline std::pair<NodeSet, NodeSet> core_and_extra(const CoxeterGroup &G) {
  const auto &t = G.type();
  if (t.extended_compact)
    return {t.extended_compact->core, t.extended_compact->extra};
  if (t.compact_type)
    return {G.all(), NodeSet{}};
  fail(Errc::NotCompactOrExtendedType, "matrix is neither compact nor extended compact type");
}

// Chambers W_K w W_{J_0} in (length, ShortLex) order of their minimal
// elements. Each chamber is read at its longest ^K W element m: the
// ascent set P = {j : l(m r_j) > l(m), m r_j ∈ ^K W} decides the step.
inline SectorReport sector_filtration_cohomology(const CoxeterGroup &G, NodeSet K, int L) {
  SectorReport rep;
  rep.K = K;
  rep.L = L;
  std::tie(rep.core, rep.extra) = core_and_extra(G);
  rep.n = rep.core.size() - 1;
  const auto bottom = G.parabolic(rep.extra);
  for (const auto &w : G.ball(L)) {
    if (!G.in_double(w, K, rep.extra))
      continue;
    SectorStep st;
    st.chamber = w;
    st.tag = w;
    for (const auto &u : bottom) {
      auto x = G.min_left(G.multiply(w, u), K);
      if (x.length() > st.tag.length())
        st.tag = x;
    }
    const NodeSet rd = G.right_descents(st.tag);
    for (int j = 0; j < G.rank(); ++j) {
      if (rd.contains(j))
        continue;
      if (G.in_min_left(G.right_mul(st.tag, j), K))
        st.ascents.insert(j);
    }
    const NodeSet &P = st.ascents;
    if (P.intersects(rep.extra) || rep.core.subset_of(P))
      st.verdict = Verdict::Full;
    else if (!P.intersects(rep.core | rep.extra))
      st.verdict = Verdict::Empty;
    rep.steps.push_back(st);
    if (st.verdict == Verdict::Full) {
      ++rep.full_steps;
      if (st.tag.length() <= L)
        rep.generators.push_back(st.tag);
    }
    if (st.verdict == Verdict::Empty) {
      rep.compact = true;
      break;
    }
  }
  std::sort(rep.generators.begin(), rep.generators.end());
  return rep;
}

struct HatSectorReport {
  NodeSet K;
  int L = 0;
  int n = 0;
  std::vector<CoxeterElement> top;    // pure: degree n
  std::vector<CoxeterElement> bottom; // fixed by W(I_0): degree 0

  IntegerCohomology cohomology() const {
    IntegerCohomology h;
    h.degrees.assign(static_cast<std::size_t>(n + 1), DegreeGroup{});
    h.degrees[0].rank = static_cast<Int>(bottom.size());
    h.degrees[static_cast<std::size_t>(n)].rank += static_cast<Int>(top.size());
    return h;
  }
};

inline HatSectorReport hat_sector_cohomology(const CoxeterGroup &G, NodeSet K, int L) {
  const auto &t = G.type();
  if (!t.extended_compact)
    fail(Errc::NotExtendedType, "matrix is not of extended compact type");
  const NodeSet core = t.extended_compact->core;
  HatSectorReport rep;
  rep.K = K;
  rep.L = L;
  rep.n = core.size() - 1;
  for (const auto &w : G.ball(L)) {
    if (!G.in_double(w, K, core))
      continue;
    NodeSet Kw = G.double_coset_intersection(w, core, K);
    if (Kw.empty())
      rep.top.push_back(w);
    else if (Kw == core)
      rep.bottom.push_back(w);
  }
  return rep;
}

} // namespace kmdk
