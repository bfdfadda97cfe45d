#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "characters.hpp"
#include "coxeter.hpp"
#include "davis.hpp"
#include "format.hpp"
#include "poset_functor.hpp"
#include "weights.hpp"

namespace kmdk {

struct StratumBasis {
  NodeSet K;
  Box box;
  std::vector<Weight> weights;
  std::size_t size() const { return weights.size(); }
};

// Dominant weights of the box whose zero set on the coroots is exactly K.
inline StratumBasis stratum_basis(const Realization &R, NodeSet K, const Box &box) {
  StratumBasis sb{K, box, {}};
  std::vector<std::vector<Int>> ranges;
  for (int i = 0; i < R.n; ++i) {
    std::vector<Int> r;
    if (K.contains(i))
      r.push_back(0);
    else
      for (Int v = 1; v <= box.coroot; ++v)
        r.push_back(v);
    ranges.push_back(std::move(r));
  }
  for (int k = 0; k < R.c; ++k) {
    std::vector<Int> r;
    for (Int v = -box.complement; v <= box.complement; ++v)
      r.push_back(v);
    ranges.push_back(std::move(r));
  }
  for (const auto &r : ranges)
    if (r.empty())
      return sb;
  std::vector<std::size_t> pos(ranges.size(), 0);
  for (;;) {
    Weight w(ranges.size());
    for (std::size_t k = 0; k < ranges.size(); ++k)
      w[k] = ranges[k][pos[k]];
    sb.weights.push_back(std::move(w));
    std::size_t k = ranges.size();
    while (k > 0 && ++pos[k - 1] == ranges[k - 1].size()) {
      pos[k - 1] = 0;
      --k;
    }
    if (k == 0)
      break;
  }
  std::sort(sb.weights.begin(), sb.weights.end());
  return sb;
}

enum class ReportMode { CompactCohomology, ExtendedCohomology, CompactHomology };

constexpr const char *report_mode_name(ReportMode m) {
  switch (m) {
  case ReportMode::CompactCohomology: return "compact-cohomology";
  case ReportMode::ExtendedCohomology: return "extended-cohomology";
  case ReportMode::CompactHomology: return "compact-homology";
  }
  return "?";
}

struct Summand {
  int degree = 0;
  NodeSet K;
  bool point = true;                   // coset index set is {•}
  std::vector<CoxeterElement> cosets;  // otherwise
  StratumBasis stratum;
  bool unreduced = false;              // homology: the extra unreduced piece

  std::size_t coset_count() const { return point ? 1 : cosets.size(); }
  std::size_t rank() const { return coset_count() * stratum.size(); }
};

struct KTheoryReport {
  ReportMode mode = ReportMode::CompactCohomology;
  int n = 0;
  int r = 0;
  std::optional<int> L;
  Box box;
  std::vector<Summand> summands;

  std::size_t rank(int degree, NodeSet K) const {
    std::size_t s = 0;
    for (const auto &x : summands)
      if (x.degree == degree && x.K == K)
        s += x.rank();
    return s;
  }
  std::size_t rank(int degree) const {
    std::size_t s = 0;
    for (const auto &x : summands)
      if (x.degree == degree)
        s += x.rank();
    return s;
  }
};

inline void require_compact_nonfinite(const CoxeterGroup &G) {
  const auto &t = G.type();
  if (!t.compact_type || t.kind == Kind::Finite)
    fail(Errc::WrongType, "needs a compact-type matrix that is not of finite type");
}

inline KTheoryReport compact_type_report(const CoxeterGroup &G, const Box &box) {
  require_compact_nonfinite(G);
  const Realization &R = G.realization();
  KTheoryReport rep;
  rep.mode = ReportMode::CompactCohomology;
  rep.n = G.rank() - 1;
  rep.r = R.rank();
  rep.box = box;
  rep.summands.push_back({0, G.all(), true, {}, stratum_basis(R, G.all(), box), false});
  rep.summands.push_back({rep.n, NodeSet{}, true, {}, stratum_basis(R, NodeSet{}, box), false});
  return rep;
}

inline KTheoryReport k_homology_report(const CoxeterGroup &G, const Box &box) {
  require_compact_nonfinite(G);
  const Realization &R = G.realization();
  KTheoryReport rep;
  rep.mode = ReportMode::CompactHomology;
  rep.n = G.rank() - 1;
  rep.r = R.rank();
  rep.box = box;
  rep.summands.push_back({-rep.r, NodeSet{}, true, {}, stratum_basis(R, NodeSet{}, box), false});
  rep.summands.push_back(
      {rep.n - rep.r, G.all(), true, {}, stratum_basis(R, G.all(), box), true});
  return rep;
}

// |W / W_K| < ∞, decided blockwise: a block must lie inside K or be of
// finite type (proper standard parabolics of an infinite irreducible
// Coxeter group have infinite index).
inline bool finite_index_parabolic(const CoxeterGroup &G, NodeSet K) {
  const auto &t = G.type();
  for (std::size_t b = 0; b < t.blocks.size(); ++b)
    if (!t.blocks[b].subset_of(K) && t.block_kinds[b] != Kind::Finite)
      return false;
  return true;
}

// Maximally pure elements of ^K W^J for every K at once, over one ball.
inline std::map<std::uint32_t, std::vector<CoxeterElement>>
maximally_pure_table(const CoxeterGroup &G, NodeSet J, int L) {
  std::map<std::uint32_t, std::vector<CoxeterElement>> out;
  const auto supersets = subsets_of(G.all().minus(J));
  const auto Ks = subsets_of(G.all());
  for (const auto &w : G.ball(L)) {
    const NodeSet ld = G.left_descents(w), rd = G.right_descents(w);
    std::vector<RootVector> img(static_cast<std::size_t>(G.rank()));
    for (int j = 0; j < G.rank(); ++j)
      img[static_cast<std::size_t>(j)] = G.act_on_root(w, j);
    auto pure = [&](NodeSet K, NodeSet J2) {
      if (ld.intersects(K) || rd.intersects(J2))
        return false;
      for (int j : J2.elements()) {
        const auto &b = img[static_cast<std::size_t>(j)];
        bool inside = true, pos = false;
        for (int k = 0; k < G.rank(); ++k) {
          inside = inside && (b[static_cast<std::size_t>(k)] == 0 || K.contains(k));
          pos = pos || b[static_cast<std::size_t>(k)] > 0;
        }
        if (inside && pos)
          return false;
      }
      return true;
    };
    for (NodeSet K : Ks) {
      if (!pure(K, J))
        continue;
      bool maximal = true;
      for (NodeSet extra : supersets)
        if (!extra.empty() && pure(K, J | extra)) {
          maximal = false;
          break;
        }
      if (maximal)
        out[K.bits].push_back(w);
    }
  }
  return out;
}

inline KTheoryReport extended_type_report(const CoxeterGroup &G, int L, const Box &box) {
  const auto &t = G.type();
  if (!t.extended_compact)
    fail(Errc::WrongType, "needs an extended compact type matrix");
  const NodeSet core = t.extended_compact->core;
  const Realization &R = G.realization();
  KTheoryReport rep;
  rep.mode = ReportMode::ExtendedCohomology;
  rep.n = core.size() - 1;
  if (rep.n <= 1)
    fail(Errc::HypothesisViolated, "needs |I_0| = n + 1 with n > 1");
  rep.r = R.rank();
  rep.L = L;
  rep.box = box;
  for (NodeSet K : subsets_of(G.all()))
    if (finite_index_parabolic(G, K))
      rep.summands.push_back({0, K, true, {}, stratum_basis(R, K, box), false});
  auto table = maximally_pure_table(G, core, L);
  for (NodeSet K : subsets_of(G.all())) {
    auto it = table.find(K.bits);
    if (it == table.end())
      continue;
    rep.summands.push_back({rep.n, K, false, it->second, stratum_basis(R, K, box), false});
  }
  return rep;
}

struct ImagePredicates {
  bool regular_dominant_for_levi = false;
  bool in_image_St = false;
  bool in_image_of_r = false;
  ConeStatus cone = ConeStatus::Undecided;
};

inline ImagePredicates st_r_image_predicates(const CoxeterGroup &G, const Weight &lam,
                                             std::optional<Int> max_steps = std::nullopt) {
  const auto &t = G.type();
  if (!t.extended_compact)
    fail(Errc::WrongType, "needs an extended compact type matrix");
  ImagePredicates p;
  p.regular_dominant_for_levi = is_regular_for(lam, t.extended_compact->core);
  auto red = chamber_reduce(G, lam, max_steps);
  p.cone = red.status;
  p.in_image_St = red.status == ConeStatus::InCone && is_dominant(G.realization(), red.mu);
  bool anti = true;
  for (int j : t.extended_compact->extra.elements())
    anti = anti && lam[static_cast<std::size_t>(j)] <= 0;
  p.in_image_of_r = p.in_image_St && anti;
  return p;
}

// Weights w(tau), tau in the stratum box, reachable from tau by at most L
// ascending reflections; depth = length of the minimal coset representative.
inline std::vector<Weight> truncated_orbit(const CoxeterGroup &G, const Weight &tau, int L) {
  const Realization &R = G.realization();
  std::vector<Weight> out{tau}, layer{tau};
  std::unordered_set<Weight, VecHash> seen{tau};
  for (int d = 0; d < L && !layer.empty(); ++d) {
    std::vector<Weight> next;
    for (const auto &p : layer)
      for (int i = 0; i < R.n; ++i) {
        if (p[static_cast<std::size_t>(i)] <= 0)
          continue;
        Weight q = p;
        reflect_in_place(R, i, q);
        if (seen.insert(q).second)
          next.push_back(q);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::vector<NodeSet> oracle_objects(const CoxeterGroup &G) {
  require_compact_nonfinite(G);
  return spherical_poset(G.gcm()).members;
}

// J -> W_J-orbit sums of truncated stratum-K weights, restricted along
// inclusions; only orbits lying entirely inside the truncation count.
inline FunctorOnPoset truncated_strata_functor(const CoxeterGroup &G, NodeSet K, const Box &box,
                                               int L) {
  const Realization &R = G.realization();
  FunctorOnPoset F;
  F.variance = Variance::Contravariant;
  F.objects = oracle_objects(G);
  std::unordered_set<Weight, VecHash> S;
  for (const auto &tau : stratum_basis(R, K, box).weights)
    for (auto &w : truncated_orbit(G, tau, L))
      S.insert(std::move(w));
  std::vector<std::map<Weight, int>> idx(F.objects.size());
  std::vector<std::map<Weight, std::vector<Weight>>> orbit(F.objects.size());
  F.basis.resize(F.objects.size());
  for (std::size_t a = 0; a < F.objects.size(); ++a) {
    const NodeSet J = F.objects[a];
    for (const auto &lam : S) {
      if (!is_dominant_for(lam, J))
        continue;
      std::vector<Weight> orb{lam};
      std::set<Weight> seen{lam};
      bool inside = true;
      for (std::size_t k = 0; k < orb.size() && inside; ++k)
        for (int j : J.elements()) {
          Weight q = orb[k];
          reflect_in_place(R, j, q);
          if (seen.insert(q).second) {
            if (!S.count(q)) {
              inside = false;
              break;
            }
            orb.push_back(q);
          }
        }
      if (inside)
        orbit[a].emplace(lam, std::move(orb));
    }
    for (const auto &[lam, orb] : orbit[a]) {
      idx[a][lam] = static_cast<int>(F.basis[a].size());
      F.basis[a].push_back(weight_text(lam, R.n));
    }
  }
  for (std::size_t a = 0; a < F.objects.size(); ++a)
    for (std::size_t b = 0; b < F.objects.size(); ++b) {
      if (!F.objects[a].proper_subset_of(F.objects[b]))
        continue;
      SparseMatrix m(static_cast<int>(F.basis[a].size()), static_cast<int>(F.basis[b].size()));
      for (const auto &[lam, orb] : orbit[b]) {
        const int col = idx[b].at(lam);
        for (const auto &nu : orb)
          if (is_dominant_for(nu, F.objects[a]))
            m.add(idx[a].at(nu), col, 1);
      }
      F.maps[{static_cast<int>(a), static_cast<int>(b)}] = std::move(m);
    }
  return F;
}

// Highest weight of ±ch L_nu for the Levi on J: the term with no term
// directly above it along any alpha_j.
inline std::pair<Weight, Int> highest_term(const CoxeterGroup &G, NodeSet J,
                                           const FormalCharacter &ch) {
  const Realization &R = G.realization();
  std::optional<std::pair<Weight, Int>> found;
  for (const auto &[nu, c] : ch.terms) {
    bool top = true;
    for (int j : J.elements())
      if (ch.coefficient(add(nu, R.root(j))) != 0) {
        top = false;
        break;
      }
    if (!top)
      continue;
    if (found)
      fail(Errc::FunctorialityViolation, "induced character is not irreducible");
    found = std::make_pair(nu, c);
  }
  if (!found)
    fail(Errc::FunctorialityViolation, "induced character has no highest weight");
  return *found;
}

// J -> classes of J-regular orbits (labelled by their J-dominant member)
// meeting the truncation, pushed forward along inclusions by Dirac induction.
inline FunctorOnPoset truncated_induced_functor(const CoxeterGroup &G, NodeSet K, const Box &box,
                                                int L) {
  const Realization &R = G.realization();
  FunctorOnPoset F;
  F.variance = Variance::Covariant;
  F.objects = oracle_objects(G);
  std::vector<Weight> S;
  for (const auto &tau : stratum_basis(R, K, box).weights)
    for (auto &w : truncated_orbit(G, tau, L))
      S.push_back(std::move(w));
  std::vector<std::map<Weight, int>> idx(F.objects.size());
  F.basis.resize(F.objects.size());
  for (std::size_t a = 0; a < F.objects.size(); ++a) {
    const NodeSet J = F.objects[a];
    std::set<Weight> labels;
    for (Weight lam : S) {
      for (;;) {
        int i = -1;
        for (int j : J.elements())
          if (lam[static_cast<std::size_t>(j)] < 0) {
            i = j;
            break;
          }
        if (i < 0)
          break;
        reflect_in_place(R, i, lam);
      }
      if (is_regular_for(lam, J))
        labels.insert(lam);
    }
    for (const auto &lam : labels) {
      idx[a][lam] = static_cast<int>(F.basis[a].size());
      F.basis[a].push_back(weight_text(lam, R.n));
    }
  }
  std::map<std::uint32_t, LeviData> levi;
  for (NodeSet J : F.objects)
    levi.emplace(J.bits, LeviData(G, J));
  for (std::size_t a = 0; a < F.objects.size(); ++a)
    for (std::size_t b = 0; b < F.objects.size(); ++b) {
      if (!F.objects[a].proper_subset_of(F.objects[b]))
        continue;
      const NodeSet Jb = F.objects[b];
      const Weight rho_b = R.rho_of(Jb);
      SparseMatrix m(static_cast<int>(F.basis[b].size()), static_cast<int>(F.basis[a].size()));
      for (const auto &[lam, col] : idx[a]) {
        FormalCharacter ch = levi.at(Jb.bits).induce(G, lam);
        if (ch.empty())
          continue;
        auto [top, sign] = highest_term(G, Jb, ch);
        auto it = idx[b].find(add(top, rho_b));
        if (it == idx[b].end())
          fail(Errc::FunctorialityViolation, "induced class leaves the truncation");
        m.add(it->second, col, sign);
      }
      F.maps[{static_cast<int>(a), static_cast<int>(b)}] = std::move(m);
    }
  return F;
}

struct SplitImage {
  Int sign = 1;
  Weight tau;
  CoxeterElement w;
  NodeSet K;
  CoxeterElement coset;  // minimal rep of W_K w W_J
  Int canonical_sign = 1; // sign after moving w to the minimal rep
};

struct SplittingResult {
  SplitImage split_image;
  FormalCharacter retract_roundtrip;
  FormalCharacter input; // ch L_mu
  bool roundtrip_ok = false;
};

// Record e^tau ⊗ 1 ⊗ w with the given sign and normalise: w = k m v with
// k in W_K, v in W_J, m minimal; 1 ⊗ w = (-1)^{l(k)} 1 ⊗ m.
inline SplitImage split_with(const CoxeterGroup &G, NodeSet J, const Weight &tau,
                             const CoxeterElement &w, Int sign) {
  SplitImage s;
  s.sign = sign;
  s.tau = tau;
  s.w = w;
  s.K = stratum(G.realization(), tau);
  CoxeterElement m = w;
  int left_steps = 0;
  for (bool moved = true; moved;) {
    moved = false;
    NodeSet ld = G.left_descents(m) & s.K;
    if (!ld.empty()) {
      m = G.left_mul(ld.min_element(), m);
      ++left_steps;
      moved = true;
      continue;
    }
    NodeSet rd = G.right_descents(m) & J;
    if (!rd.empty()) {
      m = G.right_mul(m, rd.min_element());
      moved = true;
    }
  }
  s.coset = m;
  s.canonical_sign = left_steps % 2 ? -sign : sign;
  return s;
}

// e^tau ⊗ 1 ⊗ w  ↦  (-1)^{l(w)} ι_J(w^{-1} e^tau), scaled by the recorded sign.
inline FormalCharacter retract(const CoxeterGroup &G, NodeSet J, const SplitImage &s) {
  Weight lam = G.act(G.inverse(s.w), s.tau);
  FormalCharacter ch = dirac_induction(G, J, lam);
  const Int k = s.w.length() % 2 ? -s.sign : s.sign;
  return ch.scaled(k);
}

inline SplittingResult splitting_maps(const CoxeterGroup &G, NodeSet J, const Weight &mu,
                                      const Box &box) {
  const Realization &R = G.realization();
  require_finite(G, J);
  if (!is_dominant_for(mu, J))
    fail(Errc::NotDominantForLevi, "weight is not dominant for the Levi");
  auto red = chamber_reduce(G, add(mu, R.rho_of(J)));
  if (red.status != ConeStatus::InCone)
    fail(Errc::ConeReductionFailed, std::string("mu + rho_J: ") + cone_status_name(red.status));
  if (!box.contains(red.mu, R.n))
    fail(Errc::ConeReductionFailed, "reduced weight lies outside the box");
  SplittingResult out;
  out.split_image = split_with(G, J, red.mu, red.w, red.w.length() % 2 ? -1 : 1);
  out.retract_roundtrip = retract(G, J, out.split_image);
  out.input = levi_irreducible_character(G, J, mu);
  out.roundtrip_ok = out.retract_roundtrip == out.input;
  return out;
}

} // namespace kmdk
