#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "coxeter.hpp"
#include "gcm.hpp"
#include "realization.hpp"

namespace kmdk {

enum class ConeStatus { InCone, NotInCone, Undecided };

constexpr const char *cone_status_name(ConeStatus s) {
  switch (s) {
  case ConeStatus::InCone: return "InCone";
  case ConeStatus::NotInCone: return "NotInCone";
  case ConeStatus::Undecided: return "Undecided";
  }
  return "?";
}

struct ReduceResult {
  ConeStatus status = ConeStatus::Undecided;
  Weight mu;          // dominant, when InCone
  CoxeterElement w;   // mu = w(lambda)
  int steps = 0;
  std::optional<Int> level; // the certificate, when NotInCone
};

inline bool is_dominant(const Realization &R, const Weight &lam) {
  for (int i = 0; i < R.n; ++i)
    if (lam[i] < 0)
      return false;
  return true;
}

inline bool is_dominant_for(const Weight &lam, NodeSet J) {
  for (int j : J.elements())
    if (lam[j] < 0)
      return false;
  return true;
}

inline bool is_regular_for(const Weight &lam, NodeSet J) {
  for (int j : J.elements())
    if (lam[j] <= 0)
      return false;
  return true;
}

inline Int level_with(const std::vector<Int> &labels, const Weight &lam) {
  Int s = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    s = add_checked(s, mul_checked(labels[i], lam[i]));
  return s;
}

inline Int affine_level(const CoxeterGroup &G, const Weight &lam) {
  if (G.kac_labels().empty())
    fail(Errc::NotAffine, "matrix is not indecomposable affine");
  return level_with(G.kac_labels(), lam);
}

inline Int default_max_steps(const Weight &lam) {
  Int s = 1;
  for (Int x : lam)
    s = add_checked(s, x < 0 ? -x : x);
  return mul_checked(10, s);
}

// Least-index reflection walk into the fundamental chamber.
inline ReduceResult chamber_reduce(const CoxeterGroup &G, Weight lam,
                                   std::optional<Int> max_steps = std::nullopt) {
  const Realization &R = G.realization();
  ReduceResult res;
  const Int budget = max_steps ? *max_steps : default_max_steps(lam);
  if (budget < 0)
    fail(Errc::UsageError, "max_steps must be nonnegative");
  if (!G.kac_labels().empty()) {
    // The level is W-invariant and the chamber holds only level > 0 weights
    // besides the level-0 W-fixed ones.
    Int lev = level_with(G.kac_labels(), lam);
    bool fixed = true;
    for (int i = 0; i < R.n; ++i)
      fixed = fixed && lam[i] == 0;
    if (lev < 0 || (lev == 0 && !fixed)) {
      res.status = ConeStatus::NotInCone;
      res.level = lev;
      return res;
    }
  }
  Word applied;
  for (;;) {
    int i = 0;
    while (i < R.n && lam[i] >= 0)
      ++i;
    if (i == R.n)
      break;
    if (static_cast<Int>(applied.size()) >= budget) {
      res.status = ConeStatus::Undecided;
      res.steps = static_cast<int>(applied.size());
      return res;
    }
    try {
      reflect_in_place(R, i, lam);
    } catch (const Error &e) {
      // coordinates outgrew int64: nothing decided
      if (e.code() != Errc::Overflow)
        throw;
      res.status = ConeStatus::Undecided;
      res.steps = static_cast<int>(applied.size());
      return res;
    }
    applied.push_back(i);
  }
  res.status = ConeStatus::InCone;
  res.mu = std::move(lam);
  res.steps = static_cast<int>(applied.size());
  res.w = G.normal_form(Word(applied.rbegin(), applied.rend()));
  return res;
}

inline NodeSet stratum(const Realization &R, const Weight &lam) {
  if (!is_dominant(R, lam))
    fail(Errc::NotDominant, "weight is not dominant");
  NodeSet K;
  for (int i = 0; i < R.n; ++i)
    if (lam[i] == 0)
      K.insert(i);
  return K;
}

inline Weight barycenter_weight(const Realization &R, NodeSet J) {
  if (!J.proper_subset_of(R.gcm.all()))
    fail(Errc::NotProper, "barycenter needs a proper subset");
  return R.rho_of(R.gcm.all().minus(J));
}

} // namespace kmdk
