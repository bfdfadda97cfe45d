#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coxeter.hpp"
#include "weights.hpp"

namespace kmdk {

// Truncation window: |coroot values| <= coroot, |complement values| <= complement.
struct Box {
  Int coroot = 0;
  Int complement = 0;

  bool contains(const Weight &w, int n) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      Int b = static_cast<int>(k) < n ? coroot : complement;
      if (w[k] > b || w[k] < -b)
        return false;
    }
    return true;
  }
  bool operator==(const Box &) const = default;
};

// Finitely supported Z-valued function on weights; map order is the term
// order (lexicographic on coordinates), so the last entry leads.
class FormalCharacter {
public:
  std::map<Weight, Int> terms;
  std::optional<Box> box;
  int coroot_count = 0;
  bool truncated = false;
  std::optional<int> length_bound;

  FormalCharacter() = default;
  static FormalCharacter monomial(const Weight &w, Int c = 1) {
    FormalCharacter f;
    f.add(w, c);
    return f;
  }

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  Int coefficient(const Weight &w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }

  void add(const Weight &w, Int c) {
    if (c == 0)
      return;
    if (box && !box->contains(w, coroot_count)) {
      truncated = true;
      return;
    }
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second = add_checked(it->second, c);
      if (it->second == 0)
        terms.erase(it);
    }
  }

  void add(const FormalCharacter &o, Int scale = 1) {
    for (const auto &[w, c] : o.terms)
      add(w, mul_checked(scale, c));
    truncated |= o.truncated;
  }

  void set_box(const Box &b, int n) {
    box = b;
    coroot_count = n;
    for (auto it = terms.begin(); it != terms.end();) {
      if (!b.contains(it->first, n)) {
        truncated = true;
        it = terms.erase(it);
      } else {
        ++it;
      }
    }
  }

  FormalCharacter operator+(const FormalCharacter &o) const {
    FormalCharacter r = *this;
    r.add(o);
    return r;
  }
  FormalCharacter operator-(const FormalCharacter &o) const {
    FormalCharacter r = *this;
    r.add(o, -1);
    return r;
  }
  FormalCharacter operator*(const FormalCharacter &o) const {
    FormalCharacter r;
    r.box = box ? box : o.box;
    r.coroot_count = box ? coroot_count : o.coroot_count;
    r.truncated = truncated || o.truncated;
    for (const auto &[a, ca] : terms)
      for (const auto &[b, cb] : o.terms)
        r.add(add(a, b), mul_checked(ca, cb));
    return r;
  }
  FormalCharacter scaled(Int k) const {
    FormalCharacter r;
    r.box = box;
    r.coroot_count = coroot_count;
    r.add(*this, k);
    return r;
  }

  // equality of the underlying functions
  bool operator==(const FormalCharacter &o) const { return terms == o.terms; }

private:
  static Weight add(const Weight &a, const Weight &b) { return kmdk::add(a, b); }
};

// Exact quotient num / den by leading-term elimination. Lex order is
// compatible with addition, so every quotient term q satisfies
// q + min(den) >= min(num); crossing that floor means a remainder.
inline FormalCharacter divide_exact(FormalCharacter num, const FormalCharacter &den) {
  if (den.empty())
    fail(Errc::DivisionRemainder, "division by zero character");
  FormalCharacter q;
  if (num.empty())
    return q;
  const auto &[dlead, dcoef] = *den.terms.rbegin();
  const Weight &dmin = den.terms.begin()->first;
  const Weight floor = num.terms.begin()->first;
  while (!num.empty()) {
    const auto [nlead, ncoef] = *num.terms.rbegin();
    if (ncoef % dcoef != 0)
      fail(Errc::DivisionRemainder, "leading coefficient not divisible");
    Weight t = sub(nlead, dlead);
    if (add(t, dmin) < floor)
      fail(Errc::DivisionRemainder, "division leaves a remainder");
    Int c = ncoef / dcoef;
    q.add(t, c);
    for (const auto &[w, k] : den.terms)
      num.add(add(t, w), -mul_checked(c, k));
  }
  return q;
}

inline void require_finite(const CoxeterGroup &G, NodeSet J) {
  SubsetTypes types(G.gcm());
  if (!types.finite(J))
    fail(Errc::NotFiniteType, "parabolic subgroup is not of finite type");
}

inline std::vector<RootVector> levi_positive_roots(const CoxeterGroup &G, NodeSet J) {
  require_finite(G, J);
  const int n = G.rank();
  std::set<RootVector> seen;
  std::vector<RootVector> stack;
  for (int j : J.elements()) {
    RootVector b(n, 0);
    b[j] = 1;
    if (seen.insert(b).second)
      stack.push_back(b);
  }
  while (!stack.empty()) {
    RootVector b = stack.back();
    stack.pop_back();
    for (int j : J.elements()) {
      RootVector c = b;
      reflect_root_in_place(G.gcm(), j, c);
      if (seen.insert(c).second)
        stack.push_back(c);
    }
  }
  std::vector<RootVector> out;
  for (const auto &b : seen)
    if (root_sign(b) > 0)
      out.push_back(b);
  std::sort(out.begin(), out.end(), [](const RootVector &x, const RootVector &y) {
    Int hx = 0, hy = 0;
    for (Int v : x) hx += v;
    for (Int v : y) hy += v;
    return hx != hy ? hx < hy : x > y;
  });
  return out;
}

// e^{rho_J} prod (1 -/+ e^{-alpha}) over the positive roots of the Levi.
inline FormalCharacter levi_product(const CoxeterGroup &G, NodeSet J, Int sign) {
  const Realization &R = G.realization();
  FormalCharacter f = FormalCharacter::monomial(R.rho_of(J));
  for (const auto &beta : levi_positive_roots(G, J)) {
    Weight neg = R.root_weight(beta);
    for (auto &x : neg)
      x = -x;
    FormalCharacter factor = FormalCharacter::monomial(R.zero());
    factor.add(neg, sign);
    f = f * factor;
  }
  return f;
}

inline FormalCharacter weyl_denominator(const CoxeterGroup &G, NodeSet J) {
  return levi_product(G, J, -1);
}

inline FormalCharacter spinor_character(const CoxeterGroup &G, NodeSet J) {
  return levi_product(G, J, 1);
}

inline FormalCharacter weyl_numerator(const CoxeterGroup &G, NodeSet J, const Weight &lam) {
  require_finite(G, J);
  FormalCharacter f;
  for (const auto &w : G.parabolic(J))
    f.add(G.act(w, lam), w.length() % 2 ? -1 : 1);
  return f;
}

// Truncated full-W numerator over ball(L).
inline FormalCharacter weyl_numerator_ball(const CoxeterGroup &G, int L, const Weight &lam) {
  FormalCharacter f;
  f.length_bound = L;
  for (const auto &w : G.ball(L))
    f.add(G.act(w, lam), w.length() % 2 ? -1 : 1);
  return f;
}

inline FormalCharacter dirac_induction(const CoxeterGroup &G, NodeSet J, const Weight &mu) {
  return divide_exact(weyl_numerator(G, J, mu), weyl_denominator(G, J));
}

// W_J and A_J computed once, for repeated inductions along the same Levi.
struct LeviData {
  NodeSet J;
  std::vector<CoxeterElement> elements;
  FormalCharacter denominator;

  LeviData(const CoxeterGroup &G, NodeSet J_)
      : J(J_), elements((require_finite(G, J_), G.parabolic(J_))),
        denominator(weyl_denominator(G, J_)) {}

  FormalCharacter induce(const CoxeterGroup &G, const Weight &mu) const {
    FormalCharacter num;
    for (const auto &w : elements)
      num.add(G.act(w, mu), w.length() % 2 ? -1 : 1);
    return divide_exact(std::move(num), denominator);
  }
};

inline FormalCharacter levi_irreducible_character(const CoxeterGroup &G, NodeSet J,
                                                  const Weight &mu) {
  require_finite(G, J);
  if (!is_dominant_for(mu, J))
    fail(Errc::NotDominantForLevi, "weight is not dominant for the Levi");
  return dirac_induction(G, J, add(mu, G.realization().rho_of(J)));
}

// Literal predicate: mu dominant for the whole matrix.
inline bool ambient_dominance_test(const CoxeterGroup &G, NodeSet J, const Weight &mu) {
  require_finite(G, J);
  if (!is_dominant_for(mu, J))
    fail(Errc::NotDominantForLevi, "weight is not dominant for the Levi");
  return is_dominant(G.realization(), mu);
}

struct AmbientOracle {
  ConeStatus status = ConeStatus::InCone; // InCone: every weight reduced
  std::optional<Weight> witness;          // a weight not certified in the cone
  std::size_t weights_checked = 0;
};

// Weight-by-weight Tits-cone check of L_mu.
inline AmbientOracle ambient_dominance_oracle(const CoxeterGroup &G, NodeSet J, const Weight &mu,
                                              std::optional<Int> max_steps = std::nullopt) {
  AmbientOracle out;
  for (const auto &[nu, c] : levi_irreducible_character(G, J, mu).terms) {
    ++out.weights_checked;
    auto r = chamber_reduce(G, nu, max_steps);
    if (r.status != ConeStatus::InCone) {
      out.status = r.status;
      out.witness = nu;
      if (r.status == ConeStatus::NotInCone)
        return out;
    }
  }
  return out;
}

} // namespace kmdk
