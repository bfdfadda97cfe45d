#pragma once

#include <vector>

#include "gcm.hpp"
#include "integer.hpp"

namespace kmdk {

// Coordinates: (<λ,h_1>,...,<λ,h_n> | <λ,d_1>,...,<λ,d_c>).
using Weight = std::vector<Int>;
// Coefficients over the simple roots.
using RootVector = std::vector<Int>;

struct Realization {
  Gcm gcm;
  int n = 0;
  int c = 0;
  std::vector<int> complement;
  std::vector<Weight> roots;

  Realization() = default;
  explicit Realization(Gcm a) : gcm(std::move(a)), n(gcm.size()) {
    // Greedy scan from the last column: a column that adds nothing to the
    // span of the columns to its right goes into the complement set.
    std::vector<std::vector<Rational>> kept;
    std::vector<int> dependent;
    for (int j = n - 1; j >= 0; --j) {
      std::vector<Rational> col(n);
      for (int i = 0; i < n; ++i)
        col[i] = gcm(i, j);
      kept.push_back(col);
      if (rational_rank(kept) < static_cast<int>(kept.size())) {
        kept.pop_back();
        dependent.push_back(j);
      }
    }
    complement.assign(dependent.rbegin(), dependent.rend());
    c = static_cast<int>(complement.size());
    roots.assign(n, Weight(n + c, 0));
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i)
        roots[j][i] = gcm(i, j);
      for (int k = 0; k < c; ++k)
        roots[j][n + k] = complement[k] == j ? 1 : 0;
    }
  }

  int dim() const { return n + c; }
  // realization rank 2|I| - rank(A)
  int rank() const { return n + c; }
  const Weight &root(int j) const { return roots[j]; }

  Weight zero() const { return Weight(dim(), 0); }

  Weight rho() const {
    Weight w = zero();
    for (int i = 0; i < n; ++i)
      w[i] = 1;
    return w;
  }

  // sum of h_j^* over J (dual basis weights, zero on the d's)
  Weight rho_of(NodeSet J) const {
    Weight w = zero();
    for (int j : J.elements())
      w[j] = 1;
    return w;
  }

  Weight root_weight(const RootVector &beta) const {
    Weight w = zero();
    for (int j = 0; j < n; ++j)
      if (beta[j] != 0)
        for (int k = 0; k < dim(); ++k)
          w[k] = add_checked(w[k], mul_checked(beta[j], roots[j][k]));
    return w;
  }
};

inline void reflect_in_place(const Realization &R, int i, Weight &lam) {
  const Int p = lam[i];
  if (p == 0)
    return;
  const Weight &a = R.roots[i];
  for (int k = 0; k < R.dim(); ++k)
    if (a[k] != 0)
      lam[k] = axpy_checked(lam[k], p, a[k]);
}

inline Weight reflect(const Realization &R, int i, Weight lam) {
  if (i < 0 || i >= R.n)
    fail(Errc::IndexOutOfRange, "generator index " + std::to_string(i));
  reflect_in_place(R, i, lam);
  return lam;
}

inline Weight weyl_element_rho(const Realization &R) { return R.rho(); }

// r_i on root coordinates: beta - <beta,h_i> alpha_i
inline void reflect_root_in_place(const Gcm &a, int i, RootVector &beta) {
  Int p = 0;
  for (int k = 0; k < a.size(); ++k)
    if (beta[k] != 0)
      p = add_checked(p, mul_checked(beta[k], a(i, k)));
  beta[i] = sub_checked(beta[i], p);
}

inline int root_sign(const RootVector &beta) {
  bool pos = false, neg = false;
  for (Int x : beta) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos && neg)
    fail(Errc::HypothesisViolated, "root with mixed signs");
  return pos ? 1 : neg ? -1 : 0;
}

inline Weight add(const Weight &a, const Weight &b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = add_checked(a[i], b[i]);
  return r;
}

inline Weight sub(const Weight &a, const Weight &b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = sub_checked(a[i], b[i]);
  return r;
}

} // namespace kmdk
