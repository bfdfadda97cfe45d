#pragma once

#include <map>
#include <string>
#include <vector>

#include "davis.hpp"
#include "snf.hpp"

namespace kmdk {

enum class Variance { Contravariant, Covariant };
enum class Direction { Limit, Colimit };

// Finite free abelian groups on the members of a family of subsets, with a
// matrix for every proper inclusion a ⊂ b. Contravariant: F(b) -> F(a)
// (rows index basis[a]); covariant: F(a) -> F(b) (rows index basis[b]).
struct FunctorOnPoset {
  Variance variance = Variance::Contravariant;
  std::vector<NodeSet> objects;
  std::vector<std::vector<std::string>> basis;
  std::map<std::pair<int, int>, SparseMatrix> maps;

  int index(NodeSet J) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), J);
    if (it == objects.end() || *it != J)
      fail(Errc::FunctorialityViolation, "object not in the poset");
    return static_cast<int>(it - objects.begin());
  }

  Int rank(int a) const { return static_cast<Int>(basis[static_cast<std::size_t>(a)].size()); }

  const SparseMatrix &map(int a, int b) const {
    auto it = maps.find({a, b});
    if (it == maps.end())
      fail(Errc::FunctorialityViolation, "missing map for an inclusion");
    return it->second;
  }

  void check_functorial() const {
    const int m = static_cast<int>(objects.size());
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (!objects[a].proper_subset_of(objects[b]))
          continue;
        const SparseMatrix &f = map(a, b);
        const bool shape_ok = variance == Variance::Contravariant
                                  ? f.rows == rank(a) && f.cols == rank(b)
                                  : f.rows == rank(b) && f.cols == rank(a);
        if (!shape_ok)
          fail(Errc::FunctorialityViolation, "map has the wrong shape");
        for (int c = 0; c < m; ++c) {
          if (!objects[b].proper_subset_of(objects[c]))
            continue;
          SparseMatrix comp = variance == Variance::Contravariant ? map(a, b) * map(b, c)
                                                                  : map(b, c) * map(a, b);
          if (!(comp.entries == map(a, c).entries))
            fail(Errc::FunctorialityViolation,
                 "square does not commute at objects " + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c));
        }
      }
  }
};

inline FunctorOnPoset constant_functor(std::vector<NodeSet> objects, Variance v) {
  FunctorOnPoset F;
  F.variance = v;
  std::sort(objects.begin(), objects.end());
  F.objects = std::move(objects);
  F.basis.assign(F.objects.size(), {"1"});
  for (std::size_t a = 0; a < F.objects.size(); ++a)
    for (std::size_t b = 0; b < F.objects.size(); ++b)
      if (F.objects[a].proper_subset_of(F.objects[b])) {
        SparseMatrix one(1, 1);
        one.add(0, 0, 1);
        F.maps[{static_cast<int>(a), static_cast<int>(b)}] = one;
      }
  return F;
}

// lim^p (contravariant F) as cohomology of the cochains on the nerve,
// C^k = ⊕ over chains J_0 ⊂ ... ⊂ J_k of F(J_0); colim_p (covariant F) as
// homology of the matching chain complex. Face 0 goes through F's map.
inline IntegerCohomology derived_limit_oracle(const FunctorOnPoset &F, Direction dir) {
  if ((dir == Direction::Limit) != (F.variance == Variance::Contravariant))
    fail(Errc::WrongType, "limits need a contravariant functor, colimits a covariant one");
  F.check_functorial();
  auto layers = chains_of(F.objects);
  std::vector<std::map<std::vector<std::uint32_t>, Int>> offset(layers.size());
  std::vector<Int> dims;
  auto key = [](const std::vector<NodeSet> &c) {
    std::vector<std::uint32_t> k;
    for (auto s : c)
      k.push_back(s.bits);
    return k;
  };
  for (std::size_t k = 0; k < layers.size(); ++k) {
    Int total = 0;
    for (const auto &c : layers[k]) {
      offset[k][key(c)] = total;
      total += F.rank(F.index(c.front()));
    }
    dims.push_back(total);
  }
  // d[k] : C_{k+1} -> C_k in chain orientation; transposed for cochains.
  std::vector<SparseMatrix> down(layers.size());
  for (std::size_t k = 1; k < layers.size(); ++k) {
    SparseMatrix m(static_cast<int>(dims[k - 1]), static_cast<int>(dims[k]));
    for (const auto &c : layers[k]) {
      const Int col0 = offset[k].at(key(c));
      const int a0 = F.index(c.front());
      for (std::size_t i = 0; i < c.size(); ++i) {
        auto face = c;
        face.erase(face.begin() + static_cast<long>(i));
        const Int row0 = offset[k - 1].at(key(face));
        const Int sign = i % 2 ? -1 : 1;
        if (i == 0) {
          const int a1 = F.index(c[1]);
          const SparseMatrix &f = F.map(a0, a1);
          // colimit: G(J_0) -> G(J_1), rows in face basis, cols in cell basis.
          // limit: F(J_1) -> F(J_0); stored transposed here, since the
          // cochain coboundary is the transpose of this matrix.
          for (const auto &[rc, v] : f.entries) {
            if (F.variance == Variance::Covariant)
              m.add(static_cast<int>(row0 + rc.first), static_cast<int>(col0 + rc.second),
                    sign * v);
            else
              m.add(static_cast<int>(row0 + rc.second), static_cast<int>(col0 + rc.first),
                    sign * v);
          }
        } else {
          for (Int x = 0; x < F.rank(a0); ++x)
            m.add(static_cast<int>(row0 + x), static_cast<int>(col0 + x), sign);
        }
      }
    }
    down[k] = std::move(m);
  }
  if (dir == Direction::Colimit)
    return chain_homology(dims, down);
  std::vector<SparseMatrix> up;
  for (std::size_t k = 1; k < layers.size(); ++k)
    up.push_back(down[k].transpose());
  return cochain_cohomology(dims, up);
}

} // namespace kmdk
