#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gcm.hpp"
#include "realization.hpp"

namespace kmdk {

using Word = std::vector<int>;

struct VecHash {
  std::size_t operator()(const std::vector<Int> &v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Int x : v)
      h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

struct CoxeterElement {
  Word word;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  bool operator==(const CoxeterElement &) const = default;
  // (length, ShortLex)
  std::strong_ordering operator<=>(const CoxeterElement &o) const {
    if (auto c = length() <=> o.length(); c != 0)
      return c;
    return word <=> o.word;
  }
};

enum class Side { Left, Right };

// W(A) acting on the realization. Elements are identified through the
// regular orbit point w(rho); the least-index chamber walk from w(rho) back
// to rho spells the ShortLex normal form.
class CoxeterGroup {
public:
  std::size_t element_cap = 1'000'000;

  CoxeterGroup() = default;
  explicit CoxeterGroup(Gcm a)
      : R_(std::move(a)), rho_(R_.rho()), type_(classify_type(R_.gcm)) {
    if (type_.indecomposable && type_.kind == Kind::Affine)
      kac_labels_ = dual_kac_labels(R_.gcm);
  }

  const Realization &realization() const { return R_; }
  const Gcm &gcm() const { return R_.gcm; }
  int rank() const { return R_.n; }
  NodeSet all() const { return R_.gcm.all(); }
  const TypeClassification &type() const { return type_; }
  // empty unless indecomposable affine
  const std::vector<Int> &kac_labels() const { return kac_labels_; }

  void check_word(const Word &w) const {
    for (int s : w)
      if (s < 0 || s >= rank())
        fail(Errc::IndexOutOfRange, "generator index " + std::to_string(s) +
                                        " outside 0.." + std::to_string(rank() - 1));
  }

  // w(lam) with w = s_1 ... s_k: the last letter acts first
  Weight act(const Word &w, Weight lam) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      reflect_in_place(R_, *it, lam);
    return lam;
  }
  Weight act(const CoxeterElement &w, Weight lam) const { return act(w.word, std::move(lam)); }

  Weight point(const CoxeterElement &w) const { return act(w.word, rho_); }

  CoxeterElement from_point(Weight p) const {
    CoxeterElement w;
    for (;;) {
      int i = 0;
      while (i < rank() && p[i] >= 0)
        ++i;
      if (i == rank())
        break;
      w.word.push_back(i);
      reflect_in_place(R_, i, p);
    }
    return w;
  }

  CoxeterElement normal_form(const Word &w) const {
    check_word(w);
    return from_point(act(w, rho_));
  }

  CoxeterElement identity() const { return {}; }
  CoxeterElement generator(int i) const { return normal_form(Word{i}); }

  CoxeterElement multiply(const CoxeterElement &a, const CoxeterElement &b) const {
    Word w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return from_point(act(w, rho_));
  }

  CoxeterElement inverse(const CoxeterElement &a) const {
    return from_point(act(Word(a.word.rbegin(), a.word.rend()), rho_));
  }

  CoxeterElement left_mul(int i, const CoxeterElement &w) const {
    Weight p = point(w);
    reflect_in_place(R_, i, p);
    return from_point(std::move(p));
  }

  CoxeterElement right_mul(const CoxeterElement &w, int i) const {
    Word x = w.word;
    x.push_back(i);
    return from_point(act(x, rho_));
  }

  NodeSet left_descents(const CoxeterElement &w) const {
    return negative_coords(point(w));
  }

  NodeSet right_descents(const CoxeterElement &w) const {
    return negative_coords(act(Word(w.word.rbegin(), w.word.rend()), rho_));
  }

  NodeSet descent_set(const CoxeterElement &w, Side side) const {
    return side == Side::Left ? left_descents(w) : right_descents(w);
  }

  RootVector act_on_root(const CoxeterElement &w, int j) const {
    check_word(Word{j});
    RootVector beta(rank(), 0);
    beta[j] = 1;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
      reflect_root_in_place(R_.gcm, *it, beta);
    return beta;
  }

  // Lifting property: with s the first letter of w, s is a left descent of
  // w; v <= w iff (sv <= sw when sv < v) else v <= sw.
  bool bruhat_leq(CoxeterElement v, const CoxeterElement &w) const {
    if (v.length() > w.length())
      return false;
    Weight pv = point(v);
    int lv = v.length();
    for (std::size_t k = 0; k < w.word.size(); ++k) {
      const int rest = static_cast<int>(w.word.size() - k);
      if (lv > rest)
        return false;
      const int s = w.word[k];
      if (pv[s] < 0) {
        reflect_in_place(R_, s, pv);
        --lv;
      }
    }
    return lv == 0;
  }

  // Minimal element of W_J w.
  CoxeterElement min_left(const CoxeterElement &w, NodeSet J) const {
    return from_point(reduce_point(point(w), J));
  }

  // Minimal element of w W_K.
  CoxeterElement min_right(const CoxeterElement &w, NodeSet K) const {
    return inverse(min_left(inverse(w), K));
  }

  // Minimal element of W_J w W_K.
  CoxeterElement min_double(CoxeterElement w, NodeSet J, NodeSet K) const {
    for (;;) {
      CoxeterElement x = min_right(min_left(w, J), K);
      if (x == w)
        return w;
      w = std::move(x);
    }
  }

  bool in_min_left(const CoxeterElement &w, NodeSet J) const {
    return !left_descents(w).intersects(J);
  }

  // All elements of length <= L, sorted by (length, ShortLex).
  std::vector<CoxeterElement> ball(int L) const { return ball_in(all(), L); }

  // Elements of the parabolic subgroup W_J of length <= L.
  std::vector<CoxeterElement> ball_in(NodeSet J, int L) const {
    std::vector<CoxeterElement> out;
    for (auto &p : ball_points(J, L))
      out.push_back(from_point(p));
    std::sort(out.begin(), out.end());
    return out;
  }

  // The whole of W_J; ResourceExceeded when W_J is infinite or too big.
  std::vector<CoxeterElement> parabolic(NodeSet J) const {
    std::vector<CoxeterElement> out;
    for (auto &p : ball_points(J, -1))
      out.push_back(from_point(p));
    std::sort(out.begin(), out.end());
    return out;
  }

  CoxeterElement longest_element(NodeSet J) const { return parabolic(J).back(); }

  std::vector<CoxeterElement> min_coset_reps(NodeSet J, std::optional<NodeSet> K, int L) const {
    std::vector<CoxeterElement> out;
    for (auto &w : ball(L)) {
      if (left_descents(w).intersects(J))
        continue;
      if (K && right_descents(w).intersects(*K))
        continue;
      out.push_back(w);
    }
    return out;
  }

  bool is_min_double_rep(const CoxeterElement &w, NodeSet J, NodeSet K) const {
    if (left_descents(w).intersects(J))
      fail(Errc::NotMinimalLeft, "element is not minimal in its left W_J coset");
    return !right_descents(w).intersects(K);
  }

  // For w in ^K W^J: the L in J with W_K ∩ w W_J w^{-1} = w W_L w^{-1}.
  NodeSet double_coset_intersection(const CoxeterElement &w, NodeSet J, NodeSet K) const {
    if (left_descents(w).intersects(K) || right_descents(w).intersects(J))
      fail(Errc::NotMinimal, "element is not a minimal (K, J) double coset representative");
    NodeSet out;
    for (int j : J.elements()) {
      RootVector beta = act_on_root(w, j);
      bool inside = true, positive = false;
      for (int k = 0; k < rank(); ++k) {
        if (beta[k] != 0 && !K.contains(k))
          inside = false;
        positive |= beta[k] > 0;
      }
      if (inside && positive)
        out.insert(j);
    }
    return out;
  }

  bool in_double(const CoxeterElement &w, NodeSet K, NodeSet J) const {
    return !left_descents(w).intersects(K) && !right_descents(w).intersects(J);
  }

  bool is_pure(const CoxeterElement &w, NodeSet K, NodeSet J) const {
    return in_double(w, K, J) && double_coset_intersection(w, J, K).empty();
  }

  bool is_maximally_pure(const CoxeterElement &w, NodeSet K, NodeSet J) const {
    if (!is_pure(w, K, J))
      return false;
    for (NodeSet extra : subsets_of(all().minus(J))) {
      if (extra.empty())
        continue;
      if (is_pure(w, K, J | extra))
        return false;
    }
    return true;
  }

  std::vector<CoxeterElement> pure_reps(NodeSet K, NodeSet J, int L, bool maximal) const {
    std::vector<CoxeterElement> out;
    for (auto &w : ball(L))
      if (maximal ? is_maximally_pure(w, K, J) : is_pure(w, K, J))
        out.push_back(w);
    return out;
  }

  // Orbit points w(rho), w in W_J, grouped by length; L < 0 means unbounded.
  std::vector<Weight> ball_points(NodeSet J, int L) const {
    std::vector<Weight> out{rho_};
    std::unordered_set<Weight, VecHash> seen{rho_};
    std::vector<Weight> layer{rho_};
    for (int len = 0; (L < 0 || len < L) && !layer.empty(); ++len) {
      std::vector<Weight> next;
      for (const auto &p : layer)
        for (int i : J.elements()) {
          if (p[i] <= 0)
            continue;
          Weight q = p;
          reflect_in_place(R_, i, q);
          if (seen.insert(q).second) {
            if (seen.size() > element_cap)
              fail(Errc::ResourceExceeded,
                   "enumeration exceeded " + std::to_string(element_cap) + " elements");
            next.push_back(q);
          }
        }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

private:
  NodeSet negative_coords(const Weight &p) const {
    NodeSet s;
    for (int i = 0; i < rank(); ++i)
      if (p[i] < 0)
        s.insert(i);
    return s;
  }

  Weight reduce_point(Weight p, NodeSet J) const {
    for (;;) {
      int i = -1;
      for (int j : J.elements())
        if (p[j] < 0) {
          i = j;
          break;
        }
      if (i < 0)
        return p;
      reflect_in_place(R_, i, p);
    }
  }

  Realization R_;
  Weight rho_;
  TypeClassification type_;
  std::vector<Int> kac_labels_;
};

} // namespace kmdk
