#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "nodeset.hpp"

namespace kmdk {

class Gcm {
public:
  Gcm() = default;
  Gcm(int n, std::vector<Int> entries, std::vector<std::string> labels = {})
      : n_(n), a_(std::move(entries)), labels_(std::move(labels)) {
    if (n_ < 1 || n_ > 32)
      fail(Errc::NotAGCM, "size must be between 1 and 32");
    if (a_.size() != static_cast<std::size_t>(n_ * n_))
      fail(Errc::NotAGCM, "entry count does not match size");
    if (labels_.empty())
      for (int i = 0; i < n_; ++i)
        labels_.push_back(std::to_string(i));
    if (labels_.size() != static_cast<std::size_t>(n_))
      fail(Errc::NotAGCM, "label count does not match size");
    for (int i = 0; i < n_; ++i) {
      if ((*this)(i, i) != 2)
        fail(Errc::NotAGCM, "a[" + std::to_string(i) + "][" + std::to_string(i) +
                                "] = " + std::to_string((*this)(i, i)) + " (expected 2)");
      for (int j = 0; j < n_; ++j) {
        if (i == j)
          continue;
        if ((*this)(i, j) > 0)
          fail(Errc::NotAGCM, "a[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] = " + std::to_string((*this)(i, j)) + " is positive");
        if (((*this)(i, j) == 0) != ((*this)(j, i) == 0))
          fail(Errc::NotAGCM, "a[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] = " + std::to_string((*this)(i, j)) + " but a[" +
                                  std::to_string(j) + "][" + std::to_string(i) +
                                  "] = " + std::to_string((*this)(j, i)));
      }
    }
  }

  static Gcm from_rows(const std::vector<std::vector<Int>> &rows,
                       std::vector<std::string> labels = {}) {
    std::vector<Int> e;
    for (const auto &r : rows) {
      if (r.size() != rows.size())
        fail(Errc::NotAGCM, "matrix is not square");
      e.insert(e.end(), r.begin(), r.end());
    }
    return Gcm(static_cast<int>(rows.size()), std::move(e), std::move(labels));
  }

  int size() const { return n_; }
  Int operator()(int i, int j) const { return a_[i * n_ + j]; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(int i) const { return labels_[i]; }
  NodeSet all() const { return NodeSet::full(n_); }

  bool default_labels() const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] != std::to_string(i))
        return false;
    return true;
  }

  int index_of(std::string_view lab) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == lab)
        return i;
    return -1;
  }

  // principal submatrix on J, nodes kept in input order
  Gcm restrict(NodeSet J) const {
    auto idx = J.elements();
    std::vector<Int> e;
    std::vector<std::string> labs;
    for (int i : idx) {
      labs.push_back(labels_[i]);
      for (int j : idx)
        e.push_back((*this)(i, j));
    }
    return Gcm(static_cast<int>(idx.size()), std::move(e), std::move(labs));
  }

  std::string canonical_text() const {
    std::ostringstream os;
    os << "n " << n_ << "\nlabels";
    for (const auto &l : labels_)
      os << ' ' << l;
    os << '\n';
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j)
        os << (j ? " " : "") << (*this)(i, j);
      os << '\n';
    }
    return os.str();
  }

  // FNV-1a over the canonical text
  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_text()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

  bool operator==(const Gcm &) const = default;

private:
  int n_ = 0;
  std::vector<Int> a_;
  std::vector<std::string> labels_;
};

inline Gcm parse_gcm(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  int n = -1;
  std::vector<std::string> labels;
  std::vector<std::vector<Int>> rows;
  auto bad = [&](const std::string &m) {
    fail(Errc::MalformedFile, "line " + std::to_string(lineno) + ": " + m);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto p = raw.find('#'); p != std::string::npos)
      raw.erase(p);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n")
        bad("expected `n <size>`");
      try {
        std::size_t used = 0;
        n = std::stoi(tok[1], &used);
        if (used != tok[1].size())
          bad("bad size `" + tok[1] + "`");
      } catch (const std::logic_error &) {
        bad("bad size `" + tok[1] + "`");
      }
      if (n < 1 || n > 32)
        bad("size must be between 1 and 32");
      continue;
    }
    if (tok[0] == "labels") {
      if (!labels.empty() || !rows.empty())
        bad("labels must come once, before the rows");
      labels.assign(tok.begin() + 1, tok.end());
      if (labels.size() != static_cast<std::size_t>(n))
        bad("expected " + std::to_string(n) + " labels");
      std::set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != labels.size())
        bad("duplicate label");
      for (const auto &l : labels)
        if (l.find(',') != std::string::npos)
          bad("labels may not contain commas");
      continue;
    }
    if (rows.size() == static_cast<std::size_t>(n))
      bad("too many rows");
    if (tok.size() != static_cast<std::size_t>(n))
      bad("expected " + std::to_string(n) + " entries");
    std::vector<Int> row;
    for (const auto &t : tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size())
          bad("bad integer `" + t + "`");
        row.push_back(v);
      } catch (const std::logic_error &) {
        bad("bad integer `" + t + "`");
      }
    }
    rows.push_back(std::move(row));
  }
  if (n < 0)
    fail(Errc::MalformedFile, "missing `n <size>` line");
  if (rows.size() != static_cast<std::size_t>(n))
    fail(Errc::MalformedFile, "expected " + std::to_string(n) + " rows, got " +
                                  std::to_string(rows.size()));
  return Gcm::from_rows(rows, labels);
}

inline Gcm load_gcm(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    fail(Errc::MalformedFile, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_gcm(ss.str());
}

// Bareiss elimination on the principal submatrix of `a` indexed by J.
inline BigInt determinant(const Gcm &a, NodeSet J) {
  auto idx = J.elements();
  const int m = static_cast<int>(idx.size());
  if (m == 0)
    return 1;
  std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      M[i][j] = a(idx[i], idx[j]);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (M[k][k] == 0) {
      int p = k + 1;
      while (p < m && M[p][k] == 0)
        ++p;
      if (p == m)
        return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[m - 1][m - 1];
}

// Rank of an integer matrix given by rows, over Q.
inline int rational_rank(std::vector<std::vector<Rational>> M) {
  int r = 0;
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && M[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(M[r], M[p]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0)
        continue;
      Rational f = M[i][c] / M[r][c];
      for (int j = c; j < cols; ++j)
        M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

inline int matrix_rank(const Gcm &a) {
  std::vector<std::vector<Rational>> M(a.size(), std::vector<Rational>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      M[i][j] = a(i, j);
  return rational_rank(std::move(M));
}

// Indecomposable blocks of the principal submatrix on J.
inline std::vector<NodeSet> components(const Gcm &a, NodeSet J) {
  std::vector<NodeSet> out;
  NodeSet left = J;
  while (!left.empty()) {
    NodeSet comp;
    std::vector<int> stack{left.min_element()};
    comp.insert(stack.back());
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : J.elements())
        if (!comp.contains(j) && a(i, j) != 0) {
          comp.insert(j);
          stack.push_back(j);
        }
    }
    out.push_back(comp);
    left = left.minus(comp);
  }
  return out;
}

enum class Kind { Finite, Affine, Indefinite };

constexpr const char *kind_name(Kind k) {
  switch (k) {
  case Kind::Finite: return "finite";
  case Kind::Affine: return "affine";
  case Kind::Indefinite: return "indefinite";
  }
  return "?";
}

struct ExtendedCompact {
  NodeSet core;  // I_0
  NodeSet extra; // J_0
  bool operator==(const ExtendedCompact &) const = default;
};

struct SphericalPoset {
  std::vector<NodeSet> members;                     // sorted by (size, bits)
  std::vector<std::pair<NodeSet, NodeSet>> covers;  // J < J' with |J'| = |J|+1
  bool contains(NodeSet J) const {
    return std::binary_search(members.begin(), members.end(), J);
  }
};

struct TypeClassification {
  Kind kind = Kind::Finite;
  bool symmetrizable = false;
  std::vector<Int> symmetrizer; // positive integers, primitive per block
  bool compact_type = false;
  std::optional<ExtendedCompact> extended_compact;
  bool indecomposable = false;
  std::vector<NodeSet> blocks;
  std::vector<Kind> block_kinds;
  std::vector<NodeSet> minimal_nonfinite;
};

// Finite-type test for every principal submatrix, memoised. A_J is of
// finite type iff all its principal minors are positive.
class SubsetTypes {
public:
  explicit SubsetTypes(const Gcm &a) : a_(a) {}

  bool finite(NodeSet J) {
    if (J.size() <= 1)
      return true;
    if (auto it = memo_.find(J.bits); it != memo_.end())
      return it->second;
    bool ok = determinant(a_, J) > 0;
    for (int i : J.elements()) {
      if (!ok)
        break;
      ok = finite(J.without(i));
    }
    memo_[J.bits] = ok;
    return ok;
  }

  // Spherical members plus the minimal non-finite subsets, grown level by
  // level so that only candidates with all facets finite get a determinant.
  std::pair<std::vector<NodeSet>, std::vector<NodeSet>> sweep() {
    std::vector<NodeSet> members{NodeSet{}}, minimal;
    std::set<std::uint32_t> level{0u}, all{0u};
    const int n = a_.size();
    while (!level.empty()) {
      std::set<std::uint32_t> next;
      for (std::uint32_t b : level)
        for (int i = 0; i < n; ++i) {
          NodeSet J(b);
          if (J.contains(i))
            continue;
          NodeSet J2 = J.with(i);
          if (next.count(J2.bits))
            continue;
          bool facets = true;
          for (int k : J2.elements())
            if (!all.count(J2.without(k).bits)) {
              facets = false;
              break;
            }
          if (!facets)
            continue;
          if (determinant(a_, J2) > 0) {
            next.insert(J2.bits);
            memo_[J2.bits] = true;
          } else {
            memo_[J2.bits] = false;
            minimal.push_back(J2);
          }
        }
      for (auto b : next) {
        members.emplace_back(b);
        all.insert(b);
      }
      level = std::move(next);
    }
    std::sort(members.begin(), members.end());
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return {members, minimal};
  }

private:
  const Gcm &a_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

inline std::optional<std::vector<Int>> solve_symmetrizer(const Gcm &a) {
  const int n = a.size();
  std::vector<Rational> d(n, 0);
  std::vector<Int> out(n, 0);
  for (NodeSet comp : components(a, a.all())) {
    int root = comp.min_element();
    d[root] = 1;
    std::vector<int> stack{root};
    NodeSet seen;
    seen.insert(root);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : comp.elements()) {
        if (j == i || a(i, j) == 0)
          continue;
        Rational dj = d[i] * Rational(a(i, j)) / Rational(a(j, i));
        if (!seen.contains(j)) {
          seen.insert(j);
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    BigInt l = 1;
    for (int i : comp.elements())
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(d[i]));
    BigInt g = 0;
    for (int i : comp.elements()) {
      BigInt v = boost::multiprecision::numerator(d[i] * Rational(l));
      g = boost::multiprecision::gcd(g, v);
    }
    for (int i : comp.elements())
      out[i] = to_int(boost::multiprecision::numerator(d[i] * Rational(l)) / g);
  }
  return out;
}

inline TypeClassification classify_type(const Gcm &a) {
  TypeClassification t;
  SubsetTypes types(a);
  auto [members, minimal] = types.sweep();
  t.minimal_nonfinite = minimal;
  t.blocks = components(a, a.all());
  t.indecomposable = t.blocks.size() == 1;
  bool any_affine = false, any_indef = false;
  for (NodeSet b : t.blocks) {
    Kind k;
    if (types.finite(b)) {
      k = Kind::Finite;
    } else {
      bool facets = true;
      for (int i : b.elements())
        facets = facets && types.finite(b.without(i));
      k = (facets && determinant(a, b) == 0) ? Kind::Affine : Kind::Indefinite;
    }
    t.block_kinds.push_back(k);
    any_affine |= k == Kind::Affine;
    any_indef |= k == Kind::Indefinite;
  }
  t.kind = any_indef ? Kind::Indefinite : any_affine ? Kind::Affine : Kind::Finite;
  if (auto d = solve_symmetrizer(a)) {
    t.symmetrizable = true;
    t.symmetrizer = *d;
  }
  t.compact_type = minimal.empty() || (minimal.size() == 1 && minimal[0] == a.all());
  if (minimal.size() == 1 && minimal[0] != a.all())
    t.extended_compact = ExtendedCompact{minimal[0], a.all().minus(minimal[0])};
  return t;
}

// Primitive positive null vector of the transpose; only for indecomposable
// affine matrices.
inline std::vector<Int> dual_kac_labels(const Gcm &a) {
  auto t = classify_type(a);
  if (!(t.indecomposable && t.kind == Kind::Affine))
    fail(Errc::NotAffine, "matrix is not indecomposable affine");
  const int n = a.size();
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M[i][j] = a(j, i);
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = r;
    while (p < n && M[p][c] == 0)
      ++p;
    if (p == n)
      continue;
    std::swap(M[r], M[p]);
    Rational inv = 1 / M[r][c];
    for (int j = 0; j < n; ++j)
      M[r][j] *= inv;
    for (int i = 0; i < n; ++i)
      if (i != r && M[i][c] != 0) {
        Rational f = M[i][c];
        for (int j = 0; j < n; ++j)
          M[i][j] -= f * M[r][j];
      }
    pivcol.push_back(c);
    ++r;
  }
  int free = -1;
  for (int c = 0; c < n; ++c)
    if (std::find(pivcol.begin(), pivcol.end(), c) == pivcol.end()) {
      free = c;
      break;
    }
  std::vector<Rational> x(n, 0);
  x[free] = 1;
  for (int i = 0; i < r; ++i)
    x[pivcol[i]] = -M[i][free];
  BigInt l = 1;
  for (auto &v : x)
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
  BigInt g = 0;
  std::vector<BigInt> xi(n);
  for (int i = 0; i < n; ++i) {
    xi[i] = boost::multiprecision::numerator(x[i] * Rational(l));
    g = boost::multiprecision::gcd(g, xi[i]);
  }
  std::vector<Int> out(n);
  int sign = xi[free] < 0 ? -1 : 1;
  for (int i = 0; i < n; ++i)
    out[i] = to_int(sign * xi[i] / g);
  return out;
}

inline SphericalPoset spherical_poset(const Gcm &a) {
  SubsetTypes types(a);
  SphericalPoset p;
  p.members = types.sweep().first;
  for (NodeSet J : p.members)
    for (int i = 0; i < a.size(); ++i)
      if (!J.contains(i) && p.contains(J.with(i)))
        p.covers.emplace_back(J, J.with(i));
  return p;
}

inline constexpr int coxeter_infinity = 0;

inline std::vector<std::vector<int>> coxeter_matrix(const Gcm &a) {
  const int n = a.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      Int p = mul_checked(a(i, j), a(j, i));
      m[i][j] = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : coxeter_infinity;
    }
  return m;
}

} // namespace kmdk
