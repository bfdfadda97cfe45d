#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "integer.hpp"

namespace kmdk {

struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Int> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c) {}

  void add(int r, int c, Int v) {
    if (v == 0)
      return;
    auto [it, fresh] = entries.emplace(std::make_pair(r, c), v);
    if (!fresh) {
      it->second = add_checked(it->second, v);
      if (it->second == 0)
        entries.erase(it);
    }
  }
  Int at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? 0 : it->second;
  }
  SparseMatrix transpose() const {
    SparseMatrix t(cols, rows);
    for (const auto &[rc, v] : entries)
      t.entries[{rc.second, rc.first}] = v;
    return t;
  }
  // this * o
  SparseMatrix operator*(const SparseMatrix &o) const {
    SparseMatrix p(rows, o.cols);
    std::vector<std::vector<std::pair<int, Int>>> orow(o.rows);
    for (const auto &[rc, v] : o.entries)
      orow[rc.first].emplace_back(rc.second, v);
    for (const auto &[rc, v] : entries)
      for (const auto &[c, w] : orow[rc.second])
        p.add(rc.first, c, mul_checked(v, w));
    return p;
  }
  bool operator==(const SparseMatrix &) const = default;
};

struct SmithResult {
  int rank = 0;
  std::vector<BigInt> torsion; // invariant factors > 1, ascending
};

namespace detail {

inline void dense_smith(std::vector<std::vector<BigInt>> M, SmithResult &out) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  std::vector<BigInt> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (M[i][j] != 0 && (pr < 0 || abs(M[i][j]) < abs(M[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0)
        goto done;
      std::swap(M[t], M[pr]);
      for (auto &row : M)
        std::swap(row[t], row[pc]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (M[i][t] == 0)
          continue;
        BigInt q = M[i][t] / M[t][t];
        for (int j = t; j < cols; ++j)
          M[i][j] -= q * M[t][j];
        if (M[i][t] != 0)
          clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (M[t][j] == 0)
          continue;
        BigInt q = M[t][j] / M[t][t];
        for (int i = t; i < rows; ++i)
          M[i][j] -= q * M[i][t];
        if (M[t][j] != 0)
          clean = false;
      }
      if (!clean)
        continue;
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (M[i][j] % M[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0)
        break;
      for (int j = t; j < cols; ++j)
        M[t][j] += M[bad][j];
    }
    diag.push_back(abs(M[t][t]));
  }
done:
  for (auto &d : diag) {
    ++out.rank;
    if (d != 1)
      out.torsion.push_back(d);
  }
}

} // namespace detail

// Rank and invariant factors. Unit pivots are eliminated sparsely
// (Markowitz-style, shortest rows first); whatever is left goes dense.
inline SmithResult smith(const SparseMatrix &A) {
  SmithResult out;
  std::vector<std::map<int, Int>> row(A.rows);
  std::vector<std::set<int>> col(A.cols);
  for (const auto &[rc, v] : A.entries) {
    row[rc.first][rc.second] = v;
    col[rc.second].insert(rc.first);
  }
  std::set<std::pair<std::size_t, int>> queue;
  std::vector<std::size_t> queued_size(A.rows, 0);
  std::vector<bool> alive(A.rows, true);
  auto requeue = [&](int r) {
    queue.erase({queued_size[r], r});
    if (!alive[r] || row[r].empty())
      return;
    queued_size[r] = row[r].size();
    queue.insert({queued_size[r], r});
  };
  for (int r = 0; r < A.rows; ++r)
    requeue(r);
  while (!queue.empty()) {
    auto [sz, r] = *queue.begin();
    queue.erase(queue.begin());
    int pc = -1;
    for (const auto &[c, v] : row[r])
      if ((v == 1 || v == -1) && (pc < 0 || col[c].size() < col[pc].size()))
        pc = c;
    if (pc < 0)
      continue; // stays out until one of its entries changes
    const Int pv = row[r][pc];
    std::vector<int> others(col[pc].begin(), col[pc].end());
    for (int s : others) {
      if (s == r)
        continue;
      const Int f = mul_checked(row[s][pc], pv);
      for (const auto &[c, v] : row[r]) {
        Int nv = axpy_checked(row[s].count(c) ? row[s][c] : 0, f, v);
        if (nv == 0) {
          row[s].erase(c);
          col[c].erase(s);
        } else {
          row[s][c] = nv;
          col[c].insert(s);
        }
      }
      requeue(s);
    }
    for (const auto &[c, v] : row[r])
      col[c].erase(r);
    row[r].clear();
    alive[r] = false;
    ++out.rank;
  }
  std::map<int, int> cidx;
  std::vector<int> ridx;
  for (int r = 0; r < A.rows; ++r)
    if (!row[r].empty()) {
      ridx.push_back(r);
      for (const auto &[c, v] : row[r])
        cidx.emplace(c, 0);
    }
  if (ridx.empty())
    return out;
  int k = 0;
  for (auto &[c, i] : cidx)
    i = k++;
  std::vector<std::vector<BigInt>> M(ridx.size(), std::vector<BigInt>(cidx.size()));
  for (std::size_t i = 0; i < ridx.size(); ++i)
    for (const auto &[c, v] : row[ridx[i]])
      M[i][cidx[c]] = v;
  detail::dense_smith(std::move(M), out);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

struct DegreeGroup {
  Int rank = 0;
  std::vector<BigInt> torsion;
  bool zero() const { return rank == 0 && torsion.empty(); }
  bool operator==(const DegreeGroup &) const = default;
};

struct IntegerCohomology {
  std::vector<DegreeGroup> degrees;

  const DegreeGroup &at(int p) const {
    static const DegreeGroup none;
    return p >= 0 && p < static_cast<int>(degrees.size()) ? degrees[p] : none;
  }
  Int rank(int p) const { return at(p).rank; }
  bool torsion_free() const {
    for (const auto &d : degrees)
      if (!d.torsion.empty())
        return false;
    return true;
  }
  bool operator==(const IntegerCohomology &o) const {
    const std::size_t m = std::max(degrees.size(), o.degrees.size());
    for (std::size_t p = 0; p < m; ++p)
      if (!(at(static_cast<int>(p)) == o.at(static_cast<int>(p))))
        return false;
    return true;
  }
};

inline std::string group_text(const DegreeGroup &g) {
  if (g.zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  if (g.rank > 0) {
    os << "Z^" << g.rank;
    first = false;
  }
  for (const auto &t : g.torsion) {
    os << (first ? "" : " ⊕ ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

// d[p] : C^p -> C^{p+1}, rows = dims[p+1], cols = dims[p].
inline IntegerCohomology cochain_cohomology(const std::vector<Int> &dims,
                                            const std::vector<SparseMatrix> &d) {
  std::vector<SmithResult> s;
  for (const auto &m : d)
    s.push_back(smith(m));
  IntegerCohomology h;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    DegreeGroup g;
    g.rank = dims[p];
    if (p < s.size())
      g.rank -= s[p].rank;
    if (p >= 1 && p - 1 < s.size()) {
      g.rank -= s[p - 1].rank;
      g.torsion = s[p - 1].torsion;
    }
    h.degrees.push_back(g);
  }
  return h;
}

// b[p] : C_p -> C_{p-1} for p >= 1 (b[0] ignored).
inline IntegerCohomology chain_homology(const std::vector<Int> &dims,
                                        const std::vector<SparseMatrix> &b) {
  std::vector<SmithResult> s(b.size());
  for (std::size_t p = 1; p < b.size(); ++p)
    s[p] = smith(b[p]);
  IntegerCohomology h;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    DegreeGroup g;
    g.rank = dims[p];
    if (p >= 1 && p < s.size())
      g.rank -= s[p].rank;
    if (p + 1 < s.size()) {
      g.rank -= s[p + 1].rank;
      g.torsion = s[p + 1].torsion;
    }
    h.degrees.push_back(g);
  }
  return h;
}

} // namespace kmdk
