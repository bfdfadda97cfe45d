#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "characters.hpp"
#include "coxeter.hpp"
#include "gcm.hpp"
#include "snf.hpp"

namespace kmdk {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t k = s.find(sep, start);
    out.push_back(s.substr(start, k == std::string_view::npos ? k : k - start));
    if (k == std::string_view::npos)
      return out;
    start = k + 1;
  }
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

inline Int parse_int(std::string_view s, Errc code = Errc::UsageError) {
  s = trim(s);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    fail(code, "not an integer: '" + std::string(s) + "'");
  return v;
}

inline int node_of(const Gcm &a, std::string_view label) {
  const int i = a.index_of(trim(label));
  if (i < 0)
    fail(Errc::IndexOutOfRange, "no node labelled '" + std::string(label) + "'");
  return i;
}

// 0,1,0 in generator labels; the identity prints as "e".
inline std::string word_text(const Word &w, const Gcm &a) {
  if (w.empty())
    return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k)
    s += (k ? "," : "") + a.label(w[k]);
  return s;
}

inline std::string word_text(const CoxeterElement &w, const Gcm &a) { return word_text(w.word, a); }

inline Word parse_word(std::string_view s, const Gcm &a) {
  Word w;
  s = trim(s);
  if (s.empty() || s == "e")
    return w;
  for (auto part : split(s, ','))
    w.push_back(node_of(a, part));
  return w;
}

// Node sets: runs of three or more consecutive default labels collapse to a..b.
inline std::string set_label_text(NodeSet s, const Gcm &a) {
  if (s.empty())
    return "{}";
  const auto el = s.elements();
  std::string out;
  for (std::size_t k = 0; k < el.size();) {
    std::size_t e = k;
    if (a.default_labels())
      while (e + 1 < el.size() && el[e + 1] == el[e] + 1)
        ++e;
    if (!out.empty())
      out += ",";
    if (e >= k + 2) {
      out += a.label(el[k]) + ".." + a.label(el[e]);
      k = e + 1;
    } else {
      out += a.label(el[k]);
      ++k;
    }
  }
  return out;
}

// Comma-separated labels, a..b ranges allowed for default labels; "" or {} is ∅.
inline NodeSet parse_set(std::string_view s, const Gcm &a) {
  NodeSet out;
  s = trim(s);
  if (s.empty() || s == "{}")
    return out;
  if (s.front() == '{' && s.back() == '}')
    s = s.substr(1, s.size() - 2);
  for (auto part : split(s, ',')) {
    part = trim(part);
    auto dots = part.find("..");
    if (dots != std::string_view::npos && a.default_labels()) {
      const Int lo = parse_int(part.substr(0, dots), Errc::IndexOutOfRange);
      const Int hi = parse_int(part.substr(dots + 2), Errc::IndexOutOfRange);
      if (lo < 0 || hi >= a.size() || lo > hi)
        fail(Errc::IndexOutOfRange, "bad node range '" + std::string(part) + "'");
      for (Int i = lo; i <= hi; ++i)
        out.insert(static_cast<int>(i));
    } else {
      out.insert(node_of(a, part));
    }
  }
  return out;
}

// 2,0/1: coroot block, then the complement block after the slash.
inline std::string weight_text(const Weight &w, int n) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k)
      s += static_cast<int>(k) == n ? "/" : ",";
    s += std::to_string(w[k]);
  }
  return s;
}

inline Weight parse_weight(std::string_view s, const Realization &R) {
  auto blocks = split(trim(s), '/');
  if (blocks.size() > 2)
    fail(Errc::UsageError, "weight has more than two blocks");
  Weight w;
  for (auto x : split(blocks[0], ','))
    w.push_back(parse_int(x));
  if (static_cast<int>(w.size()) != R.n)
    fail(Errc::UsageError, "weight needs " + std::to_string(R.n) + " coroot values");
  if (blocks.size() == 2)
    for (auto x : split(blocks[1], ','))
      w.push_back(parse_int(x));
  else if (R.c != 0)
    fail(Errc::UsageError, "weight needs a complement block of size " + std::to_string(R.c));
  if (static_cast<int>(w.size()) != R.dim())
    fail(Errc::UsageError, "complement block needs " + std::to_string(R.c) + " values");
  return w;
}

inline std::string tuple_text(const Weight &w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k)
    s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

// Highest term first.
inline std::string character_text(const FormalCharacter &f) {
  if (f.empty())
    return "0";
  std::string s;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
    const Int c = it->second;
    s += c < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
    const Int m = c < 0 ? -c : c;
    if (m != 1)
      s += std::to_string(m);
    s += "e^{" + tuple_text(it->first) + "}";
  }
  return s;
}

inline std::string character_tsv(const FormalCharacter &f, int n) {
  std::string s;
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it)
    s += std::to_string(it->second) + "\t" + weight_text(it->first, n) + "\n";
  return s;
}

inline std::string cohomology_text(const IntegerCohomology &h, const std::string &symbol = "H") {
  std::string s;
  for (std::size_t p = 0; p < h.degrees.size(); ++p)
    s += symbol + "^" + std::to_string(p) + "_c = " + group_text(h.degrees[p]) + "\n";
  return s;
}

} // namespace kmdk
