#pragma once

// Rigid connected pointed graphs indexed by hereditarily finite sets.
//
// Given pairwise non-isomorphic RCPGs R(s) for s in S and a subset x of S,
// `sabidussi_extend` builds:
//   - an apex t (the point),
//   - top vertices a_i and bottom vertices b_i, one per s_i, each layer a clique,
//   - edges t-a_i and a_i-b_i,
//   - a copy of R(s_i) whose point is joined to b_i by an edge,
//   - one pendant leaf on a_i for every s_i in x.

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace frucht {

/// Hereditarily finite set in canonical form: elements deduplicated and
/// sorted by code, shorter codes first, ties broken lexicographically.
class HFSet {
 public:
  HFSet() : code_("{}"), rank_(0) {}

  explicit HFSet(std::vector<HFSet> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    code_ = "{";
    rank_ = 0;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i) code_ += ',';
      code_ += elements_[i].code_;
      rank_ = std::max(rank_, elements_[i].rank_ + 1);
    }
    code_ += '}';
  }

  const std::vector<HFSet>& elements() const noexcept { return elements_; }
  const std::string& code() const noexcept { return code_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// Von Neumann rank: 0 for the empty set, otherwise 1 + the largest element rank.
  int rank() const noexcept { return rank_; }

  bool contains(const HFSet& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

  friend bool operator==(const HFSet& a, const HFSet& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) {
    if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  std::vector<HFSet> elements_;
  std::string code_;
  int rank_;
};

inline std::string hf_format(const HFSet& x) { return x.code(); }

/// Parses "{}" notation; whitespace is ignored.
inline HFSet hf_parse(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  };
  auto fail = [&](const std::string& what) -> HFSet {
    throw InputError("malformed set expression at offset " + std::to_string(i) + ": " + what);
  };
  auto parse = [&](auto&& self, int depth) -> HFSet {
    if (depth > 10000) return fail("nesting too deep");
    skip();
    if (i >= text.size() || text[i] != '{') return fail("expected '{'");
    ++i;
    std::vector<HFSet> elems;
    skip();
    if (i < text.size() && text[i] == '}') {
      ++i;
      return HFSet{};
    }
    for (;;) {
      elems.push_back(self(self, depth + 1));
      skip();
      if (i >= text.size()) return fail("unbalanced braces");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == '}') {
        ++i;
        break;
      }
      return fail("expected ',' or '}'");
    }
    return HFSet(std::move(elems));
  };
  HFSet out = parse(parse, 0);
  skip();
  if (i != text.size()) fail("trailing characters");
  return out;
}

/// All sets of rank at most `rank`, sorted canonically.
inline std::vector<HFSet> hf_enumerate(int rank) {
  if (rank > 4) throw CapExceeded("enumeration beyond rank 4 is too large");
  std::vector<HFSet> level;  // V_0
  for (int r = 0; r <= rank; ++r) {
    std::vector<HFSet> next;
    const std::size_t m = level.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<HFSet> elems;
      for (std::size_t j = 0; j < m; ++j)
        if (mask >> j & 1) elems.push_back(level[j]);
      next.emplace_back(std::move(elems));
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return level;
}

/// Images keyed by canonical code.
using RCPGFamily = std::map<std::string, PointedGraph>;

/// Vertex numbering: t = 0, a_i = 1+i, b_i = 1+|S|+i, then each attached
/// R(s_i) in order, then the pendant leaves.
inline PointedGraph sabidussi_extend(const RCPGFamily& family, const std::vector<HFSet>& s, const std::vector<HFSet>& x) {
  for (const auto& e : x)
    if (std::find(s.begin(), s.end(), e) == s.end()) throw InputError("subset element " + e.code() + " is not in S");
  for (const auto& e : s)
    if (!family.count(e.code())) throw InputError("no graph assigned to " + e.code());
  const int k = static_cast<int>(s.size());
  GraphBuilder b;
  const int t = b.add_vertex();
  const int top = b.add_vertices(k);
  const int bottom = b.add_vertices(k);
  for (int i = 0; i < k; ++i) {
    b.add_edge(t, top + i);
    b.add_edge(top + i, bottom + i);
    for (int j = i + 1; j < k; ++j) {
      b.add_edge(top + i, top + j);
      b.add_edge(bottom + i, bottom + j);
    }
  }
  for (int i = 0; i < k; ++i) {
    const auto& r = family.at(s[static_cast<std::size_t>(i)].code());
    const int first = b.add_vertices(r.order());
    std::vector<int> map(static_cast<std::size_t>(r.order()));
    for (int w = 0; w < r.order(); ++w) map[static_cast<std::size_t>(w)] = first + w;
    b.add_relabeled(r.graph(), map);
    b.add_edge(bottom + i, first + r.point());
  }
  for (int i = 0; i < k; ++i) {
    if (std::find(x.begin(), x.end(), s[static_cast<std::size_t>(i)]) == x.end()) continue;
    b.add_edge(top + i, b.add_vertex());
  }
  return PointedGraph(b.build(), t);
}

/// Memoized recursion: the empty set maps to K1; a nonempty set x maps to
/// sabidussi_extend(R, elements of x, x). Safe to share between threads.
class RcpgFactory {
 public:
  explicit RcpgFactory(int rank_bound = 4) : rank_bound_(rank_bound) {}

  PointedGraph get(const HFSet& x) {
    if (x.rank() > rank_bound_)
      throw CapExceeded("set rank " + std::to_string(x.rank()) + " exceeds bound " + std::to_string(rank_bound_));
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(x.code()); it != memo_.end()) return it->second;
    }
    PointedGraph result;
    if (!x.empty()) {
      RCPGFamily family;
      for (const auto& e : x.elements()) family.emplace(e.code(), get(e));
      result = sabidussi_extend(family, x.elements(), x.elements());
    }
    std::lock_guard lock(mutex_);
    return memo_.emplace(x.code(), std::move(result)).first->second;
  }

  int rank_bound() const noexcept { return rank_bound_; }

 private:
  int rank_bound_;
  std::mutex mutex_;
  RCPGFamily memo_;
};

inline PointedGraph rcpg_for_hf(const HFSet& x, int rank_bound = 4) { return RcpgFactory(rank_bound).get(x); }

}  // namespace frucht
