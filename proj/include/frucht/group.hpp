#pragma once

// Finite groups given by multiplication tables (identity at index 0),
// generating sets, group automorphisms and the inner-automorphism test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph_io.hpp"
#include "perm.hpp"

namespace frucht {

struct GroupOptions {
  int cap = 5040;
};

class FiniteGroup {
 public:
  /// Validates a Cayley table: square, Latin, has an identity (moved to
  /// index 0), and associative (exhaustively up to 256 elements, on a fixed
  /// pseudo-random sample of triples above that).
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table, GroupOptions options = {}) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw InputError("group table is empty");
    if (n > options.cap) throw CapExceeded("group order " + std::to_string(n) + " exceeds cap " + std::to_string(options.cap));
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
      for (int x : row)
        if (x < 0 || x >= n) throw InputError("group table entry " + std::to_string(x) + " out of range");
    }
    for (int a = 0; a < n; ++a) {
      std::vector<char> row_seen(static_cast<std::size_t>(n), 0), col_seen(static_cast<std::size_t>(n), 0);
      for (int b = 0; b < n; ++b) {
        auto& r = row_seen[static_cast<std::size_t>(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
        auto& c = col_seen[static_cast<std::size_t>(table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])];
        if (r || c) throw InputError("group table is not a Latin square");
        r = c = 1;
      }
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
      bool ok = true;
      for (int b = 0; b < n && ok; ++b)
        ok = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == b &&
             table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == b;
      if (ok) e = a;
    }
    if (e < 0) throw InputError("group table has no identity element");

    // Swap e and 0.
    auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        g.table_[g.index(relabel(a), relabel(b))] = relabel(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);

    auto assoc = [&](int a, int b, int c) {
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw InputError("group table is not associative");
    };
    if (n <= 256) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) assoc(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eed);
      auto pick = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
      for (int i = 0; i < 200000; ++i) {
        const int a = pick(), b = pick(), c = pick();
        assoc(a, b, c);
      }
    }
    g.finish();
    return g;
  }

  /// Closure of permutation generators on `degree` points, elements numbered
  /// in breadth-first discovery order from the identity. Products compose as
  /// functions: (a*b)(x) = a(b(x)).
  static FiniteGroup from_permutations(int degree, std::span<const Permutation> gens, GroupOptions options = {}) {
    if (degree < 0) throw InputError("negative degree");
    for (const auto& g : gens)
      if (g.degree() != degree) throw InputError("generator degree does not match declared degree");
    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::map<Permutation, int> index{{elems.front(), 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : gens) {
        Permutation y = elems[i] * g;
        if (index.count(y)) continue;
        if (static_cast<int>(elems.size()) >= options.cap)
          throw CapExceeded("permutation group closure exceeds cap " + std::to_string(options.cap));
        index.emplace(y, static_cast<int>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
    FiniteGroup g;
    g.n_ = static_cast<int>(elems.size());
    g.table_.resize(static_cast<std::size_t>(g.n_) * static_cast<std::size_t>(g.n_));
    for (int a = 0; a < g.n_; ++a)
      for (int b = 0; b < g.n_; ++b)
        g.table_[g.index(a, b)] = index.at(elems[static_cast<std::size_t>(a)] * elems[static_cast<std::size_t>(b)]);
    g.finish();
    return g;
  }

  int order() const noexcept { return n_; }
  int mul(int a, int b) const { return table_[index(a, b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const { return element_order_[static_cast<std::size_t>(a)]; }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) t[static_cast<std::size_t>(a)].assign(table_.begin() + static_cast<std::ptrdiff_t>(index(a, 0)), table_.begin() + static_cast<std::ptrdiff_t>(index(a, 0)) + n_);
    return t;
  }

  /// Subgroup generated by `elements`, as a sorted element list.
  std::vector<int> closure(std::span<const int> elements) const {
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int s : elements) {
        const int y = mul(queue[i], s);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  std::vector<int> center() const {
    std::vector<int> z;
    for (int a = 0; a < n_; ++a) {
      bool central = true;
      for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
      if (central) z.push_back(a);
    }
    return z;
  }

  bool is_abelian() const { return static_cast<int>(center().size()) == n_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  FiniteGroup() = default;

  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  void finish() {
    inverse_.assign(static_cast<std::size_t>(n_), -1);
    element_order_.assign(static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0) inverse_[static_cast<std::size_t>(a)] = b;
    for (int a = 0; a < n_; ++a) {
      int k = 1;
      for (int x = a; x != 0; x = mul(x, a)) ++k;
      element_order_[static_cast<std::size_t>(a)] = k;
    }
  }

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
};

/// Sorted, identity-free list of group elements that generates the group.
struct GeneratingSet {
  std::vector<int> elements;
  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;
};

/// Throws IdentityInGeneratingSet if 0 is offered, InputError on bad indices.
inline bool is_generating_set(const FiniteGroup& g, std::span<const int> elements) {
  for (int s : elements) {
    if (s < 0 || s >= g.order()) throw InputError("element " + std::to_string(s) + " out of range");
    if (s == 0) throw IdentityInGeneratingSet();
  }
  return static_cast<int>(g.closure(elements).size()) == g.order();
}

/// Sorts, deduplicates and validates; throws NotGenerating when the closure is proper.
inline GeneratingSet make_generating_set(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_generating_set(g, elements)) throw NotGenerating("elements do not generate the group");
  return GeneratingSet{std::move(elements)};
}

/// Small generating set: repeatedly add the highest-order element (lowest
/// index on ties) outside the current subgroup.
inline GeneratingSet greedy_generating_set(const FiniteGroup& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<int> sub{0};
  for (int a : order) {
    if (static_cast<int>(sub.size()) == g.order()) break;
    if (std::binary_search(sub.begin(), sub.end(), a)) continue;
    gens.push_back(a);
    sub = g.closure(gens);
  }
  return GeneratingSet{gens};
}

/// Homomorphism between two groups, as element images.
struct GroupMap {
  std::vector<int> images;
  int operator()(int a) const { return images[static_cast<std::size_t>(a)]; }
  friend bool operator==(const GroupMap&, const GroupMap&) = default;
  friend auto operator<=>(const GroupMap&, const GroupMap&) = default;
};

inline bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupMap& f) {
  if (static_cast<int>(f.images.size()) != source.order()) return false;
  for (int x : f.images)
    if (x < 0 || x >= target.order()) return false;
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (f(source.mul(a, b)) != target.mul(f(a), f(b))) return false;
  return true;
}

inline bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  if (!is_homomorphism(g, g, f)) return false;
  std::vector<int> s = f.images;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

namespace detail {

// Extends generator images to a map on the subgroup they generate, checking
// f(x*g_i) = f(x)*h_i along the way. Returns false on a conflict.
inline bool extend_on_generators(const FiniteGroup& source, const FiniteGroup& target, std::span<const int> gens,
                                 std::span<const int> images, std::vector<int>& map) {
  map.assign(static_cast<std::size_t>(source.order()), -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = source.mul(x, gens[i]);
      const int fy = target.mul(map[static_cast<std::size_t>(x)], images[i]);
      int& slot = map[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = fy;
        queue.push_back(y);
      } else if (slot != fy) {
        return false;
      }
    }
  }
  return true;
}

// Backtracks over images of `gens` with matching element orders; calls
// `visit(map)` for every bijective homomorphism found, stopping when it returns false.
template <class Visit>
void enumerate_isomorphisms(const FiniteGroup& source, const FiniteGroup& target, const GeneratingSet& gens_set,
                            Visit&& visit) {
  if (source.order() != target.order()) return;
  const auto& gens = gens_set.elements;
  std::vector<int> images(gens.size(), 0);
  std::vector<int> map;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (!extend_on_generators(source, target, std::span(gens).first(i), std::span(images).first(i), map)) return;
    if (i == gens.size()) {
      std::vector<int> s = map;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) return;
      if (!visit(GroupMap{map})) stop = true;
      return;
    }
    const int want = source.element_order(gens[i]);
    for (int h = 0; h < target.order() && !stop; ++h) {
      if (target.element_order(h) != want) continue;
      images[i] = h;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// All automorphisms, sorted lexicographically by image list.
inline std::vector<GroupMap> group_automorphisms(const FiniteGroup& g, GroupOptions options = {}) {
  if (g.order() > options.cap) throw CapExceeded("group order exceeds cap");
  std::vector<GroupMap> out;
  detail::enumerate_isomorphisms(g, g, greedy_generating_set(g), [&](GroupMap m) {
    out.push_back(std::move(m));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Conjugator x with f(y) = x y x^-1 for all y, if f is inner.
inline std::optional<int> is_inner(const FiniteGroup& g, const GroupMap& f) {
  if (!is_automorphism(g, f)) throw InputError("map is not an automorphism of the group");
  for (int x = 0; x < g.order(); ++x) {
    const int xi = g.inverse(x);
    bool ok = true;
    for (int y = 0; y < g.order() && ok; ++y) ok = f(y) == g.mul(g.mul(x, y), xi);
    if (ok) return x;
  }
  return std::nullopt;
}

inline std::optional<GroupMap> are_isomorphic(const FiniteGroup& a, const FiniteGroup& b, GroupOptions options = {}) {
  if (a.order() > options.cap || b.order() > options.cap) throw CapExceeded("group order exceeds cap");
  if (a.order() != b.order()) return std::nullopt;
  std::vector<int> oa, ob;
  for (int x = 0; x < a.order(); ++x) {
    oa.push_back(a.element_order(x));
    ob.push_back(b.element_order(x));
  }
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return std::nullopt;
  std::optional<GroupMap> found;
  detail::enumerate_isomorphisms(a, b, greedy_generating_set(a), [&](GroupMap m) {
    found = std::move(m);
    return false;
  });
  return found;
}

// Constructors for the built-in catalog.

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup::from_table(t);
}

/// Dihedral group of order 2n: element r^k s^f has index k + n*f.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InputError("dihedral group parameter must be positive");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int a = x % n, f = x / n, b = y % n, g = y / n;
      const int k = ((a + (f ? -b : b)) % n + n) % n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = k + n * ((f + g) % 2);
    }
  return FiniteGroup::from_table(t);
}

/// Pairs (a, b) have index a*|h| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order() * h.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          g.mul(x / h.order(), y / h.order()) * h.order() + h.mul(x % h.order(), y % h.order());
  return FiniteGroup::from_table(t);
}

/// Quaternion group: indices 0..7 are 1, i, j, k, -1, -i, -j, -k.
inline FiniteGroup quaternion_group() {
  // unit[a][b] = (sign, unit) for a,b in {1,i,j,k}
  static constexpr int unit[4][4][2] = {{{0, 0}, {0, 1}, {0, 2}, {0, 3}},
                                        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
                                        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
                                        {{0, 3}, {0, 2}, {1, 1}, {1, 0}}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const auto& r = unit[x % 4][y % 4];
      const int sign = (x / 4 + y / 4 + r[0]) % 2;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = r[1] + 4 * sign;
    }
  return FiniteGroup::from_table(t);
}

inline FiniteGroup symmetric_group(int degree) {
  if (degree < 1) throw InputError("degree must be positive");
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::parse_cycles("(0 1)", degree));
    std::string cyc = "(";
    for (int i = 0; i < degree; ++i) cyc += (i ? " " : "") + std::to_string(i);
    gens.push_back(Permutation::parse_cycles(cyc + ")", degree));
  }
  return FiniteGroup::from_permutations(degree, gens);
}

inline FiniteGroup alternating_group(int degree) {
  if (degree < 1) throw InputError("degree must be positive");
  std::vector<Permutation> gens;
  for (int i = 2; i < degree; ++i)
    gens.push_back(Permutation::parse_cycles("(0 1 " + std::to_string(i) + ")", degree));
  return FiniteGroup::from_permutations(degree, gens);
}

/// Element index of `p` in a group built by from_permutations with the same generators.
inline int element_index_of(int degree, std::span<const Permutation> gens, const Permutation& p) {
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<Permutation, int> index{{elems.front(), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Permutation y = elems[i] * g;
      if (index.count(y)) continue;
      index.emplace(y, static_cast<int>(elems.size()));
      elems.push_back(std::move(y));
    }
  auto it = index.find(p);
  if (it == index.end()) throw InputError("permutation is not in the group");
  return it->second;
}

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  GeneratingSet gens;
};

/// The fixed list of small groups (orders 1..12) with documented generating sets:
/// C_n uses {1}; products use one generator per factor; D_n uses {r, s} = {1, n};
/// Q8 uses {i, j}; S3 and A4 use the permutation generators they are built from.
inline std::vector<CatalogEntry> group_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 12; ++n) {
    auto g = cyclic_group(n);
    out.push_back({"C" + std::to_string(n), g, make_generating_set(g, n == 1 ? std::vector<int>{} : std::vector<int>{1})});
  }
  auto c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
  {
    auto g = direct_product(c2, c2);  // (a,b) -> 2a+b
    out.push_back({"C2xC2", g, make_generating_set(g, {2, 1})});
  }
  {
    auto g = direct_product(c2, c4);  // (a,b) -> 4a+b
    out.push_back({"C2xC4", g, make_generating_set(g, {4, 1})});
  }
  {
    auto g = direct_product(direct_product(c2, c2), c2);  // ((a,b),c) -> 4a+2b+c
    out.push_back({"C2xC2xC2", g, make_generating_set(g, {4, 2, 1})});
  }
  {
    auto g = direct_product(c3, c3);  // (a,b) -> 3a+b
    out.push_back({"C3xC3", g, make_generating_set(g, {3, 1})});
  }
  {
    std::vector<Permutation> gens{Permutation::parse_cycles("(0 1)", 3), Permutation::parse_cycles("(0 1 2)", 3)};
    auto g = FiniteGroup::from_permutations(3, gens);
    out.push_back({"S3", g, make_generating_set(g, {1, 2})});
  }
  for (int n : {4, 5, 6}) {
    auto g = dihedral_group(n);
    out.push_back({"D" + std::to_string(n), g, make_generating_set(g, {1, n})});
  }
  {
    auto g = quaternion_group();
    out.push_back({"Q8", g, make_generating_set(g, {1, 2})});
  }
  {
    std::vector<Permutation> gens{Permutation::parse_cycles("(0 1 2)", 4), Permutation::parse_cycles("(0 1)(2 3)", 4)};
    auto g = FiniteGroup::from_permutations(4, gens);
    out.push_back({"A4", g, make_generating_set(g, {1, 2})});
  }
  return out;
}

// Text format: "table <n>" followed by n rows of n entries, or
// "perm <degree>" followed by one generator per line in cycle notation.

inline FiniteGroup parse_group(std::string_view text, GroupOptions options = {}) {
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  auto next_content = [&]() -> int {
    while (i < lines.size() && detail::is_blank_or_comment(lines[i])) ++i;
    return i < lines.size() ? static_cast<int>(i) + 1 : 0;
  };
  const int header_line = next_content();
  if (!header_line) throw ParseError(0, "empty group file");
  auto header = lines[i++];
  auto sp = header.find_first_of(" \t");
  const auto tag = header.substr(0, sp);
  const auto rest = sp == std::string_view::npos ? std::string_view{} : header.substr(sp);
  if (tag == "table") {
    const int n = static_cast<int>(detail::read_ints(rest, 1, header_line)[0]);
    if (n > options.cap) throw CapExceeded("group order " + std::to_string(n) + " exceeds cap");
    std::vector<std::vector<int>> table;
    for (int r = 0; r < n; ++r) {
      const int ln = next_content();
      if (!ln) throw ParseError(0, "expected " + std::to_string(n) + " table rows, found " + std::to_string(r));
      auto row = detail::read_ints(lines[i++], static_cast<std::size_t>(n), ln);
      for (auto x : row)
        if (x >= n) throw ParseError(ln, "table entry " + std::to_string(x) + " out of range");
      table.emplace_back(row.begin(), row.end());
    }
    if (const int ln = next_content()) throw ParseError(ln, "unexpected content after table");
    return FiniteGroup::from_table(table, options);
  }
  if (tag == "perm") {
    const int degree = static_cast<int>(detail::read_ints(rest, 1, header_line)[0]);
    std::vector<Permutation> gens;
    while (const int ln = next_content()) {
      try {
        gens.push_back(Permutation::parse_cycles(lines[i++], degree));
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(ln, e.what());
      }
    }
    return FiniteGroup::from_permutations(degree, gens, options);
  }
  throw ParseError(header_line, "malformed header, expected 'table <n>' or 'perm <degree>'");
}

inline std::string format_group(const FiniteGroup& g) {
  std::string out = "table " + std::to_string(g.order()) + "\n";
  for (const auto& row : g.table()) {
    for (std::size_t b = 0; b < row.size(); ++b) out += (b ? " " : "") + std::to_string(row[b]);
    out += "\n";
  }
  return out;
}

}  // namespace frucht
