#pragma once

// Permutations of {0..n-1}, cycle notation, and exact orders of permutation
// groups via a deterministic Schreier-Sims stabilizer chain.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace frucht {

using BigInt = boost::multiprecision::cpp_int;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree) {
    Permutation p;
    p.image_.resize(static_cast<std::size_t>(degree));
    std::iota(p.image_.begin(), p.image_.end(), 0);
    return p;
  }

  /// Throws InputError unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<int> images) {
    std::vector<char> seen(images.size(), 0);
    for (int x : images) {
      if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[static_cast<std::size_t>(x)])
        throw InputError("image list is not a permutation");
      seen[static_cast<std::size_t>(x)] = 1;
    }
    Permutation p;
    p.image_ = std::move(images);
    return p;
  }

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const noexcept { return image_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != static_cast<int>(i)) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) r.image_[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    return r;
  }

  /// Apply `*this` first, then `next`.
  Permutation then(const Permutation& next) const {
    Permutation r;
    r.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) r.image_[i] = next(image_[i]);
    return r;
  }

  /// Function composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) { return b.then(a); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Cycle notation without fixed points, e.g. "(0 1)(2 3 4)"; identity is "()".
  std::string to_cycles() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t start = 0; start < image_.size(); ++start) {
      if (seen[start] || image_[start] == static_cast<int>(start)) continue;
      out += '(';
      std::size_t x = start;
      bool first = true;
      while (!seen[x]) {
        seen[x] = 1;
        if (!first) out += ' ';
        out += std::to_string(x);
        first = false;
        x = static_cast<std::size_t>(image_[x]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  /// Parses cycle notation on `degree` points. Cycles are applied as a
  /// product of disjoint cycles; a point may appear at most once overall.
  static Permutation parse_cycles(std::string_view text, int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw InputError("empty cycle notation");
    while (i < text.size()) {
      if (text[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
      ++i;
      std::vector<int> cycle;
      for (;;) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        if (i == text.size()) throw InputError("unterminated cycle: " + std::string(text));
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw InputError("unexpected character in cycle notation: " + std::string(text));
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          if (v > 100000000) throw InputError("point out of range in cycle notation");
          ++i;
        }
        if (v >= degree) throw InputError("point " + std::to_string(v) + " exceeds degree " + std::to_string(degree));
        if (used[static_cast<std::size_t>(v)]) throw InputError("point " + std::to_string(v) + " repeated in cycle notation");
        used[static_cast<std::size_t>(v)] = 1;
        cycle.push_back(static_cast<int>(v));
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
      skip_ws();
    }
    Permutation p;
    p.image_ = std::move(img);
    return p;
  }

 private:
  std::vector<int> image_;
};

/// Orbit partition of the group generated by `gens` on `degree` points, as
/// a representative (smallest point) per point.
inline std::vector<int> orbit_representatives(int degree, std::span<const Permutation> gens) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : gens) {
    for (int x = 0; x < degree; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> rep(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) rep[static_cast<std::size_t>(x)] = find(x);
  return rep;
}

inline int count_orbits(int degree, std::span<const Permutation> gens) {
  auto rep = orbit_representatives(degree, gens);
  int count = 0;
  for (int x = 0; x < degree; ++x) count += rep[static_cast<std::size_t>(x)] == x;
  return count;
}

/// Base and strong generating set for a permutation group.
class StabilizerChain {
 public:
  StabilizerChain(int degree, std::span<const Permutation> gens) : degree_(degree) {
    for (const auto& g : gens) {
      if (g.degree() != degree) throw InputError("generator degree mismatch");
      if (!g.is_identity()) add_strong_generator(g);
    }
    build();
  }

  const std::vector<int>& base() const noexcept { return base_; }

  BigInt order() const {
    BigInt r = 1;
    for (const auto& t : transversals_) r *= static_cast<unsigned>(t.size());
    return r;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = strip(g, 0);
    return level == static_cast<int>(base_.size()) && residue.is_identity();
  }

 private:
  using Transversal = std::unordered_map<int, Permutation>;

  void add_strong_generator(const Permutation& g) {
    // Extend the base if g fixes every current base point.
    bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return g(b) == b; });
    if (fixes_base) {
      for (int x = 0; x < degree_; ++x) {
        if (g(x) != x) {
          base_.push_back(x);
          transversals_.emplace_back();
          break;
        }
      }
    }
    strong_.push_back(g);
  }

  std::vector<const Permutation*> level_generators(int level) const {
    std::vector<const Permutation*> out;
    for (const auto& s : strong_) {
      bool ok = true;
      for (int j = 0; j < level && ok; ++j) ok = s(base_[static_cast<std::size_t>(j)]) == base_[static_cast<std::size_t>(j)];
      if (ok) out.push_back(&s);
    }
    return out;
  }

  void compute_orbit(int level) {
    auto gens = level_generators(level);
    Transversal t;
    const int b = base_[static_cast<std::size_t>(level)];
    t.emplace(b, Permutation::identity(degree_));
    std::vector<int> queue{b};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      for (const auto* s : gens) {
        const int y = (*s)(x);
        if (t.count(y)) continue;
        t.emplace(y, t.at(x).then(*s));
        queue.push_back(y);
      }
    }
    transversals_[static_cast<std::size_t>(level)] = std::move(t);
  }

  // Sifts g through levels >= from; returns the residue and the level at
  // which sifting stopped (base size when it passed every level).
  std::pair<Permutation, int> strip(Permutation g, int from) const {
    for (int l = from; l < static_cast<int>(base_.size()); ++l) {
      const auto& t = transversals_[static_cast<std::size_t>(l)];
      auto it = t.find(g(base_[static_cast<std::size_t>(l)]));
      if (it == t.end()) return {std::move(g), l};
      g = g.then(it->second.inverse());
    }
    return {std::move(g), static_cast<int>(base_.size())};
  }

  void build() {
    int level = static_cast<int>(base_.size()) - 1;
    for (int l = level; l >= 0; --l) compute_orbit(l);
    while (level >= 0) {
      compute_orbit(level);
      bool extended = false;
      auto gens = level_generators(level);
      const auto& t = transversals_[static_cast<std::size_t>(level)];
      std::vector<int> points;
      points.reserve(t.size());
      for (const auto& [pt, rep] : t) points.push_back(pt);
      std::sort(points.begin(), points.end());
      for (int beta : points) {
        for (const auto* s : gens) {
          const Permutation& u_beta = t.at(beta);
          const Permutation& u_gamma = t.at((*s)(beta));
          Permutation schreier = u_beta.then(*s).then(u_gamma.inverse());
          auto [residue, stop] = strip(std::move(schreier), level + 1);
          if (residue.is_identity()) continue;
          add_strong_generator(residue);
          // Levels between level+1 and stop gained a generator; rebuild from the deepest.
          level = std::min<int>(stop, static_cast<int>(base_.size()) - 1);
          extended = true;
          break;
        }
        if (extended) break;
      }
      if (!extended) --level;
    }
  }

  int degree_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<Transversal> transversals_;
};

/// Exact order of the group generated by `gens` on `degree` points.
inline BigInt permutation_group_order(int degree, std::span<const Permutation> gens) {
  return StabilizerChain(degree, gens).order();
}

inline BigInt permutation_group_order(std::span<const Permutation> gens) {
  if (gens.empty()) return 1;
  return permutation_group_order(gens.front().degree(), gens);
}

}  // namespace frucht
