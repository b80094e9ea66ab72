// Slow, independent oracles used to pin regression values. Nothing here uses
// the library's element types, keys or ball engine.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace reference {

using Rational = boost::multiprecision::cpp_rational;

// BS(1,q) as affine maps y -> m y + b; a word acts as the composition of its
// letters, leftmost outermost.
struct Affine {
  Rational m = 1, b = 0;
  bool operator<(const Affine& o) const { return m != o.m ? m < o.m : b < o.b; }
  bool operator==(const Affine& o) const { return m == o.m && b == o.b; }
};

struct BsGroup {
  int q;
  using Element = Affine;
  Element identity() const { return {}; }
  int gens() const { return 4; }
  // 0:a 1:a^-1 2:t 3:t^-1
  Element gen(int g) const {
    switch (g) {
      case 0: return {1, 1};
      case 1: return {1, -1};
      case 2: return {Rational(q), 0};
      default: return {Rational(1, q), 0};
    }
  }
  Element mul(const Element& x, const Element& y) const { return {x.m * y.m, x.m * y.b + x.b}; }
  Element inv(const Element& x) const { return {1 / x.m, -x.b / x.m}; }
  Element word(const std::string& w) const {
    Element e;
    for (char c : w) {
      int g = c == 'a' ? 0 : c == 'A' ? 1 : c == 't' ? 2 : 3;
      e = mul(e, gen(g));
    }
    return e;
  }
};

// Stallings' group inside F(a,b) x F(c,d) x F(x,y): a,b,c,d also push x onto
// the third factor, s pushes y.
struct Triple {
  std::string f[3];
  bool operator<(const Triple& o) const {
    return std::tie(f[0], f[1], f[2]) < std::tie(o.f[0], o.f[1], o.f[2]);
  }
  bool operator==(const Triple& o) const { return f[0] == o.f[0] && f[1] == o.f[1] && f[2] == o.f[2]; }
};

inline char flip(char c) { return static_cast<char>(c >= 'a' ? c - 32 : c + 32); }

inline void push(std::string& w, char c) {
  if (!w.empty() && w.back() == flip(c))
    w.pop_back();
  else
    w.push_back(c);
}

struct StallingsGroup {
  using Element = Triple;
  Element identity() const { return {}; }
  int gens() const { return 10; }
  // 0:a 1:A 2:b 3:B 4:c 5:C 6:d 7:D 8:s 9:S
  Element mul_gen(Element e, int g) const {
    static const char names[] = "aAbBcCdDsS";
    char c = names[g];
    bool neg = g % 2 == 1;
    if (g < 4) {
      push(e.f[0], c);
      push(e.f[2], neg ? 'X' : 'x');
    } else if (g < 8) {
      push(e.f[1], c);
      push(e.f[2], neg ? 'X' : 'x');
    } else {
      push(e.f[2], neg ? 'Y' : 'y');
    }
    return e;
  }
  Element word(const std::string& w) const {
    static const std::string names = "aAbBcCdDsS";
    Element e;
    for (char c : w) e = mul_gen(e, static_cast<int>(names.find(c)));
    return e;
  }
};

template <class G>
typename G::Element step(const G& grp, const typename G::Element& e, int g) {
  if constexpr (requires { grp.mul_gen(e, g); })
    return grp.mul_gen(e, g);
  else
    return grp.mul(e, grp.gen(g));
}

template <class G>
struct Ball {
  std::map<typename G::Element, int> dist;
  std::vector<std::vector<typename G::Element>> spheres;
};

template <class G>
Ball<G> ball(const G& grp, int r) {
  Ball<G> b;
  b.dist[grp.identity()] = 0;
  b.spheres.push_back({grp.identity()});
  for (int d = 0; d < r; ++d) {
    std::vector<typename G::Element> next;
    for (const auto& e : b.spheres[d])
      for (int g = 0; g < grp.gens(); ++g) {
        auto n = step(grp, e, g);
        if (b.dist.emplace(n, d + 1).second) next.push_back(n);
      }
    b.spheres.push_back(std::move(next));
  }
  return b;
}

// Plain BFS from x to y through elements of B(limit), optionally skipping one.
template <class G>
std::optional<int> bridge(const G& grp, const Ball<G>& b, const typename G::Element& x,
                          const typename G::Element& y, int limit,
                          const std::optional<typename G::Element>& avoid = std::nullopt) {
  auto inside = [&](const typename G::Element& e) {
    auto it = b.dist.find(e);
    return it != b.dist.end() && it->second <= limit && !(avoid && e == *avoid);
  };
  if (!inside(x) || !inside(y)) return std::nullopt;
  std::map<typename G::Element, int> seen{{x, 0}};
  std::deque<typename G::Element> queue{x};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    int dv = seen[v];
    if (v == y) return dv;
    for (int g = 0; g < grp.gens(); ++g) {
      auto w = step(grp, v, g);
      if (!inside(w) || seen.count(w)) continue;
      seen[w] = dv + 1;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

struct ScanRow {
  int r;
  int fmax;
  long pairs;
};

template <class G>
std::optional<ScanRow> scan_row(const G& grp, const Ball<G>& b, int r) {
  std::set<std::pair<typename G::Element, typename G::Element>> pairs;
  for (const auto& x : b.spheres[r]) {
    std::vector<typename G::Element> near;
    for (int g1 = 0; g1 < grp.gens(); ++g1) {
      auto y1 = step(grp, x, g1);
      near.push_back(y1);
      for (int g2 = 0; g2 < grp.gens(); ++g2) near.push_back(step(grp, y1, g2));
    }
    for (const auto& y : near) {
      auto it = b.dist.find(y);
      if (it == b.dist.end() || it->second != r || y == x) continue;
      pairs.insert(x < y ? std::pair{x, y} : std::pair{y, x});
    }
  }
  if (pairs.empty()) return std::nullopt;
  int fmax = 0;
  for (const auto& [x, y] : pairs) fmax = std::max(fmax, *bridge(grp, b, x, y, r));
  return ScanRow{r, fmax, static_cast<long>(pairs.size())};
}

}  // namespace reference
