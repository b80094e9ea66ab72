// Exhaustive and sampled property checks shared by the unit and acceptance suites.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "convexity/bs_geodesic.hpp"
#include "convexity/models.hpp"

namespace props {

using namespace convexity;

struct Tally {
  std::uint64_t examined = 0;
  std::uint64_t failures = 0;
  std::string first;  // first failing instance

  void record(bool ok, const std::function<std::string()>& what) {
    ++examined;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  bool ok() const { return examined > 0 && failures == 0; }
};

inline std::vector<Letter> generators(int count) {
  std::vector<Letter> out;
  for (int g = 0; g < count; ++g) out.push_back(paired_letter(g));
  return out;
}

// Calls f on every freely reduced word of length 1..max_len.
template <class F>
void each_reduced(const std::vector<Letter>& gens, int max_len, F&& f) {
  Word w;
  std::function<void()> rec = [&] {
    for (Letter l : gens) {
      if (!w.empty() && w.back() == l.inverse()) continue;
      w.push_back(l);
      f(static_cast<const Word&>(w));
      if (static_cast<int>(w.length()) < max_len) rec();
      w.pop_back();
    }
  };
  rec();
}

inline bool np_family(WordClass c) { return c == WordClass::NP || c == WordClass::XNP || c == WordClass::NPX; }

inline std::string bs_text(const Word& w) { return to_string(w, Alphabet::bs()); }
inline std::string st_text(const Word& w) { return to_string(w, Alphabet::stallings()); }

// NP words equal to 1 in BS(1,2) contain t^-1 a^2i t.
inline Tally np_identities(int max_len) {
  BsParams p(2);
  Tally t;
  each_reduced(generators(4), max_len, [&](const Word& w) {
    if (classify(w) != WordClass::NP || !bs_eval(w, p).is_identity()) return;
    t.record(has_pinch(w, p), [&] { return bs_text(w); });
  });
  return t;
}

// Words in NP, NPX or XNP whose tilde word has a pinch are not geodesic.
inline Tally pinch_not_geodesic(int max_len) {
  BsParams p(2);
  Tally t;
  each_reduced(generators(4), max_len, [&](const Word& w) {
    if (!np_family(classify(w)) || !has_pinch(tilde(w, p), p)) return;
    t.record(!is_geodesic(w, p), [&] { return bs_text(w); });
  });
  return t;
}

// Geodesics a^k0 x1 a^k1 x2 a^k2 in E, N or P (|k_i| <= 5) have length <= 17.
inline Tally short_geodesics() {
  BsParams p(2);
  Tally t;
  const int xs[] = {0, 1, -1};
  for (int x1 : xs)
    for (int x2 : xs) {
      if (x1 * x2 < 0) continue;
      for (int k0 = -5; k0 <= 5; ++k0)
        for (int k1 = -5; k1 <= 5; ++k1)
          for (int k2 = -5; k2 <= 5; ++k2) {
            Word w = Word::power(bs_gen::a, k0) + Word::power(bs_gen::t, x1) + Word::power(bs_gen::a, k1) +
                     Word::power(bs_gen::t, x2) + Word::power(bs_gen::a, k2);
            if (!is_geodesic(w, p)) continue;
            t.record(w.length() <= 17, [&] { return bs_text(w); });
          }
    }
  return t;
}

// Every geodesic word of every element of the ball, grouped by vertex.
template <GroupModel M>
std::map<std::uint32_t, std::vector<Word>> geodesic_words(const M& model, const Ball<M>& ball) {
  const BallIndex& idx = ball.index;
  std::map<std::uint32_t, std::vector<Word>> out;
  Word w;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t v) {
    out[v].push_back(w);
    if (idx.dist(v) == idx.radius()) return;
    for (int g = 0; g < idx.generator_count(); ++g) {
      auto n = idx.neighbor(v, g);
      if (n == kNoVertex || idx.dist(n) != idx.dist(v) + 1) continue;
      w.push_back(model.letter(g));
      rec(n);
      w.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::int64_t t_inverse_count(const Word& w) {
  return std::count_if(w.begin(), w.end(), [](Letter l) { return l.gen == bs_gen::t && l.sign < 0; });
}

// Geodesics w in NP, XNP or NPX and u with sigma(w) <= sigma(u), d(w, u) in
// {1, 2}: u is in the same family and the tilde words have equal N parts.
inline Tally np_pairs(int radius) {
  BsParams p(2);
  BsModel model(2);
  auto ball = build_ball(model, radius);
  const BallIndex& idx = ball.index;
  auto geos = geodesic_words(model, ball);
  Tally t;
  for (const auto& [x, ws] : geos) {
    std::vector<std::uint32_t> near;
    for (int g1 = 0; g1 < idx.generator_count(); ++g1) {
      auto y1 = idx.neighbor(x, g1);
      if (y1 == kNoVertex) continue;
      near.push_back(y1);
      for (int g2 = 0; g2 < idx.generator_count(); ++g2) near.push_back(idx.neighbor(y1, g2));
    }
    std::sort(near.begin(), near.end());
    near.erase(std::unique(near.begin(), near.end()), near.end());
    for (const Word& w : ws) {
      if (!np_family(classify(w))) continue;
      const Word wt = tilde(w, p);
      for (auto y : near) {
        if (y == kNoVertex || y == x) continue;
        for (const Word& u : geos.at(y)) {
          if (sigma_t(w) > sigma_t(u)) continue;
          const bool ok = np_family(classify(u)) && t_inverse_count(wt) == t_inverse_count(tilde(u, p));
          t.record(ok, [&] { return bs_text(w) + " " + bs_text(u); });
        }
      }
    }
  }
  return t;
}

// No geodesic of Stallings' group contains s u s^-1 or s^-1 u s with u in H.
inline Tally no_s_pinch(int radius) {
  StallingsModel model;
  auto ball = build_ball(model, radius);
  Tally t;
  for (const auto& [v, ws] : geodesic_words(model, ball))
    for (const Word& w : ws) {
      bool clean = true;
      for (std::size_t i = 0; i < w.length() && clean; ++i) {
        if (w[i].gen != st_gen::s) continue;
        for (std::size_t j = i + 1; j < w.length(); ++j) {
          if (w[j].gen == st_gen::s && w[j].sign == -w[i].sign && in_H(st_eval(w.subword(i + 1, j - i - 1))))
            clean = false;
        }
      }
      t.record(clean, [&] { return st_text(w); });
    }
  return t;
}

// Words over the generators of Stallings' group that evaluate into H have
// exponent sum zero.
inline Tally h_exponent_sum(int max_len) {
  Tally t;
  each_reduced(generators(10), max_len, [&](const Word& w) {
    if (!in_H(st_eval(w))) return;
    t.record(exp_sum(w) == 0, [&] { return st_text(w); });
  });
  return t;
}

// x h x^-1 stays in H for random h in H and every generator x.
inline Tally h_normal(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 10), gen(0, 7);
  Tally t;
  for (int n = 0; n < samples; ++n) {
    Word h;
    for (int i = len(rng); i > 0; --i) h.push_back(paired_letter(gen(rng)));
    h = h + Word::power(st_gen::a, -exp_sum(h));
    const StallingsElement eh = st_eval(h);
    t.record(in_H(eh), [&] { return st_text(h); });
    for (Letter x : generators(10)) {
      const StallingsElement c = st_mul(st_mul(st_eval(Word{x}), eh), st_eval(Word{x.inverse()}));
      t.record(in_H(c), [&] { return st_text(h) + " by " + st_text(Word{x}); });
    }
  }
  return t;
}

// Random words landing in B(radius) have length congruent to the distance mod 2.
inline Tally parity(int radius, int samples, std::uint64_t seed) {
  StallingsModel model;
  auto ball = build_ball(model, radius);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, radius + 6), gen(0, 9);
  Tally t;
  for (int n = 0; n < samples; ++n) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(paired_letter(gen(rng)));
    auto id = ball.index.find(model.key(model.eval(w)));
    if (id == kNoVertex) continue;
    t.record((ball.index.dist(id) - static_cast<int>(w.length())) % 2 == 0, [&] { return st_text(w); });
  }
  return t;
}

}  // namespace props
