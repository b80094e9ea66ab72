#include "convexity/stallings.hpp"

#include <stdexcept>

namespace convexity {
namespace {

const Alphabet& alpha() { return Alphabet::stallings(); }

// a^-k w a^k, freely reduced; w is reduced.
Word conj_by_a_power(const Word& w, std::int64_t k) {
  if (k == 0 || w.empty()) return w;
  Word out;
  const Letter step{st_gen::a, static_cast<std::int8_t>(k > 0 ? -1 : 1)};
  const std::int64_t n = k > 0 ? k : -k;
  for (std::int64_t i = 0; i < n; ++i) out.push_reduced(step);
  for (Letter l : w) out.push_reduced(l);
  for (std::int64_t i = 0; i < n; ++i) out.push_reduced(step.inverse());
  return out;
}

void append_reduced(Word& w, const Word& tail) {
  for (Letter l : tail) w.push_reduced(l);
}

std::int64_t a_sum(const Word& w) { return gen_sum(w, st_gen::a); }

GElement g_inverse(const GElement& g) { return {g.u.inverse(), g.v.inverse()}; }

}  // namespace

class StallingsArith {
 public:
  static StallingsElement make(Word q, GElement h) {
    StallingsElement g;
    g.quotient_ = std::move(q);
    g.h_ = std::move(h);
    return g;
  }
  static Word& quotient(StallingsElement& g) { return g.quotient_; }
  static GElement& hpart(StallingsElement& g) { return g.h_; }
};

StallingsElement st_mul_letter(const StallingsElement& g, Letter l) {
  StallingsElement out = g;
  Word& q = StallingsArith::quotient(out);
  GElement& h = StallingsArith::hpart(out);
  if (l.gen == st_gen::s) {
    q.push_reduced(l);
    return out;
  }
  if (l.gen > st_gen::s) throw std::invalid_argument("letter outside the Stallings alphabet");
  // x = a^e (a^-e x) with a^-e x in H
  const std::int8_t e = l.sign;
  q.push_reduced(Letter{st_gen::a, e});
  h.u = conj_by_a_power(h.u, e);
  const Letter back_a{st_gen::a, static_cast<std::int8_t>(-e)};
  switch (l.gen) {
    case st_gen::a:
      break;
    case st_gen::b:
      h.u.push_reduced(back_a);
      h.u.push_reduced(l);
      break;
    default:  // c, d commute with the u-part
      h.u.push_reduced(back_a);
      h.v.push_reduced(l);
      break;
  }
  return out;
}

StallingsElement st_eval(const Word& w) {
  StallingsElement g;
  for (Letter l : w) g = st_mul_letter(g, l);
  return g;
}

StallingsElement st_eval(std::string_view text) { return st_eval(parse_word(text, alpha())); }

StallingsElement st_mul(const StallingsElement& g, const StallingsElement& h) {
  Word q = g.quotient();
  append_reduced(q, h.quotient());
  GElement part{conj_by_a_power(g.hpart().u, a_sum(h.quotient())), g.hpart().v};
  append_reduced(part.u, h.hpart().u);
  append_reduced(part.v, h.hpart().v);
  return StallingsArith::make(std::move(q), std::move(part));
}

StallingsElement st_inv(const StallingsElement& g) {
  GElement inv = g_inverse(g.hpart());
  inv.u = conj_by_a_power(inv.u, -a_sum(g.quotient()));
  return StallingsArith::make(g.quotient().inverse(), std::move(inv));
}

bool in_H(const StallingsElement& g) { return g.quotient().empty(); }

std::optional<GElement> as_g_element(const StallingsElement& g) {
  for (Letter l : g.quotient())
    if (l.gen != st_gen::a) return std::nullopt;
  Word u = g.quotient();
  append_reduced(u, g.hpart().u);
  return GElement{std::move(u), g.hpart().v};
}

std::int64_t lambda_length(const GElement& g) {
  return static_cast<std::int64_t>(free_reduce(g.u).length() + free_reduce(g.v).length());
}

std::optional<std::int64_t> gamma_length_special(const StallingsElement& g) {
  if (auto ge = as_g_element(g)) return lambda_length(*ge);
  const Word& q = g.quotient();
  std::size_t s_pos = q.length();
  for (std::size_t i = 0; i < q.length(); ++i) {
    if (q[i].gen != st_gen::s) continue;
    if (s_pos != q.length()) return std::nullopt;  // two stable letters
    s_pos = i;
  }
  // g = q_1 s^e q_2 h with q_1, q_2 powers of a; one of them must be empty
  const bool leading = s_pos == 0, trailing = s_pos + 1 == q.length();
  if (!leading && !trailing) return std::nullopt;
  Word rest = q.prefix(s_pos) + q.suffix(q.length() - s_pos - 1);
  append_reduced(rest, g.hpart().u);
  return 1 + lambda_length(GElement{rest, g.hpart().v});
}

std::string st_key(const StallingsElement& g) {
  std::string out = to_string(g.quotient(), alpha());
  out.push_back('|');
  out += to_string(g.hpart().u, alpha());
  out.push_back('|');
  out += to_string(g.hpart().v, alpha());
  return out;
}

std::optional<StallingsElement> st_from_key(std::string_view key) {
  auto p1 = key.find('|');
  if (p1 == std::string_view::npos) return std::nullopt;
  auto p2 = key.find('|', p1 + 1);
  if (p2 == std::string_view::npos || key.find('|', p2 + 1) != std::string_view::npos) return std::nullopt;
  Word q, u, v;
  try {
    q = parse_word(key.substr(0, p1), alpha());
    u = parse_word(key.substr(p1 + 1, p2 - p1 - 1), alpha());
    v = parse_word(key.substr(p2 + 1), alpha());
  } catch (const WordSyntaxError&) {
    return std::nullopt;
  }
  auto only = [](const Word& w, std::uint8_t g1, std::uint8_t g2) {
    for (Letter l : w)
      if (l.gen != g1 && l.gen != g2) return false;
    return is_freely_reduced(w);
  };
  if (!only(q, st_gen::a, st_gen::s) || !only(u, st_gen::a, st_gen::b) || !only(v, st_gen::c, st_gen::d))
    return std::nullopt;
  if (exp_sum(u) + exp_sum(v) != 0) return std::nullopt;
  StallingsElement g = StallingsArith::make(std::move(q), GElement{std::move(u), std::move(v)});
  if (st_key(g) != key) return std::nullopt;
  return g;
}

std::vector<Word> stallings_relators() {
  std::vector<Word> out;
  for (const char* r : {"acAC", "adAD", "bcBC", "bdBD", "SAbsBa", "SAcsCa", "SAdsDa"}) out.push_back(parse_word(r, alpha()));
  return out;
}

}  // namespace convexity
