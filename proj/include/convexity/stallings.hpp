#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convexity/word.hpp"

namespace convexity {

namespace st_gen {
inline constexpr std::uint8_t a = 0;
inline constexpr std::uint8_t b = 1;
inline constexpr std::uint8_t c = 2;
inline constexpr std::uint8_t d = 3;
inline constexpr std::uint8_t s = 4;
}  // namespace st_gen

// Element (u, v) of F(a,b) x F(c,d); both components freely reduced.
struct GElement {
  Word u;
  Word v;
  friend bool operator==(const GElement&, const GElement&) = default;
};

// An element of Stallings' group written as lift(quotient) * (u, v), where the
// quotient is a reduced word in a and s and (u, v) has exponent sum zero.
class StallingsElement {
 public:
  StallingsElement() = default;

  const Word& quotient() const { return quotient_; }
  const GElement& hpart() const { return h_; }
  bool is_identity() const { return quotient_.empty() && h_.u.empty() && h_.v.empty(); }

  friend bool operator==(const StallingsElement&, const StallingsElement&) = default;

 private:
  Word quotient_;
  GElement h_;
  friend class StallingsArith;
};

StallingsElement st_eval(const Word& w);
StallingsElement st_eval(std::string_view text);
StallingsElement st_mul(const StallingsElement& g, const StallingsElement& h);
StallingsElement st_inv(const StallingsElement& g);
StallingsElement st_mul_letter(const StallingsElement& g, Letter l);

bool in_H(const StallingsElement& g);
// The G-component when g lies in G (quotient is a power of a).
std::optional<GElement> as_g_element(const StallingsElement& g);

std::int64_t lambda_length(const GElement& g);
// Word length over {a,b,c,d,s} for elements of G, s*G, G*s and their s^-1
// analogues; nullopt for anything else.
std::optional<std::int64_t> gamma_length_special(const StallingsElement& g);

// "<quotient>|<u>|<v>" in the words syntax.
std::string st_key(const StallingsElement& g);
std::optional<StallingsElement> st_from_key(std::string_view key);

// The seven defining relators: four commutators and three s-commutations.
std::vector<Word> stallings_relators();

}  // namespace convexity
