#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "convexity/ball.hpp"
#include "convexity/bs_element.hpp"
#include "convexity/stallings.hpp"

namespace convexity {

// Generator g is letter (g / 2) with sign + for even g, - for odd g, so g ^ 1
// is the inverse generator.
inline Letter paired_letter(int g) {
  return Letter{static_cast<std::uint8_t>(g / 2), static_cast<std::int8_t>(g % 2 ? -1 : 1)};
}
inline int generator_index(Letter l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }

class BsModel {
 public:
  using Element = BsElement;
  explicit BsModel(int q) : params_(q) {}

  const BsParams& params() const { return params_; }
  Element identity() const { return BsElement::identity(); }
  int generator_count() const { return 4; }  // a, A, t, T
  Element multiply(const Element& e, int g) const { return bs_mul_letter(e, paired_letter(g), params_); }
  std::string key(const Element& e) const { return bs_key(e); }
  std::optional<Element> from_key(std::string_view k) const { return bs_from_key(k, params_); }
  std::string descriptor() const { return "bs:q=" + std::to_string(params_.q()); }
  Letter letter(int g) const { return paired_letter(g); }
  const Alphabet& alphabet() const { return Alphabet::bs(); }
  Element eval(const Word& w) const { return bs_eval(w, params_); }

 private:
  BsParams params_;
};

class StallingsModel {
 public:
  using Element = StallingsElement;

  Element identity() const { return {}; }
  int generator_count() const { return 10; }  // a, A, b, B, c, C, d, D, s, S
  Element multiply(const Element& e, int g) const { return st_mul_letter(e, paired_letter(g)); }
  std::string key(const Element& e) const { return st_key(e); }
  std::optional<Element> from_key(std::string_view k) const { return st_from_key(k); }
  std::string descriptor() const { return "stallings"; }
  Letter letter(int g) const { return paired_letter(g); }
  const Alphabet& alphabet() const { return Alphabet::stallings(); }
  Element eval(const Word& w) const { return st_eval(w); }
};

static_assert(GroupModel<BsModel>);
static_assert(GroupModel<StallingsModel>);

}  // namespace convexity
