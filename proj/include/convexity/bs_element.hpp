#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "convexity/word.hpp"

namespace convexity {

using BigInt = boost::multiprecision::cpp_int;

// Parameters of BS(1,q) = <a, t | t a t^-1 = a^q>.
class BsParams {
 public:
  explicit BsParams(int q);

  int q() const { return q_; }
  // Largest exponent allowed for a bare a-power core in a normal form.
  int c_q() const { return q_ > 2 ? q_ / 2 + 1 : 3; }
  // Digit bound floor(q/2).
  int half() const { return q_ / 2; }
  // q^k for k >= 0; small powers come from a table built at construction.
  BigInt pow(std::int64_t k) const;

  friend bool operator==(const BsParams& a, const BsParams& b) { return a.q_ == b.q_; }

 private:
  int q_;
  std::vector<BigInt> powers_;
};

// An element of BS(1,q) as the affine map x -> q^texp * x + num * q^-dpow.
// Always normalized: dpow == 0 or q does not divide num.
class BsElement {
 public:
  BsElement() = default;
  BsElement(std::int64_t texp, BigInt num, std::int64_t dpow, const BsParams& params);

  static BsElement identity() { return {}; }
  static BsElement gen_a() { return BsElement(0, 1, 0); }
  static BsElement gen_t() { return BsElement(1, 0, 0); }
  static BsElement a_power(const BigInt& m) { return BsElement(0, m, 0); }

  std::int64_t texp() const { return texp_; }
  const BigInt& num() const { return num_; }
  std::int64_t dpow() const { return dpow_; }
  bool is_identity() const { return texp_ == 0 && dpow_ == 0 && num_ == 0; }
  // Some a^m; the caller reads m from num().
  bool is_a_power() const { return texp_ == 0 && dpow_ == 0; }

  friend bool operator==(const BsElement&, const BsElement&) = default;

 private:
  BsElement(std::int64_t texp, BigInt num, std::int64_t dpow)
      : texp_(texp), num_(std::move(num)), dpow_(dpow) {}

  std::int64_t texp_ = 0;
  BigInt num_ = 0;
  std::int64_t dpow_ = 0;

  friend class BsArith;
};

// g * h with h applied first, so evaluation is a left-to-right fold.
BsElement bs_mul(const BsElement& g, const BsElement& h, const BsParams& params);
BsElement bs_inv(const BsElement& g, const BsParams& params);
// g * letter, the BFS hot path.
BsElement bs_mul_letter(const BsElement& g, Letter l, const BsParams& params);
BsElement bs_eval(const Word& w, const BsParams& params);
BsElement bs_eval(std::string_view text, const BsParams& params);

// "texp:num:dpow" in decimal with signs.
std::string bs_key(const BsElement& g);
std::optional<BsElement> bs_from_key(std::string_view key, const BsParams& params);

struct BsElementHash {
  std::size_t operator()(const BsElement& g) const;
};

}  // namespace convexity
