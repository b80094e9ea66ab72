#include "convexity/bs_element.hpp"

#include <charconv>
#include <functional>
#include <stdexcept>

namespace convexity {

BsParams::BsParams(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("BS(1,q) requires q >= 2");
  constexpr std::size_t kTable = 256;
  powers_.reserve(kTable);
  powers_.emplace_back(1);
  while (powers_.size() < kTable) powers_.push_back(powers_.back() * q_);
}

BigInt BsParams::pow(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative power of q");
  if (k < static_cast<std::int64_t>(powers_.size())) return powers_[static_cast<std::size_t>(k)];
  return boost::multiprecision::pow(BigInt(q_), static_cast<unsigned>(k));
}

class BsArith {
 public:
  static BsElement make(std::int64_t texp, BigInt num, std::int64_t dpow, const BsParams& params) {
    if (num == 0) return BsElement(texp, 0, 0);
    const BigInt q = params.q();
    while (dpow > 0) {
      BigInt quotient, remainder;
      divide_qr(num, q, quotient, remainder);
      if (remainder != 0) break;
      num = std::move(quotient);
      --dpow;
    }
    return BsElement(texp, std::move(num), dpow);
  }

  // num1 q^-d1 + num2 q^-d2
  static std::pair<BigInt, std::int64_t> add(const BigInt& num1, std::int64_t d1, const BigInt& num2,
                                             std::int64_t d2, const BsParams& params) {
    if (d1 == d2) return {num1 + num2, d1};
    if (d1 > d2) return {num1 + num2 * params.pow(d1 - d2), d1};
    return {num1 * params.pow(d2 - d1) + num2, d2};
  }
};

BsElement::BsElement(std::int64_t texp, BigInt num, std::int64_t dpow, const BsParams& params) {
  if (dpow < 0) {
    num *= params.pow(-dpow);
    dpow = 0;
  }
  *this = BsArith::make(texp, std::move(num), dpow, params);
}

BsElement bs_mul(const BsElement& g, const BsElement& h, const BsParams& params) {
  // translation(g o h) = b_g + q^texp_g * b_h
  BigInt scaled = h.num();
  std::int64_t scaled_d = h.dpow();
  if (g.texp() >= 0)
    scaled *= params.pow(g.texp());
  else
    scaled_d += -g.texp();
  auto [num, d] = BsArith::add(g.num(), g.dpow(), scaled, scaled_d, params);
  return BsArith::make(g.texp() + h.texp(), std::move(num), d, params);
}

BsElement bs_inv(const BsElement& g, const BsParams& params) {
  // x -> q^-e (x - b)
  BigInt num = -g.num();
  std::int64_t d = g.dpow();
  if (g.texp() <= 0)
    num *= params.pow(-g.texp());
  else
    d += g.texp();
  return BsArith::make(-g.texp(), std::move(num), d, params);
}

BsElement bs_mul_letter(const BsElement& g, Letter l, const BsParams& params) {
  if (l.gen == bs_gen::t) return BsArith::make(g.texp() + l.sign, g.num(), g.dpow(), params);
  // translation gains sign * q^texp
  BigInt step = l.sign;
  std::int64_t step_d = 0;
  if (g.texp() >= 0)
    step *= params.pow(g.texp());
  else
    step_d = -g.texp();
  auto [num, d] = BsArith::add(g.num(), g.dpow(), step, step_d, params);
  return BsArith::make(g.texp(), std::move(num), d, params);
}

BsElement bs_eval(const Word& w, const BsParams& params) {
  BsElement g;
  for (Letter l : w) g = bs_mul_letter(g, l, params);
  return g;
}

BsElement bs_eval(std::string_view text, const BsParams& params) {
  return bs_eval(parse_word(text, Alphabet::bs()), params);
}

std::string bs_key(const BsElement& g) {
  std::string out = std::to_string(g.texp());
  out.push_back(':');
  out += g.num().str();
  out.push_back(':');
  out += std::to_string(g.dpow());
  return out;
}

std::optional<BsElement> bs_from_key(std::string_view key, const BsParams& params) {
  auto c1 = key.find(':');
  if (c1 == std::string_view::npos) return std::nullopt;
  auto c2 = key.find(':', c1 + 1);
  if (c2 == std::string_view::npos) return std::nullopt;
  std::int64_t texp = 0, dpow = 0;
  auto part1 = key.substr(0, c1);
  auto part3 = key.substr(c2 + 1);
  if (std::from_chars(part1.data(), part1.data() + part1.size(), texp).ec != std::errc()) return std::nullopt;
  if (std::from_chars(part3.data(), part3.data() + part3.size(), dpow).ec != std::errc()) return std::nullopt;
  if (dpow < 0) return std::nullopt;
  BigInt num;
  try {
    num = BigInt(std::string(key.substr(c1 + 1, c2 - c1 - 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  BsElement g(texp, num, dpow, params);
  if (g.dpow() != dpow) return std::nullopt;  // not in canonical form
  return g;
}

std::size_t BsElementHash::operator()(const BsElement& g) const {
  std::size_t h = std::hash<std::int64_t>{}(g.texp());
  h ^= std::hash<std::int64_t>{}(g.dpow()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= boost::multiprecision::hash_value(g.num()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace convexity
