#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace convexity {

// One signed generator letter. `gen` indexes into an Alphabet.
struct Letter {
  std::uint8_t gen = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-sign)}; }
  friend constexpr bool operator==(Letter, Letter) = default;
};

class WordSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered generator names. Each name is a lowercase ASCII letter; the
// uppercase letter denotes the formal inverse.
class Alphabet {
 public:
  explicit Alphabet(std::string letters);

  static const Alphabet& bs();         // a, t
  static const Alphabet& stallings();  // a, b, c, d, s

  std::size_t size() const { return letters_.size(); }
  char name(std::size_t gen) const { return letters_.at(gen); }
  // -1 when the character is not a generator name (case-insensitive).
  int index_of(char c) const;
  const std::string& letters() const { return letters_; }

 private:
  std::string letters_;
};

namespace bs_gen {
inline constexpr std::uint8_t a = 0;
inline constexpr std::uint8_t t = 1;
}  // namespace bs_gen

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // gen^exponent as a run of |exponent| letters.
  static Word power(std::uint8_t gen, std::int64_t exponent);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word subword(std::size_t from, std::size_t count) const;
  Word inverse() const;

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  Letter back() const { return letters_.back(); }
  // push_back with cancellation against the last letter
  void push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [](Letter x, Letter y) {
          if (x.gen != y.gen) return x.gen <=> y.gen;
          return x.sign <=> y.sign;
        });
  }

 private:
  std::vector<Letter> letters_;
};

// Token grammar: [a-z](\^-?[0-9]+)? | [A-Z](\^[0-9]+)? with whitespace ignored.
Word parse_word(std::string_view text, const Alphabet& alphabet);
// Run-length form: "a^3", "A^2" (inverse runs uppercase), single letters bare.
std::string to_string(const Word& w, const Alphabet& alphabet);

// Exponent sum of one generator.
std::int64_t gen_sum(const Word& w, std::uint8_t gen);
inline std::int64_t sigma_t(const Word& w) { return gen_sum(w, bs_gen::t); }
// Sum of signs over all letters.
std::int64_t exp_sum(const Word& w);

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

enum class WordClass { E, X, N, XN, P, PX, NP, NPX, XNP, Other };

std::string_view to_string(WordClass c);

// Shape classification of a word over {a, t}. NPX requires sigma_t >= 0 and
// XNP requires sigma_t <= 0; words fitting no shape get Other.
WordClass classify(const Word& w);

}  // namespace convexity
