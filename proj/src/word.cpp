#include "convexity/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace convexity {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    char c = letters_[i];
    if (c < 'a' || c > 'z') throw std::invalid_argument("generator names must be lowercase ASCII letters");
    if (letters_.find(c, i + 1) != std::string::npos) throw std::invalid_argument("duplicate generator name");
  }
}

const Alphabet& Alphabet::bs() {
  static const Alphabet alphabet("at");
  return alphabet;
}

const Alphabet& Alphabet::stallings() {
  static const Alphabet alphabet("abcds");
  return alphabet;
}

int Alphabet::index_of(char c) const {
  char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto pos = letters_.find(lower);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

Word Word::power(std::uint8_t gen, std::int64_t exponent) {
  Letter l{gen, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  std::int64_t n = exponent < 0 ? -exponent : exponent;
  return Word(std::vector<Letter>(static_cast<std::size_t>(n), l));
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return Word(std::vector<Letter>(letters_.end() - static_cast<std::ptrdiff_t>(n), letters_.end()));
}

Word Word::subword(std::size_t from, std::size_t count) const {
  from = std::min(from, letters_.size());
  count = std::min(count, letters_.size() - from);
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(from);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(count)));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw WordSyntaxError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    int gen = alphabet.index_of(c);
    if (gen < 0) throw WordSyntaxError("unknown letter '" + std::string(1, c) + "'");
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    ++i;
    skip_space();
    std::int64_t exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      bool negative = false;
      if (i < text.size() && text[i] == '-') {
        if (upper) throw WordSyntaxError("negative power on an inverse letter");
        negative = true;
        ++i;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw WordSyntaxError("malformed power after '" + std::string(1, c) + "'");
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
      if (ec != std::errc() || value > 100'000'000) throw WordSyntaxError("power out of range");
      exponent = negative ? -static_cast<std::int64_t>(value) : static_cast<std::int64_t>(value);
      skip_space();
    }
    if (upper) exponent = -exponent;
    Letter l{static_cast<std::uint8_t>(gen), static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
    for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.push_back(l);
  }
  return Word(std::move(out));
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    char name = alphabet.name(ls[i].gen);
    if (ls[i].sign < 0) name = static_cast<char>(std::toupper(static_cast<unsigned char>(name)));
    out.push_back(name);
    if (j - i > 1) {
      out.push_back('^');
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

std::int64_t gen_sum(const Word& w, std::uint8_t gen) {
  std::int64_t sum = 0;
  for (Letter l : w)
    if (l.gen == gen) sum += l.sign;
  return sum;
}

std::int64_t exp_sum(const Word& w) {
  std::int64_t sum = 0;
  for (Letter l : w) sum += l.sign;
  return sum;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.length(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

std::string_view to_string(WordClass c) {
  switch (c) {
    case WordClass::E: return "E";
    case WordClass::X: return "X";
    case WordClass::N: return "N";
    case WordClass::XN: return "XN";
    case WordClass::P: return "P";
    case WordClass::PX: return "PX";
    case WordClass::NP: return "NP";
    case WordClass::NPX: return "NPX";
    case WordClass::XNP: return "XNP";
    case WordClass::Other: return "OTHER";
  }
  return "OTHER";
}

WordClass classify(const Word& w) {
  // Collapse the t-letters into signed runs.
  std::vector<std::pair<int, std::int64_t>> runs;
  for (Letter l : w) {
    if (l.gen != bs_gen::t) continue;
    if (!runs.empty() && runs.back().first == l.sign)
      ++runs.back().second;
    else
      runs.emplace_back(l.sign, 1);
  }
  std::int64_t sigma = 0;
  for (auto [sign, n] : runs) sigma += sign * n;

  if (runs.empty()) return WordClass::E;
  if (runs.size() == 1) return runs[0].first > 0 ? WordClass::P : WordClass::N;
  if (runs.size() == 2) {
    if (runs[0].first > 0) {
      if (sigma == 0) return WordClass::X;
      return sigma > 0 ? WordClass::PX : WordClass::XN;
    }
    return WordClass::NP;
  }
  if (runs.size() == 3) {
    auto [s0, n0] = runs[0];
    auto n1 = runs[1].second;
    auto n2 = runs[2].second;
    // N P X: the middle positive run keeps at least one t for the P factor.
    if (s0 < 0 && n1 > n2 && sigma >= 0) return WordClass::NPX;
    // X N P: the middle negative run keeps at least one t^-1 for the N factor.
    if (s0 > 0 && n1 > n0 && sigma <= 0) return WordClass::XNP;
  }
  return WordClass::Other;
}

}  // namespace convexity
