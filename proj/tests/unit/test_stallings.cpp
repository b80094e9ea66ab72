#include <doctest.h>

#include <random>

#include "convexity/models.hpp"

using namespace convexity;

namespace {
Word st(std::string_view s) { return parse_word(s, Alphabet::stallings()); }
std::string str(const Word& w) { return to_string(w, Alphabet::stallings()); }

Word random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, 9);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back(paired_letter(gen(rng)));
  return w;
}
}  // namespace

TEST_CASE("evaluation examples") {
  auto g = st_eval("sAbS");
  CHECK(g.quotient().empty());
  CHECK(str(g.hpart().u) == "Ab");
  CHECK(g.hpart().v.empty());
  CHECK(st_eval("acAC").is_identity());
  auto h = st_eval("saS");
  CHECK(str(h.quotient()) == "saS");
  CHECK(h.hpart().u.empty());
  CHECK(h.hpart().v.empty());
}

TEST_CASE("relators evaluate to the identity and have even length") {
  auto rel = stallings_relators();
  REQUIRE(rel.size() == 7);
  std::vector<std::size_t> lengths;
  for (const Word& r : rel) {
    CHECK(st_eval(r).is_identity());
    lengths.push_back(r.length());
    CHECK(r.length() % 2 == 0);
  }
  CHECK(lengths == std::vector<std::size_t>{4, 4, 4, 4, 6, 6, 6});
}

TEST_CASE("products") {
  CHECK(st_mul(st_eval("a"), st_eval("c")) == st_mul(st_eval("c"), st_eval("a")));
  CHECK_FALSE(st_eval("ab") == st_eval("ba"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    Word w1 = random_word(rng, 12), w2 = random_word(rng, 12);
    auto g1 = st_eval(w1), g2 = st_eval(w2);
    CHECK(st_mul(g1, g2) == st_eval(w1 + w2));
    CHECK(st_mul(g1, st_inv(g1)).is_identity());
    CHECK(st_inv(g1) == st_eval(w1.inverse()));
  }
}

TEST_CASE("relator insertion does not change the element") {
  std::mt19937_64 rng(5);
  auto rel = stallings_relators();
  std::uniform_int_distribution<std::size_t> pick(0, rel.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    Word w = random_word(rng, 10);
    std::uniform_int_distribution<std::size_t> at(0, w.length());
    std::size_t cut = at(rng);
    Word r = rel[pick(rng)];
    if (i % 2) r = r.inverse();
    Word longer = w.prefix(cut) + r + w.suffix(w.length() - cut);
    CHECK(st_eval(longer) == st_eval(w));
  }
}

TEST_CASE("membership in H") {
  CHECK(in_H(st_eval("Ad")));
  CHECK_FALSE(in_H(st_eval("a")));
  CHECK_FALSE(in_H(st_eval("s")));
  std::mt19937_64 rng(9);
  std::vector<Word> hgens{st("Ab"), st("Ac"), st("Ad")};
  std::uniform_int_distribution<int> pick(0, 5), len(0, 6), gen(0, 9);
  for (int i = 0; i < 1000; ++i) {
    Word h;
    for (int j = len(rng); j > 0; --j) {
      int x = pick(rng);
      h += x % 2 ? hgens[x / 2].inverse() : hgens[x / 2];
    }
    REQUIRE(in_H(st_eval(h)));
    Word x{paired_letter(gen(rng))};
    CHECK(in_H(st_eval(x + h + x.inverse())));
  }
}

TEST_CASE("lengths for special shapes") {
  CHECK(lambda_length(GElement{st("ab"), st("c")}) == 3);
  CHECK(lambda_length(GElement{}) == 0);
  CHECK(lambda_length(*as_g_element(st_eval("B^2a^2"))) == 4);
  CHECK(gamma_length_special(st_eval("sB^2a")) == 4);
  CHECK(gamma_length_special(st_eval("abcd")) == 4);
  CHECK_FALSE(gamma_length_special(st_eval("sasa")).has_value());
  CHECK(gamma_length_special(st_eval("B^2as")) == 4);
  CHECK(gamma_length_special(st_eval("SB^2a")) == 4);
}

TEST_CASE("keys round-trip") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    auto g = st_eval(random_word(rng, 10));
    auto back = st_from_key(st_key(g));
    REQUIRE(back);
    CHECK(*back == g);
  }
  CHECK(st_key(StallingsElement{}) == "||");
  CHECK_FALSE(st_from_key("aA||"));
  CHECK_FALSE(st_from_key("|a|"));
  CHECK_FALSE(st_from_key("|b|c|"));
  CHECK_FALSE(st_from_key("c||"));
}

TEST_CASE("special lengths agree with the ball on B(4)") {
  StallingsModel m;
  auto ball = build_ball(m, 4);
  std::size_t known = 0;
  for (std::uint32_t id = 0; id < ball.index.size(); ++id) {
    auto len = gamma_length_special(ball.elements[id]);
    if (!len) continue;
    ++known;
    CHECK(*len == ball.index.dist(id));
  }
  CHECK(known > 1000);
}
