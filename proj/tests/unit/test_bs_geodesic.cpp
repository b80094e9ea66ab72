#include <doctest.h>

#include <deque>
#include <unordered_map>

#include "convexity/bs_geodesic.hpp"

using namespace convexity;

namespace {
Word bs(std::string_view s) { return parse_word(s, Alphabet::bs()); }
std::string str(const Word& w) { return to_string(w, Alphabet::bs()); }

constexpr Letter kGens[4] = {{0, 1}, {0, -1}, {1, 1}, {1, -1}};

// Plain BFS keyed by canonical key; one geodesic word per element.
struct SmallBall {
  std::unordered_map<std::string, int> dist;
  std::vector<std::pair<BsElement, Word>> elems;
};

SmallBall small_ball(const BsParams& p, int r) {
  SmallBall b;
  b.dist[bs_key(BsElement::identity())] = 0;
  b.elems.push_back({BsElement::identity(), Word{}});
  for (std::size_t i = 0; i < b.elems.size(); ++i) {
    auto [g, w] = b.elems[i];
    if (static_cast<int>(w.length()) == r) continue;
    for (Letter l : kGens) {
      BsElement h = bs_mul_letter(g, l, p);
      if (b.dist.emplace(bs_key(h), static_cast<int>(w.length()) + 1).second) {
        Word hw = w;
        hw.push_back(l);
        b.elems.push_back({h, hw});
      }
    }
  }
  return b;
}

std::vector<Word> all_words(std::size_t max_len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].length() == max_len) continue;
    for (Letter l : kGens) {
      Word w = out[i];
      w.push_back(l);
      out.push_back(std::move(w));
    }
  }
  return out;
}
}  // namespace

TEST_CASE("length examples") {
  BsParams p(2);
  CHECK(geodesic_length(BsElement::identity(), p) == 0);
  CHECK(geodesic_length(BsElement::a_power(16), p) == 8);
  CHECK(geodesic_length(BsElement::a_power(5), p) == 5);
  CHECK_FALSE(is_geodesic(bs("a^6"), p));
  CHECK(geodesic_length(BsElement::a_power(6), p) == 5);
  CHECK(is_geodesic(bs("t^3a^2t^-3a"), p));
  CHECK(is_geodesic(Word{}, p));
}

TEST_CASE("normal form examples") {
  BsParams p2(2);
  auto nf = normalize(bs("a^4"), p2);
  CHECK(nf.cls == 1);
  REQUIRE(nf.core.is_x);
  CHECK(nf.core.x.h == 1);
  CHECK(nf.core.x.s == 2);
  CHECK(nf.core.x.k == std::vector<int>{0});
  CHECK(str(nf.render()) == "ta^2T");

  auto nf3 = normalize(bs("a^3"), p2);
  CHECK(nf3.cls == 1);
  CHECK_FALSE(nf3.core.is_x);
  CHECK(nf3.core.i == 3);

  BsParams p7(7);
  auto nf7 = normalize(bs("t^-1a^4"), p7);
  CHECK(nf7.cls == 2);
  CHECK(str(nf7.render()) == "aTA^3");

  CHECK_THROWS_AS(normalize(bs("a^6"), p2), NotGeodesic);
}

TEST_CASE("both X orientations and class 4 forms render the same element") {
  BsParams p(2);
  for (std::string_view s : {"a^4", "Ta^4t", "t^2a^2T^2", "ta^3TTa"}) {
    BsElement g = bs_eval(bs(s), p);
    NormalFormOptions mirror{XOrientation::NPMirror, Class4Form::Auto};
    NormalFormOptions trailing{XOrientation::PN, Class4Form::TrailingT};
    for (auto opt : {NormalFormOptions{}, mirror, trailing}) {
      auto nf = normal_form(g, p, opt);
      CHECK(bs_eval(nf.render(), p) == g);
      CHECK(nf.length() == geodesic_length(g, p));
      CHECK(shape_violation(nf, p).empty());
    }
  }
  auto nf = normal_form(bs_eval(bs("Tat"), p), p, {XOrientation::PN, Class4Form::TrailingT});
  CHECK(nf.form == Class4Form::TrailingT);
  CHECK(str(nf.render()) == "Tat");
}

TEST_CASE("geodesic length equals BFS distance on small balls") {
  for (auto [q, r] : {std::pair{2, 9}, {3, 7}, {4, 7}, {5, 6}, {7, 6}, {8, 6}}) {
    BsParams p(q);
    SmallBall b = small_ball(p, r);
    bool all = true;
    for (auto& [g, w] : b.elems) {
      std::int64_t len = geodesic_length(g, p);
      auto nf = normal_form(g, p);
      if (len != static_cast<std::int64_t>(w.length()) || nf.length() != len || !(bs_eval(nf.render(), p) == g) ||
          !shape_violation(nf, p).empty()) {
        all = false;
        FAIL_CHECK("q=" << q << " word " << str(w) << " len " << len << " nf " << str(nf.render()));
        break;
      }
    }
    CHECK(all);
  }
}

TEST_CASE("geodesics normalize to equal-length words and never classify Other") {
  BsParams p(2);
  std::size_t geodesics = 0;
  for (const Word& w : all_words(8)) {
    if (!is_geodesic(w, p)) continue;
    ++geodesics;
    REQUIRE(classify(w) != WordClass::Other);
    auto nf = normalize(w, p);
    REQUIRE(nf.length() == static_cast<std::int64_t>(w.length()));
    REQUIRE(bs_eval(nf.render(), p) == bs_eval(w, p));
    REQUIRE(shape_violation(nf, p).empty());
    Word tw = tilde(w, p);
    REQUIRE(bs_eval(tw, p) == bs_eval(w, p));
  }
  CHECK(geodesics > 1000);
}

TEST_CASE("tilde examples") {
  BsParams p(2);
  CHECK(str(tilde(bs("taT"), p)) == "a^2");
  CHECK(str(tilde(bs("Ta"), p)) == "Ta");
  CHECK(str(tilde(bs("taTTa"), p)) == "a^2Ta");
  CHECK(str(tilde(bs("ttaT"), p)) == "ta^2");
  CHECK(str(tilde(bs("Tatta^2T"), p)) == "Tata^4");
  CHECK_THROWS_AS(tilde(bs("tTtT"), p), std::invalid_argument);
}

TEST_CASE("pinch detection") {
  BsParams p(2);
  CHECK(has_pinch(bs("Ta^2t"), p));
  CHECK_FALSE(has_pinch(bs("Tat"), p));
  CHECK(has_pinch(bs("Tt"), p));
  CHECK(has_pinch(bs("aTaAt"), p));
  CHECK_FALSE(has_pinch(bs("ta^2T"), p));
  CHECK(has_pinch(bs("Ta^3t"), BsParams(3)));
}

TEST_CASE("geodesic length is inverse-invariant and 1-Lipschitz") {
  BsParams p(3);
  for (const Word& w : all_words(6)) {
    BsElement g = bs_eval(w, p);
    std::int64_t len = geodesic_length(g, p);
    CHECK(len == geodesic_length(bs_inv(g, p), p));
    for (Letter l : kGens) {
      std::int64_t d = geodesic_length(bs_mul_letter(g, l, p), p) - len;
      CHECK(d <= 1);
      CHECK(d >= -1);
    }
  }
}

TEST_CASE("large powers stay cheap and consistent") {
  BsParams p(2);
  for (int n = 1; n < 80; ++n) {
    BigInt m = BigInt(1) << (n + 1);
    CHECK(geodesic_length(BsElement::a_power(m), p) == 2 * n + 2);
    auto nf = normal_form(BsElement::a_power(m), p);
    CHECK(bs_eval(nf.render(), p) == BsElement::a_power(m));
  }
}
