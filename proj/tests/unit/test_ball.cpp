#include <doctest.h>

#include "convexity/bs_geodesic.hpp"
#include "convexity/models.hpp"

using namespace convexity;

TEST_CASE("sphere sizes") {
  BsModel bs2(2);
  auto ball = build_ball(bs2, 2);
  CHECK(ball.index.sphere_size(0) == 1);
  CHECK(ball.index.sphere_size(1) == 4);
  CHECK(ball.index.sphere_size(2) == 12);
  auto st = build_ball(StallingsModel{}, 1);
  CHECK(st.index.sphere_size(1) == 10);
}

TEST_CASE("distance lookup") {
  BsModel bs2(2);
  auto ball = build_ball(bs2, 5);
  const auto& idx = ball.index;
  CHECK(idx.distance(bs_key(BsElement::identity())) == 0);
  CHECK(idx.distance(bs_key(BsElement::a_power(4))) == 4);
  CHECK_FALSE(idx.distance(bs_key(BsElement::a_power(64))).has_value());
}

TEST_CASE("spheres are sorted and neighbors are symmetric") {
  BsModel bs3(3);
  auto ball = build_ball(bs3, 5);
  const auto& idx = ball.index;
  for (int d = 0; d <= idx.radius(); ++d)
    for (auto id = idx.sphere_begin(d) + 1; id < idx.sphere_end(d); ++id) CHECK(idx.key(id - 1) < idx.key(id));
  for (std::uint32_t id = 0; id < idx.size(); ++id) {
    CHECK(idx.key(id) == bs3.key(ball.elements[id]));
    for (int g = 0; g < 4; ++g) {
      auto w = idx.neighbor(id, g);
      if (w == kNoVertex) {
        CHECK(idx.dist(id) == idx.radius());
        continue;
      }
      CHECK(idx.neighbor(w, g ^ 1) == id);
      CHECK(std::abs(idx.dist(w) - idx.dist(id)) <= 1);
    }
  }
}

TEST_CASE("parallel build matches serial build") {
  BsModel bs2(2);
  auto serial = build_ball(bs2, 8);
  auto parallel = build_ball(bs2, 8, {kDefaultElementCap, 4});
  CHECK(same_content(serial.index, parallel.index));
}

TEST_CASE("element cap raises") {
  BsModel bs2(2);
  CHECK_THROWS_AS(build_ball(bs2, 8, {100, 1}), ResourceLimit);
}

TEST_CASE("ball distances agree with geodesic length") {
  for (auto [q, r] : {std::pair{2, 8}, {7, 5}}) {
    BsModel m(q);
    auto ball = build_ball(m, r);
    bool ok = true;
    for (std::uint32_t id = 0; id < ball.index.size(); ++id)
      ok = ok && geodesic_length(ball.elements[id], m.params()) == ball.index.dist(id);
    CHECK(ok);
  }
}

TEST_CASE("bridge lengths") {
  BsModel bs2(2);
  auto ball = build_ball(bs2, 6);
  const auto& idx = ball.index;
  BridgeSearcher search(idx);
  std::uint32_t x = idx.find(bs_key(BsElement::a_power(4)));
  CHECK(search.bridge_length(x, x) == 0);
  CHECK(search.bridge_length(x, idx.neighbor(x, 0)) == 1);
  // triangle inequality against the global metric
  for (std::uint32_t y = idx.sphere_begin(4); y < idx.sphere_end(4); y += 3) {
    auto len = search.bridge_length(x, y);
    REQUIRE(len);
    BsElement diff = bs_mul(bs_inv(ball.elements[x], bs2.params()), ball.elements[y], bs2.params());
    CHECK(*len >= geodesic_length(diff, bs2.params()));
    auto path = search.bridge_path(x, y, idx.radius());
    REQUIRE(path);
    CHECK(static_cast<int>(path->size()) == *len);
  }
  // restricting to B(0) isolates the identity
  CHECK_FALSE(search.bridge_length(0, idx.neighbor(0, 0), 0));
}

TEST_CASE("moved index keeps lookups") {
  BsModel bs2(2);
  auto ball = build_ball(bs2, 4);
  BallIndex moved = std::move(ball.index);
  CHECK(moved.distance("0:4:0") == 4);
}

TEST_CASE("from_records round-trip") {
  BsModel bs2(2);
  auto ball = build_ball(bs2, 5);
  std::vector<std::pair<std::string, int>> recs;
  for (std::uint32_t id = 0; id < ball.index.size(); ++id) recs.emplace_back(ball.index.key(id), ball.index.dist(id));
  std::reverse(recs.begin(), recs.end());
  auto back = BallIndex::from_records(ball.index.descriptor(), 5, 4, recs);
  CHECK(same_content(back, ball.index));
}
