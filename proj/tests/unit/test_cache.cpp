#include <doctest.h>

#include <sstream>

#include "convexity/cache.hpp"
#include "convexity/models.hpp"

using namespace convexity;

TEST_CASE("group descriptors") {
  CHECK(parse_group("bs:q=2").descriptor() == "bs:q=2");
  CHECK(parse_group("bs:q=17").q == 17);
  CHECK(parse_group("stallings").generator_count() == 10);
  CHECK_THROWS_AS(parse_group("bs:q=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("bs:q="), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("bs:q=2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("free"), std::invalid_argument);
}

TEST_CASE("cache round-trip") {
  auto check = [](const auto& model, int r) {
    auto ball = build_ball(model, r);
    std::stringstream ss;
    write_ball_cache(ss, ball.index);
    BallIndex back = read_ball_cache(ss);
    CHECK(same_content(back, ball.index));
    CHECK(back.size() == ball.index.size());
    CHECK(back.find(ball.index.key(ball.index.size() - 1)) == ball.index.size() - 1);
  };
  check(BsModel(2), 6);
  check(BsModel(7), 4);
  check(StallingsModel{}, 3);
}

TEST_CASE("cache header and records") {
  auto ball = build_ball(BsModel(2), 1);
  std::stringstream ss;
  write_ball_cache(ss, ball.index);
  std::string head;
  std::getline(ss, head);
  CHECK(head == R"({"fmt":"ball-v1","group":"bs:q=2","r":1})");
  std::string rec;
  std::getline(ss, rec);
  CHECK(rec.rfind(R"({"k":)", 0) == 0);
  CHECK(rec.find(R"("d":0})") != std::string::npos);
}

TEST_CASE("bad cache files") {
  auto bad = [](std::string text) {
    std::stringstream ss(text);
    CHECK_THROWS_AS(read_ball_cache(ss), CacheFormatError);
  };
  bad("");
  bad(R"({"fmt":"ball-v2","group":"bs:q=2","r":1})");
  bad(R"({"fmt":"ball-v1","group":"bs:q=0","r":1})");
  bad("{\"fmt\":\"ball-v1\",\"group\":\"bs:q=2\",\"r\":1}\n{\"k\":\"x\",\"d\":3}\n");
  bad("{\"fmt\":\"ball-v1\",\"group\":\"bs:q=2\",\"r\":1}\nnot json\n");
}

TEST_CASE("cache paths") {
  CHECK(cache_path("/c", "bs:q=2", 6) == std::filesystem::path("/c/ball-bs_q_2-r6.ndjson"));
  setenv("CONVEXITY_CACHE_DIR", "/tmp/cx", 1);
  CHECK(cache_dir() == std::filesystem::path("/tmp/cx"));
  unsetenv("CONVEXITY_CACHE_DIR");
}
