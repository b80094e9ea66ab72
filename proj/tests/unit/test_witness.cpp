#include <doctest.h>

#include "convexity/witness.hpp"

using namespace convexity;

TEST_CASE("notpac bridges grow with n") {
  const int expect[] = {3, 7, 11, 16};
  for (int n = 2; n <= 5; ++n) {
    auto rep = verify_notpac(n);
    INFO(rep.to_json().dump());
    // a^7 = t a^3 t^-1 a, so w a^-1 is not geodesic at n = 2
    for (const auto& c : rep.checks) CHECK(c.ok == (n > 2 || c.name != "wA_geodesic"));
    CHECK(rep.values["min_bridge"] == expect[n - 2]);
  }
}

TEST_CASE("bs1q bridges go through the identity") {
  struct Row { int q, n, len; };
  for (auto [q, n, len] : {Row{7, 2, 10}, Row{8, 2, 10}, Row{7, 3, 14}}) {
    auto rep = verify_bs1q_notmac(q, n);
    INFO(rep.to_json().dump());
    CHECK(rep.passed());
    CHECK(rep.values["min_bridge"] == len);
  }
  CHECK_THROWS(verify_bs1q_notmac(5, 2));
}

TEST_CASE("digit lemma") {
  for (int n = 2; n <= 6; ++n) {
    auto rep = verify_digit_bound(n, 2);
    INFO(rep.to_json().dump());
    CHECK(rep.passed());
  }
  auto rep = verify_digit_bound(3, 2);
  CHECK(rep.values["reachable_above_bound"] == nlohmann::ordered_json::array({"16"}));
  auto rep7 = verify_digit_bound(2, 7);
  CHECK(rep7.passed());
  CHECK(rep7.values["reachable_above_bound"] == nlohmann::ordered_json::array({"49"}));
}

TEST_CASE("stallings witness") {
  auto rep = verify_stallings_witness(1);
  INFO(rep.to_json().dump());
  CHECK(rep.passed());
  CHECK(rep.values["min_bridge"] == 8);
}

TEST_CASE("pair witness words") {
  auto sw = pair_witness(2, 3);
  CHECK(to_string(sw.w, Alphabet::bs()) == "t^3a^2T^3");
  CHECK(sw.R == 8);
  CHECK_THROWS(pair_witness(3, 2));
}
