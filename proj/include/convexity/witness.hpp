#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "convexity/ball.hpp"
#include "convexity/bs_element.hpp"
#include "convexity/word.hpp"

namespace convexity {

// q = 2: w = t^n a^2 t^-n, u = a t^n a^2 t^-(n-1), R = 2n + 2.
// q >= 7: w = t^n a t^-n, u = a t^n a t^-(n-1), R = 2n + 1.
struct PairWitness {
  int q = 2;
  int n = 0;
  int R = 0;
  Word w, u;
  Word gamma;  // a t
};

PairWitness pair_witness(int q, int n);

struct NamedCheck {
  std::string name;
  bool ok = false;
};

struct WitnessReport {
  std::string kind;
  nlohmann::ordered_json params;
  std::vector<NamedCheck> checks;
  nlohmann::ordered_json values;  // measured quantities, e.g. the minimal bridging length

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

struct WitnessOptions {
  std::size_t element_cap = kDefaultElementCap;
  unsigned jobs = 1;
};

// BS(1,2): w, u, wa, wa^-1, wt^-1 geodesic; d(w, u) = 2 via at; minimal
// bridging length inside B(R) exceeds R - 8.
WitnessReport verify_notpac(int n, WitnessOptions opts = {});

// BS(1,q), q >= 7: the same geodesic checks, minimal bridging inside B(R)
// equals 2R and every minimal bridge visits the identity.
WitnessReport verify_bs1q_notmac(int q, int n, WitnessOptions opts = {});

// All m > 0 with |a^m| <= R fall into {q^n or 2^(n+1)} or below the bound of
// the digit lemma (2^n + 2^(n-1) + 2^(n-2) for q = 2, 3 q^(n-1) for q >= 7).
WitnessReport verify_digit_bound(int n, int q);

// Stallings' group: alpha = b^-(n+1) a^(n+1), beta = s b^-(n+1) a^n.
WitnessReport verify_stallings_witness(int n, WitnessOptions opts = {});

}  // namespace convexity
