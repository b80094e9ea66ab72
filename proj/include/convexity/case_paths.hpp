#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "convexity/word.hpp"

// Explicit short paths between nearby sphere points of BS(1,2), one
// construction per case of the M'AC argument, plus their verifier.
namespace convexity {

class CaseParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integer parameters (p, l, f1, k, i, j, i1, m) and word parameters (v, w2,
// w3, prefix, w, gamma) by name. Which ones a case reads is listed in
// case_parameter_names.
struct CaseParams {
  std::map<std::string, std::int64_t> ints;
  std::map<std::string, Word> words;

  nlohmann::ordered_json to_json() const;
};

struct CaseWitness {
  std::string id;
  std::string via;     // set when a reduction produced this witness
  std::string branch;  // subcase taken inside the case, if it splits further
  CaseParams params;
  Word w, u, gamma, delta;
  std::int64_t r = 0;
};

// The sixteen constructive cases.
const std::vector<std::string>& constructive_case_ids();
// Cases handled by rewriting into another case: 5, 8.2, 9.1.1, 10.2.1.
const std::vector<std::string>& reduction_case_ids();
bool is_case_id(std::string_view id);
std::vector<std::string> case_parameter_names(std::string_view id);

// Throws CaseParamError naming the violated precondition.
CaseWitness build_case(std::string_view id, const CaseParams& params);

struct CaseReport {
  CaseWitness witness;
  bool geodesic = false;  // w, u geodesic of length r
  bool distance = false;  // 1 <= d(w, u) <= 2 and w gamma = u
  bool endpoint = false;  // delta = gamma
  bool length = false;    // l(delta) <= 2r - 2
  bool in_ball = false;   // every prefix of delta stays in B(r)
  std::optional<std::size_t> first_violation;  // prefix length leaving B(r)

  bool passed() const { return geodesic && distance && endpoint && length && in_ball; }
  nlohmann::ordered_json to_json() const;
};

CaseReport verify_case(const CaseWitness& cw);

struct SampleOptions {
  std::int64_t min_size = 2;    // range for p, l, f1 and block heights
  std::int64_t max_size = 200;
  int max_extra_letters = 20;   // a-letters added to a filler beyond its t's
  std::int64_t min_radius = 8;  // random instances only; fully fixed ones are kept
  int max_attempts = 20000;
};

// Fills every parameter missing from `fixed` at random and retries until the
// case hypotheses hold. Throws CaseParamError when `fixed` itself is invalid
// or no instance turns up within max_attempts.
CaseWitness sample_case(std::string_view id, std::mt19937_64& rng, const CaseParams& fixed = {},
                        const SampleOptions& opts = {});

// Exhaustive search of B(radius) in BS(1,2) for pairs realizing the excluded
// class combinations. Elements whose normal form is a bare power of a are
// skipped. The restricted count also drops class 1-3 elements with
// |sigma_t| <= 2 whose core is a bare power, which cannot occur at large
// radius.
struct ImpossibilityCount {
  std::string id;
  std::uint64_t examined = 0;
  std::uint64_t realizations = 0;      // with the large-radius shape restriction
  std::uint64_t unrestricted = 0;      // bare powers still skipped
  std::string example;                 // first restricted realization, if any
};

std::vector<ImpossibilityCount> impossibility_search(int radius = 7);

}  // namespace convexity
