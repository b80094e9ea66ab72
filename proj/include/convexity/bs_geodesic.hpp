#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexity/bs_element.hpp"
#include "convexity/word.hpp"

namespace convexity {

class NotGeodesic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class XOrientation {
  PN,        // t^h a^s t^-1 a^{k_{h-1}} ... t^-1 a^{k_0}
  NPMirror,  // a^{k_0} t a^{k_1} ... t a^{k_{h-1}} t a^s t^-h
};

// Zero-t-sum block representing a^(s q^h + k_{h-1} q^{h-1} + ... + k_0).
struct XBlock {
  std::int64_t h = 1;
  std::int64_t s = 0;
  std::vector<int> k;  // k[j] is the coefficient of q^j, size h

  BigInt value(const BsParams& params) const;
  std::int64_t length() const;
  Word render(XOrientation orientation = XOrientation::PN) const;
  friend bool operator==(const XBlock&, const XBlock&) = default;
};

// Either a bare power a^i or an X-block.
struct Core {
  bool is_x = false;
  std::int64_t i = 0;
  XBlock x;

  BigInt value(const BsParams& params) const;
  std::int64_t length() const;
  Word render(XOrientation orientation = XOrientation::PN) const;
  friend bool operator==(const Core&, const Core&) = default;
};

// For sigma_t = 0 both class-4 expressions are valid.
enum class Class4Form {
  Auto,       // LeadingN when sigma_t >= 0, TrailingT otherwise
  LeadingN,   // t^-e a^{m_f} t ... a^{m_1} t w0
  TrailingT,  // w0 t^-1 a^{m_1} ... t^-1 a^{m_e} t^f
};

struct NormalFormOptions {
  XOrientation x_orientation = XOrientation::PN;
  Class4Form class4 = Class4Form::Auto;
};

struct GeodesicNormalForm {
  int cls = 1;  // 1..4
  Core core;
  // Digits following the core after each t^-1, in written order (class 2 and
  // class-4 TrailingT).
  std::vector<int> n_digits;
  // Digits preceding each t, in written order (class 3 and class-4 LeadingN).
  std::vector<int> p_digits;
  std::int64_t e = 0;  // number of t^-1 outside the core
  std::int64_t f = 0;  // number of t outside the core
  Class4Form form = Class4Form::Auto;
  XOrientation x_orientation = XOrientation::PN;

  Word render() const;
  std::int64_t length() const { return static_cast<std::int64_t>(render().length()); }
};

// Checks the digit, core and t-count constraints of the normal-form shapes.
// Returns an empty string when all hold, otherwise a description.
std::string shape_violation(const GeodesicNormalForm& nf, const BsParams& params);

// Minimum-length normal form for g.
GeodesicNormalForm normal_form(const BsElement& g, const BsParams& params, NormalFormOptions options = {});
// Throws NotGeodesic if w is longer than the geodesic length of its element.
GeodesicNormalForm normalize(const Word& w, const BsParams& params, NormalFormOptions options = {});

std::int64_t geodesic_length(const BsElement& g, const BsParams& params);
bool is_geodesic(const Word& w, const BsParams& params);

// Replace the X factor of a word by the a-power it represents. Words in E, N,
// P or NP are returned unchanged. Throws std::invalid_argument for Other.
Word tilde(const Word& w, const BsParams& params);

// True iff w contains t^-1 a^j t with q | j (the a-run may be empty).
bool has_pinch(const Word& w, const BsParams& params);

// Cost of the cheapest core (bare power or X-block) for a^m.
std::int64_t core_length(const BigInt& m, const BsParams& params);

}  // namespace convexity
