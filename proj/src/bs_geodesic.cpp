#include "convexity/bs_geodesic.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace convexity {
namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Digits d with d = v (mod q) and |d| <= floor(q/2); two choices only when q
// is even and v = q/2 (mod q).
int digit_choices(const BigInt& v, const BsParams& params, int out[2]) {
  const int q = params.q();
  const int half = params.half();
  int r = static_cast<int>(v % q);
  if (r < 0) r += q;
  int n = 0;
  if (r <= half) out[n++] = r;
  if (r - q >= -half) out[n++] = r - q;
  return n;
}

BigInt digit_child(const BigInt& v, int digit, const BsParams& params) { return (v - digit) / params.q(); }

bool valid_top(const BigInt& s, const BsParams& params) {
  BigInt a = abs_big(s);
  if (params.q() == 2) return a >= 2 && a <= 3;
  return a >= 1 && a <= params.q() - 1;
}

struct CostState {
  BigInt value;
  std::int64_t cost;
};

void insert_min(std::vector<CostState>& states, BigInt value, std::int64_t cost) {
  for (auto& s : states) {
    if (s.value == value) {
      s.cost = std::min(s.cost, cost);
      return;
    }
  }
  states.push_back({std::move(value), cost});
}

void step_costs(const std::vector<CostState>& cur, std::vector<CostState>& next, const BsParams& params) {
  next.clear();
  int digits[2];
  for (const auto& s : cur) {
    int n = digit_choices(s.value, params, digits);
    for (int i = 0; i < n; ++i)
      insert_min(next, digit_child(s.value, digits[i], params), s.cost + abs64(digits[i]));
  }
}

// Cheapest way to peel `count` low digits off N; returns reachable remainders.
std::vector<CostState> peel_digits(const BigInt& n, std::int64_t count, const BsParams& params) {
  std::vector<CostState> cur{{n, 0}}, next;
  for (std::int64_t i = 0; i < count; ++i) {
    if (cur.size() == 1 && cur[0].value == 0) break;  // remaining digits are all zero
    step_costs(cur, next, params);
    std::swap(cur, next);
  }
  return cur;
}

std::int64_t height_cap(const BigInt& m, const BsParams& params) {
  std::int64_t bits = m == 0 ? 0 : static_cast<std::int64_t>(boost::multiprecision::msb(abs_big(m))) + 1;
  std::int64_t per_digit = 1;
  while ((1 << (per_digit + 1)) <= params.q()) ++per_digit;
  return bits / per_digit + 8;
}

// A layered digit graph: layer j holds the remainders after j digits.
struct Node {
  BigInt value;
  std::int64_t fwd = kInfinity;  // cheapest digit cost from layer 0
  std::int64_t bwd = kInfinity;  // cheapest cost to finish from here
  std::vector<std::pair<int, int>> in;   // (parent index, digit)
  std::vector<std::pair<int, int>> out;  // (child index, digit)
};
using Layers = std::vector<std::vector<Node>>;

Layers build_layers(const BigInt& n, std::int64_t count, const BsParams& params) {
  Layers layers(1);
  layers[0].push_back(Node{n, 0, kInfinity, {}, {}});
  int digits[2];
  for (std::int64_t j = 0; j < count; ++j) {
    auto& cur = layers.back();
    std::vector<Node> next;
    for (int pi = 0; pi < static_cast<int>(cur.size()); ++pi) {
      int nd = digit_choices(cur[pi].value, params, digits);
      for (int k = 0; k < nd; ++k) {
        BigInt child = digit_child(cur[pi].value, digits[k], params);
        int ci = -1;
        for (int x = 0; x < static_cast<int>(next.size()); ++x)
          if (next[x].value == child) ci = x;
        if (ci < 0) {
          next.push_back(Node{std::move(child), kInfinity, kInfinity, {}, {}});
          ci = static_cast<int>(next.size()) - 1;
        }
        next[ci].fwd = std::min(next[ci].fwd, cur[pi].fwd + abs64(digits[k]));
        next[ci].in.emplace_back(pi, digits[k]);
        cur[pi].out.emplace_back(ci, digits[k]);
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

// Walk from a top node down to layer 0 along cheapest edges, preferring the
// smallest digit; returns digits from the top layer downwards.
std::vector<int> walk_down(const Layers& layers, int top_index) {
  std::vector<int> digits;
  int idx = top_index;
  for (std::size_t j = layers.size() - 1; j > 0; --j) {
    const Node& node = layers[j][idx];
    std::optional<std::pair<int, int>> pick;
    for (auto [parent, d] : node.in) {
      if (layers[j - 1][parent].fwd + abs64(d) != node.fwd) continue;
      if (!pick || d < pick->second) pick = std::make_pair(parent, d);
    }
    digits.push_back(pick->second);
    idx = pick->first;
  }
  return digits;
}

// Lexicographic order used for tie-breaking between equally long cores:
// bare powers before X-blocks, then (h, s, k_{h-1}, ..., k_0).
bool core_less(const Core& a, const Core& b) {
  if (a.is_x != b.is_x) return !a.is_x;
  if (!a.is_x) return a.i < b.i;
  if (a.x.h != b.x.h) return a.x.h < b.x.h;
  if (a.x.s != b.x.s) return a.x.s < b.x.s;
  return std::lexicographical_compare(a.x.k.rbegin(), a.x.k.rend(), b.x.k.rbegin(), b.x.k.rend());
}

Core best_core(const BigInt& m, const BsParams& params) {
  const std::int64_t best = core_length(m, params);
  if (abs_big(m) <= params.c_q() && abs_big(m) == best) return Core{false, static_cast<std::int64_t>(m), {}};
  const std::int64_t max_h = best / 2;
  Layers layers = build_layers(m, max_h, params);
  for (std::int64_t h = 1; h <= max_h; ++h) {
    const auto& layer = layers[static_cast<std::size_t>(h)];
    int pick = -1;
    for (int i = 0; i < static_cast<int>(layer.size()); ++i) {
      const Node& node = layer[i];
      if (!valid_top(node.value, params)) continue;
      if (2 * h + static_cast<std::int64_t>(abs_big(node.value)) + node.fwd != best) continue;
      if (pick < 0 || node.value < layer[pick].value) pick = i;
    }
    if (pick < 0) continue;
    Layers truncated(layers.begin(), layers.begin() + h + 1);
    std::vector<int> top_down = walk_down(truncated, pick);
    XBlock x;
    x.h = h;
    x.s = static_cast<std::int64_t>(layer[pick].value);
    x.k.assign(top_down.rbegin(), top_down.rend());
    return Core{true, 0, std::move(x)};
  }
  throw std::logic_error("no core realizes the computed core length");
}

Word append_run(Word w, std::uint8_t gen, std::int64_t exponent) { return w += Word::power(gen, exponent); }

}  // namespace

BigInt XBlock::value(const BsParams& params) const {
  BigInt v = s;
  for (std::int64_t j = h - 1; j >= 0; --j) v = v * params.q() + k[static_cast<std::size_t>(j)];
  return v;
}

std::int64_t XBlock::length() const {
  std::int64_t len = 2 * h + abs64(s);
  for (int d : k) len += abs64(d);
  return len;
}

Word XBlock::render(XOrientation orientation) const {
  using namespace bs_gen;
  Word w;
  if (orientation == XOrientation::PN) {
    w += Word::power(t, h);
    w += Word::power(a, s);
    for (std::int64_t j = h - 1; j >= 0; --j) {
      w += Word::power(t, -1);
      w += Word::power(a, k[static_cast<std::size_t>(j)]);
    }
  } else {
    for (std::int64_t j = 0; j < h; ++j) {
      w += Word::power(a, k[static_cast<std::size_t>(j)]);
      w += Word::power(t, 1);
    }
    w += Word::power(a, s);
    w += Word::power(t, -h);
  }
  return w;
}

BigInt Core::value(const BsParams& params) const { return is_x ? x.value(params) : BigInt(i); }

std::int64_t Core::length() const { return is_x ? x.length() : abs64(i); }

Word Core::render(XOrientation orientation) const {
  return is_x ? x.render(orientation) : Word::power(bs_gen::a, i);
}

Word GeodesicNormalForm::render() const {
  using namespace bs_gen;
  Word w;
  const Word core_word = core.render(x_orientation);
  switch (cls) {
    case 1:
      return core_word;
    case 2:
      w = core_word;
      for (int m : n_digits) w = append_run(append_run(std::move(w), t, -1), a, m);
      return w;
    case 3:
      for (int n : p_digits) w = append_run(append_run(std::move(w), a, n), t, 1);
      return w + core_word;
    default:
      if (form == Class4Form::LeadingN) {
        w = Word::power(t, -e);
        for (int m : p_digits) w = append_run(append_run(std::move(w), a, m), t, 1);
        return w + core_word;
      }
      w = core_word;
      for (int m : n_digits) w = append_run(append_run(std::move(w), t, -1), a, m);
      return append_run(std::move(w), t, f);
  }
}

std::string shape_violation(const GeodesicNormalForm& nf, const BsParams& params) {
  const int half = params.half();
  if (nf.core.is_x) {
    const XBlock& x = nf.core.x;
    if (x.h < 1) return "X-block height below 1";
    if (static_cast<std::int64_t>(x.k.size()) != x.h) return "X-block digit count differs from height";
    for (int d : x.k)
      if (abs64(d) > half) return "X-block digit out of range";
    if (!valid_top(x.s, params)) return "X-block top exponent out of range";
  } else if (abs64(nf.core.i) > params.c_q()) {
    return "core power exceeds C_q";
  }
  for (int d : nf.n_digits)
    if (abs64(d) > half) return "suffix digit out of range";
  for (int d : nf.p_digits)
    if (abs64(d) > half) return "prefix digit out of range";
  const auto ne = static_cast<std::int64_t>(nf.n_digits.size());
  const auto np = static_cast<std::int64_t>(nf.p_digits.size());
  switch (nf.cls) {
    case 1:
      if (nf.e != 0 || nf.f != 0 || ne != 0 || np != 0) return "class 1 carries t-letters outside the core";
      break;
    case 2:
      if (nf.e < 1 || ne != nf.e || nf.f != 0 || np != 0) return "class 2 shape mismatch";
      break;
    case 3:
      if (nf.f < 1 || np != nf.f || nf.e != 0 || ne != 0) return "class 3 shape mismatch";
      break;
    case 4:
      if (nf.form == Class4Form::LeadingN) {
        if (!(1 <= nf.e && nf.e <= nf.f) || np != nf.f || ne != 0) return "class 4 (leading t^-e) shape mismatch";
      } else if (nf.form == Class4Form::TrailingT) {
        if (!(1 <= nf.f && nf.f <= nf.e) || ne != nf.e || np != 0) return "class 4 (trailing t^f) shape mismatch";
      } else {
        return "class 4 without a resolved form";
      }
      break;
    default:
      return "unknown class";
  }
  return {};
}

std::int64_t core_length(const BigInt& m, const BsParams& params) {
  if (m == 0) return 0;
  std::int64_t best = abs_big(m) <= params.c_q() ? static_cast<std::int64_t>(abs_big(m)) : kInfinity;
  const std::int64_t min_top = params.q() == 2 ? 2 : 1;
  const std::int64_t cap = height_cap(m, params);
  std::vector<CostState> cur{{m, 0}}, next;
  for (std::int64_t h = 1; h <= cap && !cur.empty(); ++h) {
    step_costs(cur, next, params);
    std::swap(cur, next);
    for (const auto& s : cur) {
      if (!valid_top(s.value, params)) continue;
      best = std::min(best, 2 * h + static_cast<std::int64_t>(abs_big(s.value)) + s.cost);
    }
    // Drop states that cannot beat the best block at any larger height.
    std::erase_if(cur, [&](const CostState& s) { return s.value == 0 || 2 * (h + 1) + min_top + s.cost >= best; });
  }
  if (best >= kInfinity) throw std::logic_error("no core found for a-power");
  return best;
}

namespace {

struct Plan {
  int cls;
  std::int64_t e, f;
  BigInt n;            // integer whose low digits are peeled
  std::int64_t digits;  // how many digits to peel
  bool prefix_side;     // digits written before each t (P-part) rather than after each t^-1
  Class4Form form;
};

Plan make_plan(const BsElement& g, const BsParams& params, Class4Form requested) {
  const std::int64_t texp = g.texp();
  const std::int64_t d = g.dpow();
  if (texp >= 0) {
    const std::int64_t e = d, f = texp + d;
    if (e == 0 && f == 0) return {1, 0, 0, g.num(), 0, false, Class4Form::Auto};
    if (e == 0) return {3, 0, f, g.num(), f, true, Class4Form::Auto};
    if (texp == 0 && requested == Class4Form::TrailingT) return {4, e, f, g.num(), e, false, Class4Form::TrailingT};
    return {4, e, f, g.num(), f, true, Class4Form::LeadingN};
  }
  if (d <= -texp) {
    const std::int64_t e = -texp;
    return {2, e, 0, g.num() * params.pow(e - d), e, false, Class4Form::Auto};
  }
  return {4, d, d + texp, g.num(), d, false, Class4Form::TrailingT};
}

}  // namespace

std::int64_t geodesic_length(const BsElement& g, const BsParams& params) {
  Plan plan = make_plan(g, params, Class4Form::Auto);
  std::int64_t best = kInfinity;
  for (const auto& s : peel_digits(plan.n, plan.digits, params))
    best = std::min(best, s.cost + core_length(s.value, params));
  return best + plan.e + plan.f;
}

bool is_geodesic(const Word& w, const BsParams& params) {
  return static_cast<std::int64_t>(w.length()) == geodesic_length(bs_eval(w, params), params);
}

GeodesicNormalForm normal_form(const BsElement& g, const BsParams& params, NormalFormOptions options) {
  Plan plan = make_plan(g, params, options.class4);
  GeodesicNormalForm nf;
  nf.cls = plan.cls;
  nf.e = plan.e;
  nf.f = plan.f;
  nf.form = plan.form;
  nf.x_orientation = options.x_orientation;

  Layers layers = build_layers(plan.n, plan.digits, params);
  auto& top = layers.back();
  if (plan.prefix_side) {
    // Written order is lowest digit first, so pick greedily from layer 0 using
    // the cheapest cost-to-finish.
    for (auto& node : top) node.bwd = core_length(node.value, params);
    for (std::size_t j = layers.size() - 1; j-- > 0;) {
      for (auto& node : layers[j]) {
        for (auto [child, d] : node.out) node.bwd = std::min(node.bwd, abs64(d) + layers[j + 1][child].bwd);
      }
    }
    int idx = 0;
    for (std::size_t j = 0; j + 1 < layers.size(); ++j) {
      const Node& node = layers[j][idx];
      std::optional<std::pair<int, int>> pick;
      for (auto [child, d] : node.out) {
        if (abs64(d) + layers[j + 1][child].bwd != node.bwd) continue;
        if (!pick || d < pick->second) pick = std::make_pair(child, d);
      }
      nf.p_digits.push_back(pick->second);
      idx = pick->first;
    }
    nf.core = best_core(layers.back()[idx].value, params);
  } else {
    // Written order is core first, then digits from the highest down.
    int pick = -1;
    std::int64_t pick_total = kInfinity;
    Core pick_core;
    for (int i = 0; i < static_cast<int>(top.size()); ++i) {
      std::int64_t total = top[i].fwd + core_length(top[i].value, params);
      if (total > pick_total) continue;
      Core c = best_core(top[i].value, params);
      if (total < pick_total || core_less(c, pick_core)) {
        pick = i;
        pick_total = total;
        pick_core = std::move(c);
      }
    }
    nf.n_digits = walk_down(layers, pick);
    nf.core = std::move(pick_core);
  }
  return nf;
}

GeodesicNormalForm normalize(const Word& w, const BsParams& params, NormalFormOptions options) {
  const BsElement g = bs_eval(w, params);
  const std::int64_t len = geodesic_length(g, params);
  if (static_cast<std::int64_t>(w.length()) > len)
    throw NotGeodesic("word of length " + std::to_string(w.length()) + " has geodesic length " + std::to_string(len));
  return normal_form(g, params, options);
}

Word tilde(const Word& w, const BsParams& params) {
  const WordClass cls = classify(w);
  if (cls == WordClass::Other) throw std::invalid_argument("tilde: word fits no geodesic class");
  if (cls == WordClass::E || cls == WordClass::N || cls == WordClass::P || cls == WordClass::NP) return w;

  std::vector<std::size_t> t_pos;  // positions of t-letters
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w[i].gen == bs_gen::t) t_pos.push_back(i);
  // Run lengths of t-signs.
  std::vector<std::int64_t> runs;
  for (std::size_t i = 0; i < t_pos.size(); ++i) {
    if (i == 0 || w[t_pos[i]].sign != w[t_pos[i - 1]].sign)
      runs.push_back(1);
    else
      ++runs.back();
  }

  std::size_t x_begin = 0, x_end = w.length();  // [x_begin, x_end)
  switch (cls) {
    case WordClass::X:
      break;
    case WordClass::XN:
      x_end = t_pos[static_cast<std::size_t>(2 * runs[0] - 1)] + 1;
      break;
    case WordClass::XNP:
      x_end = t_pos[static_cast<std::size_t>(2 * runs[0] - 1)] + 1;
      break;
    case WordClass::PX: {
      const std::int64_t p_ts = runs[0] - runs[1];
      x_begin = t_pos[static_cast<std::size_t>(p_ts)];
      break;
    }
    case WordClass::NPX: {
      const std::int64_t p_ts = runs[1] - runs[2];
      x_begin = t_pos[static_cast<std::size_t>(runs[0] + p_ts)];
      break;
    }
    default:
      break;
  }
  const Word x = w.subword(x_begin, x_end - x_begin);
  const BsElement g = bs_eval(x, params);
  if (!g.is_a_power()) throw std::logic_error("tilde: X factor is not an a-power");
  Word out = w.prefix(x_begin);
  out += Word::power(bs_gen::a, static_cast<std::int64_t>(g.num()));
  out += w.suffix(w.length() - x_end);
  return out;
}

bool has_pinch(const Word& w, const BsParams& params) {
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].gen != bs_gen::t || ls[i].sign != -1) continue;
    std::int64_t sum = 0;
    std::size_t j = i + 1;
    while (j < ls.size() && ls[j].gen == bs_gen::a) sum += ls[j++].sign;
    if (j < ls.size() && ls[j].gen == bs_gen::t && ls[j].sign == 1 && sum % params.q() == 0) return true;
  }
  return false;
}

}  // namespace convexity
