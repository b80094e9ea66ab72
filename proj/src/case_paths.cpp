#include "convexity/case_paths.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "convexity/bs_geodesic.hpp"
#include "convexity/models.hpp"

namespace convexity {
namespace {

using namespace bs_gen;
using json = nlohmann::ordered_json;
using i64 = std::int64_t;

const BsParams& bs2() {
  static const BsParams params(2);
  return params;
}

Word A(i64 e) { return Word::power(a, e); }
Word T(i64 e) { return Word::power(t, e); }
Word bs_word(std::string_view s) { return parse_word(s, Alphabet::bs()); }
std::string text(const Word& w) { return to_string(w, Alphabet::bs()); }
i64 sgn(i64 x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw CaseParamError(what);
}

i64 need_int(const CaseParams& p, const std::string& name) {
  auto it = p.ints.find(name);
  require(it != p.ints.end(), "missing parameter " + name);
  return it->second;
}

const Word& need_word(const CaseParams& p, const std::string& name) {
  auto it = p.words.find(name);
  require(it != p.words.end(), "missing parameter " + name);
  return it->second;
}

bool is_p_word(const Word& w) {
  for (Letter l : w)
    if (l.gen == t && l.sign < 0) return false;
  return is_freely_reduced(w);
}

BsElement eval(const Word& w) { return bs_eval(w, bs2()); }

GeodesicNormalForm nf(const BsElement& g, Class4Form form = Class4Form::Auto) {
  return normal_form(g, bs2(), {XOrientation::PN, form});
}

std::optional<i64> a_exponent(const Word& g) {
  if (g.empty()) return std::nullopt;
  for (Letter l : g)
    if (l.gen != a || l.sign != g[0].sign) return std::nullopt;
  return g[0].sign * static_cast<i64>(g.length());
}

// t a^k
std::optional<i64> t_then_a(const Word& g) {
  if (g.length() == 2 && g[0] == Letter{t, 1} && g[1].gen == a) return g[1].sign;
  return std::nullopt;
}

bool gamma_in(const Word& g, const std::vector<std::string_view>& set) {
  for (auto s : set)
    if (g == bs_word(s)) return true;
  return false;
}

const std::vector<std::string_view> kEorP = {"a", "A", "aa", "AA", "t", "tt", "ta", "tA", "at", "At"};

// w and gamma given, w replaced by its normal form, u the normal form of w gamma.
struct Pair {
  GeodesicNormalForm wf, uf;
  Word w, u, gamma;
  i64 r = 0;
};

Pair make_pair(const CaseParams& params, Class4Form wform, Class4Form uform) {
  Pair pr;
  const Word& w0 = need_word(params, "w");
  require(is_geodesic(w0, bs2()), "w is not geodesic");
  pr.wf = nf(eval(w0), wform);
  pr.w = pr.wf.render();
  pr.gamma = need_word(params, "gamma");
  require(pr.gamma.length() >= 1 && pr.gamma.length() <= 2 && is_geodesic(pr.gamma, bs2()),
          "gamma must be a geodesic of length 1 or 2");
  pr.uf = nf(bs_mul(eval(pr.w), eval(pr.gamma), bs2()), uform);
  pr.u = pr.uf.render();
  pr.r = static_cast<i64>(pr.w.length());
  require(static_cast<i64>(pr.u.length()) == pr.r, "l(u) differs from l(w)");
  return pr;
}

bool x_class1(const GeodesicNormalForm& f) { return f.cls == 1 && f.core.is_x; }

CaseWitness finish(std::string id, const CaseParams& params, const Pair& pr, Word delta) {
  CaseWitness cw;
  cw.id = std::move(id);
  cw.params = params;
  cw.w = pr.w;
  cw.u = pr.u;
  cw.gamma = pr.gamma;
  cw.delta = std::move(delta);
  cw.r = pr.r;
  return cw;
}

// Back along w to its first letter, then out along u.
Word shared_first_letter_path(const Pair& pr) {
  require(pr.r >= 1 && pr.w[0] == pr.u[0], "w and u do not share a first letter");
  return pr.w.suffix(pr.r - 1).inverse() + pr.u.suffix(pr.r - 1);
}

CaseWitness case4(const CaseParams& params, bool from5) {
  Pair pr = make_pair(params, Class4Form::Auto, Class4Form::Auto);
  require(x_class1(pr.wf), "w is not in X");
  if (from5)
    require(pr.uf.cls == 2 && pr.uf.core.is_x, "u is not in XN");
  else
    require(x_class1(pr.uf), "u is not in X");
  require(pr.w[0] == Letter{t, 1} && pr.u[0] == Letter{t, 1}, "normal forms do not start with t");
  CaseWitness cw = finish("4", params, pr, shared_first_letter_path(pr));
  if (from5) cw.via = "5";
  return cw;
}

CaseWitness case6(const CaseParams& params) {
  Pair pr = make_pair(params, Class4Form::Auto, Class4Form::Auto);
  require(pr.wf.cls == 3 && pr.uf.cls == 3, "w and u must both be in class 3");
  require(gamma_in(pr.gamma, kEorP), "gamma must lie in E or P");
  const i64 i = pr.wf.p_digits.front(), j = pr.uf.p_digits.front();
  CaseWitness cw;
  if (i == j) {
    const i64 n = 1 + std::abs(i);
    cw = finish("6", params, pr, pr.w.suffix(pr.r - n).inverse() + pr.u.suffix(pr.r - n));
    cw.branch = "i=j";
  } else {
    require(i == -j && std::abs(i) == 1, "leading digits i, j differ by an odd amount");
    cw = finish("6", params, pr, pr.w.suffix(pr.r - 2).inverse() + A(-i) + pr.u.suffix(pr.r - 2));
    cw.branch = "i=-j";
  }
  cw.params.ints["i"] = i;
  cw.params.ints["j"] = j;
  return cw;
}

// w, v in class 2 ending in a^i, a^j with v = w a^k.
Word delta_73(i64 i, i64 j, i64 k, std::string& branch) {
  if (i == 0) {
    require(std::abs(j) == 1 && k == -j, "case 7.3 with i = 0 needs |j| = 1 and gamma = a^-j");
    branch = "i=0";
    return T(1) + A(-j) + T(-1) + A(j);
  }
  require(k == i && j == 0, "case 7.3 with |i| = 1 needs gamma = a^i and j = 0");
  branch = "|i|=1";
  return A(-i) + T(1) + A(i) + T(-1);
}

CaseWitness case7(const std::string& id, const CaseParams& params) {
  Pair pr = make_pair(params, Class4Form::Auto, Class4Form::Auto);
  require(pr.wf.cls == 2 && pr.uf.cls == 2, "w and u must both be in class 2");
  const i64 i = pr.wf.n_digits.back(), j = pr.uf.n_digits.back();
  std::string branch;
  Word delta;
  if (id == "7.2") {
    require(gamma_in(pr.gamma, {"tt", "ta", "tA"}), "case 7.2 needs gamma in {t^2, t a, t a^-1}");
    require(i == 0, "case 7.2 needs i = 0");
    delta = pr.gamma;
  } else if (id == "7.3") {
    auto k = a_exponent(pr.gamma);
    require(k && std::abs(*k) == 1, "case 7.3 needs gamma = a^k, |k| = 1");
    delta = delta_73(i, j, *k, branch);
  } else {
    auto k2 = a_exponent(pr.gamma);
    require(k2 && std::abs(*k2) == 2, "case 7.4 needs gamma = a^2k, |k| = 1");
    const i64 k = *k2 / 2;
    if (i == 0) {
      require(j == 0, "case 7.4 with i = 0 needs j = 0");
      delta = T(1) + A(k) + T(-1);
      branch = "i=0";
    } else if (k == -i) {
      delta = pr.gamma;
      branch = "gamma=a^-2i";
    } else if (j == i) {
      delta = pr.gamma;
      branch = "gamma=a^2i,j=i";
    } else {
      require(j == -i, "case 7.4 with gamma = a^2i needs |j| = 1");
      delta = A(-i) + T(1) + A(2 * i) + T(-1) + A(-i);
      branch = "gamma=a^2i,j=-i";
    }
  }
  CaseWitness cw = finish(id, params, pr, std::move(delta));
  cw.branch = branch;
  cw.params.ints["i"] = i;
  cw.params.ints["j"] = j;
  return cw;
}

CaseWitness case81(const CaseParams& params) {
  const i64 p = need_int(params, "p"), k = need_int(params, "k"), j = need_int(params, "j");
  const Word& v = need_word(params, "v");
  require(p >= 2, "p >= 2");
  require(std::abs(k) >= 2 && std::abs(k) <= 3, "2 <= |k| <= 3");
  require(std::abs(j) == 1, "|j| = 1");
  require(is_p_word(v), "v must be a reduced word in P");
  require(sigma_t(v) == p - 1, "sigma_t(v) = p - 1");
  const i64 s = sgn(k);
  CaseWitness cw;
  cw.id = "8.1";
  cw.params = params;
  cw.w = T(1) + v + T(1) + A(k) + T(-(p + 1));
  cw.u = A(j) + T(1) + v + T(1) + A(k) + T(-p);
  cw.gamma = A(j) + T(1);
  cw.delta = T(p) + A(-2 * s) + T(-p) + A(j) + T(p) + A(2 * s) + T(1 - p);
  cw.r = static_cast<i64>(cw.w.length());
  return cw;
}

// gamma = a^-j t against u = a^j t u0: rewrite u as a^-j t w0 and use 8.1.
CaseWitness case82(const CaseParams& params) {
  const i64 j = need_int(params, "j");
  CaseParams target = params;
  target.ints["j"] = -j;
  CaseWitness cw = case81(target);
  const Word w0 = cw.w.subword(1, cw.w.length() - 2);
  const Word u0 = nf(bs_mul(eval(A(-j)), eval(w0), bs2())).render();
  const Word u_orig = A(j) + T(1) + u0;
  require(u0.length() == w0.length() && is_geodesic(u_orig, bs2()),
          "u = a^j t u0 with u0 = a^-j w0 is not a geodesic of length r");
  cw.via = "8.2";
  cw.params = params;
  cw.params.words["u_original"] = u_orig;
  return cw;
}

// 9.1.1 and 10.2.1: u ends in t, gamma in {t^2, a^±1 t}.
CaseWitness case911(const CaseParams& params, bool from1021) {
  Pair pr = make_pair(params, Class4Form::TrailingT, Class4Form::TrailingT);
  if (from1021)
    require(pr.wf.cls == 4 && sigma_t(pr.w) < 0, "w must be in class 4 with sigma_t(w) < 0");
  else
    require(pr.wf.cls == 2, "w must be in class 2");
  require(pr.uf.cls == 4 && sigma_t(pr.u) <= 0 && pr.uf.form == Class4Form::TrailingT,
          "u must be in class 4 ending in t^f with sigma_t(u) <= 0");
  require(gamma_in(pr.gamma, {"tt", "at", "At"}), "gamma must be t^2 or a^±1 t");
  CaseWitness cw = finish("9.1.1", params, pr, pr.gamma);
  if (from1021) cw.via = "10.2.1";
  return cw;
}

// u(r-1) a^-k = w a^k; the short path when it lies in B(r-1).
bool v_inside(const Pair& pr, i64 k) {
  const Word v = pr.u.prefix(pr.r - 1) + A(-k);
  return geodesic_length(eval(v), bs2()) <= pr.r - 1;
}

CaseWitness case912(const CaseParams& params) {
  Pair pr = make_pair(params, Class4Form::TrailingT, Class4Form::TrailingT);
  require(pr.wf.cls == 2, "w must be in class 2");
  require(pr.uf.cls == 4 && pr.uf.form == Class4Form::TrailingT && sigma_t(pr.u) <= 0,
          "u must be in class 4 ending in t^f with sigma_t(u) <= 0");
  auto k = t_then_a(pr.gamma);
  require(k.has_value(), "case 9.1.2 needs gamma = t a^k");
  require(pr.uf.f == 1, "f = 1");
  CaseWitness cw;
  if (v_inside(pr, *k)) {
    cw = finish("9.1.2", params, pr, A(2 * *k) + T(1));
    cw.branch = "v in B(r-1)";
  } else {
    const BsElement gv = bs_mul(eval(pr.w), eval(A(*k)), bs2());
    const GeodesicNormalForm vf = nf(gv);
    require(vf.cls == 2 && vf.length() == pr.r, "v is not a class 2 geodesic of length r");
    std::string inner;
    Word d = delta_73(pr.wf.n_digits.back(), vf.n_digits.back(), *k, inner);
    cw = finish("9.1.2", params, pr, d + A(*k) + T(1));
    cw.branch = "v on S(r), 7.3 " + inner;
  }
  return cw;
}

CaseWitness case92(const CaseParams& params) {
  const i64 p = need_int(params, "p"), k = need_int(params, "k"), i = need_int(params, "i");
  const Word& v = need_word(params, "v");
  require(p > 9, "sigma_t(v) = p > 9");
  require(std::abs(k) >= 2 && std::abs(k) <= 3, "2 <= |k| <= 3");
  require(std::abs(i) == 1, "|i| = 1");
  require(is_p_word(v), "v must be a reduced word in P");
  require(sigma_t(v) == p, "sigma_t(v) = p");
  const i64 s = sgn(k);
  CaseWitness cw;
  cw.id = "9.2";
  cw.params = params;
  cw.w = v + T(1) + A(k) + T(-(p + 2)) + A(i);
  cw.u = T(-1) + A(i) + T(1) + v + T(1) + A(k) + T(-p);
  cw.gamma = T(2);
  cw.delta = A(-i) + T(p + 1) + A(-2 * s) + T(-(p - 1)) + T(-2) + A(i) + T(2) + T(p - 1) + A(2 * s) + T(-(p - 1));
  cw.r = static_cast<i64>(cw.w.length());
  return cw;
}

CaseWitness case101(const CaseParams& params) {
  Pair pr = make_pair(params, Class4Form::LeadingN, Class4Form::LeadingN);
  require(pr.wf.cls == 4 && pr.uf.cls == 4, "w and u must both be in class 4");
  require(sigma_t(pr.w) >= 0 && sigma_t(pr.u) >= 0, "sigma_t(w), sigma_t(u) >= 0");
  require(gamma_in(pr.gamma, kEorP), "gamma must lie in E or P");
  const i64 p1 = pr.wf.e, p2 = pr.uf.e;
  Word delta = pr.w.suffix(pr.r - p1).inverse() + T(p1 - 1) + T(-(p2 - 1)) + pr.u.suffix(pr.r - p2);
  CaseWitness cw = finish("10.1", params, pr, std::move(delta));
  cw.params.ints["p1"] = p1;
  cw.params.ints["p2"] = p2;
  return cw;
}

Pair pair102(const CaseParams& params) {
  Pair pr = make_pair(params, Class4Form::TrailingT, Class4Form::TrailingT);
  require(pr.wf.cls == 4 && pr.wf.form == Class4Form::TrailingT && sigma_t(pr.w) < 0,
          "w must be in class 4 ending in t^f with sigma_t(w) < 0");
  require(pr.uf.cls == 4 && pr.uf.form == Class4Form::TrailingT && sigma_t(pr.u) <= 0,
          "u must be in class 4 ending in t^f with sigma_t(u) <= 0");
  return pr;
}

CaseWitness case1022(const CaseParams& params) {
  Pair pr = pair102(params);
  auto k = a_exponent(pr.gamma);
  require(k && std::abs(*k) == 1, "case 10.2.2 needs gamma = a^k, |k| = 1");
  return finish("10.2.2", params, pr, T(-1) + A(2 * *k) + T(1));
}

CaseWitness case1023(const CaseParams& params) {
  Pair pr = pair102(params);
  auto k = t_then_a(pr.gamma);
  require(k.has_value(), "case 10.2.3 needs gamma = t a^k");
  CaseWitness cw;
  if (v_inside(pr, *k)) {
    cw = finish("10.2.3", params, pr, A(2 * *k) + T(1));
    cw.branch = "v in B(r-1)";
  } else {
    cw = finish("10.2.3", params, pr, T(-1) + A(2 * *k) + T(1) + A(*k) + T(1));
    cw.branch = "v on S(r)";
  }
  return cw;
}

CaseWitness case1024(const CaseParams& params) {
  const i64 f1 = need_int(params, "f1"), i1 = need_int(params, "i1"), k = need_int(params, "k");
  const Word& prefix = need_word(params, "prefix");
  require(f1 >= 1, "f1 >= 1");
  require(std::abs(i1) == 1, "|i1| = 1");
  require(std::abs(k) == 1, "|k| = 1");
  const Word w = prefix + T(-1) + A(i1) + T(f1);
  require(sigma_t(w) < 0, "sigma_t(w) < 0");
  require(classify(w) == WordClass::NP || classify(w) == WordClass::XNP, "w must lie in (X)NP");
  const GeodesicNormalForm uf = nf(bs_mul(eval(w), eval(A(2 * k)), bs2()), Class4Form::TrailingT);
  const Word u = uf.render();
  require(uf.cls == 4 && uf.f == f1 && u.length() == w.length(), "u is not in class 4 ending in t^f1 with l(u) = r");
  const i64 r = static_cast<i64>(w.length());
  require(r >= 2 * f1 + 3, "r >= 2 f1 + 3");
  CaseWitness cw;
  cw.id = "10.2.4";
  cw.params = params;
  cw.params.ints["i2"] = uf.n_digits.back();
  cw.w = w;
  cw.u = u;
  cw.gamma = A(2 * k);
  cw.delta = T(-f1) + A(-i1) + T(f1) + A(2 * k) + T(-f1) + A(i1) + T(f1);
  cw.r = r;
  return cw;
}

CaseWitness case1031(const std::string& id, const CaseParams& params) {
  const i64 l = need_int(params, "l"), p = need_int(params, "p"), m = need_int(params, "m"),
            i = need_int(params, "i");
  const Word &w3 = need_word(params, "w3"), &w2 = need_word(params, "w2");
  require(std::abs(m) >= 2 && std::abs(m) <= 3, "2 <= |m| <= 3");
  require(p >= 2, "p >= 2");
  require(std::abs(i) == 1, "|i| = 1");
  require(is_p_word(w3) && sigma_t(w3) == l - 1, "w3 in P with sigma_t(w3) = l - 1");
  require(is_p_word(w2) && sigma_t(w2) == p - 2, "w2 in P with sigma_t(w2) = p - 2");
  if (id == "10.3.1.1")
    require(l >= 2, "l >= 2");
  else
    require(l == 1, "l = 1");
  const i64 s = sgn(m);
  CaseWitness cw;
  cw.id = id;
  cw.params = params;
  cw.w = w3 + T(1) + A(m) + T(-l) + T(-p) + A(i) + T(1) + w2;
  cw.u = T(-p) + A(i) + T(1) + w2 + T(1) + w3 + T(1) + A(m) + T(-(l - 1));
  cw.gamma = T(2);
  const Word head = w2.inverse() + T(-1) + A(-i) + T(p - 1);
  const Word middle = T(-(p - 1)) + A(i) + T(1) + w2;
  if (l >= 2)
    cw.delta = head + T(l) + A(-2 * s) + T(-l) + middle + T(l) + A(2 * s) + T(-(l - 2));
  else
    cw.delta = head + T(1) + A(-2 * s) + T(-1) + middle + T(2) + A(s);
  cw.r = static_cast<i64>(cw.w.length());
  return cw;
}

CaseWitness case1033(const std::string& id, const CaseParams& params) {
  const i64 p = need_int(params, "p"), k = need_int(params, "k"), i = need_int(params, "i");
  const Word& w2 = need_word(params, "w2");
  require(std::abs(k) <= 3, "|k| <= 3");
  require(p >= 2, "p >= 2");
  require(std::abs(i) == 1, "|i| = 1");
  require(is_p_word(w2) && sigma_t(w2) == p - 2, "w2 in P with sigma_t(w2) = p - 2");
  require(static_cast<i64>(w2.length()) >= p - 1, "l(w2) >= p - 1");
  const Word w = A(k) + T(-p) + A(i) + T(1) + w2;
  const GeodesicNormalForm uf = nf(bs_mul(eval(w), eval(T(2)), bs2()), Class4Form::LeadingN);
  const Word u = uf.render();
  require(uf.cls == 4 && uf.e == p && u.length() == w.length(), "u is not t^-p a^j t U with l(u) = r");
  const i64 j = uf.p_digits.front();
  require(std::abs(j) == 1, "|j| = 1");
  const Word U = u.suffix(u.length() - static_cast<std::size_t>(p) - 2);
  const Word head = w2.inverse() + T(p - 1) + A(-k) + T(-(p - 1));
  CaseWitness cw;
  cw.id = id;
  cw.params = params;
  cw.params.ints["j"] = j;
  if (id == "10.3.3.1") {
    require(i == j, "i = j");
    cw.delta = head + U;
  } else {
    require(i == -j, "i = -j");
    cw.delta = head + A(j) + U;
  }
  cw.w = w;
  cw.u = u;
  cw.gamma = T(2);
  cw.r = static_cast<i64>(w.length());
  return cw;
}

// ---- sampling ----

struct Draw {
  std::mt19937_64& g;
  i64 range(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(g); }
  bool coin(double p) { return std::bernoulli_distribution(p)(g); }
  i64 sign() { return coin(0.5) ? 1 : -1; }
  i64 digit(double density) { return coin(density) ? sign() : 0; }
  double density() {
    static constexpr std::array<double, 3> d = {0.05, 0.2, 0.5};
    return d[range(0, 2)];
  }
  // Half the draws stay small, half use the whole range.
  i64 size(const SampleOptions& o, i64 floor = 2) {
    const i64 lo = std::max(o.min_size, floor), hi = std::max(lo, o.max_size);
    return coin(0.5) ? range(lo, std::min(hi, std::max(lo, i64{30}))) : range(lo, hi);
  }
};

Word x_block(Draw& d, i64 h) {
  XBlock x;
  x.h = h;
  x.s = d.sign() * d.range(2, 3);
  const double den = d.density();
  for (i64 n = 0; n < h; ++n) x.k.push_back(static_cast<int>(d.digit(den)));
  return x.render(XOrientation::PN);
}

Word core(Draw& d, i64 h) { return d.coin(0.85) ? x_block(d, h) : A(d.range(-3, 3)); }

Word n_tail(Draw& d, i64 e, bool last_nonzero) {
  Word w;
  const double den = d.density();
  for (i64 n = 0; n < e; ++n) w = w + T(-1) + A(n + 1 == e && last_nonzero ? d.sign() : d.digit(den));
  return w;
}

Word p_head(Draw& d, i64 f, bool first_nonzero) {
  Word w;
  const double den = d.density();
  for (i64 n = 0; n < f; ++n) w = w + A(n == 0 && first_nonzero ? d.sign() : d.digit(den)) + T(1);
  return w;
}

// Reduced P-word with sigma_t = sigma and at most `extra` letters a^±1;
// `tail` overrides the last digits.
Word p_filler(Draw& d, i64 sigma, int extra, bool need_a = false, const std::vector<i64>& tail = {}) {
  std::vector<i64> digits(static_cast<std::size_t>(sigma + 1), 0);
  i64 count = d.range(need_a ? 1 : 0, std::min<i64>(extra, sigma + 1));
  for (i64 n = 0; n < count; ++n) digits[static_cast<std::size_t>(d.range(0, sigma))] = d.sign();
  for (std::size_t n = 0; n < tail.size() && n < digits.size(); ++n) digits[digits.size() - tail.size() + n] = tail[n];
  Word w;
  for (i64 n = 0; n <= sigma; ++n) {
    w = w + A(digits[static_cast<std::size_t>(n)]);
    if (n < sigma) w = w + T(1);
  }
  return w;
}

Word random_w(Draw& d, std::string_view id, const SampleOptions& o) {
  const i64 size = d.size(o, 1);
  if (id == "4" || id == "5") return x_block(d, size);
  if (id == "6") return p_head(d, d.range(1, size), false) + core(d, d.range(1, size));
  if (id.substr(0, 1) == "7" || id.substr(0, 1) == "9") return core(d, d.range(1, size)) + n_tail(d, d.range(1, size), false);
  if (id == "10.1") {
    const i64 f = d.range(1, size), e = d.range(1, f);
    return T(-e) + p_head(d, f, true) + core(d, d.range(1, size));
  }
  // 10.2.x: sigma_t < 0
  const i64 e = d.range(2, std::max<i64>(2, size)), f = d.range(1, e - 1);
  return core(d, d.range(1, size)) + n_tail(d, e, true) + T(f);
}

std::vector<std::string_view> gamma_choices(std::string_view id) {
  if (id == "4") return {"a", "A", "aa", "AA"};
  if (id == "5") return {"T", "TT", "Ta", "TA", "aT", "AT"};
  if (id == "7.2") return {"tt", "ta", "tA"};
  if (id == "7.3" || id == "10.2.2") return {"a", "A"};
  if (id == "7.4") return {"aa", "AA"};
  if (id == "9.1.1" || id == "10.2.1") return {"tt", "at", "At"};
  if (id == "9.1.2" || id == "10.2.3") return {"ta", "tA"};
  return kEorP;
}

bool structural(std::string_view id) {
  static const std::vector<std::string_view> ids = {"4",     "5",     "6",    "7.2",    "7.3",    "7.4",
                                                    "9.1.1", "9.1.2", "10.1", "10.2.1", "10.2.2", "10.2.3"};
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

void fill_int(CaseParams& p, const std::string& name, i64 value) { p.ints.try_emplace(name, value); }

CaseParams fill_parametric(Draw& d, std::string_view id, const CaseParams& fixed, const SampleOptions& o) {
  CaseParams p = fixed;
  if (id == "8.1" || id == "8.2") {
    fill_int(p, "p", d.size(o));
    fill_int(p, "k", d.sign() * d.range(2, 3));
    fill_int(p, "j", d.sign());
    if (!p.words.count("v")) p.words["v"] = p_filler(d, p.ints["p"] - 1, o.max_extra_letters);
  } else if (id == "9.2") {
    fill_int(p, "p", d.size(o, 10));
    fill_int(p, "k", d.sign() * d.range(2, 3));
    fill_int(p, "i", d.sign());
    if (!p.words.count("v")) p.words["v"] = p_filler(d, p.ints["p"], o.max_extra_letters);
  } else if (id == "10.2.4") {
    fill_int(p, "f1", d.size(o));
    fill_int(p, "i1", d.sign());
    fill_int(p, "k", d.sign());
    if (!p.words.count("prefix")) {
      const i64 f1 = p.ints["f1"];
      p.words["prefix"] = (d.coin(0.3) ? A(d.range(-3, 3)) : core(d, d.range(1, f1))) + n_tail(d, f1 + d.range(0, 3), false);
    }
  } else if (id == "10.3.1.1" || id == "10.3.1.2") {
    fill_int(p, "l", id == "10.3.1.2" ? 1 : d.size(o));
    fill_int(p, "p", d.size(o));
    fill_int(p, "m", d.sign() * d.range(2, 3));
    fill_int(p, "i", d.sign());
    if (!p.words.count("w3")) p.words["w3"] = p_filler(d, p.ints["l"] - 1, o.max_extra_letters);
    if (!p.words.count("w2")) p.words["w2"] = p_filler(d, p.ints["p"] - 2, o.max_extra_letters);
  } else if (id == "10.3.3.1" || id == "10.3.3.2") {
    // instances need |k| = 3 and w2 ending in a^s t a^s or a^s t t a^s, s = sign k
    const bool shaped = d.coin(0.8);
    fill_int(p, "p", d.size(o, shaped ? 4 : 2));
    fill_int(p, "k", shaped ? 3 * d.sign() : d.range(-3, 3));
    fill_int(p, "i", d.sign());
    const i64 s = sgn(p.ints["k"]);
    std::vector<i64> tail;
    if (shaped && s != 0) tail = d.coin(0.5) ? std::vector<i64>{0, s, s} : std::vector<i64>{s, 0, s};
    if (!p.words.count("w2")) p.words["w2"] = p_filler(d, p.ints["p"] - 2, o.max_extra_letters, true, tail);
  }
  return p;
}

bool hypotheses_hold(const CaseWitness& cw) {
  if (cw.w.length() != cw.u.length()) return false;
  if (!is_geodesic(cw.w, bs2()) || !is_geodesic(cw.u, bs2())) return false;
  const BsElement gw = eval(cw.w), gu = eval(cw.u);
  return !(gw == gu) && bs_mul(gw, eval(cw.gamma), bs2()) == gu;
}

}  // namespace

json CaseParams::to_json() const {
  json out = json::object();
  for (const auto& [k, v] : ints) out[k] = v;
  for (const auto& [k, v] : words) out[k] = text(v);
  return out;
}

const std::vector<std::string>& constructive_case_ids() {
  static const std::vector<std::string> ids = {"4",      "6",      "7.2",    "7.3",      "7.4",      "8.1",
                                               "9.1.2",  "9.2",    "10.1",   "10.2.2",   "10.2.3",   "10.2.4",
                                               "10.3.1.1", "10.3.1.2", "10.3.3.1", "10.3.3.2"};
  return ids;
}

const std::vector<std::string>& reduction_case_ids() {
  static const std::vector<std::string> ids = {"5", "8.2", "9.1.1", "10.2.1"};
  return ids;
}

bool is_case_id(std::string_view id) {
  for (const auto* list : {&constructive_case_ids(), &reduction_case_ids()})
    if (std::find(list->begin(), list->end(), id) != list->end()) return true;
  return false;
}

std::vector<std::string> case_parameter_names(std::string_view id) {
  if (!is_case_id(id)) throw CaseParamError("unknown case " + std::string(id));
  if (structural(id)) return {"w", "gamma"};
  if (id == "8.1" || id == "8.2") return {"p", "k", "j", "v"};
  if (id == "9.2") return {"p", "k", "i", "v"};
  if (id == "10.2.4") return {"f1", "i1", "k", "prefix"};
  if (id == "10.3.1.1" || id == "10.3.1.2") return {"l", "p", "m", "i", "w3", "w2"};
  return {"p", "k", "i", "w2"};
}

CaseWitness build_case(std::string_view id_view, const CaseParams& params) {
  const std::string id(id_view);
  if (id == "4") return case4(params, false);
  if (id == "5") return case4(params, true);
  if (id == "6") return case6(params);
  if (id == "7.2" || id == "7.3" || id == "7.4") return case7(id, params);
  if (id == "8.1") return case81(params);
  if (id == "8.2") return case82(params);
  if (id == "9.1.1") return case911(params, false);
  if (id == "9.1.2") return case912(params);
  if (id == "9.2") return case92(params);
  if (id == "10.1") return case101(params);
  if (id == "10.2.1") return case911(params, true);
  if (id == "10.2.2") return case1022(params);
  if (id == "10.2.3") return case1023(params);
  if (id == "10.2.4") return case1024(params);
  if (id == "10.3.1.1" || id == "10.3.1.2") return case1031(id, params);
  if (id == "10.3.3.1" || id == "10.3.3.2") return case1033(id, params);
  throw CaseParamError("unknown case " + id);
}

CaseReport verify_case(const CaseWitness& cw) {
  const BsParams& p = bs2();
  CaseReport rep;
  rep.witness = cw;
  const i64 lw = static_cast<i64>(cw.w.length()), lu = static_cast<i64>(cw.u.length());
  rep.geodesic = lw == cw.r && lu == cw.r && is_geodesic(cw.w, p) && is_geodesic(cw.u, p);
  const BsElement gw = eval(cw.w), gu = eval(cw.u);
  const i64 d = geodesic_length(bs_mul(bs_inv(gw, p), gu, p), p);
  rep.distance = d >= 1 && d <= 2 && bs_mul(gw, eval(cw.gamma), p) == gu;
  rep.endpoint = eval(cw.delta) == eval(cw.gamma);
  rep.length = static_cast<i64>(cw.delta.length()) <= 2 * cw.r - 2;
  rep.in_ball = true;
  BsElement g = gw;
  for (std::size_t n = 0; n < cw.delta.length(); ++n) {
    g = bs_mul_letter(g, cw.delta[n], p);
    if (geodesic_length(g, p) > cw.r) {
      rep.in_ball = false;
      rep.first_violation = n + 1;
      break;
    }
  }
  return rep;
}

json CaseReport::to_json() const {
  const CaseWitness& cw = witness;
  json out;
  out["case"] = cw.id;
  if (!cw.via.empty()) out["via"] = cw.via;
  if (!cw.branch.empty()) out["branch"] = cw.branch;
  out["params"] = cw.params.to_json();
  out["r"] = cw.r;
  out["w"] = text(cw.w);
  out["u"] = text(cw.u);
  out["gamma"] = text(cw.gamma);
  out["delta"] = text(cw.delta);
  out["delta_length"] = cw.delta.length();
  out["checks"] = {{"geodesic", geodesic},
                   {"distance", distance},
                   {"endpoint", endpoint},
                   {"length", length},
                   {"in_ball", in_ball}};
  out["first_violation"] = first_violation ? json(*first_violation) : json(nullptr);
  out["passed"] = passed();
  return out;
}

CaseWitness sample_case(std::string_view id, std::mt19937_64& rng, const CaseParams& fixed, const SampleOptions& opts) {
  const std::vector<std::string> names = case_parameter_names(id);
  bool all_fixed = true;
  for (const auto& n : names) all_fixed = all_fixed && (fixed.ints.count(n) || fixed.words.count(n));
  Draw d{rng};
  std::string last = "no attempt made";
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    CaseParams p = fixed;
    if (structural(id)) {
      // a^-i t X and a^i t X differ by a^i for an X-block X
      if (id == "6" && !p.words.count("w") && !p.words.count("gamma") && d.coin(0.3)) {
        const i64 i = d.sign();
        p.words["w"] = A(i) + T(1) + x_block(d, d.size(opts, 1));
        p.words["gamma"] = A(-i);
      }
      if (!p.words.count("w")) p.words["w"] = random_w(d, id, opts);
      if (!p.words.count("gamma")) {
        auto choices = gamma_choices(id);
        p.words["gamma"] = bs_word(choices[static_cast<std::size_t>(d.range(0, static_cast<i64>(choices.size()) - 1))]);
      }
    } else {
      p = fill_parametric(d, id, fixed, opts);
    }
    try {
      CaseWitness cw = build_case(id, p);
      if (hypotheses_hold(cw) && (all_fixed || cw.r >= opts.min_radius)) return cw;
      last = cw.r < opts.min_radius ? "r below min_radius"
                                    : "w or u is not a geodesic of length r, or gamma does not join them";
    } catch (const CaseParamError& e) {
      last = e.what();
    }
    if (all_fixed) break;
  }
  throw CaseParamError("case " + std::string(id) + ": no valid instance (" + last + ")");
}

std::vector<ImpossibilityCount> impossibility_search(int radius) {
  const BsParams& p = bs2();
  BsModel model(2);
  auto ball = build_ball(model, radius);
  const BallIndex& idx = ball.index;

  struct Info {
    int cls;
    bool bare;        // class 1 bare power
    bool small_core;  // class 1-3, |sigma| <= 2, bare-power core
    i64 sigma;
  };
  std::vector<Info> info(idx.size());
  for (std::uint32_t v = 0; v < idx.size(); ++v) {
    const GeodesicNormalForm f = nf(ball.elements[v]);
    const i64 sigma = ball.elements[v].texp();
    info[v] = {f.cls, f.cls == 1 && !f.core.is_x, f.cls <= 3 && std::abs(sigma) <= 2 && !f.core.is_x, sigma};
  }

  std::vector<Word> gammas;
  for (auto s : {"a", "A", "t", "T", "aa", "AA", "tt", "TT", "at", "aT", "At", "AT", "ta", "tA", "Ta", "TA"})
    gammas.push_back(bs_word(s));
  const std::vector<Word> bad71 = {bs_word("t"), bs_word("at"), bs_word("At")};

  ImpossibilityCount c1, c2, c3, c71, c1032;
  c1.id = "1";
  c2.id = "2";
  c3.id = "3";
  c71.id = "7.1";
  c1032.id = "10.3.2";
  auto note = [&](ImpossibilityCount& c, bool restricted_ok, std::uint32_t x, const Word& g) {
    ++c.unrestricted;
    if (!restricted_ok) return;
    if (c.realizations++ == 0) c.example = text(nf(ball.elements[x]).render()) + " * " + text(g);
  };
  for (std::uint32_t x = 1; x < idx.size(); ++x) {
    if (info[x].bare) continue;
    for (const Word& g : gammas) {
      const auto y = idx.find(model.key(bs_mul(ball.elements[x], eval(g), p)));
      if (y == kNoVertex || y == x || idx.dist(y) != idx.dist(x) || info[y].bare) continue;
      const Info &ix = info[x], &iy = info[y];
      const bool ok = !ix.small_core && !iy.small_core;
      ++c1.examined;
      ++c2.examined;
      ++c3.examined;
      if (ix.cls == 4 && iy.cls == 1) note(c1, ok, x, g);
      if (ix.cls == 4 && iy.cls == 3) note(c2, ok, x, g);
      if (ix.cls == 2 && iy.cls == 3) note(c3, ok, x, g);
      if (ix.cls == 2 && iy.cls == 2 && ix.sigma <= iy.sigma) {
        ++c71.examined;
        if (std::find(bad71.begin(), bad71.end(), g) != bad71.end()) note(c71, ok, x, g);
      }
    }
  }

  for (i64 pp = 2; 2 * pp <= radius; ++pp)
    for (i64 k = -3; k <= 3; ++k)
      for (i64 i : {-1, 1}) {
        const Word w = A(k) + T(-pp) + A(i) + T(pp - 1);
        if (static_cast<i64>(w.length()) > radius || !is_geodesic(w, p)) continue;
        ++c1032.examined;
        const BsElement gu = bs_mul(eval(w), eval(T(2)), p);
        if (geodesic_length(gu, p) == static_cast<i64>(w.length()) && nf(gu).cls == 4) {
          ++c1032.unrestricted;
          if (c1032.realizations++ == 0) c1032.example = text(w) + " * t^2";
        }
      }
  return {c1, c2, c3, c71, c1032};
}

}  // namespace convexity
