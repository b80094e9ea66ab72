#include "convexity/witness.hpp"

#include <stdexcept>

#include "convexity/bs_geodesic.hpp"
#include "convexity/models.hpp"

namespace convexity {
namespace {

using json = nlohmann::ordered_json;
using namespace bs_gen;

Word bs_word(std::string_view s) { return parse_word(s, Alphabet::bs()); }

std::string bs_text(const Word& w) { return to_string(w, Alphabet::bs()); }

void add(WitnessReport& rep, std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); }

// Geodesic checks shared by both pair witnesses.
void pair_geodesics(WitnessReport& rep, const PairWitness& sw, const BsParams& p) {
  auto geo = [&](const Word& w) { return is_geodesic(w, p); };
  add(rep, "w_geodesic", geo(sw.w));
  add(rep, "wa_geodesic", geo(sw.w + bs_word("a")));
  add(rep, "wA_geodesic", geo(sw.w + bs_word("A")));
  add(rep, "wT_geodesic", geo(sw.w + bs_word("T")));
  add(rep, "u_geodesic", geo(sw.u));
  const BsElement gw = bs_eval(sw.w, p), gu = bs_eval(sw.u, p);
  add(rep, "gamma_joins", bs_mul(gw, bs_eval(sw.gamma, p), p) == gu);
  add(rep, "distance_two", geodesic_length(bs_mul(bs_inv(gw, p), gu, p), p) == 2);
  rep.values["w"] = bs_text(sw.w);
  rep.values["u"] = bs_text(sw.u);
  rep.values["R"] = sw.R;
}

}  // namespace

PairWitness pair_witness(int q, int n) {
  if (n < 1) throw std::invalid_argument("witness needs n >= 1");
  if (q != 2 && q < 7) throw std::invalid_argument("pair witnesses exist for q = 2 and q >= 7");
  PairWitness sw;
  sw.q = q;
  sw.n = n;
  const int top = q == 2 ? 2 : 1;
  sw.w = Word::power(t, n) + Word::power(a, top) + Word::power(t, -n);
  sw.u = Word::power(a, 1) + Word::power(t, n) + Word::power(a, top) + Word::power(t, -(n - 1));
  sw.R = 2 * n + top;
  sw.gamma = bs_word("at");
  return sw;
}

bool WitnessReport::passed() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

json WitnessReport::to_json() const {
  json out;
  out["witness"] = kind;
  out["params"] = params;
  json cj = json::object();
  for (const auto& c : checks) cj[c.name] = c.ok;
  out["checks"] = cj;
  out["values"] = values;
  out["passed"] = passed();
  return out;
}

WitnessReport verify_notpac(int n, WitnessOptions opts) {
  WitnessReport rep;
  rep.kind = "notpac";
  rep.params = {{"q", 2}, {"n", n}};
  const PairWitness sw = pair_witness(2, n);
  BsModel model(2);
  pair_geodesics(rep, sw, model.params());

  auto ball = build_ball(model, sw.R, {opts.element_cap, opts.jobs});
  const auto x = ball.index.find(model.key(model.eval(sw.w)));
  const auto y = ball.index.find(model.key(model.eval(sw.u)));
  add(rep, "endpoints_on_sphere", x != kNoVertex && y != kNoVertex && ball.index.dist(x) == sw.R &&
                                      ball.index.dist(y) == sw.R);
  std::optional<int> len;
  if (x != kNoVertex && y != kNoVertex) len = BridgeSearcher(ball.index).bridge_length(x, y, sw.R);
  add(rep, "bridge_exceeds_R_minus_8", len && *len > sw.R - 8);
  rep.values["min_bridge"] = len ? json(*len) : json(nullptr);
  rep.values["ball_size"] = ball.index.size();
  return rep;
}

WitnessReport verify_bs1q_notmac(int q, int n, WitnessOptions opts) {
  if (q < 7) throw std::invalid_argument("non-MAC witness needs q >= 7");
  WitnessReport rep;
  rep.kind = "bs1q";
  rep.params = {{"q", q}, {"n", n}};
  const PairWitness sw = pair_witness(q, n);
  BsModel model(q);
  pair_geodesics(rep, sw, model.params());

  auto ball = build_ball(model, sw.R, {opts.element_cap, opts.jobs});
  const auto x = ball.index.find(model.key(model.eval(sw.w)));
  const auto y = ball.index.find(model.key(model.eval(sw.u)));
  const auto one = ball.index.find(model.key(model.identity()));
  add(rep, "endpoints_on_sphere", x != kNoVertex && y != kNoVertex && ball.index.dist(x) == sw.R &&
                                      ball.index.dist(y) == sw.R);
  BridgeSearcher search(ball.index);
  std::optional<int> len, avoiding;
  if (x != kNoVertex && y != kNoVertex) {
    len = search.bridge_length(x, y, sw.R);
    avoiding = search.bridge_length(x, y, sw.R, one);
  }
  add(rep, "bridge_equals_2R", len && *len == 2 * sw.R);
  // every minimal bridge visits 1 iff removing 1 makes bridges longer
  add(rep, "minimal_bridges_visit_identity", len && (!avoiding || *avoiding > *len));
  rep.values["min_bridge"] = len ? json(*len) : json(nullptr);
  rep.values["min_bridge_avoiding_identity"] = avoiding ? json(*avoiding) : json(nullptr);
  rep.values["ball_size"] = ball.index.size();
  return rep;
}

WitnessReport verify_digit_bound(int n, int q) {
  if (q != 2 && q < 7) throw std::invalid_argument("digit lemma covers q = 2 and q >= 7");
  if (n < 2) throw std::invalid_argument("digit lemma needs n >= 2");
  WitnessReport rep;
  rep.kind = "digit_bound";
  rep.params = {{"q", q}, {"n", n}};
  BsParams p(q);
  const int R = q == 2 ? 2 * n + 2 : 2 * n + 1;
  const BigInt top = q == 2 ? p.pow(n + 1) : p.pow(n);
  const BigInt bound = q == 2 ? p.pow(n) + p.pow(n - 1) + p.pow(n - 2) : 3 * p.pow(n - 1);
  // An X-block of height h has |value| < q^(h+1) for q > 2 and < 2^(h+2) for
  // q = 2; its length 2h + |s| <= R caps h.
  const BigInt limit = p.pow(R / 2 + 1);
  std::vector<std::string> above;
  BigInt largest = 0;
  bool ok = true;
  for (BigInt m = 1; m <= limit; ++m) {
    if (geodesic_length(BsElement::a_power(m), p) > R) continue;
    largest = m;
    if (m > bound) {
      above.push_back(m.str());
      if (m != top) ok = false;
    }
  }
  add(rep, "dichotomy", ok);
  add(rep, "top_reachable", geodesic_length(BsElement::a_power(top), p) <= R);
  add(rep, "search_limit_clear", largest < limit);
  rep.values["R"] = R;
  rep.values["bound"] = bound.str();
  rep.values["reachable_above_bound"] = above;
  rep.values["largest_reachable"] = largest.str();
  return rep;
}

WitnessReport verify_stallings_witness(int n, WitnessOptions opts) {
  if (n < 1) throw std::invalid_argument("witness needs n >= 1");
  WitnessReport rep;
  rep.kind = "stallings";
  rep.params = {{"n", n}};
  const Alphabet& al = Alphabet::stallings();
  const Word alpha = Word::power(st_gen::b, -(n + 1)) + Word::power(st_gen::a, n + 1);
  const Word beta = Word{{st_gen::s, 1}} + Word::power(st_gen::b, -(n + 1)) + Word::power(st_gen::a, n);
  const int R = 2 * n + 2;
  const StallingsElement ga = st_eval(alpha), gb = st_eval(beta);
  rep.values["alpha"] = to_string(alpha, al);
  rep.values["beta"] = to_string(beta, al);
  rep.values["R"] = R;

  add(rep, "alpha_length", gamma_length_special(ga) == R);
  add(rep, "beta_length", gamma_length_special(gb) == R);
  const StallingsElement diff = st_mul(st_inv(ga), gb);
  add(rep, "alpha_inv_beta_is_sA", diff == st_eval("sA"));
  bool even = true;
  for (const Word& rel : stallings_relators()) even = even && rel.length() % 2 == 0 && st_eval(rel).is_identity();
  add(rep, "relators_even_and_trivial", even);

  StallingsModel model;
  auto ball = build_ball(model, R, {opts.element_cap, opts.jobs});
  const auto x = ball.index.find(model.key(ga)), y = ball.index.find(model.key(gb));
  const auto d = ball.index.find(model.key(diff));
  add(rep, "distance_two", d != kNoVertex && ball.index.dist(d) == 2);
  add(rep, "endpoints_on_sphere",
      x != kNoVertex && y != kNoVertex && ball.index.dist(x) == R && ball.index.dist(y) == R);
  std::optional<int> len;
  if (x != kNoVertex && y != kNoVertex) len = BridgeSearcher(ball.index).bridge_length(x, y, R);
  add(rep, "bridge_at_least_4n_plus_4", len && *len >= 4 * n + 4);
  rep.values["min_bridge"] = len ? json(*len) : json(nullptr);
  rep.values["ball_size"] = ball.index.size();
  return rep;
}

}  // namespace convexity
