#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "convexity/ball.hpp"

namespace convexity {

struct ScanRow {
  int r = 0;
  std::optional<int> fmax;  // unset when S(r) has no qualifying pair
  std::uint64_t pairs = 0;
  std::string witness_x, witness_y;

  bool mac() const { return fmax && *fmax <= 2 * r - 1; }
  bool mprime() const { return fmax && *fmax <= 2 * r - 2; }
};

struct ScanReport {
  std::string group;
  int r_lo = 0, r_hi = 0;
  std::vector<ScanRow> rows;

  // Least scanned radius from which the flag holds on every later populated row.
  std::optional<int> r0_mac() const;
  std::optional<int> r0_mprime() const;
  // Largest fmax over the scanned radii.
  std::optional<int> max_fmax() const;
};

struct ScanOptions {
  std::size_t element_cap = kDefaultElementCap;
  unsigned jobs = 1;
};

void write_scan_csv(std::ostream& out, const ScanReport& report);

struct TrendSummary {
  double slope = 0;
  double intercept = 0;
  std::size_t points = 0;
  std::string interpretation;
};

// Least-squares line through (x_i, y_i). Throws std::invalid_argument for
// fewer than three points.
TrendSummary sublinearity_probe(const std::vector<double>& xs, const std::vector<double>& ys);
TrendSummary sublinearity_probe(const ScanReport& report);

namespace detail {

struct PairBest {
  int fmax = -1;
  std::uint32_t x = kNoVertex, y = kNoVertex;
  std::uint64_t pairs = 0;

  void offer(int len, std::uint32_t px, std::uint32_t py) {
    ++pairs;
    if (len > fmax || (len == fmax && std::pair{px, py} < std::pair{x, y})) {
      fmax = len;
      x = px;
      y = py;
    }
  }
  void merge(const PairBest& o) {
    pairs += o.pairs;
    if (o.fmax > fmax || (o.fmax == fmax && std::pair{o.x, o.y} < std::pair{x, y})) {
      fmax = o.fmax;
      x = o.x;
      y = o.y;
    }
  }
};

}  // namespace detail

// Bridging lengths for all pairs x < y in S(r) with d(x, y) in {1, 2}, using
// paths inside B(r), for one radius of an already built ball.
template <GroupModel M>
ScanRow scan_radius(const M& model, const Ball<M>& ball, int r, unsigned jobs = 1) {
  const BallIndex& idx = ball.index;
  if (r > idx.radius()) throw std::invalid_argument("scan radius exceeds ball radius");
  const int gens = idx.generator_count();
  const std::uint32_t begin = idx.sphere_begin(r), end = idx.sphere_end(r);

  auto work = [&](std::uint32_t lo, std::uint32_t hi, detail::PairBest& best) {
    BridgeSearcher search(idx);
    std::vector<std::uint32_t> cand;
    for (std::uint32_t x = lo; x < hi; ++x) {
      cand.clear();
      for (int g1 = 0; g1 < gens; ++g1) {
        std::uint32_t y1 = idx.neighbor(x, g1);
        if (y1 != kNoVertex && idx.dist(y1) == r && y1 > x) cand.push_back(y1);
        std::optional<typename M::Element> outside;
        if (y1 == kNoVertex) outside = model.multiply(ball.elements[x], g1);
        for (int g2 = 0; g2 < gens; ++g2) {
          std::uint32_t y2 = y1 != kNoVertex ? idx.neighbor(y1, g2) : idx.find(model.key(model.multiply(*outside, g2)));
          if (y2 != kNoVertex && idx.dist(y2) == r && y2 > x) cand.push_back(y2);
        }
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (std::uint32_t y : cand) {
        auto len = search.bridge_length(x, y, r);
        // B(r) always contains the path through the identity
        if (!len || *len > 2 * r) throw std::logic_error("bridging length exceeds 2r");
        best.offer(*len, x, y);
      }
    }
  };

  detail::PairBest best;
  const std::uint32_t count = end - begin;
  if (jobs <= 1 || count < 256) {
    work(begin, end, best);
  } else {
    std::vector<detail::PairBest> parts(jobs);
    std::vector<std::thread> threads;
    const std::uint32_t step = (count + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      std::uint32_t lo = begin + std::min(count, j * step), hi = begin + std::min(count, (j + 1) * step);
      threads.emplace_back(work, lo, hi, std::ref(parts[j]));
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) best.merge(p);
  }

  ScanRow row;
  row.r = r;
  row.pairs = best.pairs;
  if (best.pairs > 0) {
    row.fmax = best.fmax;
    row.witness_x = idx.key(best.x);
    row.witness_y = idx.key(best.y);
  }
  return row;
}

template <GroupModel M>
ScanReport scan(const M& model, int r_lo, int r_hi, ScanOptions opts = {}) {
  if (r_lo < 0 || r_hi < r_lo) throw std::invalid_argument("bad radius range");
  Ball<M> ball = build_ball(model, r_hi, {opts.element_cap, opts.jobs});
  ScanReport report;
  report.group = model.descriptor();
  report.r_lo = r_lo;
  report.r_hi = r_hi;
  for (int r = r_lo; r <= r_hi; ++r) report.rows.push_back(scan_radius(model, ball, r, opts.jobs));
  return report;
}

}  // namespace convexity
