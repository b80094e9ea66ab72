#include "convexity/scan.hpp"

#include <numeric>

namespace convexity {
namespace {

template <class Flag>
std::optional<int> least_radius(const ScanReport& report, Flag flag) {
  std::optional<int> r0;
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
    if (!it->fmax) continue;
    if (!flag(*it)) break;
    r0 = it->r;
  }
  return r0;
}

}  // namespace

std::optional<int> ScanReport::r0_mac() const {
  return least_radius(*this, [](const ScanRow& row) { return row.mac(); });
}

std::optional<int> ScanReport::r0_mprime() const {
  return least_radius(*this, [](const ScanRow& row) { return row.mprime(); });
}

std::optional<int> ScanReport::max_fmax() const {
  std::optional<int> best;
  for (const auto& row : rows)
    if (row.fmax && (!best || *row.fmax > *best)) best = row.fmax;
  return best;
}

void write_scan_csv(std::ostream& out, const ScanReport& report) {
  out << "r,fmax,pairs,mac,mprime,witness_x,witness_y\n";
  for (const auto& row : report.rows) {
    if (!row.fmax) continue;
    out << row.r << ',' << *row.fmax << ',' << row.pairs << ',' << (row.mac() ? "true" : "false") << ','
        << (row.mprime() ? "true" : "false") << ',' << row.witness_x << ',' << row.witness_y << '\n';
  }
}

TrendSummary sublinearity_probe(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("probe needs matching x and y sequences");
  if (xs.size() < 3) throw std::invalid_argument("probe needs at least three points");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) throw std::invalid_argument("probe needs at least two distinct x values");
  TrendSummary t;
  t.points = xs.size();
  t.slope = sxy / sxx;
  t.intercept = my - t.slope * mx;
  t.interpretation = t.slope > 0.5 ? "slope bounded away from 0: bridging grows linearly, P(2) violated empirically"
                                   : "slope near 0: no linear growth observed";
  return t;
}

TrendSummary sublinearity_probe(const ScanReport& report) {
  std::vector<double> xs, ys;
  for (const auto& row : report.rows) {
    if (!row.fmax) continue;
    xs.push_back(row.r);
    ys.push_back(*row.fmax);
  }
  return sublinearity_probe(xs, ys);
}

}  // namespace convexity
