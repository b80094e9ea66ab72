#include "convexity/ball.hpp"

#include <functional>

namespace convexity {
namespace {

std::size_t hash_key(std::string_view k) { return std::hash<std::string_view>{}(k); }

}  // namespace

void KeyTable::reserve(std::size_t n) {
  std::size_t want = 16;
  while (want < n * 2) want <<= 1;
  if (want <= slots_.size()) return;
  std::vector<std::uint32_t> old = std::move(slots_);
  slots_.assign(want, kNoVertex);
  used_ = 0;
  for (std::uint32_t id : old)
    if (id != kNoVertex) insert(id);
}

void KeyTable::grow() { reserve(std::max<std::size_t>(16, slots_.size())); }

std::uint32_t KeyTable::find(std::string_view key) const {
  if (slots_.empty()) return kNoVertex;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash_key(key) & mask;; i = (i + 1) & mask) {
    std::uint32_t id = slots_[i];
    if (id == kNoVertex) return kNoVertex;
    if ((*keys_)[id] == key) return id;
  }
}

std::uint32_t KeyTable::insert(std::uint32_t id) {
  if ((used_ + 1) * 2 > slots_.size()) grow();
  const std::string& key = (*keys_)[id];
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash_key(key) & mask;; i = (i + 1) & mask) {
    std::uint32_t cur = slots_[i];
    if (cur == kNoVertex) {
      slots_[i] = id;
      ++used_;
      return id;
    }
    if ((*keys_)[cur] == key) return cur;
  }
}

BallIndex::BallIndex(BallIndex&& other) noexcept
    : descriptor_(std::move(other.descriptor_)),
      radius_(other.radius_),
      gens_(other.gens_),
      keys_(std::move(other.keys_)),
      dist_(std::move(other.dist_)),
      sphere_begin_(std::move(other.sphere_begin_)),
      neighbors_(std::move(other.neighbors_)),
      table_(std::move(other.table_)) {
  table_.rebind(&keys_);
}

BallIndex& BallIndex::operator=(BallIndex&& other) noexcept {
  descriptor_ = std::move(other.descriptor_);
  radius_ = other.radius_;
  gens_ = other.gens_;
  keys_ = std::move(other.keys_);
  dist_ = std::move(other.dist_);
  sphere_begin_ = std::move(other.sphere_begin_);
  neighbors_ = std::move(other.neighbors_);
  table_ = std::move(other.table_);
  table_.rebind(&keys_);
  return *this;
}

std::optional<int> BallIndex::distance(std::string_view key) const {
  std::uint32_t id = find(key);
  if (id == kNoVertex) return std::nullopt;
  return dist_[id];
}

void BallIndex::append_sphere(std::vector<std::string> keys, int d) {
  table_.reserve(keys_.size() + keys.size());
  for (auto& k : keys) {
    keys_.push_back(std::move(k));
    dist_.push_back(static_cast<std::uint8_t>(d));
    if (table_.insert(static_cast<std::uint32_t>(keys_.size() - 1)) != keys_.size() - 1)
      throw std::logic_error("duplicate key in ball sphere");
  }
  sphere_begin_.push_back(static_cast<std::uint32_t>(keys_.size()));
}

BallIndex BallIndex::from_records(std::string descriptor, int radius, int gens,
                                  std::vector<std::pair<std::string, int>> records) {
  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  BallIndex idx;
  idx.descriptor_ = std::move(descriptor);
  idx.radius_ = radius;
  idx.gens_ = gens;
  std::size_t i = 0;
  for (int d = 0; d <= radius; ++d) {
    std::vector<std::string> keys;
    for (; i < records.size() && records[i].second == d; ++i) keys.push_back(std::move(records[i].first));
    idx.append_sphere(std::move(keys), d);
  }
  if (i != records.size()) throw std::invalid_argument("record distance outside [0, r]");
  return idx;
}

bool same_content(const BallIndex& a, const BallIndex& b) {
  return a.descriptor_ == b.descriptor_ && a.radius_ == b.radius_ && a.keys_ == b.keys_ && a.dist_ == b.dist_ &&
         a.sphere_begin_ == b.sphere_begin_;
}

BridgeSearcher::BridgeSearcher(const BallIndex& index)
    : index_(index), seen_(index.size(), 0), depth_(index.size(), 0) {}

std::optional<int> BridgeSearcher::bridge_length(std::uint32_t x, std::uint32_t y, int limit, std::uint32_t avoid) {
  if (x == avoid || y == avoid) return std::nullopt;
  if (index_.dist(x) > limit || index_.dist(y) > limit) return std::nullopt;
  if (x == y) return 0;
  epoch_ += 2;
  if (epoch_ < 2) {  // wrapped
    std::fill(seen_.begin(), seen_.end(), 0);
    epoch_ = 2;
  }
  const int gens = index_.generator_count();
  // side 0 stamps epoch_, side 1 stamps epoch_ + 1
  seen_[x] = epoch_;
  seen_[y] = epoch_ + 1;
  depth_[x] = depth_[y] = 0;
  front_[0].assign(1, x);
  front_[1].assign(1, y);
  while (!front_[0].empty() && !front_[1].empty()) {
    const int side = front_[0].size() <= front_[1].size() ? 0 : 1;
    const std::uint32_t mine = epoch_ + side, theirs = epoch_ + 1 - side;
    int best = -1;
    next_.clear();
    for (std::uint32_t v : front_[side]) {
      for (int g = 0; g < gens; ++g) {
        std::uint32_t w = index_.neighbor(v, g);
        if (w == kNoVertex || w == avoid || index_.dist(w) > limit) continue;
        if (seen_[w] == theirs) {
          int len = depth_[v] + 1 + depth_[w];
          if (best < 0 || len < best) best = len;
        } else if (seen_[w] != mine) {
          seen_[w] = mine;
          depth_[w] = depth_[v] + 1;
          next_.push_back(w);
        }
      }
    }
    if (best >= 0) return best;
    std::swap(front_[side], next_);
  }
  return std::nullopt;
}

void BridgeSearcher::bfs_from(std::uint32_t src, int limit, std::vector<int>& out) {
  out.assign(index_.size(), -1);
  std::vector<std::uint32_t> queue{src};
  out[src] = 0;
  const int gens = index_.generator_count();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::uint32_t v = queue[i];
    for (int g = 0; g < gens; ++g) {
      std::uint32_t w = index_.neighbor(v, g);
      if (w == kNoVertex || index_.dist(w) > limit || out[w] >= 0) continue;
      out[w] = out[v] + 1;
      queue.push_back(w);
    }
  }
}

std::optional<std::vector<int>> BridgeSearcher::bridge_path(std::uint32_t x, std::uint32_t y, int limit) {
  if (index_.dist(x) > limit || index_.dist(y) > limit) return std::nullopt;
  std::vector<int> to_y;
  bfs_from(y, limit, to_y);
  if (to_y[x] < 0) return std::nullopt;
  std::vector<int> path;
  std::uint32_t v = x;
  while (v != y) {
    for (int g = 0; g < index_.generator_count(); ++g) {
      std::uint32_t w = index_.neighbor(v, g);
      if (w != kNoVertex && index_.dist(w) <= limit && to_y[w] == to_y[v] - 1) {
        path.push_back(g);
        v = w;
        break;
      }
    }
  }
  return path;
}

}  // namespace convexity
