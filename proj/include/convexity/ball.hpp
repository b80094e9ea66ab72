#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "convexity/word.hpp"

namespace convexity {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class M>
concept GroupModel = requires(const M& m, const typename M::Element& e, int g, std::string_view k) {
  { m.identity() } -> std::same_as<typename M::Element>;
  { m.generator_count() } -> std::convertible_to<int>;
  { m.multiply(e, g) } -> std::same_as<typename M::Element>;
  { m.key(e) } -> std::same_as<std::string>;
  { m.from_key(k) } -> std::same_as<std::optional<typename M::Element>>;
  { m.descriptor() } -> std::same_as<std::string>;
  { m.letter(g) } -> std::same_as<Letter>;
  { m.alphabet() } -> std::same_as<const Alphabet&>;
};

inline constexpr std::uint32_t kNoVertex = 0xffffffffu;
inline constexpr std::size_t kDefaultElementCap = 50'000'000;

// Open-addressing map from key strings to ids; the strings live in the caller's
// key vector.
class KeyTable {
 public:
  explicit KeyTable(const std::vector<std::string>* keys) : keys_(keys) {}
  std::uint32_t find(std::string_view key) const;
  // Inserts id (whose key is keys[id]); returns the existing id if present.
  std::uint32_t insert(std::uint32_t id);
  void reserve(std::size_t n);
  void rebind(const std::vector<std::string>* keys) { keys_ = keys; }

 private:
  void grow();
  const std::vector<std::string>* keys_;
  std::vector<std::uint32_t> slots_;
  std::size_t used_ = 0;
};

// Distances and adjacency of a Cayley ball. Vertex ids are assigned sphere by
// sphere, each sphere sorted by key.
class BallIndex {
 public:
  BallIndex() : table_(&keys_) {}
  BallIndex(const BallIndex&) = delete;
  BallIndex& operator=(const BallIndex&) = delete;
  BallIndex(BallIndex&& other) noexcept;
  BallIndex& operator=(BallIndex&& other) noexcept;

  int radius() const { return radius_; }
  int generator_count() const { return gens_; }
  const std::string& descriptor() const { return descriptor_; }
  std::size_t size() const { return keys_.size(); }
  std::size_t sphere_size(int k) const { return sphere_begin_[k + 1] - sphere_begin_[k]; }
  std::uint32_t sphere_begin(int k) const { return sphere_begin_[k]; }
  std::uint32_t sphere_end(int k) const { return sphere_begin_[k + 1]; }

  const std::string& key(std::uint32_t id) const { return keys_[id]; }
  int dist(std::uint32_t id) const { return dist_[id]; }
  std::uint32_t find(std::string_view key) const { return table_.find(key); }
  std::optional<int> distance(std::string_view key) const;
  // kNoVertex when the neighbor lies outside the ball.
  std::uint32_t neighbor(std::uint32_t id, int gen) const {
    return neighbors_[static_cast<std::size_t>(id) * gens_ + gen];
  }

  // Rebuilds an index from (key, distance) records, e.g. a cache file. The
  // neighbor table is left empty.
  static BallIndex from_records(std::string descriptor, int radius, int gens,
                                std::vector<std::pair<std::string, int>> records);
  bool has_neighbors() const { return !neighbors_.empty(); }

  friend bool same_content(const BallIndex& a, const BallIndex& b);

 private:
  template <GroupModel M>
  friend class BallBuilder;

  void append_sphere(std::vector<std::string> keys, int d);

  std::string descriptor_;
  int radius_ = 0;
  int gens_ = 0;
  std::vector<std::string> keys_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::uint32_t> sphere_begin_{0};
  std::vector<std::uint32_t> neighbors_;
  KeyTable table_;
};

struct BuildOptions {
  std::size_t element_cap = kDefaultElementCap;
  unsigned jobs = 1;
};

// Elements are kept alongside the index, in id order.
template <GroupModel M>
struct Ball {
  BallIndex index;
  std::vector<typename M::Element> elements;
};

template <GroupModel M>
class BallBuilder {
 public:
  using Element = typename M::Element;

  static Ball<M> build(const M& model, int r, BuildOptions opts) {
    if (r < 0) throw std::invalid_argument("radius must be nonnegative");
    if (r > 250) throw std::invalid_argument("radius too large");
    Ball<M> ball;
    BallIndex& idx = ball.index;
    idx.descriptor_ = model.descriptor();
    idx.radius_ = r;
    idx.gens_ = model.generator_count();
    const int gens = idx.gens_;
    const unsigned jobs = std::max(1u, opts.jobs);

    ball.elements.push_back(model.identity());
    idx.append_sphere({model.key(ball.elements[0])}, 0);

    struct Product {
      std::string key;
      Element element;
    };
    for (int d = 0; d <= r; ++d) {
      const std::uint32_t begin = idx.sphere_begin(d), end = idx.sphere_end(d);
      const std::size_t count = end - begin;
      std::vector<std::vector<Product>> products(count);
      auto expand = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          products[i].reserve(static_cast<std::size_t>(gens));
          for (int g = 0; g < gens; ++g) {
            Element e = model.multiply(ball.elements[begin + i], g);
            std::string k = model.key(e);
            products[i].push_back({std::move(k), std::move(e)});
          }
        }
      };
      run_chunks(count, jobs, expand);

      // New sphere: keys not yet seen, sorted.
      std::vector<std::pair<std::string_view, std::pair<std::uint32_t, int>>> fresh;
      if (d < r) {
        for (std::size_t i = 0; i < count; ++i)
          for (int g = 0; g < gens; ++g)
            if (idx.find(products[i][g].key) == kNoVertex)
              fresh.push_back({products[i][g].key, {static_cast<std::uint32_t>(i), g}});
        std::sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        fresh.erase(std::unique(fresh.begin(), fresh.end(),
                                [](const auto& x, const auto& y) { return x.first == y.first; }),
                    fresh.end());
        if (idx.size() + fresh.size() > opts.element_cap)
          throw ResourceLimit("ball exceeds element cap of " + std::to_string(opts.element_cap) + " at radius " +
                              std::to_string(d + 1));
        std::vector<std::string> keys;
        keys.reserve(fresh.size());
        for (auto& [k, src] : fresh) {
          keys.emplace_back(k);
          ball.elements.push_back(products[src.first][src.second].element);
        }
        idx.append_sphere(std::move(keys), d + 1);
      }
      idx.neighbors_.resize(static_cast<std::size_t>(idx.sphere_end(d)) * gens, kNoVertex);
      for (std::size_t i = 0; i < count; ++i)
        for (int g = 0; g < gens; ++g)
          idx.neighbors_[(begin + i) * gens + g] = idx.find(products[i][g].key);
    }
    return ball;
  }

 private:
  template <class F>
  static void run_chunks(std::size_t count, unsigned jobs, F&& fn) {
    if (jobs <= 1 || count < 1024) {
      fn(0, count);
      return;
    }
    std::vector<std::thread> workers;
    const std::size_t step = (count + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < count; lo += step) workers.emplace_back(fn, lo, std::min(count, lo + step));
    for (auto& w : workers) w.join();
  }
};

template <GroupModel M>
Ball<M> build_ball(const M& model, int r, BuildOptions opts = {}) {
  return BallBuilder<M>::build(model, r, opts);
}

// Shortest paths in the subgraph induced on the vertices at distance <= limit.
// Reuses scratch buffers across queries; one searcher per thread.
class BridgeSearcher {
 public:
  explicit BridgeSearcher(const BallIndex& index);

  // Length of a shortest path from x to y through vertices with dist <= limit,
  // optionally never visiting `avoid`. nullopt when unreachable.
  std::optional<int> bridge_length(std::uint32_t x, std::uint32_t y, int limit,
                                   std::uint32_t avoid = kNoVertex);
  std::optional<int> bridge_length(std::uint32_t x, std::uint32_t y) {
    return bridge_length(x, y, index_.radius());
  }
  // Generator indices along one shortest path (smallest generator first at
  // each step from x).
  std::optional<std::vector<int>> bridge_path(std::uint32_t x, std::uint32_t y, int limit);

 private:
  void bfs_from(std::uint32_t src, int limit, std::vector<int>& out);

  const BallIndex& index_;
  std::vector<std::uint32_t> seen_;  // epoch stamps, side encoded in the low bit
  std::vector<std::int32_t> depth_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> front_[2], next_;
};

}  // namespace convexity
