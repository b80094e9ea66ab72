#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "convexity/ball.hpp"

namespace convexity {

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "bs:q=K" (K >= 2) or "stallings".
struct GroupSpec {
  enum class Kind { Bs, Stallings } kind = Kind::Bs;
  int q = 2;

  std::string descriptor() const;
  int generator_count() const { return kind == Kind::Bs ? 4 : 10; }
};

// Throws std::invalid_argument on anything else.
GroupSpec parse_group(std::string_view text);

// NDJSON: a header {"fmt":"ball-v1","group":...,"r":...}, then one
// {"k":...,"d":...} line per element in id order.
void write_ball_cache(std::ostream& out, const BallIndex& index);
// The result has no neighbor table.
BallIndex read_ball_cache(std::istream& in);

// $CONVEXITY_CACHE_DIR, else $XDG_CACHE_HOME/convexity, else ~/.cache/convexity.
std::filesystem::path cache_dir();
std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& descriptor, int r);

}  // namespace convexity
