#include "convexity/cache.hpp"

#include <charconv>
#include <cstdlib>

#include <json.hpp>

namespace convexity {

using json = nlohmann::ordered_json;

std::string GroupSpec::descriptor() const {
  return kind == Kind::Bs ? "bs:q=" + std::to_string(q) : "stallings";
}

GroupSpec parse_group(std::string_view text) {
  GroupSpec g;
  if (text == "stallings") {
    g.kind = GroupSpec::Kind::Stallings;
    return g;
  }
  constexpr std::string_view prefix = "bs:q=";
  if (text.substr(0, prefix.size()) != prefix)
    throw std::invalid_argument("group must be bs:q=K or stallings, got '" + std::string(text) + "'");
  const std::string_view num = text.substr(prefix.size());
  auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), g.q);
  if (ec != std::errc() || end != num.data() + num.size() || num.empty())
    throw std::invalid_argument("bad q in '" + std::string(text) + "'");
  if (g.q < 2) throw std::invalid_argument("q must be >= 2");
  return g;
}

void write_ball_cache(std::ostream& out, const BallIndex& index) {
  out << json{{"fmt", "ball-v1"}, {"group", index.descriptor()}, {"r", index.radius()}}.dump() << '\n';
  for (std::uint32_t id = 0; id < index.size(); ++id)
    out << json{{"k", index.key(id)}, {"d", index.dist(id)}}.dump() << '\n';
  if (!out) throw std::runtime_error("cache write failed");
}

BallIndex read_ball_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CacheFormatError("empty cache file");
  std::string group;
  int r = 0;
  try {
    json head = json::parse(line);
    if (head.at("fmt") != "ball-v1") throw CacheFormatError("unsupported cache format " + head.at("fmt").dump());
    group = head.at("group").get<std::string>();
    r = head.at("r").get<int>();
  } catch (const json::exception& e) {
    throw CacheFormatError(std::string("bad cache header: ") + e.what());
  }
  GroupSpec spec;
  try {
    spec = parse_group(group);
  } catch (const std::invalid_argument& e) {
    throw CacheFormatError(e.what());
  }
  std::vector<std::pair<std::string, int>> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json rec = json::parse(line);
      records.emplace_back(rec.at("k").get<std::string>(), rec.at("d").get<int>());
    } catch (const json::exception& e) {
      throw CacheFormatError("bad cache record on line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  try {
    return BallIndex::from_records(spec.descriptor(), r, spec.generator_count(), std::move(records));
  } catch (const std::invalid_argument& e) {
    throw CacheFormatError(e.what());
  }
}

std::filesystem::path cache_dir() {
  if (const char* dir = std::getenv("CONVEXITY_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "convexity";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "convexity";
  return ".convexity-cache";
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& descriptor, int r) {
  std::string name = descriptor;
  for (char& c : name)
    if (c == ':' || c == '=') c = '_';
  return dir / ("ball-" + name + "-r" + std::to_string(r) + ".ndjson");
}

}  // namespace convexity
