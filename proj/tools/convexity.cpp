// Command-line front end: balls, scans, witnesses, case paths, lengths and
// normal forms.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <thread>

#include "convexity/bs_geodesic.hpp"
#include "convexity/cache.hpp"
#include "convexity/case_paths.hpp"
#include "convexity/models.hpp"
#include "convexity/scan.hpp"
#include "convexity/witness.hpp"

namespace {

using namespace convexity;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kOk = 0, kCheckFailed = 1, kError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string group = "bs:q=2";
  int r = 0;
  int r_lo = 3;
  int n = 1;
  int q = 7;
  unsigned jobs = 1;
  std::size_t cap = kDefaultElementCap;
  bool big = false;
  bool no_cache = false;
  std::string cache;
  std::string format;
  std::string output;
  std::string word;
  bool element = false;
  std::string orientation = "pn";
  std::string class4 = "auto";

  std::string case_id;
  std::uint64_t seed = 1;
  int count = 1;
  std::int64_t min_size = 2, max_size = 200;
  bool impossibility = false;
  std::map<std::string, std::optional<std::int64_t>> ints;
  std::map<std::string, std::optional<std::string>> words;
};

const char* const kIntParams[] = {"p", "l", "f1", "k", "j", "i", "i1", "m"};
const char* const kWordParams[] = {"v", "w2", "w3", "prefix", "w", "gamma"};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open " + path);
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

unsigned job_count(unsigned jobs) { return jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs; }

GroupSpec group_of(const Config& c) {
  try {
    return parse_group(c.group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit_json(const Config& c, const json& j) {
  Output out(c.output);
  if (c.format == "text")
    out.os() << j.dump(2) << '\n';
  else if (c.format == "ndjson" && j.is_array())
    for (const auto& e : j) out.os() << e.dump() << '\n';
  else
    out.os() << j.dump() << '\n';
}

BallIndex load_or_build(const Config& c, const GroupSpec& g) {
  const fs::path dir = c.cache.empty() ? cache_dir() : fs::path(c.cache);
  const fs::path path = cache_path(dir, g.descriptor(), c.r);
  if (!c.no_cache && fs::exists(path)) {
    std::ifstream in(path);
    try {
      BallIndex idx = read_ball_cache(in);
      if (idx.descriptor() == g.descriptor() && idx.radius() == c.r) {
        std::cerr << "cache: loaded " << path.string() << '\n';
        return idx;
      }
    } catch (const CacheFormatError& e) {
      std::cerr << "cache: ignoring " << path.string() << " (" << e.what() << ")\n";
    }
  }
  const BuildOptions opts{c.cap, job_count(c.jobs)};
  BallIndex idx = g.kind == GroupSpec::Kind::Bs ? build_ball(BsModel(g.q), c.r, opts).index
                                                : build_ball(StallingsModel{}, c.r, opts).index;
  if (!c.no_cache) {
    fs::create_directories(dir);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
      write_ball_cache(out, idx);
    }
    fs::rename(tmp, path);
    std::cerr << "cache: wrote " << path.string() << '\n';
  }
  return idx;
}

int cmd_ball(const Config& c) {
  const GroupSpec g = group_of(c);
  if (g.kind == GroupSpec::Kind::Stallings && c.r > 4 && !c.big)
    throw UsageError("stallings balls beyond radius 4 need --big");
  const BallIndex idx = load_or_build(c, g);
  Output out(c.output);
  std::ostream& os = out.os();
  const std::string fmt = c.format.empty() ? "text" : c.format;
  if (fmt == "json") {
    json spheres = json::array();
    for (int k = 0; k <= idx.radius(); ++k) spheres.push_back(idx.sphere_size(k));
    os << json{{"group", g.descriptor()}, {"r", idx.radius()}, {"size", idx.size()}, {"spheres", spheres}}.dump()
       << '\n';
    return kOk;
  }
  if (fmt == "csv") os << "k,sphere\n";
  if (fmt == "text") os << "group " << g.descriptor() << "  |B(" << idx.radius() << ")| = " << idx.size() << '\n';
  for (int k = 0; k <= idx.radius(); ++k) {
    if (fmt == "csv")
      os << k << ',' << idx.sphere_size(k) << '\n';
    else if (fmt == "ndjson")
      os << json{{"k", k}, {"sphere", idx.sphere_size(k)}}.dump() << '\n';
    else
      os << "|S(" << k << ")| = " << idx.sphere_size(k) << '\n';
  }
  return kOk;
}

json scan_json(const ScanReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json j{{"r", row.r}, {"pairs", row.pairs}};
    if (row.fmax) {
      j["fmax"] = *row.fmax;
      j["mac"] = row.mac();
      j["mprime"] = row.mprime();
      j["witness_x"] = row.witness_x;
      j["witness_y"] = row.witness_y;
    }
    rows.push_back(j);
  }
  return rows;
}

int cmd_scan(const Config& c) {
  const GroupSpec g = group_of(c);
  if (c.r < c.r_lo) throw UsageError("--r must be at least --from");
  if (g.kind == GroupSpec::Kind::Stallings && c.r > 4 && !c.big)
    throw UsageError("stallings scans beyond radius 4 need --big");
  const ScanOptions opts{c.cap, job_count(c.jobs)};
  const ScanReport rep = g.kind == GroupSpec::Kind::Bs ? scan(BsModel(g.q), c.r_lo, c.r, opts)
                                                       : scan(StallingsModel{}, c.r_lo, c.r, opts);
  Output out(c.output);
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  if (fmt == "csv") {
    write_scan_csv(out.os(), rep);
  } else if (fmt == "ndjson") {
    for (const auto& row : scan_json(rep)) out.os() << row.dump() << '\n';
  } else {
    json j{{"group", rep.group}, {"r_lo", rep.r_lo}, {"r_hi", rep.r_hi}, {"rows", scan_json(rep)}};
    if (auto v = rep.r0_mac()) j["r0_mac"] = *v;
    if (auto v = rep.r0_mprime()) j["r0_mprime"] = *v;
    if (auto v = rep.max_fmax()) j["max_fmax"] = *v;
    std::size_t populated = 0;
    for (const auto& row : rep.rows) populated += row.fmax.has_value();
    if (populated >= 3) j["slope"] = sublinearity_probe(rep).slope;
    out.os() << (fmt == "text" ? j.dump(2) : j.dump()) << '\n';
  }
  return kOk;
}

int report_exit(const Config& c, const WitnessReport& rep) {
  emit_json(c, rep.to_json());
  return rep.passed() ? kOk : kCheckFailed;
}

int cmd_witness(const Config& c, const std::string& kind) {
  const WitnessOptions opts{c.cap, job_count(c.jobs)};
  try {
    if (kind == "notpac") {
      if (c.n > 5 && !c.big) throw UsageError("notpac beyond n = 5 needs --big");
      return report_exit(c, verify_notpac(c.n, opts));
    }
    if (kind == "bs1q") {
      if (c.n > 3 && !c.big) throw UsageError("bs1q beyond n = 3 needs --big");
      return report_exit(c, verify_bs1q_notmac(c.q, c.n, opts));
    }
    if (c.n > 1 && !c.big) throw UsageError("stallings witness beyond n = 1 needs --big");
    return report_exit(c, verify_stallings_witness(c.n, opts));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_case(const Config& c) {
  if (c.impossibility) {
    json out = json::array();
    bool clean = true;
    for (const auto& ic : impossibility_search(c.r == 0 ? 7 : c.r)) {
      json j{{"case", ic.id}, {"examined", ic.examined}, {"realizations", ic.realizations},
             {"unrestricted", ic.unrestricted}};
      if (!ic.example.empty()) j["example"] = ic.example;
      clean = clean && ic.realizations == 0;
      out.push_back(j);
    }
    emit_json(c, out);
    return clean ? kOk : kCheckFailed;
  }
  if (!is_case_id(c.case_id)) throw UsageError("unknown case id '" + c.case_id + "'");
  const auto names = case_parameter_names(c.case_id);
  auto known = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  CaseParams fixed;
  for (const auto& [name, v] : c.ints) {
    if (!v) continue;
    if (!known(name)) throw UsageError("case " + c.case_id + " takes no --" + name);
    fixed.ints[name] = *v;
  }
  for (const auto& [name, v] : c.words) {
    if (!v) continue;
    if (!known(name)) throw UsageError("case " + c.case_id + " takes no --" + name);
    try {
      fixed.words[name] = parse_word(*v, Alphabet::bs());
    } catch (const WordSyntaxError& e) {
      throw UsageError(e.what());
    }
  }
  SampleOptions so;
  so.min_size = c.min_size;
  so.max_size = c.max_size;
  std::mt19937_64 rng(c.seed);
  bool all = true;
  Output out(c.output);
  for (int n = 0; n < c.count; ++n) {
    CaseReport rep;
    try {
      rep = verify_case(sample_case(c.case_id, rng, fixed, so));
    } catch (const CaseParamError& e) {
      throw UsageError(e.what());
    }
    all = all && rep.passed();
    out.os() << (c.format == "text" ? rep.to_json().dump(2) : rep.to_json().dump()) << '\n';
  }
  return all ? kOk : kCheckFailed;
}

Word parse_for(const GroupSpec& g, const std::string& text) {
  try {
    return parse_word(text, g.kind == GroupSpec::Kind::Bs ? Alphabet::bs() : Alphabet::stallings());
  } catch (const WordSyntaxError& e) {
    throw UsageError(e.what());
  }
}

int cmd_length(const Config& c) {
  const GroupSpec g = group_of(c);
  const Word w = parse_for(g, c.word);
  std::optional<std::int64_t> len;
  if (g.kind == GroupSpec::Kind::Bs) {
    const BsParams p(g.q);
    len = geodesic_length(bs_eval(w, p), p);
  } else {
    const StallingsElement e = st_eval(w);
    len = gamma_length_special(e);
    if (!len) {
      const int r = static_cast<int>(std::min<std::size_t>(w.length(), c.big ? 6 : 4));
      StallingsModel m;
      auto ball = build_ball(m, r, {c.cap, job_count(c.jobs)});
      auto d = ball.index.distance(m.key(e));
      if (!d) throw UsageError("length not determined within radius " + std::to_string(r) + (c.big ? "" : "; try --big"));
      len = *d;
    }
  }
  Output out(c.output);
  if (c.format == "json" || c.format == "ndjson")
    out.os() << json{{"group", g.descriptor()}, {"word", c.word}, {"length", *len}}.dump() << '\n';
  else
    out.os() << *len << '\n';
  return kOk;
}

int cmd_normalize(const Config& c) {
  const GroupSpec g = group_of(c);
  if (g.kind != GroupSpec::Kind::Bs) throw UsageError("normalize works on bs:q=K only");
  const BsParams p(g.q);
  const Word w = parse_for(g, c.word);
  NormalFormOptions opts;
  opts.x_orientation = c.orientation == "np" ? XOrientation::NPMirror : XOrientation::PN;
  opts.class4 = c.class4 == "leading-n" ? Class4Form::LeadingN
                : c.class4 == "trailing-t" ? Class4Form::TrailingT
                                           : Class4Form::Auto;
  GeodesicNormalForm nf;
  try {
    nf = c.element ? normal_form(bs_eval(w, p), p, opts) : normalize(w, p, opts);
  } catch (const NotGeodesic& e) {
    std::cerr << "error: " << e.what() << " (use --element to normalize the element)\n";
    return kCheckFailed;
  }
  const std::string text = to_string(nf.render(), Alphabet::bs());
  Output out(c.output);
  if (c.format == "json" || c.format == "ndjson")
    out.os() << json{{"group", g.descriptor()}, {"word", c.word}, {"normal_form", text}, {"class", nf.cls},
                     {"length", nf.length()}}
                    .dump()
             << '\n';
  else
    out.os() << text << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-convexity toolkit for BS(1,q) and Stallings' group"};
  app.require_subcommand(1);
  Config c;
  for (const char* n : kIntParams) c.ints[n];
  for (const char* n : kWordParams) c.words[n];

  auto common = [&](CLI::App* sub) {
    sub->add_option("--jobs", c.jobs, "worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--cap", c.cap, "element cap for ball builds")->check(CLI::Range(std::size_t{1000}, SIZE_MAX));
    sub->add_flag("--big", c.big, "allow large balls and witnesses");
    sub->add_option("--format", c.format, "text | csv | ndjson | json")
        ->check(CLI::IsMember({"text", "csv", "ndjson", "json"}));
    sub->add_option("-o,--output", c.output, "write to a file instead of stdout");
  };
  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "bs:q=K or stallings")->capture_default_str();
  };

  auto* ball = app.add_subcommand("ball", "build or load B(r), print sphere sizes");
  group_opt(ball);
  ball->add_option("--r", c.r, "radius")->required()->check(CLI::Range(0, 250));
  ball->add_option("--cache-dir", c.cache, "overrides CONVEXITY_CACHE_DIR");
  ball->add_flag("--no-cache", c.no_cache, "neither read nor write the cache");
  common(ball);

  auto* sc = app.add_subcommand("scan", "bridging function fmax(r) over a radius range");
  group_opt(sc);
  sc->add_option("--from", c.r_lo, "first radius")->capture_default_str()->check(CLI::Range(0, 250));
  sc->add_option("--r", c.r, "last radius")->required()->check(CLI::Range(0, 250));
  common(sc);

  auto* wit = app.add_subcommand("witness", "verify a non-convexity witness");
  wit->require_subcommand(1);
  std::string witness_kind;
  for (const char* kind : {"notpac", "bs1q", "stallings"}) {
    auto* w = wit->add_subcommand(kind);
    w->add_option("--n", c.n, "witness size")->capture_default_str()->check(CLI::PositiveNumber);
    if (std::string(kind) == "bs1q") w->add_option("--q", c.q, "q >= 7")->capture_default_str();
    common(w);
    w->callback([&, kind] { witness_kind = kind; });
  }

  auto* cs = app.add_subcommand("case", "build and verify an explicit path for one case");
  cs->add_option("--id", c.case_id, "case id, e.g. 8.1");
  cs->add_flag("--impossibility", c.impossibility, "search B(r) (default 7) for the excluded cases");
  cs->add_option("--r", c.r, "radius for --impossibility");
  cs->add_option("--seed", c.seed, "seed for the parameters not given")->capture_default_str();
  cs->add_option("--count", c.count, "number of instances")->capture_default_str()->check(CLI::PositiveNumber);
  cs->add_option("--min-size", c.min_size, "smallest sampled p, l, f1")->capture_default_str();
  cs->add_option("--max-size", c.max_size, "largest sampled p, l, f1")->capture_default_str();
  for (const char* n : kIntParams) cs->add_option(std::string("--") + n, c.ints[n]);
  for (const char* n : kWordParams) cs->add_option(std::string("--") + n, c.words[n]);
  common(cs);

  auto* len = app.add_subcommand("length", "geodesic length of a word's element");
  group_opt(len);
  len->add_option("--word", c.word)->required();
  common(len);

  auto* nrm = app.add_subcommand("normalize", "geodesic normal form of a BS(1,q) word");
  group_opt(nrm);
  nrm->add_option("--word", c.word)->required();
  nrm->add_flag("--element", c.element, "normalize the element even if the word is not geodesic");
  nrm->add_option("--orientation", c.orientation, "X-block orientation")->check(CLI::IsMember({"pn", "np"}));
  nrm->add_option("--class4", c.class4, "class-4 form")->check(CLI::IsMember({"auto", "leading-n", "trailing-t"}));
  common(nrm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (c.format.empty() && !ball->parsed() && !sc->parsed() && !len->parsed() && !nrm->parsed()) c.format = "json";
    if (ball->parsed()) return cmd_ball(c);
    if (sc->parsed()) return cmd_scan(c);
    if (wit->parsed()) return cmd_witness(c, witness_kind);
    if (cs->parsed()) {
      if (!c.impossibility && c.case_id.empty()) throw UsageError("case needs --id or --impossibility");
      return cmd_case(c);
    }
    if (len->parsed()) return cmd_length(c);
    return cmd_normalize(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kError;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
