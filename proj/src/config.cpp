#include "fv1d/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fv1d/errors.hpp"
#include "fv1d/flux_model.hpp"
#include "fv1d/fluxes.hpp"
#include "fv1d/report_io.hpp"

namespace fv {
namespace {

using SectionMap = std::map<std::string, std::map<std::string, std::string>>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep,
                                    const std::string& what) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (item.empty()) throw ConfigError("empty element in " + what);
    out.push_back(item);
  }
  if (out.empty()) throw ConfigError("empty list for " + what);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError("bad number for " + what + ": '" + s + "'");
  }
  return v;
}

long long parse_int(const std::string& s, const std::string& what) {
  long long v = 0;
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(s.data(), last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError("bad integer for " + what + ": '" + s + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(s.data(), last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError("bad unsigned integer for " + what + ": '" + s + "'");
  }
  return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ConfigError("bad boolean for " + what + ": '" + s + "'");
}

SectionMap parse_ini(const std::string& text) {
  SectionMap sections;
  std::string line;
  std::istringstream in(text);
  std::string current;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": unterminated section header");
      }
      current = trim(line.substr(1, line.size() - 2));
      if (current.empty()) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": empty section name");
      }
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    if (current.empty()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": key before any [section]");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    if (!sections[current].emplace(key, value).second) {
      throw ConfigError("duplicate key '" + key + "' in [" + current + "]");
    }
  }
  return sections;
}

// JSON values are normalized to the same strings the INI grammar uses, so
// both formats share one ingestion path. One nesting level of arrays is
// allowed: inner arrays join with ':', outer with ','.
std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_float()) return format_double(v.get<double>());
  throw ConfigError("unsupported JSON value: " + v.dump());
}

std::string json_value(const nlohmann::json& v) {
  if (!v.is_array()) return json_scalar(v);
  std::string out;
  for (const auto& e : v) {
    if (!out.empty()) out += ',';
    if (e.is_array()) {
      std::string inner;
      for (const auto& x : e) {
        if (!inner.empty()) inner += ':';
        inner += json_scalar(x);
      }
      out += inner;
    } else {
      out += json_scalar(e);
    }
  }
  return out;
}

SectionMap parse_json_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config JSON root must be an object");
  SectionMap sections;
  for (const auto& [name, body] : j.items()) {
    if (!body.is_object()) {
      throw ConfigError("config section '" + name + "' must be an object");
    }
    for (const auto& [key, value] : body.items()) {
      sections[name][key] = json_value(value);
    }
  }
  return sections;
}

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> allowed = {
      {"problem",
       {"flux", "x_min", "x_max", "N", "T", "preset", "value", "left",
        "right", "x0", "width", "breakpoints", "baseline", "amplitude",
        "center", "bumps", "seed", "max_extrema"}},
      {"scheme", {"scheme", "lambda", "cfl", "Q"}},
      {"verify", {"checks", "entropy_all_cells"}},
      {"converge", {"N_list", "reference", "refinement"}},
      {"output", {"dir", "step_index", "final_only"}},
  };
  return allowed;
}

class Section {
 public:
  Section(const SectionMap& m, std::string name) : name_(std::move(name)) {
    const auto it = m.find(name_);
    if (it != m.end()) kv_ = &it->second;
  }

  bool has(const std::string& key) const {
    return kv_ && kv_->count(key) > 0;
  }
  std::string str(const std::string& key, const std::string& dflt) const {
    return has(key) ? kv_->at(key) : dflt;
  }
  std::string require(const std::string& key) const {
    if (!has(key)) {
      throw ConfigError("[" + name_ + "] is missing required key '" + key +
                        "'");
    }
    return kv_->at(key);
  }
  double num(const std::string& key, double dflt) const {
    return has(key) ? parse_double(kv_->at(key), tag(key)) : dflt;
  }
  double require_num(const std::string& key) const {
    return parse_double(require(key), tag(key));
  }
  long long integer(const std::string& key, long long dflt) const {
    return has(key) ? parse_int(kv_->at(key), tag(key)) : dflt;
  }
  std::uint64_t uinteger(const std::string& key, std::uint64_t dflt) const {
    return has(key) ? parse_uint(kv_->at(key), tag(key)) : dflt;
  }
  bool flag(const std::string& key, bool dflt) const {
    return has(key) ? parse_bool(kv_->at(key), tag(key)) : dflt;
  }
  std::string tag(const std::string& key) const { return name_ + "." + key; }

 private:
  std::string name_;
  const std::map<std::string, std::string>* kv_ = nullptr;
};

InitialData::Kind preset_by_name(const std::string& name) {
  using Kind = InitialData::Kind;
  static const std::map<std::string, Kind> kinds = {
      {"constant", Kind::constant},
      {"riemann", Kind::riemann},
      {"piecewise_affine", Kind::piecewise_affine},
      {"gaussian", Kind::gaussian},
      {"bump_sum", Kind::bump_sum},
      {"spike", Kind::spike},
      {"smoothstep", Kind::smoothstep},
      {"random_bv", Kind::random_bv},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) {
    throw ConfigError("unknown initial data preset '" + name + "'");
  }
  return it->second;
}

InitialData parse_initial(const Section& p) {
  using Kind = InitialData::Kind;
  InitialData d;
  d.kind = preset_by_name(p.str("preset", "constant"));
  switch (d.kind) {
    case Kind::constant:
      d.value = p.num("value", 0.0);
      break;
    case Kind::riemann:
      d.left = p.require_num("left");
      d.right = p.require_num("right");
      d.x0 = p.num("x0", 0.0);
      break;
    case Kind::smoothstep:
      d.left = p.require_num("left");
      d.right = p.require_num("right");
      d.x0 = p.num("x0", 0.0);
      d.width = p.require_num("width");
      break;
    case Kind::piecewise_affine:
      for (const auto& item :
           split_list(p.require("breakpoints"), ',', "problem.breakpoints")) {
        const auto parts = split_list(item, ':', "problem.breakpoints");
        if (parts.size() != 2) {
          throw ConfigError("breakpoints entries must be x:u pairs, got '" +
                            item + "'");
        }
        d.breakpoints.emplace_back(
            parse_double(parts[0], "problem.breakpoints"),
            parse_double(parts[1], "problem.breakpoints"));
      }
      break;
    case Kind::gaussian:
      d.baseline = p.num("baseline", 0.0);
      d.bumps.push_back(GaussianBump{p.num("amplitude", 1.0),
                                     p.num("center", 0.0),
                                     p.require_num("width")});
      break;
    case Kind::bump_sum:
      d.baseline = p.num("baseline", 0.0);
      for (const auto& item :
           split_list(p.require("bumps"), ',', "problem.bumps")) {
        const auto parts = split_list(item, ':', "problem.bumps");
        if (parts.size() != 3) {
          throw ConfigError(
              "bumps entries must be amplitude:center:width triples, got '" +
              item + "'");
        }
        d.bumps.push_back(GaussianBump{parse_double(parts[0], "problem.bumps"),
                                       parse_double(parts[1], "problem.bumps"),
                                       parse_double(parts[2],
                                                    "problem.bumps")});
      }
      break;
    case Kind::spike:
      d.baseline = p.num("baseline", 0.0);
      d.amplitude = p.num("amplitude", 1.0);
      break;
    case Kind::random_bv:
      d.seed = p.uinteger("seed", 0);
      d.max_extrema = static_cast<int>(p.integer("max_extrema", 12));
      if (d.max_extrema < 1) {
        throw ConfigError("problem.max_extrema must be >= 1");
      }
      break;
  }
  return d;
}

std::vector<std::string> parse_checks(const std::string& csv) {
  auto names = split_list(csv, ',', "checks");
  const auto& known = known_check_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      std::string msg = "unknown check '" + n + "' (known:";
      for (const auto& k : known) msg += " " + k;
      throw ConfigError(msg + ")");
    }
  }
  return names;
}

RunConfig from_sections(const SectionMap& sections) {
  for (const auto& [name, kv] : sections) {
    const auto it = allowed_keys().find(name);
    if (it == allowed_keys().end()) {
      throw ConfigError("unknown config section [" + name + "]");
    }
    for (const auto& [key, value] : kv) {
      (void)value;
      if (!it->second.count(key)) {
        throw ConfigError("unknown key '" + key + "' in [" + name + "]");
      }
    }
  }

  RunConfig cfg;
  const Section problem(sections, "problem");
  const Section scheme(sections, "scheme");
  const Section verify(sections, "verify");
  const Section converge(sections, "converge");
  const Section output(sections, "output");

  cfg.flux_name = problem.str("flux", "burgers");
  flux_by_name(cfg.flux_name);  // validate the name early
  cfg.x_min = problem.num("x_min", -1.0);
  cfg.x_max = problem.num("x_max", 1.0);
  if (!(cfg.x_max > cfg.x_min)) {
    throw ConfigError("problem.x_max must exceed problem.x_min");
  }
  cfg.n_cells = static_cast<int>(problem.integer("N", 200));
  if (cfg.n_cells < 5) throw ConfigError("problem.N must be at least 5");
  cfg.t_final = problem.num("T", 0.0);
  if (!(cfg.t_final >= 0.0)) throw ConfigError("problem.T must be >= 0");
  cfg.initial = parse_initial(problem);

  cfg.scheme.scheme = scheme_by_name(scheme.str("scheme", "godunov"));
  if (scheme.has("lambda") && scheme.has("cfl")) {
    throw ConfigError("scheme.lambda and scheme.cfl are mutually exclusive");
  }
  if (scheme.has("lambda")) {
    cfg.scheme.lambda = scheme.require_num("lambda");
    if (!(*cfg.scheme.lambda > 0.0)) {
      throw ConfigError("scheme.lambda must be positive");
    }
  }
  if (scheme.has("cfl")) {
    cfg.scheme.cfl_target = scheme.require_num("cfl");
    if (!(*cfg.scheme.cfl_target > 0.0 && *cfg.scheme.cfl_target <= 0.25)) {
      throw ConfigError("scheme.cfl must lie in (0, 0.25]");
    }
  }
  cfg.scheme.q_viscosity = scheme.num("Q", 1.0);

  if (verify.has("checks")) {
    cfg.verify.checks = parse_checks(verify.require("checks"));
  }
  cfg.verify.entropy_all_cells = verify.flag("entropy_all_cells", false);

  if (converge.has("N_list")) {
    for (const auto& item :
         split_list(converge.require("N_list"), ',', "converge.N_list")) {
      const long long n = parse_int(item, "converge.N_list");
      if (n < 5) throw ConfigError("converge.N_list entries must be >= 5");
      cfg.converge.n_list.push_back(static_cast<int>(n));
    }
  }
  cfg.converge.reference = converge.str("reference", "exact");
  if (cfg.converge.reference != "exact" &&
      cfg.converge.reference != "oracle") {
    throw ConfigError("converge.reference must be 'exact' or 'oracle'");
  }
  cfg.converge.refinement = static_cast<int>(converge.integer("refinement", 16));

  cfg.output.dir = output.str("dir", "out");
  cfg.output.step_index = output.flag("step_index", false);
  cfg.output.final_only = output.flag("final_only", false);
  return cfg;
}

}  // namespace

const std::vector<std::string>& known_check_names() {
  static const std::vector<std::string> names = {
      "strong_max", "quadratic_decay", "cell_entropy", "incremental",
      "monotonicity", "paths",          "oscillation"};
  return names;
}

RunConfig parse_config_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string::npos && text[first] == '{';
  return from_sections(is_json ? parse_json_config(text) : parse_ini(text));
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

void apply_overrides(RunConfig& cfg, const CliOverrides& o) {
  if (o.lambda && o.cfl) {
    throw ConfigError("--lambda and --cfl are mutually exclusive");
  }
  if (o.flux) {
    flux_by_name(*o.flux);
    cfg.flux_name = *o.flux;
  }
  if (o.scheme) cfg.scheme.scheme = scheme_by_name(*o.scheme);
  if (o.n_cells) {
    if (*o.n_cells < 5) throw ConfigError("--N must be at least 5");
    cfg.n_cells = *o.n_cells;
  }
  if (o.lambda) {
    if (!(*o.lambda > 0.0)) throw ConfigError("--lambda must be positive");
    cfg.scheme.lambda = *o.lambda;
    cfg.scheme.cfl_target.reset();
  }
  if (o.cfl) {
    if (!(*o.cfl > 0.0 && *o.cfl <= 0.25)) {
      throw ConfigError("--cfl must lie in (0, 0.25]");
    }
    cfg.scheme.cfl_target = *o.cfl;
    cfg.scheme.lambda.reset();
  }
  if (o.t_final) {
    if (!(*o.t_final >= 0.0)) throw ConfigError("--T must be >= 0");
    cfg.t_final = *o.t_final;
  }
  if (o.q_viscosity) cfg.scheme.q_viscosity = *o.q_viscosity;
  if (o.seed) cfg.initial.seed = *o.seed;
  if (o.out_dir) cfg.output.dir = *o.out_dir;
  if (o.checks) cfg.verify.checks = parse_checks(*o.checks);
}

GridSpec config_grid(const RunConfig& cfg, int n_cells_override) {
  const int n = n_cells_override > 0 ? n_cells_override : cfg.n_cells;
  const double h = (cfg.x_max - cfg.x_min) / n;
  return make_grid(n, h, cfg.x_min, cfg.scheme.lambda.value_or(1.0));
}

}  // namespace fv
