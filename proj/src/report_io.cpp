#include "fv1d/report_io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "json.hpp"

#include "fv1d/errors.hpp"
#include "fv1d/fluxes.hpp"
#include "fv1d/grid.hpp"

namespace fv {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_to_json(const ReportParams& p) {
  ordered_json j;
  j["lambda"] = p.lambda;
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.beta) j["beta"] = *p.beta;
  if (p.q_viscosity) j["Q"] = *p.q_viscosity;
  return j;
}

ordered_json report_entry(const DiagnosticReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["verdict"] = r.verdict();
  if (!r.notice.empty()) j["notice"] = r.notice;
  j["violations"] = ordered_json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back(ordered_json{{"n", v.step},
                                           {"j", v.cell},
                                           {"lhs", v.lhs},
                                           {"rhs", v.rhs},
                                           {"margin", v.margin}});
  }
  j["params"] = params_to_json(r.params);
  if (!r.extrema_per_step.empty()) {
    j["extrema_per_step"] = r.extrema_per_step;
  }
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string report_to_json(const std::vector<DiagnosticReport>& reports,
                           const std::string& scheme_name,
                           const std::string& flux_name, double lambda) {
  bool overall = true;
  for (const auto& r : reports) {
    if (!r.skipped && !r.pass) overall = false;
  }
  ordered_json j;
  j["overall"] = overall ? "pass" : "fail";
  j["params"] = ordered_json{
      {"scheme", scheme_name}, {"flux", flux_name}, {"lambda", lambda}};
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(report_entry(r));
  return j.dump(2) + "\n";
}

std::vector<DiagnosticReport> reports_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad report JSON: ") + e.what());
  }
  try {
    std::vector<DiagnosticReport> out;
    for (const auto& entry : j.at("reports")) {
      DiagnosticReport r;
      r.check = entry.at("check").get<std::string>();
      const auto verdict = entry.at("verdict").get<std::string>();
      r.skipped = verdict == "skipped";
      r.pass = verdict != "fail";
      if (entry.contains("notice")) {
        r.notice = entry["notice"].get<std::string>();
      }
      for (const auto& v : entry.at("violations")) {
        r.violations.push_back(Violation{r.check, v.at("n").get<int>(),
                                         v.at("j").get<int>(),
                                         v.at("lhs").get<double>(),
                                         v.at("rhs").get<double>(),
                                         v.at("margin").get<double>()});
      }
      const auto& p = entry.at("params");
      r.params.lambda = p.at("lambda").get<double>();
      if (p.contains("alpha")) r.params.alpha = p["alpha"].get<double>();
      if (p.contains("beta")) r.params.beta = p["beta"].get<double>();
      if (p.contains("Q")) r.params.q_viscosity = p["Q"].get<double>();
      if (entry.contains("extrema_per_step")) {
        r.extrema_per_step =
            entry["extrema_per_step"].get<std::vector<int>>();
      }
      out.push_back(std::move(r));
    }
    return out;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad report JSON: ") + e.what());
  }
}

std::string summary_to_json(const RunHistory& h) {
  const GridSpec& g = h.initial().grid;
  ordered_json j;
  j["scheme"] = scheme_name(h.scheme);
  j["flux"] = h.flux.name;
  j["N"] = g.n_cells;
  j["h"] = g.h;
  j["x_min"] = g.x_min;
  j["x_max"] = g.x_max();
  j["lambda"] = h.lambda;
  j["tau"] = h.tau;
  j["n_steps"] = h.n_steps;
  j["t_final"] = h.final().time();
  if (h.scheme == Scheme::lax_friedrichs) j["Q"] = h.q_viscosity;
  ordered_json tv = ordered_json::array();
  ordered_json linf = ordered_json::array();
  ordered_json mass = ordered_json::array();
  for (const auto& s : h.snapshots) {
    tv.push_back(total_variation(s.values));
    linf.push_back(s.values.abs().maxCoeff());
    mass.push_back(fv::mass(s));
  }
  j["tv"] = tv;
  j["linf"] = linf;
  j["mass"] = mass;
  return j.dump(2) + "\n";
}

std::string snapshots_to_csv(const RunHistory& h, bool with_step_index,
                             bool final_only) {
  std::string out = with_step_index ? "n,t,x,u\n" : "t,x,u\n";
  for (const auto& s : h.snapshots) {
    if (final_only && s.step != 0 && s.step != h.n_steps) continue;
    const std::string t = format_double(s.time());
    for (int jc = 0; jc < s.grid.n_cells; ++jc) {
      if (with_step_index) {
        out += std::to_string(s.step);
        out += ',';
      }
      out += t;
      out += ',';
      out += format_double(s.grid.x_center(jc));
      out += ',';
      out += format_double(s.values[jc]);
      out += '\n';
    }
  }
  return out;
}

std::string paths_to_csv(const PathSet& ps, const RunHistory& h) {
  const GridSpec& g = h.initial().grid;
  std::string out = "q,kind,n,t,J,x,w,epsilon,alive\n";
  for (const auto& p : ps.paths) {
    for (std::size_t k = 0; k < p.nodes.size(); ++k) {
      const PathNode& node = p.nodes[k];
      const bool last = k + 1 == p.nodes.size();
      const bool alive = p.alive_at_end || !last;
      out += std::to_string(p.id);
      out += p.is_max ? ",max," : ",min,";
      out += std::to_string(node.step);
      out += ',';
      out += format_double(node.step * h.tau);
      out += ',';
      out += std::to_string(node.cell);
      out += ',';
      out += format_double(g.x_center(node.cell));
      out += ',';
      out += format_double(node.value);
      out += ',';
      out += std::to_string(node.epsilon);
      out += alive ? ",1\n" : ",0\n";
    }
  }
  return out;
}

std::string convergence_to_csv(const std::vector<ConvergencePoint>& pts) {
  std::string out = "N,h,e_l1,rate\n";
  for (const auto& p : pts) {
    out += std::to_string(p.n_cells);
    out += ',';
    out += format_double(p.h);
    out += ',';
    out += format_double(p.e_l1);
    out += ',';
    if (p.rate) {
      out += std::isinf(*p.rate) ? "inf" : format_double(*p.rate);
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) {
      throw RunError("cannot create directory " + p.parent_path().string() +
                     ": " + ec.message());
    }
  }
  std::ofstream f(p, std::ios::binary);
  f << content;
  if (!f) throw RunError("cannot write " + path);
}

}  // namespace fv
