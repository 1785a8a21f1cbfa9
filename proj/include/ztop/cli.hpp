#pragma once

// The ztop command line: zeta, corpus and explain subcommands.
// Exit codes: 0 ok, 1 input error or corpus mismatch, 2 theorem violation.

#include "ztop/corpus.hpp"
#include "ztop/io.hpp"
#include "ztop/parser.hpp"
#include "ztop/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace ztop::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kTheoremViolation = 2;

struct ZetaOptions {
  std::string poly, file, pipeline, scope, format = "human";
  bool allow_nonreduced = false, assert_isolated = false;
};

struct CorpusOptions {
  std::string path, format = "human";
  bool bless = false;
};

struct ExplainOptions {
  std::string poly, pipeline = "blowup", format = "human";
  bool allow_nonreduced = false;
};

namespace detail {

inline Pipeline parse_pipeline(const std::string& s) {
  static const std::map<std::string, Pipeline> names{
      {"blowup", Pipeline::blowup}, {"toric", Pipeline::toric}, {"both", Pipeline::both}, {"file", Pipeline::file}};
  return names.at(s);
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string ids_text(const std::vector<int>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", E" : "E") + std::to_string(ids[i]);
  return out + "}";
}

inline std::string strata_text(const ResolutionData& rd) {
  std::string out = "strata (ids: chi_total, chi_origin):\n";
  for (const auto& s : rd.strata)
    out += "  " + ids_text(s.ids) + ": " + std::to_string(s.chi_total) + ", " + std::to_string(s.chi_origin) + "\n";
  return out;
}

inline Json strata_json(const ResolutionData& rd) {
  Json a = Json::array();
  for (const auto& s : rd.strata) a.push_back(Json{{"ids", s.ids}, {"chi_total", s.chi_total}, {"chi_origin", s.chi_origin}});
  return a;
}

inline int report_exit(const Report& r) { return r.n == 2 && !r.conjecture4.pass() ? kTheoremViolation : kOk; }

}  // namespace detail

inline int cmd_zeta(const ZetaOptions& o, std::ostream& out, std::ostream& err) {
  if (o.poly.empty() == o.file.empty()) {
    err << "error: give exactly one of --poly and --file\n";
    return kInputError;
  }
  bool machine = o.format == "machine";
  Pipeline pipe = o.pipeline.empty() ? (o.file.empty() ? Pipeline::blowup : Pipeline::file)
                                     : detail::parse_pipeline(o.pipeline);
  if ((pipe == Pipeline::file) != !o.file.empty()) {
    err << "error: --pipeline file goes with --file; blowup, toric and both go with --poly\n";
    return kInputError;
  }
  Json doc;
  Report report;
  std::string header;
  if (pipe == Pipeline::file) {
    ResolutionFile f = load_resolution_file(o.file);
    Scope scope = o.scope.empty() ? f.scope : (o.scope == "global" ? Scope::global : Scope::local);
    TriState iso = TriState::unknown;
    if (f.isolated) iso = *f.isolated ? TriState::yes : TriState::no;
    if (o.assert_isolated) iso = TriState::yes;
    report = analyze(f.data, scope, iso, {});
    doc["pipelines"] = {"file"};
    doc["resolution_independent"] = nullptr;
    if (f.name) header = "input: " + *f.name + "\n";
  } else {
    if (o.scope == "global") {
      err << "error: global scope needs a resolution file (--file) carrying global Euler characteristics\n";
      return kInputError;
    }
    Poly f = parse_curve(o.poly);
    auto rs = run_curve_pipelines(f, pipe, o.allow_nonreduced);
    bool agree = resolutions_agree(rs);
    report = analyze_curve(rs[0].resolution);
    Json names = Json::array();
    for (const auto& r : rs) names.push_back(r.pipeline);
    doc["pipelines"] = names;
    header = "input: " + to_string(f, {"x", "y"}) + "\npipelines: " + names.dump();
    if (rs.size() > 1) {
      doc["resolution_independent"] = agree ? "equal" : "unequal";
      header += std::string(" (zeta functions ") + (agree ? "equal" : "UNEQUAL") + ")";
    } else {
      doc["resolution_independent"] = nullptr;
    }
    header += "\n";
    if (!agree) {
      for (const auto& r : rs) err << r.pipeline << ": " << to_string(zeta_local(r.resolution.data)) << "\n";
      err << "error: the pipelines disagree, which contradicts resolution independence\n";
      return kTheoremViolation;
    }
  }
  if (machine) {
    Json rj = to_json(report);
    for (auto& [k, v] : rj.items()) doc[k] = v;
    out << detail::dump(doc);
  } else {
    out << header << human_text(report);
  }
  return detail::report_exit(report);
}

inline int cmd_corpus(const CorpusOptions& o, std::ostream& out, std::ostream& err) {
  Corpus corpus = load_corpus(o.path);
  auto results = run_corpus(corpus, corpus_jobs());
  if (o.bless) {
    std::size_t n = bless(corpus, results);
    std::ofstream file(o.path);
    if (!file) throw Error("cannot write " + o.path);
    file << detail::dump(to_json(corpus));
    err << "blessed " << n << " of " << results.size() << " entries\n";
    results = run_corpus(corpus, corpus_jobs());
  }
  std::size_t passed = 0;
  bool violation = false;
  for (const auto& r : results) {
    passed += r.status == EntryStatus::pass;
    violation = violation || r.status == EntryStatus::theorem_violation;
  }
  if (o.format == "machine") {
    Json a = Json::array();
    for (const auto& r : results) a.push_back(to_json(r));
    out << detail::dump(Json{{"passed", passed}, {"total", results.size()}, {"results", a}});
  } else {
    for (const auto& r : results) {
      out << (r.status == EntryStatus::pass ? "PASS " : r.status == EntryStatus::fail ? "FAIL " : "VIOLATION ") << r.name;
      if (r.report) out << "  Z = " << to_string(r.report->zeta);
      out << "\n";
      for (const auto& f : r.failures) out << "    " << f << "\n";
    }
    out << passed << "/" << results.size() << " passed\n";
  }
  if (violation) return kTheoremViolation;
  return passed == results.size() ? kOk : kInputError;
}

inline int cmd_explain(const ExplainOptions& o, std::ostream& out, std::ostream&) {
  Poly f = parse_curve(o.poly);
  auto rs = run_curve_pipelines(f, detail::parse_pipeline(o.pipeline), o.allow_nonreduced);
  bool machine = o.format == "machine";
  Json doc;
  doc["input"] = to_string(f, {"x", "y"});
  doc["resolutions"] = Json::array();
  if (!machine) out << "input: " << to_string(f, {"x", "y"}) << "\n";
  for (const auto& [name, res] : rs) {
    Json rj{{"pipeline", name}};
    if (!machine) out << "== " << name << " ==\n";
    if (name == "blowup") {
      Json hist = Json::array();
      if (res.history.empty() && !machine) out << "0 blowups: identity resolution, the germ already has normal crossings\n";
      else if (!machine) out << res.history.size() << " blowup" << (res.history.size() == 1 ? "" : "s") << ":\n";
      for (const auto& h : res.history) {
        std::string Nexpr = std::to_string(h.multiplicity), nuexpr = "2";
        for (int id : h.through) {
          Nexpr += " + " + std::to_string(res.data.component(id).N);
          nuexpr += " + (" + std::to_string(res.data.component(id).nu) + " - 1)";
        }
        if (!machine)
          out << "  step " << h.step << ": center " << h.center << ", multiplicity " << h.multiplicity
              << ", through " << detail::ids_text(h.through) << " -> E" << h.component << " (N, nu) = (" << h.N
              << ", " << h.nu << ")  [N = " << Nexpr << ", nu = " << nuexpr << "]\n";
        hist.push_back(Json{{"step", h.step},
                            {"center", h.center},
                            {"multiplicity", h.multiplicity},
                            {"through", h.through},
                            {"component", h.component},
                            {"N", h.N},
                            {"nu", h.nu}});
      }
      rj["history"] = hist;
    } else {
      Json fan = Json::array();
      if (!machine) out << "fan rays (a, b): N, sigma\n";
      for (const auto& r : res.fan) {
        if (!machine)
          out << "  (" << r.a << ", " << r.b << "): " << r.N << ", " << r.sigma << (r.inserted ? "  [subdivision]" : "")
              << "\n";
        fan.push_back(Json{{"a", r.a}, {"b", r.b}, {"N", r.N}, {"sigma", r.sigma}, {"inserted", r.inserted}});
      }
      rj["fan"] = fan;
    }
    if (!machine) {
      out << "components:\n";
      for (std::size_t i = 0; i < res.data.components.size(); ++i) {
        const auto& c = res.data.components[i];
        out << "  E" << c.id << " " << to_string(res.kinds[i]) << " (N, nu) = (" << c.N << ", " << c.nu << ")";
        if (res.orbit_degrees[i] > 1) out << ", " << res.orbit_degrees[i] << " conjugate branches";
        out << "\n";
      }
      out << detail::strata_text(res.data);
      out << "Z_top,0(s) = " << to_string(zeta_local(res.data)) << "\n";
    }
    rj["components"] = components_json(res);
    rj["strata"] = detail::strata_json(res.data);
    rj["zeta"] = to_json(zeta_local(res.data));
    doc["resolutions"].push_back(rj);
  }
  if (machine) out << detail::dump(doc);
  return kOk;
}

/// Runs the command line given without the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological zeta functions, poles and b-function predictions"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"human", "machine"};

  ZetaOptions z;
  auto* zeta = app.add_subcommand("zeta", "Compute Z_top, poles, lct and the prediction report");
  zeta->add_option("--poly", z.poly, "Polynomial in x, y");
  zeta->add_option("--file", z.file, "Resolution data file (JSON)");
  zeta->add_option("--pipeline", z.pipeline, "blowup, toric, both or file")
      ->check(CLI::IsMember({"blowup", "toric", "both", "file"}));
  zeta->add_option("--scope", z.scope, "local or global")->check(CLI::IsMember({"local", "global"}));
  zeta->add_option("--format", z.format, "human or machine")->check(CLI::IsMember(formats));
  zeta->add_flag("--allow-nonreduced", z.allow_nonreduced, "Accept polynomials with repeated factors");
  zeta->add_flag("--assert-isolated", z.assert_isolated, "Assert the file describes an isolated singularity");

  CorpusOptions c;
  auto* corpus = app.add_subcommand("corpus", "Run a regression corpus (parallelism from ZTOP_JOBS)");
  corpus->add_option("path", c.path, "Corpus JSON file")->required();
  corpus->add_flag("--bless", c.bless, "Rewrite expected values with the computed ones");
  corpus->add_option("--format", c.format, "human or machine")->check(CLI::IsMember(formats));

  ExplainOptions e;
  auto* explain = app.add_subcommand("explain", "Show the resolution witness behind Z");
  explain->add_option("--poly", e.poly, "Polynomial in x, y")->required();
  explain->add_option("--pipeline", e.pipeline, "blowup, toric or both")
      ->check(CLI::IsMember({"blowup", "toric", "both"}));
  explain->add_option("--format", e.format, "human or machine")->check(CLI::IsMember(formats));
  explain->add_flag("--allow-nonreduced", e.allow_nonreduced, "Accept polynomials with repeated factors");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& pe) {
    int code = app.exit(pe, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    if (*zeta) return cmd_zeta(z, out, err);
    if (*corpus) return cmd_corpus(c, out, err);
    return cmd_explain(e, out, err);
  } catch (const TheoremViolation& tv) {
    err << "THEOREM VIOLATION (potential counterexample): " << tv.what() << "\n";
    return kTheoremViolation;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  }
}

}  // namespace ztop::cli
