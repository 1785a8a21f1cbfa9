#pragma once

// Regression corpus: a JSON document listing germs (polynomials or resolution
// files) with frozen exact expectations. Entries are evaluated independently,
// possibly on several threads; results keep the file order.

#include "ztop/io.hpp"
#include "ztop/parser.hpp"
#include "ztop/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ztop {

struct Expected {
  RationalFunction zeta;
  Rational lct;
  PoleTable poles;
};

struct CorpusEntry {
  std::string name;
  std::optional<std::string> poly;
  std::optional<std::string> file;  // relative to the corpus file
  bool allow_nonreduced = false;
  std::optional<RootMultiset> b_roots;
  std::optional<Expected> expected;
};

struct Corpus {
  std::filesystem::path base_dir;
  std::vector<CorpusEntry> entries;
};

enum class EntryStatus { pass, fail, theorem_violation };

struct EntryResult {
  std::string name;
  EntryStatus status = EntryStatus::pass;
  std::vector<std::string> pipelines;
  std::vector<std::string> failures;
  std::optional<Report> report;
};

inline Expected expected_from_json(const Json& j) {
  detail::reject_unknown(j, {"zeta", "lct", "poles"}, "expected");
  return {rational_function_from_json(detail::require(j, "zeta", "expected")),
          rational_from_json(detail::require(j, "lct", "expected")),
          poles_from_json(detail::require(j, "poles", "expected"))};
}

inline Json to_json(const Expected& e) {
  return Json{{"zeta", to_json(e.zeta)}, {"lct", to_json(e.lct)}, {"poles", to_json(e.poles)}};
}

inline CorpusEntry corpus_entry_from_json(const Json& j) {
  using namespace detail;
  reject_unknown(j, {"name", "poly", "file", "allow_nonreduced", "b_roots", "expected"}, "corpus entry");
  CorpusEntry e;
  const Json& name = require(j, "name", "corpus entry");
  if (!name.is_string()) throw FormatError("entry name must be a string");
  e.name = name.get<std::string>();
  if (j.contains("poly")) e.poly = j["poly"].get<std::string>();
  if (j.contains("file")) e.file = j["file"].get<std::string>();
  if (e.poly.has_value() == e.file.has_value())
    throw FormatError("entry '" + e.name + "' needs exactly one of 'poly' and 'file'");
  if (j.contains("allow_nonreduced")) e.allow_nonreduced = require_bool(j, "allow_nonreduced", "corpus entry");
  if (j.contains("b_roots")) e.b_roots = roots_from_json(j["b_roots"]);
  if (j.contains("expected")) e.expected = expected_from_json(j["expected"]);
  return e;
}

inline Json to_json(const CorpusEntry& e) {
  Json j;
  j["name"] = e.name;
  if (e.poly) j["poly"] = *e.poly;
  if (e.file) j["file"] = *e.file;
  if (e.allow_nonreduced) j["allow_nonreduced"] = true;
  if (e.b_roots) j["b_roots"] = to_json(*e.b_roots);
  if (e.expected) j["expected"] = to_json(*e.expected);
  return j;
}

inline Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  detail::reject_unknown(j, {"schema_version", "entries"}, "corpus");
  if (detail::require_int(j, "schema_version", "corpus") != kSchemaVersion)
    throw FormatError("unsupported corpus schema_version");
  const Json& entries = detail::require(j, "entries", "corpus");
  if (!entries.is_array()) throw FormatError("corpus entries must be an array");
  Corpus c;
  c.base_dir = path.parent_path();
  for (const auto& e : entries) c.entries.push_back(corpus_entry_from_json(e));
  return c;
}

inline Json to_json(const Corpus& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) entries.push_back(to_json(e));
  return Json{{"schema_version", kSchemaVersion}, {"entries", entries}};
}

namespace detail {

inline void check_prediction_consistency(const Report& r, const ResolutionData& rd, std::vector<std::string>& fail) {
  const auto& p = r.prediction;
  if (!p.divisor_roots) return;
  std::int64_t total = 0;
  for (const auto& root : *p.divisor_roots) {
    total += root.multiplicity;
    bool of_form = false;
    for (const auto& c : rd.components) {
      // -(nu + k)/N for some k >= 0
      Rational k = -root.root * c.N - c.nu;
      if (k >= 0 && denom(k) == 1) of_form = true;
    }
    if (!of_form) fail.push_back("predicted root " + to_string(root.root) + " is not of the form -(nu+k)/N");
  }
  if (total != p.n * *p.N) fail.push_back("predicted divisor has the wrong degree");
}

inline void compare_expected(const Report& r, const Expected& e, std::vector<std::string>& fail) {
  if (!(r.zeta == e.zeta)) fail.push_back("zeta " + to_string(r.zeta) + " differs from expected " + to_string(e.zeta));
  if (r.lct != e.lct) fail.push_back("lct " + to_string(r.lct) + " differs from expected " + to_string(e.lct));
  if (r.poles != e.poles)
    fail.push_back("poles " + pole_table_text(r.poles) + " differ from expected " + pole_table_text(e.poles));
}

}  // namespace detail

/// Evaluates one entry through every applicable pipeline. Never throws.
inline EntryResult evaluate_entry(const CorpusEntry& entry, const std::filesystem::path& base_dir) {
  EntryResult out;
  out.name = entry.name;
  auto& fail = out.failures;
  try {
    const ResolutionData* rd = nullptr;
    bool reduced_curve = false;
    std::vector<NamedResolution> curves;
    ResolutionFile file;
    if (entry.poly) {
      curves = run_curve_pipelines(parse_curve(*entry.poly), Pipeline::automatic, entry.allow_nonreduced);
      for (const auto& c : curves) out.pipelines.push_back(c.pipeline);
      if (!resolutions_agree(curves)) fail.push_back("blowup and toric zeta functions differ");
      // every pipeline must satisfy the structural checks on its own
      for (std::size_t i = 1; i < curves.size(); ++i)
        for (const auto& f : analyze_curve(curves[i].resolution).invariant_failures)
          fail.push_back(curves[i].pipeline + ": " + f);
      out.report = analyze_curve(curves[0].resolution, entry.b_roots);
      rd = &curves[0].resolution.data;
      reduced_curve = curves[0].resolution.reduced;
    } else {
      file = load_resolution_file((base_dir / *entry.file).string());
      out.pipelines.push_back("file");
      TriState iso = file.isolated ? (*file.isolated ? TriState::yes : TriState::no) : TriState::unknown;
      out.report = analyze(file.data, file.scope, iso, {}, nullptr, entry.b_roots);
      rd = &file.data;
    }
    const Report& r = *out.report;
    for (const auto& f : r.invariant_failures) fail.push_back(f);
    detail::check_prediction_consistency(r, *rd, fail);
    if (r.n == 2 && !r.conjecture4.pass()) {
      fail.push_back("conjecture 4 fails for a curve");
      out.status = EntryStatus::theorem_violation;
    }
    if (reduced_curve)
      for (const auto& c : r.conjecture3)
        if (!c.certified) fail.push_back("pole " + to_string(c.pole) + " not certified by a monodromy eigenvalue");
    if (r.conjecture2 && !*r.conjecture2) fail.push_back("b(s) Z(s) is not a polynomial");
    if (entry.expected) detail::compare_expected(r, *entry.expected, fail);
    else fail.push_back("no expected values (run with --bless)");
  } catch (const TheoremViolation& e) {
    out.status = EntryStatus::theorem_violation;
    fail.push_back(e.what());
  } catch (const std::exception& e) {
    fail.push_back(e.what());
  }
  if (!fail.empty() && out.status == EntryStatus::pass) out.status = EntryStatus::fail;
  return out;
}

/// Parallelism from ZTOP_JOBS, defaulting to the hardware concurrency.
inline unsigned corpus_jobs() {
  if (const char* env = std::getenv("ZTOP_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::vector<EntryResult> run_corpus(const Corpus& corpus, unsigned jobs) {
  std::vector<EntryResult> results(corpus.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < corpus.entries.size();)
      results[i] = evaluate_entry(corpus.entries[i], corpus.base_dir);
  };
  unsigned threads = std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(1, corpus.entries.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

/// Replaces each entry's expectations with the computed values. Entries that could not be
/// evaluated, or that hit a theorem violation, are left alone.
inline std::size_t bless(Corpus& corpus, const std::vector<EntryResult>& results) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.report || r.status == EntryStatus::theorem_violation) continue;
    corpus.entries[i].expected = Expected{r.report->zeta, r.report->lct, r.report->poles};
    ++n;
  }
  return n;
}

inline const char* to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::pass: return "pass";
    case EntryStatus::fail: return "fail";
    case EntryStatus::theorem_violation: return "theorem_violation";
  }
  return "?";
}

inline Json to_json(const EntryResult& r) {
  Json j{{"name", r.name}, {"status", to_string(r.status)}, {"pipelines", r.pipelines}, {"failures", r.failures}};
  if (r.report) {
    j["zeta"] = to_json(r.report->zeta);
    j["lct"] = to_json(r.report->lct);
    j["poles"] = to_json(r.report->poles);
    j["conjecture4"] = to_json(r.report->conjecture4);
    j["conjecture3"] = to_json(r.report->conjecture3);
  }
  return j;
}

}  // namespace ztop
