// Copyright 2026 The emgraded Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "emgraded/content.hpp"
#include "emgraded/deciders.hpp"
#include "emgraded/error.hpp"
#include "emgraded/interchange.hpp"
#include "emgraded/presets.hpp"
#include "emgraded/theorem_suite.hpp"

namespace emg::cli {

namespace {

struct GlobalOptions {
  std::size_t max_degree = 3;
  std::optional<std::size_t> max_subset;
  std::optional<std::size_t> max_order;
  unsigned jobs = 1;
  std::string format = "text";
  bool report_homogeneous_content = false;
  bool no_timing = false;

  SearchBounds bounds() const {
    SearchBounds b;
    b.max_subset = max_subset;
    b.max_degree = max_degree;
    b.jobs = jobs;
    b.report_homogeneous_content = report_homogeneous_content;
    return b;
  }
};

struct Input {
  FiniteRing ring;
  std::optional<Grading> canonical;
  std::string source;
  Json spec;  // construction document, when there is one
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("malformed JSON in '" + path + "': " + e.what());
  }
}

Input load_ring(const std::string& ref, const GlobalOptions& g) {
  if (ref.rfind("preset:", 0) == 0) {
    const Preset& p = find_preset(ref.substr(7));
    GradedRing built = build_preset(p, g.max_order);
    return {built.ring, built.grading, ref, p.spec};
  }
  Json doc = read_json_file(ref);
  if (doc.contains("kind")) {
    GradedRing built = build_construction(doc, {g.max_order.value_or(4096)});
    return {built.ring, built.grading, ref, doc};
  }
  if (doc.contains("order")) return {ring_from_json(doc), std::nullopt, ref, Json()};
  throw SpecError("'" + ref + "' is neither a ring table nor a construction document");
}

Grading load_grading(const Input& in, const std::string& ref) {
  if (ref.empty() || ref == "canonical") {
    if (!in.canonical) throw SpecError(in.source + " has no canonical grading; pass --grading");
    return *in.canonical;
  }
  if (ref == "trivial") return trivial_grading(in.ring);
  return grading_from_json(in.ring, read_json_file(ref));
}

// ---------------------------------------------------------------------------
// Text rendering

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("text")) return v["text"].get<std::string>();
  return v.dump();
}

void print_report(std::ostream& out, const PropertyReport& r, const GlobalOptions& g) {
  out << r.property << ": " << to_string(r.verdict) << "\n";
  if (r.witness.is_object()) {
    for (const auto& [k, v] : r.witness.items()) out << "  " << k << ": " << render_value(v) << "\n";
  } else if (!r.witness.is_null()) {
    out << "  witness: " << render_value(r.witness) << "\n";
  }
  if (!r.bounds.empty()) {
    out << "  bounds:";
    for (const auto& [k, v] : r.bounds) out << " " << k << "=" << v;
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (!g.no_timing) {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << r.millis;
    out << "  time: " << ms.str() << " ms\n";
  }
}

void emit(std::ostream& out, const PropertyReport& r, const GlobalOptions& g) {
  if (g.format == "json") {
    out << to_json(r, !g.no_timing).dump(2) << "\n";
  } else {
    print_report(out, r, g);
  }
}

Json component_witnesses(const FiniteRing& ring, const std::vector<ComponentWitness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) {
    Json j;
    j["degree"] = w.degree;
    j["element"] = w.element;
    j["label"] = ring.label(w.element);
    out.push_back(std::move(j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

std::uint64_t table_digest(const FiniteRing& ring) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
  mix(ring.order());
  mix(ring.one());
  for (Element a = 0; a < ring.order(); ++a)
    for (Element b = 0; b < ring.order(); ++b) {
      mix(ring.add(a, b));
      mix(ring.mul(a, b));
    }
  return h;
}

Json describe_json(const Input& in, const std::optional<Grading>& grading) {
  const FiniteRing& r = in.ring;
  Json j;
  j["source"] = in.source;
  if (!in.spec.is_null()) j["spec"] = in.spec;
  j["order"] = r.order();
  j["one"] = r.one();
  j["zero_divisors"] = zero_divisors(r).size();
  j["units"] = units(r).size();
  Json idem = Json::array();
  for (Element e : idempotents(r)) idem.push_back(r.label(e));
  j["idempotents"] = idem;
  std::ostringstream digest;
  digest << std::hex << table_digest(r);
  j["table_digest"] = digest.str();
  if (grading) {
    Json gj;
    gj["moduli"] = grading->group().moduli();
    Json comps = Json::array();
    for (const auto& c : grading->components()) {
      Json cj;
      cj["degree"] = c.degree;
      cj["size"] = c.elements.size();
      comps.push_back(std::move(cj));
    }
    gj["components"] = std::move(comps);
    j["grading"] = std::move(gj);
  }
  if (!r.tags().empty()) j["tags"] = r.tags();
  return j;
}

int cmd_list_presets(std::ostream& out, const GlobalOptions& g) {
  if (g.format == "json") {
    Json arr = Json::array();
    for (const auto& p : presets()) {
      Json j;
      j["name"] = p.name;
      j["description"] = p.description;
      j["spec"] = p.spec;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 0;
  for (const auto& p : presets()) width = std::max(width, p.name.size());
  for (const auto& p : presets())
    out << p.name << std::string(width + 2 - p.name.size(), ' ') << p.description << "\n";
  return 0;
}

int cmd_describe(std::ostream& out, const GlobalOptions& g, const std::string& ring_ref,
                 const std::string& grading_ref) {
  const Input in = load_ring(ring_ref, g);
  std::optional<Grading> grading = in.canonical;
  if (!grading_ref.empty()) grading = load_grading(in, grading_ref);
  const Json j = describe_json(in, grading);
  if (g.format == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "ring: " << in.source << "\n";
  out << "  order: " << in.ring.order() << "\n";
  out << "  zero divisors: " << j["zero_divisors"] << "\n";
  out << "  units: " << j["units"] << "\n";
  out << "  idempotents: " << j["idempotents"].dump() << "\n";
  out << "  table digest: " << j["table_digest"].get<std::string>() << "\n";
  for (const auto& t : in.ring.tags()) out << "  note: " << t << "\n";
  if (grading) {
    out << "grading over moduli " << Json(grading->group().moduli()).dump() << "\n";
    for (const auto& c : grading->components()) {
      out << "  degree " << to_string(c.degree) << ": " << c.elements.size() << " elements";
      if (c.elements.size() <= 16) {
        out << " {";
        for (std::size_t i = 0; i < c.elements.size(); ++i)
          out << (i ? ", " : "") << in.ring.label(c.elements[i]);
        out << "}";
      }
      out << "\n";
    }
  }
  return 0;
}

PropertyReport check_property(const std::string& property, const Input& in,
                              const std::string& grading_ref, const GlobalOptions& g,
                              std::size_t max_generators) {
  const SearchBounds bounds = g.bounds();
  if (property == "em") return is_em_ring(in.ring, bounds);
  if (property == "armendariz") return is_armendariz(in.ring, bounds);

  if (property == "grading-valid") {
    PropertyReport r;
    r.property = property;
    try {
      Grading gr = load_grading(in, grading_ref);
      r.verdict = Verdict::True;
      r.witness["components"] = gr.support_size();
    } catch (const InvalidGrading& e) {
      r.verdict = Verdict::False;
      r.witness["clause"] = e.clause();
      r.witness["detail"] = e.what();
      if (!e.witness().empty()) r.witness["elements"] = e.witness();
    }
    return r;
  }

  const Grading grading = load_grading(in, grading_ref);
  if (property == "em-graded") return is_em_g_graded(grading, bounds);
  if (property == "armendariz-graded") return is_armendariz_g_graded(grading, bounds);
  if (property == "bezout-graded") return is_bezout_g_graded(grading, max_generators, bounds);

  PropertyReport r;
  r.property = property;
  if (property == "crossed-product") {
    const auto c = is_crossed_product(grading);
    r.verdict = c.holds ? Verdict::True : Verdict::False;
    if (c.holds) r.witness["units"] = component_witnesses(in.ring, c.units);
    if (c.failing) r.witness["component_without_unit"] = *c.failing;
  } else if (property == "t2-hypotheses") {
    const auto c = check_t2_hypotheses(grading);
    r.verdict = c.holds ? Verdict::True : Verdict::False;
    if (c.holds) r.witness["generators"] = component_witnesses(in.ring, c.witnesses);
    if (c.failing) r.witness["failing_degree"] = *c.failing;
  } else if (property == "t8-condition") {
    const bool holds = check_t8_condition(grading);
    r.verdict = holds ? Verdict::True : Verdict::False;
    if (!holds) {
      for (Element a : homogeneous_zero_divisors(grading))
        if (a != 0) {
          r.witness["homogeneous_zero_divisor"] = in.ring.label(a);
          break;
        }
    }
  } else if (property == "t10-condition") {
    const auto c = check_t10_condition(grading);
    r.verdict = c.holds ? Verdict::True : Verdict::False;
    if (c.failing) r.witness["element"] = in.ring.label(*c.failing);
  } else {
    throw SpecError("unknown property '" + property + "'");
  }
  r.notes = grading.tags();
  return r;
}

int cmd_find_content(std::ostream& out, const GlobalOptions& g, const std::string& ring_ref,
                     const std::string& grading_ref, const std::string& literal) {
  const Input in = load_ring(ring_ref, g);
  const Polynomial f = parse_polynomial(in.ring, literal);
  std::optional<Grading> grading;
  if (!grading_ref.empty()) grading = load_grading(in, grading_ref);
  else if (g.report_homogeneous_content) grading = in.canonical;

  PropertyReport r;
  r.property = "annihilating-content";
  const auto start = std::chrono::steady_clock::now();
  const auto w = find_annihilating_content(in.ring, f, grading ? &*grading : nullptr, nullptr, g.jobs);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json wj;
  wj["f"] = polynomial_json(in.ring, f);
  if (w) {
    r.verdict = Verdict::True;
    wj["c"] = in.ring.label(w->c);
    wj["c_index"] = w->c;
    wj["g"] = polynomial_json(in.ring, w->g);
    if (grading) wj["homogeneous_c"] = w->homogeneous_c ? Json(in.ring.label(*w->homogeneous_c)) : Json();
  } else {
    r.verdict = Verdict::False;
    r.notes.push_back("no annihilating content");
  }
  r.witness = std::move(wj);
  for (const auto& t : in.ring.tags()) r.notes.push_back(t);
  emit(out, r, g);
  return 0;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

int cmd_suite(std::ostream& out, const GlobalOptions& g, const std::string& corpus_arg) {
  std::vector<std::string> names;
  if (corpus_arg != "default") names = split_names(corpus_arg);
  SuiteOptions options;
  options.bounds = g.bounds();
  const auto corpus = default_corpus(names, g.max_order);
  const SuiteResult result = theorem_suite(corpus, options);
  if (g.format == "json") {
    Json j;
    Json reports = Json::array();
    for (const auto& r : result.reports) reports.push_back(to_json(r, !g.no_timing));
    j["reports"] = std::move(reports);
    j["failures"] = result.failures;
    out << j.dump(2) << "\n";
  } else {
    std::map<std::string, std::size_t> outcomes;
    for (const auto& r : result.reports) {
      const std::string outcome = r.witness.value("outcome", "");
      ++outcomes[outcome];
      out << r.property << ": " << outcome;
      if (!g.no_timing) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(1);
        ms << r.millis;
        out << " (" << ms.str() << " ms)";
      }
      out << "\n";
      if (r.verdict == Verdict::False) out << "  detail: " << r.witness.dump() << "\n";
    }
    out << "checks: " << result.reports.size();
    for (const auto& [k, v] : outcomes) out << ", " << k << " " << v;
    out << "\nfailures: " << result.failures << "\n";
  }
  return result.failures == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide EM and graded EM properties of finite commutative rings", "emgraded"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--max-degree", g.max_degree, "Degree bound for polynomial enumeration")
      ->check(CLI::Range(1, 16));
  app.add_option("--max-subset", g.max_subset, "Largest coefficient set examined");
  app.add_option("--max-order", g.max_order, "Refuse to build rings larger than this");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--report-homogeneous-content", g.report_homogeneous_content,
               "Record whether homogeneous annihilating contents exist");
  app.add_flag("--no-timing", g.no_timing, "Omit timings so outputs compare byte for byte");

  std::string ring_ref, grading_ref, property, literal, corpus = "default";
  std::size_t max_generators = 2;

  auto* list = app.add_subcommand("list-presets", "List the shipped presets");
  auto* describe = app.add_subcommand("describe", "Summarize a ring and its grading");
  describe->add_option("--ring", ring_ref, "preset:NAME or a JSON file")->required();
  describe->add_option("--grading", grading_ref, "canonical, trivial or a JSON file");

  auto* check = app.add_subcommand("check", "Decide one property");
  check->add_option("--ring", ring_ref, "preset:NAME or a JSON file")->required();
  check->add_option("--grading", grading_ref, "canonical, trivial or a JSON file");
  check->add_option("--property", property, "Property to decide")
      ->required()
      ->check(CLI::IsMember({"em", "em-graded", "armendariz", "armendariz-graded", "bezout-graded",
                             "crossed-product", "grading-valid", "t2-hypotheses", "t8-condition",
                             "t10-condition"}));
  check->add_option("--max-generators", max_generators, "Generator bound for bezout-graded")
      ->check(CLI::Range(2, 16));

  auto* find = app.add_subcommand("find-content", "Search an annihilating content");
  find->add_option("--ring", ring_ref, "preset:NAME or a JSON file")->required();
  find->add_option("--grading", grading_ref, "canonical, trivial or a JSON file");
  find->add_option("--poly", literal, "[c0,c1,...] or a label expression like 2+Y*x")->required();

  auto* suite = app.add_subcommand("suite", "Run the theorem consistency suite");
  suite->add_option("--corpus", corpus, "default or a comma separated preset list");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (list->parsed()) return cmd_list_presets(out, g);
    if (describe->parsed()) return cmd_describe(out, g, ring_ref, grading_ref);
    if (check->parsed()) {
      const Input in = load_ring(ring_ref, g);
      emit(out, check_property(property, in, grading_ref, g, max_generators), g);
      return 0;
    }
    if (find->parsed()) return cmd_find_content(out, g, ring_ref, grading_ref, literal);
    if (suite->parsed()) return cmd_suite(out, g, corpus);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace emg::cli
