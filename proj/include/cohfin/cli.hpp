/*
 *   Copyright 2026 The cohfin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Command-line front end.
 *
 * Exit status: 0 when every check passes, 1 when a law is violated or a
 * verification fails, 2 on usage or configuration errors. All randomness is
 * drawn from the seeded Rng, so identical arguments give identical output.
 */

#pragma once

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohfin/bounded_dual.hpp"
#include "cohfin/category.hpp"
#include "cohfin/generators.hpp"
#include "cohfin/io.hpp"
#include "cohfin/law_report.hpp"
#include "cohfin/nonuniform.hpp"
#include "cohfin/prefix.hpp"
#include "cohfin/presented.hpp"
#include "cohfin/ramsey.hpp"
#include "cohfin/random.hpp"
#include "cohfin/space.hpp"

namespace cohfin::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kMaxExhaustiveN = 6;

/// Usage or configuration problem; maps to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::size_t max_n = 5;
  std::vector<std::size_t> k;
  std::vector<std::size_t> m;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string out;
  std::size_t cases = 100;
  std::size_t random_n = 10;
  double edge_probability = 0.5;
  std::size_t cap = kDefaultEnumerationCap;

  // Command-specific inputs.
  std::vector<std::string> positional;
  std::string source;
  std::string target;
  std::string family = "blocks_kn";
  std::string edited = "blocks_kn_edge_edited";
  std::vector<std::size_t> sizes;
  std::size_t depth = 50;
  std::size_t degree = 0;
  std::string range = "1..8";
  std::string variant = "lax/lax";
  std::size_t n = 0;
  std::size_t s = 3;
  std::size_t budget = 6;
  std::vector<std::string> words_x;
  std::vector<std::string> words_x_prime;
  std::string input;
};

/// Structured output of a command: a JSON document plus text/CSV/DOT views.
struct Output {
  Json json;
  std::string text;
  std::string csv;
  std::string dot;
  int status = 0;
};

// --- space expressions -------------------------------------------------------

/// Parses expressions such as "tensor(complete(2), dual(path(3)))".
///
/// Leaves: complete(n), discrete(n), path(n), cycle(n), disjoint-kn(n).
/// Combinators: dual(e), tensor(e, e), plus(e, e), hom(e, e).
class SpaceParser {
 public:
  explicit SpaceParser(std::string text) : text_(std::move(text)) {}

  CoherentSpace parse() {
    auto c = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("bad space expression \"" + text_ + "\" at offset " + std::to_string(pos_) +
                     ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char ch) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a construction name");
    return text_.substr(start, pos_ - start);
  }
  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(text_.substr(start, pos_ - start));
  }
  CoherentSpace expr() {
    const std::string name = ident();
    expect('(');
    CoherentSpace out;
    if (name == "complete" || name == "discrete" || name == "path" || name == "cycle" ||
        name == "disjoint-kn" || name == "disjoint_kn") {
      const std::size_t n = number();
      out = name == "complete"   ? complete(n)
            : name == "discrete" ? discrete(n)
            : name == "path"     ? path(n)
            : name == "cycle"    ? cycle(n)
                                 : disjoint_kn(n);
    } else if (name == "dual") {
      out = dual(expr());
    } else if (name == "tensor" || name == "plus" || name == "hom") {
      auto left = expr();
      expect(',');
      auto right = expr();
      out = name == "tensor" ? tensor(left, right) : name == "plus" ? plus(left, right)
                                                                    : hom_space(left, right);
    } else {
      fail("unknown construction '" + name + "'");
    }
    expect(')');
    return out;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline CoherentSpace parse_space(const std::string& text) { return SpaceParser(text).parse(); }

// --- helpers -------------------------------------------------------------------

/// Folds many per-instance reports of one law into a single report.
class Aggregate {
 public:
  Aggregate(std::string law, std::string statement, Json params) {
    report_.law = std::move(law);
    report_.params = std::move(params);
    report_.params["statement"] = std::move(statement);
  }
  void add(const LawReport& r, const Json& instance) {
    ++instances_;
    if (!r.pass) report_.fail({{"instance", instance}, {"detail", r.witness}});
  }
  LawReport finish() {
    report_.params["instances"] = instances_;
    return report_;
  }

 private:
  LawReport report_;
  std::size_t instances_ = 0;
};

inline std::string report_line(const LawReport& r) {
  return std::string(r.pass ? "PASS " : "FAIL ") + r.law + " " + r.params.dump() +
         (r.witness.is_null() ? "" : " witness=" + r.witness.dump());
}

inline Output suite_output(const std::string& suite, Json params,
                           const std::vector<LawReport>& results) {
  Output out;
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  const bool pass = all_pass(results);
  out.json = {{"suite", suite}, {"params", std::move(params)}, {"results", arr}, {"pass", pass}};
  for (const auto& r : results) out.text += report_line(r) + "\n";
  out.text += std::string(pass ? "suite passed" : "suite FAILED") + "\n";
  out.status = pass ? 0 : 1;
  return out;
}

inline std::vector<std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoul(text)};
    const auto lo = std::stoul(text.substr(0, dots));
    const auto hi = std::stoul(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range " + text);
    std::vector<std::size_t> out;
    for (auto i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("bad range \"" + text + "\"; expected N or LO..HI");
  }
}

// --- commands ------------------------------------------------------------------

inline Output cmd_space(const RunConfig& cfg) {
  if (cfg.positional.size() != 1) throw UsageError("space expects one expression argument");
  const auto c = parse_space(cfg.positional[0]);
  Output out;
  const auto cover = min_anticlique_cover_bounds(c);
  out.json = {{"space", to_json(c)},
              {"web_size", c.size()},
              {"omega", omega(c)},
              {"alpha", alpha(c)},
              {"anticlique_cover", {{"lower", cover.lower}, {"upper", cover.upper}}}};
  std::ostringstream os;
  os << "web size: " << c.size() << "\ncoherent pairs: " << c.coherent_pairs().size()
     << "\nomega: " << omega(c) << "\nalpha: " << alpha(c) << "\nanticlique cover: "
     << cover.lower << ".." << cover.upper << "\n";
  if (c.size() <= cfg.cap) {
    const auto n_cliques = cliques(c, cfg.cap).size();
    out.json["clique_count"] = n_cliques;
    os << "cliques: " << n_cliques << "\n";
  }
  out.text = os.str();
  out.dot = to_dot(c);
  return out;
}

inline Output cmd_laws(const RunConfig& cfg) {
  if (cfg.max_n > kMaxExhaustiveN) {
    throw UsageError("laws --max-n is limited to " + std::to_string(kMaxExhaustiveN));
  }
  if (cfg.random_n > cfg.cap) throw UsageError("--random-n exceeds the enumeration cap");
  const std::vector<std::size_t> ms = cfg.m.empty() ? std::vector<std::size_t>{1, 2, 3} : cfg.m;
  const std::vector<std::size_t> ks = cfg.k.empty() ? std::vector<std::size_t>{1, 2, 3} : cfg.k;
  for (auto m : ms) {
    if (m == 0) throw UsageError("--m values must be >= 1");
  }
  const Json scope = "finite webs; infinite cardinalities replaced by the listed thresholds";
  std::vector<LawReport> results;

  Aggregate closure1("coherent_closure",
                     "cliques are closed under the 1-bounded double dual, and their 1-bounded "
                     "dual is the cliques of the dual space",
                     {{"m", 1}, {"graphs", "all labelled graphs on <= max_n vertices"}});
  std::vector<Aggregate> clique_dual;
  for (auto m : ms) {
    clique_dual.emplace_back("clique_dual_equals_dual_incoherence",
                             "the m-bounded dual of the cliques equals the m-incoherent sets of "
                             "the dual space",
                             Json{{"m", m}, {"graphs", "all labelled graphs on <= max_n vertices"}});
  }
  for (std::size_t n = 0; n <= cfg.max_n; ++n) {
    std::uint64_t code = 0;
    for_each_space(n, [&](const CoherentSpace& c) {
      const Json instance = {{"n", n}, {"code", code++}};
      closure1.add(check_coherent_closure(c, cfg.cap), instance);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        clique_dual[i].add(check_clique_dual_laws(c, BoundedDualThreshold(ms[i]), cfg.cap),
                           instance);
      }
    });
  }
  results.push_back(closure1.finish());
  for (auto& a : clique_dual) results.push_back(a.finish());

  Rng rng(cfg.seed);
  for (auto m : ms) {
    Aggregate closure("bounded_closure",
                      "the m-bounded double dual is extensive and idempotent, and the dual of "
                      "the closure is the dual",
                      {{"m", m}, {"families", "seeded random families over 5-vertex webs"}});
    for (std::size_t i = 0; i < cfg.cases; ++i) {
      const auto f = random_family(5, rng, 6);
      closure.add(check_closure_laws(f, BoundedDualThreshold(m), cfg.cap), to_json(f));
    }
    results.push_back(closure.finish());
  }
  for (auto k : ks) {
    Aggregate incoherence(
        "incoherence_closure",
        "sets of size <= k are k-incoherent; k-incoherent sets are downward closed; unions of "
        "two are 2k-incoherent; cliques are k-incoherent",
        {{"k", k},
         {"graphs", "seeded random graphs on 1..random_n vertices"},
         {"edge_probability", cfg.edge_probability}});
    for (std::size_t i = 0; i < cfg.cases; ++i) {
      const auto c = random_space(rng.between(1, cfg.random_n), rng, cfg.edge_probability);
      incoherence.add(check_incoherence_laws(c, IncoherenceThreshold(k), cfg.cap), to_json(c));
    }
    results.push_back(incoherence.finish());
  }
  return suite_output("laws",
                      {{"max_n", cfg.max_n},
                       {"m", ms},
                       {"k", ks},
                       {"seed", cfg.seed},
                       {"cases", cfg.cases},
                       {"random_n", cfg.random_n},
                       {"scope", scope}},
                      results);
}

inline std::vector<std::size_t> positional_sizes(const RunConfig& cfg, std::size_t first) {
  std::vector<std::size_t> out;
  for (std::size_t i = first; i < cfg.positional.size(); ++i) {
    try {
      out.push_back(std::stoul(cfg.positional[i]));
    } catch (const std::logic_error&) {
      throw UsageError("expected a size, got \"" + cfg.positional[i] + "\"");
    }
  }
  return out;
}

inline Output cmd_ramsey(const RunConfig& cfg) {
  Output out;
  const std::string& sub = cfg.subcommand;
  if (sub == "upper") {
    const auto sizes = positional_sizes(cfg, 0);
    if (sizes.size() < 2 || sizes.size() > 3) throw UsageError("ramsey upper takes 2 or 3 sizes");
    const auto u = ramsey_upper(sizes, static_cast<unsigned>(sizes.size()));
    out.json = {{"sizes", sizes}, {"colors", sizes.size()}, {"upper", u}};
    out.text = std::to_string(u) + "\n";
    return out;
  }
  if (sub == "exact") {
    const auto sizes = positional_sizes(cfg, 0);
    if (sizes.size() != 2) throw UsageError("ramsey exact takes 2 sizes");
    RamseyExact r;
    try {
      r = ramsey_exact(sizes[0], sizes[1], cfg.budget);
    } catch (const InfeasibleError& e) {
      throw UsageError(e.what());
    }
    out.json = {{"sizes", sizes},
                {"value", r.value},
                {"colorings_checked", r.colorings_checked},
                {"witness_free_below", r.witness_free_below},
                {"lower_witness", r.lower_witness ? to_json(*r.lower_witness) : Json(nullptr)}};
    std::ostringstream os;
    os << r.value << "\n";
    if (r.lower_witness) {
      os << "lower-bound coloring on " << r.lower_witness->vertex_count()
         << " vertices, color-0 edges:";
      const std::size_t n = r.lower_witness->vertex_count();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (r.lower_witness->color(i, j) == 0) os << " " << i << "-" << j;
        }
      }
      os << "\n";
    }
    os << "colorings checked: " << r.colorings_checked << "\n";
    out.text = os.str();
    return out;
  }
  if (sub == "find") {
    std::vector<std::size_t> sizes = cfg.sizes.empty() ? std::vector<std::size_t>{3, 3} : cfg.sizes;
    if (sizes.size() < 2 || sizes.size() > 3) throw UsageError("--sizes takes 2 or 3 values");
    std::optional<EdgeColoring> coloring;
    if (!cfg.input.empty()) {
      std::ifstream in(cfg.input);
      if (!in) throw UsageError("cannot read " + cfg.input);
      coloring = coloring_from_json(Json::parse(in));
    } else {
      if (cfg.n == 0) throw UsageError("ramsey find needs --n or --in");
      Rng rng(cfg.seed);
      const auto colors = static_cast<unsigned>(sizes.size());
      coloring = EdgeColoring::from_function(cfg.n, colors, [&](std::size_t, std::size_t) {
        return static_cast<unsigned>(rng.below(colors));
      });
    }
    if (coloring->color_count() != sizes.size()) {
      throw UsageError("--sizes must list one size per color");
    }
    const auto bound = ramsey_upper(sizes, coloring->color_count());
    const auto w = find_mono(*coloring, sizes);
    const bool verified = !w || is_monochromatic(*coloring, *w);
    const bool required = coloring->vertex_count() >= bound;
    out.json = {{"n", coloring->vertex_count()},
                {"sizes", sizes},
                {"upper", bound},
                {"witness", w ? to_json(*w) : Json(nullptr)},
                {"verified", verified}};
    out.text = w ? "witness color " + std::to_string(w->color) + ": " +
                       Json(w->vertices.positions()).dump() + "\n"
                 : "no monochromatic set of the requested sizes\n";
    out.status = (verified && (w || !required)) ? 0 : 1;
    return out;
  }
  if (sub == "extract") {
    if (cfg.source.empty()) throw UsageError("ramsey extract needs --space");
    const auto sizes = positional_sizes(cfg, 0);
    if (sizes.size() != 2) throw UsageError("ramsey extract takes a and b");
    const auto c = parse_space(cfg.source);
    const auto r = extract_clique_or_anticlique(c, c.full(), sizes[0], sizes[1]);
    const char* kind = r.kind == CliqueOrAnticlique::Kind::clique       ? "clique"
                       : r.kind == CliqueOrAnticlique::Kind::anticlique ? "anticlique"
                                                                        : "small";
    out.json = {{"kind", kind},
                {"vertices", labels_json(c.web(), r.vertices)},
                {"set_size", r.set_size},
                {"bound", r.bound}};
    out.text = std::string(kind) + " " + Json(c.labels_of(r.vertices)).dump() + "\n";
    return out;
  }
  throw UsageError("ramsey subcommand must be upper, exact, find or extract");
}

inline Output cmd_functor(const RunConfig& cfg) {
  if (cfg.source.empty() || cfg.target.empty()) {
    throw UsageError("functor needs --source and --target space expressions");
  }
  const auto c = parse_space(cfg.source);
  const auto d = parse_space(cfg.target);
  const auto hom = hom_space(c, d);
  if (cfg.subcommand == "witness") {
    const std::size_t k = cfg.k.empty() ? 2 : cfg.k.front();
    Output out;
    std::optional<Relation> w;
    try {
      w = non_fullness_witness(c, d, IncoherenceThreshold(k), cfg.cap);
    } catch (const ContractError& e) {
      throw UsageError(e.what());
    }
    out.json = {{"k", k}, {"witness", w ? to_json(*w) : Json(nullptr)}};
    out.text = w ? "non-fullness witness: " + to_json(*w)["pairs"].dump() + "\n"
                 : "no witness at these sizes\n";
    return out;
  }
  if (cfg.subcommand != "check") throw UsageError("functor subcommand must be check or witness");
  if (hom.size() > 16) throw UsageError("functor check sweeps at most 2^16 relations");
  Aggregate agg("finitely_incoherent_functor",
                "every Coh morphism is a 1-incoherent morphism; identities and composition are "
                "preserved",
                {{"k", 1}, {"relations", "all relations between the two webs"}});
  std::size_t morphisms = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << hom.size()); ++s) {
    const auto r = set_to_relation(c, d, VertexSet(s));
    if (is_coh_morphism(c, d, r)) ++morphisms;
    agg.add(functor_check(c, d, r), to_json(r));
  }
  auto report = agg.finish();
  report.params["coh_morphisms"] = morphisms;
  return suite_output("functor", {{"source", cfg.source}, {"target", cfg.target}}, {report});
}

inline Output cmd_bang(const RunConfig& cfg) {
  if (cfg.family != "kn") throw UsageError("bang --family supports only kn");
  const auto ns = parse_range(cfg.range);
  Output out;
  Json rows = Json::array();
  std::ostringstream text;
  std::ostringstream csv;
  text << "n\t2^n\tn+1";
  csv << "n,bang_kn,bang_kn_dual";
  if (cfg.degree > 0) {
    text << "\tms(K_n,d)\tms(K_n^,d)";
    csv << ",multiset_kn,multiset_kn_dual";
  }
  text << "\n";
  csv << "\n";
  bool pass = true;
  for (auto n : ns) {
    if (n == 0) throw UsageError("bang ranges start at 1");
    const auto kn = complete(n);
    const auto cmp = iso_witness_in_set(kn, dual(kn), cfg.degree, cfg.cap);
    pass = pass && cmp.set_web_left == (std::size_t{1} << n) && cmp.set_web_right == n + 1;
    Json row = {{"n", n}, {"bang_kn", cmp.set_web_left}, {"bang_kn_dual", cmp.set_web_right}};
    text << n << "\t" << cmp.set_web_left << "\t" << cmp.set_web_right;
    csv << n << "," << cmp.set_web_left << "," << cmp.set_web_right;
    if (cfg.degree > 0) {
      row["multiset_degree"] = cfg.degree;
      row["multiset_kn"] = cmp.multiset_left.back().count;
      row["multiset_kn_dual"] = cmp.multiset_right.back().count;
      row["first_differing_degree"] =
          cmp.first_differing_degree ? Json(*cmp.first_differing_degree) : Json(nullptr);
      text << "\t" << cmp.multiset_left.back().count << "\t" << cmp.multiset_right.back().count;
      csv << "," << cmp.multiset_left.back().count << "," << cmp.multiset_right.back().count;
    }
    text << "\n";
    csv << "\n";
    rows.push_back(row);
  }
  out.json = {{"family", "kn"}, {"rows", rows}, {"pass", pass}};
  out.text = text.str();
  out.csv = csv.str();
  out.status = pass ? 0 : 1;
  return out;
}

inline std::vector<std::size_t> default_block_boundaries() {
  std::vector<std::size_t> out;
  for (std::size_t b = 1; b <= 8; ++b) out.push_back(b * (b + 1) / 2);
  return out;
}

inline Output cmd_presented(const RunConfig& cfg) {
  const auto p = builtin_family(cfg.family);
  const auto sizes = cfg.sizes.empty() ? default_block_boundaries() : cfg.sizes;
  Output out;
  if (cfg.subcommand == "growth" || cfg.subcommand == "cover") {
    const auto growth = growth_profile(p, sizes);
    out.json = {{"family", p.name()}, {"growth", to_json(growth)}};
    if (cfg.subcommand == "cover") {
      const auto cover = cover_growth(p, sizes);
      out.json["cover"] = to_json(cover);
      out.csv = to_csv(growth, cover);
    } else {
      out.csv = to_csv(growth);
    }
    out.text = out.csv;
    return out;
  }
  if (cfg.subcommand == "cert") {
    std::vector<LawReport> results;
    for (const auto& cert : p.certificates()) results.push_back(check_certificate(p, cert, cfg.depth));
    return suite_output("presented-cert", {{"family", p.name()}, {"depth", cfg.depth}}, results);
  }
  if (cfg.subcommand == "edit") {
    const auto q = builtin_family(cfg.edited);
    std::vector<VertexPair> edits;
    if (q.name() == "blocks_kn_edge_edited" || p.name() == "blocks_kn_edge_edited") {
      edits.push_back(kBlocksKnEdit);
    }
    const auto rows = edit_comparison(p, q, edits, sizes);
    LawReport r;
    r.law = "edit_stability";
    r.params = {{"left", p.name()}, {"right", q.name()}, {"edits", edits.size()},
                {"statement", "a finite edge edit moves omega and alpha by at most the number "
                              "of edits; bounded evidence only"}};
    for (const auto& row : rows) {
      if (row.alpha_difference > edits.size() || row.omega_difference > edits.size()) {
        r.fail({{"n", row.n}});
      }
    }
    Output o = suite_output("presented-edit", {{"rows", to_json(rows)}}, {r});
    std::ostringstream csv;
    csv << "n,alpha_difference,omega_difference\n";
    for (const auto& row : rows) {
      csv << row.n << ',' << row.alpha_difference << ',' << row.omega_difference << '\n';
    }
    o.csv = csv.str();
    return o;
  }
  throw UsageError("presented subcommand must be growth, cover, cert or edit");
}

inline Variant parse_variant(const std::string& text) {
  const auto slash = text.find('/');
  auto mode = [&](const std::string& m) {
    if (m == "lax") return Mode::lax;
    if (m == "strict") return Mode::strict;
    throw UsageError("variant modes are lax or strict: \"" + text + "\"");
  };
  if (slash == std::string::npos) throw UsageError("variant must look like lax/strict");
  return {mode(text.substr(0, slash)), mode(text.substr(slash + 1))};
}

inline Output cmd_nonuniform(const RunConfig& cfg) {
  Output out;
  if (cfg.subcommand == "failure") {
    const std::size_t k = cfg.k.empty() ? 2 : cfg.k.front();
    const auto w = failure_witness(parse_variant(cfg.variant), cfg.max_n, IncoherenceThreshold(k),
                                   cfg.cap);
    out.json = to_json(w);
    out.text = std::string(w.found ? "witness: " : "no witness: ") + w.detail + "\n";
    return out;
  }
  if (cfg.subcommand == "trichotomy") {
    const std::size_t sizes[3] = {cfg.s, cfg.s, cfg.s};
    const auto bound = ramsey_upper(sizes, 3);
    const std::size_t n = cfg.n == 0 ? bound : cfg.n;
    if (n > kMaxWeb) throw UsageError("--n exceeds " + std::to_string(kMaxWeb));
    Rng rng(cfg.seed);
    LawReport r;
    r.law = "three_color_trichotomy";
    r.params = {{"s", cfg.s}, {"n", n}, {"bound", bound}, {"cases", cfg.cases}};
    Json counts = {{"strict-clique", 0}, {"strict-anticlique", 0}, {"neutral-set", 0}, {"small", 0}};
    for (std::size_t i = 0; i < cfg.cases; ++i) {
      const auto nu = NonUniformSpace::from_function(
          n, [&](std::size_t, std::size_t) { return static_cast<PairLabel>(rng.below(3)); });
      const auto t = trichotomy_extract(nu, nu.full(), cfg.s);
      counts[to_string(t.kind)] = counts[to_string(t.kind)].get<std::size_t>() + 1;
      if (t.kind == Trichotomy::Kind::small && n >= bound) r.fail({{"case", i}});
    }
    r.params["outcomes"] = counts;
    return suite_output("nonuniform-trichotomy", {{"seed", cfg.seed}}, {r});
  }
  throw UsageError("nonuniform subcommand must be failure or trichotomy");
}

inline Output cmd_separate(const RunConfig& cfg) {
  std::vector<EventuallyPeriodicWord> xs;
  std::vector<EventuallyPeriodicWord> ys;
  try {
    if (!cfg.input.empty()) {
      std::ifstream in(cfg.input);
      if (!in) throw UsageError("cannot read " + cfg.input);
      const auto j = Json::parse(in);
      for (const auto& w : j.at("X")) xs.push_back(word_from_json(w));
      for (const auto& w : j.at("X_prime")) ys.push_back(word_from_json(w));
    }
    for (const auto& t : cfg.words_x) xs.push_back(parse_word(t));
    for (const auto& t : cfg.words_x_prime) ys.push_back(parse_word(t));
  } catch (const ContractError& e) {
    throw UsageError(e.what());
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad word file: ") + e.what());
  }
  Separation sep = [&] {
    try {
      return separation_witness(xs, ys);
    } catch (const ContractError& e) {
      throw UsageError(e.what());
    }
  }();
  auto report = to_law_report(sep);
  // Re-verify by brute force on explicit prefix sets.
  std::vector<EventuallyPeriodicWord> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  const std::size_t depth = verification_depth(all);
  auto brute = [&](const EventuallyPeriodicWord& a, const EventuallyPeriodicWord& b) {
    auto ea = down_set(a, depth).elements();
    auto eb = down_set(b, depth).elements();
    std::size_t common = 0;
    for (const auto& s : ea) common += std::count(eb.begin(), eb.end(), s) > 0 ? 1 : 0;
    return common;
  };
  bool verified = brute(sep.witness, sep.witness) == depth + 1;
  for (const auto& [y, size] : sep.evidence) verified = verified && brute(sep.witness, y) == size;
  report.params["verification_depth"] = depth;
  report.params["brute_force_verified"] = verified;
  if (!verified) report.fail({{"verification", "brute-force prefix intersection mismatch"}});
  Output out = suite_output("separate", {{"X", xs.size()}, {"X_prime", ys.size()}}, {report});
  out.text = "witness " + sep.witness.to_string() + " from " + sep.witness_side + "\n" + out.text;
  return out;
}

// --- entry point ---------------------------------------------------------------

inline int emit(const RunConfig& cfg, const Output& out, std::ostream& stdout_stream,
                std::ostream& err) {
  std::string payload;
  if (cfg.format == "json") {
    payload = out.json.dump(2) + "\n";
  } else if (cfg.format == "text") {
    payload = out.text;
  } else if (cfg.format == "csv") {
    if (out.csv.empty()) {
      err << "error: --format csv is not available for this command\n";
      return 2;
    }
    payload = out.csv;
  } else if (cfg.format == "dot") {
    if (out.dot.empty()) {
      err << "error: --format dot is only available for the space command\n";
      return 2;
    }
    payload = out.dot;
  }
  if (cfg.out.empty()) {
    stdout_stream << payload;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    file << payload;
  }
  return out.status;
}

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"cohfin: coherent spaces, bounded finiteness duals and finite Ramsey witnesses",
               "cohfin"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-n", cfg.max_n, "Largest web for exhaustive sweeps");
  app.add_option("--k", cfg.k, "Anticlique thresholds")->delimiter(',');
  app.add_option("--m", cfg.m, "Bounded-dual thresholds")->delimiter(',');
  app.add_option("--seed", cfg.seed, "Random seed (default 42)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv", "dot"}));
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_option("--cases", cfg.cases, "Random case count");
  app.add_option("--cap", cfg.cap, "Enumeration cap")->check(CLI::Range(std::size_t{1}, kDefaultEnumerationCap));

  auto* space = app.add_subcommand("space", "Describe a space: e.g. 'tensor(complete(2), dual(path(3)))'");
  space->add_option("expr", cfg.positional, "Space expression")->required();

  auto* laws = app.add_subcommand("laws", "Run the bounded-dual and incoherence law suites");
  laws->add_option("--random-n", cfg.random_n, "Largest random graph");
  laws->add_option("--p", cfg.edge_probability, "Edge probability of random graphs")
      ->check(CLI::Range(0.0, 1.0));

  auto* ramsey = app.add_subcommand("ramsey", "Ramsey bounds, exact values and witnesses");
  ramsey->add_option("action", cfg.subcommand, "upper | exact | find | extract")->required();
  ramsey->add_option("targets", cfg.positional, "Target sizes");
  ramsey->add_option("--sizes", cfg.sizes, "Target sizes for find")->delimiter(',');
  ramsey->add_option("--n", cfg.n, "Vertex count of a random coloring");
  ramsey->add_option("--in", cfg.input, "Coloring JSON file");
  ramsey->add_option("--budget", cfg.budget, "Largest K_n swept by exact");
  ramsey->add_option("--space", cfg.source, "Space expression for extract");

  auto* functor = app.add_subcommand("functor", "Functor checks and non-fullness witnesses");
  functor->add_option("action", cfg.subcommand, "check | witness")->required();
  functor->add_option("--source", cfg.source, "Source space expression")->required();
  functor->add_option("--target", cfg.target, "Target space expression")->required();

  auto* bang = app.add_subcommand("bang", "Exponential web counts for K_n and its dual");
  bang->add_option("--family", cfg.family, "Space family (kn)");
  bang->add_option("--n", cfg.range, "N or LO..HI");
  bang->add_option("--degree", cfg.degree, "Multiset degree");

  auto* presented = app.add_subcommand("presented", "Growth, cover, certificate and edit profiles");
  presented->add_option("action", cfg.subcommand, "growth | cover | cert | edit")->required();
  presented->add_option("--family", cfg.family, "nat_complete | nat_discrete | blocks_kn | blocks_kn_edge_edited");
  presented->add_option("--edited", cfg.edited, "Edited family for edit");
  presented->add_option("--sizes", cfg.sizes, "Window sizes")->delimiter(',');
  presented->add_option("--depth", cfg.depth, "Certificate depth");

  auto* nonuniform = app.add_subcommand("nonuniform", "Non-uniform variants and trichotomy");
  nonuniform->add_option("action", cfg.subcommand, "failure | trichotomy")->required();
  nonuniform->add_option("--variant", cfg.variant, "clique_mode/fin_mode");
  nonuniform->add_option("--n", cfg.n, "Vertices of random spaces (default: the bound)");
  nonuniform->add_option("--s", cfg.s, "Witness size");

  auto* separate = app.add_subcommand("separate", "Prefix-set separation of two word sets");
  separate->alias("prop21");
  separate->add_option("--x", cfg.words_x, "Words of X, as prefix(period)");
  separate->add_option("--x-prime", cfg.words_x_prime, "Words of X', as prefix(period)");
  separate->add_option("--in", cfg.input, "JSON file {\"X\": [...], \"X_prime\": [...]}");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    Output result;
    if (space->parsed()) {
      cfg.command = "space";
      if (cfg.format == "json" && !app.get_option("--format")->count()) cfg.format = "text";
      result = cmd_space(cfg);
    } else if (laws->parsed()) {
      result = cmd_laws(cfg);
    } else if (ramsey->parsed()) {
      result = cmd_ramsey(cfg);
    } else if (functor->parsed()) {
      result = cmd_functor(cfg);
    } else if (bang->parsed()) {
      result = cmd_bang(cfg);
    } else if (presented->parsed()) {
      result = cmd_presented(cfg);
    } else if (nonuniform->parsed()) {
      result = cmd_nonuniform(cfg);
    } else {
      result = cmd_separate(cfg);
    }
    return emit(cfg, result, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cohfin::cli
