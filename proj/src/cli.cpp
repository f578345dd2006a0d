#include "zindex/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zindex/bounds.hpp"
#include "zindex/counterexample.hpp"
#include "zindex/extremal.hpp"
#include "zindex/farey.hpp"
#include "zindex/index_engine.hpp"
#include "zindex/prime_geometry.hpp"

namespace zindex::cli {

namespace {

struct Outcome {
  Json result = Json::object();
  Json witnesses = Json::array();
};

Int need(const std::optional<Int>& value, const char* flag) {
  if (!value) throw Error(std::string("missing ") + flag);
  return *value;
}

ZnSequence need_sequence(const RunConfig& c) {
  if (!c.sequence) throw Error("missing sequence literal");
  return parse_sequence(*c.sequence);
}

void replay(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("witness failed to replay: " + what);
}

Json sequence_json(const ZnSequence& s) {
  return {{"literal", to_literal(s)}, {"length", s.length()}, {"values", s.values()}};
}

Json rational_json(const Rational& q) { return to_string(q); }

Json evaluation_json(const BoundEvaluation& e) {
  Json params = Json::object();
  for (const auto& [key, value] : e.parameters) params[key] = rational_json(value);
  return {{"name", e.name},          {"lhs", rational_json(e.lhs)}, {"relation", std::string(to_string(e.relation))},
          {"rhs", rational_json(e.rhs)}, {"holds", e.holds},         {"parameters", params}};
}

Json subseq_json(const SubseqWitness& w) {
  Json out{{"found", w.found}, {"multipliers_checked", w.multipliers_checked}};
  if (w.found) {
    out["multiplier"] = w.multiplier;
    out["target_sum"] = w.target_sum;
    out["subsequence"] = sequence_json(*w.subsequence);
  }
  return out;
}

Json subseq_witnesses(const SubseqWitness& w) {
  if (!w.found) return Json::array();
  return Json::array({{{"kind", "subsequence"},
                       {"multiplier", w.multiplier},
                       {"target_sum", w.target_sum},
                       {"subsequence", to_literal(*w.subsequence)}}});
}

Outcome cmd_index(const RunConfig& c) {
  const auto s = need_sequence(c);
  const auto r = index_of(s);
  replay(sigma(normalize(scale(r.witness_m, s))) == r.value, "index multiplier");
  return {{{"value", r.value}, {"witness_m", r.witness_m}},
          Json::array({{{"kind", "multiplier"}, {"m", r.witness_m}, {"sigma", r.value}}})};
}

Outcome cmd_sum_index(const RunConfig& c) {
  const auto sums = sum_index_set(need_sequence(c)).sums;
  return {{{"size", sums.size()}, {"sums", sums}}, {}};
}

Outcome cmd_big_m(const RunConfig& c) { return {{{"value", big_M(need_sequence(c))}}, {}}; }

Outcome cmd_little_m(const RunConfig& c) { return {{{"value", little_m(need_sequence(c))}}, {}}; }

Outcome cmd_find_subseq(const RunConfig& c) {
  const auto s = need_sequence(c);
  const auto w = find_index_n_subsequence(s, {.len_cap = c.len_cap, .parallelism = c.parallelism});
  replay(verify_witness(s, w), "index-n subsequence");
  if (w.found && c.len_cap) replay(w.subsequence->length() <= *c.len_cap, "length cap");
  return {subseq_json(w), subseq_witnesses(w)};
}

Outcome cmd_lk_check(const RunConfig& c) {
  const auto s = need_sequence(c);
  const Int d = need(c.d, "--d");
  const auto w = conjecture_lk_check(s, d, c.parallelism);
  replay(verify_witness(s, w), "divisor-sum subsequence");
  if (w.found) replay(w.target_sum % d == 0 && s.n() % w.target_sum == 0, "target divisibility");
  return {subseq_json(w), subseq_witnesses(w)};
}

Outcome cmd_short_zero_sum(const RunConfig& c) {
  const auto s = need_sequence(c);
  const auto t = short_zero_sum(s);
  Outcome out;
  out.result = {{"found", t.has_value()}, {"repetition", repetition(s)}};
  if (t) {
    replay(!t->empty() && s.contains(*t) && is_zero_sum(*t) && t->length() <= repetition(s), "short zero-sum");
    out.result["subsequence"] = sequence_json(*t);
    out.witnesses.push_back({{"kind", "zero_sum"}, {"subsequence", to_literal(*t)}});
  }
  return out;
}

Outcome cmd_verify_family(const RunConfig& c) {
  const Int n = need(c.n, "--n");
  const auto spec = build_counterexample(n, c.force);
  const auto v = verify_family(n, c.force, c.parallelism);
  replay(spec.sequence.length() == spec.expected_length && repetition(spec.sequence) == spec.expected_repetition,
         "family shape");
  Outcome out{{{"n", v.n},
               {"k", spec.k},
               {"no_index_subseq", v.no_index_subseq},
               {"multipliers_checked", v.multipliers_checked},
               {"lk_at_n_found", v.lk_at_n_found},
               {"forced", v.forced},
               {"length", spec.expected_length},
               {"repetition", spec.expected_repetition}},
              Json::array({{{"kind", "counterexample"}, {"sequence", to_literal(spec.sequence)}}})};
  if (!v.forced) out.result["t_lower_bound"] = t_lower_bound(n);
  return out;
}

Outcome cmd_t_lower_bound(const RunConfig& c) {
  return {{{"value", t_lower_bound(need(c.n, "--n"))}}, {}};
}

Outcome cmd_farey(const RunConfig& c) {
  const auto set = farey_set(need(c.k, "--k"));
  Json fractions = Json::array();
  for (const auto& f : set.fractions) fractions.push_back(std::to_string(f.a) + "/" + std::to_string(f.b));
  return {{{"k", set.k}, {"f", set.f()}, {"fractions", fractions}}, {}};
}

Outcome cmd_adjacency(const RunConfig& c) {
  const auto checks = check_adjacency(farey_set(need(c.k, "--k")));
  Json list = Json::array();
  bool all = true;
  for (const auto& e : checks) {
    list.push_back(evaluation_json(e));
    all = all && e.holds;
  }
  return {{{"all_hold", all}, {"checks", list}}, {}};
}

Outcome cmd_partition(const RunConfig& c) {
  const auto s = need_sequence(c);
  const Int M = need(c.M, "--M");
  try {
    const auto r = partition_sequence(s, M);
    Json parts = Json::array();
    Int placed = 0;
    for (const auto& part : r.parts) {
      placed += part.members.length();
      parts.push_back({{"index", part.index},
                       {"lo", rational_json(part.lo)},
                       {"hi", rational_json(part.hi)},
                       {"members", part.members.values()}});
    }
    replay(placed == s.length(), "partition cover");
    return {{{"p", r.p}, {"M", r.M}, {"k", r.k}, {"f", r.farey.f()}, {"covered", true}, {"parts", parts}}, {}};
  } catch (const PartitionGapError& e) {
    return {{{"covered", false}, {"outside_value", e.value()}, {"message", e.what()}}, {}};
  }
}

Outcome cmd_r_set(const RunConfig& c) {
  const auto r = r_set(need_sequence(c), need(c.i, "--i"), need(c.M, "--M"));
  return {{{"size", r.length()}, {"members", r.values()}}, {}};
}

Outcome cmd_subset_hit(const RunConfig& c) {
  const Int n = need(c.n, "--n");
  const Int m = need(c.m, "--m");
  const auto idx = residue_subset_hit(c.values, n, m);
  Int sum = 0;
  for (Int i : idx) sum += c.values[static_cast<std::size_t>(i - 1)];
  replay(!idx.empty() && Modulus(n).reduce(sum - m) == 0, "subset congruence");
  return {{{"indices", idx}, {"sum", sum}},
          Json::array({{{"kind", "index_set"}, {"indices", idx}, {"sum_mod_n", Modulus(n).reduce(sum)}}})};
}

Outcome cmd_audit_cases(const RunConfig& c) {
  AuditOptions options{.parallelism = c.parallelism};
  if (c.threshold) options.threshold = *c.threshold;
  const auto audit = audit_prime_cases(need(c.p, "--p"), options);
  Json cases = Json::array();
  for (const auto& cs : audit.cases) {
    cases.push_back({{"case", cs.number},
                     {"k", cs.k},
                     {"M_lo", cs.m_lo},
                     {"M_hi", cs.m_hi},
                     {"evaluated", cs.evaluated},
                     {"violations", cs.violations},
                     {"hypothesis_failures", cs.hypothesis_failures},
                     {"min_slack", rational_json(cs.min_slack)},
                     {"max_slack", rational_json(cs.max_slack)},
                     {"tightest_M", cs.tightest_m},
                     {"holds", cs.summary.holds},
                     {"failed_M", cs.failed_ms},
                     {"sample_failures", cs.sample_failures}});
  }
  return {{{"p", audit.p},
           {"threshold", audit.threshold},
           {"below_threshold", audit.below_threshold},
           {"all_hold", audit.all_hold()},
           {"M_lo", audit.m_lo},
           {"M_hi", audit.m_hi},
           {"uncovered", audit.uncovered},
           {"cases", cases}},
          {}};
}

Outcome cmd_half_set(const RunConfig& c) {
  const auto h = half_set(need(c.p, "--p"), need(c.j, "--j"));
  return {{{"p", h.p}, {"j", h.j}, {"size", h.members.size()}, {"members", h.members}}, {}};
}

Outcome cmd_obs52(const RunConfig& c) {
  const Int p = need(c.p, "--p");
  return {{{"p", p}, {"holds", check_half_set_complements(p)}}, {}};
}

Outcome cmd_lemma53(const RunConfig& c) {
  const auto r = scan_half_set_lower_bound(need(c.p, "--p"));
  return {{{"p", r.p},
           {"min_size", r.min_size},
           {"min_j", r.min_j},
           {"bound", rational_json(Rational(r.p - 1, 6))},
           {"holds", r.violators.empty()},
           {"violators", r.violators},
           {"equality_js", r.equality_js},
           {"allowed_equality", r.allowed_equality},
           {"equality_as_expected", r.equality_as_expected}},
          {}};
}

Outcome cmd_foursum(const RunConfig& c) {
  const auto r = verify_foursum(need(c.p, "--p"), c.parallelism);
  Json failures = Json::array();
  for (const auto& s : r.failures) failures.push_back(to_literal(s));
  return {{{"p", r.p}, {"count", r.count}, {"all_index_p", r.all_index_p}, {"failures", failures}}, {}};
}

Outcome extremal(const RunConfig& c, ExtremalKind kind) {
  const Int n = need(c.n, "--n");
  ExtremalOptions options{.cap = c.cap, .symmetry_reduction = c.symmetry_reduction, .parallelism = c.parallelism};
  if (c.budget) options.budget = *c.budget;
  const auto r = kind == ExtremalKind::multiset ? compute_t(n, options) : compute_T_distinct(n, options);
  Outcome out;
  out.result = {{"n", r.n},
                {"quantity", std::string(to_string(r.kind))},
                {"status", std::string(to_string(r.status))},
                {"value", r.value},
                {"seeded_length", r.seeded_length},
                {"search_space_size", r.search_space_size},
                {"note", r.note}};
  if (r.witness) {
    const auto& w = *r.witness;
    replay(!has_index_n_subsequence(w), "extremal counterexample");
    replay(w.length() == r.value - 1, "extremal witness length");
    if (kind == ExtremalKind::distinct) replay(repetition(w) <= 1, "distinct witness");
    out.result["witness"] = sequence_json(w);
    out.witnesses.push_back({{"kind", "counterexample"}, {"sequence", to_literal(w)}});
  }
  return out;
}

Outcome cmd_extremal_t(const RunConfig& c) { return extremal(c, ExtremalKind::multiset); }
Outcome cmd_extremal_T(const RunConfig& c) { return extremal(c, ExtremalKind::distinct); }

using Handler = Outcome (*)(const RunConfig&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"index", cmd_index},
      {"sum-index", cmd_sum_index},
      {"big-m", cmd_big_m},
      {"little-m", cmd_little_m},
      {"find-subseq", cmd_find_subseq},
      {"lk-check", cmd_lk_check},
      {"short-zero-sum", cmd_short_zero_sum},
      {"verify-family", cmd_verify_family},
      {"t-lower-bound", cmd_t_lower_bound},
      {"farey", cmd_farey},
      {"adjacency", cmd_adjacency},
      {"partition", cmd_partition},
      {"r-set", cmd_r_set},
      {"subset-hit", cmd_subset_hit},
      {"audit-cases", cmd_audit_cases},
      {"half-set", cmd_half_set},
      {"obs52", cmd_obs52},
      {"lemma53", cmd_lemma53},
      {"foursum", cmd_foursum},
      {"extremal-t", cmd_extremal_t},
      {"extremal-T", cmd_extremal_T},
  };
  return table;
}

Json inputs_json(const RunConfig& c) {
  Json in = Json::object();
  if (c.sequence) in["sequence"] = *c.sequence;
  const std::pair<const char*, const std::optional<Int>*> ints[] = {
      {"n", &c.n}, {"p", &c.p},     {"d", &c.d},       {"k", &c.k},           {"M", &c.M},
      {"i", &c.i}, {"j", &c.j},     {"m", &c.m},       {"cap", &c.cap},       {"len_cap", &c.len_cap},
      {"budget", &c.budget},        {"threshold", &c.threshold}};
  for (const auto& [name, value] : ints)
    if (*value) in[name] = **value;
  if (!c.values.empty()) in["a"] = c.values;
  if (c.force) in["force"] = true;
  if (!c.symmetry_reduction) in["symmetry_reduction"] = false;
  return in;
}

bool scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += ' ';
      out += cell(x);
    }
    return out;
  }
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

bool flat_column(const Json& v) {
  return scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), scalar));
}

std::string render_csv(const Json& report) {
  const std::string command = report.at("command").get<std::string>();
  Json rows = Json::array();
  if (command == "audit-cases") {
    for (auto row : report.at("result").at("cases")) {
      row.erase("sample_failures");
      Json prefixed = {{"p", report["result"]["p"]}};
      for (auto& [key, value] : row.items()) prefixed[key] = value;
      rows.push_back(prefixed);
    }
  } else if (command == "lemma53" || command == "foursum") {
    rows.push_back(report.at("result"));
  } else {
    throw Error("csv output is available for lemma53, foursum and audit-cases only");
  }

  std::vector<std::string> columns;
  for (auto& [key, value] : rows.front().items())
    if (flat_column(value)) columns.push_back(key);

  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_quote(cell(row.at(columns[i])));
    out << '\n';
  }
  return out.str();
}

void render_text(const Json& value, const std::string& prefix, std::ostringstream& out) {
  if (value.is_object()) {
    for (auto& [key, child] : value.items()) render_text(child, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_array() && !std::all_of(value.begin(), value.end(), scalar)) {
    for (std::size_t i = 0; i < value.size(); ++i) render_text(value[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << cell(value) << '\n';
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

RunResult run(const RunConfig& config) {
  RunResult out;
  const auto& table = handlers();
  const auto entry = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == config.command; });
  if (entry == table.end()) return {exit_usage, {}, "unknown command: " + config.command};
  if (config.parallelism < 1) return {exit_usage, {}, "parallelism must be at least 1"};

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = entry->second(config);
    if (outcome.witnesses.is_null()) outcome.witnesses = Json::array();
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.report = {{"command", config.command},
                  {"inputs", inputs_json(config)},
                  {"result", std::move(outcome.result)},
                  {"witnesses", std::move(outcome.witnesses)},
                  {"timing_ms", config.timing ? Json(elapsed) : Json(nullptr)},
                  {"version", report_version}};
  } catch (const InvariantViolation& e) {
    return {exit_invariant, {}, std::string("internal invariant violated: ") + e.what()};
  } catch (const Error& e) {
    return {exit_usage, {}, e.what()};
  } catch (const std::exception& e) {
    return {exit_invariant, {}, std::string("internal error: ") + e.what()};
  }
  return out;
}

std::string render(const Json& report, Format format) {
  switch (format) {
    case Format::json:
      return report.dump(2) + "\n";
    case Format::csv:
      return render_csv(report);
    case Format::text: {
      std::ostringstream out;
      render_text(report, "", out);
      return out.str();
    }
  }
  throw InvariantViolation("unknown format");
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index of sequences over Z_n: verifiers, searches and audits", "zindex"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", report_version);

  RunConfig config;
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to this file instead of stdout");
  app.add_option("--parallelism", config.parallelism, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("!--no-timing", config.timing, "Write timing_ms as null");

  if (const char* env = std::getenv("ZINDEX_PARALLELISM"); env && *env) {
    const std::string_view text(env);
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
      err << "error: ZINDEX_PARALLELISM must be a positive integer, got \"" << text << "\"\n";
      return exit_usage;
    }
    config.parallelism = value;
  }

  auto add = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&config, name] { config.command = name; });
    return s;
  };
  auto seq = [&](CLI::App* s) { s->add_option("sequence", config.sequence, "Sequence literal")->required(); };
  auto opt = [&](CLI::App* s, const std::string& flag, std::optional<Int>& target, const std::string& help,
                 bool required = true) {
    auto* o = s->add_option(flag, target, help);
    if (required) o->required();
  };

  seq(add("index", "Index(S) and the minimizing unit"));
  seq(add("sum-index", "Achievable normalized subsequence sums in [1, n]"));
  seq(add("big-m", "M(S)"));
  seq(add("little-m", "m(S), prime modulus"));
  {
    auto* s = add("find-subseq", "Find a subsequence of index n");
    seq(s);
    opt(s, "--len-cap", config.len_cap, "Maximum subsequence length", false);
  }
  {
    auto* s = add("lk-check", "Find T and unit m with d | sigma(|mT|_n) | n");
    seq(s);
    opt(s, "--d", config.d, "Divisor of n");
  }
  seq(add("short-zero-sum", "Zero-sum subsequence of length at most h(S)"));
  {
    auto* s = add("verify-family", "Verify the n = 4k+2 family has no index-n subsequence");
    opt(s, "--n", config.n, "Modulus n = 4k+2");
    s->add_flag("--force", config.force, "Allow k < 5");
  }
  opt(add("t-lower-bound", "n + floor(n/4) - 4"), "--n", config.n, "Modulus n = 4k+2");
  opt(add("farey", "F[1/k, (k-1)/k]"), "--k", config.k, "k >= 2");
  opt(add("adjacency", "Adjacent-pair checks on F[1/k, (k-1)/k]"), "--k", config.k, "k >= 2");
  {
    auto* s = add("partition", "Interval partition of S over Z_p");
    seq(s);
    opt(s, "--M", config.M, "M");
  }
  {
    auto* s = add("r-set", "R_i of S");
    seq(s);
    opt(s, "--i", config.i, "i");
    opt(s, "--M", config.M, "M");
  }
  {
    auto* s = add("subset-hit", "Index set I with sum a_i == m (mod n)");
    opt(s, "--n", config.n, "n");
    opt(s, "--m", config.m, "Target residue");
    s->add_option("--a", config.values, "Tuple a_1..a_n, comma separated")->required()->delimiter(',');
  }
  {
    auto* s = add("audit-cases", "Exact audit of the eight-case inequality chain");
    opt(s, "--p", config.p, "Prime p");
    opt(s, "--threshold", config.threshold, "p at or below this is flagged below threshold", false);
  }
  {
    auto* s = add("half-set", "S_(p,j)");
    opt(s, "--p", config.p, "Odd prime p");
    opt(s, "--j", config.j, "j in [1, p-1]");
  }
  opt(add("obs52", "|S_(p,j)| + |S_(p,p-j)| == (p-1)/2 for all j"), "--p", config.p, "Odd prime p");
  opt(add("lemma53", "min_j |S_(p,j)| >= (p-1)/6"), "--p", config.p, "Prime p >= 19");
  opt(add("foursum", "Index of every minimal zero-sum 4-sequence mod p"), "--p", config.p, "Prime p");
  for (const char* name : {"extremal-t", "extremal-T"}) {
    auto* s = add(name, std::string(name) == "extremal-t" ? "t(n) over multisets" : "T(n) over distinct subsets");
    opt(s, "--n", config.n, "Modulus n");
    opt(s, "--cap", config.cap, "Longest length searched (default 2n)", false);
    opt(s, "--budget", config.budget, "Max candidates per length", false);
    s->add_flag("!--no-symmetry", config.symmetry_reduction, "Enumerate every candidate");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    std::ostringstream help_out, help_err;
    app.exit(e, help_out, help_err);
    out << help_out.str();
    return exit_computed;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    app.exit(e, help_out, help_err);
    err << help_err.str();
    return exit_usage;
  }

  config.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
  if (!output.empty()) config.output_path = output;

  const auto result = run(config);
  if (result.exit_code != exit_computed) {
    err << "error: " << result.error << '\n';
    return result.exit_code;
  }

  std::string text;
  try {
    text = render(result.report, config.format);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << *config.output_path << '\n';
      return exit_usage;
    }
  } else {
    out << text;
  }
  return exit_computed;
}

}  // namespace zindex::cli
