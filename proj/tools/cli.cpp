#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "permdeflate/analysis.hpp"
#include "permdeflate/certificate.hpp"
#include "permdeflate/decomposition.hpp"
#include "permdeflate/perm_class.hpp"
#include "permdeflate/permutation.hpp"
#include "permdeflate/witness.hpp"

namespace permdeflate::cli {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  int code = 0;
  std::string text;
  json inputs = json::object();
  json results = json::object();
};

std::string perm_text(const Permutation& p) { return format_permutation(p); }

json perm_json(const Permutation& p) { return p.to_vector(); }

json slot_json(Slot s) { return json::array({s.pos_slot, s.val_slot}); }

json span_json(const IntervalSpan& s) {
  return {{"positions", {s.pos_lo, s.pos_hi}}, {"values", {s.val_lo, s.val_hi}}};
}

std::string span_text(const IntervalSpan& s) {
  return "positions " + std::to_string(s.pos_lo) + "-" +
         std::to_string(s.pos_hi) + ", values " + std::to_string(s.val_lo) +
         "-" + std::to_string(s.val_hi);
}

std::string_view bond_kind_text(BondKind k) {
  return k == BondKind::increasing ? "increasing" : "decreasing";
}

json bond_json(const Bond& b) {
  return {{"kind", bond_kind_text(b.kind)},
          {"positions", {b.left_pos, b.left_pos + 1}},
          {"values", {b.low_value, b.low_value + 1}}};
}

std::string bond_text(const Bond& b) {
  return std::string(bond_kind_text(b.kind)) + " bond at positions " +
         std::to_string(b.left_pos) + "-" + std::to_string(b.left_pos + 1) +
         ", values " + std::to_string(b.low_value) + "-" +
         std::to_string(b.low_value + 1);
}

std::string skeleton_text(const Permutation& p) {
  if (p.size() <= 9) {
    std::string out;
    for (int v : p.values()) out += static_cast<char>('0' + v);
    return out;
  }
  return "(" + perm_text(p) + ")";
}

std::string tree_text(const DecompositionTree& t) {
  if (t.is_leaf()) return "1";
  std::string out = skeleton_text(t.skeleton) + "[";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ", ";
    out += tree_text(t.children[i]);
  }
  return out + "]";
}

json tree_json(const DecompositionTree& t) {
  json children = json::array();
  for (const DecompositionTree& c : t.children) children.push_back(tree_json(c));
  return {{"skeleton", perm_json(t.skeleton)}, {"children", children}};
}

json certificate_json(const BondCertificate& cert) {
  json checked = json::array();
  for (Slot s : cert.checked_slots) checked.push_back(slot_json(s));
  return {{"bond", bond_json(cert.bond)},
          {"checked_slots", checked},
          {"blocked_count", cert.grid.blocked.size()}};
}

std::string certificate_text(const BondCertificate& cert) {
  const std::size_t side = cert.grid.host.size() + 1;
  return "certificate: " + bond_text(cert.bond) + "\n" +
         "strip slots: " + std::to_string(cert.checked_slots.size()) + "/" +
         std::to_string(cert.checked_slots.size()) + " blocked\n" +
         "blocked slots: " + std::to_string(cert.grid.blocked.size()) + " of " +
         std::to_string(side * side) + "\n";
}

// ---------------------------------------------------------------------------

Outcome do_contains(const std::string& pattern_text,
                    const std::string& host_text) {
  const Permutation pattern = parse_permutation(pattern_text);
  const Permutation host = parse_permutation(host_text);
  Outcome o;
  o.inputs = {{"pattern", perm_json(pattern)}, {"host", perm_json(host)}};
  const std::optional<Occurrence> occ = contains(pattern, host);
  o.results["contained"] = occ.has_value();
  if (occ) {
    o.results["occurrence"] = occ->positions;
    std::string positions;
    for (std::size_t p : occ->positions) {
      if (!positions.empty()) positions += ' ';
      positions += std::to_string(p);
    }
    o.text = "occurrence " + positions + "\n";
  } else {
    o.results["occurrence"] = nullptr;
    o.text = "no occurrence\n";
    o.code = 1;
  }
  return o;
}

Outcome do_decompose(const std::string& perm) {
  const Permutation p = parse_permutation(perm);
  Outcome o;
  o.inputs = {{"perm", perm_json(p)}};
  const DecompositionTree tree = substitution_decompose(p);
  const bool simple = is_simple(p);
  const bool sum_dec = is_sum_decomposable(p);
  const bool skew_dec = is_skew_decomposable(p);
  o.results = {{"simple", simple},
               {"sum_decomposable", sum_dec},
               {"skew_decomposable", skew_dec},
               {"tree", tree_text(tree)},
               {"decomposition", tree_json(tree)}};
  std::ostringstream text;
  text << "permutation: " << perm_text(p) << "\n"
       << "simple: " << (simple ? "yes" : "no") << "\n"
       << "sum-decomposable: " << (sum_dec ? "yes" : "no") << "\n"
       << "skew-decomposable: " << (skew_dec ? "yes" : "no") << "\n"
       << "tree: " << tree_text(tree) << "\n";
  const auto intervals = proper_intervals(p);
  o.results["proper_interval_count"] = intervals.size();
  text << "proper intervals: " << intervals.size() << "\n";
  if (!sum_dec && !skew_dec) {
    json maximal = json::array();
    for (const IntervalSpan& s : maximal_intervals(p)) {
      if (s.size() < 2) continue;
      maximal.push_back(span_json(s));
      text << "maximal interval: " << span_text(s) << "\n";
    }
    o.results["maximal_intervals"] = maximal;
    o.results["sd_measure"] = sd_measure(p);
    text << "SD measure: " << sd_measure(p) << "\n";
  }
  o.text = text.str();
  return o;
}

json counts_json(const std::vector<LengthCount>& counts) {
  json out = json::array();
  for (const LengthCount& c : counts) {
    out.push_back(
        {{"length", c.length}, {"members", c.members}, {"simples", c.simples}});
  }
  return out;
}

Outcome do_simples(const std::string& basis, std::size_t max_len) {
  const PermClass c = PermClass::parse(basis);
  Outcome o;
  o.inputs = {{"basis", c.to_string()}, {"max_len", max_len}};
  json list = json::array();
  std::ostringstream text;
  const std::vector<Permutation> simples = enumerate_simples(c, max_len);
  for (const Permutation& s : simples) {
    list.push_back(perm_json(s));
    text << perm_text(s) << "\n";
  }
  text << simples.size() << " simple permutation(s) in " << c.to_string()
       << " up to length " << max_len << "\n";
  o.results = {{"count", simples.size()}, {"simples", list}};
  o.text = text.str();
  return o;
}

Outcome do_enumerate(const std::string& basis, std::size_t max_len, bool list) {
  const PermClass c = PermClass::parse(basis);
  Outcome o;
  o.inputs = {{"basis", c.to_string()}, {"max_len", max_len}, {"list", list}};
  std::ostringstream text;
  const std::vector<LengthCount> counts = count_profile(c, max_len);
  text << "length members simples\n";
  for (const LengthCount& lc : counts) {
    text << lc.length << " " << lc.members << " " << lc.simples << "\n";
  }
  o.results["counts"] = counts_json(counts);
  if (list) {
    json members = json::array();
    for (const Permutation& p : enumerate_class(c, max_len)) {
      members.push_back(perm_json(p));
      text << perm_text(p) << "\n";
    }
    o.results["members"] = members;
  }
  o.text = text.str();
  return o;
}

Outcome do_shade(const std::string& perm, const std::string& basis) {
  const Permutation p = parse_permutation(perm);
  const PermClass c = PermClass::parse(basis);
  Outcome o;
  o.inputs = {{"perm", perm_json(p)}, {"basis", c.to_string()}};
  const ShadingGrid grid = shading_grid(p, c);
  json blocked = json::array();
  for (Slot s : grid.blocked) blocked.push_back(slot_json(s));
  const std::string picture = render_grid(grid);
  const std::size_t side = p.size() + 1;
  o.results = {{"blocked_count", grid.blocked.size()},
               {"slot_count", side * side},
               {"blocked", blocked},
               {"grid", picture}};
  o.text = c.to_string() + " shading of " + perm_text(p) + ": " +
           std::to_string(grid.blocked.size()) + " blocked of " +
           std::to_string(side * side) + " slots\n" + picture;
  return o;
}

Outcome do_classify(const std::string& perm) {
  const Permutation pi = parse_permutation(perm);
  Outcome o;
  o.inputs = {{"pi", perm_json(pi)}};
  const TheoremVerdict v = classify_principal(pi);
  o.results = {{"status", to_string(v.status)},
               {"rule", rule_label(v.rule)},
               {"symmetry_used", v.symmetry_used.to_string()}};
  o.text = std::string(to_string(v.status)) + " (" +
           std::string(rule_label(v.rule)) + ")\n";
  return o;
}

Outcome do_witness_search(const std::string& basis, std::size_t max_len,
                          std::size_t limit) {
  const PermClass c = PermClass::parse(basis);
  Outcome o;
  o.inputs = {{"basis", c.to_string()}, {"max_len", max_len}, {"limit", limit}};
  const std::vector<WitnessReport> found = find_witnesses(c, max_len, limit);
  json list = json::array();
  std::ostringstream text;
  for (const WitnessReport& w : found) {
    list.push_back({{"witness", perm_json(w.witness)},
                    {"certificate", certificate_json(w.certificate)},
                    {"cross_check_bound", w.cross_check_bound}});
    text << "witness " << perm_text(w.witness) << ": "
         << bond_text(w.certificate.bond) << "; no simple extension up to length "
         << w.cross_check_bound << "\n";
  }
  text << found.size() << " witness(es) in " << c.to_string()
       << " up to length " << max_len << "\n";
  o.results = {{"count", found.size()}, {"witnesses", list}};
  o.text = text.str();
  return o;
}

Outcome do_witness_check(const std::string& perm, const std::string& basis) {
  const Permutation p = parse_permutation(perm);
  const PermClass c = PermClass::parse(basis);
  Outcome o;
  o.inputs = {{"perm", perm_json(p)}, {"basis", c.to_string()}};
  const bool member = avoids(p, c);
  o.results["member"] = member;
  if (!member) {
    o.results["certificate"] = nullptr;
    o.text = perm_text(p) + " is not a member of " + c.to_string() + "\n";
    o.code = 1;
    return o;
  }
  const std::optional<BondCertificate> cert = bond_certificate(p, c);
  if (!cert) {
    o.results["certificate"] = nullptr;
    o.text = "no bond certificate for " + perm_text(p) + " in " +
             c.to_string() + "\n";
    o.code = 1;
    return o;
  }
  o.results["certificate"] = certificate_json(*cert);
  o.text = "witness " + perm_text(p) + " in " + c.to_string() + "\n" +
           certificate_text(*cert) + render_grid(cert->grid);
  return o;
}

Outcome do_extend(const std::string& perm, const std::string& basis,
                  std::size_t max_len) {
  const Permutation w = parse_permutation(perm);
  const PermClass c = PermClass::parse(basis);
  Outcome o;
  o.inputs = {{"perm", perm_json(w)}, {"basis", c.to_string()},
              {"max_len", max_len}};
  const std::optional<SimpleExtension> ext = extend_to_simple(w, c, max_len);
  if (!ext) {
    o.results = {{"found", false}};
    o.text = "no simple extension of " + perm_text(w) + " in " + c.to_string() +
             " up to length " + std::to_string(max_len) + "\n";
    o.code = 1;
    return o;
  }
  std::ostringstream text;
  text << "simple: " << perm_text(ext->simple) << "\n"
       << "route: " << to_string(ext->route) << "\n";
  json embedding = nullptr;
  if (ext->embedding) {
    json stages = json::array();
    text << "embedding (" << to_string(ext->embedding->case_used) << "):\n";
    for (const Permutation& s : ext->embedding->stages) {
      stages.push_back(perm_json(s));
      text << "  " << perm_text(s) << "\n";
    }
    embedding = {{"case", to_string(ext->embedding->case_used)},
                 {"stages", stages}};
  }
  json chain = json::array();
  for (const BreakReport& step : ext->chain) {
    chain.push_back({{"interval", span_json(step.interval)},
                     {"slot", slot_json(step.slot)},
                     {"extension", perm_json(step.extension)}});
    text << "split " << span_text(step.interval) << " at slot ("
         << step.slot.pos_slot << "," << step.slot.val_slot << ") -> "
         << perm_text(step.extension) << "\n";
  }
  o.results = {{"found", true},
               {"simple", perm_json(ext->simple)},
               {"route", to_string(ext->route)},
               {"embedding", embedding},
               {"chain", chain}};
  o.text = text.str();
  return o;
}

Outcome do_family(const std::string& theta_text) {
  const Permutation theta = parse_permutation(theta_text);
  Outcome o;
  o.inputs = {{"theta", perm_json(theta)}};
  const InflationFamily f = inflation_family(theta);
  o.results = {{"pi_star", perm_json(f.pi_star)},
               {"omega_star", perm_json(f.omega_star)},
               {"omega_avoids", f.omega_avoids},
               {"splitting_slots", f.splitting_slots},
               {"escaping_slots", f.escaping_slots},
               {"verified", f.verified}};
  o.text = "pi*: " + perm_text(f.pi_star) + "\n" +
           "omega*: " + perm_text(f.omega_star) + "\n" +
           "omega* avoids pi*: " + (f.omega_avoids ? "yes" : "no") + "\n" +
           "bond-splitting slots: " + std::to_string(f.splitting_slots) +
           ", escaping: " + std::to_string(f.escaping_slots) + "\n" +
           "verified: " + (f.verified ? "yes" : "no") + "\n";
  o.code = f.verified ? 0 : 1;
  return o;
}

bool same_rows(const std::vector<WitnessRow>& a,
               const std::vector<WitnessRow>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const WitnessRow& x, const WitnessRow& y) {
                      return x.basis == y.basis && x.witness == y.witness;
                    });
}

Outcome do_verify_paper(const std::string& corpus) {
  Outcome o;
  std::vector<WitnessRow> rows;
  if (corpus.empty()) {
    rows = published_witnesses();
    o.inputs = {{"corpus", nullptr}};
  } else {
    std::ifstream in(corpus);
    if (!in) throw std::invalid_argument("cannot open corpus file " + corpus);
    rows = parse_witness_corpus(in);
    o.inputs = {{"corpus", corpus}};
  }
  const std::vector<TableRowResult> checked = verify_witness_table(rows);
  json list = json::array();
  std::ostringstream text;
  std::size_t passed = 0;
  for (const TableRowResult& r : checked) {
    passed += r.pass() ? 1 : 0;
    json row = {{"basis", r.row.basis.to_string()},
                {"witness", perm_json(r.row.witness)},
                {"member", r.member},
                {"certificate", r.certificate ? certificate_json(*r.certificate)
                                              : json(nullptr)},
                {"cross_checked", r.cross_checked},
                {"search_len", r.search_len},
                {"no_simple_extension", r.no_simple_extension},
                {"pass", r.pass()}};
    list.push_back(row);
    text << (r.pass() ? "PASS " : "FAIL ") << r.row.basis.to_string() << " | "
         << perm_text(r.row.witness);
    if (r.certificate) text << " | " << bond_text(r.certificate->bond);
    if (!r.member) text << " | not a member";
    if (r.cross_checked) {
      text << " | " << (r.no_simple_extension ? "no" : "found a")
           << " simple extension up to length " << r.search_len;
    }
    text << "\n";
  }
  const bool matches = same_rows(rows, published_witnesses());
  text << passed << "/" << checked.size() << " rows passed\n";
  text << "corpus matches the built-in table: " << (matches ? "yes" : "no")
       << "\n";
  o.results = {{"rows", list},
               {"passed", passed},
               {"total", checked.size()},
               {"matches_builtin", matches}};
  o.text = text.str();
  o.code = passed == checked.size() ? 0 : 1;
  return o;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{
      "Deflatability analysis of permutation classes.\n"
      "Exit status: 0 success, 1 negative answer from a predicate command "
      "(contains, witness check, extend, family, verify-paper), 2 usage or "
      "parse error.",
      "permdeflate"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON report instead of text");

  std::string a, b, basis, corpus;
  std::size_t max_len = 0;
  std::size_t limit = 1;
  bool list = false;
  std::function<Outcome()> action;
  std::string command;

  auto* contains_cmd =
      app.add_subcommand("contains", "Find an occurrence of a pattern");
  contains_cmd->add_option("pattern", a)->required();
  contains_cmd->add_option("host", b)->required();
  contains_cmd->callback([&] {
    command = "contains";
    action = [&] { return do_contains(a, b); };
  });

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Substitution decomposition");
  decompose_cmd->add_option("perm", a)->required();
  decompose_cmd->callback([&] {
    command = "decompose";
    action = [&] { return do_decompose(a); };
  });

  auto* simples_cmd =
      app.add_subcommand("simples", "List simple members of a class");
  simples_cmd->add_option("--basis", basis)->required();
  simples_cmd->add_option("--max-len", max_len)->required()->check(
      CLI::Range(1, 16));
  simples_cmd->callback([&] {
    command = "simples";
    action = [&] { return do_simples(basis, max_len); };
  });

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Count members of a class by length");
  enumerate_cmd->add_option("--basis", basis)->required();
  enumerate_cmd->add_option("--max-len", max_len)->required()->check(
      CLI::Range(1, 16));
  enumerate_cmd->add_flag("--list", list, "Also print every member");
  enumerate_cmd->callback([&] {
    command = "enumerate";
    action = [&] { return do_enumerate(basis, max_len, list); };
  });

  auto* shade_cmd = app.add_subcommand("shade", "Shading grid of a member");
  shade_cmd->add_option("--perm", a)->required();
  shade_cmd->add_option("--basis", basis)->required();
  shade_cmd->callback([&] {
    command = "shade";
    action = [&] { return do_shade(a, basis); };
  });

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify a principal class Av(pi)");
  classify_cmd->add_option("pi", a)->required();
  classify_cmd->callback([&] {
    command = "classify";
    action = [&] { return do_classify(a); };
  });

  auto* witness_cmd = app.add_subcommand("witness", "Witnesses of deflatability");
  witness_cmd->require_subcommand(1);
  auto* search_cmd =
      witness_cmd->add_subcommand("search", "Search a class for witnesses");
  search_cmd->add_option("--basis", basis)->required();
  search_cmd->add_option("--max-len", max_len)->required()->check(
      CLI::Range(1, 16));
  search_cmd->add_option("--limit", limit)->check(CLI::PositiveNumber);
  search_cmd->callback([&] {
    command = "witness search";
    action = [&] { return do_witness_search(basis, max_len, limit); };
  });
  auto* check_cmd =
      witness_cmd->add_subcommand("check", "Look for a bond certificate");
  check_cmd->add_option("--perm", a)->required();
  check_cmd->add_option("--basis", basis)->required();
  check_cmd->callback([&] {
    command = "witness check";
    action = [&] { return do_witness_check(a, basis); };
  });

  auto* extend_cmd =
      app.add_subcommand("extend", "Extend a member to a simple member");
  extend_cmd->add_option("--perm", a)->required();
  extend_cmd->add_option("--basis", basis)->required();
  extend_cmd->add_option("--max-len", max_len)->required();
  extend_cmd->callback([&] {
    command = "extend";
    action = [&] { return do_extend(a, basis, max_len); };
  });

  auto* family_cmd =
      app.add_subcommand("family", "Check one member of the inflation family");
  family_cmd->add_option("--theta", a)->required();
  family_cmd->callback([&] {
    command = "family";
    action = [&] { return do_family(a); };
  });

  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "Verify the known witness table or a corpus file");
  verify_cmd->add_option("--corpus", corpus, "File of 'basis | witness' rows");
  verify_cmd->callback([&] {
    command = "verify-paper";
    action = [&] { return do_verify_paper(corpus); };
  });

  RunResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const std::invalid_argument& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  } catch (const std::out_of_range& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  result.exit_code = outcome.code;
  if (as_json) {
    json report = {{"command", command},
                   {"inputs", outcome.inputs},
                   {"results", outcome.results},
                   {"timing_ms", elapsed.count()}};
    result.out = report.dump(2) + "\n";
  } else {
    result.out = outcome.text;
  }
  return result;
}

}  // namespace permdeflate::cli
