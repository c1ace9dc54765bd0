#include "o2sep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "o2sep/separate.hpp"

namespace o2sep {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitClaimMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct Output {
  std::string format = "table";  // table | json | csv (csv: tables only)
  std::string path;              // optional copy of the rendered output

  void emit(const std::string& text, std::ostream& out) const {
    out << text;
    if (!path.empty()) {
      std::ofstream file(path);
      if (!file) throw ConfigError("cannot open output file " + path);
      file << text;
    }
  }
};

void add_output_options(CLI::App* cmd, Output& o, bool allow_csv = false) {
  const std::vector<std::string> formats =
      allow_csv ? std::vector<std::string>{"table", "json", "csv"}
                : std::vector<std::string>{"table", "json"};
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--output", o.path, "also write the output to this file");
}

// --- report serialization ---------------------------------------------------

json witness_json(const CollisionWitness& w) {
  return {{"u", to_string(w.u)},
          {"u_type", to_string(w.u_type)},
          {"v", to_string(w.v)},
          {"v_type", to_string(w.v_type)},
          {"distinct_orbits_checked", w.distinct_orbits_checked}};
}

std::string witness_text(const CollisionWitness& w) {
  return to_string(w.u) + " [type " + to_string(w.u_type) + "]  vs  " + to_string(w.v) +
         " [type " + to_string(w.v_type) + "]";
}

std::string render(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  // generic table: sorted keys, nested values inline
  std::ostringstream out;
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << (it.key() + ":");
    if (it->is_string())
      out << it->get<std::string>();
    else
      out << it->dump();
    out << "\n";
  }
  return out.str();
}

// --- set selection and claimed expectations ---------------------------------

struct SetChoice {
  std::string selector;  // Tm | Tm2 | chen | T1-expanded | file:<path>
  InvariantSet set;
};

SetChoice resolve_set(const std::string& selector, unsigned m, const Field& f) {
  if (selector == "Tm") return {selector, set_Tm(m, f)};
  if (selector == "Tm2") return {selector, set_Tm2(m, f)};
  if (selector == "chen") return {selector, set_chen(m, f)};
  if (selector == "T1-expanded") {
    auto base = set_Tm(1, f);
    base.name = "T1";
    return {selector, expand_set(base, m)};
  }
  if (selector.rfind("file:", 0) == 0) {
    const std::string path = selector.substr(5);
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read set file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return {selector, parse_set_lines(buf.str(), path, m, f)};
  }
  throw ConfigError("unknown set selector '" + selector +
                    "' (expected Tm, Tm2, chen, T1-expanded or file:<path>)");
}

struct Expectation {
  std::optional<bool> separating;
  std::optional<bool> minimal;
};

// What the verified claims say about each named set at (q, m).
Expectation expected_for(const std::string& selector, unsigned p, unsigned q, unsigned m) {
  if (selector == "Tm") return {true, true};
  if (selector == "Tm2") {
    if (q == 2 || m == 1) return {true, true};
    return {false, std::nullopt};  // lacks the H members the q > 2 case needs
  }
  if (selector == "chen") {
    if (p == 2) return {true, std::nullopt};  // generating there, hence separating
    return {std::nullopt, std::nullopt};
  }
  if (selector == "T1-expanded") {
    if (m == 1) return {true, true};  // this is just the arity-1 set
    return {false, std::nullopt};
  }
  return {std::nullopt, std::nullopt};
}

// --- commands ----------------------------------------------------------------

struct CommonArgs {
  unsigned q = 0;
  unsigned m = 1;
  std::uint64_t budget = kDefaultEnumBudget;
};

int cmd_orbits(const CommonArgs& c, const std::string& strategy, bool list_reps,
               const Output& o, std::ostream& out, std::ostream& err) {
  auto f = field_make(c.q);
  const auto counts = orbit_count_formula(c.m, *f);
  const auto grammar = orbit_reps_grammar(c.m, *f);

  bool ran_brute = false;
  std::vector<CanonicalForm> brute;
  std::vector<std::uint64_t> sizes;
  if (strategy == "brute" || strategy == "both") {
    brute = orbit_reps_brute(c.m, *f, c.budget, &sizes);
    ran_brute = true;
  } else if (strategy == "auto") {
    try {
      brute = orbit_reps_brute(c.m, *f, c.budget, &sizes);
      ran_brute = true;
    } catch (const BudgetExceeded&) {
      err << "note: brute-force enumeration skipped (q^(2m) over budget)\n";
    }
  }

  bool ok = grammar.size() == counts.kappa;
  std::map<OrbitType, std::uint64_t> by_type;
  for (const auto& r : grammar) ++by_type[r.otype];
  ok = ok && by_type[OrbitType::A] == counts.k1 && by_type[OrbitType::B] == counts.k2 &&
       by_type[OrbitType::C] == counts.k3;
  if (ran_brute) {
    ok = ok && brute.size() == grammar.size();
    for (std::size_t i = 0; ok && i < brute.size(); ++i)
      ok = brute[i].point == grammar[i].point && brute[i].otype == grammar[i].otype;
    std::uint64_t space = 1;
    for (unsigned i = 0; i < 2 * c.m; ++i) space *= c.q;
    std::uint64_t covered = 0;
    for (auto s : sizes) covered += s;
    ok = ok && covered == space;
  }

  json j{{"q", c.q},
         {"m", c.m},
         {"kappa", counts.kappa},
         {"k1", counts.k1},
         {"k2", counts.k2},
         {"k3", counts.k3},
         {"grammar_count", grammar.size()},
         {"brute_count", ran_brute ? json(brute.size()) : json(nullptr)},
         {"checks_ok", ok}};
  if (list_reps || counts.kappa <= 64) {
    json reps = json::array();
    for (std::size_t i = 0; i < grammar.size(); ++i) {
      json r{{"point", to_string(grammar[i].point)}, {"type", to_string(grammar[i].otype)}};
      if (ran_brute) r["orbit_size"] = sizes[i];
      reps.push_back(std::move(r));
    }
    j["reps"] = std::move(reps);
  }

  if (o.format == "table") {
    std::ostringstream text;
    text << "orbits of V^" << c.m << " under the order-" << 2 * (c.q - 1) << " group, q = "
         << c.q << "\n";
    text << "kappa = " << counts.kappa << "  (1 zero + " << counts.k1 << " type a + "
         << counts.k2 << " type b + " << counts.k3 << " type c)\n";
    text << "grammar enumeration: " << grammar.size() << " reps";
    if (ran_brute) text << "; brute force: " << brute.size() << " reps";
    text << "; checks " << (ok ? "PASS" : "FAIL") << "\n";
    if (j.contains("reps"))
      for (std::size_t i = 0; i < grammar.size(); ++i) {
        text << "  " << to_string(grammar[i].point) << "  type "
             << to_string(grammar[i].otype);
        if (ran_brute) text << "  orbit size " << sizes[i];
        text << "\n";
      }
    o.emit(text.str(), out);
  } else {
    o.emit(render(j, o.format), out);
  }
  return ok ? kExitPass : kExitClaimMismatch;
}

int cmd_verify(const CommonArgs& c, const std::string& selector, bool minimality,
               const Output& o, std::ostream& out, std::ostream& err) {
  auto f = field_make(c.q);
  auto choice = resolve_set(selector, c.m, f);
  const auto expect = expected_for(choice.selector, f->p(), c.q, c.m);

  SeparationReport rep = is_separating(choice.set);
  bool witness_consistent = true;
  if (minimality && rep.separating) {
    rep = is_minimal(choice.set);
    for (const auto& r : rep.removals)
      witness_consistent = witness_consistent && r.pair.distinct_orbits_checked;
  }
  if (rep.collision) witness_consistent = witness_consistent && rep.collision->distinct_orbits_checked;
  if (minimality && !rep.separating)
    err << "note: minimality skipped, the set does not separate\n";

  bool claims_ok = witness_consistent;
  if (expect.separating) claims_ok = claims_ok && rep.separating == *expect.separating;
  if (minimality && expect.minimal && rep.minimal)
    claims_ok = claims_ok && *rep.minimal == *expect.minimal;

  json witnesses = json::array();
  if (rep.collision) {
    json w = witness_json(*rep.collision);
    w["kind"] = "collision";
    witnesses.push_back(std::move(w));
  }
  for (const auto& r : rep.removals) {
    json w = witness_json(r.pair);
    w["kind"] = "removal";
    w["removed"] = r.removed;
    witnesses.push_back(std::move(w));
  }

  json j{{"q", rep.q},
         {"m", rep.m},
         {"set", rep.set_name},
         {"size", rep.set_size},
         {"kappa", rep.kappa},
         {"separating", rep.separating},
         {"minimal", rep.minimal ? json(*rep.minimal) : json(nullptr)},
         {"witnesses", std::move(witnesses)},
         {"expected_separating", expect.separating ? json(*expect.separating) : json(nullptr)},
         {"expected_minimal", expect.minimal ? json(*expect.minimal) : json(nullptr)},
         {"claims_ok", claims_ok},
         {"runtime_ms", rep.runtime_ms}};
  if (rep.redundant_member) j["redundant_member"] = *rep.redundant_member;

  if (o.format == "table") {
    std::ostringstream text;
    text << "set " << rep.set_name << " (" << rep.set_size << " members) at q = " << rep.q
         << ", m = " << rep.m << ", kappa = " << rep.kappa << "\n";
    text << "separating: " << (rep.separating ? "yes" : "no");
    if (rep.collision) text << "   collision: " << witness_text(*rep.collision);
    text << "\n";
    if (rep.minimal) {
      text << "minimal: " << (*rep.minimal ? "yes" : "no") << "\n";
      if (rep.redundant_member) text << "redundant member: " << *rep.redundant_member << "\n";
      for (const auto& r : rep.removals)
        text << "  without " << r.removed << ": " << witness_text(r.pair) << "\n";
    }
    text << "claims: " << (claims_ok ? "PASS" : "FAIL") << "\n";
    o.emit(text.str(), out);
  } else {
    o.emit(render(j, o.format), out);
  }
  return claims_ok ? kExitPass : kExitClaimMismatch;
}

int cmd_beta(const CommonArgs& c, unsigned max_degree, const Output& o, std::ostream& out) {
  auto f = field_make(c.q);
  const auto rep = beta_sep(c.m, *f, max_degree);
  const unsigned expected = c.q == 2 ? 2 : c.q - 1;
  const bool ok = rep.beta == expected;

  json degrees = json::array();
  for (const auto& d : rep.degrees) {
    json e{{"d", d.d},
           {"dim", d.dim},
           {"cumulative_dim", d.cumulative_dim},
           {"injective", d.injective}};
    if (d.witness) e["witness"] = witness_json(*d.witness);
    degrees.push_back(std::move(e));
  }
  json j{{"q", rep.q},
         {"m", rep.m},
         {"beta_sep", rep.beta},
         {"expected", expected},
         {"claims_ok", ok},
         {"degrees", std::move(degrees)},
         {"runtime_ms", rep.runtime_ms}};

  if (o.format == "table") {
    std::ostringstream text;
    text << "beta_sep(q = " << rep.q << ", m = " << rep.m << ") = " << rep.beta
         << "  (expected " << expected << ": " << (ok ? "PASS" : "FAIL") << ")\n";
    for (const auto& d : rep.degrees) {
      text << "  degree <= " << d.d << ": dim " << d.cumulative_dim << ", "
           << (d.injective ? "separates" : "collides");
      if (d.witness) text << " on " << witness_text(*d.witness);
      text << "\n";
    }
    o.emit(text.str(), out);
  } else {
    o.emit(render(j, o.format), out);
  }
  return ok ? kExitPass : kExitClaimMismatch;
}

int cmd_sigma(const CommonArgs& c, unsigned max_m, const Output& o, std::ostream& out) {
  auto f = field_make(c.q);
  const auto rep = sigma_sep_bounded(f, max_m);

  json per_m = json::array();
  for (const auto& [mm, ok] : rep.base2_expansion_separating)
    per_m.push_back({{"m", mm}, {"separating", ok}});
  json j{{"q", rep.q},
         {"max_m", rep.max_m},
         {"sigma_sep", 2},
         {"t1_expansion_separating_at_2", rep.t1_expansion_separates_at_2},
         {"t1_witness", rep.t1_witness ? witness_json(*rep.t1_witness) : json(nullptr)},
         {"base2_expansion", std::move(per_m)},
         {"confirmed_up_to_max_m", rep.confirmed},
         {"claims_ok", rep.confirmed},
         {"runtime_ms", rep.runtime_ms}};

  if (o.format == "table") {
    std::ostringstream text;
    text << "sigma_sep(q = " << rep.q << ") = 2, verified up to m = " << rep.max_m << ": "
         << (rep.confirmed ? "PASS" : "FAIL") << "\n";
    text << "  arity-1 expansion separates at m = 2: "
         << (rep.t1_expansion_separates_at_2 ? "yes (unexpected)" : "no (as claimed)") << "\n";
    if (rep.t1_witness) text << "  witness: " << witness_text(*rep.t1_witness) << "\n";
    for (const auto& [mm, ok] : rep.base2_expansion_separating)
      text << "  arity-2 expansion separates at m = " << mm << ": " << (ok ? "yes" : "no")
           << "\n";
    o.emit(text.str(), out);
  } else {
    o.emit(render(j, o.format), out);
  }
  return rep.confirmed ? kExitPass : kExitClaimMismatch;
}

int cmd_gamma(const CommonArgs& c, const std::string& pool_selector, const Output& o,
              std::ostream& out) {
  auto f = field_make(c.q);
  std::optional<SetChoice> pool;
  if (!pool_selector.empty()) pool = resolve_set(pool_selector, c.m, f);
  const auto rep = gamma_sep_check(c.m, *f, pool ? &pool->set : nullptr);
  const bool ok = rep.bound_ok && rep.no_small_subset;

  json j{{"q", rep.q},
         {"m", rep.m},
         {"kappa", rep.kappa},
         {"gamma", rep.gamma},
         {"two_m", rep.two_m},
         {"bound_ok", rep.bound_ok},
         {"pool", rep.pool_checked ? json(rep.pool_name) : json(nullptr)},
         {"no_smaller_subset_in_pool", rep.pool_checked ? json(rep.no_small_subset) : json(nullptr)},
         {"claims_ok", ok},
         {"runtime_ms", rep.runtime_ms}};
  if (!rep.violating_subset.empty()) j["violating_subset"] = rep.violating_subset;

  if (o.format == "table") {
    std::ostringstream text;
    text << "gamma_sep(q = " << rep.q << ", m = " << rep.m << ") = ceil(log_q " << rep.kappa
         << ") = " << rep.gamma << " <= 2m = " << rep.two_m << ": "
         << (rep.bound_ok ? "PASS" : "FAIL") << "\n";
    if (rep.pool_checked)
      text << "pool " << rep.pool_name << ": no separating subset smaller than " << rep.gamma
           << ": " << (rep.no_small_subset ? "PASS" : "FAIL") << "\n";
    o.emit(text.str(), out);
  } else {
    o.emit(render(j, o.format), out);
  }
  return ok ? kExitPass : kExitClaimMismatch;
}

int cmd_search(const CommonArgs& c, const std::string& selector, std::size_t size_cap,
               const Output& o, std::ostream& out) {
  auto f = field_make(c.q);
  auto choice = resolve_set(selector, c.m, f);
  const std::size_t cap = size_cap == 0 ? choice.set.size() : size_cap;
  const auto res = min_separating_subset(choice.set, cap);

  json j{{"q", res.q},
         {"m", res.m},
         {"pool", res.pool_name},
         {"pool_size", choice.set.size()},
         {"size_cap", cap},
         {"found", res.found},
         {"subset", res.labels},
         {"runtime_ms", res.runtime_ms}};

  if (o.format == "table") {
    std::ostringstream text;
    text << "smallest separating subset of " << res.pool_name << " (q = " << res.q
         << ", m = " << res.m << ", cap " << cap << "): ";
    if (res.found) {
      text << res.labels.size() << " members {";
      for (std::size_t i = 0; i < res.labels.size(); ++i)
        text << (i ? ", " : "") << res.labels[i];
      text << "}\n";
    } else {
      text << "none\n";
    }
    o.emit(text.str(), out);
  } else {
    o.emit(render(j, o.format), out);
  }
  return kExitPass;
}

int cmd_sets(const CommonArgs& c, const std::string& selector, const Output& o,
             std::ostream& out) {
  auto f = field_make(c.q);
  auto choice = resolve_set(selector, c.m, f);
  json members = json::array();
  for (const auto& [d, p] : choice.set.members)
    members.push_back({{"label", d.label()}, {"poly", to_string(p)}});
  json j{{"name", choice.set.name},
         {"q", c.q},
         {"m", c.m},
         {"size", choice.set.size()},
         {"members", std::move(members)}};

  if (o.format == "table") {
    std::ostringstream text;
    text << "set " << choice.set.name << " at q = " << c.q << ", m = " << c.m << " ("
         << choice.set.size() << " members)\n";
    for (const auto& [d, p] : choice.set.members)
      text << "  " << d.label() << " = " << to_string(p) << "\n";
    o.emit(text.str(), out);
  } else {
    o.emit(render(j, o.format), out);
  }
  return kExitPass;
}

// --- the tables command -------------------------------------------------------

struct CellResult {
  unsigned q = 0, m = 0;
  std::uint64_t kappa = 0;
  unsigned gamma = 0;
  std::optional<unsigned> beta;
  std::string set_name;
  std::size_t set_size = 0;
  std::optional<bool> separating, minimal;
  std::string status = "PASS";  // PASS | FAIL | SKIPPED
  std::string note;
};

CellResult run_cell(unsigned q, unsigned m, std::uint64_t budget) {
  CellResult cell;
  cell.q = q;
  cell.m = m;
  bool skipped = false, failed = false;
  try {
    auto f = field_make(q);
    const auto counts = orbit_count_formula(m, *f);
    cell.kappa = counts.kappa;

    const auto grammar = orbit_reps_grammar(m, *f);
    if (grammar.size() != counts.kappa) failed = true;
    try {
      const auto brute = orbit_reps_brute(m, *f, budget);
      if (brute.size() != counts.kappa) failed = true;
    } catch (const BudgetExceeded&) {
      skipped = true;
      cell.note = "brute-force enumeration over budget";
    }

    const auto gamma = gamma_sep_check(m, *f);
    cell.gamma = gamma.gamma;
    if (!gamma.bound_ok) failed = true;

    const auto S = q == 2 ? set_Tm2(m, f) : set_Tm(m, f);
    cell.set_name = S.name;
    cell.set_size = S.size();
    const auto rep = is_minimal(S);
    cell.separating = rep.separating;
    cell.minimal = rep.minimal;
    if (!rep.separating || !rep.minimal.value_or(false)) failed = true;

    try {
      const unsigned expected = q == 2 ? 2 : q - 1;
      const auto beta = beta_sep(m, *f, std::max(2u, q - 1));
      cell.beta = beta.beta;
      if (beta.beta != expected) failed = true;
    } catch (const BudgetExceeded&) {
      skipped = true;
      cell.note = "beta linear algebra over budget";
    }
  } catch (const std::exception& e) {
    cell.status = "FAIL";
    cell.note = e.what();
    return cell;
  }
  cell.status = failed ? "FAIL" : (skipped ? "SKIPPED" : "PASS");
  return cell;
}

std::string cell_csv_row(const CellResult& c) {
  std::ostringstream row;
  row << c.q << "," << c.m << "," << c.kappa << "," << c.gamma << ","
      << (c.beta ? std::to_string(*c.beta) : "") << "," << c.set_name << "," << c.set_size
      << "," << (c.separating ? (*c.separating ? "true" : "false") : "") << ","
      << (c.minimal ? (*c.minimal ? "true" : "false") : "") << "," << c.status;
  return row.str();
}

int cmd_tables(const std::vector<unsigned>& qs, const std::vector<unsigned>& ms, unsigned jobs,
               std::uint64_t budget, const Output& o, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned q : qs)
    for (unsigned m : ms) cells.emplace_back(q, m);

  std::vector<CellResult> results(cells.size());
  if (!cells.empty()) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) break;
        results[i] = run_cell(cells[i].first, cells[i].second, budget);
      }
    };
    const unsigned nthreads =
        std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool any_fail = false, any_skip = false;
  for (const auto& c : results) {
    any_fail = any_fail || c.status == "FAIL";
    any_skip = any_skip || c.status == "SKIPPED";
  }

  static const char* kHeader = "q,m,kappa,gamma,beta_sep,set,set_size,separating,minimal,status";
  std::ostringstream text;
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& c : results) {
      json r{{"q", c.q},
             {"m", c.m},
             {"kappa", c.kappa},
             {"gamma", c.gamma},
             {"beta_sep", c.beta ? json(*c.beta) : json(nullptr)},
             {"set", c.set_name},
             {"set_size", c.set_size},
             {"separating", c.separating ? json(*c.separating) : json(nullptr)},
             {"minimal", c.minimal ? json(*c.minimal) : json(nullptr)},
             {"status", c.status}};
      if (!c.note.empty()) r["note"] = c.note;
      rows.push_back(std::move(r));
    }
    text << rows.dump(2) << "\n";
  } else if (o.format == "csv") {
    text << kHeader << "\n";
    for (const auto& c : results) text << cell_csv_row(c) << "\n";
  } else {
    text << kHeader << "\n";
    for (const auto& c : results) {
      text << cell_csv_row(c);
      if (!c.note.empty()) text << "   # " << c.note;
      text << "\n";
    }
  }
  o.emit(text.str(), out);
  if (any_skip) err << "warning: some cells were skipped for budget reasons\n";
  return any_fail ? kExitClaimMismatch : kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of orbit classification and separating invariants "
               "for the split orthogonal group on pairs of coordinates over GF(q)"};
  app.require_subcommand(1);

  CommonArgs c;
  Output output;
  std::string selector = "Tm";
  std::string strategy = "auto";
  std::string pool_selector;
  bool minimality = false;
  bool list_reps = false;
  unsigned max_degree = 0;
  unsigned max_m = 4;
  std::size_t size_cap = 0;
  std::vector<unsigned> q_list, m_list;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto add_common = [&](CLI::App* cmd, bool with_m = true) {
    cmd->add_option("--q", c.q, "field size, a prime power <= 64")->required();
    if (with_m) cmd->add_option("--m", c.m, "number of vector slots")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", c.budget, "point-enumeration budget")
        ->envname("O2SEP_BUDGET")
        ->capture_default_str();
  };

  auto* orbits = app.add_subcommand("orbits", "classify orbits and check the count formula");
  add_common(orbits);
  orbits->add_option("--strategy", strategy, "enumeration strategy")
      ->check(CLI::IsMember({"auto", "grammar", "brute", "both"}))
      ->capture_default_str();
  orbits->add_flag("--list", list_reps, "list every representative");
  add_output_options(orbits, output);

  auto* verify = app.add_subcommand("verify", "certify a set separating (and minimal)");
  add_common(verify);
  verify->add_option("--set", selector, "Tm | Tm2 | chen | T1-expanded | file:<path>")
      ->capture_default_str();
  verify->add_flag("--minimality", minimality, "also certify minimality");
  add_output_options(verify, output);

  auto* beta = app.add_subcommand("beta", "compute the least separating degree bound");
  add_common(beta);
  beta->add_option("--max-degree", max_degree, "search bound (default: max(2, q-1))");
  add_output_options(beta, output);

  auto* sigma = app.add_subcommand("sigma", "verify the least expanding base arity");
  add_common(sigma, false);
  sigma->add_option("--max-m", max_m, "verify expansions up to this arity")
      ->capture_default_str();
  add_output_options(sigma, output);

  auto* gamma = app.add_subcommand("gamma", "integer-log lower bound on separating-set size");
  add_common(gamma);
  gamma->add_option("--set", pool_selector, "pool to scan for smaller separating subsets");
  add_output_options(gamma, output);

  auto* search = app.add_subcommand("search", "smallest separating subset of a pool");
  add_common(search);
  search->add_option("--set", selector, "pool selector")->capture_default_str();
  search->add_option("--size-cap", size_cap, "largest subset size to try (default: pool size)");
  add_output_options(search, output);

  auto* tables = app.add_subcommand("tables", "grid of all checks over (q, m) cells");
  tables->add_option("--q-list", q_list, "field sizes")->delimiter(',');
  tables->add_option("--m-list", m_list, "arities")->delimiter(',');
  tables->add_option("--jobs", jobs, "parallel cell workers")->capture_default_str();
  tables->add_option("--budget", c.budget, "point-enumeration budget")
      ->envname("O2SEP_BUDGET")
      ->capture_default_str();
  add_output_options(tables, output, true);

  auto* sets = app.add_subcommand("sets", "emit a set manifest (labels and polynomials)");
  add_common(sets);
  sets->add_option("--set", selector, "set selector")->capture_default_str();
  add_output_options(sets, output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (orbits->parsed()) return cmd_orbits(c, strategy, list_reps, output, out, err);
    if (verify->parsed()) return cmd_verify(c, selector, minimality, output, out, err);
    if (beta->parsed())
      return cmd_beta(c, max_degree == 0 ? std::max(2u, c.q - 1) : max_degree, output, out);
    if (sigma->parsed()) return cmd_sigma(c, max_m, output, out);
    if (gamma->parsed()) return cmd_gamma(c, pool_selector, output, out);
    if (search->parsed()) return cmd_search(c, selector, size_cap, output, out);
    if (tables->parsed()) return cmd_tables(q_list, m_list, jobs, c.budget, output, out, err);
    if (sets->parsed()) return cmd_sets(c, selector, output, out);
    err << "error: no command\n";
    return kExitConfig;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const NotFoundWithinBudget& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PoolTooLarge& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace o2sep
