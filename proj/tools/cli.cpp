#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mca/mca.hpp"

namespace mca::cli {
namespace {

struct Config {
  std::vector<std::string> inputs;
  std::string format = "table";
  std::optional<std::uint64_t> budget_flag;
  bool assert_mode = false;
  bool report_mode = false;
  int verbosity = 0;
  std::string theory;
  std::vector<std::size_t> indices;
  std::size_t r = 4;
  std::uint64_t bound = 3;
  std::string matrix;
  std::size_t n = 1;

  SolverBudget budget;
  ReportFormat report_format() const { return format == "json" ? ReportFormat::Json : ReportFormat::Table; }
};

/// One report plus the exit code it calls for.
struct Outcome {
  Report report;
  int code = kOk;
};

int severity(int code) {
  switch (code) {
    case kInputError: return 3;
    case kResourceLimit: return 2;
    case kVerdict: return 1;
    default: return 0;
  }
}

int error_code(ErrorKind kind) { return kind == ErrorKind::ResourceLimit ? kResourceLimit : kInputError; }

Report error_json(const std::string& kind, const std::string& message) {
  Report e;
  e["kind"] = kind;
  e["message"] = message;
  return e;
}

Outcome guarded(const std::string& file, const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    Outcome o;
    if (!file.empty()) o.report["file"] = file;
    o.report["error"] = error_json(std::string(error_kind_name(e.kind())), e.what());
    o.code = error_code(e.kind());
    return o;
  } catch (const std::exception& e) {
    Outcome o;
    if (!file.empty()) o.report["file"] = file;
    o.report["error"] = error_json("InternalError", e.what());
    o.code = kInputError;
    return o;
  }
}

Report header(const std::string& file, const GroupCharData& d) {
  Report r;
  r["file"] = file;
  r["group"] = d.name;
  r["order"] = integer_json(d.order);
  return r;
}

Report variables_json(const MonoidPresentation& m) {
  Report out = Report::array();
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back("t" + std::to_string(i + 1) + " = " + render_monomial(m[i]));
  return out;
}

Report relations_json(const std::vector<Binomial>& rels) {
  Report out = Report::array();
  for (const auto& b : rels) out.push_back(render_binomial(b));
  return out;
}

std::string index_set(const std::vector<std::size_t>& idx, std::size_t offset) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + offset);
  return s + "}";
}

std::string certificate_term(const DecompositionCertificate& c, std::size_t p) {
  IntVector e = vec::zeros(p);
  for (const auto& [i, k] : c.multiplicities) e[i] = k;
  return render_binomial_term(e);
}

// ---- per-file commands ----

Outcome hilbert_cmd(const std::string& file, const Config&) {
  auto d = load_dataset(file);
  auto m = hilbert_basis(d);
  Outcome o{header(file, d)};
  o.report["rank"] = d.rank();
  o.report["degrees"] = integer_list_json(d.degrees());
  o.report["induced_rows"] = d.induced_rows.size();
  o.report["generator_count"] = m.size();
  o.report["generators"] = monomial_list_json(m.generators());
  return o;
}

Outcome classify_cmd(const std::string& file, const Config& cfg) {
  auto d = load_dataset(file);
  auto m = hilbert_basis(d);
  auto rep = classify(m, d.degrees());
  Outcome o{header(file, d)};
  o.report["hilbert_basis_size"] = rep.hilbert_basis_size;
  o.report["monomial"] = rep.monomial;
  o.report["quasi_monomial"] = rep.quasi_monomial;
  if (rep.quasi_exponents) o.report["quasi_exponents"] = integer_list_json(*rep.quasi_exponents);
  o.report["almost_monomial"] = rep.almost_monomial;
  o.report["factorial"] = rep.factorial;
  Report missing = Report::array();
  for (std::size_t k = 0; k < m.rank(); ++k)
    if (!support_cover(m, k)) missing.push_back("x" + std::to_string(k + 1));
  o.report["support_cover_missing"] = missing;
  o.report["variables"] = variables_json(m);
  o.report["relations"] = relations_json(markov_basis(m, cfg.budget));
  return o;
}

Outcome normalize_cmd(const std::string& file, const Config& cfg) {
  auto d = load_dataset(file);
  auto m = hilbert_basis(d);
  NormalizationOptions opts;
  opts.budget = cfg.budget;
  auto res = normalize(m, opts);
  MonoidPresentation closure(m.rank(), res.closure_hilbert_basis);
  bool shifts = true;
  CharVector reg = regular_vector(d.degrees());
  for (std::size_t j = 0; j < m.rank() && shifts; ++j) {
    IntVector v = reg.coords();
    v[j] -= 1;
    shifts = member(CharVector(v), closure).has_value();
  }
  Outcome o{header(file, d)};
  o.report["normal"] = res.added.empty();
  o.report["closure_basis_size"] = res.closure_hilbert_basis.size();
  o.report["added"] = monomial_list_json(res.added);
  Report wit = Report::array();
  for (const auto& w : res.witnesses)
    if (w.multiple != 1) wit.push_back("(" + render_monomial(w.element) + ")^" + w.multiple.str() + " in M");
  o.report["witnesses"] = wit;
  o.report["regular_shifts_in_closure"] = shifts;
  return o;
}

Outcome toric_cmd(const std::string& file, const Config& cfg) {
  auto d = load_dataset(file);
  auto m = hilbert_basis(d);
  auto rels = markov_basis(m, cfg.budget);
  bool verified = std::all_of(rels.begin(), rels.end(), [&](const Binomial& b) { return verify_relation(b, m); });
  Outcome o{header(file, d)};
  o.report["factorial"] = is_factorial(m);
  o.report["variables"] = variables_json(m);
  o.report["relation_count"] = rels.size();
  o.report["relations"] = relations_json(rels);
  o.report["relations_verified"] = verified;
  return o;
}

Outcome aramata_cmd(const std::string& file, const Config&) {
  auto d = load_dataset(file);
  auto m = hilbert_basis(d);
  auto rep = aramata(m, d.degrees());
  Outcome o{header(file, d)};
  o.report["alpha"] = integer_json(rep.alpha);
  o.report["alphas"] = integer_list_json(rep.alphas);
  o.report["variables"] = variables_json(m);
  Report certs = Report::array();
  for (std::size_t j = 0; j < rep.alphas.size(); ++j) {
    IntVector target = regular_vector(d.degrees()).coords();
    target[j] -= 1;
    if (rep.certificates[j].expand(m) != rep.alphas[j] * CharVector(target))
      fail(ErrorKind::InvariantViolation, "Aramata certificate failed to re-verify");
    certs.push_back(rep.alphas[j].str() + "(Reg - x" + std::to_string(j + 1) +
                    ") = " + certificate_term(rep.certificates[j], m.size()));
  }
  o.report["certificates"] = certs;
  return o;
}

Outcome super_cmd(const std::string& file, const Config& cfg) {
  auto d = load_dataset(file);
  auto m = hilbert_basis(d);
  auto t = theory_of(d, cfg.theory);
  auto val = validate_supertheory(t, d.char_values, d.classes ? std::optional<std::size_t>(d.classes->size()) : std::nullopt);
  Outcome o{header(file, d)};
  o.report["theory"] = t.name;
  Report blocks = Report::array();
  for (const auto& b : t.blocks) blocks.push_back(index_set(b, 1));
  o.report["blocks"] = blocks;
  Report sigma = Report::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    sigma.push_back("F" + std::to_string(i + 1) + " = " + render_monomial(t.sigma[i]));
  o.report["supercharacters"] = sigma;
  o.report["valid"] = val.valid();
  if (!val.issues.empty()) o.report["issues"] = val.issues;
  if (!val.notices.empty()) o.report["notices"] = val.notices;

  auto quasi = c_quasi_monomial(t, m);
  o.report["c_quasi_monomial"] = quasi.has_value();
  if (quasi) o.report["c_quasi_exponents"] = integer_list_json(quasi->exponents);
  auto am = c_almost_monomial(t, m);
  o.report["c_almost_monomial"] = am.pairwise;
  o.report["c_almost_monomial_product_form"] = am.product;
  try {
    auto sm = super_monoid(t, m, cfg.budget);
    o.report["coefficient_generators"] = monomial_list_json(sm.coefficients.generators(), "F");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceLimit) throw;
    o.report["coefficient_generators"] = nullptr;
    o.report["error"] = error_json(std::string(error_kind_name(e.kind())), e.what());
    o.code = kResourceLimit;
  }
  return o;
}

// ---- checks ----

std::filesystem::path sibling(const std::string& file, const std::string& name) {
  return std::filesystem::path(file).parent_path() / name;
}

Outcome quotient_cmd(const Config& cfg) {
  if (cfg.inputs.empty() || cfg.inputs.size() > 2)
    fail(ErrorKind::SchemaError, "quotient-check takes a group file and optionally a quotient file");
  const std::string& gfile = cfg.inputs[0];
  auto g = load_dataset(gfile);
  struct Item {
    std::string name;
    std::vector<std::size_t> indices;
    GroupCharData q;
  };
  std::vector<Item> items;
  if (cfg.inputs.size() == 2) {
    auto q = load_dataset(cfg.inputs[1]);
    std::vector<std::size_t> idx = cfg.indices;
    if (idx.empty()) {
      auto base = std::filesystem::path(cfg.inputs[1]).filename().string();
      for (const auto& ref : g.quotients)
        if (ref.name == q.name || (ref.dataset && std::filesystem::path(*ref.dataset).filename() == base))
          idx = ref.kernel_indices;
      if (idx.empty())
        fail(ErrorKind::IndexMismatch, "no --indices given and " + g.name + " lists no quotient " + q.name);
    }
    items.push_back({q.name, idx, std::move(q)});
  } else {
    if (!cfg.indices.empty()) fail(ErrorKind::SchemaError, "--indices needs a quotient file");
    for (const auto& ref : g.quotients) {
      if (!ref.dataset) fail(ErrorKind::SchemaError, "quotient " + ref.name + " has no dataset file");
      items.push_back({ref.name, ref.kernel_indices, load_dataset(sibling(gfile, *ref.dataset).string())});
    }
  }
  Outcome o{header(gfile, g)};
  Report list = Report::array();
  bool all = true;
  for (const auto& it : items) {
    Report e;
    e["quotient"] = it.name;
    e["indices"] = index_set(it.indices, 0);
    bool holds = quotient_check(g, it.indices, it.q);
    e["holds"] = holds;
    all = all && holds;
    if (!cfg.theory.empty()) {
      bool sh = super_quotient_check(g, theory_of(g, cfg.theory), it.indices, it.q, theory_of(it.q, cfg.theory),
                                     cfg.budget);
      e["theory"] = cfg.theory;
      e["theory_holds"] = sh;
      all = all && sh;
    }
    list.push_back(e);
  }
  o.report["quotients"] = list;
  o.report["holds"] = all;
  if (!all) o.code = kVerdict;
  return o;
}

Outcome product_cmd(const Config& cfg) {
  if (cfg.inputs.size() != 3) fail(ErrorKind::SchemaError, "product-check takes three files: A B AxB");
  auto a = load_dataset(cfg.inputs[0]);
  auto b = load_dataset(cfg.inputs[1]);
  auto ab = load_dataset(cfg.inputs[2]);
  Outcome o;
  o.report["factors"] = {a.name, b.name};
  o.report["product"] = ab.name;
  bool holds = product_check(a, b, ab);
  o.report["product_generator_count"] = hilbert_basis(ab).size();
  o.report["holds"] = holds;
  bool all = holds;
  if (!cfg.theory.empty()) {
    bool sh = super_product_check(a, theory_of(a, cfg.theory), b, theory_of(b, cfg.theory), ab, cfg.budget);
    o.report["theory"] = cfg.theory;
    o.report["theory_holds"] = sh;
    all = all && sh;
  }
  if (!all) o.code = kVerdict;
  return o;
}

std::string row_text(const IntVector& row) {
  std::string s = "(";
  for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + row[j].str();
  return s + ")";
}

SquareRows parse_matrix(const std::string& text) {
  SquareRows rows;
  std::stringstream all(text);
  std::string line;
  while (std::getline(all, line, ';')) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::stringstream ls(line);
    IntVector row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        fail(ErrorKind::SchemaError, "matrix entry \"" + tok + "\" is not an integer");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorKind::SchemaError, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size()) fail(ErrorKind::SchemaError, "matrix must be square");
  return rows;
}

Outcome prop24_cmd(const Config& cfg) {
  Outcome o;
  if (!cfg.matrix.empty()) {
    auto rows = parse_matrix(cfg.matrix);
    auto v = prop24_screen(rows);
    Report mat = Report::array();
    for (const auto& r : rows) mat.push_back(row_text(r));
    o.report["matrix"] = mat;
    o.report["first_row_trivial"] = v.first_row_trivial;
    o.report["almost_monomial"] = v.almost_monomial;
    o.report["determinant"] = integer_json(v.determinant);
    o.report["permutation_matrix"] = v.permutation;
    o.report["counterexample"] = v.violation();
    if (v.violation()) o.code = kVerdict;
    return o;
  }
  if (cfg.r < 1 || cfg.r > 4) fail(ErrorKind::SchemaError, "--r must lie in 1..4");
  auto found = prop24_harness(cfg.r, Integer(cfg.bound));
  o.report["r"] = cfg.r;
  o.report["bound"] = cfg.bound;
  Report list = Report::array();
  for (const auto& m : found) {
    std::string s;
    for (const auto& r : m) s += row_text(r);
    list.push_back(s);
  }
  o.report["counterexamples"] = list;
  o.report["holds"] = found.empty();
  if (!found.empty()) o.code = kVerdict;
  return o;
}

Report conjecture_base(std::size_t n) {
  auto gens = sl2_conjecture_generators(n);
  auto minimal = minimal_generators(gens);
  const std::size_t q = std::size_t{1} << n;
  std::vector<Integer> degrees{1};
  for (std::size_t i = 0; i < q / 2; ++i) degrees.emplace_back(q - 1);
  degrees.emplace_back(q);
  for (std::size_t i = 0; i + 1 < q / 2; ++i) degrees.emplace_back(q + 1);
  Report r;
  r["n"] = n;
  r["conjectured_generators"] = monomial_list_json(gens.generators());
  r["minimal_generators"] = monomial_list_json(minimal.generators());
  r["almost_monomial"] = classify(minimal, degrees).almost_monomial;
  return r;
}

Outcome conjecture_cmd(const std::string& file, const Config& cfg) {
  auto d = load_dataset(file);
  Outcome o{header(file, d)};
  bool equal = sl2_conjecture_check(cfg.n, d);
  o.report.update(conjecture_base(cfg.n));
  o.report["monoids_equal"] = equal;
  if (!equal) o.code = kVerdict;
  return o;
}

// ---- driver ----

std::vector<Outcome> run_files(const std::vector<std::string>& files, const Config& cfg,
                               Outcome (*cmd)(const std::string&, const Config&), std::ostream& err) {
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [&cfg, cmd, f] {
      return guarded(f, [&] { return cmd(f, cfg); });
    }));
  std::vector<Outcome> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    out.push_back(jobs[i].get());
    if (cfg.verbosity > 0) {
      std::chrono::duration<double> waited = std::chrono::steady_clock::now() - start;
      err << "mca: " << files[i] << ": done (waited " << waited.count() << " s)\n";
    }
  }
  return out;
}

std::optional<std::uint64_t> env_budget() {
  const char* s = std::getenv("MCA_BUDGET");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::SchemaError, std::string("MCA_BUDGET is not a positive integer: ") + s);
  }
}

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i] == "--format=json" || (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json"))
      return true;
  return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Monoid algebra of monomial characters", "mca"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool files) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--budget", cfg.budget_flag, "Solver node budget (default 10000000, or MCA_BUDGET)")
        ->check(CLI::PositiveNumber);
    auto* a = sub->add_flag("--assert", cfg.assert_mode, "Exit 1 on a negative verdict");
    auto* r = sub->add_flag("--report", cfg.report_mode, "Report verdicts and exit 0 (default)");
    a->excludes(r);
    sub->add_flag("-v,--verbose", cfg.verbosity, "Progress on stderr");
    if (files) sub->add_option("files", cfg.inputs, "Dataset files");
  };

  struct PerFile {
    const char* name;
    const char* help;
    Outcome (*fn)(const std::string&, const Config&);
  };
  const std::vector<PerFile> per_file{
      {"hilbert", "Minimal generators of M(G)", hilbert_cmd},
      {"classify", "Monomial / quasi / almost-monomial / factorial flags and relations", classify_cmd},
      {"normalize", "Integral closure of M(G)", normalize_cmd},
      {"toric", "Markov basis of the toric ideal", toric_cmd},
      {"aramata", "Smallest multiples of Reg - x_j in M(G)", aramata_cmd},
      {"super", "Supercharacter-theory monoid and C-flags", super_cmd},
  };
  std::vector<CLI::App*> per_file_apps;
  for (const auto& pf : per_file) {
    auto* sub = app.add_subcommand(pf.name, pf.help);
    common(sub, true);
    if (std::string(pf.name) == "super") sub->add_option("--theory", cfg.theory, "Theory name")->required();
    per_file_apps.push_back(sub);
  }
  auto* quotient = app.add_subcommand("quotient-check", "M(G) restricted to a quotient's characters equals M(G/N)");
  common(quotient, true);
  quotient->add_option("--indices", cfg.indices, "1-based character indices of G/N in G")->delimiter(',');
  quotient->add_option("--theory", cfg.theory, "Also check this supercharacter theory");
  auto* product = app.add_subcommand("product-check", "Outer products of M(A), M(B) generate M(AxB)");
  common(product, true);
  product->add_option("--theory", cfg.theory, "Also check this supercharacter theory");
  auto* prop24 = app.add_subcommand("prop24", "Search small unimodular almost-monomial matrices");
  common(prop24, false);
  prop24->add_option("--r", cfg.r, "Matrix size (1..4)");
  prop24->add_option("--bound", cfg.bound, "Largest entry")->check(CLI::PositiveNumber);
  prop24->add_option("--matrix", cfg.matrix, "Screen one matrix, rows separated by ';'");
  auto* conj = app.add_subcommand("conjecture-sl2", "Conjectured generators of M(SL(2,2^n))");
  common(conj, true);
  conj->add_option("--n", cfg.n, "Exponent n")->required()->check(CLI::Range(1, 20));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kOk;
    }
    if (wants_json(args)) out << Report{{"error", error_json("UsageError", e.what())}}.dump(2) << "\n";
    err << "mca: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  std::vector<Outcome> outcomes;
  try {
    auto env = env_budget();
    cfg.budget.nodes = cfg.budget_flag ? *cfg.budget_flag : env ? *env : SolverBudget{}.nodes;
    if (cfg.budget.nodes == 0) fail(ErrorKind::SchemaError, "budget must be at least 1");
  } catch (const Error& e) {
    outcomes.push_back({Report{{"error", error_json(std::string(error_kind_name(e.kind())), e.what())}}, kInputError});
  }

  if (outcomes.empty()) {
    for (std::size_t i = 0; i < per_file.size(); ++i)
      if (chosen == per_file_apps[i]) outcomes = run_files(cfg.inputs, cfg, per_file[i].fn, err);
    if (chosen == quotient) outcomes.push_back(guarded("", [&] { return quotient_cmd(cfg); }));
    if (chosen == product) outcomes.push_back(guarded("", [&] { return product_cmd(cfg); }));
    if (chosen == prop24) outcomes.push_back(guarded("", [&] { return prop24_cmd(cfg); }));
    if (chosen == conj) {
      if (cfg.inputs.empty())
        outcomes.push_back(guarded("", [&] { return Outcome{conjecture_base(cfg.n)}; }));
      else
        outcomes = run_files(cfg.inputs, cfg, conjecture_cmd, err);
    }
  }

  std::vector<Report> reports;
  int code = kOk;
  for (const auto& o : outcomes) {
    reports.push_back(o.report);
    if (o.report.contains("error")) {
      std::string where = o.report.contains("file") ? o.report["file"].get<std::string>() + ": " : "";
      err << "mca: " << where << o.report["error"]["kind"].get<std::string>() << ": "
          << o.report["error"]["message"].get<std::string>() << "\n";
    }
    int c = o.code == kVerdict && !cfg.assert_mode ? kOk : o.code;
    if (severity(c) > severity(code)) code = c;
  }
  out << emit_report(command, reports, cfg.report_format());
  return code;
}

}  // namespace mca::cli
