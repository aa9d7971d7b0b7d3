#include "cli.hpp"

#include "hopfverify/algfile.hpp"
#include "hopfverify/bicross.hpp"
#include "hopfverify/models.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace hopfverify::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "hopfverify-report/1";
constexpr int kDefaultOrder = 6;
constexpr int kDefaultTensorOrder = 4;
constexpr int kDefaultW2Order = 3;

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  int order = kDefaultOrder;
  bool order_explicit = false;
  std::string algebra;
  std::vector<std::string> suites;
  unsigned jobs = 1;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t fuel = AlgebraOptions{}.fuel;
  std::optional<int> tensor_order, w2_order;
  std::string expr, from, to;
  bool roundtrip = false;

  /// R-matrix and QYBE order: --tensor-order, else an explicit --order, else 4.
  int tensor_k() const {
    return tensor_order ? *tensor_order : order_explicit ? order : kDefaultTensorOrder;
  }
  /// W2 order: --w2-order, else an explicit --order, else 3.
  int w2_k() const { return w2_order ? *w2_order : order_explicit ? order : kDefaultW2Order; }
};

struct SuiteInfo {
  const char* name;
  const char* description;
};

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list = {
      {"jacobi", "Jacobi identity on all generator triples"},
      {"hopf", "Jacobi, coproduct homomorphism, coassociativity, counit and antipode"},
      {"iso", "basis change round trips, Hopf isomorphism and W+ transport"},
      {"kinematical", "null-plane generators in the kinematical basis and back"},
      {"bicross", "module algebra, comodule coalgebra, compatibility and reconstruction"},
      {"rmatrix", "R R^-1 = 1, intertwining and triangularity"},
      {"qybe", "quantum Yang-Baxter equation"},
      {"casimir", "centrality of M2 and W2"},
      {"classical", "z^0 parts against the undeformed tables"},
      {"mutation", "every single-coefficient mutant fails some check"},
  };
  return list;
}

const std::vector<std::string> kBuiltins = {"classical", "tilde", "bicross", "kinematical"};

bool is_builtin(const std::string& name) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

std::string describe(const ParseError& e, const std::string& source) {
  return source + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
         e.reason();
}

/// Presentations and registries built on demand and kept alive for the run.
class Session {
public:
  explicit Session(const Config& cfg) : cfg_(cfg) {
    options_.fuel = cfg.fuel;
    const std::string& a = cfg.algebra;
    if (a.rfind("file:", 0) == 0) {
      path_ = a.substr(5);
      try {
        doc_ = load_document(path_);
      } catch (const ParseError& e) {
        throw ConfigError(describe(e, path_));
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
    } else if (!a.empty() && !is_builtin(a)) {
      throw ConfigError("unknown algebra '" + a +
                        "' (expected classical, tilde, bicross, kinematical or file:PATH)");
    }
  }

  bool has_file() const { return doc_.has_value(); }
  const AlgebraDocument& document() const { return *doc_; }
  /// "file" or a built-in name; `fallback` when --algebra was not given.
  std::string selection(const std::string& fallback) const {
    if (has_file()) return "file";
    return cfg_.algebra.empty() ? fallback : cfg_.algebra;
  }

  std::shared_ptr<const models::ModelRegistry> registry(int k) {
    std::lock_guard lock(mutex_);
    auto& slot = registries_[k];
    if (!slot) slot = models::ModelRegistry::build(k, options_);
    return slot;
  }

  PresentationPtr presentation(const std::string& name, int k) {
    if (name == "file") {
      std::lock_guard lock(mutex_);
      auto& slot = files_[k];
      if (!slot) {
        try {
          slot = instantiate(*doc_, k, options_);
        } catch (const ParseError& e) {
          throw ConfigError(describe(e, path_));
        }
      }
      return slot;
    }
    auto reg = registry(k);
    if (name == "classical") return reg->classical;
    if (name == "tilde") return reg->tilde;
    if (name == "bicross") return reg->bicross;
    if (name == "kinematical") return reg->kinematical;
    throw ConfigError("unknown algebra '" + name + "'");
  }

  SymbolTable symbols(const std::string& name) const {
    if (name == "file") return doc_->symbols();
    SymbolTable s;
    if (name == "classical") s.alphabet = models::null_plane_alphabet();
    if (name == "kinematical") s.alphabet = models::kinematical_alphabet();
    if (name == "tilde") {
      s.alphabet = models::null_plane_alphabet("~", "zt");
      s.values["Wt"] = [](const Algebra& A) { return models::tilde_w_plus(A); };
    }
    if (name == "bicross") {
      s.alphabet = models::null_plane_alphabet();
      s.values["M2"] = [](const Algebra& A) { return models::mass_casimir(A); };
      s.values["W2"] = [](const Algebra& A) { return models::pl_square(A); };
      s.values["W13"] = [](const Algebra& A) { return models::pl_components(A).w13; };
      s.values["W23"] = [](const Algebra& A) { return models::pl_components(A).w23; };
      s.values["Wp"] = [](const Algebra& A) { return models::pl_components(A).wp; };
      s.values["Wm"] = [](const Algebra& A) { return models::pl_components(A).wm; };
    }
    return s;
  }

private:
  const Config& cfg_;
  AlgebraOptions options_;
  std::string path_;
  std::optional<AlgebraDocument> doc_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const models::ModelRegistry>> registries_;
  std::map<int, PresentationPtr> files_;
};

// ------------------------------------------------------------------ verify

struct Task {
  std::string label;
  std::function<std::vector<Report>()> run;
};

struct Outcome {
  std::vector<Report> reports;
  std::string error;
};

/// Empty when `suite` applies to the selection, otherwise the reason.
std::string applicability(const std::string& suite, const std::string& sel, Session& s) {
  bool builtin = sel != "file";
  bool null_plane =
      sel == "bicross" || (!builtin && s.document().alphabet() == models::null_plane_alphabet());
  if (suite == "jacobi" || suite == "hopf") return "";
  if (suite == "iso" || suite == "classical" || suite == "mutation" || suite == "kinematical")
    return builtin ? "" : "suite '" + suite + "' needs the built-in presentations";
  if (suite == "bicross" || suite == "rmatrix" || suite == "qybe" || suite == "casimir")
    return null_plane ? ""
                      : "suite '" + suite +
                            "' needs the bicross presentation or a file over its alphabet";
  return "unknown suite '" + suite + "'";
}

std::vector<Report> hopf_suite(const PresentationPtr& p, bool tilde, const CheckOptions& o) {
  if (!tilde) return run_hopf_suite(*p, o);
  return {check_jacobi(*p, o), check_coproduct_homomorphism(*p, o), check_coassociativity(*p, o),
          check_counit(*p, o), models::check_tilde_antipode(*p, o)};
}

std::vector<Task> plan(Session& s, const Config& cfg, const CheckOptions& o) {
  std::vector<std::string> wanted;
  bool all = cfg.suites.empty() ||
             std::find(cfg.suites.begin(), cfg.suites.end(), "all") != cfg.suites.end();
  if (all) {
    for (const auto& info : suites())
      if (applicability(info.name, s.selection("bicross"), s).empty()) wanted.push_back(info.name);
  } else {
    wanted = cfg.suites;
  }

  std::vector<Task> tasks;
  const int k = cfg.order;
  for (const auto& suite : wanted) {
    std::string sel = s.selection(suite == "jacobi" || suite == "hopf" ? "" : "bicross");
    if (std::string why = applicability(suite, sel.empty() ? "bicross" : sel, s); !why.empty())
      throw ConfigError(why);
    std::vector<std::string> targets;
    if (!sel.empty())
      targets = {sel};
    else if (suite == "jacobi")
      targets = {"classical", "tilde", "bicross"};
    else
      targets = {"tilde", "bicross"};
    // the hopf suite already runs Jacobi on its presentations
    if (all && suite == "jacobi") {
      targets = sel.empty() ? std::vector<std::string>{"classical"} : std::vector<std::string>{};
      if (targets.empty()) continue;
    }

    if (suite == "jacobi" || suite == "hopf") {
      for (const auto& t : targets) {
        PresentationPtr p = s.presentation(t, k);
        bool tilde = t == "tilde";
        if (suite == "jacobi")
          tasks.push_back({"jacobi " + p->name(), [p, o] { return std::vector{check_jacobi(*p, o)}; }});
        else
          tasks.push_back({"hopf " + p->name(), [p, tilde, o] { return hopf_suite(p, tilde, o); }});
      }
      continue;
    }
    if (suite == "iso") {
      auto m = s.registry(k);
      tasks.push_back({"iso", [m, o] {
                         return std::vector{models::check_morphism_roundtrip(m->ba, m->ma, o),
                                            models::check_morphism_roundtrip(m->ma, m->ba, o),
                                            models::check_hopf_isomorphism(*m, o),
                                            models::check_w_plus_transport(*m, o)};
                       }});
      continue;
    }
    if (suite == "kinematical") {
      auto m = s.registry(k);
      tasks.push_back({"kinematical", [m, o] {
                         return std::vector{check_jacobi(*m->kinematical, o),
                                            models::check_lie_homomorphism(m->aa, o),
                                            models::check_lie_homomorphism(m->aa_inverse, o),
                                            models::check_morphism_roundtrip(m->aa, m->aa_inverse, o),
                                            models::check_morphism_roundtrip(m->aa_inverse, m->aa, o)};
                       }});
      continue;
    }
    if (suite == "classical") {
      auto m = s.registry(k);
      tasks.push_back({"classical", [m, o] { return std::vector{models::check_classical_limits(*m, o)}; }});
      continue;
    }
    if (suite == "mutation") {
      auto m = s.registry(k);
      tasks.push_back({"mutation", [m, o] { return std::vector{models::check_mutation_sweep(*m, o)}; }});
      continue;
    }
    const std::string& t = targets.front();
    if (suite == "bicross") {
      PresentationPtr p = s.presentation(t, k);
      tasks.push_back({"bicross " + p->name(), [p, k, o] {
                         bicross::CrossedProduct cp(k, p->algebra().options());
                         return std::vector{bicross::check_module_algebra(cp, *p, o),
                                            bicross::check_comodule_coalgebra(cp, o),
                                            bicross::check_action_coproduct_compat(cp, o),
                                            bicross::reconstruct(cp, *p, o)};
                       }});
    } else if (suite == "rmatrix") {
      PresentationPtr p = s.presentation(t, cfg.tensor_k());
      tasks.push_back({"rmatrix " + p->name(), [p, o] {
                         return std::vector{models::check_rmatrix_inverse(*p, o),
                                            models::check_intertwining(*p, o),
                                            models::check_triangularity(*p, o)};
                       }});
    } else if (suite == "qybe") {
      PresentationPtr p = s.presentation(t, cfg.tensor_k());
      tasks.push_back({"qybe " + p->name(), [p, o] { return std::vector{models::check_qybe(*p, o)}; }});
    } else if (suite == "casimir") {
      PresentationPtr p = s.presentation(t, k);
      PresentationPtr q = s.presentation(t, cfg.w2_k());
      tasks.push_back({"casimir M2 " + p->name(), [p, o] {
                         return std::vector{models::check_centrality(
                             "M2", models::mass_casimir(p->algebra()), *p, o)};
                       }});
      tasks.push_back({"casimir W2 " + q->name(), [q, o] {
                         return std::vector{models::check_centrality(
                             "W2", models::pl_square(q->algebra()), *q, o)};
                       }});
    }
  }
  return tasks;
}

std::vector<Outcome> execute(const std::vector<Task>& tasks, unsigned jobs, std::ostream& err) {
  std::vector<Outcome> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex log;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      {
        std::lock_guard lock(log);
        err << "[" << i + 1 << "/" << tasks.size() << "] " << tasks[i].label << " ..." << std::endl;
      }
      double t0 = seconds_now();
      try {
        results[i].reports = tasks[i].run();
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
      bool ok = results[i].error.empty();
      for (const auto& r : results[i].reports) ok = ok && r.pass;
      std::lock_guard lock(log);
      err << "[" << i + 1 << "/" << tasks.size() << "] " << tasks[i].label << ": "
          << (results[i].error.empty() ? (ok ? "pass" : "FAIL") : "ERROR") << " ("
          << std::fixed << std::setprecision(2) << seconds_now() - t0 << "s)" << std::endl;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

json config_json(const Config& cfg) {
  json c = {{"command", cfg.command},   {"order", cfg.order}, {"format", cfg.format},
            {"seed", cfg.seed},         {"fuel", cfg.fuel},   {"jobs", cfg.jobs},
            {"tensor_order", cfg.tensor_k()}, {"w2_order", cfg.w2_k()}};
  c["algebra"] = cfg.algebra.empty() ? json(nullptr) : json(cfg.algebra);
  c["suites"] = cfg.suites.empty() ? json::array({"all"}) : json(cfg.suites);
  return c;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  Session session(cfg);
  CheckOptions o;
  o.seed = cfg.seed;
  o.jobs = cfg.jobs;
  std::vector<Task> tasks = plan(session, cfg, o);
  double t0 = seconds_now();
  std::vector<Outcome> results = execute(tasks, cfg.jobs, err);
  double total = seconds_now() - t0;

  bool failed = false, errored = false;
  std::size_t count = 0, passed = 0;
  json checks = json::array(), timings = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Outcome& r = results[i];
    if (!r.error.empty()) {
      errored = true;
      checks.push_back({{"task", tasks[i].label}, {"error", r.error}});
      text << "ERROR " << tasks[i].label << ": " << r.error << "\n";
      continue;
    }
    for (const Report& rep : r.reports) {
      ++count;
      passed += rep.pass;
      failed = failed || !rep.pass;
      json j = {{"id", rep.id},       {"presentation", rep.presentation}, {"order", rep.order},
                {"pass", rep.pass},   {"cases", rep.cases},               {"failures", rep.failures},
                {"notes", rep.notes}};
      if (!rep.pass) {
        j["failed_case"] = rep.failed_case;
        j["witness"] = rep.witness;
      }
      checks.push_back(j);
      timings.push_back({{"id", rep.id}, {"presentation", rep.presentation}, {"seconds", rep.seconds}});
      text << (rep.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << rep.id << " "
           << std::setw(24) << rep.presentation << " K=" << std::setw(2) << rep.order << " "
           << std::right << std::setw(5) << rep.cases << " cases  " << std::fixed
           << std::setprecision(2) << rep.seconds << "s\n";
      if (!rep.pass) {
        text << "      first failing case: " << rep.failed_case << "\n";
        text << "      witness: " << rep.witness << "\n";
        if (rep.failures > 1) text << "      failing cases: " << rep.failures << "\n";
      }
      for (const auto& n : rep.notes) text << "      note: " << n << "\n";
    }
  }
  int code = errored ? kConfigError : failed ? kCheckFailed : kPass;
  if (cfg.format == "json") {
    json doc = {{"schema", kSchema},
                {"config", config_json(cfg)},
                {"checks", checks},
                {"pass", code == kPass},
                {"timings", {{"total_seconds", total}, {"checks", timings}}}};
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
    out << "summary: " << count << " checks, " << passed << " passed, " << count - passed
        << " failed" << (errored ? ", with errors" : "") << "\n";
  }
  return code;
}

// -------------------------------------------------------------- eval / map

void emit_value(const Config& cfg, const std::string& algebra, const std::string& value,
                std::ostream& out) {
  if (cfg.format == "json") {
    json doc = {{"schema", kSchema}, {"config", config_json(cfg)}, {"algebra", algebra},
                {"expr", cfg.expr},  {"value", value}};
    doc["config"].erase("suites");
    out << doc.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
}

int cmd_eval(const Config& cfg, std::ostream& out) {
  Session session(cfg);
  std::string sel = session.selection("bicross");
  SymbolTable symbols = session.symbols(sel);
  TensorElement v;
  try {
    v = evaluate_text(cfg.expr, symbols, cfg.order, [&](int k) -> const Algebra& {
      return session.presentation(sel, k)->algebra();
    });
  } catch (const ParseError& e) {
    throw ConfigError(describe(e, "expression"));
  }
  emit_value(cfg, sel, print_tensor(v, symbols.alphabet), out);
  return kPass;
}

using MorphismGetter = std::function<models::MorphismPtr(const models::ModelRegistry&)>;

std::vector<MorphismGetter> chain(const std::string& from, const std::string& to) {
  auto step = [](const std::string& a, const std::string& b) -> MorphismGetter {
    if (a == "bicross" && b == "tilde") return [](const models::ModelRegistry& m) { return m.ba; };
    if (a == "tilde" && b == "bicross") return [](const models::ModelRegistry& m) { return m.ma; };
    if (a == "classical" && b == "kinematical")
      return [](const models::ModelRegistry& m) { return m.aa; };
    if (a == "kinematical" && b == "classical")
      return [](const models::ModelRegistry& m) { return m.aa_inverse; };
    throw ConfigError("no map from '" + a + "' to '" + b + "'");
  };
  return {step(from, to)};
}

std::string partner(const std::string& from) {
  if (from == "bicross") return "tilde";
  if (from == "tilde") return "bicross";
  if (from == "classical") return "kinematical";
  if (from == "kinematical") return "classical";
  throw ConfigError("no round trip from '" + from + "'");
}

int cmd_map(const Config& cfg, std::ostream& out) {
  std::string from = cfg.from.empty() ? "bicross" : cfg.from;
  if (!is_builtin(from)) throw ConfigError("unknown algebra '" + from + "'");
  std::vector<MorphismGetter> steps;
  std::string to;
  if (cfg.roundtrip) {
    if (!cfg.to.empty()) throw ConfigError("--roundtrip and --to are exclusive");
    std::string mid = partner(from);
    steps = chain(from, mid);
    auto back = chain(mid, from);
    steps.insert(steps.end(), back.begin(), back.end());
    to = from;
  } else {
    if (cfg.to.empty()) throw ConfigError("map needs --to or --roundtrip");
    to = cfg.to;
    steps = chain(from, to);
  }
  Config plain = cfg;
  plain.algebra.clear();
  Session session(plain);
  SymbolTable symbols = session.symbols(from);
  ExprPtr e;
  try {
    e = parse_expression(cfg.expr, symbols);
  } catch (const ParseError& err) {
    throw ConfigError(describe(err, "expression"));
  }
  int extra = division_depth(*e, symbols);
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto reg = session.registry(cfg.order + extra);
    TensorElement v;
    try {
      v = evaluate(*e, session.presentation(from, cfg.order + extra)->algebra(), symbols);
    } catch (const ParseError& err) {
      throw ConfigError(describe(err, "expression"));
    }
    if (v.order() < cfg.order) {
      extra += cfg.order - v.order();
      continue;
    }
    for (const auto& get : steps) v = apply_morphism(*get(*reg), v);
    emit_value(cfg, to, print_tensor(v.truncated(cfg.order), session.symbols(to).alphabet), out);
    return kPass;
  }
  throw ConfigError("could not reach the requested order");
}

int cmd_list(const Config& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    json doc = {{"schema", kSchema}, {"algebras", kBuiltins}};
    doc["algebras"].push_back("file:PATH");
    json ss = json::array();
    for (const auto& info : suites()) ss.push_back({{"name", info.name}, {"description", info.description}});
    doc["suites"] = ss;
    doc["maps"] = {"bicross->tilde", "tilde->bicross", "classical->kinematical",
                   "kinematical->classical"};
    out << doc.dump(2) << "\n";
    return kPass;
  }
  out << "algebras:\n";
  for (const auto& a : kBuiltins) out << "  " << a << "\n";
  out << "  file:PATH\n\nsuites:\n";
  for (const auto& info : suites())
    out << "  " << std::left << std::setw(12) << info.name << " " << info.description << "\n";
  out << "\nmaps:\n  bicross -> tilde\n  tilde -> bicross\n  classical -> kinematical\n"
         "  kinematical -> classical\n";
  return kPass;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Symbolic verification of the null-plane quantum Poincare algebra", "hopfverify"};
  app.require_subcommand(1);

  int order = kDefaultOrder;
  int tensor_order = 0, w2_order = 0;
  std::vector<CLI::Option*> order_opts, tensor_opts, w2_opts;
  auto common = [&](CLI::App* sub) {
    order_opts.push_back(sub->add_option("--order", order, "Truncation order K (default 6, or HOPFVERIFY_ORDER)")
                             ->check(CLI::NonNegativeNumber));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--fuel", cfg.fuel, "Rewrite steps allowed per product")->check(CLI::PositiveNumber);
  };

  CLI::App* verify = app.add_subcommand("verify", "Run check suites");
  common(verify);
  verify->add_option("--algebra", cfg.algebra, "classical | tilde | bicross | kinematical | file:PATH");
  verify->add_option("--suite", cfg.suites, "Suite name, repeatable (default all)")->take_all();
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Seed for sampled products");
  tensor_opts.push_back(verify->add_option("--tensor-order", tensor_order,
                                           "Order for R-matrix and QYBE checks (default 4)")
                            ->check(CLI::NonNegativeNumber));
  w2_opts.push_back(verify->add_option("--w2-order", w2_order, "Order for W2 centrality (default 3)")
                        ->check(CLI::NonNegativeNumber));

  CLI::App* map = app.add_subcommand("map", "Apply a basis change to an expression");
  common(map);
  map->add_option("--from", cfg.from, "Source presentation (default bicross)");
  map->add_option("--to", cfg.to, "Target presentation");
  map->add_flag("--roundtrip", cfg.roundtrip, "Map to the partner basis and back");
  map->add_option("--expr", cfg.expr, "Expression")->required();

  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression in normal order");
  common(eval);
  eval->add_option("--algebra", cfg.algebra, "classical | tilde | bicross | kinematical | file:PATH");
  eval->add_option("--expr", cfg.expr, "Expression")->required();

  CLI::App* list = app.add_subcommand("list", "List presentations, suites and maps");
  list->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    for (auto* o : order_opts) cfg.order_explicit = cfg.order_explicit || o->count() > 0;
    if (cfg.order_explicit) {
      cfg.order = order;
    } else if (const char* env = std::getenv("HOPFVERIFY_ORDER")) {
      std::size_t used = 0;
      int k = -1;
      try {
        k = std::stoi(env, &used);
      } catch (const std::exception&) {
      }
      if (k < 0 || used != std::string(env).size())
        throw ConfigError(std::string("HOPFVERIFY_ORDER must be a non-negative integer, got '") +
                          env + "'");
      cfg.order = k;
    }
    for (auto* o : tensor_opts)
      if (o->count() > 0) cfg.tensor_order = tensor_order;
    for (auto* o : w2_opts)
      if (o->count() > 0) cfg.w2_order = w2_order;

    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
    if (map->parsed()) {
      cfg.command = "map";
      return cmd_map(cfg, out);
    }
    if (eval->parsed()) {
      cfg.command = "eval";
      return cmd_eval(cfg, out);
    }
    cfg.command = "list";
    return cmd_list(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

} // namespace hopfverify::cli
