#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modkperm/counting.hpp"
#include "modkperm/modk.hpp"
#include "modkperm/sef.hpp"
#include "modkperm/series.hpp"
#include "modkperm/text.hpp"
#include "modkperm/verify.hpp"

namespace modkperm::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ClassFlags {
  int n = 0;
  int k = 1;
  int r = 1;
  std::string avoid;
  bool catalan = false;
};

void add_class_flags(CLI::App* cmd, ClassFlags& f) {
  cmd->add_option("--n", f.n, "Length n")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--k", f.k, "Modulus k")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--r", f.r, "Remainder r in 1..k")->check(CLI::PositiveNumber);
  cmd->add_option("--avoid", f.avoid, "One or two length-3 patterns, e.g. 132 or 132,213");
  cmd->add_flag("--catalan", f.catalan, "Catalan words of MP_C(n,k) instead of permutations");
}

std::vector<Pattern> parse_patterns(const std::string& text) {
  std::vector<Pattern> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string word;
  const auto& allowed = length3_patterns();
  while (std::getline(ss, word, ',')) {
    auto it = std::find_if(allowed.begin(), allowed.end(), [&](const Pattern& p) { return p.word() == word; });
    if (it == allowed.end()) throw UsageError("--avoid: '" + word + "' is not one of 123,132,213,231,312,321");
    if (std::find(out.begin(), out.end(), *it) != out.end()) throw UsageError("--avoid: repeated pattern " + word);
    out.push_back(*it);
  }
  if (out.size() > 2) throw UsageError("--avoid takes one or two patterns");
  return out;
}

struct Request {
  ModKClass cls;
  std::vector<Pattern> patterns;
  bool catalan = false;
};

Request make_request(const ClassFlags& f) {
  Request req{{f.n, f.k, f.r}, parse_patterns(f.avoid), f.catalan};
  if (f.r > f.k) throw UsageError("--r must lie in 1..k");
  if (req.catalan && (!req.patterns.empty() || f.r != 1)) throw UsageError("--catalan takes neither --avoid nor --r");
  return req;
}

std::string describe(const Request& req) {
  std::string s = "n=" + std::to_string(req.cls.n) + ", k=" + std::to_string(req.cls.k) + ", r=" + std::to_string(req.cls.r);
  for (const auto& p : req.patterns) s += ", avoid " + p.word();
  return s;
}

BigCount closed_count(const Request& req) {
  const auto n = static_cast<unsigned>(req.cls.n);
  const auto k = static_cast<unsigned>(req.cls.k);
  if (req.catalan) return count_mp_c_closed(n, k);
  switch (req.patterns.size()) {
    case 0: return count_mp(req.cls.n, req.cls.k, req.cls.r);
    case 1: return mp_single_count(n, k, static_cast<unsigned>(req.cls.r), req.patterns[0]);
    default: break;
  }
  if (req.cls.r != 1) throw UncoveredFormula("no proved pair formula for " + describe(req) + " (pairs cover r = 1)");
  auto res = pair_count(n, k, req.patterns[0], req.patterns[1]);
  if (res.status == FormulaStatus::brute_force_only) {
    throw UncoveredFormula("no proved pair formula for " + describe(req) + " (case " + std::string(1, res.table_case) + ")");
  }
  return res.value;
}

BigCount brute_count(const Request& req) {
  if (req.catalan) {
    BigCount c = 0;
    for (const auto& w : generate_mp_c(req.cls.n, req.cls.k)) {
      (void)w;
      ++c;
    }
    return c;
  }
  return count_brute(AvoidanceQuery{req.cls, req.patterns});
}

BigCount best_count(const Request& req) {
  try {
    return closed_count(req);
  } catch (const UncoveredFormula&) {
    return brute_count(req);
  }
}

// ---------------------------------------------------------------- count

struct CountFlags {
  ClassFlags cls;
  bool closed = false;
  bool brute = false;
  bool both = false;
};

void setup_count(CLI::App& app, CountFlags& f) {
  auto* cmd = app.add_subcommand("count", "Count a class, by closed form or exhaustive search");
  add_class_flags(cmd, f.cls);
  auto* c = cmd->add_flag("--closed", f.closed, "Closed form only; exit 3 when none is proved");
  auto* b = cmd->add_flag("--brute", f.brute, "Exhaustive search only");
  auto* both = cmd->add_flag("--both", f.both, "Print 'closed / brute'; exit 1 on mismatch");
  c->excludes(b)->excludes(both);
  b->excludes(both);
}

int run_count(const CountFlags& f, std::ostream& out, std::ostream& err) {
  const auto req = make_request(f.cls);
  if (f.closed) {
    out << to_string(closed_count(req)) << '\n';
  } else if (f.brute) {
    out << to_string(brute_count(req)) << '\n';
  } else if (f.both) {
    const auto closed = closed_count(req);
    const auto brute = brute_count(req);
    out << to_string(closed) << " / " << to_string(brute) << '\n';
    if (closed != brute) {
      err << "mismatch for " << describe(req) << '\n';
      return verification_failure;
    }
  } else {
    out << to_string(best_count(req)) << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------- list

struct ListFlags {
  ClassFlags cls;
  std::string format = "plain";
  long long limit = 1'000'000;
  bool force = false;
};

void setup_list(CLI::App& app, ListFlags& f) {
  auto* cmd = app.add_subcommand("list", "List a class in lexicographic order");
  add_class_flags(cmd, f.cls);
  cmd->add_option("--format", f.format, "plain or jsonl")->check(CLI::IsMember({"plain", "jsonl"}));
  cmd->add_option("--limit", f.limit, "Refuse classes larger than this")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--force", f.force, "List regardless of --limit");
}

void emit(std::span<const int> v, bool bracketed, const std::string& format, std::ostream& out) {
  if (format == "jsonl") {
    out << nlohmann::json(std::vector<int>(v.begin(), v.end())).dump() << '\n';
  } else if (bracketed) {
    out << '[' << join(v) << "]\n";
  } else {
    out << join(v) << '\n';
  }
}

int run_list(const ListFlags& f, std::ostream& out, std::ostream& err) {
  const auto req = make_request(f.cls);
  if (!f.force) {
    const BigCount limit = static_cast<long>(f.limit);
    const BigCount bound = req.catalan ? count_mp_c_closed(static_cast<unsigned>(req.cls.n), static_cast<unsigned>(req.cls.k))
                                       : count_mp(req.cls.n, req.cls.k, req.cls.r);
    if (bound > limit) {
      const auto size = best_count(req);
      if (size > limit) {
        err << "class of " << describe(req) << " has " << to_string(size) << " elements, above --limit " << f.limit
            << "; pass --force to list anyway\n";
        return usage_error;
      }
    }
  }
  if (req.catalan) {
    for (const auto& w : generate_mp_c(req.cls.n, req.cls.k)) emit(w.values(), false, f.format, out);
  } else {
    for (const auto& pi : generate(AvoidanceQuery{req.cls, req.patterns})) emit(pi.entries(), true, f.format, out);
  }
  return ok;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  std::string suite;
  int max_n = -1;
  int max_k = -1;
};

void setup_verify(CLI::App& app, VerifyFlags& f) {
  auto* cmd = app.add_subcommand("verify", "Run an invariant suite and report each check");
  cmd->add_option("--suite", f.suite, "core, modk, counting, sef, series, table2, remarks or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  cmd->add_option("--max-n", f.max_n, "Override the largest n of every range")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-k", f.max_k, "Override the largest k of every range")->check(CLI::PositiveNumber);
}

int run_verify(const VerifyFlags& f, std::ostream& out, std::ostream&) {
  VerifyConfig config;
  if (f.max_n >= 0) config.max_n = f.max_n;
  if (f.max_k >= 1) config.max_k = f.max_k;
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_suite(f.suite, config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << format_check(r) << '\n';
    passed += r.passed;
  }
  std::ostringstream summary;
  summary.precision(2);
  summary << std::fixed << "suite " << f.suite << ": " << passed << "/" << results.size() << " checks passed (" << secs
          << " s)";
  out << summary.str() << '\n';
  return passed == results.size() ? ok : verification_failure;
}

// ---------------------------------------------------------------- sequence

struct SequenceFlags {
  std::string family;
  std::string params;
  int terms = 10;
  std::string format = "bfile";
};

void setup_sequence(CLI::App& app, SequenceFlags& f) {
  auto* cmd = app.add_subcommand("sequence", "Print terms n = 1..T of a counting sequence");
  cmd->add_option("--family", f.family, "fuss, raney, a_k, mp, mp_c, pair, remark123 or remark321")
      ->required()
      ->check(CLI::IsMember({"fuss", "raney", "a_k", "mp", "mp_c", "pair", "remark123", "remark321"}));
  cmd->add_option("--params", f.params, "Comma-separated key=value pairs, e.g. p=3 or k=2,sigma=132,tau=213");
  cmd->add_option("--terms", f.terms, "Number of terms T")->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "bfile or csv")->check(CLI::IsMember({"bfile", "csv"}));
}

class Params {
 public:
  Params(const std::string& family, const std::string& text) : family_(family) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--params: expected key=value, got '" + item + "'");
      values_[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }

  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [key, value] : values_) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
        throw UsageError("family " + family_ + " takes no parameter '" + key + "'");
      }
    }
  }

  bool has(const std::string& key) const { return values_.contains(key); }

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt, int min = 1) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
      if (fallback) return *fallback;
      throw UsageError("family " + family_ + " needs parameter " + key);
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec != std::errc{} || ptr != it->second.data() + it->second.size() || v < min) {
      throw UsageError("parameter " + key + " must be an integer >= " + std::to_string(min));
    }
    return v;
  }

  Pattern pattern(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw UsageError("family " + family_ + " needs parameter " + key);
    return parse_patterns(it->second).at(0);
  }

 private:
  std::string family_;
  std::map<std::string, std::string> values_;
};

std::vector<BigCount> sequence_terms(const SequenceFlags& f) {
  const Params params(f.family, f.params);
  const auto t = static_cast<unsigned>(f.terms);
  std::vector<BigCount> out;
  auto fill = [&](auto term) {
    for (unsigned n = 1; n <= t; ++n) out.push_back(term(n));
  };
  if (f.family == "fuss") {
    params.allow({"p"});
    const auto p = static_cast<unsigned>(params.integer("p"));
    fill([&](unsigned n) { return fuss_catalan(n, p); });
  } else if (f.family == "raney") {
    params.allow({"p", "r"});
    const auto p = static_cast<unsigned>(params.integer("p"));
    const auto r = static_cast<unsigned>(params.integer("r"));
    fill([&](unsigned n) { return raney(n, p, r); });
  } else if (f.family == "a_k" || f.family == "mp_c") {
    params.allow({"k"});
    const auto k = static_cast<unsigned>(params.integer("k"));
    fill([&](unsigned n) { return a_k_closed(n, k); });
  } else if (f.family == "mp") {
    params.allow({"k", "r", "sigma"});
    const int k = params.integer("k");
    const int r = params.integer("r", 1);
    if (r > k) throw UsageError("parameter r must lie in 1..k");
    std::vector<Pattern> pats;
    if (params.has("sigma")) pats.push_back(params.pattern("sigma"));
    fill([&](unsigned n) { return best_count(Request{{static_cast<int>(n), k, r}, pats, false}); });
  } else if (f.family == "pair") {
    params.allow({"k", "sigma", "tau"});
    const auto k = static_cast<unsigned>(params.integer("k"));
    const auto sigma = params.pattern("sigma");
    const auto tau = params.pattern("tau");
    if (sigma == tau) throw UsageError("sigma and tau must differ");
    fill([&](unsigned n) { return pair_count(n, k, sigma, tau).value; });
  } else {
    params.allow({});
    out = remark_sequence(Pattern::parse(f.family == "remark123" ? "123" : "321"), f.terms);
  }
  return out;
}

int run_sequence(const SequenceFlags& f, std::ostream& out, std::ostream&) {
  const auto terms = sequence_terms(f);
  if (f.format == "csv") out << "n,value\n";
  const char sep = f.format == "csv" ? ',' : ' ';
  for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << sep << to_string(terms[i]) << '\n';
  return ok;
}

// ---------------------------------------------------------------- series

struct SeriesFlags {
  std::string kind;
  int p = -1;
  int k = -1;
  int j = -1;
  int order = 8;
};

void setup_series(CLI::App& app, SeriesFlags& f) {
  auto* cmd = app.add_subcommand("series", "Print a generating function or run the Lagrange check");
  cmd->add_option("--kind", f.kind, "fuss, A, B, F, phi or lagrange")
      ->required()
      ->check(CLI::IsMember({"fuss", "A", "B", "F", "phi", "lagrange"}));
  cmd->add_option("--p", f.p, "Fuss parameter p")->check(CLI::PositiveNumber);
  cmd->add_option("--k", f.k, "k")->check(CLI::PositiveNumber);
  cmd->add_option("--j", f.j, "j")->check(CLI::NonNegativeNumber);
  cmd->add_option("--order", f.order, "Truncation order")->check(CLI::PositiveNumber);
}

int run_series(const SeriesFlags& f, std::ostream& out, std::ostream& err) {
  auto need = [&](int v, const char* name) {
    if (v < 0) throw UsageError("--kind " + f.kind + " needs --" + name);
    return static_cast<unsigned>(v);
  };
  if (f.kind == "fuss") {
    out << solve_fuss_series(need(f.p, "p"), f.order).render("z") << '\n';
    return ok;
  }
  const unsigned k = need(f.k, "k");
  if (f.kind == "A") {
    out << build_A_B(k, 0, f.order).first.render("t") << '\n';
    return ok;
  }
  const unsigned j = need(f.j, "j");
  if (j > k) throw UsageError("--j must not exceed --k");
  if (f.kind == "B") {
    out << build_A_B(k, j, f.order).second.render("t") << '\n';
    return ok;
  }
  if (f.kind == "phi") {
    out << lagrange_phi(k, j).render("x") << '\n';
    return ok;
  }
  if (j == k) throw UsageError("--kind " + f.kind + " needs j < k");
  if (f.kind == "F") {
    Rational e(k + 1, j + 1);
    e.canonicalize();
    const Rational span = Rational(f.order - 1) / e;
    const long terms = mpz_class(span.get_num() / span.get_den()).get_si() + 1;
    const auto b = build_A_B(k, j, terms).second;
    out << (PuiseuxSeries::monomial(1, 1) * substitute_monomial(b, e)).truncated(f.order).render("s") << '\n';
    return ok;
  }
  const auto report = lagrange_check(k, j, f.order);
  out << "lagrange_check(k=" << k << ", j=" << j << ", order " << f.order << "): "
      << (report.passed ? "PASS" : "FAIL") << " (" << report.checked << " exponents)\n";
  if (!report.passed) {
    err << "first disagreement at r = " << to_string(*report.first_failure) << '\n';
    return verification_failure;
  }
  return ok;
}

// ---------------------------------------------------------------- bijection

struct BijectionFlags {
  std::string name;
  std::string input;
};

void setup_bijection(CLI::App& app, BijectionFlags& f) {
  auto* cmd = app.add_subcommand("bijection", "Apply a bijection to one object");
  cmd->add_option("--name", f.name, "sef, dyck, revflip or inverse")
      ->required()
      ->check(CLI::IsMember({"sef", "dyck", "revflip", "inverse"}));
  cmd->add_option("--input", f.input, "Permutation, SEF, Dyck path or area sequence")->required();
}

int run_bijection(const BijectionFlags& f, std::ostream& out, std::ostream&) {
  const bool bracketed = !f.input.empty() && f.input.front() == '[';
  auto print = [&](const Permutation& pi, bool brackets) {
    out << (brackets ? to_string(pi) : join(pi.entries())) << '\n';
  };
  if (f.name == "sef") {
    if (bracketed) {
      out << to_string(perm_to_sef(parse_permutation(f.input))) << '\n';
    } else {
      print(sef_to_perm(parse_sef(f.input)), true);
    }
  } else if (f.name == "dyck") {
    if (!f.input.empty() && f.input.find_first_not_of("ne") == std::string::npos) {
      out << to_string(dyck_to_area(DyckPath(f.input))) << '\n';
    } else {
      out << area_to_dyck(AreaSequence(parse_int_list(f.input))).str() << '\n';
    }
  } else if (f.name == "revflip") {
    print(revflip(parse_permutation(f.input)), bracketed);
  } else {
    print(inverse(parse_permutation(f.input)), bracketed);
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mod-k-alternating permutations: counting, listing and verification", "modkperm"};
  app.require_subcommand(1);

  CountFlags count;
  ListFlags list;
  VerifyFlags verify;
  SequenceFlags sequence;
  SeriesFlags series;
  BijectionFlags bijection;
  setup_count(app, count);
  setup_list(app, list);
  setup_verify(app, verify);
  setup_sequence(app, sequence);
  setup_series(app, series);
  setup_bijection(app, bijection);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "count") return run_count(count, out, err);
    if (cmd == "list") return run_list(list, out, err);
    if (cmd == "verify") return run_verify(verify, out, err);
    if (cmd == "sequence") return run_sequence(sequence, out, err);
    if (cmd == "series") return run_series(series, out, err);
    return run_bijection(bijection, out, err);
  } catch (const UncoveredFormula& e) {
    err << "uncovered: " << e.what() << '\n';
    return uncovered_formula;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace modkperm::cli
