#include "fuzcon/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fuzcon/analysis.hpp"
#include "fuzcon/catalog.hpp"
#include "fuzcon/errors.hpp"
#include "fuzcon/fuzzer.hpp"
#include "fuzcon/induction.hpp"

namespace fuzcon {

namespace {

using json = nlohmann::ordered_json;

class WriteFailure : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnknownName("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw WriteFailure("cannot write '" + tmp + "'");
    f << content;
    if (!f.flush()) throw WriteFailure("cannot write '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw WriteFailure("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

class Resolver {
 public:
  explicit Resolver(const NumericConfig& cfg) : cat_(load_catalog()), cfg_(cfg) {
    if (const char* extra = std::getenv("FUZCON_CATALOG"); extra && *extra) {
      extra_ = parse_definitions(read_file(extra));
    }
  }

  BinaryConnective binary(const std::string& ref, Kind role) const {
    if (!ref.empty() && ref[0] == '@') {
      const Definition& d = from_file(ref.substr(1), 2);
      return BinaryConnective::from_expr(d.name, role, d.expr, {}, "file " + ref.substr(1));
    }
    if (cat_.has_connective(ref)) {
      BinaryConnective b = cat_.connective(ref);
      bool ok = b.kind == role || (role == Kind::implication && b.kind == Kind::raw);
      if (!ok) {
        throw KindMismatch("'" + ref + "' is a " + to_string(b.kind) + ", expected " +
                           to_string(role));
      }
      return b;
    }
    for (const Definition& d : extra_) {
      if (d.name == ref && d.expr.arity() == 2) {
        return BinaryConnective::from_expr(d.name, role, d.expr, {}, "FUZCON_CATALOG");
      }
    }
    throw UnknownName("unknown connective '" + ref + "'");
  }

  /// Binary operand whose role is taken from the catalog (for nat: / ni:).
  BinaryConnective any_binary(const std::string& ref, Kind fallback) const {
    if (cat_.has_connective(ref)) return cat_.connective(ref);
    return binary(ref, fallback);
  }

  UnaryFunction unary(const std::string& ref) const {
    if (ref.rfind("nat:", 0) == 0) {
      BinaryConnective b = any_binary(ref.substr(4), Kind::conjunction);
      InducedNegation n = natural_negation(b, cfg_);
      return n.function;
    }
    if (ref.rfind("ni:", 0) == 0) {
      return section_at_zero(any_binary(ref.substr(3), Kind::implication));
    }
    if (!ref.empty() && ref[0] == '@') {
      const Definition& d = from_file(ref.substr(1), 1);
      return UnaryFunction::from_expr(d.name, d.expr, "file " + ref.substr(1));
    }
    if (cat_.has_function(ref)) return cat_.function(ref);
    for (const Definition& d : extra_) {
      if (d.name == ref && d.expr.arity() == 1) {
        return UnaryFunction::from_expr(d.name, d.expr, "FUZCON_CATALOG");
      }
    }
    throw UnknownName("unknown function '" + ref + "'");
  }

 private:
  const Definition& from_file(const std::string& spec, int arity) const {
    std::string path = spec, name;
    if (auto colon = spec.rfind(':'); colon != std::string::npos &&
                                      spec.find('/', colon) == std::string::npos) {
      path = spec.substr(0, colon);
      name = spec.substr(colon + 1);
    }
    files_.push_back(parse_definitions(read_file(path)));
    for (const Definition& d : files_.back()) {
      if ((name.empty() || d.name == name) && d.expr.arity() == arity) return d;
    }
    throw UnknownName("no " + std::to_string(arity) + "-ary definition" +
                      (name.empty() ? "" : " '" + name + "'") + " in '" + path + "'");
  }

  const Catalog& cat_;
  const NumericConfig& cfg_;
  std::vector<Definition> extra_;
  mutable std::vector<std::vector<Definition>> files_;
};

struct Args {
  std::string conjunction, disjunction, implication, negation, negation2;
  std::string config, out, law, theorem, which = "all";
  std::string target = "THM_3_1", kind = "conjunction", csv;
  std::vector<double> at;
  int grid = 0;
  bool commutative = false;
  std::uint64_t seed = 1;
  int budget = 100, m = 17, threads = 0;
  double theta = 0.5, discontinuity = 0.5;
};

Operands resolve(const Args& a, const Resolver& r) {
  Operands ops;
  if (!a.conjunction.empty()) ops.conjunction = r.binary(a.conjunction, Kind::conjunction);
  if (!a.disjunction.empty()) ops.disjunction = r.binary(a.disjunction, Kind::disjunction);
  if (!a.implication.empty()) ops.implication = r.binary(a.implication, Kind::implication);
  if (!a.negation.empty()) ops.negation = r.unary(a.negation);
  if (!a.negation2.empty()) ops.negation2 = r.unary(a.negation2);
  return ops;
}

json envelope(const std::string& command, const NumericConfig& cfg) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["config"] = to_json(cfg);
  return j;
}

json flag_json(const FlagVerdict& f) {
  json j;
  j["holds"] = f.holds;
  if (f.witness) {
    CheckResult tmp;
    tmp.witness = f.witness;
    j["witness"] = to_json(tmp)["witness"];
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

double max_error_1d(const UnaryFunction& a, const UnaryFunction& b, int n) {
  std::vector<double> extra = a.breakpoints;
  extra.insert(extra.end(), b.breakpoints.begin(), b.breakpoints.end());
  double worst = 0.0;
  for (double x : merge_points(uniform_grid(n), extra)) {
    worst = std::max(worst, std::abs(a(x) - b(x)));
  }
  return worst;
}

json table1(const NumericConfig& cfg, bool& match) {
  const Catalog& cat = load_catalog();
  json rows = json::array();
  for (const char* name :
       {"C_0", "C_1", "C_2", "C_3", "C_4", "C_5", "T_M", "T_P", "T_L", "T_D", "T_nM"}) {
    const Fixture& fx = *cat.find_fixture(name);
    InducedNegation n = natural_negation(fx.connective, cfg);
    const ExpectedNegation& e = *fx.expected_induced_negation;
    json row;
    row["name"] = name;
    row["expected"] = e.not_a_negation ? "NOT_A_NEGATION" : e.function->name;
    row["is_negation"] = n.is_negation;
    bool ok;
    if (e.not_a_negation) {
      ok = !n.is_negation;
      row["N(1)"] = n(1.0);
    } else {
      double err = max_error_1d(n.function, *e.function, 1001);
      row["max_error"] = err;
      ok = n.is_negation && err <= 1e-6;
    }
    row["match"] = ok;
    match = match && ok;
    rows.push_back(row);
  }
  return rows;
}

json table2(const NumericConfig& cfg, bool& match) {
  const Catalog& cat = load_catalog();
  json rows = json::array();
  for (const char* name : {"D_1", "D_2", "D_3", "D_4", "D_5", "D_6", "D_7"}) {
    const Fixture& fx = *cat.find_fixture(name);
    InducedNegation n = natural_negation(fx.connective, cfg);
    double nerr = max_error_1d(n.function, *fx.expected_induced_negation->function, 1001);
    BinaryConnective i = implication_from_dn(fx.connective, n.function, cfg);
    double ierr = sup_distance(i, *fx.expected_implication, 101);
    json row;
    row["name"] = name;
    row["negation"] = fx.expected_induced_negation->function->name;
    row["negation_error"] = nerr;
    row["implication"] = fx.expected_implication->name;
    row["implication_error"] = ierr;
    bool ok = n.is_negation && nerr <= 1e-6 && ierr <= 1e-6;
    row["match"] = ok;
    match = match && ok;
    rows.push_back(row);
  }
  return rows;
}

json table3(const NumericConfig& cfg, bool& match) {
  const Catalog& cat = load_catalog();
  json rows = json::array();
  for (const char* name : {"T3_F1", "T3_F2", "T3_F3", "T3_F4", "T3_F5", "T3_F6"}) {
    const Fixture& fx = *cat.find_fixture(name);
    json row;
    row["name"] = name;
    bool ok = true;
    for (const char* id : {"FI", "COND_4_7", "NF_CONTINUOUS"}) {
      bool got = compute_verdict(fx, id, cfg);
      row[id] = got;
      ok = ok && got == fx.expected_verdicts.at(id);
    }
    row["match"] = ok;
    match = match && ok;
    rows.push_back(row);
  }
  return rows;
}

Kind parse_kind(const std::string& s) {
  if (s == "conjunction") return Kind::conjunction;
  if (s == "disjunction") return Kind::disjunction;
  throw UnknownName("unknown kind '" + s + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fuzzy connectives workbench", "fuzcon"};
  app.require_subcommand(1);
  Args a;

  auto operands = [&](CLI::App* sub) {
    sub->add_option("--conjunction", a.conjunction, "conjunction reference");
    sub->add_option("--disjunction", a.disjunction, "disjunction reference");
    sub->add_option("--implication", a.implication, "implication reference");
    sub->add_option("--negation", a.negation, "negation reference");
    sub->add_option("--negation2", a.negation2, "second negation reference");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", a.config, "key=value overrides");
    sub->add_option("--out", a.out, "output file");
  };

  auto* eval = app.add_subcommand("eval", "evaluate an operand");
  operands(eval);
  common(eval);
  eval->add_option("--at", a.at, "point x or x,y")->delimiter(',');
  eval->add_option("--grid", a.grid, "CSV samples per axis");

  auto* induce = app.add_subcommand("induce", "natural negation of a conjunction/disjunction");
  operands(induce);
  common(induce);
  induce->add_option("--grid", a.grid, "CSV sample count");

  auto* classify = app.add_subcommand("classify", "classify a negation");
  operands(classify);
  common(classify);

  auto* check = app.add_subcommand("check", "check one law");
  operands(check);
  common(check);
  check->add_option("--law", a.law, "law id")->required();

  auto* verify = app.add_subcommand("verify", "verify one theorem");
  operands(verify);
  common(verify);
  verify->add_option("--theorem", a.theorem, "theorem id")->required();

  auto* tables = app.add_subcommand("tables", "reproduce the reference tables");
  common(tables);
  tables->add_option("--which", a.which, "1, 2, 3 or all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}));

  auto* roundtrip = app.add_subcommand("roundtrip", "I -> (D_I, N_I) -> I");
  operands(roundtrip);
  common(roundtrip);

  auto* fuzz = app.add_subcommand("fuzz", "counterexample search");
  common(fuzz);
  fuzz->add_option("--target", a.target, "law or theorem id");
  fuzz->add_option("--kind", a.kind, "conjunction or disjunction");
  fuzz->add_flag("--commutative", a.commutative);
  fuzz->add_option("--seed", a.seed, "first seed");
  fuzz->add_option("--budget", a.budget, "number of seeds")->check(CLI::PositiveNumber);
  fuzz->add_option("--m", a.m, "grid nodes per axis")->check(CLI::Range(2, 1025));
  fuzz->add_option("--threads", a.threads, "worker threads (0: all cores)");
  fuzz->add_option("--theta", a.theta, "threshold")->check(CLI::Range(0.0, 0.99));
  fuzz->add_option("--discontinuity", a.discontinuity, "mode probability")
      ->check(CLI::Range(0.0, 1.0));
  fuzz->add_option("--csv", a.csv, "grid CSV of the counterexample");

  auto* exportc = app.add_subcommand("export-catalog", "catalog as a definition file");
  common(exportc);

  std::vector<const char*> args(argv, argv + argc);
  try {
    app.parse(argc, const_cast<char**>(args.data()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    NumericConfig cfg;
    if (!a.config.empty()) cfg.apply_overrides(a.config);
    cfg.validate();

    auto emit = [&](const json& report) {
      std::string text = report.dump(2) + "\n";
      out << text;
      if (!a.out.empty()) write_atomic(a.out, text);
    };

    if (*exportc) {
      std::string text = load_catalog().export_definitions();
      if (a.out.empty()) {
        out << text;
      } else {
        write_atomic(a.out, text);
      }
      return kExitOk;
    }

    if (*tables) {
      json report = envelope("tables", cfg);
      bool match = true;
      if (a.which == "1" || a.which == "all") report["table1"] = table1(cfg, match);
      if (a.which == "2" || a.which == "all") report["table2"] = table2(cfg, match);
      if (a.which == "3" || a.which == "all") report["table3"] = table3(cfg, match);
      report["match"] = match;
      emit(report);
      return match ? kExitOk : kExitFailed;
    }

    if (*fuzz) {
      SearchOptions opt;
      opt.generator.m = a.m;
      opt.generator.kind = parse_kind(a.kind);
      opt.generator.commutative = a.commutative;
      opt.generator.theta = a.theta;
      opt.generator.discontinuity = a.discontinuity;
      opt.first_seed = a.seed;
      opt.budget = a.budget;
      opt.threads = a.threads;
      opt.config = cfg;
      auto found = search_counterexample(a.target, opt);
      json report = envelope("fuzz", cfg);
      report["target"] = a.target;
      report["kind"] = a.kind;
      report["commutative"] = a.commutative;
      report["m"] = a.m;
      report["first_seed"] = a.seed;
      report["budget"] = a.budget;
      report["found"] = found.has_value();
      if (found) {
        json c;
        c["seed"] = found->seed;
        c["mode"] = to_string(found->instance.mode);
        c["mode_params"] = found->instance.mode_params;
        c["result"] = to_json(found->result);
        report["counterexample"] = c;
        if (!a.csv.empty()) {
          std::ostringstream ss;
          write_grid_csv(found->instance.grid, ss);
          write_atomic(a.csv, ss.str());
        }
      } else {
        report["counterexample"] = nullptr;
      }
      emit(report);
      return found ? kExitFailed : kExitOk;
    }

    Resolver resolver(cfg);
    Operands ops = resolve(a, resolver);

    if (*eval) {
      std::vector<std::string> names = ops.names();
      if (names.size() != 1) throw UnknownName("eval needs exactly one operand");
      std::optional<BinaryConnective> b = ops.conjunction   ? ops.conjunction
                                          : ops.disjunction ? ops.disjunction
                                                            : ops.implication;
      std::optional<UnaryFunction> u = ops.negation ? ops.negation : ops.negation2;
      if (a.grid > 0) {
        if (a.grid < 2) throw ConfigError("--grid must be at least 2");
        std::ostringstream ss;
        if (b) {
          write_samples_csv(*b, a.grid, ss);
        } else {
          ss << "x,y,value\n";
          for (double x : uniform_grid(a.grid)) ss << fmt(x) << ",," << fmt((*u)(x)) << "\n";
        }
        if (a.out.empty()) {
          out << ss.str();
        } else {
          write_atomic(a.out, ss.str());
        }
        return kExitOk;
      }
      std::size_t need = b ? 2 : 1;
      if (a.at.size() != need) {
        throw ConfigError("--at needs " + std::to_string(need) + " coordinate(s)");
      }
      for (double v : a.at) {
        if (!(v >= 0.0 && v <= 1.0)) throw RangeError("--at coordinates must lie in [0,1]");
      }
      json report = envelope("eval", cfg);
      report["operand"] = names.front();
      report["point"] = a.at;
      report["value"] = b ? (*b)(a.at[0], a.at[1]) : (*u)(a.at[0]);
      emit(report);
      return kExitOk;
    }

    if (*induce) {
      std::optional<BinaryConnective> b = ops.conjunction ? ops.conjunction : ops.disjunction;
      UnaryFunction n;
      std::string source;
      bool is_negation = false;
      if (b) {
        InducedNegation in = natural_negation(*b, cfg);
        n = in.function;
        source = in.source;
        is_negation = in.is_negation;
      } else if (ops.implication) {
        n = section_at_zero(*ops.implication);
        source = ops.implication->name;
        is_negation = validate_negation(n, cfg).holds();
      } else {
        throw UnknownName("induce needs --conjunction, --disjunction or --implication");
      }
      CheckResult v = validate_negation(n, cfg);
      json report = envelope("induce", cfg);
      report["source"] = source;
      report["is_negation"] = is_negation;
      report["validation"] = to_json(v);
      if (!a.out.empty()) {
        int count = a.grid > 1 ? a.grid : 1001;
        std::ostringstream ss;
        ss << "x,y,value\n";
        for (double x : uniform_grid(count)) ss << fmt(x) << ",," << fmt(n(x)) << "\n";
        write_atomic(a.out, ss.str());
      }
      out << report.dump(2) << "\n";
      return is_negation && v.holds() ? kExitOk : kExitFailed;
    }

    if (*classify) {
      UnaryFunction n;
      if (ops.negation) {
        n = *ops.negation;
      } else if (ops.conjunction || ops.disjunction) {
        n = natural_negation(ops.conjunction ? *ops.conjunction : *ops.disjunction, cfg).function;
      } else if (ops.implication) {
        n = section_at_zero(*ops.implication);
      } else {
        throw UnknownName("classify needs an operand");
      }
      CheckResult v = validate_negation(n, cfg);
      NegationClassReport c = classify_negation(n, cfg);
      json report = envelope("classify", cfg);
      report["operand"] = n.name;
      report["validation"] = to_json(v);
      json flags;
      flags["non_increasing"] = flag_json(c.non_increasing);
      flags["continuous"] = flag_json(c.continuous);
      flags["left_continuous"] = flag_json(c.left_continuous);
      flags["right_continuous"] = flag_json(c.right_continuous);
      flags["strictly_decreasing"] = flag_json(c.strictly_decreasing);
      flags["strict"] = flag_json(c.strict);
      flags["strong"] = flag_json(c.strong);
      report["flags"] = flags;
      report["max_involution_error"] = c.max_involution_error;
      report["consistent"] = c.consistent();
      emit(report);
      return v.holds() && c.consistent() ? kExitOk : kExitFailed;
    }

    CheckResult r;
    std::string command;
    if (*check) {
      command = "check";
      r = check_law(a.law, ops, cfg);
    } else if (*verify) {
      command = "verify";
      r = verify_theorem(a.theorem, ops, cfg);
    } else {
      command = "roundtrip";
      r = verify_theorem("THM_4_1", ops, cfg);
    }
    json report = to_json(r);
    report["command"] = command;
    emit(report);
    return r.holds() ? kExitOk : kExitFailed;
  } catch (const SyntaxError& e) {
    err << "fuzcon: parse failure: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "fuzcon: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "fuzcon: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace fuzcon
