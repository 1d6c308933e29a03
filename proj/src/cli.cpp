// Copyright 2026 The fuzzy-aura Authors
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

#include "faura/cli.hpp"

#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "faura/error.hpp"
#include "faura/io.hpp"
#include "faura/repro.hpp"

#ifndef FAURA_DATA_DIR
#define FAURA_DATA_DIR "paper-data"
#endif

namespace faura::cli {
namespace {

using io::Json;

enum class Format { table, json, csv };

struct Options {
  Format format = Format::table;
  double alpha = 0.5;
  bool strict = false;
  std::string space;
  std::string target_space;
  std::string set;
  std::string map;
  std::string problem;
  std::string matrix_csv;
  std::string classes_csv;
  std::vector<double> weights;
  std::vector<std::string> cost;
  std::string scenarios;
  std::vector<double> alphas;
  std::string iterations = "1";
  bool compare = false;
  std::string data_dir = FAURA_DATA_DIR;
  std::optional<double> tolerance;
  std::vector<std::string> tables;
};

/// Raised for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string full(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}},
          CLI::ignore_case));
  sub->add_flag("--strict", o.strict, "Require every aura to be a member of the topology");
}

AuraSpace load_space(const std::string& path, const Options& o) {
  return io::parse_space(io::read_json_file(path), o.strict);
}

FuzzySet load_set(const std::string& path, const Universe& u) {
  return io::parse_fuzzy_set(io::read_json_file(path), u);
}

void emit_set(std::ostream& out, const Options& o, const std::string& label, const FuzzySet& mu) {
  switch (o.format) {
    case Format::json: {
      Json j = io::to_json(mu);
      out << io::dump(j) << '\n';
      break;
    }
    case Format::csv:
      out << "point," << label << '\n';
      for (std::size_t i = 0; i < mu.size(); ++i) {
        out << mu.universe().name(i) << ',' << full(mu[i]) << '\n';
      }
      break;
    case Format::table:
      out << label << ": " << mu << '\n';
      break;
  }
}

// Flat name/value output for profiles and verdicts.
void emit_flags(std::ostream& out, const Options& o, const Json& j) {
  if (o.format == Format::json) {
    out << io::dump(j) << '\n';
    return;
  }
  if (o.format == Format::csv) out << "property,value\n";
  for (const auto& [key, value] : j.items()) {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (o.format == Format::csv) {
      out << key << ',' << text << '\n';
    } else {
      out << std::left << std::setw(20) << key << text << '\n';
    }
  }
}

int check_space(const Options& o, std::ostream& out) {
  const Json json = io::read_json_file(o.space);
  // Verify the listed family first so a non-topology is reported, not thrown.
  try {
    const auto& top = json.at("topology");
    if (!top.value("discrete", false)) {
      Universe u(json.at("universe").get<std::vector<std::string>>());
      std::vector<FuzzySet> members;
      for (const auto& row : top.at("members")) {
        members.emplace_back(u, row.get<std::vector<Grade>>());
      }
      auto verdict = verify_axioms(members);
      if (!verdict.ok()) {
        const auto& v = *verdict.violation;
        Json j;
        j["valid"] = false;
        j["violation"] = v.describe();
        j["missing"] = io::to_json(v.missing)["grades"];
        emit_flags(out, o, j);
        return 1;
      }
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed aura space: ") + e.what());
  }
  auto space = io::parse_space(json, o.strict);
  Json j;
  j["valid"] = true;
  j["points"] = space.universe().size();
  j["members"] = space.topology().is_discrete() ? Json("discrete")
                                                : Json(space.topology().members().size());
  j["mode"] = space.mode() == ValidationMode::strict ? "strict" : "lenient";
  const Json scope = io::to_json(classify_scope(space));
  for (const auto& [k, v] : scope.items()) j["scope_" + k] = v;
  emit_flags(out, o, j);
  return 0;
}

int closure_cmd(const Options& o, std::ostream& out) {
  auto space = load_space(o.space, o);
  auto mu = load_set(o.set, space.universe());
  if (!o.compare) {
    emit_set(out, o, "aura closure", aura_closure(space, mu));
    return 0;
  }
  auto cmp = closure_comparison(space, mu);
  if (o.format == Format::json) {
    Json j;
    j["aura"] = io::to_json(cmp.aura)["grades"];
    j["topological"] = io::to_json(cmp.topological)["grades"];
    j["dominated"] = cmp.dominated;
    j["all_dominated"] = cmp.all_dominated();
    out << io::dump(j) << '\n';
  } else if (o.format == Format::csv) {
    out << "point,aura,topological,dominated\n";
    for (std::size_t i = 0; i < mu.size(); ++i) {
      out << mu.universe().name(i) << ',' << full(cmp.aura[i]) << ','
          << full(cmp.topological[i]) << ',' << (cmp.dominated[i] ? "true" : "false") << '\n';
    }
  } else {
    out << "aura closure: " << cmp.aura << '\n'
        << "topological closure: " << cmp.topological << '\n'
        << "topological <= aura: " << (cmp.all_dominated() ? "yes" : "no") << '\n';
  }
  return 0;
}

int interior_cmd(const Options& o, std::ostream& out) {
  auto space = load_space(o.space, o);
  emit_set(out, o, "aura interior", aura_interior(space, load_set(o.set, space.universe())));
  return 0;
}

int iterate_cmd(const Options& o, std::ostream& out) {
  auto space = load_space(o.space, o);
  auto mu = load_set(o.set, space.universe());
  if (o.iterations == "inf") {
    emit_set(out, o, "closure fixpoint", closure_fixpoint(space.scope(), mu));
    return 0;
  }
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    long long v = std::stoll(o.iterations, &used);
    if (used != o.iterations.size() || v < 0) throw std::invalid_argument(o.iterations);
    n = static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw UsageError("--n must be a non-negative integer or 'inf'");
  }
  emit_set(out, o, "closure^" + o.iterations, iterated_closure(space.scope(), mu, n));
  return 0;
}

int aura_topology_cmd(const Options& o, std::ostream& out) {
  auto space = load_space(o.space, o);
  auto top = aura_topology(space);
  if (o.format == Format::json) {
    out << io::dump(io::to_json(top)) << '\n';
    return 0;
  }
  const auto& u = space.universe();
  if (o.format == Format::csv) {
    for (std::size_t i = 0; i < u.size(); ++i) out << (i ? "," : "") << u.name(i);
    out << '\n';
    for (const auto& m : top.members()) {
      for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << full(m[i]);
      out << '\n';
    }
    return 0;
  }
  out << top.members().size() << " aura-open members\n";
  for (const auto& m : top.members()) out << "  " << m << '\n';
  return 0;
}

int openness_cmd(const Options& o, std::ostream& out) {
  auto space = load_space(o.space, o);
  auto profile = openness_profile(space, load_set(o.set, space.universe()));
  Json j = io::to_json(profile);
  auto violation = hierarchy_violation(profile);
  j["hierarchy"] = violation ? *violation : "consistent";
  emit_flags(out, o, j);
  return 0;
}

int continuity_cmd(const Options& o, std::ostream& out) {
  auto source = load_space(o.space, o);
  auto target = load_space(o.target_space, o);
  auto f = io::parse_point_map(io::read_json_file(o.map));
  require_same_universe(f.source(), source.universe(), "map source");
  require_same_universe(f.target(), target.universe(), "map target");
  auto profile = continuity_profile(f, source, target);
  Json j = io::to_json(profile);
  j["chain"] = to_string(continuity_chain_check(profile).status);
  j["decomposition"] = to_string(decomposition_check(f, source, target).status);
  emit_flags(out, o, j);
  return 0;
}

int separation_cmd(const Options& o, std::ostream& out) {
  auto space = load_space(o.space, o);
  auto profile = separation_profile(space);
  if (o.format == Format::json) {
    out << io::dump(io::to_json(profile, space.universe())) << '\n';
    return 0;
  }
  auto flag = [](const std::optional<SeparationAxiom>& a) -> Json {
    return a ? Json(a->holds) : Json("n/a");
  };
  Json j;
  j["t0"] = flag(profile.t0);
  j["t1"] = profile.t1_holds();
  j["t2"] = flag(profile.t2);
  j["regular"] = profile.regular ? Json(*profile.regular) : Json("n/a");
  j["t1_scope_criterion"] = profile.t1_scope_criterion;
  emit_flags(out, o, j);
  return 0;
}

int rough_cmd(const Options& o, std::ostream& out) {
  auto space = load_space(o.space, o);
  auto mu = load_set(o.set, space.universe());
  auto pair = approximate(space, mu);
  auto acc = accuracy(pair);
  if (o.format == Format::json) {
    out << io::dump(io::to_json(pair, acc)) << '\n';
  } else if (o.format == Format::csv) {
    out << "point,lower,upper,boundary\n";
    for (std::size_t i = 0; i < mu.size(); ++i) {
      out << mu.universe().name(i) << ',' << full(pair.lower[i]) << ',' << full(pair.upper[i])
          << ',' << full(pair.boundary[i]) << '\n';
    }
  } else {
    out << "lower:    " << pair.lower << '\n'
        << "upper:    " << pair.upper << '\n'
        << "boundary: " << pair.boundary << '\n'
        << "accuracy: " << acc.rho << '\n'
        << "roughness: " << acc.sigma << '\n';
  }
  return 0;
}

mcdm::DecisionProblem load_problem(const Options& o) {
  const bool csv = !o.matrix_csv.empty() || !o.classes_csv.empty();
  if (csv == !o.problem.empty()) {
    throw UsageError("give either --problem or both --matrix-csv and --classes-csv");
  }
  if (!csv) {
    if (!o.weights.empty() || !o.cost.empty()) {
      throw UsageError("--weights and --cost apply to CSV input only");
    }
    return io::parse_problem(io::read_json_file(o.problem));
  }
  if (o.matrix_csv.empty() || o.classes_csv.empty()) {
    throw UsageError("CSV input needs both --matrix-csv and --classes-csv");
  }
  std::optional<std::vector<Grade>> weights;
  if (!o.weights.empty()) weights = o.weights;
  return io::load_problem_csv(o.matrix_csv, o.classes_csv, weights, o.cost);
}

std::vector<std::string> class_names(const mcdm::DecisionProblem& p) {
  std::vector<std::string> out;
  for (const auto& c : p.classes) out.push_back(c.name);
  return out;
}

std::string decision_name(const mcdm::Assignment& a, const mcdm::DecisionProblem& p) {
  return a.decision ? p.classes[*a.decision].name : "Undetermined";
}

void print_assignments(std::ostream& out, const mcdm::DecisionProblem& p,
                       const std::vector<mcdm::Assignment>& assignments) {
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    out << std::left << std::setw(8) << p.alternatives.name(i) << std::right
        << decision_name(assignments[i], p);
    if (assignments[i].tie) out << " (tie)";
    if (!p.reference.empty() && p.reference[i]) {
      out << (decision_name(assignments[i], p) == *p.reference[i] ? "  [matches reference]"
                                                                  : "  [reference: " +
                                                                        *p.reference[i] + "]");
    }
    out << '\n';
  }
}

int mcdm_run_cmd(const Options& o, std::ostream& out) {
  auto problem = load_problem(o);
  auto result = mcdm::run(problem, o.alpha);
  if (o.format == Format::json) {
    out << io::dump(io::to_json(result, problem)) << '\n';
    return 0;
  }
  const auto classes = class_names(problem);
  if (o.format == Format::csv) {
    out << "alternative";
    for (const auto& c : classes) out << ',' << c;
    out << ",classification,tie\n";
    for (std::size_t i = 0; i < result.scores.rows(); ++i) {
      out << problem.alternatives.name(i);
      for (double s : result.scores.row(i)) out << ',' << full(s);
      out << ',' << decision_name(result.assignments[i], problem) << ','
          << (result.assignments[i].tie ? "true" : "false") << '\n';
    }
    return 0;
  }
  const std::vector<std::string> alts(problem.alternatives.points().begin(),
                                      problem.alternatives.points().end());
  mcdm::Matrix aura(alts.size(), alts.size());
  for (std::size_t x = 0; x < alts.size(); ++x) {
    for (std::size_t y = 0; y < alts.size(); ++y) aura(x, y) = result.aura(x, y);
  }
  mcdm::Matrix upper(alts.size(), classes.size()), lower(alts.size(), classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (std::size_t i = 0; i < alts.size(); ++i) {
      upper(i, k) = result.approximations[k].upper[i];
      lower(i, k) = result.approximations[k].lower[i];
    }
  }
  repro::print_table(out, "Fuzzy aura similarity matrix", alts, alts, aura, 2);
  out << '\n';
  repro::print_table(out, "Upper approximation", alts, classes, upper, 2);
  out << '\n';
  repro::print_table(out, "Lower approximation", alts, classes, lower, 2);
  out << '\n';
  std::ostringstream title;
  title << "Scores (alpha = " << result.alpha << ")";
  repro::print_table(out, title.str(), alts, classes, result.scores, 3);
  out << '\n' << "Classification\n";
  print_assignments(out, problem, result.assignments);
  auto agreement = mcdm::reference_agreement(problem, result.assignments);
  if (agreement.total > 0) {
    out << "reference agreement: " << agreement.correct << '/' << agreement.total << '\n';
  }
  out << "global accuracy: " << std::fixed << std::setprecision(4) << result.global_accuracy
      << std::defaultfloat << '\n';
  return 0;
}

int mcdm_sensitivity_cmd(const Options& o, std::ostream& out) {
  if (o.scenarios.empty() == o.alphas.empty()) {
    throw UsageError("give exactly one of --scenarios or --alphas");
  }
  auto problem = load_problem(o);
  mcdm::SensitivityReport report;
  if (!o.scenarios.empty()) {
    auto scenarios = io::parse_scenarios(io::read_json_file(o.scenarios));
    report = mcdm::weight_sensitivity(problem, scenarios, o.alpha);
  } else {
    report = mcdm::alpha_sweep(problem, o.alphas);
  }
  if (o.format == Format::json) {
    out << io::dump(io::to_json(report, problem)) << '\n';
    return 0;
  }
  const auto classes = class_names(problem);
  if (o.format == Format::csv) {
    out << "scenario,alternative";
    for (const auto& c : classes) out << ',' << c;
    out << ",classification\n";
    for (const auto& s : report.scenarios) {
      for (std::size_t i = 0; i < s.scores.rows(); ++i) {
        out << s.label << ',' << problem.alternatives.name(i);
        for (double v : s.scores.row(i)) out << ',' << full(v);
        out << ',' << decision_name(s.assignments[i], problem) << '\n';
      }
    }
    return 0;
  }
  for (const auto& s : report.scenarios) {
    out << s.label << "  weights (";
    for (std::size_t k = 0; k < s.weights.size(); ++k) out << (k ? ", " : "") << s.weights[k];
    out << "), alpha " << s.alpha << '\n';
    print_assignments(out, problem, s.assignments);
    if (s.reference.total > 0) {
      out << "reference agreement: " << s.reference.correct << '/' << s.reference.total << '\n';
    }
    out << '\n';
  }
  if (report.unstable.empty()) {
    out << "all decisions stable across scenarios\n";
  } else {
    out << "decision changes for:";
    for (std::size_t i : report.unstable) out << ' ' << problem.alternatives.name(i);
    out << '\n';
  }
  return 0;
}

int reproduce_cmd(const Options& o, std::ostream& out) {
  if (o.tolerance && !(*o.tolerance >= 0.0)) throw UsageError("--tolerance must be >= 0");
  auto report = repro::reproduce(o.data_dir, o.tolerance, o.tables);
  if (o.format == Format::json) {
    Json j;
    Json tables = Json::array();
    for (const auto& t : report.tables) {
      Json e;
      e["table"] = t.name;
      e["title"] = t.title;
      e["pass"] = t.pass();
      e["tolerance"] = t.tolerance;
      e["max_deviation"] = t.max_deviation;
      e["worst_cell"] = t.worst_cell;
      e["failures"] = t.failures;
      tables.push_back(e);
    }
    j["tables"] = tables;
    j["pass"] = report.pass();
    out << io::dump(j) << '\n';
  } else {
    repro::print_report(out, report);
  }
  return report.pass() ? 0 : 1;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fuzzy aura spaces: closure operators, openness, separation, rough "
               "approximation and aura-based decision making",
               "faura"};
  app.require_subcommand(1);
  std::function<int(const Options&, std::ostream&)> action;

  auto command = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto existing = [](CLI::Option* opt) { return opt->check(CLI::ExistingFile); };

  auto* check = command("check-space", "Validate an aura space", check_space);
  existing(check->add_option("--space", o.space, "Aura space JSON")->required());

  auto* cl = command("closure", "Aura closure of a fuzzy set", closure_cmd);
  existing(cl->add_option("--space", o.space, "Aura space JSON")->required());
  existing(cl->add_option("--set", o.set, "Fuzzy set JSON")->required());
  cl->add_flag("--compare", o.compare, "Also report the topological closure");

  auto* in = command("interior", "Aura interior of a fuzzy set", interior_cmd);
  existing(in->add_option("--space", o.space, "Aura space JSON")->required());
  existing(in->add_option("--set", o.set, "Fuzzy set JSON")->required());

  auto* it = command("iterate", "Iterated aura closure", iterate_cmd);
  existing(it->add_option("--space", o.space, "Aura space JSON")->required());
  existing(it->add_option("--set", o.set, "Fuzzy set JSON")->required());
  it->add_option("--n", o.iterations, "Number of iterations, or 'inf' for the fixpoint")
      ->capture_default_str();

  auto* at = command("aura-topology", "Members fixed by the aura interior", aura_topology_cmd);
  existing(at->add_option("--space", o.space, "Aura space JSON")->required());

  auto* op = command("classify-openness", "Generalized openness classes of a set", openness_cmd);
  existing(op->add_option("--space", o.space, "Aura space JSON")->required());
  existing(op->add_option("--set", o.set, "Fuzzy set JSON")->required());

  auto* co = command("continuity", "Continuity flags of a point map", continuity_cmd);
  existing(co->add_option("--space", o.space, "Source aura space JSON")->required());
  existing(co->add_option("--target-space", o.target_space, "Target aura space JSON")->required());
  existing(co->add_option("--map", o.map, "Point map JSON")->required());

  auto* se = command("separation", "Separation axioms of an aura space", separation_cmd);
  existing(se->add_option("--space", o.space, "Aura space JSON")->required());

  auto* ro = command("rough", "Lower and upper approximations", rough_cmd);
  existing(ro->add_option("--space", o.space, "Aura space JSON")->required());
  existing(ro->add_option("--set", o.set, "Fuzzy set JSON")->required());

  auto add_problem = [&](CLI::App* sub) {
    existing(sub->add_option("--problem", o.problem, "Decision problem JSON"));
    existing(sub->add_option("--matrix-csv", o.matrix_csv, "Decision matrix CSV"));
    existing(sub->add_option("--classes-csv", o.classes_csv, "Class membership CSV"));
    sub->add_option("--weights", o.weights, "Criterion weights for CSV input")->delimiter(',');
    sub->add_option("--cost", o.cost, "Cost criteria for CSV input")->delimiter(',');
    sub->add_option("--alpha", o.alpha, "Caution parameter")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  };
  auto* run = command("mcdm-run", "Classify alternatives", mcdm_run_cmd);
  add_problem(run);
  auto* sens = command("mcdm-sensitivity", "Weight or alpha sensitivity", mcdm_sensitivity_cmd);
  add_problem(sens);
  existing(sens->add_option("--scenarios", o.scenarios, "Weight scenarios JSON"));
  sens->add_option("--alphas", o.alphas, "Comma-separated alpha values")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));

  auto* rp = command("reproduce-paper", "Recompute the bundled medical-diagnosis tables",
                     reproduce_cmd);
  rp->add_option("--data-dir", o.data_dir, "Fixture directory")
      ->check(CLI::ExistingDirectory)
      ->capture_default_str();
  rp->add_option("--tolerance", o.tolerance, "Override every table's tolerance");
  rp->add_option("--table", o.tables, "Restrict to the named tables")
      ->delimiter(',')
      ->check(CLI::IsMember(repro::table_names()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    return action(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace faura::cli
