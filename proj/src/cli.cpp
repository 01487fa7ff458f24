#include "clift/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "clift/fixtures.hpp"
#include "clift/serialize.hpp"
#include "clift/sl_oracle.hpp"

namespace clift::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

bool verbose() {
  const char* v = std::getenv("CLIFT_VERBOSE");
  return v && std::string(v) != "0";
}

struct SpecFile {
  CellSpec cell;
  LiftConvention convention = LiftConvention::Homogeneous;
  std::optional<DegreeAssignment> degrees;
  std::string realization = "formal";  // formal | unitriangular | lusztig
};

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("spec file " + path + " is not valid JSON: " + e.what());
  }

  if (j.value("schema", "") != "clift-cell/1")
    throw InputError("spec file must declare \"schema\": \"clift-cell/1\"");
  SpecFile spec;
  try {
    const auto& type = j.at("type");
    std::string series = type.at("series").get<std::string>();
    if (series.size() != 1) throw InputError("series must be a single letter");
    spec.cell.type = dynkin(series[0], type.at("rank").get<int>());
    spec.cell.word.letters = j.at("word").get<std::vector<int>>();
    spec.cell.J = j.at("J").get<std::vector<int>>();
    if (j.contains("convention")) {
      std::string c = j.at("convention").get<std::string>();
      if (c == "homogeneous")
        spec.convention = LiftConvention::Homogeneous;
      else if (c == "plain")
        spec.convention = LiftConvention::Plain;
      else
        throw InputError("convention must be \"homogeneous\" or \"plain\"");
    }
    if (j.contains("degrees")) {
      DegreeAssignment d;
      for (const auto& row : j.at("degrees"))
        d.push_back(row.get<std::vector<long long>>());
      spec.degrees = std::move(d);
    }
    if (j.contains("realization")) {
      spec.realization = j.at("realization").get<std::string>();
      if (spec.realization != "formal" && spec.realization != "unitriangular" &&
          spec.realization != "lusztig")
        throw InputError("realization must be formal, unitriangular or lusztig");
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("spec file " + path + " is malformed: " + e.what());
  }
  return spec;
}

Seed seed_from_spec(const SpecFile& spec, const CartanMatrix& c) {
  validate_cell(c, spec.cell);
  if (spec.realization == "formal") return schubert_seed(c, spec.cell.word);
  return realize_seed(c, spec.cell,
                      spec.realization == "lusztig" ? CellCoords::Lusztig
                                                    : CellCoords::Unitriangular);
}

DegreeAssignment degrees_from_spec(const SpecFile& spec, const CartanMatrix& c) {
  if (spec.degrees) {
    if (static_cast<int>(spec.degrees->size()) != spec.cell.word.length())
      throw InputError("degrees must list one weight per word position");
    for (const auto& d : *spec.degrees)
      if (static_cast<int>(d.size()) != c.rank())
        throw InputError("each degree needs one entry per fundamental weight");
    return *spec.degrees;
  }
  if (spec.realization == "unitriangular") return realized_degrees(c, spec.cell);
  throw InputError(
      "no degrees: supply \"degrees\" in the spec file or use the "
      "unitriangular realization");
}

ordered_json matrix_json(const ExtendedExchangeMatrix& m,
                         const std::vector<int>& order) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["mutable_positions"] = m.mutable_positions();
  j["row_order"] = order;
  ordered_json labels = ordered_json::array();
  ordered_json frozen = ordered_json::array();
  ordered_json entries = ordered_json::array();
  for (int k : order) {
    labels.push_back(m.row_labels[k - 1]);
    frozen.push_back(!m.row_is_mutable(k - 1));
    entries.push_back(m.b[k - 1]);
  }
  j["row_labels"] = std::move(labels);
  j["frozen"] = std::move(frozen);
  j["entries"] = std::move(entries);
  return j;
}

ordered_json report_json(const std::string& suite, const Report& rep) {
  ordered_json j;
  j["schema"] = "clift-report/1";
  j["suite"] = suite;
  j["checks"] = rep.checks;
  j["ok"] = rep.ok();
  ordered_json vs = ordered_json::array();
  for (const auto& v : rep.violations) {
    ordered_json e;
    e["kind"] = v.kind;
    if (v.walk >= 0) e["walk"] = v.walk;
    if (v.step >= 0) e["step"] = v.step;
    if (v.k >= 0) e["position"] = v.k;
    e["detail"] = v.detail;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

void print_report(std::ostream& out, const std::string& suite, const Report& rep) {
  out << "suite: " << suite << "\n";
  out << "checks: " << rep.checks << "\n";
  out << "violations: " << rep.violations.size() << "\n";
  const size_t cap = verbose() ? rep.violations.size()
                               : std::min<size_t>(rep.violations.size(), 20);
  for (size_t i = 0; i < cap; ++i) {
    const auto& v = rep.violations[i];
    out << "  " << v.kind;
    if (v.walk >= 0) out << " walk " << v.walk;
    if (v.step >= 0) out << " step " << v.step;
    if (v.k >= 0) out << " position " << v.k;
    out << ": " << v.detail << "\n";
  }
  if (cap < rep.violations.size())
    out << "  ... and " << rep.violations.size() - cap << " more\n";
  out << (rep.ok() ? "ok" : "FAIL") << "\n";
}

std::vector<int> parse_seq(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    size_t used = 0;
    int v;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw InputError("bad mutation sequence entry '" + cur + "'");
    }
    if (used != cur.size())
      throw InputError("bad mutation sequence entry '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  flush();
  return out;
}

int cmd_schubert(const SpecFile& spec, bool grouped, bool json, std::ostream& out) {
  auto c = cartan_matrix(spec.cell.type);
  validate_cell(c, spec.cell);
  auto m = build_Bw(c, spec.cell.word);
  std::vector<int> order;
  if (grouped) order = grouped_row_order(m);
  if (json) {
    std::vector<int> eff = order;
    if (eff.empty())
      for (int i = 1; i <= m.rows(); ++i) eff.push_back(i);
    ordered_json j;
    j["schema"] = "clift-matrix/1";
    j["type"] = spec.cell.type.str();
    j["word"] = spec.cell.word.letters;
    j["J"] = spec.cell.J;
    j["matrix"] = matrix_json(m, eff);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "type " << spec.cell.type.str() << "  word " << spec.cell.word.str() << "\n";
  out << format_matrix(m, order);
  out << "labels\n";
  auto labels = variable_labels(c, spec.cell.word);
  for (size_t k = 0; k < labels.size(); ++k)
    out << " [" << k + 1 << "] " << labels[k].str()
        << (labels[k].frozen ? "  frozen" : "  mutable") << "  target "
        << weight_str(labels[k].target) << "\n";
  return 0;
}

int cmd_lift(const SpecFile& spec, bool grouped, bool json, std::ostream& out) {
  auto c = cartan_matrix(spec.cell.type);
  validate_cell(c, spec.cell);
  auto degrees = degrees_from_spec(spec, c);
  Seed base = schubert_seed(c, spec.cell.word);
  LiftedSeed l = lift_seed(base, degrees, spec.cell.J, spec.convention);

  std::vector<int> order;
  if (grouped) {
    order = grouped_row_order(l.seed.matrix);
  }
  if (json) {
    ordered_json j;
    j["schema"] = "clift-lift/1";
    j["type"] = spec.cell.type.str();
    j["word"] = spec.cell.word.letters;
    j["J"] = spec.cell.J;
    j["convention"] = convention_str(spec.convention);
    std::vector<int> eff = order;
    if (eff.empty())
      for (int i = 1; i <= l.seed.matrix.rows(); ++i) eff.push_back(i);
    j["matrix"] = matrix_json(l.seed.matrix, eff);
    ordered_json degs = ordered_json::array();
    for (int k : eff) degs.push_back(l.degrees[k - 1]);
    j["degrees"] = std::move(degs);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "type " << spec.cell.type.str() << "  word " << spec.cell.word.str()
      << "  J (";
  for (size_t i = 0; i < spec.cell.J.size(); ++i)
    out << (i ? ", " : "") << spec.cell.J[i];
  out << ")\n";
  out << format_lifted(l);
  return 0;
}

int cmd_mutate(const SpecFile& spec, const std::string& seq, bool json,
               std::ostream& out, std::ostream& err) {
  auto c = cartan_matrix(spec.cell.type);
  Seed s = seed_from_spec(spec, c);
  auto ks = parse_seq(seq);
  Seed t;
  try {
    t = mutate_sequence(s, ks);
  } catch (const NotDivisibleError& e) {
    err << "exchange violation: " << e.what() << "\n";
    return 1;
  }
  if (json) {
    ordered_json j;
    j["schema"] = "clift-seed/1";
    j["sequence"] = ks;
    std::vector<int> order(t.matrix.rows());
    for (int i = 0; i < t.matrix.rows(); ++i) order[i] = i + 1;
    j["matrix"] = matrix_json(t.matrix, order);
    ordered_json vars = ordered_json::array();
    for (const auto& v : t.vars) vars.push_back(v.str());
    j["vars"] = std::move(vars);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << format_seed(t);
  return 0;
}

int cmd_explore(const SpecFile& spec, int max_seeds, const std::string& exec,
                bool json, std::ostream& out) {
  auto c = cartan_matrix(spec.cell.type);
  Seed s = seed_from_spec(spec, c);
  auto g = enumerate_exchange_graph(
      s, max_seeds, exec == "parallel" ? Exec::Parallel : Exec::Serial);
  if (json) {
    ordered_json j;
    j["schema"] = "clift-graph/1";
    j["nodes"] = g.nodes.size();
    j["complete"] = g.complete;
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges) {
      ordered_json je;
      je["from"] = e.from;
      je["k"] = e.k;
      je["to"] = e.to;
      edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "nodes: " << g.nodes.size() << "\n";
  out << "edges: " << g.edges.size() << "\n";
  out << "complete: " << (g.complete ? "yes" : "no") << "\n";
  return 0;
}

int cmd_verify(const SpecFile& spec, const std::string& suite, int walks, int depth,
               unsigned long long rng_seed, const std::string& exec, bool json,
               std::ostream& out) {
  auto c = cartan_matrix(spec.cell.type);
  const Exec ex = exec == "parallel" ? Exec::Parallel : Exec::Serial;
  Report rep;

  if (suite == "laurent") {
    Seed s = schubert_seed(c, spec.cell.word);
    auto w = random_walks(s.matrix.mutable_positions(), walks, depth, rng_seed);
    rep = check_laurent(s, w, ex);
  } else if (suite == "involution") {
    Seed s = schubert_seed(c, spec.cell.word);
    auto positions = s.matrix.mutable_positions();
    auto w = random_walks(positions, walks, depth, rng_seed);
    for (size_t i = 0; i < w.size(); ++i) {
      Seed at = mutate_sequence(s, w[i]);
      for (int k : positions) {
        ++rep.checks;
        Seed back = mutate_seed(mutate_seed(at, k), k);
        if (!(back.matrix == at.matrix)) {
          rep.violations.push_back({"involution_matrix", static_cast<int>(i + 1),
                                    -1, k, "double mutation changed the matrix"});
          continue;
        }
        bool vars_ok = true;
        for (size_t v = 0; v < at.vars.size(); ++v)
          if (!(back.vars[v] == at.vars[v])) vars_ok = false;
        if (!vars_ok)
          rep.violations.push_back({"involution_vars", static_cast<int>(i + 1), -1,
                                    k, "double mutation changed the cluster"});
      }
    }
  } else if (suite == "grading") {
    auto degrees = degrees_from_spec(spec, c);
    Seed base = schubert_seed(c, spec.cell.word);
    LiftedSeed l = lift_seed(base, degrees, spec.cell.J, spec.convention);
    auto w = random_walks(base.matrix.mutable_positions(), walks, depth, rng_seed);
    CommutationOptions opt;
    opt.check_vars = false;  // grading is a matrix and degree property
    opt.exec = ex;
    rep = verify_commutation(base, l, w, opt);
  } else if (suite == "oracle") {
    const bool torus = spec.realization == "lusztig";
    Seed s = realize_seed(c, spec.cell,
                          torus ? CellCoords::Lusztig : CellCoords::Unitriangular);
    rep = verify_exchange_identities(
        s, ex, torus ? Regularity::Laurent : Regularity::Polynomial);
  } else if (suite == "lifted") {
    LiftedSeed l = minor_lifted_seed(c, spec.cell, spec.convention);
    rep = verify_lifted_identities(l, ex);
  } else {
    throw InputError("unknown suite " + suite);
  }

  if (json)
    out << report_json(suite, rep).dump(2) << "\n";
  else
    print_report(out, suite, rep);
  return rep.ok() ? 0 : 1;
}

int cmd_example(const std::string& name, bool json, std::ostream& out) {
  if (name != "b3") throw InputError("unknown example " + name);
  auto cell = fixtures::b3_cell();
  auto c = cartan_matrix(cell.type);
  auto degrees = fixtures::b3_degrees();
  Seed base = schubert_seed(c, cell.word);
  LiftedSeed plain = lift_seed(base, degrees, cell.J, LiftConvention::Plain);
  LiftedSeed hom = lift_seed(base, degrees, cell.J, LiftConvention::Homogeneous);
  auto order = grouped_row_order(base.matrix);
  auto lifted_order = grouped_row_order(plain.seed.matrix);

  if (json) {
    ordered_json j;
    j["schema"] = "clift-example/1";
    j["type"] = cell.type.str();
    j["word"] = cell.word.letters;
    j["J"] = cell.J;
    j["cell_matrix"] = matrix_json(base.matrix, order);
    j["lifted_plain"] = matrix_json(plain.seed.matrix, lifted_order);
    j["lifted_homogeneous"] = matrix_json(hom.seed.matrix, lifted_order);
    ordered_json degs = ordered_json::array();
    for (int k : lifted_order) degs.push_back(plain.degrees[k - 1]);
    j["degrees"] = std::move(degs);
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "cell: type " << cell.type.str() << "  word " << cell.word.str()
      << "  J (3)\n\n";
  out << "exchange matrix, mutable rows first\n";
  out << format_matrix(base.matrix, order) << "\n";
  out << "lifted matrix, plain convention\n";
  out << format_matrix(plain.seed.matrix, lifted_order) << "\n";
  out << "lifted matrix, homogeneous convention\n";
  out << format_matrix(hom.seed.matrix, lifted_order) << "\n";
  out << "degrees\n";
  for (int k : lifted_order)
    out << " [" << k << "] " << weight_str(plain.degrees[k - 1]) << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cluster seeds on Schubert cells and their flag lifts"};
  app.require_subcommand(1);

  std::string spec_path, seq, suite, exec = "serial", example_name;
  bool grouped = false, json = false;
  int max_seeds = 1000, walks = 100, depth = 8;
  unsigned long long rng_seed = 1;

  auto* sc_schubert = app.add_subcommand("schubert", "exchange matrix of a cell");
  sc_schubert->add_option("spec", spec_path, "cell spec JSON file")->required();
  sc_schubert->add_flag("--grouped", grouped, "mutable rows first");
  sc_schubert->add_flag("--json", json, "JSON output");

  auto* sc_lift = app.add_subcommand("lift", "lifted seed of a cell");
  sc_lift->add_option("spec", spec_path)->required();
  sc_lift->add_flag("--grouped", grouped);
  sc_lift->add_flag("--json", json);

  auto* sc_mutate = app.add_subcommand("mutate", "apply a mutation sequence");
  sc_mutate->add_option("spec", spec_path)->required();
  sc_mutate->add_option("--seq", seq, "comma separated 1-based positions");
  sc_mutate->add_flag("--json", json);

  auto* sc_explore = app.add_subcommand("explore", "enumerate the exchange graph");
  sc_explore->add_option("spec", spec_path)->required();
  sc_explore->add_option("--max", max_seeds, "node budget");
  sc_explore->add_option("--exec", exec)->check(CLI::IsMember({"serial", "parallel"}));
  sc_explore->add_flag("--json", json);

  auto* sc_verify = app.add_subcommand("verify", "run a verification suite");
  sc_verify->add_option("spec", spec_path)->required();
  sc_verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"laurent", "involution", "grading", "oracle", "lifted"}));
  sc_verify->add_option("--walks", walks);
  sc_verify->add_option("--depth", depth);
  sc_verify->add_option("--rng-seed", rng_seed);
  sc_verify->add_option("--exec", exec)->check(CLI::IsMember({"serial", "parallel"}));
  sc_verify->add_flag("--json", json);

  auto* sc_example = app.add_subcommand("example", "worked fixture");
  sc_example->add_option("name", example_name)->required();
  sc_example->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(sc_schubert))
      return cmd_schubert(load_spec(spec_path), grouped, json, out);
    if (app.got_subcommand(sc_lift))
      return cmd_lift(load_spec(spec_path), grouped, json, out);
    if (app.got_subcommand(sc_mutate))
      return cmd_mutate(load_spec(spec_path), seq, json, out, err);
    if (app.got_subcommand(sc_explore))
      return cmd_explore(load_spec(spec_path), max_seeds, exec, json, out);
    if (app.got_subcommand(sc_verify))
      return cmd_verify(load_spec(spec_path), suite, walks, depth, rng_seed, exec,
                        json, out);
    if (app.got_subcommand(sc_example)) return cmd_example(example_name, json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotDivisibleError& e) {
    err << "exchange violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace clift::cli
