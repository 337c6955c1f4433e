#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/homlie.hpp"

using namespace homlie;
using io::json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kConsistency = 3 };

HomLieAlgebra load_algebra(const std::string& path) { return io::hom_lie_from(io::read_json(path), path); }

Scalar scalar_opt(const std::string& text, const char* what) {
  try {
    return parse_scalar(text);
  } catch (const UsageError& e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
}

SkewCochain load_operator(const std::string& path, const SpaceRef& dom, const SpaceRef& cod) {
  return operator_cochain(io::matrix_from(io::read_json(path), cod->dim(), dom->dim(), path), dom, cod);
}

int emit(const json& j) {
  std::cout << io::dump(j);
  return kOk;
}

/// Prints a verdict either as JSON or as lines of text.
int verdict(bool json_out, bool ok, json report, const std::vector<std::string>& lines) {
  report["passed"] = ok;
  if (json_out) {
    std::cout << io::dump(report);
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return ok ? kOk : kFalse;
}

std::vector<suite::NamedAlgebra> all_named_fixtures() {
  auto v = suite::default_fixtures();
  v.emplace_back("sl2", fixtures::sl2());
  return v;
}

HomLieAlgebra named_fixture(const std::string& name) {
  for (auto& [n, g] : all_named_fixtures())
    if (n == name) return g;
  std::string known;
  for (auto& [n, g] : all_named_fixtures()) known += (known.empty() ? "" : ", ") + n;
  throw UsageError("unknown fixture '" + name + "' (known: " + known + ")");
}

// ------------------------------------------------------------------ check

int check_structure(const std::string& path, bool json_out) {
  const RawHomStructure a = io::algebra_from(io::read_json(path), path);
  const auto jac = find_hom_jacobi_failure(a);
  const auto mult = multiplicativity_failures(a);
  json report{{"hom_jacobi", {{"passed", !jac}}}, {"multiplicative", {{"passed", mult.empty()}}}};
  std::vector<std::string> lines;
  if (jac) {
    report["hom_jacobi"]["witness"] = io::to_json(*jac);
    lines.push_back(jac->describe());
  } else {
    lines.push_back("Hom-Jacobi: ok");
  }
  json fails = json::array();
  for (const auto& w : mult) {
    fails.push_back(io::to_json(w));
    lines.push_back(w.describe());
  }
  report["multiplicative"]["failures"] = fails;
  if (mult.empty()) lines.push_back("multiplicativity: ok");
  const bool ok = !jac && mult.empty();
  lines.push_back(ok ? "multiplicative Hom-Lie algebra" : "not a multiplicative Hom-Lie algebra");
  return verdict(json_out, ok, report, lines);
}

int check_nijenhuis(const std::string& alg, const std::string& op, bool json_out) {
  const auto g = load_algebra(alg);
  const auto N = load_operator(op, g.space(), g.space());
  json report;
  std::vector<std::string> lines;
  if (!is_nijenhuis(N, g)) {
    const auto w = detail::defect_witness(nijenhuis_defect(N, g), "Nijenhuis identity");
    report["witness"] = io::to_json(*w);
    lines.push_back(w->describe());
    lines.push_back("not a Nijenhuis operator");
    return verdict(json_out, false, report, lines);
  }
  const auto r = nijenhuis_deformation_check(N, g);
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.ok}, {"detail", c.detail}});
    lines.push_back((c.ok ? "ok    " : "FAIL  ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  report["consequences"] = checks;
  // a Nijenhuis operator whose consequences fail means a bug, not a verdict
  if (!r.ok) throw ConsistencyError("Nijenhuis operator fails its consequences:\n" + [&] {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
  }());
  lines.push_back("Nijenhuis operator");
  return verdict(json_out, true, report, lines);
}

int check_rotabaxter(const std::string& alg, const std::string& op, const Scalar& lambda, bool json_out) {
  const auto g = load_algebra(alg);
  const auto R = load_operator(op, g.space(), g.space());
  json report{{"weight", to_string(lambda)}};
  std::vector<std::string> lines;
  const bool ok = is_rota_baxter(R, g, lambda);
  if (!ok) {
    const auto w = detail::defect_witness(rota_baxter_defect(R, g, lambda), "Rota-Baxter identity");
    report["witness"] = io::to_json(*w);
    lines.push_back(w->describe());
  }
  lines.push_back(ok ? "Rota-Baxter operator of weight " + to_string(lambda) : "not a Rota-Baxter operator of weight " + to_string(lambda));
  return verdict(json_out, ok, report, lines);
}

int check_relative_rb(const std::string& alg, const std::string& act, const std::string& op, const Scalar& lambda, bool json_out) {
  const auto g = load_algebra(alg);
  const auto action = io::action_from(io::read_json(act), g, act);
  const auto R = load_operator(op, action.acted().space(), g.space());
  require_compatible(R, "check relative-rb");
  const auto c = relative_rb_criteria(R, action, lambda);
  json report{{"weight", to_string(lambda)},
              {"criteria", {{"pointwise", c.pointwise}, {"graph", c.graph}, {"maurer_cartan", c.maurer_cartan}}}};
  auto b = [](bool v) { return std::string(v ? "yes" : "no"); };
  std::vector<std::string> lines{"pointwise identity: " + b(c.pointwise), "graph is a subalgebra: " + b(c.graph),
                                 "Maurer-Cartan: " + b(c.maurer_cartan)};
  if (c.pointwise != c.graph || c.pointwise != c.maurer_cartan)
    throw ConsistencyError("relative Rota-Baxter criteria disagree");
  if (c.pointwise) {
    const auto ind = induced_structures(R, action, lambda);
    report["induced_bracket"] = io::to_json(ind.algebra.raw());
    lines.push_back("induced algebra and representation: ok");
    lines.push_back("relative Rota-Baxter operator of weight " + to_string(lambda));
  } else {
    const auto w = detail::defect_witness(relative_rb_defect(R, action, lambda), "relative Rota-Baxter identity");
    report["witness"] = io::to_json(*w);
    lines.push_back(w->describe());
    lines.push_back("not a relative Rota-Baxter operator of weight " + to_string(lambda));
  }
  return verdict(json_out, c.pointwise, report, lines);
}

int check_morphism(const std::string& alg, const std::string& target, const std::string& op, bool json_out) {
  const auto g = load_algebra(alg);
  const auto h = load_algebra(target);
  HomMorphism phi(g, h, io::matrix_from(io::read_json(op), h.dim(), g.dim(), op));
  const auto w = find_morphism_failure(phi);
  const bool mc = mc_residual_morphism(phi.as_cochain(), g, h).is_zero();
  if (mc != !w) throw ConsistencyError("morphism criteria disagree (pointwise vs Maurer-Cartan)");
  json report{{"maurer_cartan", mc}};
  std::vector<std::string> lines;
  if (w) {
    report["witness"] = io::to_json(*w);
    lines.push_back(w->describe());
  }
  lines.push_back(w ? "not a morphism" : "morphism");
  return verdict(json_out, !w, report, lines);
}

// ---------------------------------------------------------------- bracket

int bracket(const std::string& kind, const std::string& alg, const std::string& p, const std::string& q) {
  const auto g = load_algebra(alg);
  const auto P = io::cochain_from(io::read_json(p), g.space(), g.space(), p);
  const auto Q = io::cochain_from(io::read_json(q), g.space(), g.space(), q);
  require_compatible(P, "bracket");
  require_compatible(Q, "bracket");
  if (kind == "nr") return emit(io::to_json(nr_bracket(P, Q)));
  if (kind == "cup") return emit(io::to_json(cup_bracket(P, Q, g)));
  if (kind == "fn") return emit(io::to_json(fn_bracket(P, Q, g)));
  return emit(io::to_json(derived_bracket(P, Q, g)));
}

// ------------------------------------------------------------- cohomology

int cohomology(const std::string& alg, const std::string& coeff, std::size_t degree, const std::optional<std::string>& lambda_text,
               const std::optional<std::string>& op) {
  const auto g = load_algebra(alg);
  const Scalar lambda = lambda_text ? scalar_opt(*lambda_text, "lambda") : Scalar(1);
  const auto colon = coeff.find(':');
  const std::string kind = coeff.substr(0, colon);
  const std::string file = colon == std::string::npos ? "" : coeff.substr(colon + 1);
  auto need_file = [&] {
    if (file.empty()) throw UsageError("--coefficients " + kind + " needs a file, as " + kind + ":FILE");
  };
  std::optional<CochainComplex> cx;
  if (kind == "adjoint") {
    cx = CochainComplex::hom_rep(adjoint_representation(g));
  } else if (kind == "trivial") {
    cx = CochainComplex::trivial(g);
  } else if (kind == "derived") {
    cx = CochainComplex::scaled_trivial(g, lambda);
  } else if (kind == "rep") {
    need_file();
    cx = CochainComplex::hom_rep(io::representation_from(io::read_json(file), g, file));
  } else if (kind == "morphism") {
    need_file();
    const json j = io::read_json(file);
    const auto h = io::hom_lie_from(io::detail::field(j, "target", file), file + ".target");
    HomMorphism phi(g, h, io::matrix_from(j, h.dim(), g.dim(), file));
    if (auto w = find_morphism_failure(phi)) throw UsageError(file + ": not a morphism: " + w->describe());
    cx = CochainComplex::morphism(phi);
  } else if (kind == "relative" || kind == "relative-rb") {
    need_file();
    const auto action = io::action_from(io::read_json(file), g, file);
    if (kind == "relative") {
      cx = CochainComplex::relative(action, lambda);
    } else {
      if (!op) throw UsageError("--coefficients relative-rb needs --op R.json");
      const auto R = load_operator(*op, action.acted().space(), g.space());
      if (!is_relative_rb(R, action, lambda)) throw UsageError(*op + ": not a relative Rota-Baxter operator of weight " + to_string(lambda));
      cx = CochainComplex::relative_rb(action, R, lambda);
    }
  } else {
    throw UsageError("unknown coefficients '" + coeff + "'");
  }
  json out = io::to_json(cx->cohomology(degree));
  out["complex"] = to_string(cx->kind());
  return emit(out);
}

// ----------------------------------------------------------------- deform

int deform_extend(const std::string& alg, const std::string& target, const std::string& morphism,
                  const std::optional<std::string>& terms, std::size_t to_order) {
  const auto g = load_algebra(alg);
  const auto h = load_algebra(target);
  HomMorphism phi(g, h, io::matrix_from(io::read_json(morphism), h.dim(), g.dim(), morphism));
  if (auto w = find_morphism_failure(phi)) throw UsageError(morphism + ": not a morphism: " + w->describe());
  std::vector<SkewCochain> higher;
  if (terms) {
    const json j = io::read_json(*terms);
    const json& list = io::detail::field(j, "terms", *terms);
    if (!list.is_array()) throw UsageError(*terms + ".terms: expected an array of matrices");
    for (std::size_t k = 0; k < list.size(); ++k)
      higher.push_back(operator_cochain(io::mat_from(list[k], h.dim(), g.dim(), *terms + ".terms[" + std::to_string(k) + "]"),
                                        g.space(), h.space()));
  }
  MorphismDeformation d(phi, std::move(higher));
  if (auto w = find_deformation_failure(d)) throw UsageError("input terms are not an order-" + std::to_string(d.order()) + " deformation: " + w->describe());
  json steps = json::array();
  bool obstructed = false;
  while (d.order() < to_order) {
    const auto ob = obstruction(d);
    json step{{"order", d.order() + 1}, {"obstruction", io::to_json(ob.cocycle)}, {"is_coboundary", ob.is_coboundary()}};
    if (!ob.is_coboundary()) {
      steps.push_back(step);
      obstructed = true;
      break;
    }
    d = *extend(d);
    step["term"] = io::to_json(operator_matrix(d.terms.back()));
    steps.push_back(step);
  }
  json all_terms = json::array();
  for (const auto& t : d.terms) all_terms.push_back(io::to_json(operator_matrix(t)));
  std::cout << io::dump({{"status", obstructed ? "obstructed" : "extended"},
                         {"reached_order", d.order()},
                         {"steps", steps},
                         {"terms", all_terms}});
  return obstructed ? kFalse : kOk;
}

// ---------------------------------------------------------------- verify

int verify_theorems(const suite::SuiteConfig& cfg, const std::vector<std::string>& fixture_names, const std::optional<std::string>& algebra,
                    const std::vector<std::string>& identity_names, bool json_out, const std::optional<std::string>& report_path) {
  std::vector<suite::NamedAlgebra> algebras;
  if (algebra) algebras.emplace_back(*algebra, load_algebra(*algebra));
  for (const auto& n : fixture_names) algebras.emplace_back(n, named_fixture(n));
  if (algebras.empty()) algebras = suite::default_fixtures();
  std::vector<suite::IdentityId> ids;
  for (const auto& n : identity_names) ids.push_back(suite::parse_identity(n));
  if (ids.empty()) ids = suite::all_identities();

  const auto report = suite::run_all(algebras, cfg, ids);
  const json j = suite::to_json(report);
  if (report_path) {
    std::ofstream out(*report_path);
    if (!out) throw UsageError("cannot write " + *report_path);
    out << io::dump(j);
  }
  if (json_out) {
    std::cout << io::dump(j);
  } else {
    for (const auto& r : report.reports) {
      std::cout << (r.passed() ? "ok    " : "FAIL  ") << r.algebra << "  " << suite::number(r.identity) << " "
                << suite::name(r.identity) << "  " << r.trials - r.failures.size() << "/" << r.trials << "\n";
      for (const auto& f : r.failures) {
        std::cout << "      trial " << f.trial << ": " << f.check;
        if (!f.witness.empty()) {
          std::cout << " at (";
          for (std::size_t k = 0; k < f.witness.size(); ++k) std::cout << (k ? "," : "") << f.witness[k];
          std::cout << ")";
        }
        std::cout << ": " << f.lhs << " vs " << f.rhs << "\n";
      }
    }
    std::cout << report.reports.size() << " checks, " << report.failure_count() << " failures\n";
  }
  return report.passed() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with multiplicative Hom-Lie algebras"};
  app.require_subcommand(1);
  bool json_out = false;

  // check
  auto* check = app.add_subcommand("check", "verify a structure or an operator");
  check->require_subcommand(1);
  std::string path, alg, op, target, act, weight = "1";

  auto* c_struct = check->add_subcommand("structure", "Hom-Jacobi and multiplicativity");
  c_struct->add_option("file", path, "algebra JSON, - for stdin")->required();
  c_struct->add_flag("--json", json_out);

  auto* c_nij = check->add_subcommand("nijenhuis", "Nijenhuis operator");
  auto* c_rb = check->add_subcommand("rotabaxter", "Rota-Baxter operator of a weight");
  auto* c_rel = check->add_subcommand("relative-rb", "relative Rota-Baxter operator w.r.t. an action");
  auto* c_mor = check->add_subcommand("morphism", "Hom-Lie algebra morphism");
  for (auto* c : {c_nij, c_rb, c_rel, c_mor}) {
    c->add_option("--algebra", alg, "algebra JSON")->required();
    c->add_option("--op", op, "operator JSON {\"matrix\": ...}")->required();
    c->add_flag("--json", json_out);
  }
  for (auto* c : {c_rb, c_rel}) c->add_option("--weight", weight, "weight λ as p/q");
  c_rel->add_option("--action", act, "action JSON")->required();
  c_mor->add_option("--target", target, "target algebra JSON")->required();

  // bracket
  auto* br = app.add_subcommand("bracket", "bracket of two cochains");
  std::string kind, pfile, qfile;
  br->add_option("--kind", kind)->required()->check(CLI::IsMember({"nr", "cup", "fn", "derived"}));
  br->add_option("--algebra", alg)->required();
  br->add_option("--p", pfile)->required();
  br->add_option("--q", qfile)->required();

  // cohomology
  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions");
  std::string coeff = "adjoint";
  std::size_t degree = 0;
  std::optional<std::string> lambda, coh_op;
  coh->add_option("--algebra", alg)->required();
  coh->add_option("--coefficients", coeff, "adjoint|trivial|derived|rep:F|morphism:F|relative:F|relative-rb:F");
  coh->add_option("--degree", degree)->required();
  coh->add_option("--lambda", lambda, "weight for derived/relative complexes");
  coh->add_option("--op", coh_op, "operator for relative-rb");

  // deform
  auto* deform = app.add_subcommand("deform", "morphism deformations");
  deform->require_subcommand(1);
  auto* extend_cmd = deform->add_subcommand("extend", "extend a finite-order deformation");
  std::string morphism;
  std::optional<std::string> terms;
  std::size_t to_order = 1;
  extend_cmd->add_option("--algebra", alg)->required();
  extend_cmd->add_option("--target", target)->required();
  extend_cmd->add_option("--morphism", morphism)->required();
  extend_cmd->add_option("--terms", terms, "JSON {\"terms\": [matrix, ...]} for orders 1..N");
  extend_cmd->add_option("--to-order", to_order)->required();

  // verify-theorems
  auto* ver = app.add_subcommand("verify-theorems", "randomized identity checks");
  suite::SuiteConfig cfg;
  std::vector<std::string> fixture_names, identity_names;
  std::optional<std::string> ver_algebra, report_path;
  ver->add_option("--seed", cfg.seed);
  ver->add_option("--trials", cfg.trials);
  ver->add_option("--max-arity", cfg.max_arity)->check(CLI::Range(1, 6));
  auto* fx_opt = ver->add_option("--fixture", fixture_names, "fixture name, repeatable");
  ver->add_option("--algebra", ver_algebra)->excludes(fx_opt);
  ver->add_option("--identity", identity_names, "identity tag or number, repeatable");
  ver->add_option("--report", report_path, "also write the JSON report here");
  ver->add_flag("--json", json_out);

  // fixture
  auto* fx = app.add_subcommand("fixture", "emit a fixture algebra as JSON");
  fx->require_subcommand(1);
  std::string q = "1", a = "0", b = "1", c = "1", d = "0";
  std::size_t dim = 2;
  auto* fx_j = fx->add_subcommand("jackson-sl2");
  fx_j->add_option("--q", q);
  auto* fx_t = fx->add_subcommand("threedim");
  fx_t->add_option("--a", a);
  fx_t->add_option("--b", b);
  fx_t->add_option("--c", c);
  fx_t->add_option("--d", d);
  auto* fx_a = fx->add_subcommand("abelian");
  fx_a->add_option("--dim", dim)->check(CLI::Range(1, 16));
  std::vector<std::pair<std::string, HomLieAlgebra (*)()>> named{
      {"fixture-b", fixtures::fixture_b}, {"sl2", fixtures::sl2},   {"yau-sl2", fixtures::yau_sl2},
      {"yau-heisenberg", fixtures::yau_heisenberg}, {"yau-gl2", fixtures::yau_gl2},
  };
  std::map<CLI::App*, HomLieAlgebra (*)()> named_cmds;
  for (auto& [n, f] : named) named_cmds[fx->add_subcommand(n)] = f;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      if (*c_struct) return check_structure(path, json_out);
      if (*c_nij) return check_nijenhuis(alg, op, json_out);
      if (*c_rb) return check_rotabaxter(alg, op, scalar_opt(weight, "weight"), json_out);
      if (*c_rel) return check_relative_rb(alg, act, op, scalar_opt(weight, "weight"), json_out);
      if (*c_mor) return check_morphism(alg, target, op, json_out);
    }
    if (*br) return bracket(kind, alg, pfile, qfile);
    if (*coh) return cohomology(alg, coeff, degree, lambda, coh_op);
    if (*extend_cmd) return deform_extend(alg, target, morphism, terms, to_order);
    if (*ver) return verify_theorems(cfg, fixture_names, ver_algebra, identity_names, json_out, report_path);
    if (*fx) {
      if (*fx_j) return emit(io::to_json(fixtures::jackson_sl2(scalar_opt(q, "q"))));
      if (*fx_t)
        return emit(io::to_json(fixtures::threedim(scalar_opt(a, "a"), scalar_opt(b, "b"), scalar_opt(c, "c"), scalar_opt(d, "d"))));
      if (*fx_a) return emit(io::to_json(fixtures::abelian(dim).raw()));
      for (auto& [cmd, f] : named_cmds)
        if (*cmd) return emit(io::to_json(f().raw()));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructureError& e) {
    std::cerr << "error: invalid structure: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kConsistency;
  }
  return kUsage;
}
