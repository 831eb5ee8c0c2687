#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>

#include "CLI11.hpp"
#include "lieham/catalog.hpp"
#include "lieham/error.hpp"
#include "lieham/invariants.hpp"
#include "lieham/io.hpp"
#include "lieham/linalg.hpp"
#include "lieham/parse.hpp"
#include "lieham/pencil.hpp"

using namespace lieham;

namespace {

struct Session {
  long field_sqrt = -1;
  std::string format = "text";
  std::uint64_t seed = 20240601;
};

enum Exit { Ok = 0, Negative = 1, InputError = 2 };

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string index_str(const std::vector<std::size_t>& ix) {
  std::string out = "(";
  for (std::size_t i = 0; i < ix.size(); ++i) out += (i ? "," : "") + std::to_string(ix[i] + 1);
  return out + ")";
}

std::string witness_str(const std::optional<Witness>& w) {
  if (!w) return "no nondegenerate witness";
  std::string out = "nondegenerate witness at (";
  for (std::size_t i = 0; i < w->point.size(); ++i) out += (i ? "," : "") + std::to_string(w->point[i]);
  return out + ")";
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"point", w->point}, {"matrix", matrix_to_json(w->matrix)}};
}

int cmd_check(const Session& s, const std::string& file) {
  Tensor3<Scalar> c = structure_constants_from_json(read_json_file(file), s.field_sqrt);
  auto jac = jacobi_defect(c);
  if (!jac.empty()) {
    const auto& r = jac.front();
    if (s.format == "json") {
      Json ix = Json::array();
      for (auto i : r.index) ix.push_back(i + 1);
      emit({{"valid", false}, {"jacobi", {{"violations", jac.size()}, {"index", ix}, {"residual", r.value.str()}}}});
    } else {
      std::cout << "Jacobi identity fails at (i,j,k,m) = " << index_str(r.index) << ", residual " << r.value.str()
                << " (" << jac.size() << " violations)\n";
    }
    return Negative;
  }
  LieAlgebra g = LieAlgebra::from_tensor(std::move(c));
  auto tags = structure_tags(g);
  auto cas = quadratic_casimir_space(g);
  auto met = compatible_metric_space(g);
  auto coc = two_cocycle_space(g);
  auto cw = nondegenerate_witness(cas.basis, g.dim());
  auto mw = nondegenerate_witness(met.basis, g.dim());
  if (s.format == "json") {
    emit({{"valid", true},
          {"dim", g.dim()},
          {"structure", tags.label()},
          {"semisimple", tags.semisimple},
          {"solvable", tags.solvable},
          {"nilpotent", tags.nilpotent},
          {"center", tags.center_dim},
          {"derived_series", tags.derived},
          {"lower_central_series", tags.lower_central},
          {"casimirs", {{"dim", cas.dim()}, {"witness", witness_json(cw)}}},
          {"metrics", {{"dim", met.dim()}, {"witness", witness_json(mw)}}},
          {"cocycles", {{"dim", coc.dim()}, {"coboundaries", coc.coboundary_dim()}, {"h2", coc.h2_dim()}}}});
    return Ok;
  }
  std::cout << "valid Lie algebra of dimension " << g.dim() << "\n"
            << (tags.semisimple ? "semisimple" : "not semisimple") << ", center " << tags.center_dim << "\n"
            << "structure: " << tags.label() << "\n"
            << "quadratic Casimirs: " << cas.dim() << ", " << witness_str(cw) << "\n"
            << "compatible metrics: " << met.dim() << ", " << witness_str(mw) << "\n"
            << "2-cocycles: " << coc.dim() << ", coboundaries " << coc.coboundary_dim() << ", H2 " << coc.h2_dim()
            << "\n";
  return Ok;
}

int cmd_spaces(const Session& s, const std::string& file, const std::string& which) {
  LieAlgebra g = algebra_from_json(read_json_file(file), s.field_sqrt);
  std::vector<ScalarMatrix> basis;
  std::optional<Witness> w;
  std::optional<CocycleSpace> coc;
  if (which == "cocycles") {
    coc = two_cocycle_space(g);
    basis = coc->basis;
  } else {
    basis = which == "casimirs" ? quadratic_casimir_space(g).basis : compatible_metric_space(g).basis;
    w = nondegenerate_witness(basis, g.dim());
  }
  if (s.format == "json") {
    Json j = space_to_json(basis);
    if (coc) {
      j["coboundaries"] = coc->coboundary_dim();
      j["h2"] = coc->h2_dim();
    } else {
      j["witness"] = witness_json(w);
    }
    emit(j);
  } else if (s.format == "latex") {
    std::cout << latex_space(basis, which == "cocycles" ? "f" : "t") << "\n";
  } else {
    std::cout << which << ": dim " << basis.size();
    if (coc)
      std::cout << ", coboundaries " << coc->coboundary_dim() << ", H2 " << coc->h2_dim() << "\n";
    else
      std::cout << ", " << witness_str(w) << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) std::cout << "basis " << i + 1 << ":\n" << to_string(basis[i]) << "\n";
  }
  return Ok;
}

// Matrix argument: zero, generic, I, <expr>*I or a JSON matrix file.
PolyMatrix matrix_argument(const Session& s, const std::string& spec, const std::vector<ScalarMatrix>& space,
                           std::size_t n, const std::string& prefix) {
  RingPtr base = Ring::make(0);
  if (spec == "zero" || spec == "0") return PolyMatrix(n, n, Poly(base));
  if (spec == "generic") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= space.size(); ++i) names.push_back(prefix + std::to_string(i));
    RingPtr ring = Ring::make(0, names);
    if (space.empty()) return PolyMatrix(n, n, Poly(ring));
    return generic_element(space, n, ring, names);
  }
  static const std::regex scaled(R"((.*?)\s*\*?\s*I)");
  std::smatch m;
  if (!std::filesystem::exists(spec) && std::regex_match(spec, m, scaled)) {
    const std::string coef = m[1].str().empty() ? "1" : m[1].str();
    RingPtr ring = Ring::make(0, identifiers_in(coef));
    Poly c = parse_poly(coef, ring);
    PolyMatrix out(n, n, Poly(ring));
    for (std::size_t i = 0; i < n; ++i) out(i, i) = c;
    return out;
  }
  ScalarMatrix sm = scalar_matrix_from_json(read_json_file(spec), s.field_sqrt);
  if (sm.rows() != n || sm.cols() != n) throw Error(ErrorCode::ShapeMismatch, spec + " is not " + std::to_string(n) + "x" + std::to_string(n));
  return to_poly(sm, base);
}

void print_operator(const Session& s, const PolyOperator& op) {
  if (s.format == "json")
    emit(operator_to_json(op));
  else if (s.format == "latex")
    std::cout << latex_operator(op) << "\n";
  else
    std::cout << "g =\n" << to_string(op.g) << "\nomega =\n" << to_string(op.omega) << "\n";
}

int cmd_build(const Session& s, const std::string& file, const std::string& eta_spec, const std::string& f_spec) {
  LieAlgebra g = algebra_from_json(read_json_file(file), s.field_sqrt);
  PolyMatrix eta = matrix_argument(s, eta_spec, eta_spec == "generic" ? compatible_metric_space(g).basis : std::vector<ScalarMatrix>{}, g.dim(), "g");
  PolyMatrix f = matrix_argument(s, f_spec, f_spec == "generic" ? two_cocycle_space(g).basis : std::vector<ScalarMatrix>{}, g.dim(), "f");
  print_operator(s, to_poly_operator(build_darboux(g, eta, f)));
  return Ok;
}

int print_reports(const Session& s, const std::vector<std::pair<std::string, VerificationReport>>& reports) {
  bool pass = true;
  Json j = Json::object();
  for (const auto& [name, r] : reports) {
    pass = pass && r.pass();
    if (s.format == "json")
      j[name] = report_to_json(r);
    else
      std::cout << name << ": " << (r.pass() ? "PASS" : "FAIL") << "\n" << r.str();
  }
  if (s.format == "json") {
    j["pass"] = pass;
    emit(j);
  }
  return pass ? Ok : Negative;
}

int cmd_verify(const Session& s, const std::string& file, const std::string& criterion) {
  PolyOperator op = operator_from_json(read_json_file(file), s.field_sqrt);
  std::vector<std::pair<std::string, VerificationReport>> reports;
  if (criterion != "theorem1") {
    std::optional<DarbouxOperator> d;
    try {
      d = to_darboux(op);
    } catch (const Error& e) {
      if (criterion == "darboux") throw;
    }
    if (d) reports.emplace_back("darboux", verify_darboux(*d));
  }
  if (criterion != "darboux") reports.emplace_back("theorem1", verify_theorem1(op));
  return print_reports(s, reports);
}

int cmd_apply(const Session& s, const std::string& file, const std::string& density) {
  PolyOperator op = operator_from_json(read_json_file(file), s.field_sqrt);
  QuasilinearSystem sys = apply_to_density(op, density);
  if (s.format == "json")
    emit(system_to_json(sys));
  else
    std::cout << sys.str() << "\n";
  return Ok;
}

int cmd_transform(const Session& s, const std::string& file, const std::string& matrix) {
  PolyOperator op = operator_from_json(read_json_file(file), s.field_sqrt);
  ScalarMatrix a = scalar_matrix_from_json(read_json_file(matrix), s.field_sqrt);
  print_operator(s, transform_operator(op, a));
  return Ok;
}

int cmd_pencil(const Session& s, const std::string& fa, const std::string& fb, const std::string& mode) {
  PolyOperator a = operator_from_json(read_json_file(fa), s.field_sqrt);
  PolyOperator b = operator_from_json(read_json_file(fb), s.field_sqrt);
  std::vector<PencilReport> reports;
  if (mode != "lambda") reports.push_back(pencil_compatible_darboux(to_darboux(a), to_darboux(b)));
  if (mode != "darboux") reports.push_back(pencil_compatible_general(a, b));
  bool ok = true;
  Json j = Json::object();
  for (const auto& r : reports) {
    ok = ok && r.compatible();
    if (s.format == "json")
      j[r.mode] = report_to_json(r);
    else
      std::cout << r.mode << ": " << (r.compatible() ? "compatible" : "not compatible") << "\n" << r.conditions.str();
  }
  if (s.format == "json") {
    j["compatible"] = ok;
    emit(j);
  }
  return ok ? Ok : Negative;
}

int cmd_catalog_list(const Session& s) {
  Json j = Json::array();
  for (const auto& name : catalog_list()) {
    auto e = catalog_get(name);
    if (s.format == "json")
      j.push_back({{"name", e.name}, {"dim", e.dim()}, {"algebra", e.algebra_name}, {"structure", e.structure}});
    else
      std::cout << e.name << "\t" << e.dim() << "\t" << e.algebra_name << "\t" << e.structure << "\n";
  }
  if (s.format == "json") emit(j);
  return Ok;
}

int cmd_catalog_show(const Session& s, const std::string& name) {
  auto e = catalog_get(name);
  if (s.format == "json") {
    emit(entry_to_json(e));
  } else if (s.format == "latex") {
    std::cout << latex_operator(e.op()) << "\n";
  } else {
    std::cout << e.name << ": " << e.algebra_name << ", " << e.structure << ", dim " << e.dim() << "\n";
    for (const auto& p : e.algebra_params) std::cout << "algebra parameter " << p.name << " (representative " << p.value << ")\n";
    for (const auto& x : e.errata)
      std::cout << "erratum " << x.target << "(" << x.row << "," << x.col << "): " << x.printed << " -> " << x.corrected << "\n";
    PolyOperator op = e.op();
    std::cout << "eta =\n" << to_string(op.g) << "\nomega =\n" << to_string(op.omega) << "\n";
  }
  return Ok;
}

int cmd_catalog_verify(const Session& s, bool all, const std::string& name) {
  if (all || name.empty()) {
    auto summary = verify_all();
    if (s.format == "json")
      emit(report_to_json(summary));
    else
      std::cout << summary.str();
    return summary.count(CheckStatus::Fail) == 0 ? Ok : Negative;
  }
  auto r = verify_entry(name);
  if (s.format == "json")
    emit(report_to_json(r));
  else
    std::cout << r.str();
  return r.status() == CheckStatus::Fail ? Negative : Ok;
}

bool input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::FieldMismatch:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::UnknownIndeterminate:
    case ErrorCode::UnknownEntry:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for Lie algebras and non-homogeneous hydrodynamic-type Hamiltonian operators"};
  Session s;
  app.add_option("--field-sqrt", s.field_sqrt, "Square-free d of the coefficient field Q(sqrt d); 0 for Q")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed", s.seed, "Accepted for compatibility; every command is deterministic");
  app.require_subcommand(1);

  std::string file, file2, which, eta = "generic", f = "zero", criterion = "both", density, mode = "both", name;
  bool all = false;
  std::function<int()> run;

  auto* check = app.add_subcommand("check", "Validate an algebra and report tags and invariant dimensions")->fallthrough();
  check->add_option("algebra", file, "Algebra JSON")->required();
  check->callback([&] { run = [&] { return cmd_check(s, file); }; });

  auto* spaces = app.add_subcommand("spaces", "Print a basis of the Casimir, metric or cocycle space")->fallthrough();
  spaces->add_option("algebra", file, "Algebra JSON")->required();
  spaces->add_option("which", which, "casimirs|metrics|cocycles")->required()->check(CLI::IsMember({"casimirs", "metrics", "cocycles"}));
  spaces->callback([&] { run = [&] { return cmd_spaces(s, file, which); }; });

  auto* op = app.add_subcommand("operator", "Build, verify, apply or transform an operator")->fallthrough();
  op->require_subcommand(1);
  auto* build = op->add_subcommand("build", "Darboux operator from an algebra, a metric and a cocycle")->fallthrough();
  build->add_option("algebra", file, "Algebra JSON")->required();
  build->add_option("--eta", eta, "zero, generic, I, <expr>*I or a matrix JSON file");
  build->add_option("--f", f, "zero, generic or a matrix JSON file");
  build->callback([&] { run = [&] { return cmd_build(s, file, eta, f); }; });
  auto* verify = op->add_subcommand("verify", "Check the Hamiltonian conditions")->fallthrough();
  verify->add_option("operator", file, "Operator JSON")->required();
  verify->add_option("--criterion", criterion, "darboux|theorem1|both")->check(CLI::IsMember({"darboux", "theorem1", "both"}));
  verify->callback([&] { run = [&] { return cmd_verify(s, file, criterion); }; });
  auto* apply = op->add_subcommand("apply", "Quasilinear system generated by a hydrodynamic density")->fallthrough();
  apply->add_option("operator", file, "Operator JSON")->required();
  apply->add_option("--density,density", density, "Polynomial density h(u)")->required();
  apply->callback([&] { run = [&] { return cmd_apply(s, file, density); }; });
  auto* transform = op->add_subcommand("transform", "Change field coordinates u~ = A u")->fallthrough();
  transform->add_option("operator", file, "Operator JSON")->required();
  transform->add_option("matrix", file2, "Matrix JSON")->required();
  transform->callback([&] { run = [&] { return cmd_transform(s, file, file2); }; });

  auto* pencil = app.add_subcommand("pencil", "Compatibility of two operators")->fallthrough();
  pencil->add_option("a", file, "Operator JSON")->required();
  pencil->add_option("b", file2, "Operator JSON")->required();
  pencil->add_option("--mode", mode, "darboux|lambda|both")->check(CLI::IsMember({"darboux", "lambda", "both"}));
  pencil->callback([&] { run = [&] { return cmd_pencil(s, file, file2, mode); }; });

  auto* catalog = app.add_subcommand("catalog", "Embedded operator catalog")->fallthrough();
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List entries")->fallthrough()->callback([&] { run = [&] { return cmd_catalog_list(s); }; });
  auto* show = catalog->add_subcommand("show", "Show one entry")->fallthrough();
  show->add_option("name", name)->required();
  show->callback([&] { run = [&] { return cmd_catalog_show(s, name); }; });
  auto* cverify = catalog->add_subcommand("verify", "Verify one entry or all")->fallthrough();
  cverify->add_flag("--all", all, "Verify every entry");
  cverify->add_option("name", name);
  cverify->callback([&] { run = [&] { return cmd_catalog_verify(s, all, name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return InputError;
  }
  try {
    if (s.field_sqrt > 1 && !Scalar::square_free(s.field_sqrt))
      throw Error(ErrorCode::FieldMismatch, "--field-sqrt must be square-free");
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error(e.code()) ? InputError : Negative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Negative;
  }
}
