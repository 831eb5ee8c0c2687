#include "lieham/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "catalog_data.hpp"
#include "lieham/error.hpp"
#include "lieham/invariants.hpp"
#include "lieham/linalg.hpp"
#include "lieham/parse.hpp"

namespace lieham {

namespace {

const detail::CatalogSource& find_source(const std::string& name) {
  for (const auto& s : detail::catalog_sources())
    if (s.name == name) return s;
  throw Error(ErrorCode::UnknownEntry, name);
}

std::string combine(const std::vector<std::string>& parts) {
  std::vector<std::string> kept;
  for (const auto& p : parts)
    if (p != "0") kept.push_back(p);
  if (kept.empty()) return "0";
  if (kept.size() == 1) return kept[0];
  std::string out;
  for (const auto& p : kept) out += (out.empty() ? "(" : "+(") + p + ")";
  return out;
}

bool is_algebra_param(const std::vector<AlgebraParam>& ps, const std::string& name) {
  return std::any_of(ps.begin(), ps.end(), [&](const AlgebraParam& p) { return p.name == name; });
}

std::vector<std::string> params_in(const StringMatrix& m, const std::vector<AlgebraParam>& alg) {
  std::vector<std::string> out;
  for (const auto& row : m)
    for (const auto& cell : row)
      for (const auto& id : identifiers_in(cell)) {
        if (is_field_var_name(id) || is_algebra_param(alg, id)) continue;
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
      }
  return out;
}

std::vector<std::string> algebra_param_names(const std::vector<AlgebraParam>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.name);
  return out;
}

LieAlgebra numeric_algebra(std::size_t n, const detail::CatalogSource& s, const std::map<std::string, Scalar>& reps) {
  RingPtr ring = Ring::make(0, algebra_param_names(s.algebra_params));
  std::vector<BracketSpec> specs;
  for (const auto& b : s.brackets) {
    BracketSpec spec{b.i, b.j, {}};
    for (const auto& [k, coef] : b.out) spec.out[k] = parse_poly(coef, ring).evaluate(reps).constant_value();
    specs.push_back(std::move(spec));
  }
  return LieAlgebra::from_brackets(n, specs);
}

CatalogEntry make_entry(const detail::CatalogSource& s) {
  const std::size_t n = s.eta.size();
  StringMatrix eta = s.eta;
  std::vector<StringMatrix> blocks = s.omega;
  for (const auto& e : s.errata) {
    StringMatrix& m = e.target == "eta" ? eta : blocks.at(std::stoul(e.target.substr(5)) - 1);
    std::string& cell = m.at(e.row - 1).at(e.col - 1);
    if (cell != e.printed) throw Error(ErrorCode::ParseError, s.name + ": erratum does not match printed cell");
    cell = e.corrected;
  }
  StringMatrix omega(n, std::vector<std::string>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::string> parts;
      for (const auto& b : blocks) parts.push_back(b[i][j]);
      omega[i][j] = combine(parts);
    }
  std::map<std::string, Scalar> reps;
  for (const auto& p : s.algebra_params) reps[p.name] = parse_scalar(p.value);
  LieAlgebra alg = numeric_algebra(n, s, reps);
  StructureTags tags = structure_tags(alg);
  return CatalogEntry{s.name,
                      s.algebra,
                      s.structure,
                      s.source,
                      s.algebra_params,
                      s.eta,
                      s.omega,
                      s.errata,
                      s.brackets,
                      eta,
                      omega,
                      params_in(eta, s.algebra_params),
                      params_in(omega, s.algebra_params),
                      std::move(alg),
                      std::move(tags)};
}

// Coefficient matrices of m with respect to each parameter, plus the parameter-free part.
struct LinearFamily {
  ScalarMatrix base;
  std::vector<ScalarMatrix> directions;
};

LinearFamily linear_family(const PolyMatrix& m, const std::vector<std::string>& params,
                           const std::map<std::string, Scalar>& reps) {
  PolyMatrix at = evaluate(m, reps);
  std::map<std::string, Scalar> zero;
  for (const auto& p : params) zero[p] = Scalar(0);
  LinearFamily out{to_scalar(evaluate(at, zero)), {}};
  for (const auto& p : params) {
    PolyMatrix d(m.rows(), m.cols(), Poly(m(0, 0).ring()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (at(i, j).degree_in(at(i, j).ring()->require(p)) > 1)
          throw Error(ErrorCode::InvalidOperand, "family is not linear in " + p);
        d(i, j) = at(i, j).partial(p);
      }
    out.directions.push_back(to_scalar(d));
  }
  return out;
}

CatalogCheck check(const std::string& name, bool ok, const std::string& detail, CheckStatus failure = CheckStatus::Fail) {
  return {name, ok ? CheckStatus::Pass : failure, detail};
}

template <class F>
void run(std::vector<CatalogCheck>& out, const std::string& name, F&& f) {
  try {
    out.push_back(f());
  } catch (const std::exception& e) {
    out.push_back({name, CheckStatus::Fail, e.what()});
  }
}

std::string dims(std::size_t printed, std::size_t computed) {
  return "printed " + std::to_string(printed) + ", computed " + std::to_string(computed);
}

}  // namespace

std::map<std::string, Scalar> CatalogEntry::representative_values() const {
  std::map<std::string, Scalar> out;
  for (const auto& p : algebra_params) out[p.name] = parse_scalar(p.value);
  return out;
}

PolyOperator CatalogEntry::op() const { return parse_operator(eta, omega, algebra_param_names(algebra_params)); }

Tensor3<Poly> CatalogEntry::symbolic_constants() const {
  RingPtr ring = op().ring;
  Tensor3<Poly> c(dim(), Poly(ring));
  for (const auto& b : brackets)
    for (const auto& [k, coef] : b.out) {
      Poly p = parse_poly(coef, ring);
      c(b.i - 1, b.j - 1, k - 1) = p;
      c(b.j - 1, b.i - 1, k - 1) = -p;
    }
  return c;
}

std::vector<std::string> catalog_list() {
  std::vector<std::string> out;
  for (const auto& s : detail::catalog_sources()) out.push_back(s.name);
  return out;
}

CatalogEntry catalog_get(const std::string& name) { return make_entry(find_source(name)); }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Flag:
      return "FLAG";
    case CheckStatus::Fail:
      return "FAIL";
  }
  return "?";
}

CheckStatus EntryReport::status() const {
  CheckStatus worst = CheckStatus::Pass;
  for (const auto& c : checks) worst = std::max(worst, c.status);
  return worst;
}

const CatalogCheck& EntryReport::at(const std::string& check) const {
  for (const auto& c : checks)
    if (c.name == check) return c;
  throw Error(ErrorCode::UnknownEntry, "no check " + check + " for " + name);
}

std::string EntryReport::str() const {
  std::ostringstream os;
  os << name << ": " << status_name(status()) << "\n";
  for (const auto& c : checks) {
    os << "  " << status_name(c.status) << " " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::size_t CatalogSummary::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const EntryReport& e) { return e.status() == s; }));
}

std::string CatalogSummary::str() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << status_name(e.status()) << " " << e.name;
    for (const auto& c : e.checks)
      if (c.status != CheckStatus::Pass) os << " [" << c.name << ": " << c.detail << "]";
    os << "\n";
  }
  os << entries.size() << " entries: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Flag)
     << " flag, " << count(CheckStatus::Fail) << " fail\n";
  return os.str();
}

EntryReport verify_entry(const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  EntryReport r{name, {}, 0};
  const auto& src = find_source(name);
  std::optional<CatalogEntry> entry;
  run(r.checks, "jacobi", [&] {
    entry = make_entry(src);
    return check("jacobi", true, std::to_string(entry->dim()) + "-dimensional");
  });
  if (!entry) return r;
  const CatalogEntry& e = *entry;
  const auto reps = e.representative_values();
  std::optional<PolyOperator> op;
  std::optional<DarbouxOperator> dop;

  run(r.checks, "omega-linear-part", [&] {
    op = e.op();
    dop = to_darboux(*op);
    Tensor3<Poly> c = lift(e.symbolic_constants(), op->ring);
    return check("omega-linear-part", c == dop->c, "structure constants read off omega");
  });
  run(r.checks, "structure-tags", [&] {
    const std::string label = e.tags.label();
    return check("structure-tags", label == e.structure, "computed " + label + ", listed " + e.structure,
                 CheckStatus::Flag);
  });
  run(r.checks, "darboux", [&] {
    if (!dop) throw Error(ErrorCode::InvalidOperand, "operator not in Darboux form");
    auto rep = verify_darboux(*dop);
    return check("darboux", rep.pass(), rep.pass() ? "identically in all parameters" : rep.first_failure());
  });
  run(r.checks, "theorem1", [&] {
    if (!op) throw Error(ErrorCode::InvalidOperand, "operator did not parse");
    auto rep = verify_theorem1(*op);
    return check("theorem1", rep.pass(), rep.pass() ? "" : rep.first_failure());
  });

  std::optional<LinearFamily> eta_family;
  run(r.checks, "metric-membership", [&] {
    eta_family = linear_family(op->g, e.eta_params, reps);
    bool ok = is_compatible_metric(e.algebra, eta_family->base);
    for (const auto& d : eta_family->directions) ok = ok && is_compatible_metric(e.algebra, d);
    return check("metric-membership", ok, std::to_string(e.eta_params.size()) + " directions");
  });
  run(r.checks, "cocycle-membership", [&] {
    auto fam = linear_family(dop->f, e.f_params, reps);
    bool ok = is_two_cocycle(e.algebra, fam.base);
    for (const auto& d : fam.directions) ok = ok && is_two_cocycle(e.algebra, d);
    return check("cocycle-membership", ok, std::to_string(e.f_params.size()) + " directions");
  });
  run(r.checks, "metric-dimension", [&] {
    const std::size_t m = compatible_metric_space(e.algebra).dim();
    return check("metric-dimension", m == e.eta_params.size(), dims(e.eta_params.size(), m), CheckStatus::Flag);
  });
  run(r.checks, "cocycle-dimension", [&] {
    const std::size_t z = two_cocycle_space(e.algebra).dim();
    return check("cocycle-dimension", z == e.f_params.size(), dims(e.f_params.size(), z), CheckStatus::Flag);
  });
  run(r.checks, "casimir-metric-duality", [&] {
    auto d = casimir_metric_duality(e.algebra);
    return check("casimir-metric-duality", d.ok(),
                 "casimir " + std::to_string(d.casimir_dim) + ", metric " + std::to_string(d.metric_dim));
  });
  run(r.checks, "eta-inverse-casimir", [&] {
    if (!eta_family) throw Error(ErrorCode::InvalidOperand, "eta family unavailable");
    if (!is_zero_matrix(eta_family->base)) throw Error(ErrorCode::InvalidOperand, "eta has a parameter-free part");
    auto w = nondegenerate_witness(eta_family->directions, e.dim());
    if (!w) return check("eta-inverse-casimir", false, "printed eta is degenerate for all parameters");
    return check("eta-inverse-casimir", is_quadratic_casimir(e.algebra, inverse(w->matrix)), "at a nondegenerate point");
  });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CatalogSummary verify_all(bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  CatalogSummary s;
  const auto names = catalog_list();
  if (parallel) {
    std::vector<std::future<EntryReport>> tasks;
    for (const auto& n : names) tasks.push_back(std::async(std::launch::async, verify_entry, n));
    for (auto& t : tasks) s.entries.push_back(t.get());
  } else {
    for (const auto& n : names) s.entries.push_back(verify_entry(n));
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace lieham
