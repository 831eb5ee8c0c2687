#include "lieham/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "lieham/error.hpp"
#include "lieham/parse.hpp"

namespace lieham {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

long resolve_field(const Json& j, long flag) {
  long file = -1;
  if (j.contains("field_sqrt")) {
    const auto& f = j["field_sqrt"];
    if (!f.is_number_integer() || f.get<long>() < 0) fail("field_sqrt", "expected a non-negative integer");
    file = f.get<long>();
    if (file > 1 && !Scalar::square_free(file)) fail("field_sqrt", "must be square-free");
  }
  if (file >= 0 && flag >= 0 && file != flag)
    throw Error(ErrorCode::FieldMismatch, "file declares sqrt(" + std::to_string(file) + "), flag sqrt(" +
                                              std::to_string(flag) + ")");
  return file >= 0 ? file : flag;
}

void check_field(long value_field, long d, const std::string& where) {
  if (d >= 0 && value_field != 0 && value_field != d)
    throw Error(ErrorCode::FieldMismatch, where + ": sqrt(" + std::to_string(value_field) + ") outside Q(sqrt(" +
                                              std::to_string(d) + "))");
}

std::size_t require_dim(const Json& j) {
  if (!j.is_object()) fail("document", "expected a JSON object");
  if (!j.contains("dim")) fail("dim", "missing");
  const auto& d = j["dim"];
  if (!d.is_number_integer() || d.get<long>() <= 0) fail("dim", "expected a positive integer");
  return d.get<std::size_t>();
}

std::string cell_text(const Json& c, const std::string& where) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_number_integer()) return std::to_string(c.get<long>());
  fail(where, "expected a string or an integer");
}

StringMatrix string_matrix(const Json& j, std::size_t n, const std::string& field) {
  if (!j.is_array() || j.size() != n) fail(field, "expected " + std::to_string(n) + " rows");
  StringMatrix out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[i];
    const std::string where = field + "[" + std::to_string(i + 1) + "]";
    if (!row.is_array() || row.size() != n) fail(where, "expected " + std::to_string(n) + " entries");
    std::vector<std::string> r;
    for (std::size_t k = 0; k < n; ++k) r.push_back(cell_text(row[k], where + "[" + std::to_string(k + 1) + "]"));
    out.push_back(std::move(r));
  }
  return out;
}

std::string frac(const mpq_class& q) {
  mpq_class a = abs(q);
  if (a.get_den() == 1) return a.get_num().get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_scalar(const Scalar& s) {
  std::string out;
  const auto& r = s.rational_part();
  const auto& q = s.radical_part();
  if (r != 0) out = (r < 0 ? "-" : "") + frac(r);
  if (q != 0) {
    std::string root = "\\sqrt{" + std::to_string(s.field()) + "}";
    const mpq_class a = abs(q);
    std::string mag = a == 1 ? root : (a.get_den() == 1 ? a.get_num().get_str() + root : frac(a) + root);
    out += (q < 0 ? "-" : (out.empty() ? "" : "+")) + mag;
  }
  return out.empty() ? "0" : out;
}

const std::set<std::string>& greek() {
  static const std::set<std::string> g{"alpha", "beta", "gamma", "delta", "epsilon", "lambda", "mu", "nu", "theta", "kappa"};
  return g;
}

std::string latex_name(const std::string& name) {
  static const std::regex upper(R"(([ufa])(\d+))");
  static const std::regex lower(R"(([A-Za-z]+)(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, upper)) return m[1].str() + "^{" + m[2].str() + "}";
  if (greek().count(name)) return "\\" + name;
  if (std::regex_match(name, m, lower)) {
    std::string base = greek().count(m[1].str()) ? "\\" + m[1].str() : m[1].str();
    return base + "_{" + m[2].str() + "}";
  }
  return name;
}

std::string latex_monomial(const Ring& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    std::string base = latex_name(ring.var(i).name);
    if (e[i] != 1) {
      if (base.find('^') != std::string::npos) base = "(" + base + ")";
      base += "^{" + std::to_string(e[i]) + "}";
    }
    out += (out.empty() ? "" : " ") + base;
  }
  return out;
}

std::string pmatrix(const std::vector<std::vector<std::string>>& cells) {
  std::string out = "\\begin{pmatrix}\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) line += (j ? " & " : " ") + row[j];
    out += line + " \\\\\n";
  }
  return out + "\\end{pmatrix}";
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, const std::string& where) {
  const std::string text = cell_text(j, where);
  try {
    return parse_scalar(text);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  j["field_sqrt"] = g.field();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      Json out = Json::object();
      for (std::size_t m = 0; m < g.dim(); ++m)
        if (!g.c(i, k, m).is_zero()) out[std::to_string(m + 1)] = scalar_to_json(g.c(i, k, m));
      if (!out.empty()) brackets.push_back({{"i", i + 1}, {"j", k + 1}, {"out", out}});
    }
  j["brackets"] = brackets;
  return j;
}

Tensor3<Scalar> structure_constants_from_json(const Json& j, long field_sqrt) {
  const std::size_t n = require_dim(j);
  const long d = resolve_field(j, field_sqrt);
  Tensor3<Scalar> c(n, Scalar(0));
  if (!j.contains("brackets")) return c;
  const auto& list = j["brackets"];
  if (!list.is_array()) fail("brackets", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t b = 0; b < list.size(); ++b) {
    const auto& br = list[b];
    const std::string where = "brackets[" + std::to_string(b + 1) + "]";
    if (!br.is_object()) fail(where, "expected an object");
    for (const char* key : {"i", "j"})
      if (!br.contains(key) || !br[key].is_number_integer() || br[key].get<long>() < 1 || br[key].get<long>() > static_cast<long>(n))
        fail(where + "." + key, "expected an index in 1.." + std::to_string(n));
    const auto i = br["i"].get<std::size_t>();
    const auto k = br["j"].get<std::size_t>();
    if (i >= k) fail(where, "brackets list pairs with i < j only");
    if (!seen.insert({i, k}).second) fail(where, "duplicate pair");
    if (!br.contains("out") || !br["out"].is_object()) fail(where + ".out", "expected an object");
    for (const auto& [key, value] : br["out"].items()) {
      std::size_t m = 0;
      try {
        m = std::stoul(key);
      } catch (const std::exception&) {
        fail(where + ".out", "key " + key + " is not an index");
      }
      if (m < 1 || m > n) fail(where + ".out", "index " + key + " out of range");
      Scalar v = scalar_from_json(value, where + ".out." + key);
      check_field(v.field(), d, where + ".out." + key);
      c(i - 1, k - 1, m - 1) = v;
      c(k - 1, i - 1, m - 1) = -v;
    }
  }
  return c;
}

LieAlgebra algebra_from_json(const Json& j, long field_sqrt) {
  return LieAlgebra::from_tensor(structure_constants_from_json(j, field_sqrt));
}

Json operator_to_json(const PolyOperator& op) {
  Json j;
  j["dim"] = op.dim();
  long d = 0;
  for (const auto* m : {&op.g, &op.omega})
    for (const auto& p : m->data())
      if (p.field() != 0) d = p.field();
  j["field_sqrt"] = d;
  j["g"] = matrix_to_json(op.g);
  j["omega"] = matrix_to_json(op.omega);
  j["params"] = op.ring->param_names();
  return j;
}

PolyOperator operator_from_json(const Json& j, long field_sqrt) {
  const std::size_t n = require_dim(j);
  const long d = resolve_field(j, field_sqrt);
  if (!j.contains("g")) fail("g", "missing");
  if (!j.contains("omega")) fail("omega", "missing");
  std::vector<std::string> params;
  if (j.contains("params")) {
    if (!j["params"].is_array()) fail("params", "expected an array of names");
    for (const auto& p : j["params"]) {
      if (!p.is_string()) fail("params", "expected an array of names");
      params.push_back(p.get<std::string>());
    }
  }
  PolyOperator op = parse_operator(string_matrix(j["g"], n, "g"), string_matrix(j["omega"], n, "omega"), params);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::string at = "[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]";
      check_field(op.g(i, k).field(), d, "g" + at);
      check_field(op.omega(i, k).field(), d, "omega" + at);
    }
  return op;
}

Json matrix_to_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

ScalarMatrix scalar_matrix_from_json(const Json& j, long field_sqrt) {
  const Json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
  const long d = j.is_object() ? resolve_field(j, field_sqrt) : field_sqrt;
  if (!rows.is_array() || rows.empty()) fail("matrix", "expected a non-empty array of rows");
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].is_array() ? rows[0].size() : 0;
  ScalarMatrix m(r, c, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    const std::string where = "matrix[" + std::to_string(i + 1) + "]";
    if (!rows[i].is_array() || rows[i].size() != c) fail(where, "rows must have equal length");
    for (std::size_t k = 0; k < c; ++k) {
      m(i, k) = scalar_from_json(rows[i][k], where + "[" + std::to_string(k + 1) + "]");
      check_field(m(i, k).field(), d, where);
    }
  }
  return m;
}

Json space_to_json(const std::vector<ScalarMatrix>& basis) {
  Json j;
  j["dim"] = basis.size();
  Json b = Json::array();
  for (const auto& m : basis) b.push_back(matrix_to_json(m));
  j["basis"] = b;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass();
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json cj{{"name", c.name}, {"pass", c.pass}, {"violations", c.violations}};
    if (!c.pass) {
      Json ix = Json::array();
      for (auto i : c.index) ix.push_back(i + 1);
      cj["index"] = ix;
      cj["residual"] = c.residual.str();
    }
    conds.push_back(cj);
  }
  j["conditions"] = conds;
  return j;
}

Json report_to_json(const PencilReport& r) {
  Json j{{"mode", r.mode}, {"compatible", r.compatible()}};
  j["conditions"] = report_to_json(r.conditions)["conditions"];
  return j;
}

Json report_to_json(const EntryReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return {{"name", r.name}, {"status", status_name(r.status())}, {"seconds", r.seconds}, {"checks", checks}};
}

Json report_to_json(const CatalogSummary& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(report_to_json(e));
  return {{"entries", entries},
          {"counts",
           {{"total", s.entries.size()},
            {"pass", s.count(CheckStatus::Pass)},
            {"flag", s.count(CheckStatus::Flag)},
            {"fail", s.count(CheckStatus::Fail)}}},
          {"seconds", s.seconds}};
}

Json system_to_json(const QuasilinearSystem& s) {
  Json w = Json::array();
  for (const auto& p : s.w) w.push_back(p.str());
  return {{"v", matrix_to_json(s.v)}, {"w", w}};
}

Json entry_to_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["algebra"] = e.algebra_name;
  j["structure"] = e.structure;
  j["computed_structure"] = e.tags.label();
  j["source"] = e.source;
  j["dim"] = e.dim();
  Json ap = Json::array();
  for (const auto& p : e.algebra_params) ap.push_back({{"name", p.name}, {"value", p.value}});
  j["algebra_params"] = ap;
  Json br = Json::array();
  for (const auto& b : e.brackets) {
    Json out = Json::object();
    for (const auto& [k, c] : b.out) out[std::to_string(k)] = c;
    br.push_back({{"i", b.i}, {"j", b.j}, {"out", out}});
  }
  j["brackets"] = br;
  j["eta"] = e.eta;
  j["omega"] = e.omega;
  j["eta_params"] = e.eta_params;
  j["f_params"] = e.f_params;
  Json er = Json::array();
  for (const auto& x : e.errata)
    er.push_back({{"target", x.target}, {"row", x.row}, {"col", x.col}, {"printed", x.printed}, {"corrected", x.corrected}});
  j["errata"] = er;
  return j;
}

std::string latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = latex_monomial(*p.ring(), e);
    std::string term;
    bool negative = false;
    if (mono.empty()) {
      term = latex_scalar(c);
      if (term[0] == '-' && c.is_rational()) {
        negative = true;
        term = term.substr(1);
      }
    } else if (c.is_rational()) {
      const mpq_class& q = c.rational_part();
      negative = q < 0;
      mpq_class a = abs(q);
      if (a.get_den() != 1) {
        std::string num = a.get_num() == 1 ? mono : a.get_num().get_str() + " " + mono;
        term = "\\frac{" + num + "}{" + a.get_den().get_str() + "}";
      } else {
        term = a == 1 ? mono : a.get_num().get_str() + " " + mono;
      }
    } else {
      term = "\\left(" + latex_scalar(c) + "\\right) " + mono;
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? "-" : "+") + term;
  }
  return out;
}

std::string latex(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) cells[i].push_back(latex(m(i, k)));
  return pmatrix(cells);
}

std::string latex(const ScalarMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) cells[i].push_back(latex_scalar(m(i, k)));
  return pmatrix(cells);
}

std::string latex_operator(const PolyOperator& op) {
  const std::size_t n = op.dim();
  std::map<std::size_t, Scalar> origin;
  for (std::size_t i = 0; i < op.ring->field_count(); ++i) origin[i] = Scalar(0);
  PolyMatrix constant(n, n, Poly(op.ring)), linear(n, n, Poly(op.ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      constant(i, k) = op.omega(i, k).evaluate(origin);
      linear(i, k) = op.omega(i, k) - constant(i, k);
    }
  std::vector<std::string> parts;
  if (!is_zero_matrix(op.g)) parts.push_back(latex(op.g) + "\n\\partial_x");
  if (!is_zero_matrix(linear)) parts.push_back(latex(linear));
  if (!is_zero_matrix(constant)) parts.push_back(latex(constant));
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "\n+\n") + p;
  return out;
}

std::string latex_space(const std::vector<ScalarMatrix>& basis, const std::string& param) {
  if (basis.empty()) return "0";
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= basis.size(); ++i) names.push_back(param + std::to_string(i));
  RingPtr ring = Ring::make(0, names);
  return latex(generic_element(basis, basis[0].rows(), ring, names));
}

}  // namespace lieham
