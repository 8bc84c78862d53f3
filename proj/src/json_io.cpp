#include "qc2/json_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace qc2 {

Json element_to_json(const FieldElement& e) {
  return Json{{"p", e.field()->p()}, {"m", e.field()->m()}, {"coeffs", e.coeffs()}};
}

FieldElement element_from_json(const FieldPtr& field, const Json& j) {
  if (j.at("p").get<long long>() != field->p() || j.at("m").get<int>() != field->m())
    fail(ErrorKind::SpecMismatch, "element JSON does not match the field");
  return field->element(field->from_coeffs(j.at("coeffs").get<std::vector<int>>()));
}

Json ga_to_json(const GroupAlgebraElement& a) {
  Json coeffs = Json::array();
  for (int k = 0; k < a.n(); ++k) coeffs.push_back(element_to_json(a.coeff_elem(k)));
  return Json{{"n", a.n()}, {"coeffs", std::move(coeffs)}};
}

GroupAlgebraElement ga_from_json(const GroupAlgebraPtr& alg, const Json& j) {
  if (j.at("n").get<int>() != alg->n())
    fail(ErrorKind::SpecMismatch, "element JSON does not match n");
  std::vector<int> c;
  for (const Json& e : j.at("coeffs"))
    c.push_back(element_from_json(alg->field(), e).value());
  return alg->from_coeffs(std::move(c));
}

Json goursat_to_json(const GoursatData& d) {
  return Json{{"C1", d.c1.support_list()},
              {"C2", d.c2.support_list()},
              {"C12", d.c12.support_list()},
              {"g", ga_to_json(d.g)}};
}

GoursatData goursat_from_json(const IdempotentBasisPtr& basis, const Json& j) {
  auto code = [&](const char* key) {
    return CyclicCode::from_support(basis, j.at(key).get<std::vector<int>>());
  };
  return GoursatData::make(code("C1"), code("C2"), code("C12"),
                           ga_from_json(basis->algebra(), j.at("g")));
}

Json report_to_json(const ClassificationReport& r) {
  Json counts{{"self_dual", r.self_dual},
              {r.char2 ? "dihedral" : "consta_dihedral", r.dihedral},
              {"double_circulant", r.double_circulant},
              {"principal", r.principal}};
  Json criteria;
  for (int k = 0; k < 6; ++k) criteria["c" + std::to_string(k + 1)] = r.criteria[k];
  Json witnesses = Json::object();
  if (r.witness_self_dual)
    witnesses["self_dual"] = goursat_to_json(*r.witness_self_dual);
  if (r.witness_not_dihedral)
    witnesses[r.char2 ? "self_dual_not_dihedral" : "self_dual_not_consta_dihedral"] =
        goursat_to_json(*r.witness_not_dihedral);
  if (r.witness_not_double_circulant)
    witnesses["self_dual_not_double_circulant"] =
        goursat_to_json(*r.witness_not_double_circulant);
  return Json{{"field", {{"p", r.p}, {"m", r.m}, {"q", r.q}}},
              {"n", r.n},
              {"predicate", r.char2 ? "dihedral" : "consta-dihedral"},
              {"counts", std::move(counts)},
              {"count_provenance", "exhaustive enumeration by this tool"},
              {"criteria", std::move(criteria)},
              {"self_dual_exists", r.self_dual_exists},
              {"verdict", r.verdict ? "ok" : "violated"},
              {"witnesses", std::move(witnesses)}};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.field()->format(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix read_matrix(std::istream& in, const FieldPtr& field) {
  int rows, cols;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    fail(ErrorKind::Io, "matrix file must start with 'rows cols'");
  Matrix m(field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) fail(ErrorKind::Io, "matrix file ended early");
      m.set(i, j, field->parse(tok));
    }
  return m;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << m.field()->format(m.at(i, j));
    out << "\n";
  }
}

namespace {

std::vector<int> parse_coeff_list(const std::string& s, const GroupAlgebraPtr& alg) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(alg->field()->parse(tok));
  if (static_cast<int>(out.size()) != alg->n())
    fail(ErrorKind::Parse, "expected " + std::to_string(alg->n()) + " coefficients");
  return out;
}

}  // namespace

std::vector<GeneratorPair> read_generator_pairs(std::istream& in,
                                                const GroupAlgebraPtr& alg) {
  std::vector<GeneratorPair> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t bar = line.find('|');
    if (bar == std::string::npos)
      fail(ErrorKind::Io, "generator line must be 'a coeffs | b coeffs'");
    out.emplace_back(alg->from_coeffs(parse_coeff_list(line.substr(0, bar), alg)),
                     alg->from_coeffs(parse_coeff_list(line.substr(bar + 1), alg)));
  }
  return out;
}

void write_generator_pairs(std::ostream& out, const std::vector<GeneratorPair>& gens) {
  for (const auto& [a, b] : gens) {
    const Field& f = *a.field();
    for (int k = 0; k < a.n(); ++k) out << (k ? "," : "") << f.format(a.coeff(k));
    out << " | ";
    for (int k = 0; k < b.n(); ++k) out << (k ? "," : "") << f.format(b.coeff(k));
    out << "\n";
  }
}

}  // namespace qc2
