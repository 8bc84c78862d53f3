#include "qc2/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qc2/json_io.hpp"
#include "qc2/oracle.hpp"

namespace qc2 {

namespace {

long long env_cap() {
  if (const char* s = std::getenv("QCD_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    fail(ErrorKind::Parse, "QCD_CAP must be a positive integer");
  }
  return kDefaultEnumCap;
}

// "--field p^m" or "--field p^m:c0,c1,...,cm".
FieldPtr parse_field(const std::string& spec) {
  std::string head = spec;
  std::optional<std::vector<int>> modulus;
  if (size_t colon = spec.find(':'); colon != std::string::npos) {
    head = spec.substr(0, colon);
    std::vector<int> coeffs;
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoi(tok));
    modulus = std::move(coeffs);
  }
  long long p;
  int m = 1;
  try {
    if (size_t caret = head.find('^'); caret != std::string::npos) {
      p = std::stoll(head.substr(0, caret));
      m = std::stoi(head.substr(caret + 1));
    } else {
      p = std::stoll(head);
    }
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "field spec must be p, p^m or p^m:c0,...,cm");
  }
  return Field::make(p, m, std::move(modulus));
}

std::vector<int> parse_support(const std::string& s, const IdempotentBasisPtr& basis) {
  std::vector<int> out;
  if (s.empty() || s == "none") return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int i = -1;
    try {
      i = std::stoi(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "support must be a comma list of indices");
    }
    if (i < 0 || i >= basis->size())
      fail(ErrorKind::Parse, "support index " + tok + " out of range");
    out.push_back(i);
  }
  return out;
}

GroupAlgebraElement parse_ga(const std::string& s, const GroupAlgebraPtr& alg) {
  if (s.empty() || s == "none") return alg->zero();
  std::vector<int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(alg->field()->parse(tok));
  if (static_cast<int>(c.size()) != alg->n())
    fail(ErrorKind::Parse,
         "expected " + std::to_string(alg->n()) + " comma-separated coefficients");
  return alg->from_coeffs(std::move(c));
}

std::string coeff_list(const GroupAlgebraElement& a) {
  std::string out;
  for (int k = 0; k < a.n(); ++k)
    out += (k ? "," : "") + a.field()->format(a.coeff(k));
  return out;
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      out << (j ? " " : "  ") << m.field()->format(m.at(i, j));
    out << "\n";
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct GoursatFlags {
  std::string c1, c2, c12, g;

  GoursatData build(const IdempotentBasisPtr& basis) const {
    return GoursatData::make(
        CyclicCode::from_support(basis, parse_support(c1, basis)),
        CyclicCode::from_support(basis, parse_support(c2, basis)),
        CyclicCode::from_support(basis, parse_support(c12, basis)),
        parse_ga(g, basis->algebra()));
  }
};

Json component_json(const QuasiCyclicCode& code) {
  static const char* kTags[] = {"Zero", "Plane", "Line10", "Line01", "Graph"};
  Json comps = Json::array();
  for (int i = 0; i < code.size(); ++i) {
    Json c{{"idempotent", i}, {"type", kTags[static_cast<int>(code.component(i).tag)]}};
    if (code.component(i).tag == ComponentTag::Graph)
      c["slope"] = coeff_list(code.component(i).slope);
    comps.push_back(std::move(c));
  }
  return comps;
}

// The worked fixtures behind the repro subcommand: the three examples over
// F4 (n = 3) and F5 (n = 4) with their expected verdicts.
struct ReproCase {
  std::string name;
  GoursatData data;
  bool self_dual, dihedral_like, double_circulant;
};

std::vector<ReproCase> repro_cases_f4() {
  auto basis = IdempotentBasis::compute(Field::make(2, 2), 3);
  auto alg = basis->algebra();
  CyclicCode e0(basis, 1ULL << 0), e1(basis, 1ULL << 1), e1bar(basis, 1ULL << 2);
  CyclicCode zero(basis, 0), full(basis, basis->full_mask());
  GroupAlgebraElement g0 = basis->idempotent(0);
  return {
      {"(1)", GoursatData::make(e1, e1, e0, g0), true, false, false},
      {"(2)", GoursatData::make(e1, e1bar, e0, g0), true, true, false},
      {"(3)", GoursatData::make(zero, zero, full, alg->one()), true, true, true},
  };
}

// The two matrices displayed with the F4 example; cases (1) and (2) must
// reproduce their row spaces exactly.
Matrix displayed_f4_matrix(const FieldPtr& f, bool second) {
  int w = f->from_coeffs({0, 1}), w2 = f->mul(w, w);
  if (second)
    return Matrix::from_rows(
        f, {{1, 1, 1, 1, 1, 1}, {1, w, w2, 0, 0, 0}, {0, 0, 0, 1, w2, w}});
  return Matrix::from_rows(
      f, {{1, 1, 1, 1, 1, 1}, {1, w, w2, 0, 0, 0}, {0, 0, 0, 1, w, w2}});
}

std::vector<ReproCase> repro_cases_f5() {
  auto basis = IdempotentBasis::compute(Field::make(5, 1), 4);
  auto alg = basis->algebra();
  CyclicCode e2(basis, 1ULL << 2), e2bar(basis, 1ULL << 3);
  CyclicCode e01(basis, 0b0011), zero(basis, 0), full(basis, basis->full_mask());
  GroupAlgebraElement g = basis->sum_idempotents(0b0011).scaled(2);
  GroupAlgebraElement two = alg->one().scaled(2);
  return {
      {"(1)", GoursatData::make(e2, e2, e01, g), true, false, false},
      {"(2)", GoursatData::make(e2, e2bar, e01, g), true, true, false},
      {"(3)", GoursatData::make(zero, zero, full, two), true, true, true},
  };
}

int cmd_repro(const std::string& which, bool json, std::ostream& out) {
  bool odd = which == "example-6.5";
  if (which != "example-1.1" && which != "example-5.5" && which != "example-6.5")
    fail(ErrorKind::Parse, "unknown fixture '" + which + "'");
  auto cases = odd ? repro_cases_f5() : repro_cases_f4();
  if (which == "example-1.1") cases.pop_back();  // cases (1) and (2) only

  const char* pred = odd ? "consta_dihedral" : "dihedral";
  Json jout = Json::array();
  for (const auto& rc : cases) {
    const auto& basis = rc.data.basis();
    bool sd = qc_is_self_dual(rc.data);
    bool dih = odd ? qc_is_consta_dihedral(rc.data) : qc_is_dihedral(rc.data);
    bool dc = qc_is_double_circulant(rc.data);
    if (sd != rc.self_dual || dih != rc.dihedral_like || dc != rc.double_circulant)
      fail(ErrorKind::Internal, "fixture verdict mismatch in " + which + rc.name);
    Matrix gm = qc_generator_matrix(rc.data);
    if (!odd && (rc.name == "(1)" || rc.name == "(2)")) {
      Matrix shown = displayed_f4_matrix(basis->field(), rc.name == "(2)");
      if (!same_row_space(gm, shown))
        fail(ErrorKind::Internal, "row space differs from the displayed matrix");
    }
    if (json) {
      jout.push_back(Json{{"case", rc.name},
                          {"data", goursat_to_json(rc.data)},
                          {"self_dual", sd},
                          {pred, dih},
                          {"double_circulant", dc},
                          {"genmat", matrix_to_json(gm)}});
    } else {
      out << which << " case " << rc.name << " over F" << basis->q()
          << ", n = " << basis->n() << "\n";
      if (which == "example-6.5" && rc.name == "(1)") {
        out << " idempotents:\n";
        for (int i = 0; i < basis->size(); ++i)
          out << "  e" << i << " = [" << coeff_list(basis->idempotent(i)) << "]\n";
      }
      out << " generator matrix (canonical):\n";
      print_matrix(out, gm);
      out << " self-dual: " << (sd ? "true" : "false") << "\n"
          << " " << pred << ": " << (dih ? "true" : "false") << "\n"
          << " double-circulant: " << (dc ? "true" : "false") << "\n";
    }
  }
  if (json) emit(out, jout);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact structure toolkit for 2-quasi-cyclic codes over small fields"};
  app.name("qc2");
  app.require_subcommand(1);

  std::string field_spec, support, op, g_str, gens_file, genmat_file, oracle_check;
  std::string what, grid = "default", repro_name, json_path;
  GoursatFlags gf;
  int n = 0;
  long long cap = -1;
  bool json = false;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_spec, "field as p, p^m or p^m:c0,...,cm")
        ->required();
  };
  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "coindex n (length of the cyclic half)")->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "JSON output"); };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "enumeration cap (default QCD_CAP or 10^7)");
  };
  auto add_goursat = [&](CLI::App* cmd) {
    cmd->add_option("--c1", gf.c1, "support of C1, e.g. 1,2 (or 'none')");
    cmd->add_option("--c2", gf.c2, "support of C2");
    cmd->add_option("--c12", gf.c12, "support of C12");
    cmd->add_option("--g", gf.g, "g as comma list of n coefficients");
  };

  CLI::App* c_field = app.add_subcommand("field", "construct a field and list it");
  add_field(c_field);
  add_json(c_field);

  CLI::App* c_factor = app.add_subcommand("factor", "factor x^n - 1 over the field");
  add_field(c_factor);
  add_n(c_factor);
  add_json(c_factor);

  CLI::App* c_idem =
      app.add_subcommand("idempotents", "primitive idempotents of F[x]/(x^n - 1)");
  add_field(c_idem);
  add_n(c_idem);
  add_json(c_idem);

  CLI::App* c_cyclic = app.add_subcommand("cyclic", "cyclic-code operations on a support");
  add_field(c_cyclic);
  add_n(c_cyclic);
  c_cyclic->add_option("--support", support, "support indices, e.g. 0,2 (or 'none')");
  c_cyclic->add_option("--op", op, "dual|lcd|selforth|genmat|identity|units")->required();
  add_cap(c_cyclic);
  add_json(c_cyclic);

  CLI::App* c_construct =
      app.add_subcommand("construct", "build a 2-quasi-cyclic code from Goursat data");
  add_field(c_construct);
  add_n(c_construct);
  add_goursat(c_construct);
  std::string out_file;
  c_construct->add_option("--out", out_file, "also write rows as a generator-pair file");
  add_json(c_construct);

  CLI::App* c_decompose =
      app.add_subcommand("decompose", "Goursat normal form of a generator-pair file");
  add_field(c_decompose);
  add_n(c_decompose);
  c_decompose->add_option("--gens", gens_file, "file of 'a coeffs | b coeffs' lines")
      ->required();
  add_json(c_decompose);

  CLI::App* c_check = app.add_subcommand("check", "evaluate a predicate on Goursat data");
  add_field(c_check);
  add_n(c_check);
  add_goursat(c_check);
  c_check
      ->add_option("--what", what,
                   "selfdual|dihedral|constadihedral|doublecirculant|principal")
      ->required();
  add_json(c_check);

  CLI::App* c_oracle =
      app.add_subcommand("oracle", "matrix-level checks on a generator matrix file");
  add_field(c_oracle);
  c_oracle->add_option("--genmat", genmat_file, "matrix file: 'rows cols' then entries")
      ->required();
  c_oracle->add_option("--check", oracle_check, "selfdual|yclosed|ytildeclosed|dc|shift")
      ->required();
  add_json(c_oracle);

  CLI::App* c_classify =
      app.add_subcommand("classify", "verify the coincidence theorem at one (q, n)");
  add_field(c_classify);
  add_n(c_classify);
  add_cap(c_classify);
  c_classify->add_option("--json", json_path, "write the JSON report ('-' for stdout)")
      ->expected(0, 1);

  CLI::App* c_sweep = app.add_subcommand("sweep", "verify the theorem over a grid");
  c_sweep->add_option("--grid", grid, "grid name (default)");
  add_cap(c_sweep);

  CLI::App* c_repro = app.add_subcommand("repro", "reproduce a worked fixture");
  c_repro->add_option("name", repro_name, "example-1.1 | example-5.5 | example-6.5")
      ->required();
  add_json(c_repro);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cap < 0) cap = env_cap();

    if (*c_field) {
      FieldPtr f = parse_field(field_spec);
      if (json) {
        Json j{{"p", f->p()}, {"m", f->m()}, {"q", f->q()}, {"modulus", f->modulus()}};
        if (f->q() <= 256) {
          Json elems = Json::array();
          for (const auto& e : f->elements()) elems.push_back(e.str());
          j["elements"] = std::move(elems);
        }
        emit(out, j);
      } else {
        out << "F_" << f->q() << " = Z_" << f->p() << "[t]/(";
        for (int k = 0; k <= f->m(); ++k)
          out << (k ? " + " : "") << f->modulus()[k] << (k ? "t^" + std::to_string(k) : "");
        out << ")\n";
        if (f->q() <= 256) {
          out << "elements:";
          for (const auto& e : f->elements()) out << " " << e.str();
          out << "\n";
        }
      }
    } else if (*c_factor) {
      auto basis = IdempotentBasis::compute(parse_field(field_spec), n);
      if (json) {
        Json factors = Json::array(), cosets = Json::array(), dims = Json::array();
        for (int i = 0; i < basis->size(); ++i) {
          Json fc = Json::array();
          for (int k = 0; k <= basis->factor(i).degree(); ++k)
            fc.push_back(basis->field()->format(basis->factor(i).coeff(k)));
          factors.push_back(std::move(fc));
          cosets.push_back(basis->coset(i).members);
          dims.push_back(basis->dim(i));
        }
        emit(out, Json{{"factors", std::move(factors)},
                       {"cosets", std::move(cosets)},
                       {"dims", std::move(dims)}});
      } else {
        for (int i = 0; i < basis->size(); ++i) {
          out << "f" << i << " = " << basis->factor(i).str() << "   coset {";
          const auto& mem = basis->coset(i).members;
          for (size_t k = 0; k < mem.size(); ++k) out << (k ? "," : "") << mem[k];
          out << "}\n";
        }
      }
    } else if (*c_idem) {
      auto basis = IdempotentBasis::compute(parse_field(field_spec), n);
      if (json) {
        Json idems = Json::array(), dims = Json::array();
        for (int i = 0; i < basis->size(); ++i) {
          idems.push_back(ga_to_json(basis->idempotent(i)));
          dims.push_back(basis->dim(i));
        }
        emit(out, Json{{"idempotents", std::move(idems)},
                       {"dims", std::move(dims)},
                       {"bar_perm", basis->bar_permutation()},
                       {"E1", basis->bar_fixed()},
                       {"E2", basis->bar_moved()}});
      } else {
        for (int i = 0; i < basis->size(); ++i)
          out << "e" << i << " = [" << coeff_list(basis->idempotent(i))
              << "]  dim " << basis->dim(i) << "  bar -> e" << basis->bar_of(i) << "\n";
        auto fixed = basis->bar_fixed(), movedl = basis->bar_moved();
        out << "E' =";
        for (int i : fixed) out << " e" << i;
        out << "\nE'' =";
        for (int i : movedl) out << " e" << i;
        out << "\n";
      }
    } else if (*c_cyclic) {
      auto basis = IdempotentBasis::compute(parse_field(field_spec), n);
      CyclicCode c = CyclicCode::from_support(basis, parse_support(support, basis));
      if (op == "dual") {
        CyclicCode d = c.dual();
        emit(out, Json{{"support", d.support_list()}, {"dim", d.dim()}});
      } else if (op == "lcd") {
        emit(out, Json{{"lcd", c.is_lcd()}});
      } else if (op == "selforth") {
        emit(out, Json{{"self_orthogonal", c.is_self_orthogonal()}});
      } else if (op == "genmat") {
        Matrix m = c.generator_matrix();
        if (json)
          emit(out, matrix_to_json(m));
        else
          write_matrix(out, m);
      } else if (op == "identity") {
        emit(out, Json{{"e_C", coeff_list(c.identity_element())}});
      } else if (op == "units") {
        Json us = Json::array();
        for (const auto& u : c.units(cap)) us.push_back(coeff_list(u));
        emit(out, Json{{"count", us.size()}, {"units", std::move(us)}});
      } else {
        fail(ErrorKind::Parse, "unknown --op '" + op + "'");
      }
    } else if (*c_construct) {
      auto basis = IdempotentBasis::compute(parse_field(field_spec), n);
      GoursatData data = gf.build(basis);
      QuasiCyclicCode code = qc_construct(data);
      Matrix gm = qc_generator_matrix(data);
      if (!out_file.empty()) {
        std::ofstream fout(out_file);
        if (!fout) fail(ErrorKind::Io, "cannot write " + out_file);
        std::vector<GeneratorPair> rows;
        auto alg = basis->algebra();
        for (int i = 0; i < gm.rows(); ++i) {
          auto r = gm.row_vec(i);
          rows.emplace_back(
              alg->from_coeffs({r.begin(), r.begin() + n}),
              alg->from_coeffs({r.begin() + n, r.end()}));
        }
        write_generator_pairs(fout, rows);
      }
      if (json) {
        emit(out, Json{{"data", goursat_to_json(data)},
                       {"dim", code.dim()},
                       {"components", component_json(code)},
                       {"genmat", matrix_to_json(gm)}});
      } else {
        out << "dim = " << code.dim() << "\n";
        print_matrix(out, gm);
      }
    } else if (*c_decompose) {
      auto basis = IdempotentBasis::compute(parse_field(field_spec), n);
      std::ifstream fin(gens_file);
      if (!fin) fail(ErrorKind::Io, "cannot read " + gens_file);
      GoursatData data = qc_decompose(basis, read_generator_pairs(fin, basis->algebra()));
      Json j = goursat_to_json(data);
      j["dim"] = data.c1.dim() + data.c2.dim() + data.c12.dim();
      emit(out, j);
    } else if (*c_check) {
      auto basis = IdempotentBasis::compute(parse_field(field_spec), n);
      GoursatData data = gf.build(basis);
      bool result;
      if (what == "selfdual") result = qc_is_self_dual(data);
      else if (what == "dihedral") result = qc_is_dihedral(data);
      else if (what == "constadihedral") result = qc_is_consta_dihedral(data);
      else if (what == "doublecirculant") result = qc_is_double_circulant(data);
      else if (what == "principal") result = qc_is_principal(data);
      else fail(ErrorKind::Parse, "unknown --what '" + what + "'");
      emit(out, Json{{"what", what}, {"result", result}});
    } else if (*c_oracle) {
      FieldPtr f = parse_field(field_spec);
      std::ifstream fin(genmat_file);
      if (!fin) fail(ErrorKind::Io, "cannot read " + genmat_file);
      Matrix g = read_matrix(fin, f);
      if (g.cols() % 2 != 0)
        fail(ErrorKind::Parse, "generator matrix must have an even column count");
      int half = g.cols() / 2;
      if (oracle_check == "selfdual")
        emit(out, Json{{"check", oracle_check}, {"result", oracle_self_dual(g, half)}});
      else if (oracle_check == "yclosed")
        emit(out, Json{{"check", oracle_check}, {"result", oracle_y_closed(g, half)}});
      else if (oracle_check == "ytildeclosed")
        emit(out,
             Json{{"check", oracle_check}, {"result", oracle_ytilde_closed(g, half)}});
      else if (oracle_check == "shift")
        emit(out,
             Json{{"check", oracle_check}, {"result", oracle_shift_invariant(g, half)}});
      else if (oracle_check == "dc") {
        auto a = oracle_double_circulant(g, half);
        Json j{{"check", oracle_check}, {"result", a.has_value()}};
        if (a) j["a"] = coeff_list(*a);
        emit(out, j);
      } else {
        fail(ErrorKind::Parse, "unknown --check '" + oracle_check + "'");
      }
    } else if (*c_classify) {
      auto basis = IdempotentBasis::compute(parse_field(field_spec), n);
      ClassificationReport rep = verify_theorem(basis, cap);
      Json j = report_to_json(rep);
      bool json_mode = c_classify->count("--json") > 0;
      if (json_mode && !json_path.empty() && json_path != "-") {
        std::ofstream fout(json_path);
        if (!fout) fail(ErrorKind::Io, "cannot write " + json_path);
        fout << j.dump(2) << "\n";
      } else if (json_mode) {
        emit(out, j);
      } else {
        out << "q = " << rep.q << ", n = " << rep.n << " ("
            << (rep.char2 ? "dihedral" : "consta-dihedral") << " case)\n"
            << "self-dual codes: " << rep.self_dual << "  "
            << (rep.char2 ? "dihedral" : "consta-dihedral") << ": " << rep.dihedral
            << "  double-circulant: " << rep.double_circulant
            << "  principal: " << rep.principal << "\n";
        out << "criteria:";
        for (int k = 0; k < 6; ++k)
          out << " (" << k + 1 << ")=" << (rep.criteria[k] ? "true" : "false");
        out << "\nverdict: all equivalences hold ("
            << (rep.self_dual_exists ? "self-dual codes exist"
                                     : "no self-dual codes at this (q, n)")
            << ")\n";
      }
    } else if (*c_sweep) {
      if (grid != "default") fail(ErrorKind::Parse, "unknown grid '" + grid + "'");
      for (const auto& pt : default_grid(cap)) {
        auto basis = IdempotentBasis::compute(Field::make(pt.p, pt.m), pt.n);
        out << report_to_json(verify_theorem(basis, cap)).dump() << "\n";
      }
    } else if (*c_repro) {
      return cmd_repro(repro_name, json, out);
    }
    return 0;
  } catch (const Error& e) {
    Json j{{"error", {{"kind", to_string(e.kind())}, {"detail", e.detail()}}}};
    err << j.dump() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }
}

}  // namespace qc2
