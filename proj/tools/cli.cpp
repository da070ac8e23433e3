#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "qpb/bracket.hpp"
#include "qpb/classify.hpp"
#include "qpb/errors.hpp"
#include "qpb/flatness.hpp"
#include "qpb/lang.hpp"
#include "qpb/orbit.hpp"
#include "qpb/quantize.hpp"
#include "qpb/realize.hpp"
#include "qpb/series10.hpp"

namespace qpb::cli {

namespace {

// Thrown for input problems that lang/core do not already classify.
struct UsageError : Error {
  using Error::Error;
};

struct Outcome {
  Report report;
  bool ok = true;
};

bool is_atom(const Report& r) {
  return !std::holds_alternative<Report::List>(r.value()) && !std::holds_alternative<Report::Object>(r.value());
}

std::string atom_str(const Report& r);

// Atoms without spaces go on one line.
bool is_word(const Report& r) { return is_atom(r) && atom_str(r).find(' ') == std::string::npos; }

std::string atom_str(const Report& r) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "-";
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else return "";
      },
      r.value());
}

void render(const Report& r, std::ostream& out, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (const auto* o = std::get_if<Report::Object>(&r.value())) {
    for (const auto& [k, v] : *o) {
      if (is_atom(v)) {
        out << pad << k << ": " << atom_str(v) << "\n";
      } else if (const auto* l = std::get_if<Report::List>(&v.value());
                 l && !l->empty() && std::all_of(l->begin(), l->end(), is_word)) {
        out << pad << k << ":";
        for (const auto& e : *l) out << " " << atom_str(e);
        out << "\n";
      } else {
        out << pad << k << ":\n";
        render(v, out, indent + 2);
      }
    }
  } else if (const auto* l = std::get_if<Report::List>(&r.value())) {
    for (const auto& e : *l) {
      if (is_atom(e)) {
        out << pad << "- " << atom_str(e) << "\n";
      } else if (const auto* row = std::get_if<Report::List>(&e.value());
                 row && std::all_of(row->begin(), row->end(), is_word)) {
        out << pad << "-";
        for (const auto& x : *row) out << " " << atom_str(x);
        out << "\n";
      } else if (const auto* obj = std::get_if<Report::Object>(&e.value());
                 obj && std::all_of(obj->begin(), obj->end(), [](const auto& kv) { return is_atom(kv.second); })) {
        bool first = true;
        for (const auto& [k, v] : *obj) {
          out << pad << (first ? "- " : "  ") << k << ": " << atom_str(v) << "\n";
          first = false;
        }
      } else {
        out << pad << "-\n";
        render(e, out, indent + 2);
      }
    }
  } else {
    out << pad << atom_str(r) << "\n";
  }
}

Report bracket_report(const QuadraticBracket& b) {
  Report r = Report::object();
  r["y12"] = to_report(b.y(0, 1));
  r["y23"] = to_report(b.y(1, 2));
  r["y31"] = to_report(b.y(2, 0));
  return r;
}

Report rational_list(const std::vector<Rational>& v) {
  Report::List l;
  for (const auto& q : v) l.emplace_back(q.get_str());
  return Report(std::move(l));
}

std::string tensor_str(const Tensor2& t) {
  NormalForm nf;
  for (uint32_t w = 0; w < 9; ++w)
    if (!t[w].is_zero()) nf[word_from_index(w, 2)] = t[w];
  return to_string(nf);
}

QuadraticBracket load_bracket(const std::string& path) { return parse_bracket(read_file(path)); }

Outcome cmd_check(const std::string& path) {
  const QuadraticBracket b = load_bracket(path);
  const JacobiResidual j = jacobi_residual(b);
  const auto v = v_vector(b);
  RationalMatrix P(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t k = 0; k < 3; ++k) {
      Exponent e{0, 0, 0};
      e[k] = 1;
      P(i, k) = v[i].coeff(e).constant();
    }
  Outcome o;
  o.report["jacobi_linear_form"] = to_report(j.linear_form);
  o.report["jacobi_triple"] = to_report(j.triple);
  o.report["poisson"] = j.poisson();
  o.report["P"] = to_report(P);
  o.report["trace"] = P.trace().get_str();
  o.report["rank"] = P.rank();
  o.ok = j.poisson() && sgn(P.trace()) == 0;
  return o;
}

Outcome cmd_classify(const std::string& path) {
  const QuadraticBracket b = load_bracket(path);
  Outcome o;
  try {
    const ClassificationReport c = classify(b);
    Report& r = o.report;
    r["label"] = to_string(c.label);
    r["rank"] = c.rank;
    r["charpoly"] = c.charpoly;
    r["rational_spectrum"] = c.rational_spectrum;
    r["eigenvalues"] = rational_list(c.eigenvalues);
    if (c.A) r["A"] = to_report(*c.A);
    if (c.canonical) r["canonical"] = bracket_report(*c.canonical);
    if (c.f) r["f"] = to_report(*c.f);
    if (c.g) r["g"] = to_report(*c.g);
    Report params = Report::object();
    for (const auto& [k, v] : c.params) params[k] = v.get_str();
    r["params"] = params;
    Report consts = Report::object();
    for (const auto& [k, v] : c.constants) consts[k] = v.get_str();
    r["constants"] = consts;
  } catch (const NotPoisson& e) {
    o.report["poisson"] = false;
    o.report["error"] = e.what();
    o.ok = false;
  }
  return o;
}

Outcome cmd_quantize(const std::string& path, int degree) {
  if (degree < 1 || degree > kMaxDegree) throw UsageError("--degree must be between 1 and 8");
  const QuadraticBracket b = load_bracket(path);
  const auto rels = relations(b);
  Outcome o;
  Report rl = Report::list();
  for (const auto& r : rels) rl.push_back(tensor_str(r.t));
  o.report["relations"] = rl;
  try {
    const RewritingSystem rs = triangularize(rels);
    o.report["rules"] = to_report(rs);
    const NormalForm res = diamond_residual(rs);
    o.report["diamond_residual"] = to_report(res);
    o.report["confluent"] = res.empty();
    o.ok = res.empty();
  } catch (const SingularSystem& e) {
    o.report["rules"] = Report();
    o.report["error"] = e.what();
    o.ok = false;
  }
  Report gen = Report::list(), zero = Report::list();
  bool pbw = true;
  for (int d = 1; d <= degree; ++d) {
    auto [g, z] = graded_dimension(rels, d);
    gen.push_back(g);
    zero.push_back(z);
    const size_t expected = static_cast<size_t>((d + 1) * (d + 2) / 2);
    pbw = pbw && g == expected && z == expected;
  }
  o.report["dimensions"] = gen;
  o.report["dimensions_at_zero"] = zero;
  o.report["pbw"] = pbw;
  o.ok = o.ok && pbw;
  return o;
}

Outcome cmd_flatness(const std::string& path, int degree) {
  if (degree < 3 || degree > kMaxDegree) throw UsageError("--degree must be between 3 and 8");
  const auto rels = tensors(relations(load_bracket(path)));
  Outcome o;
  Report sp = Report::list();
  for (int k = 3; k <= degree; ++k) {
    const SplittingResult s = splitting_check(rels, k);
    Report e = Report::object();
    e["degree"] = k;
    e["rank_zero"] = s.rank_zero;
    e["rank_generic"] = s.rank_generic;
    e["splitting"] = s.splitting;
    sp.push_back(e);
    o.ok = o.ok && s.splitting;
  }
  o.report["splitting"] = sp;
  const WResult w = intersection_W(rels);
  Report wr = Report::object();
  wr["dim_generic"] = w.dim_generic;
  wr["dim_zero"] = w.dim_zero;
  wr["witness_ok"] = w.witness_ok;
  wr["witness"] = w.witness;
  o.report["W"] = wr;
  o.ok = o.ok && w.witness_ok;
  return o;
}

Outcome cmd_dualize(const std::string& path) {
  const QuadraticBracket b = load_bracket(path);
  const QuadraticBracket d = dualize(b);
  Outcome o;
  Report cs = Report::list();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          if (sgn(d.c(i, j, k, l)) != 0)
            cs.push_back("c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" + std::to_string(k + 1) +
                         "][" + std::to_string(l + 1) + "] = " + d.c(i, j, k, l).get_str());
  o.report["dual_constants"] = cs;
  o.report["dual_parity"] = d.parity() == Parity::odd ? "odd" : "even";
  const bool involution = dualize(d) == b;
  o.report["involution"] = involution;
  TensorSubspace I{2, {}};
  for (const auto& t : tensors(relations(b))) I.rows.push_back(to_sparse(std::vector<Scalar>(t.begin(), t.end())));
  const size_t dim_i = I.ranks().generic, dim_dual = dual_subspace(I).ranks().generic;
  o.report["dim_I"] = dim_i;
  o.report["dim_I_dual"] = dim_dual;
  o.ok = involution && dim_i + dim_dual == 9;
  return o;
}

Outcome cmd_orbit(const std::string& path, const std::optional<std::string>& witness, std::optional<int> id,
                  const std::optional<std::string>& c) {
  const Poly f = parse_cubic(read_file(path));
  const CubicOrbitReport fp = orbit_fingerprint(f);
  Outcome o;
  o.report["essential_variables"] = fp.essential_variables;
  if (fp.binary_discriminant) o.report["binary_discriminant"] = fp.binary_discriminant->get_str();
  if (fp.tjurina) o.report["tjurina"] = *fp.tjurina;
  if (fp.tjurina_hessian) o.report["tjurina_hessian"] = *fp.tjurina_hessian;
  Report cand = Report::list();
  for (int k : fp.candidates) cand.push_back(k);
  o.report["candidates"] = cand;
  if (witness.has_value() != id.has_value()) throw UsageError("--witness and --id go together");
  if (witness) {
    const RationalMatrix A = parse_matrix(*witness);
    std::optional<Rational> cv;
    if (c) cv = parse_rational(*c);
    const bool ok = orbit_verify(f, A, *id, cv);
    o.report["witness_ok"] = ok;
    o.ok = ok;
  }
  return o;
}

Outcome cmd_realize(const std::string& id, const std::vector<std::string>& params, bool do_verify,
                    std::optional<int> indep) {
  const Realization r = catalog(id, parse_params(params));
  Outcome o;
  o.report["case"] = r.id;
  o.report["backend"] = r.backend;
  o.report["x1"] = print(r.x[0]);
  o.report["x2"] = print(r.x[1]);
  o.report["x3"] = print(r.x[2]);
  Report der = Report::object();
  for (const auto& [k, v] : r.derived) der[k] = to_report(v);
  o.report["derived"] = der;
  Report rl = Report::list();
  for (const auto& t : r.relations) rl.push_back(tensor_str(t));
  o.report["relations"] = rl;
  if (do_verify) {
    const Triple res = verify(r.x, r.relations);
    Report rr = Report::list();
    bool zero = true;
    for (const auto& e : res) {
      rr.push_back(print(e));
      zero = zero && e.is_zero();
    }
    o.report["residuals"] = rr;
    o.report["verified"] = zero;
    o.ok = zero;
  }
  if (indep) {
    const IndependenceResult ir = independence(r.x, *indep);
    Report e = Report::object();
    e["degree"] = *indep;
    e["rank"] = ir.rank;
    e["monomials"] = ir.monomials;
    e["independent"] = ir.independent;
    o.report["independence"] = e;
    o.ok = o.ok && ir.independent;
  }
  return o;
}

Outcome cmd_series10(const std::string& c1, const std::string& c2, int order) {
  if (order < 2) throw UsageError("--order must be at least 2");
  const Series10Result s = solve_case10(parse_rational(c1), parse_rational(c2), order);
  Outcome o;
  o.report["x1"] = s.x[0].str();
  o.report["x2"] = s.x[1].str();
  o.report["x3"] = s.x[2].str();
  o.report["u"] = s.u.str();
  Report rr = Report::list();
  for (const auto& e : s.residual) rr.push_back(e.str());
  o.report["residuals"] = rr;
  Report dl = Report::list();
  for (const auto& d : s.delta) dl.push_back(d.str());
  o.report["delta"] = dl;
  o.report["ok"] = s.ok();
  o.ok = s.ok();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic Poisson brackets in three variables: classification, quantization, realizations"};
  app.name("qpb");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Structured (JSON) output");

  std::string file;
  int degree = 4;
  std::optional<std::string> witness, cval;
  std::optional<int> orbit_id, indep;
  std::string case_id, c1 = "0", c2 = "0";
  std::vector<std::string> params;
  bool do_verify = false;
  int order = 4;
  std::function<Outcome()> action;

  auto* check = app.add_subcommand("check", "Jacobi identity, P matrix and trace");
  check->add_option("file", file, "Bracket file")->required();
  check->callback([&] { action = [&] { return cmd_check(file); }; });

  auto* cls = app.add_subcommand("classify", "Rank/Jordan case, canonical coordinates and cubic form");
  cls->add_option("file", file, "Bracket file")->required();
  cls->callback([&] { action = [&] { return cmd_classify(file); }; });

  auto* q = app.add_subcommand("quantize", "Relations, rewriting rules, diamond residual and PBW dimensions");
  q->add_option("file", file, "Bracket file")->required();
  q->add_option("--degree", degree, "Highest degree of the dimension table")->capture_default_str();
  q->callback([&] { action = [&] { return cmd_quantize(file, degree); }; });

  auto* fl = app.add_subcommand("flatness", "Splitting ranks and the W intersection");
  fl->add_option("file", file, "Bracket file")->required();
  fl->add_option("--degree", degree, "Highest tensor degree")->required();
  fl->callback([&] { action = [&] { return cmd_flatness(file, degree); }; });

  auto* du = app.add_subcommand("dualize", "Dual structure constants and dim I + dim I*");
  du->add_option("file", file, "Bracket file")->required();
  du->callback([&] { action = [&] { return cmd_dualize(file); }; });

  auto* ob = app.add_subcommand("orbit", "Cubic form fingerprint and witness check");
  ob->add_option("file", file, "Cubic file")->required();
  ob->add_option("--witness", witness, "Matrix a,b,c;d,e,f;g,h,i with f(Ax) = representative");
  ob->add_option("--id", orbit_id, "Catalog orbit 1..10");
  ob->add_option("--c", cval, "Orbit 10 parameter");
  ob->callback([&] { action = [&] { return cmd_orbit(file, witness, orbit_id, cval); }; });

  auto* re = app.add_subcommand("realize", "Operator realizations");
  re->add_option("--case", case_id, "Catalog id")->required();
  re->add_option("--params", params, "key=value pairs");
  re->add_flag("--verify", do_verify, "Substitute into the relations");
  re->add_option("--independence", indep, "Check standard monomials up to this degree");
  re->callback([&] { action = [&] { return cmd_realize(case_id, params, do_verify, indep); }; });

  auto* se = app.add_subcommand("series10", "Orbit 10 formal series solution");
  se->add_option("--c1", c1, "Rational c1")->capture_default_str();
  se->add_option("--c2", c2, "Rational c2")->capture_default_str();
  se->add_option("--order", order, "Truncation order N")->capture_default_str();
  se->callback([&] { action = [&] { return cmd_series10(c1, c2, order); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome o = action();
    if (json) out << o.report.dump() << "\n";
    else render(o.report, out, 0);
    return o.ok ? 0 : 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const MissingComponent& e) {
    err << "missing component: " << e.what() << "\n";
  } catch (const NonQuadratic& e) {
    err << "non-quadratic: " << e.what() << "\n";
  } catch (const DegenerateParams& e) {
    err << "degenerate parameters: " << e.what() << "\n";
  } catch (const NotPoisson& e) {
    err << "not Poisson: " << e.what() << "\n";
    return 1;
  } catch (const NonTerminating& e) {
    err << "rewriting does not terminate: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace qpb::cli
