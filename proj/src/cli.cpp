#include "mlie/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "mlie/ricci.hpp"
#include "mlie/soliton.hpp"

namespace mlie {

namespace {

struct usage_error : error {
  using error::error;
};

const LieAlgebra& resolve_algebra(const CliOptions& opt, const Workspace& ws,
                                  std::string* name_out = nullptr) {
  if (!opt.metric.empty()) {
    const auto& nm = ws.metric(opt.metric);
    if (name_out) *name_out = nm.algebra_name;
    return ws.algebra(nm.algebra_name);
  }
  if (ws.algebras.size() == 1) {
    if (name_out) *name_out = ws.algebras.front().first;
    return ws.algebras.front().second;
  }
  throw usage_error("ambiguous algebra: pass -m METRIC or use a single-algebra file");
}

const Metric& resolve_metric(const CliOptions& opt, const Workspace& ws) {
  if (opt.metric.empty()) throw usage_error("this command requires -m METRIC");
  return ws.metric(opt.metric).metric;
}

// Family tokens name inner derivations: adE4 / ade4 / e4.
Index parse_basis_token(const std::string& tok, Index dim) {
  std::string t = tok;
  if (t.rfind("ad", 0) == 0 || t.rfind("Ad", 0) == 0 || t.rfind("AD", 0) == 0) t = t.substr(2);
  if (!t.empty() && (t[0] == 'e' || t[0] == 'E')) t = t.substr(1);
  if (t.size() != 1 || !std::isdigit(static_cast<unsigned char>(t[0])))
    throw usage_error("bad operator token '" + tok + "' (expected e.g. adE4)");
  Index k = t[0] - '0';
  if (k < 1 || k > dim) throw usage_error("basis index out of range in '" + tok + "'");
  return k;
}

// Restriction of a parent-algebra operator to an invariant subspace, in the
// subspace basis.
RatMat restrict_operator(const RatMat& op, const Subspace& s) {
  RatMat out(s.dim(), s.dim());
  for (Index j = 0; j < s.dim(); ++j) {
    RatVec image = op * s.basis().col(j);
    if (!s.contains(image)) throw usage_error("operator does not preserve the subspace");
    out.col(j) = s.coordinates(image);
  }
  return out;
}

struct RestrictionContext {
  Metric metric;                 // metric to operate with
  std::vector<RatMat> family;    // operators in the working basis
  std::optional<Subspace> ideal; // set when --ideal was used
};

// Builds the working metric and family operators, restricted to --ideal when
// given.
RestrictionContext build_context(const CliOptions& opt, const Workspace& ws, size_t want_family) {
  const Metric& m = resolve_metric(opt, ws);
  if (opt.family.size() != want_family)
    throw usage_error("--family must list exactly " + std::to_string(want_family) + " operator(s)");

  std::vector<RatMat> parent_ops;
  for (const auto& tok : opt.family) {
    Index k = parse_basis_token(tok, m.dim());
    parent_ops.push_back(m.algebra().ad_basis(k - 1));
  }

  if (opt.ideal.empty()) {
    if (m.degenerate()) throw usage_error("metric is degenerate");
    return {m, parent_ops, std::nullopt};
  }
  const auto& ns = ws.subspace(opt.ideal);
  RestrictResult rest = restrict_and_complement(m, ns.subspace);
  if (!rest.restricted) throw usage_error("--ideal subspace is not a subalgebra");
  if (rest.restricted->degenerate()) throw usage_error("metric restriction to --ideal is degenerate");
  std::vector<RatMat> restricted;
  for (const auto& op : parent_ops) restricted.push_back(restrict_operator(op, ns.subspace));
  return {*rest.restricted, restricted, ns.subspace};
}

void add_signature(Report& rep, const std::string& name, const Signature& s) {
  rep.values.emplace_back(name + "_pos", Rat(static_cast<long long>(s.pos)));
  rep.values.emplace_back(name + "_neg", Rat(static_cast<long long>(s.neg)));
  rep.values.emplace_back(name + "_zero", Rat(static_cast<long long>(s.zero)));
}

Report cmd_check(const CliOptions&, const Workspace& ws) {
  Report rep;
  rep.verdict = "ok";
  rep.values.emplace_back("algebras", Rat(static_cast<long long>(ws.algebras.size())));
  rep.values.emplace_back("metrics", Rat(static_cast<long long>(ws.metrics.size())));
  rep.values.emplace_back("subspaces", Rat(static_cast<long long>(ws.subspaces.size())));
  return rep;
}

Report cmd_info(const CliOptions& opt, const Workspace& ws) {
  std::string name;
  const LieAlgebra& alg = resolve_algebra(opt, ws, &name);
  AlgebraProfile p = classify(alg);
  Report rep;
  rep.verdict = p.nilpotent ? "nilpotent" : p.solvable ? "solvable" : "not solvable";
  rep.trace.push_back("algebra " + name + " = " + alg.salamon());
  rep.trace.push_back(std::string("unimodular: ") + (p.unimodular ? "yes" : "no"));
  if (p.step) rep.trace.push_back("step: " + std::to_string(*p.step));
  rep.values.emplace_back("dim", Rat(alg.dim()));
  rep.values.emplace_back("rank", Rat(p.rank));
  std::string dd = "derived dims:", ld = "lower central dims:";
  for (auto d : p.derived_dims) dd += " " + std::to_string(d);
  for (auto d : p.lower_central_dims) ld += " " + std::to_string(d);
  rep.trace.push_back(dd);
  rep.trace.push_back(ld);
  return rep;
}

Report cmd_ricci(const CliOptions& opt, const Workspace& ws) {
  const Metric& m = resolve_metric(opt, ws);
  RicciData data = ricci_formula(m);
  Report rep;
  rep.verdict = "ok";
  if (opt.oracle) {
    RicciData oracle = ricci_koszul(m);
    if (!same(data.ric, oracle.ric) || !same(data.ric_op, oracle.ric_op) ||
        data.scalar != oracle.scalar) {
      rep.verdict = "oracle-mismatch";
      rep.exit_code = 1;
    } else {
      rep.trace.push_back("oracle: connection route agrees exactly");
    }
  }
  rep.values.emplace_back("scalar", data.scalar);
  rep.matrices.emplace_back("ric", data.ric);
  rep.matrices.emplace_back("ric_op", data.ric_op);
  return rep;
}

Report cmd_einstein(const CliOptions& opt, const Workspace& ws) {
  const Metric& m = resolve_metric(opt, ws);
  EinsteinVerdict v = einstein_check(m);
  if (opt.oracle) {
    RicciData oracle = ricci_koszul(m);
    if (!same(v.data.ric, oracle.ric)) throw error("oracle mismatch in einstein");
  }
  Report rep;
  switch (v.kind) {
    case EinsteinVerdict::Kind::Einstein:
      rep.verdict = "Einstein";
      break;
    case EinsteinVerdict::Kind::RicciFlat:
      rep.verdict = "RicciFlat";
      break;
    case EinsteinVerdict::Kind::NotEinstein:
      rep.verdict = "NotEinstein";
      rep.exit_code = 1;
      break;
  }
  rep.lambda = v.lambda;
  rep.values.emplace_back("scalar", v.data.scalar);
  rep.matrices.emplace_back("ric_op", v.data.ric_op);
  if (v.kind == EinsteinVerdict::Kind::NotEinstein) rep.matrices.emplace_back("residual", v.residual);
  return rep;
}

Report cmd_derivations(const CliOptions& opt, const Workspace& ws) {
  const LieAlgebra& alg = resolve_algebra(opt, ws);
  auto basis = derivation_space(alg);
  Report rep;
  rep.verdict = "ok";
  rep.values.emplace_back("dim", Rat(static_cast<long long>(basis.size())));
  for (size_t i = 0; i < basis.size(); ++i)
    rep.matrices.emplace_back("D" + std::to_string(i + 1), basis[i]);
  return rep;
}

Report cmd_nilradical(const CliOptions& opt, const Workspace& ws) {
  const LieAlgebra& alg = resolve_algebra(opt, ws);
  NilradicalResult nr = nilradical_detail(alg);
  Report rep;
  rep.verdict = "ok";
  rep.values.emplace_back("dim", Rat(nr.space.dim()));
  rep.values.emplace_back("rank", Rat(nr.rank));
  rep.values.emplace_back("locus_dim", Rat(nr.locus_dim));
  rep.matrices.emplace_back("basis", nr.space.basis());
  rep.trace = nr.trace;
  return rep;
}

Report cmd_nilsoliton(const CliOptions& opt, const Workspace& ws) {
  const Metric& m = resolve_metric(opt, ws);
  NilsolitonResult r = nilsoliton_solve(m);
  Report rep;
  switch (r.kind) {
    case NilsolitonResult::Kind::Unique:
      rep.verdict = "Unique";
      break;
    case NilsolitonResult::Kind::Family:
      rep.verdict = "Family";
      rep.values.emplace_back("family_dim", Rat(r.family_dim));
      break;
    case NilsolitonResult::Kind::None:
      rep.verdict = "NoSolution";
      rep.exit_code = 1;
      break;
  }
  if (r.kind != NilsolitonResult::Kind::None) {
    rep.lambda = r.lambda;
    rep.matrices.emplace_back("derivation", r.derivation);
  }
  rep.matrices.emplace_back("ric_op", r.ricci.ric_op);
  return rep;
}

Report cmd_gen_nilsoliton(const CliOptions& opt, const Workspace& ws) {
  if (opt.family.empty()) throw usage_error("gen-nilsoliton requires --family");
  RestrictionContext ctx = build_context(opt, ws, opt.family.size());
  auto systems = gen_nilsoliton_family_check(ctx.metric, ctx.family);
  Report rep;
  bool any_points = false, any_unsupported = false, all_norational = true;
  for (const auto& sys : systems) {
    std::string tau = sys.tau > 0 ? "+1" : "-1";
    switch (sys.verdict.kind) {
      case PolySolve::Kind::Points: {
        any_points = true;
        all_norational = false;
        for (const auto& pt : sys.verdict.points) {
          std::string line = "tau=" + tau + ": solution";
          for (const auto& [k, v] : pt) line += " " + k + "=" + v.str();
          rep.trace.push_back(line);
        }
        break;
      }
      case PolySolve::Kind::NoRational: {
        std::string why = sys.verdict.real_status == PolySolve::RealStatus::NoReal
                              ? "no real solutions"
                              : sys.verdict.real_status == PolySolve::RealStatus::IrrationalRealExists
                                    ? "only irrational real solutions"
                                    : "no rational solutions";
        rep.trace.push_back("tau=" + tau + ": NoRationalSolution (" + why + ")");
        for (const auto& w : sys.verdict.witness) rep.trace.push_back("  " + w);
        break;
      }
      case PolySolve::Kind::PositiveDim:
        all_norational = false;
        rep.trace.push_back("tau=" + tau + ": PositiveDimensional");
        break;
      case PolySolve::Kind::Unsupported:
        any_unsupported = true;
        all_norational = false;
        rep.trace.push_back("tau=" + tau + ": Unsupported");
        break;
    }
  }
  if (any_unsupported && !any_points) {
    rep.verdict = "Unsupported";
    rep.exit_code = 3;
  } else if (any_points) {
    rep.verdict = "Solutions";
  } else if (all_norational) {
    rep.verdict = "NoRationalSolution";
    rep.exit_code = 1;
  } else {
    rep.verdict = "PositiveDimensional";
  }
  return rep;
}

Report cmd_standard(const CliOptions& opt, const Workspace& ws) {
  const Metric& m = resolve_metric(opt, ws);
  if (m.degenerate()) throw usage_error("metric is degenerate");
  ObstructionResult r = standard_obstruction(m);
  Report rep;
  rep.trace = r.trace;
  switch (r.kind) {
    case ObstructionResult::Kind::NoneExists:
      rep.verdict = "NoneExists";
      rep.exit_code = 1;
      break;
    case ObstructionResult::Kind::Found:
      rep.verdict = "Found";
      break;
    case ObstructionResult::Kind::Unknown:
      rep.verdict = "Unknown";
      rep.exit_code = 3;
      break;
  }
  return rep;
}

Report cmd_iwasawa(const CliOptions& opt, const Workspace& ws) {
  const Metric& m = resolve_metric(opt, ws);
  if (!opt.decomp) throw usage_error("iwasawa requires --decomp GNAME,ANAME");
  const auto& g = ws.subspace(opt.decomp->first);
  const auto& a = ws.subspace(opt.decomp->second);
  Decomposition d{m, g.subspace, a.subspace};
  DecompositionVerdict v = verify_decomposition(d);
  Report rep;
  switch (v.kind) {
    case DecompositionVerdict::Kind::Standard:
      rep.verdict = "Standard";
      break;
    case DecompositionVerdict::Kind::StandardPseudoIwasawa:
      rep.verdict = "StandardPseudoIwasawa";
      break;
    case DecompositionVerdict::Kind::Fails:
      rep.verdict = "Fails";
      rep.exit_code = 1;
      break;
  }
  for (const auto& reason : v.reasons) rep.trace.push_back(reason);
  std::optional<RatVec> h;
  if (opt.candidate_h) {
    RatVec v2(m.dim());
    std::istringstream is(*opt.candidate_h);
    std::string tok;
    Index i = 0;
    while (std::getline(is, tok, ',') && i < m.dim()) v2(i++) = Rat::parse(tok);
    if (i != m.dim()) throw usage_error("--candidate-H needs " + std::to_string(m.dim()) + " entries");
    h = v2;
  }
  IwasawaFlags iw = iwasawa_classify(d, h);
  rep.trace.push_back(std::string("Iw1: ") + (iw.iw1 ? "holds" : "fails"));
  rep.trace.push_back(std::string("Iw2: ") + (iw.iw2 ? "holds" : "fails"));
  rep.trace.push_back(std::string("Iw3: ") + (iw.iw3 == IwasawaFlags::Iw3::Established
                                                  ? "established"
                                                  : "not established"));
  for (const auto& n : iw.notes) rep.trace.push_back(n);
  return rep;
}

Report cmd_aw_correct(const CliOptions& opt, const Workspace& ws) {
  RestrictionContext ctx = build_context(opt, ws, 2);
  AwCorrectionResult r = aw_correction_solve(ctx.metric, ctx.family[0], ctx.family[1]);
  Report rep;
  rep.verdict = r.empty ? "Empty" : "Solvable";
  if (r.empty) rep.exit_code = 1;
  rep.values.emplace_back("commutant_dim", Rat(static_cast<long long>(r.commutant_basis.size())));
  rep.matrices.emplace_back("target_sym", r.target_sym);
  if (!r.empty) {
    rep.matrices.emplace_back("particular", r.particular);
    rep.values.emplace_back("solution_dim", Rat(static_cast<long long>(r.directions.size())));
  }
  for (Index i = 0; i < r.pattern.rows(); ++i) {
    std::string row = "pattern row " + std::to_string(i + 1) + ": [";
    for (Index j = 0; j < r.pattern.cols(); ++j) {
      if (j) row += ", ";
      row += r.pattern(i, j).str();
    }
    rep.trace.push_back(row + "]");
  }
  for (const auto& w : r.witness) rep.trace.push_back(w);
  return rep;
}

Report cmd_orthogonalize(const CliOptions& opt, const Workspace& ws) {
  RestrictionContext ctx = build_context(opt, ws, 0);
  auto vecs = orthogonalize(ctx.metric);
  Report rep;
  rep.verdict = "ok";
  RatMat basis(ctx.metric.dim(), static_cast<Index>(vecs.size()));
  for (size_t i = 0; i < vecs.size(); ++i) {
    basis.col(static_cast<Index>(i)) = vecs[i].v;
    rep.values.emplace_back("norm" + std::to_string(i + 1), vecs[i].norm);
  }
  rep.matrices.emplace_back("vectors", basis);
  add_signature(rep, "signature", signature(ctx.metric));
  return rep;
}

Report cmd_adjoint(const CliOptions& opt, const Workspace& ws) {
  RestrictionContext ctx = build_context(opt, ws, 1);
  Report rep;
  rep.verdict = "ok";
  RatMat adj = metric_adjoint(ctx.metric, ctx.family[0]);
  rep.matrices.emplace_back("operator", ctx.family[0]);
  rep.matrices.emplace_back("adjoint", adj);
  rep.matrices.emplace_back("symmetrized", RatMat(ctx.family[0] + adj));
  return rep;
}

}  // namespace

Report run_command(const CliOptions& opt, const Workspace& ws) {
  Report rep;
  if (opt.command == "check") rep = cmd_check(opt, ws);
  else if (opt.command == "info") rep = cmd_info(opt, ws);
  else if (opt.command == "ricci") rep = cmd_ricci(opt, ws);
  else if (opt.command == "einstein") rep = cmd_einstein(opt, ws);
  else if (opt.command == "derivations") rep = cmd_derivations(opt, ws);
  else if (opt.command == "nilradical") rep = cmd_nilradical(opt, ws);
  else if (opt.command == "nilsoliton") rep = cmd_nilsoliton(opt, ws);
  else if (opt.command == "gen-nilsoliton") rep = cmd_gen_nilsoliton(opt, ws);
  else if (opt.command == "standard") rep = cmd_standard(opt, ws);
  else if (opt.command == "iwasawa") rep = cmd_iwasawa(opt, ws);
  else if (opt.command == "aw-correct") rep = cmd_aw_correct(opt, ws);
  else if (opt.command == "orthogonalize") rep = cmd_orthogonalize(opt, ws);
  else if (opt.command == "adjoint") rep = cmd_adjoint(opt, ws);
  else throw usage_error("unknown command '" + opt.command + "'");
  rep.command = opt.command;
  if (!rep.anchor) rep.anchor = ws.context;
  return rep;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact curvature and structure of metric Lie algebras"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string family_list, decomp_list, candidate_h;
  std::vector<CLI::App*> subs;
  for (const char* name :
       {"check", "info", "ricci", "einstein", "derivations", "nilradical", "nilsoliton",
        "gen-nilsoliton", "standard", "iwasawa", "aw-correct", "orthogonalize", "adjoint"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", opt.file, "input .lie file")->required();
    sub->add_option("-m,--metric", opt.metric, "metric name");
    sub->add_option("--ideal", opt.ideal, "subspace name to restrict to");
    sub->add_option("--family", family_list, "comma-separated operator tokens (e.g. adE4,adE5)");
    sub->add_option("--decomp", decomp_list, "g-part,a-part subspace names");
    sub->add_option("--candidate-H", candidate_h, "comma-separated coordinates of H");
    sub->add_flag("--json", opt.json, "emit the report as JSON");
    sub->add_flag("--oracle", opt.oracle, "cross-check Ricci against the connection route");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (CLI::App* sub : subs)
    if (sub->parsed()) opt.command = sub->get_name();
  if (!family_list.empty()) {
    std::istringstream is(family_list);
    std::string tok;
    while (std::getline(is, tok, ',')) opt.family.push_back(tok);
  }
  if (!decomp_list.empty()) {
    auto comma = decomp_list.find(',');
    if (comma == std::string::npos) {
      std::cerr << "error: --decomp needs two names separated by a comma\n";
      return 2;
    }
    opt.decomp = {decomp_list.substr(0, comma), decomp_list.substr(comma + 1)};
  }
  if (!candidate_h.empty()) opt.candidate_h = candidate_h;

  try {
    Workspace ws = parse_lie_file(opt.file);
    Report rep = run_command(opt, ws);
    std::cout << (opt.json ? rep.json_text() + "\n" : rep.text());
    return rep.exit_code;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const not_solvable_error& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return 3;
  } catch (const degenerate_metric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mlie
