// Command line driver: fixture builders, multi-jumping scans, nets of
// quadrics, theta characteristic machinery, Chow ring evaluations and line
// geometry helpers, all emitting canonical JSON reports. Exit codes: 0 ok,
// 1 validation error, 2 undecidable, 3 I/O error, 64 usage, 70 internal.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ilab/chow.hpp"
#include "ilab/geometry.hpp"
#include "ilab/monad.hpp"
#include "ilab/net.hpp"
#include "ilab/parallel.hpp"
#include "ilab/rng.hpp"
#include "jsonio.hpp"

namespace {

using namespace ilab;

std::vector<std::int64_t> parse_int_list(const std::string& s, int expect, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(tok, &used);
      if (used != tok.size() || tok.empty())
        fail(errc::validation, std::string(what) + ": bad integer '" + tok + "'");
      out.push_back(v);
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::validation, std::string(what) + ": bad integer '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (static_cast<int>(out.size()) != expect)
    fail(errc::validation,
         std::string(what) + ": expected " + std::to_string(expect) + " comma-separated integers");
  return out;
}

Vec<PrimeField> parse_point(const PrimeField& k, const std::string& s, const char* what) {
  Vec<PrimeField> v;
  for (std::int64_t x : parse_int_list(s, 4, what)) v.push_back(k.from_int(x));
  return proj_normalize(k, v);
}

PluckerLine parse_line(const PrimeField& k, const std::string& s, const char* what) {
  Vec<PrimeField> v;
  for (std::int64_t x : parse_int_list(s, 6, what)) v.push_back(k.from_int(x));
  return plucker_from_coords(k, v);
}

bool vec_is_zero(const PrimeField& k, const Vec<PrimeField>& v) {
  for (auto x : v)
    if (!k.is_zero(x)) return false;
  return true;
}

json singularity_json(const SingularityReport& r) {
  return json{{"bookkeeping_exact", r.bookkeeping_exact},
              {"common_kernel_dim", r.common_kernel_dim},
              {"curve_family_dim", r.curve_family_dim},
              {"frame_dim", r.frame_dim},
              {"generic_tangent_dim", r.generic_tangent_dim},
              {"moduli_total", r.moduli_total},
              {"tangent_dim", r.tangent_dim}};
}

// The net machinery needs the symplectic structure; an unsuccessful hunt
// leaves the quantities below unresolved rather than wrong.
SymplecticStructure symplectic_or_fail(const InstantonMonad& m) {
  SymplecticSearch js = find_symplectic(m);
  if (!js.J)
    fail(errc::undecidable,
         "no invertible symplectic structure found among the sampled solutions; "
         "the requested quantity is undecidable");
  return *js.J;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic toolkit for jumping lines of rank-2 bundles on P^3"};
  app.require_subcommand(1);

  std::string out_path;
  int jobs_flag = 0;
  std::string command_run;

  // fixture thooft
  int fx_n = 0;
  std::optional<std::int64_t> fx_p;
  auto* fixture = app.add_subcommand("fixture", "deterministic fixture builders");
  fixture->require_subcommand(1);
  auto* fxt = fixture->add_subcommand("thooft", "special pencil monad of charge n");
  fxt->add_option("--n", fx_n, "instanton charge")->required();
  fxt->add_option("--p", fx_p, "prime modulus; omit for the rational model");
  fxt->add_option("--out", out_path, "write the report to this file instead of stdout");
  fxt->callback([&] {
    command_run = "fixture thooft";
    json config{{"n", fx_n}};
    json result;
    if (fx_p) {
      PrimeField k(*fx_p);
      config["p"] = k.p;
      result = monad_json(validate_monad(special_thooft_monad(k, fx_n), k.p));
    } else {
      result = monad_json(validate_monad(special_thooft_monad_q(fx_n), 5));
    }
    emit_report(command_run, config, result, out_path);
  });

  // scan multijump
  std::string sc_monad;
  std::optional<std::int64_t> sc_p;
  auto* scan = app.add_subcommand("scan", "exhaustive searches over F_p");
  scan->require_subcommand(1);
  auto* scm = scan->add_subcommand("multijump", "all lines with two or more jumps");
  scm->add_option("--monad", sc_monad, "monad JSON file")->required();
  scm->add_option("--p", sc_p, "prime modulus; required for rational monad input");
  scm->add_option("--jobs", jobs_flag, "worker threads; 0 defers to INSTANTON_LAB_JOBS, then 1");
  scm->add_option("--out", out_path, "write the report to this file instead of stdout");
  scm->callback([&] {
    command_run = "scan multijump";
    InstantonMonad m = monad_over(load_monad(sc_monad), sc_p);
    std::vector<ScanHit> hits = multijump_scan(m, m.k.p, resolve_jobs(jobs_flag));
    json matches = json::array();
    for (const ScanHit& h : hits)
      matches.push_back(json{{"order", h.order}, {"plucker", plucker_json(h.line)}});
    emit_report(command_run, json{{"monad", sc_monad}, {"p", m.k.p}},
                json{{"matches", matches}}, out_path);
  });

  // net at-point / net stability
  auto* net = app.add_subcommand("net", "nets of quadrics from a monad or from a file");
  net->require_subcommand(1);

  std::string np_monad, np_point;
  std::optional<std::int64_t> np_p;
  auto* nap = net->add_subcommand("at-point", "net of quadrics on the star of a base point");
  nap->add_option("--monad", np_monad, "monad JSON file")->required();
  nap->add_option("--point", np_point, "base point of P^3 as a,b,c,d")->required();
  nap->add_option("--p", np_p, "prime modulus; required for rational monad input");
  nap->add_option("--out", out_path, "write the report to this file instead of stdout");
  nap->callback([&] {
    command_run = "net at-point";
    InstantonMonad m = monad_over(load_monad(np_monad), np_p);
    SymplecticStructure j = symplectic_or_fail(m);
    NetOfQuadrics q = net_at_point(hypernet_from_monad(m, j), parse_point(m.k, np_point, "--point"));
    emit_report(command_run,
                json{{"monad", np_monad}, {"p", m.k.p}, {"point", vec_json(q.split.n)}},
                net_json(q), out_path);
  });

  std::string ns_net;
  std::int64_t ns_p = 0;
  auto* nst = net->add_subcommand("stability", "exhaustive semistability classification");
  nst->add_option("--net", ns_net, "net JSON file")->required();
  nst->add_option("--p", ns_p, "prime modulus of the net")->required();
  nst->add_option("--jobs", jobs_flag, "worker threads; 0 defers to INSTANTON_LAB_JOBS, then 1");
  nst->add_option("--out", out_path, "write the report to this file instead of stdout");
  nst->callback([&] {
    command_run = "net stability";
    PrimeField k(ns_p);
    NetOfQuadrics q = load_net(ns_net, k);
    StabilityReport rep = net_stability(q, resolve_jobs(jobs_flag));
    json witness = nullptr;
    if (rep.witness)
      witness = json{{"basis", mat_json(rep.witness->basis)},
                     {"dim", rep.witness->dim},
                     {"perp_dim", rep.witness->perp_dim},
                     {"score", rep.witness->score}};
    emit_report(command_run, json{{"net", ns_net}, {"p", k.p}},
                json{{"subspaces_checked", rep.subspaces_checked},
                     {"verdict", to_string(rep.verdict)},
                     {"witness", witness}},
                out_path);
  });

  // theta spaces / beta / obstruction / diagnose
  auto* theta = app.add_subcommand("theta", "theta characteristic machinery on the discriminant");
  theta->require_subcommand(1);

  std::string tsp_net;
  std::int64_t tsp_p = 0;
  auto* tsp = theta->add_subcommand("spaces", "section space dimensions");
  tsp->add_option("--net", tsp_net, "net JSON file")->required();
  tsp->add_option("--p", tsp_p, "prime modulus of the net")->required();
  tsp->add_option("--out", out_path, "write the report to this file instead of stdout");
  tsp->callback([&] {
    command_run = "theta spaces";
    PrimeField k(tsp_p);
    ThetaSpaces ts = theta_section_spaces(load_net(tsp_net, k));
    emit_report(command_run, json{{"net", tsp_net}, {"p", k.p}},
                json{{"h0_oc1", ts.h0_oc1},
                     {"n", ts.n},
                     {"q4_dim", ts.dim_q4},
                     {"sigma_dim", ts.sigma.dim()},
                     {"t2_dim", ts.t2.dim()},
                     {"t3_dim", ts.t3.dim()}},
                out_path);
  });

  std::string tb_net;
  std::int64_t tb_p = 0;
  auto* tbe = theta->add_subcommand("beta", "skew obstruction system on theta(2) sections");
  tbe->add_option("--net", tb_net, "net JSON file")->required();
  tbe->add_option("--p", tb_p, "prime modulus of the net")->required();
  tbe->add_option("--out", out_path, "write the report to this file instead of stdout");
  tbe->callback([&] {
    command_run = "theta beta";
    PrimeField k(tb_p);
    BetaSystem bs = beta_system(load_net(tb_net, k));
    emit_report(command_run, json{{"net", tb_net}, {"p", k.p}},
                json{{"r", bs.r},
                     {"sigma_dim", bs.theta.sigma.dim()},
                     {"t2_dim", bs.theta.t2.dim()}},
                out_path);
  });

  std::string to_net;
  std::int64_t to_p = 0;
  std::uint64_t to_seed = 1;
  int to_pairs = 10;
  auto* tob = theta->add_subcommand("obstruction", "beta on seeded random section pairs");
  tob->add_option("--net", to_net, "net JSON file")->required();
  tob->add_option("--p", to_p, "prime modulus of the net")->required();
  tob->add_option("--seed", to_seed, "seed for the section pair stream");
  tob->add_option("--pairs", to_pairs, "number of pairs to evaluate");
  tob->add_option("--out", out_path, "write the report to this file instead of stdout");
  tob->callback([&] {
    command_run = "theta obstruction";
    if (to_pairs < 1) fail(errc::validation, "--pairs must be positive");
    PrimeField k(to_p);
    BetaSystem bs = beta_system(load_net(to_net, k));
    Rng rng(to_seed);
    json pairs = json::array();
    int vanishing = 0;
    for (int i = 0; i < to_pairs; ++i) {
      Vec<PrimeField> s = rng.vector(k, bs.theta.t2.dim());
      Vec<PrimeField> sp = rng.vector(k, bs.theta.t2.dim());
      Vec<PrimeField> val = splitting_obstruction(bs, s, sp);
      bool zero = vec_is_zero(k, val);
      vanishing += zero ? 1 : 0;
      pairs.push_back(json{{"value", vec_json(val)}, {"vanishes", zero}});
    }
    emit_report(command_run,
                json{{"net", to_net}, {"p", k.p}, {"pairs", to_pairs}, {"seed", to_seed}},
                json{{"pairs", pairs}, {"r", bs.r}, {"vanishing_count", vanishing}}, out_path);
  });

  std::string td_monad, td_point;
  std::optional<std::int64_t> td_p;
  std::uint64_t td_seed = 2026;
  auto* tdi = theta->add_subcommand("diagnose", "singularity bookkeeping at a distinguished pair");
  tdi->add_option("--monad", td_monad, "monad JSON file")->required();
  tdi->add_option("--point", td_point, "base point of P^3 as a,b,c,d")->required();
  tdi->add_option("--p", td_p, "prime modulus; required for rational monad input");
  tdi->add_option("--seed", td_seed, "seed for the generic isotropic pair hunt");
  tdi->add_option("--out", out_path, "write the report to this file instead of stdout");
  tdi->callback([&] {
    command_run = "theta diagnose";
    InstantonMonad m = monad_over(load_monad(td_monad), td_p);
    SymplecticStructure j = symplectic_or_fail(m);
    DistinguishedPair dp = distinguished_pair(m, j, parse_point(m.k, td_point, "--point"));
    json generic = nullptr;
    if (std::optional<Mat<PrimeField>> gp = generic_isotropic_pair(dp.beta, td_seed))
      generic = singularity_json(singularity_diagnostics(dp.beta, *gp));
    emit_report(command_run,
                json{{"monad", td_monad},
                     {"p", m.k.p},
                     {"point", vec_json(dp.net.split.n)},
                     {"seed", td_seed}},
                json{{"distinguished", singularity_json(singularity_diagnostics(dp.beta, dp.sections))},
                     {"generic", generic}},
                out_path);
  });

  // chow residual / identity / sym2
  auto* chow = app.add_subcommand("chow", "Schubert calculus and residual class evaluation");
  chow->require_subcommand(1);

  CongruenceData cd;
  std::optional<long long> cr_c2om, cr_c1sq;
  auto* crs = chow->add_subcommand("residual", "residual class of a multi-jumping surface");
  crs->add_option("--n", cd.n, "instanton charge")->required();
  crs->add_option("--m", cd.m, "multiplicity along the reduced surface");
  crs->add_option("--alpha", cd.alpha, "bidegree alpha")->required();
  crs->add_option("--beta", cd.beta, "bidegree beta")->required();
  crs->add_option("--pi", cd.pi, "sectional genus")->required();
  crs->add_option("--chi", cd.chi, "chi of the structure sheaf")->required();
  crs->add_option("--c2omega", cr_c2om, "second Chern number of the cotangent bundle");
  crs->add_option("--c1sq", cr_c1sq, "first Chern number squared of the cotangent bundle");
  crs->add_option("--out", out_path, "write the report to this file instead of stdout");
  crs->callback([&] {
    command_run = "chow residual";
    cd.c2_omega = cr_c2om;
    cd.c1_omega_sq = cr_c1sq;
    ResidualClass rc = residual_class(cd);
    json config{{"alpha", cd.alpha}, {"beta", cd.beta}, {"chi", cd.chi},
                {"m", cd.m},         {"n", cd.n},       {"pi", cd.pi}};
    if (cd.c2_omega) config["c2omega"] = *cd.c2_omega;
    if (cd.c1_omega_sq) config["c1sq"] = *cd.c1_omega_sq;
    emit_report(command_run, config,
                json{{"point_coeff", rc.point_coeff}, {"tu_coeff", rc.tu_coeff}}, out_path);
  });

  long long ci_alpha = 0, ci_beta = 0, ci_pi = 0, ci_c1sq = 0, ci_chi = 0;
  auto* cid = chow->add_subcommand("identity", "numerical congruence identity check");
  cid->add_option("--alpha", ci_alpha, "bidegree alpha")->required();
  cid->add_option("--beta", ci_beta, "bidegree beta")->required();
  cid->add_option("--pi", ci_pi, "sectional genus")->required();
  cid->add_option("--c1sq", ci_c1sq, "first Chern number squared of the cotangent bundle")
      ->required();
  cid->add_option("--chi", ci_chi, "chi of the structure sheaf")->required();
  cid->add_option("--out", out_path, "write the report to this file instead of stdout");
  cid->callback([&] {
    command_run = "chow identity";
    emit_report(command_run,
                json{{"alpha", ci_alpha},
                     {"beta", ci_beta},
                     {"c1sq", ci_c1sq},
                     {"chi", ci_chi},
                     {"pi", ci_pi}},
                json{{"holds", congruence_identity(ci_alpha, ci_beta, ci_pi, ci_c1sq, ci_chi)}},
                out_path);
  });

  auto* cs2 = chow->add_subcommand("sym2", "h^2 coefficient of c2 of Sym^2 of the cotangent sheaf");
  cs2->add_option("--out", out_path, "write the report to this file instead of stdout");
  cs2->callback([&] {
    command_run = "chow sym2";
    emit_report(command_run, json::object(), json{{"h2_coeff", sym2_omega_check()}}, out_path);
  });

  // geom ngon / transversals
  auto* geom = app.add_subcommand("geom", "line geometry helpers");
  geom->require_subcommand(1);

  std::int64_t gn_p = 0;
  int gn_n = 0;
  std::string gn_point;
  auto* gng = geom->add_subcommand("ngon", "vertices of the transversal polygon of the fixture");
  gng->add_option("--p", gn_p, "prime modulus")->required();
  gng->add_option("--n", gn_n, "instanton charge of the fixture")->required();
  gng->add_option("--point", gn_point, "projection base point of P^3 as a,b,c,d")->required();
  gng->add_option("--out", out_path, "write the report to this file instead of stdout");
  gng->callback([&] {
    command_run = "geom ngon";
    PrimeField k(gn_p);
    Vec<PrimeField> base = parse_point(k, gn_point, "--point");
    std::vector<NgonVertex> verts = ngon_vertices(k, thooft_section_lines(k, gn_n), base);
    json vj = json::array();
    for (const NgonVertex& v : verts)
      vj.push_back(json{{"i", v.i}, {"j", v.j}, {"y", vec_json(v.y)}});
    emit_report(command_run, json{{"n", gn_n}, {"p", k.p}, {"point", vec_json(base)}},
                json{{"count", static_cast<int>(verts.size())}, {"vertices", vj}}, out_path);
  });

  std::int64_t gt_p = 0;
  std::vector<std::string> gt_lines;
  auto* gtr = geom->add_subcommand("transversals", "common transversals of four lines");
  gtr->add_option("--p", gt_p, "prime modulus")->required();
  gtr->add_option("--line", gt_lines, "Plucker coordinates p01,p02,p03,p12,p13,p23; four times")
      ->required();
  gtr->add_option("--out", out_path, "write the report to this file instead of stdout");
  gtr->callback([&] {
    command_run = "geom transversals";
    if (gt_lines.size() != 4)
      fail(errc::validation, "--line must be given exactly four times");
    PrimeField k(gt_p);
    std::array<PluckerLine, 4> ls;
    json lj = json::array();
    for (int i = 0; i < 4; ++i) {
      ls[i] = parse_line(k, gt_lines[i], "--line");
      lj.push_back(plucker_json(ls[i]));
    }
    Transversals t = transversals_to_four(k, ls[0], ls[1], ls[2], ls[3]);
    json found = json::array();
    for (const PluckerLine& l : t.lines) found.push_back(plucker_json(l));
    emit_report(command_run, json{{"lines", lj}, {"p", k.p}},
                json{{"double_root", t.double_root}, {"infinite", t.infinite}, {"lines", found}},
                out_path);
  });

  auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return static_cast<int>(errc::usage);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(errc::internal);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "# %s finished in %.3f s\n", command_run.c_str(), secs);
  return 0;
}
