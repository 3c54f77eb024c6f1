#include "app.hpp"
#include "torsionlab/manifold/pipeline.hpp"

namespace cli {

namespace {

Json run_check(const Json& in, const RunConfig&) {
  tl::TwistedComplexSpec spec = tl::spec_from_json(tl::member(in, "spec"));
  Json r;
  r["name"] = spec.name;
  r["dimension"] = spec.dimension;
  r["cells"] = spec.cells;
  r["euler_characteristic"] = spec.cell_euler_characteristic();
  r["probe_characters"] = tl::probe_characters(spec).size();
  r["valid"] = true;
  if (in.contains("rep")) {
    tl::GroupRepZ rep = tl::group_rep_from_json(in["rep"]);
    tl::EulerReport e = tl::euler_check(spec, rep);
    r["euler"] = Json{{"cell_sum", e.cell_sum}, {"rank_sum", e.rank_sum}, {"consistent", e.consistent}, {"passed", e.passed}};
    if (spec.closed && spec.oriented) {
      tl::TopDegreeReport t = tl::h3_cross_check(spec, rep);
      r["top_degree"] = Json{{"cohomology", cokernel_json(t.top)}, {"coinvariants", cokernel_json(t.coinvariants)}, {"equal", t.equal}};
    }
  }
  return r;
}

Json run_cohomology(const Json& in, const RunConfig& cfg) {
  tl::TwistedComplexSpec spec = tl::spec_from_json(tl::member(in, "spec"));
  tl::GroupRepZ rep = tl::group_rep_from_json(tl::member(in, "rep"));
  return cohomology_json(tl::cohomology(tl::evaluate(spec, rep)), cfg);
}

Json run_sweep(const Json& in, const RunConfig& cfg) {
  tl::TwistedComplexSpec spec = tl::spec_from_json(tl::member(in, "spec"));
  const unsigned kmin = get_unsigned(in, "kmin"), kmax = get_unsigned(in, "kmax");
  tl::SweepReport rep = tl::torsion_sweep(spec, tl::sym_pow_family(spec), kmin, kmax, cfg.threads);
  Json levels = Json::array();
  for (const auto& e : rep.entries) {
    Json logs = Json::array();
    for (const auto& x : e.log_torsion) logs.push_back(real_str(x, cfg));
    levels.push_back(Json{{"k", e.k},
                          {"free_ranks", e.free_ranks},
                          {"torsion_orders", strings(e.torsion_orders)},
                          {"log_torsion", std::move(logs)},
                          {"alternating", real_str(e.alternating, cfg)},
                          {"h0_vanishes", e.h0_vanishes}});
  }
  Json r;
  r["spec"] = rep.spec_name;
  r["euler_characteristic"] = rep.euler_characteristic;
  r["levels"] = std::move(levels);
  if (rep.fit) {
    r["fit"] = Json{{"model", "alternating = c2 k^2 + c1 k + c0"},
                    {"c2", real_str(rep.fit->c2, cfg)},
                    {"c1", real_str(rep.fit->c1, cfg)},
                    {"c0", real_str(rep.fit->c0, cfg)},
                    {"c2_stderr", real_str(rep.fit->c2_stderr, cfg)},
                    {"rms_residual", real_str(rep.fit->rms_residual, cfg)}};
  } else {
    r["fit"] = nullptr;
  }
  if (rep.target) {
    Json cmp{{"target_c2", real_str(*rep.target, cfg)}, {"known_volume", spec.known_volume->get_str()}};
    if (rep.fit) cmp["difference"] = real_str(rep.fit->c2 - *rep.target, cfg);
    r["comparison"] = std::move(cmp);
  } else {
    r["comparison"] = nullptr;
    if (spec.known_volume) r["note"] = "Euler characteristic is nonzero; torsion is reported unnormalized";
  }
  return r;
}

}  // namespace

void add_manifold_commands(CLI::App* parent, App& app) {
  auto* m = parent->add_subcommand("manifold", "Twisted complexes from .tcx specs");
  m->require_subcommand(1);

  auto cpath = std::make_shared<std::string>(), crep = std::make_shared<std::string>();
  auto* check = app.leaf(m, "check", "Validate a spec; with --rep also the Euler and top-degree checks",
                         "manifold.check", run_check, [=] {
                           Json in{{"spec", read_input(*cpath)}};
                           if (!crep->empty()) in["rep"] = read_input(*crep);
                           return in;
                         });
  check->add_option("spec", *cpath, ".tcx file");
  check->add_option("--rep", *crep, "Representation JSON");

  auto hpath = std::make_shared<std::string>(), hrep = std::make_shared<std::string>();
  auto* coh = app.leaf(m, "cohomology", "Cohomology with local coefficients", "manifold.cohomology", run_cohomology,
                       [=] { return Json{{"spec", read_input(*hpath)}, {"rep", read_input(*hrep)}}; });
  coh->add_option("spec", *hpath, ".tcx file");
  coh->add_option("--rep", *hrep, "Representation JSON");

  auto spath = std::make_shared<std::string>();
  auto kmin = std::make_shared<unsigned>(1), kmax = std::make_shared<unsigned>(5);
  auto* sweep = app.leaf(m, "sweep", "Torsion growth over Sym^{2k} of the spec's sweep generators",
                         "manifold.sweep", run_sweep,
                         [=] { return Json{{"spec", read_input(*spath)}, {"kmin", *kmin}, {"kmax", *kmax}}; });
  sweep->add_option("spec", *spath, ".tcx file with a sweep section");
  sweep->add_option("--kmin", *kmin, "First level");
  sweep->add_option("--kmax", *kmax, "Last level");
}

}  // namespace cli
