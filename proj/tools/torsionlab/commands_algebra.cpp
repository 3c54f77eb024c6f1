#include <optional>

#include "app.hpp"
#include "torsionlab/homology/group_rep.hpp"
#include "torsionlab/homology/torsion.hpp"

namespace cli {

namespace {

Json run_snf(const Json& in, const RunConfig&) {
  tl::IntMatrix a = tl::int_matrix_from_json(tl::member(in, "matrix"));
  Json r;
  r["rows"] = a.rows();
  r["cols"] = a.cols();
  if (in.value("transforms", false)) {
    tl::SmithForm f = tl::smith_normal_form(a);
    r["rank"] = f.rank();
    r["invariant_factors"] = strings(f.invariant_factors);
    r["U"] = tl::to_json(f.U);
    r["S"] = tl::to_json(f.S);
    r["V"] = tl::to_json(f.V);
  } else {
    auto inv = tl::smith_invariants(a);
    r["rank"] = inv.size();
    r["invariant_factors"] = strings(inv);
  }
  r["cokernel"] = cokernel_json(tl::cokernel_invariants(a, a.rows()));
  return r;
}

Json run_cohomology(const Json& in, const RunConfig& cfg) {
  return cohomology_json(tl::cohomology(tl::complex_from_json(tl::member(in, "complex"))), cfg);
}

Json run_rtorsion(const Json& in, const RunConfig& cfg) {
  tl::IntCochainComplex c = tl::complex_from_json(tl::member(in, "complex"));
  tl::VolumeData vol = in.contains("volume") ? tl::volume_from_json(in["volume"]) : tl::lattice_volume_data(c);
  tl::TorsionIdentityReport rep = tl::check_torsion_identity(c, vol);
  return Json{{"laplacian", sqrt_json(rep.lhs, cfg)},
              {"arithmetic", sqrt_json(rep.rhs, cfg)},
              {"equal", rep.equal},
              {"regulator", sqrt_json(tl::regulator(vol), cfg)},
              {"lattice_basis", vol.lattice_basis}};
}

Json run_coinv(const Json& in, const RunConfig&) {
  tl::GroupRepZ rep = tl::group_rep_from_json(tl::member(in, "rep"));
  Json r;
  r["dimension"] = rep.dim();
  r["coinvariants"] = cokernel_json(tl::coinvariants(rep));
  std::optional<tl::Integer> modulus;
  if (in.contains("modulus")) modulus = tl::integer_from_json(in["modulus"]);
  tl::InvariantsResult inv = tl::invariants(rep, modulus);
  r["invariants"] = Json{{"free_rank", inv.free_rank}, {"order", inv.order.get_str()}};
  if (modulus) r["invariants"]["modulus"] = modulus->get_str();
  return r;
}

}  // namespace

void add_algebra_commands(App& app) {
  CLI::App* root = &app.root();

  auto snf_path = std::make_shared<std::string>();
  auto transforms = std::make_shared<bool>(false);
  auto* snf = app.leaf(root, "snf", "Smith normal form of an integer matrix", "snf", run_snf, [=] {
    return Json{{"matrix", read_input(*snf_path)}, {"transforms", *transforms}};
  });
  snf->add_option("matrix", *snf_path, "Matrix JSON {rows, cols, entries}");
  snf->add_flag("--transforms", *transforms, "Include the unimodular U and V");

  auto coh_path = std::make_shared<std::string>();
  auto* coh = app.leaf(root, "cohomology", "Cohomology groups of an integer cochain complex", "cohomology",
                       run_cohomology, [=] { return Json{{"complex", read_input(*coh_path)}}; });
  coh->add_option("complex", *coh_path, "Complex JSON {ranks, differentials}");

  auto rt_path = std::make_shared<std::string>();
  auto vol_path = std::make_shared<std::string>();
  auto* rt = app.leaf(root, "rtorsion", "Reidemeister torsion by Laplacians and by cohomology", "rtorsion",
                      run_rtorsion, [=] {
                        Json in{{"complex", read_input(*rt_path)}};
                        if (!vol_path->empty()) in["volume"] = read_input(*vol_path);
                        return in;
                      });
  rt->add_option("complex", *rt_path, "Complex JSON");
  rt->add_option("--volume", *vol_path, "Volume data {gram, lattice_basis}; default: lattice bases");

  auto rep_path = std::make_shared<std::string>();
  auto modulus = std::make_shared<std::string>();
  auto* coinv = app.leaf(root, "coinv", "Coinvariants and invariants of a representation over Z", "coinv", run_coinv,
                         [=] {
                           Json in{{"rep", read_input(*rep_path)}};
                           if (!modulus->empty()) in["modulus"] = tl::parse_integer(*modulus).get_str();
                           return in;
                         });
  coinv->add_option("rep", *rep_path, "Representation JSON {generators, relators}");
  coinv->add_option("--modulus", *modulus, "Compute invariants of M/NM instead of M");
}

}  // namespace cli
