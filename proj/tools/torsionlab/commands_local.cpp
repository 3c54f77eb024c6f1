#include "app.hpp"
#include "torsionlab/local/experiment.hpp"
#include "torsionlab/local/irreducible.hpp"
#include "torsionlab/local/partition.hpp"
#include "torsionlab/local/quotient.hpp"

namespace cli {

namespace {

Json valuations_json(const std::vector<unsigned>& v) {
  Json a = Json::array();
  for (unsigned x : v) a.push_back(x);
  return a;
}

Json run_vpart(const Json& in, const RunConfig&) {
  const tl::Integer q = tl::integer_from_json(tl::member(in, "q"));
  const unsigned k = get_unsigned(in, "k");
  tl::LocalParams lp = tl::LocalParams::from_q(q);
  tl::EigenPartition ep = tl::eigen_partition(q, lp.p, k);
  Json dims = Json::object();
  for (std::size_t i = 0; i < ep.dims.size(); ++i) dims[std::to_string(i)] = ep.dims[i];
  dims["inf"] = ep.dim_inf;
  Json index = Json::array();
  for (const auto& i : ep.index) index.push_back(i ? Json(*i) : Json("inf"));
  // Smallest C with dim V_i ≤ C·k/(q·p^{i−1}) + 1 for all i ≥ 1.
  tl::Rational c = 0;
  tl::Integer scale = q;
  for (std::size_t i = 1; i < ep.dims.size(); ++i, scale *= lp.p)
    if (k > 0 && ep.dims[i] > 1) c = std::max(c, tl::Rational(tl::Integer(ep.dims[i] - 1) * scale, k));
  unsigned max_index = 0;
  for (const auto& i : ep.index)
    if (i) max_index = std::max(max_index, *i);
  tl::GRElem a = tl::admissible_root(lp, max_index + 3);
  return Json{{"q", q.get_str()},
              {"p", lp.p.get_str()},
              {"f", lp.f},
              {"k", k},
              {"dims", std::move(dims)},
              {"total", ep.total()},
              {"index", std::move(index)},
              {"fitted_C", c.get_str()},
              {"admissible_root", a.to_string()}};
}

Json quotient_json(const tl::QuotientReport& r) {
  return Json{{"valuations", valuations_json(r.valuations)},
              {"log_p_order", r.log_p_order},
              {"ln_q_order", r.ln_q_order.get_str()},
              {"exhausted", r.exhausted},
              {"basis_defect", r.basis_defect}};
}

Json run_quotient(const Json& in, const RunConfig&) {
  const Json& file = tl::member(in, "lattice");
  const tl::Integer p = tl::integer_from_json(tl::member(in, "p"));
  const unsigned f = file.value("f", 1u);
  tl::Integer q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), f);
  tl::LocalParams lp = tl::LocalParams::from_q(q, get_unsigned(in, "t"));
  tl::require(lp.p == p, "p must be prime");
  tl::LocalLattice lat{tl::int_matrix_from_json(tl::member(file, "basis"))};
  std::vector<tl::IntMatrix> gens;
  for (const auto& g : tl::member(file, "generators")) gens.push_back(tl::int_matrix_from_json(g));
  return quotient_json(tl::largest_invariant_quotient(lat, gens, lp));
}

Json run_bound(const Json& in, const RunConfig& cfg) {
  tl::BoundOptions opt;
  opt.t = get_unsigned(in, "t");
  opt.C = tl::rational_from_json(tl::member(in, "C"));
  opt.threads = cfg.threads;
  const tl::Integer q = tl::integer_from_json(tl::member(in, "q"));
  const std::uint64_t seed = std::stoull(tl::member(in, "seed").get<std::string>());
  tl::BoundReport r = tl::bound_experiment(q, get_unsigned(in, "k"), get_unsigned(in, "samples"), seed, opt);
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"index", s.index},
                           {"rejected", s.rejected},
                           {"exhausted", s.exhausted},
                           {"ln_q_order", s.ln_q_order.get_str()},
                           {"valuations", valuations_json(s.valuations)},
                           {"closure_iterations", s.closure_iterations}});
  return Json{{"q", q.get_str()},
              {"k", r.k},
              {"seed", std::to_string(r.seed)},
              {"t", opt.t},
              {"C", opt.C.get_str()},
              {"bound", r.bound.get_str()},
              {"valid_samples", r.valid},
              {"max_ln_q", r.max_ln_q.get_str()},
              {"fitted_C", r.fitted_C ? Json(r.fitted_C->get_str()) : Json(nullptr)},
              {"within_bound", r.within_bound},
              {"standard_lattice", quotient_json(r.standard)},
              {"samples", std::move(samples)}};
}

Json run_irred(const Json& in, const RunConfig&) {
  const tl::Integer q = tl::integer_from_json(tl::member(in, "q"));
  tl::IrreducibilityReport r = tl::sym_pow_irreducibility(q, get_unsigned(in, "d"));
  return Json{{"q", q.get_str()},
              {"d", get_unsigned(in, "d")},
              {"irreducible", r.structural},
              {"structural", r.structural},
              {"exhaustive", r.exhaustive ? Json(*r.exhaustive) : Json(nullptr)}};
}

}  // namespace

void add_local_commands(CLI::App* parent, App& app) {
  auto* l = parent->add_subcommand("local", "Local p-adic partitions, quotients and bounds");
  l->require_subcommand(1);

  auto vq = std::make_shared<std::string>();
  auto vk = std::make_shared<unsigned>(1);
  auto* vpart = app.leaf(l, "vpart", "Eigenspace partition of Sym^{2k} under the split torus", "local.vpart", run_vpart,
                         [=] {
                           tl::require(!vq->empty(), "--q is required");
                           return Json{{"q", tl::parse_integer(*vq).get_str()}, {"k", *vk}};
                         });
  vpart->add_option("--q", *vq, "Residue field size q = p^f");
  vpart->add_option("--k", *vk, "Half degree");

  auto lpath = std::make_shared<std::string>(), lp = std::make_shared<std::string>();
  auto lt = std::make_shared<unsigned>(12);
  auto* quotient = app.leaf(l, "quotient", "Largest invariant quotient L/L' over Z/p^t", "local.quotient",
                            run_quotient, [=] {
                              tl::require(!lp->empty(), "--p is required");
                              return Json{{"lattice", read_input(*lpath)},
                                          {"p", tl::parse_integer(*lp).get_str()},
                                          {"t", *lt}};
                            });
  quotient->add_option("lattice", *lpath, "{basis, generators[, f]} with integer matrices");
  quotient->add_option("--p", *lp, "Residue characteristic");
  quotient->add_option("--t", *lt, "Working precision exponent");

  auto bq = std::make_shared<std::string>();
  auto bseed = std::make_shared<std::uint64_t>(1);
  auto bk = std::make_shared<unsigned>(1), bs = std::make_shared<unsigned>(50), bt = std::make_shared<unsigned>(12);
  auto bc = std::make_shared<std::string>("16");
  auto* bound = app.leaf(l, "bound", "Random stable lattices against C(k/q + 1)", "local.bound", run_bound, [=] {
    tl::require(!bq->empty(), "--q is required");
    return Json{{"q", tl::parse_integer(*bq).get_str()}, {"k", *bk},  {"samples", *bs},
                {"seed", std::to_string(*bseed)},        {"t", *bt}, {"C", tl::parse_rational(*bc).get_str()}};
  });
  bound->add_option("--q", *bq, "Residue field size");
  bound->add_option("--k", *bk, "Half degree");
  bound->add_option("--samples", *bs, "Number of random lattices");
  bound->add_option("--seed", *bseed, "Random seed");
  bound->add_option("--t", *bt, "Working precision exponent");
  bound->add_option("--C", *bc, "Constant in the bound");

  auto iq = std::make_shared<std::string>();
  auto id = std::make_shared<unsigned>(1);
  auto* irred = app.leaf(l, "irred", "Irreducibility of Sym^d over F_q", "local.irred", run_irred,
                         [=] {
                           tl::require(!iq->empty(), "--q is required");
                           return Json{{"q", tl::parse_integer(*iq).get_str()}, {"d", *id}};
                         });
  irred->add_option("--q", *iq, "Field size");
  irred->add_option("--d", *id, "Degree");
}

}  // namespace cli
