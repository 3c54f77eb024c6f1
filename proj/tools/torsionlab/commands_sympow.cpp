#include "app.hpp"
#include "torsionlab/sympow/lattice.hpp"
#include "torsionlab/sympow/ring_io.hpp"
#include "torsionlab/sympow/sym_pow.hpp"

namespace cli {

namespace {

tl::RingDescriptor ring_of(const Json& m) {
  return m.contains("ring") ? tl::ring_from_json(m["ring"]) : tl::RingDescriptor{};
}

tl::Matrix<tl::QuadElem> gaussian_matrix(const Json& m) {
  tl::RingDescriptor ring = ring_of(m);
  tl::require((ring.kind == tl::RingKind::GaussianRationals || ring.kind == tl::RingKind::QuadraticIntegers) &&
                  ring.d == 1,
              "expected a matrix over Q(i) or Z[i] (ring kind QI, or OF with d = 1)");
  return tl::quad_matrix_from_json(m, 1);
}

Json run_power(const Json& in, const RunConfig&) {
  const Json& m = tl::member(in, "matrix");
  return tl::sym_pow_json(ring_of(m), m, get_unsigned(in, "n"));
}

Json run_realify(const Json& in, const RunConfig&) {
  tl::Matrix<tl::QuadElem> a = gaussian_matrix(tl::member(in, "matrix"));
  tl::RationalMatrix r = tl::realify(a);
  Json out = tl::to_json(r);
  if (a.square()) {
    tl::QuadElem d = tl::determinant(a);
    out["det_complex"] = tl::to_json(d);
    out["det_real"] = tl::determinant(r).get_str();
    out["abs_det_squared"] = d.norm().get_str();
  }
  return out;
}

Json run_rho(const Json& in, const RunConfig&) {
  tl::Matrix<tl::QuadElem> g = gaussian_matrix(tl::member(in, "matrix"));
  return tl::to_json(tl::rho_mn(g, get_unsigned(in, "m"), get_unsigned(in, "n")));
}

Json run_saturate(const Json& in, const RunConfig&) {
  tl::SaturationOptions opt;
  opt.max_iter = get_unsigned(in, "max_iter");
  opt.denom_bits = get_unsigned(in, "denom_bits");
  const Json& file = tl::member(in, "generators");
  tl::RingDescriptor ring = ring_of(file);
  tl::RationalMatrix basis;
  if (ring.kind == tl::RingKind::Integers || ring.kind == tl::RingKind::Rationals) {
    std::vector<tl::RationalMatrix> gens;
    for (const auto& g : tl::member(file, "generators")) gens.push_back(tl::rational_matrix_from_json(g));
    basis = tl::saturate_stable_lattice(gens, opt);
  } else if (ring.kind == tl::RingKind::QuadraticIntegers || ring.kind == tl::RingKind::GaussianRationals) {
    std::vector<tl::Matrix<tl::QuadElem>> gens;
    for (const auto& g : tl::member(file, "generators")) gens.push_back(tl::quad_matrix_from_json(g, ring.d));
    basis = tl::saturate_stable_lattice(gens, opt);
  } else {
    throw tl::ValidationError("saturation needs generators over Z, Q or an imaginary quadratic field");
  }
  return Json{{"ring", tl::to_json(ring)}, {"basis", tl::to_json(basis)}};
}

}  // namespace

void add_sympow_commands(CLI::App* parent, App& app) {
  auto* sp = parent->add_subcommand("sympow", "Symmetric powers, realification and stable lattices");
  sp->require_subcommand(1);

  auto path = std::make_shared<std::string>();
  auto n = std::make_shared<unsigned>(1);
  auto* power = app.leaf(sp, "power", "Sym^n of a 2x2 matrix", "sympow.power", run_power,
                         [=] { return Json{{"matrix", read_input(*path)}, {"n", *n}}; });
  power->add_option("matrix", *path, "2x2 matrix JSON with optional ring tag");
  power->add_option("--n", *n, "Symmetric power");

  auto rpath = std::make_shared<std::string>();
  auto* realify = app.leaf(sp, "realify", "Real form of a Gaussian-rational matrix", "sympow.realify", run_realify,
                           [=] { return Json{{"matrix", read_input(*rpath)}}; });
  realify->add_option("matrix", *rpath, "Matrix over QI");

  auto gpath = std::make_shared<std::string>();
  auto m = std::make_shared<unsigned>(1), nn = std::make_shared<unsigned>(1);
  auto* rho = app.leaf(sp, "rho", "realify(Sym^m g ⊗ conj Sym^n g)", "sympow.rho", run_rho,
                       [=] { return Json{{"matrix", read_input(*gpath)}, {"m", *m}, {"n", *nn}}; });
  rho->add_option("matrix", *gpath, "2x2 matrix over QI");
  rho->add_option("--m", *m, "Holomorphic degree");
  rho->add_option("--n", *nn, "Antiholomorphic degree");

  auto spath = std::make_shared<std::string>();
  auto max_iter = std::make_shared<unsigned>(64), bits = std::make_shared<unsigned>(256);
  auto* sat = app.leaf(sp, "saturate", "Smallest stable lattice containing the standard one", "sympow.saturate",
                       run_saturate, [=] {
                         return Json{{"generators", read_input(*spath)}, {"max_iter", *max_iter}, {"denom_bits", *bits}};
                       });
  sat->add_option("generators", *spath, "{ring, generators: [matrix, ...]}");
  sat->add_option("--max-iter", *max_iter, "Iteration budget");
  sat->add_option("--denom-bits", *bits, "Fail once a denominator exceeds 2^bits");
}

}  // namespace cli
