#include "app.hpp"
#include "torsionlab/quaternion/hilbert.hpp"
#include "torsionlab/quaternion/order.hpp"
#include "torsionlab/sympow/ring_io.hpp"

namespace cli {

namespace {

tl::QuaternionAlgebra algebra_of(const Json& in) {
  const long d = tl::member(in, "d").get<long>();
  return tl::QuaternionAlgebra(d, tl::QuadElem::parse(tl::member(in, "a").get<std::string>(), d),
                               tl::QuadElem::parse(tl::member(in, "b").get<std::string>(), d));
}

Json run_classify(const Json& in, const RunConfig&) {
  tl::QuaternionAlgebra alg = algebra_of(in);
  Json places = Json::array();
  for (const auto& p : tl::ramification_set(alg)) places.push_back(p.label());
  Json symbols = Json::array();
  std::vector<tl::Place> all{tl::Place::infinity()};
  for (const auto& p : tl::relevant_primes(alg.a, alg.b, alg.d))
    for (const auto& v : tl::places_above(p, alg.d)) all.push_back(v);
  for (const auto& v : all) symbols.push_back(Json{{"place", v.label()}, {"symbol", tl::hilbert_symbol(alg.a, alg.b, v)}});
  return Json{{"d", alg.d},
              {"a", alg.a.to_string()},
              {"b", alg.b.to_string()},
              {"ramification", std::move(places)},
              {"division", tl::is_division(alg)},
              {"symbols", std::move(symbols)}};
}

Json run_symbol(const Json& in, const RunConfig&) {
  tl::QuaternionAlgebra alg = algebra_of(in);
  tl::Place v = tl::parse_place(tl::member(in, "place").get<std::string>(), alg.d);
  return Json{{"place", v.label()}, {"symbol", tl::hilbert_symbol(alg.a, alg.b, v)}};
}

tl::QuatOrder order_of(const Json& spec) {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    if (name == "hurwitz") return tl::hurwitz_order();
    if (name == "lipschitz") return tl::lipschitz_order();
    throw tl::ValidationError("unknown order \"" + name + "\" (hurwitz, lipschitz, or an order file)");
  }
  // {"d", "a", "b", "basis": [[x0, x1, x2, x3], ...]} with entries as field elements.
  tl::QuatOrder o;
  o.alg = algebra_of(spec);
  for (const auto& row : tl::member(spec, "basis")) {
    tl::require(row.is_array() && row.size() == 4, "order basis elements need four coordinates");
    std::array<tl::QuadElem, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = tl::QuadElem::parse(row[i].get<std::string>(), o.alg.d);
    o.basis.emplace_back(o.alg, x);
  }
  return o;
}

Json run_units(const Json& in, const RunConfig& cfg) {
  tl::QuatOrder o = order_of(tl::member(in, "order"));
  tl::OrderValidation val = tl::order_validate(o);
  if (!val.valid) throw tl::ValidationError("not an order: " + val.reason);
  auto units = tl::norm_one_search(o, get_unsigned(in, "height"), cfg.threads == 0 ? 1 : cfg.threads);
  Json elems = Json::array();
  for (const auto& u : units) elems.push_back(u.to_string());
  return Json{{"height", get_unsigned(in, "height")}, {"count", units.size()}, {"elements", std::move(elems)}};
}

}  // namespace

void add_quat_commands(CLI::App* parent, App& app) {
  auto* q = parent->add_subcommand("quat", "Quaternion algebras over Q and imaginary quadratic fields");
  q->require_subcommand(1);

  struct AlgArgs {
    long d = 0;
    std::string a, b;
  };
  auto add_alg = [](CLI::App* sub, const std::shared_ptr<AlgArgs>& args) {
    sub->add_option("--d", args->d, "0 for Q, else F = Q(sqrt(-d)) with d in {1,2,3,7,11}");
    sub->add_option("--a", args->a, "i^2, e.g. -1 or 1+w");
    sub->add_option("--b", args->b, "j^2");
  };
  auto alg_json = [](const AlgArgs& a) {
    tl::require(!a.a.empty() && !a.b.empty(), "--a and --b are required");
    return Json{{"d", a.d}, {"a", a.a}, {"b", a.b}};
  };

  auto cargs = std::make_shared<AlgArgs>();
  auto* classify = app.leaf(q, "classify", "Ramification set and division test", "quat.classify", run_classify,
                            [=] { return alg_json(*cargs); });
  add_alg(classify, cargs);

  auto sargs = std::make_shared<AlgArgs>();
  auto place = std::make_shared<std::string>();
  auto* symbol = app.leaf(q, "symbol", "Local Hilbert symbol (a, b)_v", "quat.symbol", run_symbol, [=] {
    Json in = alg_json(*sargs);
    tl::require(!place->empty(), "--place is required");
    in["place"] = *place;
    return in;
  });
  add_alg(symbol, sargs);
  symbol->add_option("--place", *place, "inf, a prime p, or a prime ideal label such as \"(5, w-2)\"");

  auto order = std::make_shared<std::string>("hurwitz");
  auto height = std::make_shared<unsigned>(1);
  auto* units = app.leaf(q, "units", "Norm-one elements of bounded height", "quat.units", run_units, [=] {
    Json spec = (*order == "hurwitz" || *order == "lipschitz") ? Json(*order) : read_input(*order);
    return Json{{"order", spec}, {"height", *height}};
  });
  units->add_option("--order", *order, "hurwitz, lipschitz, or an order JSON file");
  units->add_option("--height", *height, "Coordinate height bound");
}

}  // namespace cli
