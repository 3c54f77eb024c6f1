#include "app.hpp"
#include "torsionlab/ruelle/zeta.hpp"

namespace cli {

namespace {

Json run_eval(const Json& in, const RunConfig& cfg) {
  const Json& s = tl::member(in, "s");
  tl::Complex z(tl::to_real(tl::parse_rational(tl::member(s, "re").get<std::string>())),
                tl::to_real(tl::parse_rational(tl::member(s, "im").get<std::string>())));
  tl::ProductReport r = tl::truncated_product(z, tl::geodesics_from_json(tl::member(in, "geodesics")));
  return Json{{"value", Json{{"re", real_str(r.value.re, cfg)}, {"im", real_str(r.value.im, cfg)}}},
              {"abs", real_str(r.value.abs(), cfg)},
              {"abscissa", r.abscissa ? Json(real_str(*r.abscissa, cfg)) : Json(nullptr)},
              {"warnings", r.warnings}};
}

Json run_order(const Json& in, const RunConfig&) {
  std::vector<std::size_t> ranks = tl::member(in, "ranks").get<std::vector<std::size_t>>();
  const bool trivial = in.value("trivial", false);
  return Json{{"ranks", ranks}, {"trivial", trivial}, {"order", tl::order_at_zero(ranks, trivial)}};
}

Json run_leading(const Json& in, const RunConfig& cfg) {
  std::vector<tl::Integer> orders;
  for (const auto& x : tl::member(in, "torsion_orders")) orders.push_back(tl::integer_from_json(x));
  const tl::Rational reg = tl::parse_rational(tl::member(in, "regulator").get<std::string>());
  tl::require(reg > 0, "regulator must be positive");
  return Json{{"leading_abs", sqrt_json(tl::leading_coefficient(orders, tl::SqrtRational::from_value(reg)), cfg)}};
}

// Accepts {"ranks": [...]} or a cohomology report.
Json ranks_from(const Json& j) {
  if (j.contains("ranks")) return j["ranks"];
  const Json& res = j.contains("result") ? j["result"] : j;
  Json ranks = Json::array();
  for (const auto& d : tl::member(res, "degrees")) ranks.push_back(tl::member(d, "free_rank"));
  return ranks;
}

// Accepts {"torsion_orders": [...]} or a cohomology report.
Json orders_from(const Json& j) {
  if (j.contains("torsion_orders")) return j["torsion_orders"];
  const Json& res = j.contains("result") ? j["result"] : j;
  Json orders = Json::array();
  for (const auto& d : tl::member(res, "degrees")) orders.push_back(tl::member(d, "torsion_order"));
  return orders;
}

}  // namespace

void add_ruelle_commands(CLI::App* parent, App& app) {
  auto* r = parent->add_subcommand("ruelle", "Truncated Ruelle products and the s = 0 formulas");
  r->require_subcommand(1);

  auto gpath = std::make_shared<std::string>(), s = std::make_shared<std::string>("1,0");
  auto* eval = app.leaf(r, "eval", "Truncated Euler product at s", "ruelle.eval", run_eval, [=] {
    auto comma = s->find(',');
    tl::require(comma != std::string::npos, "--s expects re,im");
    std::string re = s->substr(0, comma), im = s->substr(comma + 1);
    tl::parse_rational(re);
    tl::parse_rational(im);
    return Json{{"s", Json{{"re", re}, {"im", im}}}, {"geodesics", read_input(*gpath)}};
  });
  eval->add_option("geodesics", *gpath, "{geodesics: [{length, eigenvalues}]}");
  eval->add_option("--s", *s, "Complex argument re,im");

  auto opath = std::make_shared<std::string>();
  auto trivial = std::make_shared<bool>(false);
  auto* order = app.leaf(r, "order", "Order at s = 0 from cohomology ranks", "ruelle.order", run_order,
                         [=] { return Json{{"ranks", ranks_from(read_input(*opath))}, {"trivial", *trivial}}; });
  order->add_option("ranks", *opath, "{ranks: [r0, r1, r2, r3]} or a cohomology report");
  order->add_flag("--trivial", *trivial, "ρ is the trivial representation");

  auto lpath = std::make_shared<std::string>(), reg = std::make_shared<std::string>("1");
  auto* leading = app.leaf(r, "leading", "|R*(0)| from torsion orders and a regulator", "ruelle.leading", run_leading,
                           [=] {
                             return Json{{"torsion_orders", orders_from(read_input(*lpath))},
                                         {"regulator", tl::parse_rational(*reg).get_str()}};
                           });
  leading->add_option("report", *lpath, "{torsion_orders: [...]} or a cohomology report");
  leading->add_option("--regulator", *reg, "Regulator value (rational)");
}

}  // namespace cli
