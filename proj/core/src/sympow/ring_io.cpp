#include "torsionlab/sympow/ring_io.hpp"

#include "torsionlab/sympow/sym_pow.hpp"

namespace torsionlab {

std::string RingDescriptor::name() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::QuadraticIntegers: return "O_F(d=" + std::to_string(d) + ")";
    case RingKind::GaussianRationals: return "Q(i)";
    case RingKind::Galois: {
      const auto& g = *galois;
      if (g.t == 1 && g.f == 1) return "F_" + g.p.get_str();
      if (g.t == 1) return "F_" + g.p.get_str() + "^" + std::to_string(g.f);
      if (g.f == 1) return "Z/" + g.p.get_str() + "^" + std::to_string(g.t);
      return "GR(" + g.p.get_str() + "^" + std::to_string(g.t) + "," + std::to_string(g.f) + ")";
    }
  }
  return "?";
}

RingDescriptor ring_from_json(const Json& j) {
  RingDescriptor r;
  if (j.is_string()) return ring_from_json(Json{{"kind", j.get<std::string>()}});
  const std::string kind = member(j, "kind").get<std::string>();
  auto poly = [&]() {
    std::vector<Integer> p;
    if (j.contains("poly"))
      for (const auto& c : j.at("poly")) p.push_back(integer_from_json(c));
    return p;
  };
  auto uint_field = [&](const char* key) {
    Integer v = integer_from_json(member(j, key));
    require(v >= 1 && v.fits_uint_p(), std::string("ring: \"") + key + "\" must be a positive integer");
    return static_cast<unsigned>(v.get_ui());
  };
  if (kind == "Z") {
    r.kind = RingKind::Integers;
  } else if (kind == "Q") {
    r.kind = RingKind::Rationals;
  } else if (kind == "Fp") {
    r.kind = RingKind::Galois;
    r.galois = GaloisRingContext::make(integer_from_json(member(j, "p")), 1, 1);
  } else if (kind == "Fq") {
    r.kind = RingKind::Galois;
    r.galois = GaloisRingContext::make(integer_from_json(member(j, "p")), 1, uint_field("f"), poly());
  } else if (kind == "Zpt") {
    r.kind = RingKind::Galois;
    r.galois = GaloisRingContext::make(integer_from_json(member(j, "p")), uint_field("t"), 1);
  } else if (kind == "GR") {
    r.kind = RingKind::Galois;
    r.galois = GaloisRingContext::make(integer_from_json(member(j, "p")), uint_field("t"), uint_field("f"), poly());
  } else if (kind == "OF") {
    r.kind = RingKind::QuadraticIntegers;
    r.d = member(j, "d").get<long>();
    require(supported_imaginary_quadratic(r.d),
            "ring: O_F supported only for d in {1,2,3,7,11}, got d = " + std::to_string(r.d));
  } else if (kind == "QI") {
    r.kind = RingKind::GaussianRationals;
    r.d = 1;
  } else {
    throw ValidationError("ring: unknown kind \"" + kind + "\"");
  }
  return r;
}

Json to_json(const RingDescriptor& r) {
  switch (r.kind) {
    case RingKind::Integers: return Json{{"kind", "Z"}};
    case RingKind::Rationals: return Json{{"kind", "Q"}};
    case RingKind::GaussianRationals: return Json{{"kind", "QI"}};
    case RingKind::QuadraticIntegers: return Json{{"kind", "OF"}, {"d", r.d}};
    case RingKind::Galois: {
      Json poly = Json::array();
      for (const auto& c : r.galois->poly) poly.push_back(c.get_str());
      return Json{{"kind", "GR"}, {"p", r.galois->p.get_str()}, {"t", r.galois->t}, {"f", r.galois->f}, {"poly", poly}};
    }
  }
  return Json();
}

QuadElem quad_from_json(const Json& j, long d) {
  if (j.is_number_integer()) return d ? QuadElem(Rational(j.get<long>()), 0, d) : QuadElem(j.get<long>());
  require(j.is_string(), "expected a field element string, got " + j.dump());
  QuadElem x = QuadElem::parse(j.get<std::string>(), d);
  if (d && x.d() == 0) x = QuadElem(x.u(), 0, d);
  return x;
}

GRElem galois_from_json(const Json& j, const std::shared_ptr<const GaloisRingContext>& ctx) {
  if (j.is_array()) {
    std::vector<Integer> c;
    for (const auto& x : j) c.push_back(integer_from_json(x));
    return GRElem(ctx, std::move(c));
  }
  return GRElem(ctx, integer_from_json(j));
}

Json to_json(const QuadElem& x) { return x.to_string(); }

Json to_json(const GRElem& x) {
  if (x.coeffs().size() == 1) return x.coeffs()[0].get_str();
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(c.get_str());
  return a;
}

namespace {

template <class T, class Parse>
Matrix<T> read_matrix(const Json& j, Parse parse) {
  const std::size_t rows = member(j, "rows").get<std::size_t>();
  const std::size_t cols = member(j, "cols").get<std::size_t>();
  const Json& e = member(j, "entries");
  require(e.is_array() && e.size() == rows, "matrix: entries must have `rows` rows");
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(e[i].is_array() && e[i].size() == cols, "matrix: row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse(e[i][k]);
  }
  return m;
}

template <class T>
Json write_matrix(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

}  // namespace

Matrix<QuadElem> quad_matrix_from_json(const Json& j, long d) {
  return read_matrix<QuadElem>(j, [d](const Json& x) { return quad_from_json(x, d); });
}

Matrix<GRElem> galois_matrix_from_json(const Json& j, const std::shared_ptr<const GaloisRingContext>& ctx) {
  return read_matrix<GRElem>(j, [&ctx](const Json& x) { return galois_from_json(x, ctx); });
}

Json to_json(const Matrix<QuadElem>& m) { return write_matrix(m); }
Json to_json(const Matrix<GRElem>& m) { return write_matrix(m); }

Json sym_pow_json(const RingDescriptor& ring, const Json& matrix, unsigned n) {
  Json out;
  switch (ring.kind) {
    case RingKind::Integers: out = to_json(sym_pow_checked(int_matrix_from_json(matrix), n)); break;
    case RingKind::Rationals: out = to_json(sym_pow_checked(rational_matrix_from_json(matrix), n)); break;
    case RingKind::Galois: out = to_json(sym_pow_checked(galois_matrix_from_json(matrix, ring.galois), n)); break;
    case RingKind::QuadraticIntegers:
      out = to_json(sym_pow_checked(quad_matrix_from_json(matrix, ring.d), n, true));
      break;
    case RingKind::GaussianRationals:
      out = to_json(sym_pow_checked(quad_matrix_from_json(matrix, ring.d), n, false));
      break;
  }
  out["ring"] = to_json(ring);
  return out;
}

}  // namespace torsionlab
