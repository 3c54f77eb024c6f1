#include "torsionlab/sympow/rings.hpp"

#include <algorithm>

#include "torsionlab/linalg/local_snf.hpp"
#include "torsionlab/linalg/numeric.hpp"
#include "torsionlab/util/fp_poly.hpp"

namespace torsionlab {

// ---- QuadElem ------------------------------------------------------------

QuadElem::QuadElem(Rational u, Rational v, long d) : u_(std::move(u)), v_(std::move(v)), d_(d) {
  require(d > 0, "quadratic field parameter d must be positive");
}

void QuadElem::adopt(const QuadElem& o) {
  if (o.d_ == 0) return;
  if (d_ == 0) {
    d_ = o.d_;
    return;
  }
  require(d_ == o.d_, "elements of different quadratic fields");
}

QuadElem QuadElem::conj() const {
  QuadElem r = *this;
  r.v_ = -r.v_;
  return r;
}

Rational QuadElem::norm() const { return u_ * u_ + Rational(d_) * v_ * v_; }
Rational QuadElem::trace() const { return 2 * u_; }

bool QuadElem::is_integral() const {
  Rational t = trace(), n = norm();
  return t.get_den() == 1 && n.get_den() == 1;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  adopt(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  adopt(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  adopt(o);
  Rational u = u_ * o.u_ - Rational(d_) * v_ * o.v_;
  Rational v = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  adopt(o);
  QuadElem oo = o;
  oo.d_ = d_;
  Rational n = oo.norm();
  require(n != 0, "division by zero in quadratic field");
  *this *= oo.conj();
  u_ /= n;
  v_ /= n;
  return *this;
}

QuadElem QuadElem::operator-() const {
  QuadElem r = *this;
  r.u_ = -r.u_;
  r.v_ = -r.v_;
  return r;
}

std::string QuadElem::to_string() const {
  if (v_ == 0) return u_.get_str();
  std::string vs;
  if (v_ == 1)
    vs = "w";
  else if (v_ == -1)
    vs = "-w";
  else
    vs = v_.get_str() + "*w";
  if (u_ == 0) return vs;
  return u_.get_str() + (v_ > 0 ? "+" : "") + vs;
}

QuadElem QuadElem::parse(const std::string& text, long d) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  require(!s.empty(), "empty field element");
  // Split into signed terms at top-level + and − (not right after '/', '*', 'e').
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' && s[i - 1] != 'e' && s[i - 1] != 'E') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));
  Rational u = 0, v = 0;
  for (std::string t : terms) {
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
      neg = t[0] == '-';
      t = t.substr(1);
    }
    require(!t.empty(), "malformed field element \"" + text + "\"");
    Rational c;
    bool is_w = false;
    if (t == "w") {
      c = 1;
      is_w = true;
    } else if (t.size() > 2 && t.substr(t.size() - 2) == "*w") {
      c = parse_rational(t.substr(0, t.size() - 2));
      is_w = true;
    } else {
      c = parse_rational(t);
    }
    if (neg) c = -c;
    (is_w ? v : u) += c;
  }
  if (v != 0) require(d > 0, "element \"" + text + "\" uses w but the field is Q");
  if (d == 0) return QuadElem(u);
  return QuadElem(u, v, d);
}

bool supported_imaginary_quadratic(long d) { return d == 1 || d == 2 || d == 3 || d == 7 || d == 11; }

QuadElem integral_generator(long d) {
  require(supported_imaginary_quadratic(d), "unsupported imaginary quadratic field d = " + std::to_string(d) +
                                                " (supported: 1, 2, 3, 7, 11)");
  if (d % 4 == 3) return QuadElem(Rational(1, 2), Rational(1, 2), d);
  return QuadElem(0, 1, d);
}

std::pair<Rational, Rational> integral_coordinates(const QuadElem& x) {
  if (x.d() == 0 || x.v() == 0) return {x.u(), Rational(0)};
  if (x.d() % 4 == 3) {
    // w = 2ω − 1
    return {x.u() - x.v(), 2 * x.v()};
  }
  return {x.u(), x.v()};
}

RationalMatrix multiplication_matrix(const QuadElem& alpha) {
  require(alpha.d() != 0 || alpha.v() == 0, "field element without a field");
  long d = alpha.d();
  RationalMatrix m(2, 2);
  if (d == 0) {
    m(0, 0) = alpha.u();
    m(1, 1) = alpha.u();
    return m;
  }
  QuadElem omega = integral_generator(d);
  auto c0 = integral_coordinates(alpha);
  auto c1 = integral_coordinates(alpha * omega);
  m(0, 0) = c0.first;
  m(1, 0) = c0.second;
  m(0, 1) = c1.first;
  m(1, 1) = c1.second;
  return m;
}

RationalMatrix restrict_scalars(const Matrix<QuadElem>& a) {
  long d = 0;
  for (const auto& x : a.data())
    if (x.d() != 0) d = x.d();
  RationalMatrix r(2 * a.rows(), 2 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      QuadElem x = a(i, j);
      if (d != 0 && x.d() == 0) x = QuadElem(x.u(), x.v(), d);
      RationalMatrix b = multiplication_matrix(x);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = b(k, l);
    }
  return r;
}

// ---- Galois rings --------------------------------------------------------

std::shared_ptr<const GaloisRingContext> GaloisRingContext::make(const Integer& p, unsigned t, unsigned f,
                                                                 std::vector<Integer> poly) {
  require(is_prime(p), "p = " + p.get_str() + " is not prime");
  require(t >= 1 && f >= 1, "Galois ring needs t >= 1 and f >= 1");
  auto ctx = std::make_shared<GaloisRingContext>();
  ctx->p = p;
  ctx->t = t;
  ctx->f = f;
  mpz_pow_ui(ctx->modulus.get_mpz_t(), p.get_mpz_t(), t);
  if (poly.empty()) {
    poly = f == 1 ? std::vector<Integer>{0, 1} : first_irreducible(f, p);
  }
  require(poly.size() == f + 1 && poly.back() == 1, "defining polynomial must be monic of degree f");
  require(fp_irreducible(poly, p), "defining polynomial is not irreducible mod p");
  ctx->poly = std::move(poly);
  return ctx;
}

GRElem::GRElem(std::shared_ptr<const GaloisRingContext> ctx, std::vector<Integer> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  require(ctx_ != nullptr, "Galois ring element without context");
  require(c_.size() <= ctx_->f, "too many coefficients for the residue degree");
  reduce();
}

GRElem::GRElem(std::shared_ptr<const GaloisRingContext> ctx, const Integer& n) : GRElem(std::move(ctx), std::vector<Integer>{n}) {}

void GRElem::reduce() {
  if (!ctx_) return;
  const unsigned f = ctx_->f;
  // c_ may have length up to 2f−1 after a product; reduce by the monic poly.
  for (std::size_t k = c_.size(); k-- > f;) {
    if (c_[k] == 0) continue;
    Integer lead = c_[k];
    for (unsigned i = 0; i < f; ++i) c_[k - f + i] -= lead * ctx_->poly[i];
    c_[k] = 0;
  }
  c_.resize(f, Integer(0));
  for (auto& x : c_) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), ctx_->modulus.get_mpz_t());
}

void GRElem::adopt(const GRElem& o) {
  if (!o.ctx_) return;
  if (!ctx_) {
    ctx_ = o.ctx_;
    reduce();
    return;
  }
  require(ctx_ == o.ctx_ || (ctx_->p == o.ctx_->p && ctx_->t == o.ctx_->t && ctx_->poly == o.ctx_->poly),
          "elements of different Galois rings");
}

GRElem& GRElem::operator+=(const GRElem& o) {
  adopt(o);
  GRElem b = o;
  b.adopt(*this);
  c_.resize(std::max(c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  reduce();
  return *this;
}

GRElem& GRElem::operator-=(const GRElem& o) {
  adopt(o);
  GRElem b = o;
  b.adopt(*this);
  c_.resize(std::max(c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  reduce();
  return *this;
}

GRElem& GRElem::operator*=(const GRElem& o) {
  adopt(o);
  GRElem b = o;
  b.adopt(*this);
  std::vector<Integer> prod(c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += c_[i] * b.c_[j];
  }
  c_ = std::move(prod);
  reduce();
  return *this;
}

GRElem GRElem::operator-() const {
  GRElem r = *this;
  for (auto& x : r.c_) x = -x;
  r.reduce();
  return r;
}

bool operator==(const GRElem& a, const GRElem& b) {
  GRElem x = a, y = b;
  x.adopt(y);
  y.adopt(x);
  std::size_t n = std::max(x.c_.size(), y.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Integer xi = i < x.c_.size() ? x.c_[i] : Integer(0);
    Integer yi = i < y.c_.size() ? y.c_[i] : Integer(0);
    if (xi != yi) return false;
  }
  return true;
}

bool GRElem::in_maximal_ideal() const {
  require(ctx_ != nullptr, "maximal ideal test needs a ring context");
  for (const auto& x : c_)
    if (!mpz_divisible_p(x.get_mpz_t(), ctx_->p.get_mpz_t())) return false;
  return true;
}

bool GRElem::is_unit() const {
  require(ctx_ != nullptr, "unit test needs a ring context");
  return !in_maximal_ideal();
}

GRElem GRElem::inverse() const {
  require(is_unit(), "element is not a unit");
  // Solve M·y = e_0 with M the multiplication matrix; det M is a unit mod p.
  IntMatrix m = multiplication_matrix(*this);
  const unsigned f = ctx_->f;
  Integer det = determinant(m);
  Integer det_inv = inverse_mod(det, ctx_->modulus);
  RationalMatrix adj = scale(torsionlab::inverse(to_rational(m)), Rational(det));
  std::vector<Integer> y(f);
  for (unsigned i = 0; i < f; ++i) {
    Rational a = adj(i, 0);
    require(a.get_den() == 1, "adjugate is not integral");
    y[i] = a.get_num() * det_inv;
  }
  return GRElem(ctx_, std::move(y));
}

GRElem GRElem::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  GRElem result = ctx_ ? GRElem(ctx_, Integer(1)) : GRElem(1);
  GRElem b = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= b;
  }
  return result;
}

std::string GRElem::to_string() const {
  if (c_.size() == 1) return c_[0].get_str();
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
  return s + "]";
}

IntMatrix multiplication_matrix(const GRElem& x) {
  const auto& ctx = x.context();
  require(ctx != nullptr, "multiplication matrix needs a ring context");
  const unsigned f = ctx->f;
  IntMatrix m(f, f);
  for (unsigned j = 0; j < f; ++j) {
    std::vector<Integer> basis(f, Integer(0));
    basis[j] = 1;
    GRElem y = x * GRElem(ctx, basis);
    for (unsigned i = 0; i < f; ++i) m(i, j) = y.coeffs()[i];
  }
  return m;
}

IntMatrix restrict_scalars(const Matrix<GRElem>& a) {
  std::shared_ptr<const GaloisRingContext> ctx;
  for (const auto& x : a.data())
    if (x.context()) ctx = x.context();
  require(ctx != nullptr, "restriction of scalars needs a ring context");
  const unsigned f = ctx->f;
  IntMatrix r(f * a.rows(), f * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      GRElem x = a(i, j);
      if (!x.context()) x = GRElem(ctx, x.coeffs()[0]);
      IntMatrix b = multiplication_matrix(x);
      for (unsigned k = 0; k < f; ++k)
        for (unsigned l = 0; l < f; ++l) r(f * i + k, f * j + l) = b(k, l);
    }
  return r;
}

}  // namespace torsionlab
