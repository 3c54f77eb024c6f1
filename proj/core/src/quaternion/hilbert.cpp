#include "torsionlab/quaternion/hilbert.hpp"

#include <algorithm>
#include <set>

#include "torsionlab/linalg/local_snf.hpp"
#include "torsionlab/linalg/numeric.hpp"
#include "torsionlab/quaternion/number_theory.hpp"
#include "torsionlab/util/fp_poly.hpp"

namespace torsionlab {
namespace {

// The same square class with integer numerator: x·den².
Integer integerize(const Rational& x) { return x.get_num() * x.get_den(); }

unsigned vp(const Integer& x, const Integer& p) { return valuation(x, p, 1u << 30); }

Integer strip(const Integer& x, const Integer& p, unsigned v) {
  Integer pv;
  mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), v);
  return x / pv;
}

int sign_pow(bool odd) { return odd ? -1 : 1; }

// Hilbert symbol over Q_p for integers a, b ≠ 0.
int hilbert_qp(const Integer& a, const Integer& b, const Integer& p) {
  unsigned alpha = vp(a, p), beta = vp(b, p);
  Integer u = strip(a, p, alpha), v = strip(b, p, beta);
  if (p == 2) {
    auto eps = [](const Integer& x) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), 4);
      return r == 3;
    };
    auto omega = [](const Integer& x) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), 8);
      return r == 3 || r == 5;
    };
    bool e = (eps(u) && eps(v)) ^ ((alpha & 1) && omega(v)) ^ ((beta & 1) && omega(u));
    return sign_pow(e);
  }
  bool pm1 = (alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1;
  int s = sign_pow(pm1);
  if (beta & 1) s *= legendre(u, p);
  if (alpha & 1) s *= legendre(v, p);
  return s;
}

// Q_p image of an O_F-element u + v·w under w ↦ root (root known mod p^k).
Integer qp_image(const Integer& u, const Integer& v, const Integer& root, const Integer& mod) {
  Integer r = u + v * root;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

struct IntegralQuad {
  Integer u, v;  // element u + v·w with u, v ∈ Z, same square class as the input
};

IntegralQuad integralize(const QuadElem& x) {
  Integer den;
  mpz_lcm(den.get_mpz_t(), x.u().get_den_mpz_t(), x.v().get_den_mpz_t());
  Rational s = Rational(den);
  Rational u = x.u() * s * s, v = x.v() * s * s;
  return {u.get_num(), v.get_num()};
}

Integer int_norm(const IntegralQuad& x, long d) { return x.u * x.u + Integer(d) * x.v * x.v; }

// Symbol at a split place via the embedding into Q_p (p odd or p = 2).
int symbol_split(const IntegralQuad& a, const IntegralQuad& b, const Place& v) {
  const Integer& p = v.p;
  Integer na = int_norm(a, v.d), nb = int_norm(b, v.d);
  unsigned k = std::max(vp(na, p), vp(nb, p)) + (p == 2 ? 6 : 2);
  Integer mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), k);
  Integer root;
  if (p == 2) {
    root = sqrt_2adic(Integer(-v.d), k);
    if (v.root != root % 4) root = mod - root;
  } else {
    root = hensel_sqrt(Integer(-v.d), v.root, p, k);
  }
  Integer ia = qp_image(a.u, a.v, root, mod), ib = qp_image(b.u, b.v, root, mod);
  // Valuations are below k, so the truncated images have the right class.
  require(ia != 0 && ib != 0, "split place: insufficient precision");
  return hilbert_qp(ia, ib, p);
}

// Valuation of an O_F-element at an odd inert place (uniformizer p).
unsigned inert_valuation(const IntegralQuad& x, const Integer& p) {
  if (x.u == 0) return vp(x.v, p);
  if (x.v == 0) return vp(x.u, p);
  return std::min(vp(x.u, p), vp(x.v, p));
}

int symbol_inert(const IntegralQuad& a, const IntegralQuad& b, const Place& v) {
  const Integer& p = v.p;
  unsigned alpha = inert_valuation(a, p), beta = inert_valuation(b, p);
  IntegralQuad a0{strip(a.u, p, alpha), strip(a.v, p, alpha)};
  IntegralQuad b0{strip(b.u, p, beta), strip(b.v, p, beta)};
  // χ(x) = N(x)^{(p−1)/2} on F_{p²}; (−1) has norm 1.
  int s = 1;
  if (beta & 1) s *= legendre(int_norm(a0, v.d), p);
  if (alpha & 1) s *= legendre(int_norm(b0, v.d), p);
  return s;
}

// Valuation at the ramified place (p, w), p odd, and residue of x/w^val in F_p.
std::pair<unsigned, Integer> ramified_parts(const IntegralQuad& x, const Integer& p, long d) {
  unsigned vu = x.u == 0 ? (1u << 29) : vp(x.u, p);
  unsigned vv = x.v == 0 ? (1u << 29) : vp(x.v, p);
  unsigned eu = 2 * vu, ev = 2 * vv + 1;
  Integer md = Integer(-d);
  Integer res;
  unsigned val;
  if (eu < ev) {
    val = eu;
    // x / w^{2vu} ≡ u / (−d)^{vu}; (−d)/p has p-valuation exactly 1.
    Integer num = strip(x.u, p, vu);
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), Integer(md / p).get_mpz_t(), vu);
    res = num * inverse_mod(den, p);
  } else {
    val = ev;
    Integer num = strip(x.v, p, vv);
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), Integer(md / p).get_mpz_t(), vv);
    res = num * inverse_mod(den, p);
  }
  mpz_mod(res.get_mpz_t(), res.get_mpz_t(), p.get_mpz_t());
  return {val, res};
}

int symbol_ramified_odd(const IntegralQuad& a, const IntegralQuad& b, const Place& v) {
  auto [alpha, ua] = ramified_parts(a, v.p, v.d);
  auto [beta, ub] = ramified_parts(b, v.p, v.d);
  // Tame symbol χ((−1)^{αβ} u_a^β u_b^{−α}) with χ the Legendre symbol mod p.
  int s = 1;
  if ((alpha & 1) && (beta & 1)) s *= legendre(Integer(-1), v.p);
  if (beta & 1) s *= legendre(ua, v.p);
  if (alpha & 1) s *= legendre(ub, v.p);
  return s;
}

int symbol_nondyadic(const IntegralQuad& a, const IntegralQuad& b, const Place& v) {
  switch (v.kind) {
    case Place::Kind::Split: return symbol_split(a, b, v);
    case Place::Kind::Inert: return symbol_inert(a, b, v);
    case Place::Kind::Ramified: return symbol_ramified_odd(a, b, v);
    default: break;
  }
  throw ValidationError("place " + v.label() + " does not belong to Q(sqrt(-" + std::to_string(v.d) + "))");
}

int kronecker_minus_d(long d, const Integer& p) {
  Integer md = -d;
  return mpz_kronecker(md.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

std::string Place::label() const {
  switch (kind) {
    case Kind::Infinite: return "inf";
    case Kind::Rational: return p.get_str();
    case Kind::Inert: return "(" + p.get_str() + ")";
    case Kind::Split: return "(" + p.get_str() + ", w-" + root.get_str() + ")";
    case Kind::Ramified:
      if (p == 2 && d % 4 == 1) return "(2, 1+w)";
      return "(" + p.get_str() + ", w)";
  }
  return "?";
}

std::vector<Place> places_above(const Integer& p, long d) {
  require(is_prime(p), p.get_str() + " is not prime");
  if (d == 0) return {Place::rational(p)};
  if (p == 2) {
    if (d % 4 == 1 || d % 4 == 2) return {Place{Place::Kind::Ramified, 2, 0, d}};
    if (d % 8 == 7) return {Place{Place::Kind::Split, 2, 1, d}, Place{Place::Kind::Split, 2, 3, d}};
    return {Place{Place::Kind::Inert, 2, 0, d}};
  }
  if (Integer(d) % p == 0) return {Place{Place::Kind::Ramified, p, 0, d}};
  if (kronecker_minus_d(d, p) == 1) {
    Integer r = sqrt_mod_prime(Integer(-d), p);
    Integer r2 = p - r;
    if (r2 < r) std::swap(r, r2);
    return {Place{Place::Kind::Split, p, r, d}, Place{Place::Kind::Split, p, r2, d}};
  }
  return {Place{Place::Kind::Inert, p, 0, d}};
}

Place parse_place(const std::string& s, long d) {
  if (s == "inf" || s == "oo" || s == "infinity") {
    require(d == 0, "the real place exists only over Q");
    return Place::infinity();
  }
  if (d == 0) {
    Integer p = parse_integer(s);
    require(is_prime(p), "place " + s + " is not a prime");
    return Place::rational(p);
  }
  // Accept "p" when p has a single place above it, otherwise an exact label.
  std::string digits;
  for (char c : s)
    if (std::isdigit(static_cast<unsigned char>(c)))
      digits += c;
    else if (!digits.empty())
      break;
  require(!digits.empty(), "cannot parse place \"" + s + "\"");
  auto places = places_above(Integer(digits), d);
  if (places.size() == 1 && (s == digits || s == places[0].label())) return places[0];
  for (const auto& pl : places)
    if (pl.label() == s) return pl;
  std::string options;
  for (const auto& pl : places) options += " " + pl.label();
  throw ValidationError("ambiguous or unknown place \"" + s + "\"; places above " + digits + ":" + options);
}

int hilbert_symbol_q(const Rational& a, const Rational& b, const Place& v) {
  require(a != 0 && b != 0, "Hilbert symbol of zero");
  Integer ia = integerize(a), ib = integerize(b);
  if (v.kind == Place::Kind::Infinite) return (ia < 0 && ib < 0) ? -1 : 1;
  require(v.kind == Place::Kind::Rational, "place " + v.label() + " is not a place of Q");
  return hilbert_qp(ia, ib, v.p);
}

std::vector<Integer> relevant_primes(const QuadElem& a, const QuadElem& b, long d) {
  std::set<Integer> ps{2};
  auto add = [&](const Integer& n) {
    if (n == 0) return;
    for (const auto& [p, e] : factorize(n)) ps.insert(p);
  };
  if (d == 0) {
    add(a.u().get_num());
    add(a.u().get_den());
    add(b.u().get_num());
    add(b.u().get_den());
  } else {
    IntegralQuad ia = integralize(a), ib = integralize(b);
    add(int_norm(ia, d));
    add(int_norm(ib, d));
    add(Integer(d));
  }
  return {ps.begin(), ps.end()};
}

int hilbert_symbol(const QuadElem& a, const QuadElem& b, const Place& v) {
  require(!(a == 0) && !(b == 0), "Hilbert symbol of zero");
  if (v.d == 0) {
    require(a.is_rational() && b.is_rational(), "Hilbert symbol over Q of non-rational elements");
    return hilbert_symbol_q(a.u(), b.u(), v);
  }
  require(v.kind != Place::Kind::Infinite, "Q(sqrt(-d)) has no real place");
  IntegralQuad ia = integralize(a), ib = integralize(b);
  if (!v.dyadic()) return symbol_nondyadic(ia, ib, v);
  if (v.kind == Place::Kind::Split) return symbol_split(ia, ib, v);
  // The unique dyadic place: product formula over all other places (the
  // complex place contributes 1).
  auto dyadic = places_above(2, v.d);
  if (dyadic.size() != 1)
    throw UndeterminedSymbol("more than one undetermined dyadic place");
  int prod = 1;
  for (const auto& p : relevant_primes(a, b, v.d)) {
    if (p == 2) continue;
    for (const auto& pl : places_above(p, v.d)) prod *= symbol_nondyadic(ia, ib, pl);
  }
  return prod;
}

std::vector<Place> ramification_set(const QuaternionAlgebra& alg) {
  std::vector<Place> out;
  if (alg.d == 0 && hilbert_symbol_q(alg.a.u(), alg.b.u(), Place::infinity()) == -1) out.push_back(Place::infinity());
  for (const auto& p : relevant_primes(alg.a, alg.b, alg.d))
    for (const auto& pl : places_above(p, alg.d))
      if (hilbert_symbol(alg.a, alg.b, pl) == -1) out.push_back(pl);
  return out;
}

bool is_division(const QuaternionAlgebra& alg) { return !ramification_set(alg).empty(); }

}  // namespace torsionlab
