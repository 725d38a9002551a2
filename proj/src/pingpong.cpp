#include "morsecert/pingpong.hpp"

#include "morsecert/complex.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <tuple>

namespace morsecert {

std::string to_string(const ProjectivePoint& p) { return p ? to_string(*p) : "inf"; }

ProjectivePoint mobius(const IntMatrix& m, const ProjectivePoint& s) {
  const Rational a(m[0][0]), b(m[0][1]), c(m[1][0]), d(m[1][1]);
  if (!s) {
    if (c == 0) return std::nullopt;
    return a / c;
  }
  const Rational den = c * *s + d;
  if (den == 0) return std::nullopt;
  return (a * *s + b) / den;
}

namespace {

/// Position of x when walking in the increasing direction from base.
std::tuple<int, Rational> cyclic_key(const ProjectivePoint& base, const ProjectivePoint& x) {
  if (x == base) return {0, Rational(0)};
  if (!base) return {1, *x};
  if (!x) return {2, Rational(0)};
  if (*x > *base) return {1, *x};
  return {3, *x};
}

}  // namespace

std::string to_string(const Arc& a) { return "[" + to_string(a.start) + ", " + to_string(a.end) + "]"; }

bool arc_contains(const Arc& a, const ProjectivePoint& x) {
  return cyclic_key(a.start, x) <= cyclic_key(a.start, a.end);
}

bool arc_subset(const Arc& inner, const Arc& outer) {
  return arc_contains(outer, inner.start) && arc_contains(outer, inner.end) &&
         cyclic_key(outer.start, inner.start) <= cyclic_key(outer.start, inner.end);
}

bool arcs_disjoint(const Arc& a, const Arc& b) { return !arc_contains(a, b.start) && !arc_contains(b, a.start); }

Arc arc_complement(const Arc& a) { return {a.end, a.start}; }

Arc arc_image(const IntMatrix& m, const Arc& a) {
  const auto s = mobius(m, a.start);
  const auto e = mobius(m, a.end);
  if (determinant_2x2(m) > 0) return {s, e};
  return {e, s};
}

std::optional<std::vector<std::string>> pingpong_inclusions(const IntMatrix& a, const IntMatrix& b, long n,
                                                            const PingPongDomain& x_a, const PingPongDomain& x_b) {
  for (const auto* m : {&a, &b}) {
    const BigInt det = determinant_2x2(*m);
    if (det != 1 && det != -1) throw InvalidInput("ping-pong needs matrices of determinant +-1");
  }
  if (n < 1) return std::nullopt;
  std::vector<std::string> out;
  const std::vector<std::pair<std::string, Arc>> arcs = {
      {"U_A+", x_a.attracting}, {"U_A-", x_a.repelling}, {"U_B+", x_b.attracting}, {"U_B-", x_b.repelling}};
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (!arcs_disjoint(arcs[i].second, arcs[j].second)) return std::nullopt;
      out.push_back(arcs[i].first + " " + to_string(arcs[i].second) + " and " + arcs[j].first + " " +
                    to_string(arcs[j].second) + " are disjoint");
    }
  }
  const std::string power = "^" + std::to_string(n);
  auto push = [&](const std::string& name, const IntMatrix& m, const Arc& from, const Arc& to) {
    const Arc image = arc_image(m, from);
    if (!arc_subset(image, to)) return false;
    out.push_back(name + " " + to_string(from) + " = " + to_string(image) + " lies in " + to_string(to));
    return true;
  };
  for (const auto& [label, m, dom] : {std::tuple{std::string("A"), a, x_a}, std::tuple{std::string("B"), b, x_b}}) {
    if (!push(label + power, matrix_power(m, n), arc_complement(dom.repelling), dom.attracting)) return std::nullopt;
    if (!push(label + "^-" + std::to_string(n), matrix_power(m, -n), arc_complement(dom.attracting), dom.repelling)) {
      return std::nullopt;
    }
  }
  return out;
}

bool pingpong_verify(const IntMatrix& a, const IntMatrix& b, long n, const PingPongDomain& x_a,
                     const PingPongDomain& x_b) {
  return pingpong_inclusions(a, b, n, x_a, x_b).has_value();
}

bool pingpong_verify(const PingPongCertificate& cert) {
  const auto inc = pingpong_inclusions(cert.a, cert.b, cert.n, cert.x_a, cert.x_b);
  return inc && *inc == cert.inclusions;
}

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

/// Best rational approximation with denominator <= bound (continued fractions).
Rational approximate(const Float& x, long bound) {
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Float r = x;
  for (int i = 0; i < 64; ++i) {
    const Float fl = floor(r);
    const BigInt q = fl.convert_to<BigInt>();
    const BigInt h2 = q * h1 + h0;
    const BigInt k2 = q * k1 + k0;
    if (k2 > bound) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const Float frac = r - fl;
    if (frac == 0) break;
    r = 1 / frac;
  }
  return Rational(h1, k1);
}

}  // namespace

std::optional<std::pair<Rational, Rational>> fixed_point_centres(const IntMatrix& m) {
  const BigInt det = determinant_2x2(m);
  const BigInt tr = m[0][0] + m[1][1];
  if (m[1][0] == 0 || tr * tr <= 4 * det * det) return std::nullopt;
  // c s^2 + (d - a) s - b = 0.
  const Float a = Float(m[0][0]), b = Float(m[0][1]), c = Float(m[1][0]), d = Float(m[1][1]);
  const Float disc = sqrt((d - a) * (d - a) + 4 * c * b);
  const Float r1 = ((a - d) + disc) / (2 * c);
  const Float r2 = ((a - d) - disc) / (2 * c);
  // The eigenvalue at fixed point s is c s + d.
  const bool first_attracts = abs(c * r1 + d) > abs(c * r2 + d);
  const Rational q1 = approximate(r1, 1000);
  const Rational q2 = approximate(r2, 1000);
  return first_attracts ? std::make_pair(q1, q2) : std::make_pair(q2, q1);
}

std::optional<PingPongCertificate> pingpong_search(const IntMatrix& a, const IntMatrix& b, long max_n) {
  for (const auto* m : {&a, &b}) {
    const BigInt det = determinant_2x2(*m);
    if (det != 1 && det != -1) throw InvalidInput("ping-pong needs matrices of determinant +-1");
  }
  const auto ca = fixed_point_centres(a);
  const auto cb = fixed_point_centres(b);
  if (!ca || !cb) return std::nullopt;
  const std::vector<Rational> widths = {Rational(1, 2),  Rational(2, 5),  Rational(1, 3),  Rational(1, 4),
                                        Rational(1, 5),  Rational(1, 8),  Rational(1, 10), Rational(1, 16),
                                        Rational(1, 32), Rational(1, 64), Rational(1, 128), Rational(1, 256)};
  auto around = [](const Rational& centre, const Rational& w) { return Arc{centre - w, centre + w}; };
  for (long n = 1; n <= max_n; ++n) {
    for (const auto& w : widths) {
      const PingPongDomain xa{around(ca->first, w), around(ca->second, w)};
      const PingPongDomain xb{around(cb->first, w), around(cb->second, w)};
      auto inc = pingpong_inclusions(a, b, n, xa, xb);
      if (inc) return PingPongCertificate{a, b, n, xa, xb, std::move(*inc)};
    }
  }
  return std::nullopt;
}

std::vector<std::string> freeness_chain(const std::optional<PingPongCertificate>& cert) {
  if (!cert) throw InvalidInput("freeness chain needs a ping-pong certificate");
  const IntMatrix a = abelianization(phi(1, 2));
  const IntMatrix b = abelianization(psi(1, 2));
  if (cert->a != a || cert->b != b) throw InvalidInput("certificate is not for the abelianized phi_1, psi_1");
  if (!pingpong_verify(*cert)) throw InvalidInput("ping-pong certificate does not replay");
  const long n = cert->n;
  const std::string ns = std::to_string(n);
  if (abelianization(endo_power(phi(1, 2), static_cast<std::size_t>(n))) != matrix_power(a, n) ||
      abelianization(endo_power(psi(1, 2), static_cast<std::size_t>(n))) != matrix_power(b, n)) {
    throw InvalidInput("abelianization of the powers does not match");
  }
  std::vector<std::string> chain;
  for (const auto& inc : cert->inclusions) chain.push_back("verified: " + inc);
  chain.push_back("ping-pong lemma: <A^" + ns + ", B^" + ns + "> is free of rank 2, A = [2 1; 1 1], B = [1 1; 1 2]");
  chain.push_back("verified: phi_1^" + ns + " and psi_1^" + ns + " abelianize to A^" + ns + " and B^" + ns);
  chain.push_back("the composite F_2 -> <phi_1^" + ns + ", psi_1^" + ns + "> -> <A^" + ns + ", B^" + ns +
                  "> = F_2 is an epimorphism of F_2 onto itself");
  chain.push_back("free groups are Hopfian, so the composite is injective, hence so is the first map");
  chain.push_back("conclusion: <phi_1^" + ns + ", psi_1^" + ns + "> < Aut(F_2) is free of rank 2");
  return chain;
}

}  // namespace morsecert
