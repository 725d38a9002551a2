#pragma once

#include "morsecert/free_aut.hpp"
#include "morsecert/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace morsecert {

/// Point of the real projective line; empty is infinity.
using ProjectivePoint = std::optional<Rational>;

std::string to_string(const ProjectivePoint& p);

/// s -> (a s + b) / (c s + d).
ProjectivePoint mobius(const IntMatrix& m, const ProjectivePoint& s);

/// Closed arc traversed in the increasing direction from start to end,
/// passing through infinity when end < start.
struct Arc {
  ProjectivePoint start;
  ProjectivePoint end;
  friend bool operator==(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& a);
bool arc_contains(const Arc& a, const ProjectivePoint& x);
bool arc_subset(const Arc& inner, const Arc& outer);
bool arcs_disjoint(const Arc& a, const Arc& b);
/// Closure of the complement.
Arc arc_complement(const Arc& a);
Arc arc_image(const IntMatrix& m, const Arc& a);

/// Ping-pong domain of one matrix: a neighbourhood of its attracting fixed
/// point and one of its repelling fixed point.
struct PingPongDomain {
  Arc attracting;
  Arc repelling;
  friend bool operator==(const PingPongDomain&, const PingPongDomain&) = default;
};

struct PingPongCertificate {
  IntMatrix a;
  IntMatrix b;
  long n = 0;
  PingPongDomain x_a;
  PingPongDomain x_b;
  std::vector<std::string> inclusions;
  friend bool operator==(const PingPongCertificate&, const PingPongCertificate&) = default;
};

/// The verified inclusions, or nothing if some check fails. Throws
/// InvalidInput if a matrix is not invertible over Z.
std::optional<std::vector<std::string>> pingpong_inclusions(const IntMatrix& a, const IntMatrix& b, long n,
                                                            const PingPongDomain& x_a, const PingPongDomain& x_b);

bool pingpong_verify(const IntMatrix& a, const IntMatrix& b, long n, const PingPongDomain& x_a,
                     const PingPongDomain& x_b);
bool pingpong_verify(const PingPongCertificate& cert);

/// Rational approximations of the (attracting, repelling) fixed points of a
/// hyperbolic matrix. Empty for non-hyperbolic matrices or a fixed point at
/// infinity.
std::optional<std::pair<Rational, Rational>> fixed_point_centres(const IntMatrix& m);

/// Scans n = 1..max_n with symmetric rational intervals around the fixed
/// points, widest first. Deterministic.
std::optional<PingPongCertificate> pingpong_search(const IntMatrix& a, const IntMatrix& b, long max_n);

/// The Hopfian deduction that <phi_1^N, psi_1^N> is free of rank 2. Throws
/// InvalidInput without a valid certificate for [2 1; 1 1], [1 1; 1 2].
std::vector<std::string> freeness_chain(const std::optional<PingPongCertificate>& cert);

}  // namespace morsecert
