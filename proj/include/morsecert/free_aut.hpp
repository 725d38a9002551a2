#pragma once

#include "morsecert/free_word.hpp"
#include "morsecert/numbers.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace morsecert {

/// Square integer matrix, row-major.
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix identity_matrix(std::size_t k);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& a, long n);  // n >= 0, or n < 0 for det +-1
BigInt determinant_2x2(const IntMatrix& a);

/// Endomorphism of F_k given by the images of x_1..x_k.
struct FreeGroupEndo {
  std::size_t rank = 0;
  std::vector<FreeWord> images;  // images[g-1] is the image of x_g

  static FreeGroupEndo identity(std::size_t k);
  /// x -> c x c^-1.
  static FreeGroupEndo conjugation(std::size_t k, const FreeWord& c);

  const FreeWord& image(int generator) const;
  bool is_identity() const { return *this == identity(rank); }

  friend bool operator==(const FreeGroupEndo&, const FreeGroupEndo&) = default;
};

/// Throws InvalidInput when w uses a generator beyond e.rank.
FreeWord apply(const FreeGroupEndo& e, const FreeWord& w);
/// e1 after e2. Throws InvalidInput on a rank mismatch.
FreeGroupEndo compose(const FreeGroupEndo& e1, const FreeGroupEndo& e2);
FreeGroupEndo endo_power(const FreeGroupEndo& e, std::size_t n);

/// Throws InvalidInput unless 1 <= i <= k/2.
FreeGroupEndo phi(std::size_t i, std::size_t k);
FreeGroupEndo psi(std::size_t i, std::size_t k);
FreeGroupEndo phi_inverse(std::size_t i, std::size_t k);
FreeGroupEndo psi_inverse(std::size_t i, std::size_t k);
/// Swaps x_{2i-1} and x_{2i}; fixes x_k for odd k.
FreeGroupEndo sigma(std::size_t k);

struct RelationCheck {
  std::string relation;
  bool holds = false;
  std::string detail;  // first differing generator image on failure
};

struct RelationReport {
  std::size_t rank = 0;
  std::vector<RelationCheck> checks;
  bool all_hold() const;
};

RelationCheck check_relation(const std::string& name, const FreeGroupEndo& lhs, const FreeGroupEndo& rhs);

/// sigma phi_i sigma = psi_i, sigma^2 = 1, and phi_i, psi_i commuting with
/// phi_j, psi_j for i != j. Throws InvalidInput for k < 2.
RelationReport verify_relations(std::size_t k);

/// Column j holds the exponent sums of the image of x_j.
IntMatrix abelianization(const FreeGroupEndo& e);

/// Two-sided inverse found by greedy Nielsen reduction of the images (with
/// stripping of a common conjugator). Empty if the search stalls.
std::optional<FreeGroupEndo> nielsen_inverse(const FreeGroupEndo& e);

struct InnerResult {
  bool inner = false;
  FreeWord conjugator;  // e(x) = c x c^-1 when inner
};

/// Decides whether e is conjugation by some word. The automorphism
/// precondition is checked with the supplied inverse, or one from
/// nielsen_inverse; throws InvalidInput when neither confirms it.
InnerResult is_inner(const FreeGroupEndo& e, const std::optional<FreeGroupEndo>& inverse = std::nullopt);

}  // namespace morsecert
