#pragma once

#include "morsecert/free_word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace morsecert {

/// Element (u, flip) of (F_2)^n ⋊ <σ>, where σ swaps a and b in every
/// coordinate. Generator 1 is a, generator 2 is b.
struct DoubledFreeElement {
  std::vector<FreeWord> coords;
  bool flip = false;

  static DoubledFreeElement identity(std::size_t n);
  static DoubledFreeElement sigma(std::size_t n);

  std::size_t rank() const { return coords.size(); }
  /// Total letter length over all coordinates.
  std::size_t length() const;
  bool is_identity() const;

  friend bool operator==(const DoubledFreeElement&, const DoubledFreeElement&) = default;
  friend auto operator<=>(const DoubledFreeElement&, const DoubledFreeElement&) = default;
};

/// a <-> b on a single word.
FreeWord swap_ab(const FreeWord& w);

/// (u, e)(v, d) = (u · σ^e(v), e xor d). Throws InvalidInput on rank mismatch.
DoubledFreeElement multiply(const DoubledFreeElement& g, const DoubledFreeElement& h);
DoubledFreeElement invert(const DoubledFreeElement& g);
DoubledFreeElement power(const DoubledFreeElement& g, long k);
DoubledFreeElement conjugate(const DoubledFreeElement& c, const DoubledFreeElement& g);  // c g c^-1

/// Sum of all exponents over all coordinates (the flip is ignored).
long morse_degree(const DoubledFreeElement& g);

/// t^n σ t^-n. Throws InvalidInput unless t has degree 1 and no flip.
DoubledFreeElement witness(long n, const DoubledFreeElement& t);

/// Solves w = u · σ(u)^-1. Returns nothing when σ(w) != w^-1 or no prefix of
/// w solves it.
std::optional<FreeWord> twisted_sqrt(const FreeWord& w);

/// Sum of morse degrees of the per-coordinate twisted square roots. Throws
/// InvalidInput if g has no flip or a root does not exist.
long iota(const DoubledFreeElement& g);

struct ConjugacyVerdict {
  bool conjugate = false;
  std::optional<DoubledFreeElement> conjugator;  // c with c g c^-1 = h
  std::size_t max_length = 0;
  std::size_t candidates_examined = 0;
};

/// Bounds on the exhaustive search: rank and conjugator length.
inline constexpr std::size_t kOracleMaxRank = 2;
inline constexpr std::size_t kOracleMaxLength = 8;

/// Exhaustive search for c of total length <= max_length (of morse degree 0
/// when restrict_to_kernel) with c g c^-1 = h, by length then lexicographic
/// order. Throws InvalidInput if the bounds are exceeded.
ConjugacyVerdict conjugacy_oracle(const DoubledFreeElement& g, const DoubledFreeElement& h,
                                  std::size_t max_length, bool restrict_to_kernel);

/// Least d <= cutoff with g^d = 1, or nothing.
std::optional<std::size_t> element_order(const DoubledFreeElement& g, std::size_t cutoff);

/// All reduced words over {a, b} of length exactly len, in lexicographic
/// letter order a < A < b < B.
std::vector<FreeWord> reduced_words_ab(std::size_t len);

std::string to_string(const DoubledFreeElement& g);

}  // namespace morsecert
