#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace morsecert {

/// Naming scheme for free generators: generator g (1-based) prints as
/// names[g-1] for a fixed alphabet, or prefix + g otherwise.
struct Alphabet {
  std::vector<std::string> names;
  std::string prefix;

  static Alphabet letters_ab() { return {{"a", "b"}, {}}; }
  static Alphabet indexed(std::string prefix = "x") { return {{}, std::move(prefix)}; }

  std::string name(int generator) const;
  /// 0 if unknown.
  int generator(std::string_view name) const;
};

/// Freely reduced word. Letter +g is generator g, -g its inverse (g >= 1).
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(const std::vector<int>& letters);

  static FreeWord generator(int g) { return FreeWord({g}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord pow(long k) const;
  /// Applies a letter substitution g -> f(g) (and inverses accordingly).
  FreeWord map_letters(const std::function<int(int)>& f) const;

  /// Sum of all exponents.
  long exponent_sum() const;
  /// Exponent sum of a single generator.
  long exponent_sum(int generator) const;
  /// Largest generator index that occurs, 0 for the empty word.
  int max_generator() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  FreeWord& operator*=(const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) = default;

  /// Collapsed powers: "a^3 b^-3"; the empty word prints as "1".
  std::string to_power_string(const Alphabet& alphabet) const;
  /// One token per letter: "x1 x1 x2^-1"; the empty word prints as "1".
  std::string to_letter_string(const Alphabet& alphabet) const;

  /// Accepts either rendering (whitespace separated tokens name or
  /// name^k). Throws std::invalid_argument on unknown names.
  static FreeWord parse(std::string_view text, const Alphabet& alphabet);

 private:
  std::vector<int> letters_;
};

}  // namespace morsecert
