#include "morsecert/group_models.hpp"

#include "morsecert/complex.hpp"

#include <sstream>

namespace morsecert {

DoubledFreeElement DoubledFreeElement::identity(std::size_t n) { return {std::vector<FreeWord>(n), false}; }

DoubledFreeElement DoubledFreeElement::sigma(std::size_t n) { return {std::vector<FreeWord>(n), true}; }

std::size_t DoubledFreeElement::length() const {
  std::size_t total = 0;
  for (const auto& c : coords) total += c.length();
  return total;
}

bool DoubledFreeElement::is_identity() const {
  if (flip) return false;
  for (const auto& c : coords) {
    if (!c.empty()) return false;
  }
  return true;
}

FreeWord swap_ab(const FreeWord& w) {
  return w.map_letters([](int g) { return g == 1 ? 2 : 1; });
}

DoubledFreeElement multiply(const DoubledFreeElement& g, const DoubledFreeElement& h) {
  if (g.rank() != h.rank()) throw InvalidInput("rank mismatch in multiply");
  DoubledFreeElement out;
  out.coords.reserve(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out.coords.push_back(g.coords[i] * (g.flip ? swap_ab(h.coords[i]) : h.coords[i]));
  }
  out.flip = g.flip != h.flip;
  return out;
}

DoubledFreeElement invert(const DoubledFreeElement& g) {
  DoubledFreeElement out;
  for (const auto& c : g.coords) out.coords.push_back(g.flip ? swap_ab(c.inverse()) : c.inverse());
  out.flip = g.flip;
  return out;
}

DoubledFreeElement power(const DoubledFreeElement& g, long k) {
  const DoubledFreeElement base = k < 0 ? invert(g) : g;
  DoubledFreeElement out = DoubledFreeElement::identity(g.rank());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

DoubledFreeElement conjugate(const DoubledFreeElement& c, const DoubledFreeElement& g) {
  return multiply(multiply(c, g), invert(c));
}

long morse_degree(const DoubledFreeElement& g) {
  long d = 0;
  for (const auto& c : g.coords) d += c.exponent_sum();
  return d;
}

DoubledFreeElement witness(long n, const DoubledFreeElement& t) {
  if (t.flip) throw InvalidInput("t must not involve sigma");
  if (morse_degree(t) != 1) throw InvalidInput("t must have morse degree 1");
  const auto tn = power(t, n);
  return multiply(multiply(tn, DoubledFreeElement::sigma(t.rank())), invert(tn));
}

std::optional<FreeWord> twisted_sqrt(const FreeWord& w) {
  if (!(swap_ab(w) == w.inverse())) return std::nullopt;
  const auto& letters = w.letters();
  for (std::size_t len = 0; len <= letters.size(); ++len) {
    const FreeWord u(std::vector<int>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len)));
    if (u * swap_ab(u).inverse() == w) return u;
  }
  return std::nullopt;
}

long iota(const DoubledFreeElement& g) {
  if (!g.flip) throw InvalidInput("iota is defined only for elements involving sigma");
  long total = 0;
  for (const auto& c : g.coords) {
    const auto u = twisted_sqrt(c);
    if (!u) throw InvalidInput("coordinate " + c.to_power_string(Alphabet::letters_ab()) + " has no twisted square root");
    total += u->exponent_sum();
  }
  return total;
}

std::vector<FreeWord> reduced_words_ab(std::size_t len) {
  static const int order[] = {1, -1, 2, -2};
  std::vector<std::vector<int>> current{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : current) {
      for (int x : order) {
        if (!w.empty() && w.back() == -x) continue;
        auto longer = w;
        longer.push_back(x);
        next.push_back(std::move(longer));
      }
    }
    current = std::move(next);
  }
  std::vector<FreeWord> out;
  out.reserve(current.size());
  for (const auto& w : current) out.emplace_back(w);
  return out;
}

ConjugacyVerdict conjugacy_oracle(const DoubledFreeElement& g, const DoubledFreeElement& h,
                                  std::size_t max_length, bool restrict_to_kernel) {
  if (g.rank() != h.rank()) throw InvalidInput("rank mismatch in conjugacy oracle");
  if (g.rank() == 0 || g.rank() > kOracleMaxRank) {
    throw InvalidInput("conjugacy oracle supports ranks 1.." + std::to_string(kOracleMaxRank));
  }
  if (max_length > kOracleMaxLength) {
    throw InvalidInput("conjugacy oracle length bound is at most " + std::to_string(kOracleMaxLength));
  }
  std::vector<std::vector<FreeWord>> words(max_length + 1);
  for (std::size_t l = 0; l <= max_length; ++l) words[l] = reduced_words_ab(l);

  ConjugacyVerdict verdict;
  verdict.max_length = max_length;
  const std::size_t n = g.rank();
  auto test = [&](const DoubledFreeElement& c) {
    if (restrict_to_kernel && morse_degree(c) != 0) return false;
    ++verdict.candidates_examined;
    if (conjugate(c, g) == h) {
      verdict.conjugate = true;
      verdict.conjugator = c;
      return true;
    }
    return false;
  };

  for (std::size_t total = 0; total <= max_length; ++total) {
    for (bool flip : {false, true}) {
      if (n == 1) {
        for (const auto& w : words[total]) {
          if (test({{w}, flip})) return verdict;
        }
        continue;
      }
      for (std::size_t first = 0; first <= total; ++first) {
        for (const auto& u : words[first]) {
          for (const auto& v : words[total - first]) {
            if (test({{u, v}, flip})) return verdict;
          }
        }
      }
    }
  }
  return verdict;
}

std::optional<std::size_t> element_order(const DoubledFreeElement& g, std::size_t cutoff) {
  DoubledFreeElement p = g;
  for (std::size_t d = 1; d <= cutoff; ++d) {
    if (p.is_identity()) return d;
    p = multiply(p, g);
  }
  return std::nullopt;
}

std::string to_string(const DoubledFreeElement& g) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i > 0) out << ", ";
    out << g.coords[i].to_power_string(Alphabet::letters_ab());
  }
  out << (g.flip ? "; σ)" : ")");
  return out.str();
}

}  // namespace morsecert
