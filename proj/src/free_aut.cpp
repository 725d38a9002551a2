#include "morsecert/free_aut.hpp"

#include "morsecert/complex.hpp"

#include <algorithm>
#include <numeric>

namespace morsecert {

IntMatrix identity_matrix(std::size_t k) {
  IntMatrix m(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InvalidInput("matrix shape mismatch");
  IntMatrix c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

BigInt determinant_2x2(const IntMatrix& a) {
  if (a.size() != 2 || a[0].size() != 2 || a[1].size() != 2) throw InvalidInput("expected a 2x2 matrix");
  return a[0][0] * a[1][1] - a[0][1] * a[1][0];
}

IntMatrix matrix_power(const IntMatrix& a, long n) {
  IntMatrix base = a;
  if (n < 0) {
    const BigInt det = determinant_2x2(a);
    if (det != 1 && det != -1) throw InvalidInput("matrix is not invertible over Z");
    base = {{a[1][1] * det, -a[0][1] * det}, {-a[1][0] * det, a[0][0] * det}};
    n = -n;
  }
  IntMatrix out = identity_matrix(a.size());
  for (long i = 0; i < n; ++i) out = matrix_product(out, base);
  return out;
}

FreeGroupEndo FreeGroupEndo::identity(std::size_t k) {
  FreeGroupEndo e;
  e.rank = k;
  for (std::size_t g = 1; g <= k; ++g) e.images.push_back(FreeWord::generator(static_cast<int>(g)));
  return e;
}

FreeGroupEndo FreeGroupEndo::conjugation(std::size_t k, const FreeWord& c) {
  FreeGroupEndo e = identity(k);
  for (auto& w : e.images) w = c * w * c.inverse();
  return e;
}

const FreeWord& FreeGroupEndo::image(int generator) const {
  if (generator < 1 || static_cast<std::size_t>(generator) > rank) {
    throw InvalidInput("generator x" + std::to_string(generator) + " out of range for rank " + std::to_string(rank));
  }
  return images[static_cast<std::size_t>(generator - 1)];
}

FreeWord apply(const FreeGroupEndo& e, const FreeWord& w) {
  std::vector<int> out;
  for (int x : w.letters()) {
    const auto& img = e.image(x > 0 ? x : -x).letters();
    if (x > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
    }
  }
  return FreeWord(out);
}

FreeGroupEndo compose(const FreeGroupEndo& e1, const FreeGroupEndo& e2) {
  if (e1.rank != e2.rank) throw InvalidInput("rank mismatch in compose");
  FreeGroupEndo out;
  out.rank = e1.rank;
  for (const auto& w : e2.images) out.images.push_back(apply(e1, w));
  return out;
}

FreeGroupEndo endo_power(const FreeGroupEndo& e, std::size_t n) {
  FreeGroupEndo out = FreeGroupEndo::identity(e.rank);
  for (std::size_t i = 0; i < n; ++i) out = compose(e, out);
  return out;
}

namespace {

void check_index(std::size_t i, std::size_t k) {
  if (i < 1 || i > k / 2) {
    throw InvalidInput("index " + std::to_string(i) + " out of range 1.." + std::to_string(k / 2));
  }
}

FreeGroupEndo pair_map(std::size_t i, std::size_t k, std::vector<int> odd_image, std::vector<int> even_image) {
  check_index(i, k);
  FreeGroupEndo e = FreeGroupEndo::identity(k);
  const int a = static_cast<int>(2 * i - 1);
  const int b = a + 1;
  auto subst = [&](std::vector<int> w) {
    for (int& x : w) x = (x == 1 ? a : x == -1 ? -a : x == 2 ? b : -b);
    return FreeWord(w);
  };
  e.images[static_cast<std::size_t>(a - 1)] = subst(std::move(odd_image));
  e.images[static_cast<std::size_t>(b - 1)] = subst(std::move(even_image));
  return e;
}

std::string name_of(const char* base, std::size_t i) { return std::string(base) + "_" + std::to_string(i); }

}  // namespace

FreeGroupEndo phi(std::size_t i, std::size_t k) { return pair_map(i, k, {1, 1, 2}, {1, 2}); }
FreeGroupEndo psi(std::size_t i, std::size_t k) { return pair_map(i, k, {2, 1}, {2, 2, 1}); }
FreeGroupEndo phi_inverse(std::size_t i, std::size_t k) { return pair_map(i, k, {1, -2}, {2, -1, 2}); }
FreeGroupEndo psi_inverse(std::size_t i, std::size_t k) { return pair_map(i, k, {1, -2, 1}, {2, -1}); }

FreeGroupEndo sigma(std::size_t k) {
  FreeGroupEndo e = FreeGroupEndo::identity(k);
  for (std::size_t i = 1; i <= k / 2; ++i) std::swap(e.images[2 * i - 2], e.images[2 * i - 1]);
  return e;
}

bool RelationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

RelationCheck check_relation(const std::string& name, const FreeGroupEndo& lhs, const FreeGroupEndo& rhs) {
  RelationCheck check{name, lhs == rhs, {}};
  if (check.holds) return check;
  if (lhs.rank != rhs.rank) {
    check.detail = "rank " + std::to_string(lhs.rank) + " vs " + std::to_string(rhs.rank);
    return check;
  }
  const auto alphabet = Alphabet::indexed("x");
  for (std::size_t g = 0; g < lhs.rank; ++g) {
    if (lhs.images[g] == rhs.images[g]) continue;
    check.detail = "x" + std::to_string(g + 1) + ": " + lhs.images[g].to_letter_string(alphabet) + " vs " +
                   rhs.images[g].to_letter_string(alphabet);
    break;
  }
  return check;
}

RelationReport verify_relations(std::size_t k) {
  if (k < 2) throw InvalidInput("relations need rank at least 2");
  RelationReport report;
  report.rank = k;
  const auto s = sigma(k);
  report.checks.push_back(check_relation("sigma^2 = 1", compose(s, s), FreeGroupEndo::identity(k)));
  const std::size_t pairs = k / 2;
  for (std::size_t i = 1; i <= pairs; ++i) {
    report.checks.push_back(check_relation("sigma " + name_of("phi", i) + " sigma = " + name_of("psi", i),
                                           compose(s, compose(phi(i, k), s)), psi(i, k)));
  }
  for (std::size_t i = 1; i <= pairs; ++i) {
    for (std::size_t j = 1; j <= pairs; ++j) {
      if (i == j) continue;
      const auto fi = phi(i, k);
      const auto fj = phi(j, k);
      const auto pj = psi(j, k);
      const auto pi = name_of("phi", i);
      report.checks.push_back(check_relation(pi + " " + name_of("phi", j) + " = " + name_of("phi", j) + " " + pi,
                                             compose(fi, fj), compose(fj, fi)));
      report.checks.push_back(check_relation(pi + " " + name_of("psi", j) + " = " + name_of("psi", j) + " " + pi,
                                             compose(fi, pj), compose(pj, fi)));
    }
  }
  return report;
}

IntMatrix abelianization(const FreeGroupEndo& e) {
  IntMatrix m(e.rank, std::vector<BigInt>(e.rank, 0));
  for (std::size_t j = 0; j < e.rank; ++j) {
    for (int x : e.images[j].letters()) {
      const auto row = static_cast<std::size_t>((x > 0 ? x : -x) - 1);
      if (row >= e.rank) throw InvalidInput("image uses a generator beyond the rank");
      m[row][j] += x > 0 ? 1 : -1;
    }
  }
  return m;
}

namespace {

/// w = c z c^-1 with z cyclically reduced.
std::pair<FreeWord, FreeWord> cyclic_split(const FreeWord& w) {
  const auto& l = w.letters();
  std::size_t p = 0;
  while (2 * p + 1 < l.size() && l[p] == -l[l.size() - 1 - p]) ++p;
  const FreeWord c(std::vector<int>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(p)));
  const FreeWord z(std::vector<int>(l.begin() + static_cast<std::ptrdiff_t>(p),
                                    l.end() - static_cast<std::ptrdiff_t>(p)));
  return {c, z};
}

std::size_t total_length(const std::vector<FreeWord>& t) {
  std::size_t n = 0;
  for (const auto& w : t) n += w.length();
  return n;
}

bool mutually_inverse(const FreeGroupEndo& e, const FreeGroupEndo& f) {
  if (e.rank != f.rank) return false;
  return compose(e, f).is_identity() && compose(f, e).is_identity();
}

}  // namespace

std::optional<FreeGroupEndo> nielsen_inverse(const FreeGroupEndo& e) {
  const std::size_t k = e.rank;
  std::vector<FreeWord> t = e.images;
  std::vector<FreeWord> s = FreeGroupEndo::identity(k).images;
  FreeWord conj;  // e(s_i) = conj t_i conj^-1
  const std::size_t max_steps = 64 * (total_length(t) + 1);

  for (std::size_t step = 0; step < max_steps; ++step) {
    const bool basis = std::all_of(t.begin(), t.end(), [](const FreeWord& w) { return w.length() == 1; });
    if (basis) {
      FreeGroupEndo nu;
      nu.rank = k;
      nu.images.assign(k, FreeWord());
      std::vector<bool> seen(k, false);
      for (std::size_t i = 0; i < k; ++i) {
        const int x = t[i].letters()[0];
        const auto g = static_cast<std::size_t>((x > 0 ? x : -x) - 1);
        if (g >= k || seen[g]) return std::nullopt;
        seen[g] = true;
        nu.images[g] = x > 0 ? s[i] : s[i].inverse();
      }
      const FreeWord d = apply(nu, conj);
      for (auto& w : nu.images) w = d.inverse() * w * d;
      if (!mutually_inverse(e, nu)) return std::nullopt;
      return nu;
    }

    const std::size_t current = total_length(t);
    std::size_t best = current;
    std::optional<std::tuple<std::size_t, std::size_t, int, bool>> move;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        for (int eps : {1, -1}) {
          const FreeWord tj = eps > 0 ? t[j] : t[j].inverse();
          for (bool left : {false, true}) {
            const FreeWord cand = left ? tj * t[i] : t[i] * tj;
            const std::size_t len = current - t[i].length() + cand.length();
            if (len < best) {
              best = len;
              move = std::make_tuple(i, j, eps, left);
            }
          }
        }
      }
    }
    std::optional<FreeWord> strip;
    for (std::size_t i = 0; i < k; ++i) {
      const FreeWord c = cyclic_split(t[i]).first;
      if (c.empty()) continue;
      std::size_t len = 0;
      for (const auto& w : t) len += (c.inverse() * w * c).length();
      if (len < best) {
        best = len;
        strip = c;
      }
    }
    if (strip) {
      for (auto& w : t) w = strip->inverse() * w * *strip;
      conj = conj * *strip;
    } else if (move) {
      const auto [i, j, eps, left] = *move;
      const FreeWord tj = eps > 0 ? t[j] : t[j].inverse();
      const FreeWord sj = eps > 0 ? s[j] : s[j].inverse();
      t[i] = left ? tj * t[i] : t[i] * tj;
      s[i] = left ? sj * s[i] : s[i] * sj;
    } else {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

InnerResult is_inner(const FreeGroupEndo& e, const std::optional<FreeGroupEndo>& inverse) {
  if (inverse) {
    if (!mutually_inverse(e, *inverse)) throw InvalidInput("supplied inverse does not invert the endomorphism");
  } else if (!nielsen_inverse(e)) {
    throw InvalidInput("input is not an automorphism (no inverse found)");
  }
  const std::size_t k = e.rank;
  if (k == 0) return {true, {}};

  const auto [c, z] = cyclic_split(e.image(1));
  if (!(z == FreeWord::generator(1))) return {};
  if (k == 1) return {true, c};

  // Conjugators are c x1^j; the image of x2 fixes |j|.
  const FreeWord z2 = c.inverse() * e.image(2) * c;
  if (z2.length() % 2 == 0) return {};
  const long j = static_cast<long>(z2.length() - 1) / 2;
  for (long candidate : {j, -j}) {
    const FreeWord x = c * FreeWord::generator(1).pow(candidate);
    if (FreeGroupEndo::conjugation(k, x) == e) return {true, x};
    if (j == 0) break;
  }
  return {};
}

}  // namespace morsecert
