#include "morsecert/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace morsecert {

std::string Alphabet::name(int generator) const {
  if (!names.empty()) return names.at(static_cast<std::size_t>(generator - 1));
  return prefix + std::to_string(generator);
}

int Alphabet::generator(std::string_view n) const {
  if (!names.empty()) {
    const auto it = std::find(names.begin(), names.end(), n);
    return it == names.end() ? 0 : static_cast<int>(it - names.begin()) + 1;
  }
  if (n.size() <= prefix.size() || n.substr(0, prefix.size()) != prefix) return 0;
  const auto digits = n.substr(prefix.size());
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) return 0;
  return std::atoi(std::string(digits).c_str());
}

namespace {

void push_reduced(std::vector<int>& w, int x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

}  // namespace

FreeWord::FreeWord(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw std::invalid_argument("letter 0 is not a generator");
    push_reduced(letters_, x);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

FreeWord FreeWord::pow(long k) const {
  const FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (long i = 0; i < std::labs(k); ++i) out *= base;
  return out;
}

FreeWord FreeWord::map_letters(const std::function<int(int)>& f) const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int x : letters_) out.push_back(x > 0 ? f(x) : -f(-x));
  return FreeWord(out);
}

long FreeWord::exponent_sum() const {
  long s = 0;
  for (int x : letters_) s += x > 0 ? 1 : -1;
  return s;
}

long FreeWord::exponent_sum(int generator) const {
  long s = 0;
  for (int x : letters_) {
    if (x == generator) ++s;
    if (x == -generator) --s;
  }
  return s;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (int x : letters_) m = std::max(m, std::abs(x));
  return m;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out *= b;
  return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& b) {
  for (int x : b.letters_) push_reduced(letters_, x);
  return *this;
}

std::string FreeWord::to_power_string(const Alphabet& alphabet) const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    const int g = std::abs(letters_[i]);
    long exp = 0;
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) {
      exp += letters_[i] > 0 ? 1 : -1;
      ++j;
    }
    if (!first) out << ' ';
    first = false;
    out << alphabet.name(g);
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

std::string FreeWord::to_letter_string(const Alphabet& alphabet) const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out << ' ';
    out << alphabet.name(std::abs(letters_[i]));
    if (letters_[i] < 0) out << "^-1";
  }
  return out.str();
}

FreeWord FreeWord::parse(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<int> letters;
  while (in >> token) {
    if (token == "1") continue;
    const auto caret = token.find('^');
    const std::string name = token.substr(0, caret);
    const int g = alphabet.generator(name);
    if (g <= 0) throw std::invalid_argument("unknown generator '" + name + "'");
    long exp = 1;
    if (caret != std::string::npos) {
      const std::string e = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size()) throw std::invalid_argument("bad exponent in '" + token + "'");
    }
    for (long i = 0; i < std::labs(exp); ++i) letters.push_back(exp > 0 ? g : -g);
  }
  return FreeWord(letters);
}

}  // namespace morsecert
