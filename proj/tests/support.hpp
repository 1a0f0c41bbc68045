#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "mcgspin/homology.hpp"

namespace testsupport {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("MCG_SPINLAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed());
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline mcgspin::ClassMod2 random_mod2(int g, bool nonzero = false) {
  for (;;) {
    mcgspin::ClassMod2 v(g);
    for (int i = 0; i < 2 * g; ++i) v.set(i, uniform(0, 1) == 1);
    if (!nonzero || !v.is_zero()) return v;
  }
}

inline mcgspin::ClassInt random_int(int g, int bound = 3, bool nonzero = false) {
  for (;;) {
    std::vector<std::int64_t> c(2 * g);
    for (auto& x : c) x = uniform(-bound, bound);
    mcgspin::ClassInt v(g, c);
    if (!nonzero || !v.is_zero()) return v;
  }
}

inline mcgspin::QuadraticForm random_form(int g) { return mcgspin::QuadraticForm(random_mod2(g)); }

// Plain reference pairing, written without the library's bit tricks.
inline long long pairing_oracle(const std::vector<long long>& u, const std::vector<long long>& v) {
  const std::size_t g = u.size() / 2;
  long long s = 0;
  for (std::size_t i = 0; i < g; ++i) s += u[i] * v[g + i] - u[g + i] * v[i];
  return s;
}

inline std::vector<long long> to_ll(const mcgspin::ClassMod2& v) {
  std::vector<long long> out(v.dim());
  for (int i = 0; i < v.dim(); ++i) out[i] = v.test(i) ? 1 : 0;
  return out;
}

inline std::vector<long long> to_ll(const mcgspin::ClassInt& v) {
  return {v.coords().begin(), v.coords().end()};
}

// q(sum of basis vectors) expanded term by term.
inline int quadratic_oracle(const mcgspin::QuadraticForm& q, const mcgspin::ClassMod2& v) {
  const int g = v.genus();
  std::vector<int> terms;
  for (int i = 0; i < 2 * g; ++i)
    if (v.test(i)) terms.push_back(i);
  int s = 0;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    s += q.value_on_basis(terms[a]);
    for (std::size_t b = a + 1; b < terms.size(); ++b)
      if (std::abs(terms[a] - terms[b]) == g) s += 1;
  }
  return s % 2;
}

}  // namespace testsupport
