// Deterministic pseudo-randomness from a 64-bit seed. Draws go through
// explicit modulo so results do not depend on the standard library's
// distribution implementations.
#pragma once

#include <cstdint>
#include <random>

#include "ilab/matrix.hpp"

namespace ilab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t raw() { return g_(); }
  std::int64_t below(std::int64_t n) { return static_cast<std::int64_t>(raw() % static_cast<std::uint64_t>(n)); }

  typename PrimeField::value_type element(const PrimeField& k) { return below(k.p); }
  typename PrimeField::value_type nonzero(const PrimeField& k) { return 1 + below(k.p - 1); }

  Vec<PrimeField> vector(const PrimeField& k, int n) {
    Vec<PrimeField> v(n);
    for (auto& x : v) x = element(k);
    return v;
  }

  Mat<PrimeField> matrix(const PrimeField& k, int rows, int cols) {
    Mat<PrimeField> m(k, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = element(k);
    return m;
  }

  Mat<PrimeField> invertible(const PrimeField& k, int n) {
    for (int tries = 0; tries < 1000; ++tries) {
      Mat<PrimeField> m = matrix(k, n, n);
      auto red = reduce(m);
      if (red.rank == n) return m;
    }
    fail(errc::internal, "Rng::invertible: no invertible matrix found");
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace ilab
