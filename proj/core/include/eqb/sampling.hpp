#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eqb/bundle.hpp"
#include "eqb/cyclotomic.hpp"
#include "eqb/linalg.hpp"
#include "eqb/ratfun.hpp"

namespace eqb {

/// Random source with platform-independent draws: std::mt19937_64 is fully
/// specified, the standard distributions are not, so draws use modulo.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// a + b zeta with small integers a, b.
CycNum random_small_cyc(const CycField& f, Rng& rng);
/// Like random_small_cyc but never zero.
CycNum random_nonzero_cyc(const CycField& f, Rng& rng);
/// Random invertible constant matrix with small entries.
CycMatrix random_invertible(const CycField& f, std::size_t n, Rng& rng);
Poly random_poly(const CycField& f, int max_degree, Rng& rng);

/// Perm * L * U * diag(c) with L unit lower triangular of entry degree
/// <= ceil(max_degree / 2), U unit upper triangular of entry degree
/// <= floor(max_degree / 2) and constant c: polynomial in z with constant
/// determinant, entry degrees <= max_degree.
RatMat random_unimodular(const CycField& f, std::size_t n, int max_degree, Rng& rng);
/// The same construction in the variable 1/z.
RatMat random_unimodular_inverse(const CycField& f, std::size_t n, int max_degree, Rng& rng);

struct PlantedCocycle {
  std::vector<int> degrees;  // as planted, unsorted
  RatMat left;               // polynomial in z
  RatMat right;              // polynomial in 1/z
  RatMat transition;         // left * diag(z^d) * right
};

PlantedCocycle random_planted_cocycle(const CycField& f, std::size_t rank, int min_degree, int max_degree,
                                      int max_entry_degree, Rng& rng);

}  // namespace eqb
