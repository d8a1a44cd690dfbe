#include "eqb/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace eqb {

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

CycNum random_small_cyc(const CycField& f, Rng& rng) {
  const CycNum a(f, Rational(rng.uniform(-2, 2)));
  if (f.degree() == 1 || rng.uniform(0, 2) != 0) return a;
  return a + CycNum::zeta(f, 1) * CycNum(f, Rational(rng.uniform(-2, 2)));
}

CycNum random_nonzero_cyc(const CycField& f, Rng& rng) {
  CycNum x = random_small_cyc(f, rng);
  while (x.is_zero()) x = random_small_cyc(f, rng);
  return x;
}

CycMatrix random_invertible(const CycField& f, std::size_t n, Rng& rng) {
  while (true) {
    CycMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_small_cyc(f, rng);
    }
    if (!m.det().is_zero()) return m;
  }
}

Poly random_poly(const CycField& f, int max_degree, Rng& rng) {
  std::vector<CycNum> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(rng.coin() ? random_small_cyc(f, rng) : CycNum(f));
  return Poly(f, std::move(c));
}

RatMat random_unimodular(const CycField& f, std::size_t n, int max_degree, Rng& rng) {
  const int dl = (max_degree + 1) / 2;
  const int du = max_degree / 2;
  RatMat lower = RatMat::identity(f, n);
  RatMat upper = RatMat::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = RatFun(random_poly(f, dl, rng));
      upper(j, i) = RatFun(random_poly(f, du, rng));
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
  RatMat p(f, n, n);
  std::vector<RatFun> scale;
  for (std::size_t i = 0; i < n; ++i) {
    p(i, perm[i]) = RatFun::constant(CycNum(f, Rational(1)));
    scale.push_back(RatFun::constant(random_nonzero_cyc(f, rng)));
  }
  return p * lower * upper * RatMat::diagonal(scale);
}

RatMat random_unimodular_inverse(const CycField& f, std::size_t n, int max_degree, Rng& rng) {
  const CycNum zero(f);
  const CycNum one(f, Rational(1));
  return random_unimodular(f, n, max_degree, rng).substitute(zero, one, one, zero);
}

PlantedCocycle random_planted_cocycle(const CycField& f, std::size_t rank, int min_degree, int max_degree,
                                      int max_entry_degree, Rng& rng) {
  PlantedCocycle out{{}, random_unimodular(f, rank, max_entry_degree, rng), RatMat(f, rank, rank), RatMat(f, rank, rank)};
  std::vector<RatFun> d;
  for (std::size_t i = 0; i < rank; ++i) {
    out.degrees.push_back(rng.uniform(min_degree, max_degree));
    d.push_back(RatFun::monomial(CycNum(f, Rational(1)), out.degrees.back()));
  }
  out.right = random_unimodular_inverse(f, rank, max_entry_degree, rng);
  out.transition = out.left * RatMat::diagonal(d) * out.right;
  return out;
}

}  // namespace eqb
