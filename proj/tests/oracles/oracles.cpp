#include "oracles.hpp"

#include <algorithm>

namespace eqb::oracle {

namespace {

bool contains(const std::vector<CycMatrix>& set, const CycMatrix& m, bool projective) {
  for (const auto& x : set) {
    if (x == m || (projective && x == -m)) return true;
  }
  return false;
}

std::size_t index_of(const std::vector<CycMatrix>& set, const CycMatrix& m) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] == m) return i;
  }
  return set.size();
}

}  // namespace

std::vector<CycMatrix> closure(const std::vector<CycMatrix>& gens, bool projective) {
  const CycField& f = gens.front().field();
  std::vector<CycMatrix> out{CycMatrix::identity(f, gens.front().rows())};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& g : gens) {
        CycMatrix p = out[i] * g;
        if (!contains(out, p, projective)) {
          out.push_back(std::move(p));
          grew = true;
        }
      }
    }
  }
  return out;
}

std::size_t class_count(const std::vector<CycMatrix>& elements) {
  std::vector<bool> seen(elements.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (const auto& h : elements) seen[index_of(elements, h * elements[i] * h.inverse())] = true;
  }
  return count;
}

bool has_complement(const std::vector<CycMatrix>& preimage) {
  const std::size_t n = preimage.size();
  const CycField& f = preimage.front().field();
  const std::size_t minus = index_of(preimage, -CycMatrix::identity(f, 2));
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index_of(preimage, preimage[i] * preimage[j]);
  }
  const std::size_t target = n / 2;
  std::vector<char> in(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::fill(in.begin(), in.end(), 0);
      std::vector<std::size_t> members{index_of(preimage, CycMatrix::identity(f, 2))};
      in[members[0]] = 1;
      bool bad = false;
      for (std::size_t k = 0; k < members.size() && !bad; ++k) {
        for (std::size_t g : {x, y}) {
          const std::size_t p = table[members[k] * n + g];
          if (p == minus) bad = true;
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
          }
        }
        if (members.size() > target) bad = true;
      }
      if (!bad && members.size() == target) return true;
    }
  }
  return false;
}

CycNum inner_product(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  const CycField& f = a.front().field();
  CycNum s(f);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i].conj();
  return s.scaled(Rational(1, static_cast<std::int64_t>(a.size())));
}

std::vector<std::vector<CycNum>> constituent_characters(const Representation& r) {
  const MatrixGroup& g = *r.group();
  const CycField& f = g.field();
  const auto roots = roots_of_unity(f);
  std::vector<CycNum> halves;
  for (const auto& u : roots) {
    halves.push_back(u);
    for (const auto& v : roots) halves.push_back((u + v).scaled(Rational(1, 2)));
  }
  halves.push_back(CycNum(f));
  std::sort(halves.begin(), halves.end());
  halves.erase(std::unique(halves.begin(), halves.end()), halves.end());

  // Joint eigenspaces: refine the whole space class by class.
  struct Space {
    CycMatrix basis;  // columns
    std::vector<CycNum> omega;
  };
  std::vector<Space> spaces{{CycMatrix::identity(f, r.dim()), {}}};
  for (const auto& cls : g.classes()) {
    CycMatrix sum(f, r.dim(), r.dim());
    for (std::size_t i : cls) sum = sum + r.image(i);
    const CycNum size(f, Rational(static_cast<std::int64_t>(cls.size())));
    std::vector<Space> next;
    for (const auto& sp : spaces) {
      // restriction of the class sum to an invariant subspace: solve basis * X = sum * basis
      const CycMatrix x = *sp.basis.solve(sum * sp.basis);
      for (const auto& h : halves) {
        const CycNum lambda = size * h;
        const CycMatrix shifted = x - CycMatrix::identity(f, x.rows()).scaled(lambda);
        const CycMatrix ker = shifted.kernel();
        if (ker.cols() == 0) continue;
        Space s{sp.basis * ker, sp.omega};
        s.omega.push_back(lambda);
        next.push_back(std::move(s));
      }
    }
    spaces = std::move(next);
  }

  std::vector<std::vector<CycNum>> out;
  for (const auto& sp : spaces) {
    // chi(1)^2 = |G| / sum_k omega_k conj(omega_k) / |C_k|
    CycNum denom(f);
    for (std::size_t k = 0; k < g.classes().size(); ++k) {
      denom += (sp.omega[k] * sp.omega[k].conj())
                   .scaled(Rational(1, static_cast<std::int64_t>(g.classes()[k].size())));
    }
    const CycNum deg2 = CycNum(f, Rational(static_cast<std::int64_t>(g.order()))) / denom;
    std::int64_t deg = 1;
    while (deg < 64 && !(CycNum(f, Rational(deg * deg)) == deg2)) ++deg;
    std::vector<CycNum> chi(g.order(), CycNum(f));
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto& cls = g.classes()[g.class_of(i)];
      chi[i] = sp.omega[g.class_of(i)].scaled(Rational(deg, static_cast<std::int64_t>(cls.size())));
    }
    out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace eqb::oracle
