#pragma once

#include <cstddef>
#include <vector>

#include "eqb/equivariant.hpp"
#include "eqb/sampling.hpp"

namespace eqb {

/// Small modules of `group` to draw from: the linear characters, the
/// standard representation and its twists by characters when `group` is
/// linear, and Sym^2 of the standard representation. With `odd_only`, only
/// modules on which -I acts as -1.
std::vector<Representation> module_pool(const GroupPtr& group, bool odd_only = false);

/// A direct sum of pool members of total dimension at most `max_dim`,
/// conjugated by a random invertible matrix.
Representation random_module(const std::vector<Representation>& pool, std::size_t max_dim, Rng& rng);

struct FormShape {
  int min_degree = -3;
  int max_degree = 3;
  std::size_t max_module_dim = 3;
  std::size_t max_rank = 5;
};

/// A random canonical form over `group` respecting the parity rules.
CanonicalForm random_canonical_form(const ActingGroupPtr& group, const FormShape& shape, Rng& rng);

/// A random automorphism of the bundle diag(z^d_i) of `e`: upper triangular
/// in decreasing degree with constant invertible diagonal blocks and entries
/// of degree <= min(d_i - d_j, max_entry_degree).
RatMat random_automorphism(const EquivariantBundle& e, int max_entry_degree, Rng& rng);

/// Conjugates a block diagonal bundle diag(z^d_i) by a random automorphism
/// (upper triangular in decreasing degree, constant invertible diagonal
/// blocks, entries of degree <= min(d_i - d_j, max_entry_degree)) and then
/// changes frame by random unimodular matrices in z and 1/z of entry degree
/// <= frame_degree. The result is isomorphic to `e` but not block diagonal.
EquivariantBundle random_twist(const EquivariantBundle& e, int max_entry_degree, int frame_degree, Rng& rng);

}  // namespace eqb
