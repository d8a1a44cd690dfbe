#pragma once

#include <cstddef>
#include <vector>

#include "eqb/linalg.hpp"
#include "eqb/matgroup.hpp"

// Independent reference computations used to check the library. They work
// on plain matrices with linear searches and share no code with the group
// tables of the library.
namespace eqb::oracle {

/// All products of the generators, by repeated multiplication until stable.
/// With `projective`, matrices are identified up to sign.
std::vector<CycMatrix> closure(const std::vector<CycMatrix>& gens, bool projective = false);

/// Number of conjugacy classes of the closure, by brute-force orbits.
std::size_t class_count(const std::vector<CycMatrix>& elements);

/// Whether the group of matrices `preimage` (closed, containing -I) has a
/// subgroup of order |preimage| / 2 avoiding -I, searched over all
/// two-generator subgroups.
bool has_complement(const std::vector<CycMatrix>& preimage);

/// Irreducible characters occurring in a representation, found from the
/// joint eigenvalues of the class-sum operators. Eigenvalue candidates are
/// |C| u and |C| (u + v) / 2 for roots of unity u, v, which covers every
/// cyclic and binary dihedral group. Values are per element of the group.
std::vector<std::vector<CycNum>> constituent_characters(const Representation& r);

/// (1/|G|) sum_g a(g) conj(b(g)).
CycNum inner_product(const std::vector<CycNum>& a, const std::vector<CycNum>& b);

}  // namespace eqb::oracle
