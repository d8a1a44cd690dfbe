#pragma once

#include <cstddef>
#include <vector>

#include "eqb/equivariant.hpp"

namespace eqb {

/// H^0 of the canonical-form bundle as a module of the acting group:
/// the direct sum over entries with d >= 0 of Sym^d(standard) (x) M. Odd
/// entries over a non-split projective group are modules of the preimage on
/// which -I acts as +1, and descend. A zero-dimensional result has no
/// matrices; use sections_character for its (zero) character.
Representation sections_module(const CanonicalForm& cf);

/// Whether -I acts trivially on every Sym^d(standard) (x) M summand of
/// odd-twist type, so that both lifts of each element agree.
bool central_cancellation(const CanonicalForm& cf);

/// Character of sections_module at the classes of the acting group, from
/// the traces of the module and the recurrence
/// chi_d(t) = t chi_{d-1}(t) - chi_{d-2}(t) for Sym^d.
std::vector<CycNum> sections_character(const CanonicalForm& cf);

/// Character of the action (g.s)(z) = a_g(g^-1.z) s(g^-1.z) on a basis of
/// H^0 of build_from_canonical(cf), found by the h^0 solver.
std::vector<CycNum> transported_sections_character(const CanonicalForm& cf);

std::size_t sections_dimension(const CanonicalForm& cf);

}  // namespace eqb
