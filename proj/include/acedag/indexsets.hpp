#pragma once

#include <vector>

#include "acedag/core.hpp"

namespace acedag {

/// All one-particle indices of `g` with element degree <= D, in canonical
/// (ascending) order. These are the seeds of an evaluation graph.
std::vector<OneParticleIndex> one_particle_indices(Group g, int D);

/// K_G(nu, D) under the p-degree cut: every canonical tuple of order exactly
/// `nu` with ||k||_p <= D that satisfies the group constraints. Returned in
/// ascending canonical order. Throws std::invalid_argument for nu == 0.
std::vector<BasisTuple> enumerate_K(Group g, int nu, const DegreeSpec& spec);

/// E-slice of the torus set: tuples of order `nu` with no zero entries,
/// sum m = 0 and sum |m| = D exactly.
std::vector<BasisTuple> enumerate_E_slice(int nu, int D);

}  // namespace acedag
