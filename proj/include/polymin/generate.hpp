#pragma once

// Seeded random inputs for property tests and the gen-random subcommand.
// Output depends only on the arguments.

#include <cstddef>
#include <cstdint>

#include "polymin/complex.hpp"
#include "polymin/kripke.hpp"

namespace polymin {

/// Random abstract simplicial complex on vertices v0..v{n-1}: random maximal
/// faces of dimension <= max_dim, closed under faces, every vertex present.
/// Each cell gets one random atom from p0..p{n_atoms-1}, sometimes two.
/// Cells are ordered by dimension, then by vertex list.
/// Throws ArgumentError if n_vertices == 0, n_atoms == 0 or max_dim > 8.
SimplicialModel random_simplicial_model(std::uint64_t seed, std::size_t n_vertices, std::size_t max_dim,
                                        std::size_t n_atoms);

/// Random reflexive Kripke model with n elements w0.. and atoms p0..; each
/// non-loop pair is related with probability about `density_percent`/100.
ReflexiveKripkeModel random_kripke_model(std::uint64_t seed, std::size_t n, std::size_t n_atoms,
                                         unsigned density_percent);

}  // namespace polymin
