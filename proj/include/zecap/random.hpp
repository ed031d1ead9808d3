#pragma once

// Seeded generators for Haar-random states, unitaries, channels and POVMs.
// Identical seeds give identical output on a given platform.

#include <cstddef>
#include <cstdint>
#include <random>

#include "zecap/quantum.hpp"

namespace zecap {

using Rng = std::mt19937_64;

/// Haar-random unit vector: complex Gaussian entries, normalized.
ComplexVector random_unit_vector(std::size_t d, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with the phase correction on R's diagonal).
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

/// Random isometry V (rows x cols, rows >= cols) with V^dagger V = I.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// Hermitian matrix with complex Gaussian entries (GUE, unnormalized).
ComplexMatrix random_hermitian(std::size_t d, Rng& rng);

/// exp(i t H) for Hermitian H, via eigendecomposition.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double t);

/// Random unitary near the identity: exp(i * step * H) with H a GUE matrix
/// scaled to unit spectral radius.
ComplexMatrix random_unitary_step(std::size_t d, double step, Rng& rng);

DensityMatrix random_pure_state(std::size_t d, Rng& rng);

/// Random mixed state: partial trace of a Haar-random pure state on C^d (x) C^env.
DensityMatrix random_mixed_state(std::size_t d, std::size_t env, Rng& rng);

/// Stinespring-style random channel: Kraus operators are the d x d blocks of
/// a random (d * kraus_count) x d isometry.
QuantumChannel random_channel(std::size_t d, std::size_t kraus_count, Rng& rng);

/// Rank-1 POVM with `outcomes` elements E_j = V^dagger |j><j| V for a random
/// outcomes x d isometry V. Requires outcomes >= d.
Povm random_general_povm(std::size_t d, std::size_t outcomes, Rng& rng);

}  // namespace zecap
