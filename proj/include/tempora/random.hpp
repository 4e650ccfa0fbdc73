#pragma once

// Seeded random draws for property sweeps. One engine (mt19937_64) per caller;
// nothing global.

#include <cstdint>
#include <random>

#include "tempora/channel.hpp"
#include "tempora/qcore.hpp"

namespace tempora {

using Rng = std::mt19937_64;

// d x d matrix with i.i.d. standard complex Gaussian entries.
CMatrix random_ginibre(Rng& rng, std::size_t rows, std::size_t cols);
// Haar unitary: QR of a Ginibre matrix with the R-diagonal phases removed.
CMatrix random_unitary(Rng& rng, std::size_t d);
// G G^† / Tr, full rank with probability one.
CMatrix random_state(Rng& rng, std::size_t d);
CMatrix random_pure_ket(Rng& rng, std::size_t d);
CMatrix random_hermitian(Rng& rng, std::size_t d);
// Random CPTP map with `rank` Kraus operators, cut from a Haar isometry.
Channel random_channel(Rng& rng, std::size_t d, std::size_t rank);
// Rank-r projector onto a Haar-random subspace.
CMatrix random_projector(Rng& rng, std::size_t d, std::size_t rank);
// Random +1/-1 Luders instrument from a random projector of the given rank.
Instrument random_pm_instrument(Rng& rng, std::size_t d, std::size_t rank);

}  // namespace tempora
