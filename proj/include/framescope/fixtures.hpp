#pragma once

#include <utility>

#include "framescope/group.hpp"
#include "framescope/localization.hpp"
#include "framescope/rng.hpp"

namespace framescope {

// Deterministic generators behind `gen`, `verify`, and the test batches.
// Everything flows through the shared Rng, so a root seed fixes each output
// bit for bit.

FrameSystem gaussian_system(std::size_t dim, std::size_t count, Rng& rng,
                            std::string label = "gaussian");

// Canonical tight frame of a Gaussian system; Parseval by construction.
// Needs count >= dim so the Gaussian draw spans.
FrameSystem parseval_system(std::size_t dim, std::size_t count, Rng& rng);

// Image of the standard basis under I plus a contraction-scale Gaussian
// perturbation: invertible with condition number below ~3.
FrameSystem riesz_basis(std::size_t dim, Rng& rng);

// Gaussian frame with its canonical dual; count >= dim.
std::pair<FrameSystem, FrameSystem> dual_pair_system(std::size_t dim,
                                                     std::size_t count,
                                                     Rng& rng);

// Equal-norm strictness fixture at even dimension: phi the standard basis,
// psi alternating half/double basis vectors, symbol alternating 2 and 1/2.
// The multiplier collapses to the identity while the Gram-norm bound sits at
// 4, so the bound's slack is maximal and every pipeline stage has a known
// exact value.
struct StrictnessFixture {
  FrameSystem phi;
  FrameSystem psi;
  Symbol symbol;
};
StrictnessFixture strictness_fixture(std::size_t even_dim);

// Symbol with moduli at most max_modulus, uniform phase.
Symbol random_symbol(std::size_t count, double max_modulus, Rng& rng);

// Symbol drawn uniformly from a disk.
Symbol random_symbol_in_disk(std::size_t count, Complex center, double radius,
                             Rng& rng);

Symbol random_real_symbol(std::size_t count, double half_range, Rng& rng);

CyclicWindow random_window(std::size_t order, Rng& rng);

}
