#pragma once

// Umbrella header: spectral-radius bounds for nonnegative irreducible
// matrices via positive scale vectors, instantiated for the adjacency,
// signless Laplacian, distance, and distance signless Laplacian matrices of
// a connected graph.

#include "spectra_bounds/bounds.hpp"
#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/format.hpp"
#include "spectra_bounds/graph.hpp"
#include "spectra_bounds/graph_bounds.hpp"
#include "spectra_bounds/irreducible.hpp"
#include "spectra_bounds/matrix.hpp"
#include "spectra_bounds/matrix_io.hpp"
#include "spectra_bounds/random_gen.hpp"
#include "spectra_bounds/spectral.hpp"
