#pragma once

#include "sudoku_spectra/blowup.hpp"
#include "sudoku_spectra/eigenbasis.hpp"
#include "sudoku_spectra/errors.hpp"
#include "sudoku_spectra/graph.hpp"
#include "sudoku_spectra/integrality.hpp"
#include "sudoku_spectra/linalg/exact.hpp"
#include "sudoku_spectra/linalg/matrix.hpp"
#include "sudoku_spectra/linalg/polynomial.hpp"
#include "sudoku_spectra/linalg/symmetric_eigen.hpp"
#include "sudoku_spectra/spectra.hpp"
#include "sudoku_spectra/tiling.hpp"
