#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "draughts/match.hpp"
#include "draughts/stats.hpp"
#include "draughts/winmatrix.hpp"

namespace draughts {

// All emitters return the complete file contents. Formatting is fixed
// (C locale, '\n' line endings, snprintf with pinned precision) so equal
// inputs always produce byte-identical files.

// index,winner,tau,first_mover,ended_by -- winner is 1, 2 or "draw".
std::string batch_csv(const BatchResult& batch);

// index,t,v,capture sidecar; only records with trajectories contribute.
std::string trajectory_csv(const BatchResult& batch);

// theta2 values as header row, theta1 values as first column.
std::string matrix_csv(const WinningMatrix& matrix);
std::string matrix_draws_csv(const WinningMatrix& matrix);

// Binary PPM (P6), one pixel per cell: blue-white-red linear map over
// [-1, 1], theta1 growing bottom to top, theta2 left to right.
std::string matrix_ppm(const WinningMatrix& matrix);

// bin_lo,bin_hi,count with a final overflow row when anything overflowed.
std::string histogram_csv(const Histogram& hist);

// t,mean_v,n
std::string advantage_curve_csv(const AdvantageCurve& curve);

// t_delta_d,mean_v pooled over curves, point order following the input.
std::string collapse_csv(const std::vector<AdvantageCurve>& curves);

// L,P
std::string sequence_csv(const SequenceDistribution& dist);

// d1,d2,lambda,r2
std::string lambda_fits_csv(const std::vector<PairLambda>& fits);

// alpha,dispersion over the searched grid.
std::string alpha_dispersion_csv(const CollapseFit& fit);

// FNV-1a 64-bit over the raw bytes; used for manifest checksums.
uint64_t fnv1a64(const std::string& bytes);

std::string format_g(double v);        // %g, for grid labels and d values
std::string format_fixed(double v);    // %.6f, for matrix elements and means

}  // namespace draughts
