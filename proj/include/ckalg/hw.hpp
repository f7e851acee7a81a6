// The a = N specialization: deformed Heisenberg-Weyl algebra obtained by
// renaming the new-basis generators, its reconstruction as a cocycle
// bicrossproduct over the classical algebra, and the dual bialgebra with the
// matrix generators R, R^-1 and the two-cococycle on chi.
#pragma once

#include "ckalg/presentation.hpp"
#include "ckalg/report.hpp"

namespace ckalg {

// Deformed HW algebra with N-1 coordinate pairs.  omega_rot holds the
// rotation-sector constants omega_2..omega_{N-1} (defaults to all 1); the
// full CK vector gets omega_N = 0.  The table is generated directly from the
// HW patterns and must agree rank-for-rank with the renamed a = N CK
// presentation; a mismatch throws verification_error.
PresPtr build_hw(int N, std::vector<Rat> omega_rot = {}, int mode = kExact);

// Verifies that the classical algebra (same brackets, [X_i, Y_j] = 0) with
// trivial action, the exponential coaction and the antisymmetric two-cocycle
// xi reconstructs the deformed table, and that the reconstructed
// presentation is confluent.
Report check_cocycle_reconstruction(const PresPtr& hw, unsigned threads = 0);

// Commutative dual bialgebra on R_ij, R^-1_ij, x_i, y_i and chi; no antipode.
PresPtr build_dual_hw(int n, int mode = kExact);

// Coassociativity and counit laws on all dual generators (chi exercises the
// cococycle and the R-matrix contractions); Delta and epsilon respect every
// relation including the matrix-inverse sums.
Report check_dual_bialgebra(const PresPtr& dual, unsigned threads = 0);

// Looks for the sign s in {+1/2, -1/2} with chi' = chi + s*sum_i y_i x_i
// satisfying Delta chi' = 1 (x) chi' + chi' (x) 1 + sum_ij y_i (x) R^-1_ji x_j.
Report check_cocoboundary(const PresPtr& dual);

}  // namespace ckalg
