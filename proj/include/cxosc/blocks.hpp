#ifndef CXOSC_BLOCKS_HPP
#define CXOSC_BLOCKS_HPP

#include "cxosc/fock.hpp"
#include "cxosc/params.hpp"
#include "cxosc/report.hpp"

#include <complex>
#include <vector>

namespace cxosc {

/// The d×d coefficient blocks of the vector recurrence at block index n.
struct BlockCoefficients {
    CMatrix A; ///< single entry sqrt([(n+1)d]_ν) in the bottom-left corner
    CMatrix B; ///< superdiagonal sqrt([nd+j]_ν), j = 1..d-1
    CMatrix C; ///< diagonal α_{nd+j} = sqrt([nd+j]_ν! / [nd+j-d]_ν!); zero for n = 0
    CMatrix R; ///< diagonal ε^{nd+j}
};

BlockCoefficients block_coefficients(const AlgebraParams& p, int n);

/// α_m = sqrt([m]_ν! / [m-λ+1]_ν!), the lowering coefficient of the
/// normalized recurrence; zero for m < λ-1.
double normalized_alpha(const AlgebraParams& p, int m);

/*
 * Block Jacobi realization on nblocks blocks of size d = λ-1.
 *
 * `X` and `Y` use the displayed block layout: X has B_n on the diagonal,
 * C_{n+1} on the superdiagonal and A_n on the subdiagonal; Y has B_n^T on
 * the diagonal and A_n^T on the superdiagonal.
 *
 * `flat_X` and `flat_Y` are the operators x and Y_ν in the orthonormal
 * basis H̃_0..H̃_{M-1} (M = nblocks·d), with column m holding the image of
 * H̃_m:  x H̃_m = sqrt([m+1]) H̃_{m+1} + α_m H̃_{m-d},  Y H̃_m = sqrt([m]) H̃_{m-1}.
 */
struct BlockSystem {
    AlgebraParams params;
    int nblocks;
    std::vector<BlockCoefficients> blocks; ///< n = 0..nblocks
    CMatrix X;
    CMatrix Y;
    CMatrix R;
    CMatrix flat_X;
    CMatrix flat_Y;
};

BlockSystem assemble(const AlgebraParams& p, int nblocks);

/// Row-action form J of the blocked recurrence: x ℍ_n = Σ_m J[n][m] ℍ_m,
/// i.e. A_n at (n, n+1), B_n at (n, n), C_n at (n, n-1).
CMatrix recurrence_matrix(const BlockSystem& bs);

/// Residuals of x ℍ_n = A_n ℍ_{n+1} + B_n ℍ_n + C_n ℍ_{n-1},
/// Y ℍ_n = A_{n-1}^T ℍ_{n-1} + B_n^T ℍ_n and S ℍ_n = R_n ℍ_n for
/// n = 0..nblocks-2, evaluated at each sample point.
Report verify_vector_recurrences(const BlockSystem& bs, const std::vector<std::complex<double>>& samples);

/// [flat_Y, flat_X] on the interior: diagonal 1 + β̂_{m mod λ}, zero
/// off-diagonal, and agreement with the Fock [a_-, a_+].
Report commutator_spectrum(const BlockSystem& bs);

} // namespace cxosc

#endif // CXOSC_BLOCKS_HPP
