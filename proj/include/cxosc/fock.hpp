#ifndef CXOSC_FOCK_HPP
#define CXOSC_FOCK_HPP

#include "cxosc/params.hpp"
#include "cxosc/report.hpp"

#include <Eigen/Dense>

#include <vector>

namespace cxosc {

using CMatrix = Eigen::MatrixXcd;

/*
 * Truncation of the canonical Fock representation to |0⟩..|dim-1⟩:
 *   a_+|n⟩ = sqrt([n+1]_ν)|n+1⟩,  a_-|n⟩ = sqrt([n]_ν)|n-1⟩,
 *   N|n⟩ = n|n⟩,  s|n⟩ = ε^n|n⟩,  Π_i = (1/λ) Σ_j ε^{-ij} s^j.
 * Identities that move states past the cut are only exact on the leading
 * block, see interior().
 */
struct FockMatrices {
    AlgebraParams params;
    int dim;
    CMatrix lower;  ///< a_-
    CMatrix raise;  ///< a_+
    CMatrix number; ///< N
    CMatrix klein;  ///< s
    std::vector<CMatrix> projections;
};

FockMatrices fock_matrices(const AlgebraParams& p, int dim);

/// Largest |entry| of m restricted to the leading `size`×`size` block.
double interior_norm(const CMatrix& m, int size);

/// Residuals of the defining relations on the interior block:
/// [a_-,a_+] = 1 + Σ β_i s^i, [N,a_±] = ±a_±, a_- s = ε s a_-,
/// a_+ s = ε^{-1} s a_+, a_+ Π_i = Π_{i+1} a_+, [a_-,a_+] = 1 + Σ β̂_j Π_j,
/// together with the projector and s^λ = 1 identities.
Report verify_algebra(const FockMatrices& fm);

/// Residuals of [a_-^n, a_+], [a_-, a_+^n], [N, a_∓^n] = ∓n a_∓^n and the
/// cyclic case [a_-^{kλ}, a_+] = kλ a_-^{kλ-1}.
Report verify_power_commutators(const FockMatrices& fm, int n);

/// n + Σ_{i=1}^{λ-1} β_i (ε^{ni} - 1)/(ε^i - 1) s^i as a dim×dim diagonal.
CMatrix power_commutator_weight(const FockMatrices& fm, int n);

/// Matrix elements ⟨T e_n, e_m⟩ of T = Y_ν (lowering) or T = Z in the
/// orthonormal monomial basis e_n = z^n / sqrt([n]_ν!), computed through
/// the polynomial calculus and the Bergmann inner product.
CMatrix bargmann_matrix(const AlgebraParams& p, int dim, bool lowering);

} // namespace cxosc

#endif // CXOSC_FOCK_HPP
