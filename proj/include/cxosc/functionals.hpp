#ifndef CXOSC_FUNCTIONALS_HPP
#define CXOSC_FUNCTIONALS_HPP

#include "cxosc/hermite.hpp"
#include "cxosc/params.hpp"
#include "cxosc/poly.hpp"
#include "cxosc/report.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <string>

namespace cxosc {

/// (u_k)_m with m = nλ + s: δ_ks [m]_ν! / (n! λ^n).
template <class Real = double>
std::complex<Real> moment(const AlgebraParams& p, int k, int m)
{
    if (k < 0 || k > p.d() - 1)
        throw ParamError("functional index " + std::to_string(k) + " outside 0.." + std::to_string(p.d() - 1));
    if (m < 0)
        throw ParamError("moment order must be >= 0");
    const int lambda = p.lambda();
    const int n = m / lambda, s = m % lambda;
    if (s != k)
        return 0;
    ext_real denom = 1;
    for (int i = 1; i <= n; ++i)
        denom *= ext_real(i) * ext_real(lambda);
    return std::complex<Real>(deformed_factorial_ext(p, m) / denom);
}

/// Value of a pairing together with Σ|f_m (u_k)_m|, the scale that a
/// vanishing value is judged against.
template <class Real = double>
struct Pairing {
    std::complex<Real> value;
    Real scale;
};

template <class Real = double>
Pairing<Real> pair_with_scale(const AlgebraParams& p, int k, const DensePoly<Real>& f)
{
    Pairing<Real> out{0, 0};
    for (int m = 0; m <= f.degree(); ++m) {
        const auto term = f.coeff(m) * moment<Real>(p, k, m);
        out.value += term;
        out.scale += std::abs(term);
    }
    return out;
}

/// ⟨u_k, f⟩ = Σ_m f_m (u_k)_m.
template <class Real = double>
std::complex<Real> pair(const AlgebraParams& p, int k, const DensePoly<Real>& f)
{
    return pair_with_scale<Real>(p, k, f).value;
}

/*
 * Checks the d-orthogonality of H_0..H_N against u_0..u_{d-1}:
 *   (i)  ⟨u_j, x^k H_n⟩ = 0 whenever n ≥ kd + j + 1,
 *   (ii) ⟨u_j, x^n H_{nd+j}⟩ ≠ 0.
 * Vanishing is relative to the pairing scale; nondegeneracy is relative to
 * max(1, |[nd+j]_ν!|).
 */
template <class Real = double>
Report verify_d_orthogonality(const AlgebraParams& p, int N)
{
    const int d = p.d();
    const double tol = p.tol();
    const HermiteFamily<Real> fam(p, std::max(N, 0), HermiteRoute::operational);

    Check zero{"zero_window", 0.0, tol};
    Check nondeg{"nondegeneracy", 0.0, tol, Check::Bound::lower};
    bool first_nondeg = true;
    for (int j = 0; j < d; ++j) {
        for (int n = j + 1; n <= N; ++n) {
            for (int k = 0; k * d + j + 1 <= n; ++k) {
                const auto pr = pair_with_scale<Real>(p, j, fam.monic(n).shifted(k));
                zero.absorb(double(std::abs(pr.value) / std::max<Real>(1, pr.scale)));
            }
        }
        for (int n = 0; n * d + j <= N; ++n) {
            const auto v = pair<Real>(p, j, fam.monic(n * d + j).shifted(n));
            const double rel = double(std::abs(v) / std::max<Real>(1, std::abs(deformed_factorial<Real>(p, n * d + j))));
            nondeg.value = first_nondeg ? rel : std::min(nondeg.value, rel);
            nondeg.count += 1;
            first_nondeg = false;
        }
    }
    Report r("window");
    r.add(zero);
    r.add(nondeg);
    return r;
}

/// Δ_n[i][j] = ⟨u_j, x^n H̃_{nd+i}⟩, i, j = 0..d-1.
template <class Real = double>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> vector_orthogonality_delta(const AlgebraParams& p,
                                                                                             int n)
{
    if (!p.positive())
        throw ParamError("vector orthogonality needs positive parameters");
    if (n < 0)
        throw ParamError("block index must be >= 0");
    const int d = p.d();
    const HermiteFamily<Real> fam(p, (n + 1) * d, HermiteRoute::operational);
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> delta(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            delta(i, j) = pair<Real>(p, j, fam.normalized(n * d + i).shifted(n));
    return delta;
}

/// Largest relative |(x^k 𝒰)(ℍ_n)| over k < n; these blocks must vanish.
template <class Real = double>
Real vector_orthogonality_lower_residual(const AlgebraParams& p, int n)
{
    const int d = p.d();
    const HermiteFamily<Real> fam(p, (n + 1) * d, HermiteRoute::operational);
    Real worst = 0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const auto pr = pair_with_scale<Real>(p, j, fam.normalized(n * d + i).shifted(k));
                worst = std::max(worst, std::abs(pr.value) / std::max<Real>(1, pr.scale));
            }
    return worst;
}

} // namespace cxosc

#endif // CXOSC_FUNCTIONALS_HPP
