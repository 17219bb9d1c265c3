#ifndef CXOSC_PARAMS_HPP
#define CXOSC_PARAMS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cxosc {

using ext_real = long double;
using ext_complex = std::complex<long double>;

/// Default relative tolerance, applied against max(1, magnitude).
inline constexpr double default_tol = 1e-9;

/// Thrown for invalid algebra parameters or out-of-range arguments.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// ε_λ^k for an integer exponent, reduced mod λ before the trigonometric
/// evaluation. Quarter turns are returned exactly.
template <class Real = double>
std::complex<Real> root_of_unity(int lambda, long k)
{
    long r = k % lambda;
    if (r < 0)
        r += lambda;
    if (r == 0)
        return {Real(1), Real(0)};
    if (2 * r == lambda)
        return {Real(-1), Real(0)};
    if (4 * r == lambda)
        return {Real(0), Real(1)};
    if (4 * r == 3 * lambda)
        return {Real(0), Real(-1)};
    const ext_real angle = 2 * std::numbers::pi_v<ext_real> * ext_real(r) / ext_real(lambda);
    return {Real(std::cos(angle)), Real(std::sin(angle))};
}

/*
 * Parameters of the C_λ-extended oscillator.
 *
 * Holds λ, the λ-vector ν = (ν_0, ..., ν_{λ-1}) with Σ ν_l = 0 and the
 * derived constants
 *   ν̂_s = Σ_l ν_l ε^{sl}           (s = 0..λ-1, ν̂_0 = 0)
 *   α_k = (k + ν̂_k) / λ            (k = 1..λ-1)
 *   β_i = ν_i (ε^i - 1)            (i = 0..λ-1, β_0 = 0)
 *   β̂_j = ν̂_{j+1 mod λ} - ν̂_j     (j = 0..λ-1)
 * All values are stored in extended precision. Instances are immutable and
 * only obtainable through make_params().
 */
class AlgebraParams {
public:
    int lambda() const { return lambda_; }
    int d() const { return lambda_ - 1; }
    double tol() const { return tol_; }

    const std::vector<ext_complex>& nu() const { return nu_; }
    const std::vector<ext_complex>& nu_hat() const { return nu_hat_; }
    const std::vector<ext_complex>& beta() const { return beta_; }
    const std::vector<ext_complex>& beta_hat() const { return beta_hat_; }

    /// α_k for k = 1..λ-1.
    ext_complex alpha(int k) const;

    /// ν_{λ-i} = -ε^i ν_i for all i, together with conj(β_i) = β_{λ-i}.
    bool hermitian() const { return hermitian_; }
    /// Every ν̂_s is real and s + ν̂_s > 0 for s = 1..λ-1.
    bool positive() const { return positive_; }

    /// ν̂ evaluated at an arbitrary integer index (periodic mod λ).
    ext_complex nu_hat_at(long n) const;

    friend AlgebraParams make_params(int lambda, std::vector<std::complex<double>> nu, double tol);

private:
    AlgebraParams() = default;

    int lambda_ = 0;
    double tol_ = default_tol;
    std::vector<ext_complex> nu_;
    std::vector<ext_complex> nu_hat_;
    std::vector<ext_complex> alpha_;
    std::vector<ext_complex> beta_;
    std::vector<ext_complex> beta_hat_;
    bool hermitian_ = false;
    bool positive_ = false;
};

/// Validates and builds the parameter set. `nu` may have λ entries, or λ-1
/// entries in which case ν_0 = -Σ_{j≥1} ν_j is prepended.
AlgebraParams make_params(int lambda, std::vector<std::complex<double>> nu, double tol = default_tol);

/// [n]_ν = n + ν̂_{n mod λ}, with [0]_ν = 0.
ext_complex deformed_number_ext(const AlgebraParams& p, long n);

/// [n]_ν! by forward recurrence in extended precision.
ext_complex deformed_factorial_ext(const AlgebraParams& p, long n);

template <class Real = double>
std::complex<Real> deformed_number(const AlgebraParams& p, long n)
{
    return std::complex<Real>(deformed_number_ext(p, n));
}

template <class Real = double>
std::complex<Real> deformed_factorial(const AlgebraParams& p, long n)
{
    return std::complex<Real>(deformed_factorial_ext(p, n));
}

/// Δ(ν, s) = (1, α_1+1, ..., α_s+1, α_{s+1}, ..., α_{λ-1}).
std::vector<ext_complex> multi_index(const AlgebraParams& p, int s);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
ext_complex pochhammer(ext_complex a, long n);

/// Falling product [n]_ν [n-1]_ν ... [n-m+1]_ν; zero when n < m.
ext_complex deformed_falling(const AlgebraParams& p, long n, long m);

} // namespace cxosc

#endif // CXOSC_PARAMS_HPP
