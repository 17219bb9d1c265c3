#ifndef CXOSC_ANALYTIC_HPP
#define CXOSC_ANALYTIC_HPP

#include "cxosc/params.hpp"
#include "cxosc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cxosc {

/// Thrown when a truncated series cannot meet its tail bound.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SeriesKind { gen_exp, kernel_section };

/*
 * Truncated power series attached to the algebra: the generalized
 * exponential E_λ(z) = Σ z^n/[n]_ν! or a section z ↦ K_ν(z, w) of the
 * reproducing kernel.
 */
template <class Real = double>
class SeriesFunction {
public:
    using scalar = std::complex<Real>;

    static SeriesFunction gen_exp(const AlgebraParams& p, int truncation)
    {
        if (truncation < 0)
            throw ParamError("truncation must be >= 0");
        std::vector<scalar> a(truncation + 1);
        a[0] = 1;
        for (int n = 1; n <= truncation; ++n)
            a[n] = a[n - 1] / deformed_number<Real>(p, n);
        return SeriesFunction(SeriesKind::gen_exp, std::move(a));
    }

    /// Coefficients conj(w)^n / [n]_ν!, i.e. the function z ↦ K_ν(z, w).
    static SeriesFunction kernel_section(const AlgebraParams& p, scalar w, int truncation)
    {
        auto base = gen_exp(p, truncation);
        scalar power = 1;
        for (auto& c : base.coeffs_) {
            c *= power;
            power *= std::conj(w);
        }
        base.kind_ = SeriesKind::kernel_section;
        return base;
    }

    SeriesKind kind() const { return kind_; }
    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<scalar>& coeffs() const { return coeffs_; }

    scalar operator()(scalar z) const
    {
        scalar acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    DensePoly<Real> as_poly() const { return DensePoly<Real>(coeffs_); }

private:
    SeriesFunction(SeriesKind kind, std::vector<scalar> c) : kind_(kind), coeffs_(std::move(c)) {}

    SeriesKind kind_;
    std::vector<scalar> coeffs_;
};

template <class Real = double>
struct SeriesValue {
    std::complex<Real> value;
    int truncation;
    Real tail_bound;
};

/// |z|^T / |[T]_ν!|, the size of the last retained term.
template <class Real = double>
Real gen_exp_tail_bound(const AlgebraParams& p, std::complex<Real> z, int T)
{
    return Real(std::pow(ext_real(std::abs(z)), ext_real(T)) / std::abs(deformed_factorial_ext(p, T)));
}

/// Partial sum Σ_{n≤T} z^n/[n]_ν!; refuses truncations whose tail bound
/// exceeds the parameter tolerance.
template <class Real = double>
SeriesValue<Real> gen_exp_series(const AlgebraParams& p, std::complex<Real> z, int T)
{
    if (T < 1)
        throw ParamError("gen_exp truncation must be >= 1");
    const Real tail = gen_exp_tail_bound<Real>(p, z, T);
    if (!(tail < Real(p.tol())))
        throw ConvergenceError("truncation T=" + std::to_string(T) + " leaves tail bound " + std::to_string(double(tail)) +
                               " above tolerance");
    return {SeriesFunction<Real>::gen_exp(p, T)(z), T, tail};
}

/// Smallest T ≥ min_T whose tail bound is below the parameter tolerance.
template <class Real = double>
int gen_exp_truncation(const AlgebraParams& p, std::complex<Real> z, int min_T = 8, int max_T = 400)
{
    for (int T = min_T; T <= max_T; ++T)
        if (gen_exp_tail_bound<Real>(p, z, T) < Real(p.tol()) &&
            gen_exp_tail_bound<Real>(p, z, T + 1) <= gen_exp_tail_bound<Real>(p, z, T))
            return T;
    throw ConvergenceError("no truncation up to " + std::to_string(max_T) + " meets the tail bound");
}

/*
 * ₀F_q(; b_1..b_q; x) by direct summation. Stops once a term falls below
 * 1e-18 of the partial sum; at most 500 terms.
 */
template <class Real = double>
std::complex<Real> hypergeom_0Fq(const std::vector<ext_complex>& b, std::complex<Real> x)
{
    for (const auto& bi : b)
        if (bi.imag() == 0 && bi.real() <= 0 && std::floor(bi.real()) == bi.real())
            throw ParamError("hypergeometric lower parameter is a nonpositive integer");
    const ext_complex xe(x);
    ext_complex term = 1, sum = 1;
    for (int n = 0; n < 500; ++n) {
        ext_complex denom = ext_real(n + 1);
        for (const auto& bi : b)
            denom *= bi + ext_real(n);
        term *= xe / denom;
        sum += term;
        if (std::abs(term) < 1e-18L * std::abs(sum))
            break;
    }
    return std::complex<Real>(sum);
}

/// E_λ(z) = Σ_s z^s/[s]_ν! · ₀F_{λ-1}(; Δ'(ν,s); (z/λ)^λ), where Δ'(ν,s) is
/// Δ(ν,s) without its leading 1.
template <class Real = double>
std::complex<Real> gen_exp_hypergeom(const AlgebraParams& p, std::complex<Real> z)
{
    const int lambda = p.lambda();
    const auto arg = std::pow(z / Real(lambda), lambda);
    std::complex<Real> total = 0;
    std::complex<Real> zs = 1;
    for (int s = 0; s < lambda; ++s) {
        auto delta = multi_index(p, s);
        delta.erase(delta.begin());
        total += zs / deformed_factorial<Real>(p, s) * hypergeom_0Fq<Real>(delta, arg);
        zs *= z;
    }
    return total;
}

/// ⟨f, g⟩_ν = Σ a_n conj(b_n) [n]_ν!.
template <class Real = double>
std::complex<Real> bergmann_inner(const AlgebraParams& p, const DensePoly<Real>& f, const DensePoly<Real>& g)
{
    if (!p.positive())
        throw ParamError("Bergmann inner product needs positive parameters");
    std::complex<Real> acc = 0;
    const int top = std::min(f.degree(), g.degree());
    for (int n = 0; n <= top; ++n)
        acc += f.coeff(n) * std::conj(g.coeff(n)) * deformed_factorial<Real>(p, n);
    return acc;
}

/// e_n = z^n / sqrt([n]_ν!).
template <class Real = double>
DensePoly<Real> orthonormal_monomial(const AlgebraParams& p, int n)
{
    return DensePoly<Real>::monomial(n, std::complex<Real>(1) / std::sqrt(deformed_factorial<Real>(p, n)));
}

/// K_ν(z, w) = E_λ(z conj(w)).
template <class Real = double>
SeriesValue<Real> kernel_eval(const AlgebraParams& p, std::complex<Real> z, std::complex<Real> w, int T)
{
    return gen_exp_series<Real>(p, z * std::conj(w), T);
}

/// H = z d/dz + 1/2 + (1/2) Σ_j ν_j (ε^j + 1) S^j as a shift-0 operator.
template <class Real = double>
BandOperator<Real> hamiltonian_op(const AlgebraParams& p)
{
    using scalar = std::complex<Real>;
    const int lambda = p.lambda();
    std::vector<scalar> weights(lambda);
    for (int j = 0; j < lambda; ++j)
        weights[j] = scalar(p.nu()[j] * (root_of_unity<ext_real>(lambda, j) + ext_real(1)) / ext_real(2));
    weights[0] += scalar(Real(0.5));
    return multiply_op<Real>() * derivative_op<Real>() + reflection_combination<Real>(lambda, weights, "Hrefl");
}

template <class Real = double>
struct HamiltonianLevel {
    std::complex<Real> formula;       ///< ([n]_ν + [n+1]_ν) / 2
    std::complex<Real> from_operator; ///< coefficient of z^n in H z^n
    Real residual;
};

template <class Real = double>
HamiltonianLevel<Real> hamiltonian_level(const AlgebraParams& p, int n)
{
    if (n < 0)
        throw ParamError("Hamiltonian level needs n >= 0");
    const auto formula = (deformed_number<Real>(p, n) + deformed_number<Real>(p, n + 1)) / Real(2);
    const auto image = hamiltonian_op<Real>(p)(DensePoly<Real>::monomial(n));
    const auto op_value = image.coeff(n);
    // Any leakage into other powers would break the eigen-equation.
    Real leak = 0;
    for (int k = 0; k <= image.degree(); ++k)
        if (k != n)
            leak = std::max(leak, std::abs(image.coeff(k)));
    const Real scale = std::max<Real>(1, std::abs(formula));
    return {formula, op_value, std::max(std::abs(formula - op_value), leak) / scale};
}

/// Eigenvalue ([n]_ν + [n+1]_ν)/2 of H on z^n; throws if the operator form
/// disagrees beyond tolerance.
template <class Real = double>
std::complex<Real> hamiltonian_eigenvalue(const AlgebraParams& p, int n)
{
    const auto level = hamiltonian_level<Real>(p, n);
    if (level.residual > Real(p.tol()))
        throw std::logic_error("Hamiltonian operator form disagrees with ([n]+[n+1])/2 at n=" + std::to_string(n));
    return level.formula;
}

} // namespace cxosc

#endif // CXOSC_ANALYTIC_HPP
