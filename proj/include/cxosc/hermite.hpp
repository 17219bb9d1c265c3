#ifndef CXOSC_HERMITE_HPP
#define CXOSC_HERMITE_HPP

#include "cxosc/params.hpp"
#include "cxosc/poly.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cxosc {

enum class HermiteRoute { operational, explicit_sum, recurrence };

inline std::string to_string(HermiteRoute r)
{
    switch (r) {
    case HermiteRoute::operational:
        return "operational";
    case HermiteRoute::explicit_sum:
        return "explicit";
    case HermiteRoute::recurrence:
        return "recurrence";
    }
    return "unknown";
}

/// H_n = e^{-Y_ν^λ/λ} z^n.
template <class Real = double>
DensePoly<Real> hermite_operational(const AlgebraParams& p, int n)
{
    if (n < 0)
        throw ParamError("hermite degree must be >= 0");
    return exp_neg_dunkl_power<Real>(p, DensePoly<Real>::monomial(n));
}

/// H_n = Σ_k (-1)^k [n]_ν! / (λ^k k! [n-kλ]_ν!) z^{n-kλ}.
template <class Real = double>
DensePoly<Real> hermite_explicit(const AlgebraParams& p, int n)
{
    if (n < 0)
        throw ParamError("hermite degree must be >= 0");
    const int lambda = p.lambda();
    const ext_complex top = deformed_factorial_ext(p, n);
    std::vector<std::complex<Real>> c(n + 1, std::complex<Real>(0));
    ext_real denom = 1; // λ^k k!
    for (int k = 0; k * lambda <= n; ++k) {
        if (k > 0)
            denom *= ext_real(lambda) * ext_real(k);
        const ext_real sign = (k % 2 == 0) ? 1 : -1;
        c[n - k * lambda] = std::complex<Real>(sign * top / (denom * deformed_factorial_ext(p, n - k * lambda)));
    }
    return DensePoly<Real>(std::move(c));
}

/// γ_n = [n]_ν [n-1]_ν ... [n-λ+2]_ν, the coefficient in
/// x H_n = H_{n+1} + γ_n H_{n-λ+1}.
template <class Real = double>
std::complex<Real> recurrence_gamma(const AlgebraParams& p, int n)
{
    return std::complex<Real>(deformed_falling(p, n, p.lambda() - 1));
}

/*
 * Cached H_0..H_N built by one of the three routes. Normalized members
 * H̃_n = H_n / sqrt([n]_ν!) exist only for positive parameter sets.
 */
template <class Real = double>
class HermiteFamily {
public:
    using poly = DensePoly<Real>;

    HermiteFamily(const AlgebraParams& p, int max_degree, HermiteRoute route) : params_(p), route_(route)
    {
        if (max_degree < 0)
            throw ParamError("family size must be >= 0");
        monic_.reserve(max_degree + 1);
        switch (route) {
        case HermiteRoute::operational:
            for (int n = 0; n <= max_degree; ++n)
                monic_.push_back(hermite_operational<Real>(p, n));
            break;
        case HermiteRoute::explicit_sum:
            for (int n = 0; n <= max_degree; ++n)
                monic_.push_back(hermite_explicit<Real>(p, n));
            break;
        case HermiteRoute::recurrence:
            build_by_recurrence(max_degree);
            break;
        }
        if (p.positive()) {
            normalized_.reserve(monic_.size());
            for (int n = 0; n <= max_degree; ++n) {
                const auto norm = std::sqrt(deformed_factorial<Real>(p, n));
                normalized_.push_back(monic_[n] * (std::complex<Real>(1) / norm));
            }
        }
    }

    const AlgebraParams& params() const { return params_; }
    HermiteRoute route() const { return route_; }
    int max_degree() const { return static_cast<int>(monic_.size()) - 1; }

    const poly& monic(int n) const
    {
        check(n);
        return monic_[n];
    }

    bool has_normalized() const { return !normalized_.empty(); }

    const poly& normalized(int n) const
    {
        if (!has_normalized())
            throw ParamError("normalized Hermite polynomials need positive parameters");
        check(n);
        return normalized_[n];
    }

private:
    void check(int n) const
    {
        if (n < 0 || n > max_degree())
            throw ParamError("Hermite index " + std::to_string(n) + " outside cached range 0.." +
                             std::to_string(max_degree()));
    }

    void build_by_recurrence(int max_degree)
    {
        const int d = params_.d();
        for (int n = 0; n <= std::min(d, max_degree); ++n)
            monic_.push_back(poly::monomial(n));
        for (int n = d; n < max_degree; ++n) {
            poly next = monic_[n].shifted(1);
            if (n - d >= 0)
                next -= monic_[n - d] * recurrence_gamma<Real>(params_, n);
            monic_.push_back(std::move(next));
        }
    }

    AlgebraParams params_;
    HermiteRoute route_;
    std::vector<poly> monic_;
    std::vector<poly> normalized_;
};

template <class Real = double>
HermiteFamily<Real> hermite_by_recurrence(const AlgebraParams& p, int max_degree)
{
    return HermiteFamily<Real>(p, max_degree, HermiteRoute::recurrence);
}

/// Y H_n = [n] H_{n-1} and (x - Y^{λ-1}) H_n = H_{n+1}.
template <class Real>
Real lowering_raising_residual(const HermiteFamily<Real>& fam, int n)
{
    if (n < 1 || n >= fam.max_degree())
        throw ParamError("lowering/raising check needs 1 <= n < N");
    const auto& p = fam.params();
    const auto Y = dunkl_op<Real>(p);
    const auto Yd = dunkl_power<Real>(p, p.lambda() - 1);
    const auto& h = fam.monic(n);
    const Real low = poly_residual(Y(h), fam.monic(n - 1) * deformed_number<Real>(p, n));
    const Real raise = poly_residual(h.shifted(1) - Yd(h), fam.monic(n + 1));
    return std::max(low, raise);
}

/// Y (x - Y^{λ-1}) H_n = [n+1] H_n and (x - Y^{λ-1}) Y H_n = [n] H_n.
template <class Real>
Real diff_eq_residual(const HermiteFamily<Real>& fam, int n)
{
    if (n < 0 || n > fam.max_degree() - 1)
        throw ParamError("differential-difference check needs 0 <= n <= N-1");
    const auto& p = fam.params();
    const auto Y = dunkl_op<Real>(p);
    const auto Yd = dunkl_power<Real>(p, p.lambda() - 1);
    const auto raise = [&](const DensePoly<Real>& f) { return f.shifted(1) - Yd(f); };
    const auto& h = fam.monic(n);
    const Real first = poly_residual(Y(raise(h)), h * deformed_number<Real>(p, n + 1));
    const Real second = poly_residual(raise(Y(h)), h * deformed_number<Real>(p, n));
    return std::max(first, second);
}

/*
 * Compares the Taylor coefficients in t of e^{-t^λ/λ} E_λ(x0 t, ν), formed
 * as a truncated Cauchy product at fixed x0, with H_n(x0)/[n]_ν! for
 * n = 0..T. Returns the largest absolute deviation.
 */
template <class Real = double>
Real generating_function_residual(const AlgebraParams& p, std::complex<Real> x0, int T)
{
    using scalar = std::complex<Real>;
    if (T < 1)
        throw ParamError("generating function check needs T >= 1");
    const int lambda = p.lambda();

    std::vector<scalar> damping(T + 1, scalar(0));
    Real term = 1;
    for (int k = 0; k * lambda <= T; ++k) {
        if (k > 0)
            term *= Real(-1) / (Real(lambda) * Real(k));
        damping[k * lambda] = term;
    }
    std::vector<scalar> expo(T + 1);
    scalar power = 1;
    for (int m = 0; m <= T; ++m) {
        expo[m] = power / deformed_factorial<Real>(p, m);
        power *= x0;
    }

    Real worst = 0;
    for (int n = 0; n <= T; ++n) {
        scalar lhs = 0;
        for (int m = 0; m <= n; ++m)
            lhs += damping[n - m] * expo[m];
        const scalar rhs = hermite_operational<Real>(p, n)(x0) / deformed_factorial<Real>(p, n);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

/// Coefficients c_n of z^m = Σ_n c_n H_{m-nλ}, n = 0..⌊m/λ⌋.
template <class Real = double>
std::vector<std::complex<Real>> inversion_expand(const AlgebraParams& p, int m)
{
    if (m < 0)
        throw ParamError("inversion needs m >= 0");
    const int lambda = p.lambda();
    const ext_complex top = deformed_factorial_ext(p, m);
    std::vector<std::complex<Real>> out;
    ext_real denom = 1;
    for (int n = 0; n * lambda <= m; ++n) {
        if (n > 0)
            denom *= ext_real(lambda) * ext_real(n);
        out.emplace_back(top / (denom * deformed_factorial_ext(p, m - n * lambda)));
    }
    return out;
}

/// True when H_n only carries exponents ≡ n (mod λ), with exact zeros elsewhere.
template <class Real>
bool is_d_symmetric(const DensePoly<Real>& h, int n, int lambda)
{
    for (int k = 0; k <= h.degree(); ++k)
        if ((n - k) % lambda != 0 && h.coeff(k) != std::complex<Real>(0))
            return false;
    return true;
}

} // namespace cxosc

#endif // CXOSC_HERMITE_HPP
