#ifndef CXOSC_POLY_HPP
#define CXOSC_POLY_HPP

#include "cxosc/params.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cxosc {

/*
 * Dense univariate polynomial with complex coefficients; coeff(n) is the
 * coefficient of z^n. Trailing exact zeros are trimmed, so the stored
 * length is degree()+1. The zero polynomial stores nothing and reports
 * degree() == zero_degree.
 */
template <class Real = double>
class DensePoly {
public:
    using scalar = std::complex<Real>;
    static constexpr int zero_degree = -1;

    DensePoly() = default;
    explicit DensePoly(std::vector<scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<scalar> coeffs) : c_(coeffs) { trim(); }

    static DensePoly monomial(int n, scalar value = scalar(1))
    {
        std::vector<scalar> c(n + 1, scalar(0));
        c[n] = value;
        return DensePoly(std::move(c));
    }

    static DensePoly constant(scalar value) { return DensePoly(std::vector<scalar>{value}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of z^n; zero outside the stored range.
    scalar coeff(int n) const
    {
        return (n >= 0 && n < static_cast<int>(c_.size())) ? c_[n] : scalar(0);
    }
    const std::vector<scalar>& coeffs() const { return c_; }

    scalar operator()(scalar z) const
    {
        scalar acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    DensePoly& operator+=(const DensePoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    DensePoly& operator*=(scalar s)
    {
        for (auto& v : c_)
            v *= s;
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, scalar s) { return a *= s; }
    friend DensePoly operator*(scalar s, DensePoly a) { return a *= s; }
    friend DensePoly operator-(DensePoly a) { return a *= scalar(-1); }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<scalar> out(a.c_.size() + b.c_.size() - 1, scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return DensePoly(std::move(out));
    }

    /// Multiplication by z^k.
    DensePoly shifted(int k) const
    {
        if (k < 0)
            throw ParamError("shift must be >= 0");
        if (is_zero())
            return {};
        std::vector<scalar> out(c_.size() + k, scalar(0));
        std::copy(c_.begin(), c_.end(), out.begin() + k);
        return DensePoly(std::move(out));
    }

    template <class Other>
    DensePoly<Other> cast() const
    {
        std::vector<std::complex<Other>> out;
        out.reserve(c_.size());
        for (auto v : c_)
            out.emplace_back(Other(v.real()), Other(v.imag()));
        return DensePoly<Other>(std::move(out));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == scalar(0))
            c_.pop_back();
    }

    std::vector<scalar> c_;
};

/// Largest coefficient-wise deviation, each relative to max(1, |a_n|, |b_n|).
template <class Real>
Real poly_residual(const DensePoly<Real>& a, const DensePoly<Real>& b)
{
    Real worst = 0;
    const int top = std::max(a.degree(), b.degree());
    for (int n = 0; n <= top; ++n) {
        const auto x = a.coeff(n), y = b.coeff(n);
        const Real scale = std::max({Real(1), std::abs(x), std::abs(y)});
        worst = std::max(worst, std::abs(x - y) / scale);
    }
    return worst;
}

/*
 * Graded operator z^n ↦ c(n) z^{n+k}. The coefficient map is only consulted
 * for n ≥ max(0, -k); monomials below that are annihilated.
 */
template <class Real = double>
class BandOperator {
public:
    using scalar = std::complex<Real>;
    using coeff_map = std::function<scalar(int)>;

    BandOperator(int shift, coeff_map coeff, std::string descriptor)
        : shift_(shift), coeff_(std::move(coeff)), descriptor_(std::move(descriptor))
    {
    }

    int shift() const { return shift_; }
    const std::string& descriptor() const { return descriptor_; }

    scalar coeff(int n) const
    {
        if (n < 0 || n + shift_ < 0)
            return scalar(0);
        return coeff_(n);
    }

    DensePoly<Real> operator()(const DensePoly<Real>& f) const
    {
        if (f.is_zero())
            return {};
        const int top = f.degree() + shift_;
        if (top < 0)
            return {};
        std::vector<scalar> out(top + 1, scalar(0));
        for (int n = std::max(0, -shift_); n <= f.degree(); ++n) {
            const auto a = f.coeff(n);
            if (a != scalar(0))
                out[n + shift_] += coeff(n) * a;
        }
        return DensePoly<Real>(std::move(out));
    }

    /// Operator product (*this) ∘ rhs: rhs acts first.
    friend BandOperator operator*(const BandOperator& lhs, const BandOperator& rhs)
    {
        const int k1 = rhs.shift_;
        return BandOperator(
            lhs.shift_ + k1,
            [lhs, rhs, k1](int n) { return lhs.coeff(n + k1) * rhs.coeff(n); },
            lhs.descriptor_ + "*" + rhs.descriptor_);
    }

    /// Sum of two operators with the same shift.
    friend BandOperator operator+(const BandOperator& a, const BandOperator& b)
    {
        if (a.shift_ != b.shift_)
            throw ParamError("band operators with shifts " + std::to_string(a.shift_) + " and " +
                             std::to_string(b.shift_) + " cannot be added");
        return BandOperator(
            a.shift_, [a, b](int n) { return a.coeff(n) + b.coeff(n); },
            "(" + a.descriptor_ + "+" + b.descriptor_ + ")");
    }

    friend BandOperator operator-(const BandOperator& a, const BandOperator& b)
    {
        return a + b.scaled(scalar(-1));
    }

    BandOperator scaled(scalar s) const
    {
        auto self = *this;
        return BandOperator(
            shift_, [self, s](int n) { return s * self.coeff(n); }, "(" + std::to_string(double(std::real(s))) +
                                                                       (std::imag(s) != Real(0) ? "+i" : "") + ")" +
                                                                       descriptor_);
    }

private:
    int shift_;
    coeff_map coeff_;
    std::string descriptor_;
};

template <class Real = double>
BandOperator<Real> identity_op()
{
    return BandOperator<Real>(0, [](int) { return std::complex<Real>(1); }, "I");
}

/// d/dz.
template <class Real = double>
BandOperator<Real> derivative_op()
{
    return BandOperator<Real>(-1, [](int n) { return std::complex<Real>(Real(n)); }, "D");
}

/// Multiplication by z.
template <class Real = double>
BandOperator<Real> multiply_op()
{
    return BandOperator<Real>(1, [](int) { return std::complex<Real>(1); }, "Z");
}

/// (S^j f)(z) = f(ε^j z).
template <class Real = double>
BandOperator<Real> reflection_op(int lambda, int j = 1)
{
    return BandOperator<Real>(
        0, [lambda, j](int n) { return root_of_unity<Real>(lambda, long(j) * n); },
        j == 1 ? "S" : "S^" + std::to_string(j));
}

/// Y_ν: z^n ↦ [n]_ν z^{n-1}.
template <class Real = double>
BandOperator<Real> dunkl_op(const AlgebraParams& p)
{
    auto params = p;
    return BandOperator<Real>(-1, [params](int n) { return deformed_number<Real>(params, n); }, "Y");
}

/// Y_ν^m in closed form: shift -m, c(n) = [n]_ν [n-1]_ν ... [n-m+1]_ν.
template <class Real = double>
BandOperator<Real> dunkl_power(const AlgebraParams& p, int m)
{
    if (m < 0)
        throw ParamError("dunkl_power needs m >= 0");
    if (m == 0)
        return identity_op<Real>();
    auto params = p;
    return BandOperator<Real>(
        -m, [params, m](int n) { return std::complex<Real>(deformed_falling(params, n, m)); },
        "Y^" + std::to_string(m));
}

/// Σ_j coeff_j S^j as a shift-0 operator.
template <class Real = double>
BandOperator<Real> reflection_combination(int lambda, std::vector<std::complex<Real>> coeffs, std::string name)
{
    return BandOperator<Real>(
        0,
        [lambda, coeffs](int n) {
            std::complex<Real> acc = 0;
            for (int j = 0; j < static_cast<int>(coeffs.size()); ++j)
                acc += coeffs[j] * root_of_unity<Real>(lambda, long(j) * n);
            return acc;
        },
        std::move(name));
}

/// e^{-Y_ν^λ/λ} f. The series stops after ⌊deg f / λ⌋ terms because Y_ν
/// lowers degree.
template <class Real = double>
DensePoly<Real> exp_neg_dunkl_power(const AlgebraParams& p, const DensePoly<Real>& f)
{
    using scalar = std::complex<Real>;
    if (f.is_zero())
        return {};
    const int lambda = p.lambda();
    const auto y_lambda = dunkl_power<Real>(p, lambda);
    DensePoly<Real> term = f;
    DensePoly<Real> sum = f;
    for (int k = 1; k <= f.degree() / lambda; ++k) {
        term = y_lambda(term);
        term *= scalar(Real(-1) / (Real(lambda) * Real(k)));
        sum += term;
    }
    return sum;
}

/// Max coefficient-wise residual of `lhs - rhs` applied to z^0..z^deg.
template <class Real>
Real operator_residual(const BandOperator<Real>& lhs, const BandOperator<Real>& rhs, int deg)
{
    Real worst = 0;
    for (int m = 0; m <= deg; ++m) {
        const auto z = DensePoly<Real>::monomial(m);
        worst = std::max(worst, poly_residual(lhs(z), rhs(z)));
    }
    return worst;
}

/*
 * Residual of the three commutation identities of the Dunkl calculus:
 *   Y S - ε S Y = 0,
 *   [Y^n, z] = (n + Σ_i ν_i (ε^{in} - 1) S^i) Y^{n-1},
 *   [Y, z^n] = z^{n-1} (n + Σ_i ν_i (ε^{in} - 1) S^i),
 * each tested on monomials of degree ≤ deg.
 */
template <class Real = double>
Real commutator_residual(const AlgebraParams& p, int n, int deg)
{
    using scalar = std::complex<Real>;
    if (n < 1 || deg < n)
        throw ParamError("commutator_residual needs 1 <= n <= deg");
    const int lambda = p.lambda();
    const auto Y = dunkl_op<Real>(p);
    const auto S = reflection_op<Real>(lambda);
    const auto Z = multiply_op<Real>();
    const auto eps = root_of_unity<Real>(lambda, 1);

    Real worst = operator_residual(Y * S, (S * Y).scaled(eps), deg);

    std::vector<scalar> bracket(lambda);
    bracket[0] = scalar(Real(n));
    for (int i = 1; i < lambda; ++i)
        bracket[i] = scalar(p.nu()[i] * (root_of_unity<ext_real>(lambda, long(i) * n) - ext_real(1)));
    const auto weight = reflection_combination<Real>(lambda, bracket, "W_n");

    const auto Yn = dunkl_power<Real>(p, n);
    const auto Yn1 = dunkl_power<Real>(p, n - 1);
    worst = std::max(worst, operator_residual(Yn * Z - Z * Yn, weight * Yn1, deg));

    BandOperator<Real> Zn = identity_op<Real>();
    for (int i = 0; i < n; ++i)
        Zn = Z * Zn;
    BandOperator<Real> Zn1 = identity_op<Real>();
    for (int i = 0; i < n - 1; ++i)
        Zn1 = Z * Zn1;
    worst = std::max(worst, operator_residual(Y * Zn - Zn * Y, Zn1 * weight, deg));
    return worst;
}

} // namespace cxosc

#endif // CXOSC_POLY_HPP
