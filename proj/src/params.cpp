#include "cxosc/params.hpp"

#include <algorithm>
#include <string>

namespace cxosc {

namespace {

ext_real scale_of(ext_complex z)
{
    return std::max<ext_real>(1, std::abs(z));
}

// Structural tests (Σν = 0, flags) never go below what decimal input can hit.
constexpr double structural_floor = 1e-12;

bool close(ext_complex a, ext_complex b, double tol)
{
    return std::abs(a - b) <= tol * std::max(scale_of(a), scale_of(b));
}

} // namespace

ext_complex AlgebraParams::alpha(int k) const
{
    if (k < 1 || k > lambda_ - 1)
        throw ParamError("alpha index " + std::to_string(k) + " outside 1.." + std::to_string(lambda_ - 1));
    return alpha_[k - 1];
}

ext_complex AlgebraParams::nu_hat_at(long n) const
{
    long r = n % lambda_;
    if (r < 0)
        r += lambda_;
    return nu_hat_[r];
}

AlgebraParams make_params(int lambda, std::vector<std::complex<double>> nu, double tol)
{
    if (lambda < 2)
        throw ParamError("lambda must be >= 2, got " + std::to_string(lambda));
    if (!(tol > 0))
        throw ParamError("tolerance must be positive");

    const auto n_in = static_cast<int>(nu.size());
    if (n_in == lambda - 1) {
        std::complex<double> sum = 0;
        for (auto v : nu)
            sum += v;
        nu.insert(nu.begin(), -sum);
    } else if (n_in != lambda) {
        throw ParamError("nu must have " + std::to_string(lambda) + " (or " + std::to_string(lambda - 1) +
                         ") entries, got " + std::to_string(n_in));
    }

    AlgebraParams p;
    p.lambda_ = lambda;
    p.tol_ = tol;
    p.nu_.assign(nu.begin(), nu.end());
    const double stol = std::max(tol, structural_floor);

    ext_complex total = 0;
    ext_real magnitude = 0;
    for (auto v : p.nu_) {
        total += v;
        magnitude = std::max(magnitude, std::abs(v));
    }
    if (std::abs(total) > stol * std::max<ext_real>(1, magnitude))
        throw ParamError("sum of nu must vanish, got |sum| = " + std::to_string(double(std::abs(total))));

    p.nu_hat_.assign(lambda, 0);
    for (int s = 1; s < lambda; ++s) {
        ext_complex acc = 0;
        for (int l = 0; l < lambda; ++l)
            acc += p.nu_[l] * root_of_unity<ext_real>(lambda, long(s) * l);
        p.nu_hat_[s] = acc;
    }

    // A real spectrum within tolerance is made exactly real so that
    // deformed factorials carry no imaginary roundoff.
    bool real_hat = true;
    for (int s = 1; s < lambda; ++s)
        real_hat = real_hat && std::abs(p.nu_hat_[s].imag()) <= stol * scale_of(p.nu_hat_[s]);
    if (real_hat)
        for (auto& v : p.nu_hat_)
            v = {v.real(), 0};

    p.positive_ = real_hat;
    for (int s = 1; s < lambda; ++s)
        p.positive_ = p.positive_ && (s + p.nu_hat_[s].real() > 0);

    p.alpha_.resize(lambda - 1);
    for (int k = 1; k < lambda; ++k)
        p.alpha_[k - 1] = (ext_real(k) + p.nu_hat_[k]) / ext_real(lambda);

    p.beta_.assign(lambda, 0);
    for (int i = 1; i < lambda; ++i)
        p.beta_[i] = p.nu_[i] * (root_of_unity<ext_real>(lambda, i) - ext_real(1));

    p.beta_hat_.resize(lambda);
    for (int j = 0; j < lambda; ++j)
        p.beta_hat_[j] = p.nu_hat_[(j + 1) % lambda] - p.nu_hat_[j];

    bool herm = true;
    for (int i = 1; i < lambda; ++i) {
        herm = herm && close(p.nu_[lambda - i], -root_of_unity<ext_real>(lambda, i) * p.nu_[i], stol);
        herm = herm && close(std::conj(p.beta_[i]), p.beta_[lambda - i], stol);
    }
    p.hermitian_ = herm;
    return p;
}

ext_complex deformed_number_ext(const AlgebraParams& p, long n)
{
    if (n < 0)
        throw ParamError("deformed number needs n >= 0");
    if (n == 0)
        return 0;
    return ext_real(n) + p.nu_hat_at(n);
}

ext_complex deformed_factorial_ext(const AlgebraParams& p, long n)
{
    if (n < 0)
        throw ParamError("deformed factorial needs n >= 0");
    ext_complex acc = 1;
    for (long k = 1; k <= n; ++k)
        acc *= deformed_number_ext(p, k);
    return acc;
}

std::vector<ext_complex> multi_index(const AlgebraParams& p, int s)
{
    if (s < 0 || s > p.lambda() - 1)
        throw ParamError("multi-index s must lie in 0.." + std::to_string(p.lambda() - 1));
    std::vector<ext_complex> out(p.lambda());
    out[0] = 1;
    for (int k = 1; k < p.lambda(); ++k)
        out[k] = p.alpha(k) + (k <= s ? ext_real(1) : ext_real(0));
    return out;
}

ext_complex pochhammer(ext_complex a, long n)
{
    ext_complex acc = 1;
    for (long i = 0; i < n; ++i)
        acc *= a + ext_real(i);
    return acc;
}

ext_complex deformed_falling(const AlgebraParams& p, long n, long m)
{
    if (m < 0)
        throw ParamError("falling product needs m >= 0");
    if (n < m)
        return 0;
    ext_complex acc = 1;
    for (long j = 0; j < m; ++j)
        acc *= deformed_number_ext(p, n - j);
    return acc;
}

} // namespace cxosc
