#include "cxosc/sampling.hpp"

#include <numbers>

namespace cxosc {

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    const double unit = double(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

std::vector<std::complex<double>> random_valid_nu(int lambda, std::mt19937_64& rng, double radius, double margin)
{
    if (lambda < 2)
        throw ParamError("lambda must be >= 2");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> r(lambda, 0.0);
        for (int i = 1; 2 * i <= lambda; ++i) {
            r[i] = uniform(rng, -radius, radius);
            r[lambda - i] = r[i];
        }
        std::vector<std::complex<double>> nu(lambda);
        std::complex<double> sum = 0;
        for (int i = 1; i < lambda; ++i) {
            const double phase = -std::numbers::pi * (0.5 + double(i) / lambda);
            nu[i] = std::polar(r[i], phase);
            sum += nu[i];
        }
        nu[0] = -sum;
        const auto p = make_params(lambda, nu);
        bool ok = p.hermitian() && p.positive();
        for (int s = 1; ok && s < lambda; ++s)
            ok = double(s + p.nu_hat()[s].real()) > margin;
        if (ok)
            return nu;
    }
    throw ParamError("could not draw a valid nu vector");
}

DensePoly<double> random_poly(int degree, std::mt19937_64& rng)
{
    std::vector<std::complex<double>> c(degree + 1);
    for (auto& v : c)
        v = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    if (c.back() == std::complex<double>(0))
        c.back() = 1;
    return DensePoly<double>(std::move(c));
}

} // namespace cxosc
