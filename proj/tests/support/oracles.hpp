#ifndef CXOSC_TEST_ORACLES_HPP
#define CXOSC_TEST_ORACLES_HPP

// Reference computations used only by the tests. They deliberately avoid
// the library: plain std::exp phases, direct sums, textbook recurrences.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

/// ν̂_s = Σ_l ν_l e^{2πi sl/λ} with unreduced exponentials.
inline std::vector<cd> nu_hat(const std::vector<cd>& nu)
{
    const int lambda = static_cast<int>(nu.size());
    std::vector<cd> out(lambda);
    for (int s = 0; s < lambda; ++s)
        for (int l = 0; l < lambda; ++l)
            out[s] += nu[l] * std::exp(cd(0, 2 * std::numbers::pi * s * l / lambda));
    return out;
}

/// [n]_ν from an explicit ν̂ table.
inline cd bracket(const std::vector<cd>& hat, int n)
{
    return n == 0 ? cd(0) : cd(n) + hat[n % hat.size()];
}

inline cd bracket_factorial(const std::vector<cd>& hat, int n)
{
    cd acc = 1;
    for (int k = 1; k <= n; ++k)
        acc *= bracket(hat, k);
    return acc;
}

/// Σ_{n<terms} z^n / [n]_ν! summed term by term.
inline cd gen_exp_direct(const std::vector<cd>& hat, cd z, int terms)
{
    cd acc = 0, term = 1;
    for (int n = 0; n < terms; ++n) {
        if (n > 0)
            term *= z / bracket(hat, n);
        acc += term;
    }
    return acc;
}

/// Monic Laguerre l_k^{(a)}(y) = (-1)^k k! L_k^{(a)}(y) through
/// l_{k+1} = (y - (2k+1+a)) l_k - k(k+a) l_{k-1}; coefficients in y.
inline std::vector<double> monic_laguerre(double a, int k)
{
    std::vector<double> prev{1.0};
    if (k == 0)
        return prev;
    std::vector<double> cur{-(1.0 + a), 1.0};
    for (int j = 1; j < k; ++j) {
        std::vector<double> next(cur.size() + 1, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= (2.0 * j + 1.0 + a) * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= j * (j + a) * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Monic Szegő generalized Hermite h_n^{(μ)} in x:
/// h_{2k} = l_k^{(μ-1/2)}(x²), h_{2k+1} = x l_k^{(μ+1/2)}(x²).
inline std::vector<double> szego_monic_hermite(double mu, int n)
{
    const int k = n / 2;
    const bool odd = n % 2 == 1;
    const auto lag = monic_laguerre(odd ? mu + 0.5 : mu - 0.5, k);
    std::vector<double> out(n + 1, 0.0);
    for (int i = 0; i <= k; ++i)
        out[2 * i + (odd ? 1 : 0)] = lag[i];
    return out;
}

} // namespace oracle

#endif // CXOSC_TEST_ORACLES_HPP
