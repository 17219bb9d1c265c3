// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "cxosc/analytic.hpp"
#include "cxosc/blocks.hpp"
#include "cxosc/fock.hpp"
#include "cxosc/functionals.hpp"
#include "cxosc/hermite.hpp"
#include "cxosc/sampling.hpp"

#include "../support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace cxosc;
using cd = std::complex<double>;
using P = DensePoly<double>;

namespace {

struct Outcome {
    bool pass = true;
    double worst = 0; // largest residual seen, or smallest lower-bound margin
    std::string detail;

    void upper(double value, double tol)
    {
        worst = std::max(worst, value);
        if (!(value <= tol))
            pass = false;
    }
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (detail.empty())
                detail = what;
        }
    }
};

std::vector<AlgebraParams> random_grid(const std::vector<int>& lambdas, int per, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<AlgebraParams> out;
    for (int lambda : lambdas)
        for (int t = 0; t < per; ++t) {
            auto p = make_params(lambda, random_valid_nu(lambda, rng));
            if (!p.hermitian() || !p.positive())
                throw std::logic_error("sampler produced an invalid parameter set");
            out.push_back(std::move(p));
        }
    return out;
}

Outcome route_equivalence()
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    for (const auto& p : random_grid({2, 3, 4, 5}, 5, 101)) {
        const HermiteFamily<double> a(p, 24, HermiteRoute::operational);
        const HermiteFamily<double> b(p, 24, HermiteRoute::explicit_sum);
        const HermiteFamily<double> c(p, 24, HermiteRoute::recurrence);
        for (int n = 0; n <= 24; ++n) {
            o.upper(poly_residual(a.monic(n), b.monic(n)), 1e-9);
            o.upper(poly_residual(a.monic(n), c.monic(n)), 1e-9);
            o.upper(poly_residual(b.monic(n), c.monic(n)), 1e-9);
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
    return o;
}

Outcome ladder_equations()
{
    Outcome o;
    for (const auto& p : random_grid({2, 3, 4, 5}, 5, 101)) {
        const HermiteFamily<double> fam(p, 25, HermiteRoute::operational);
        for (int n = 1; n <= 24; ++n) {
            o.upper(lowering_raising_residual(fam, n), 1e-9);
            o.upper(diff_eq_residual(fam, n), 1e-9);
        }
    }
    return o;
}

Outcome generating_function()
{
    Outcome o;
    for (const auto& p : random_grid({2, 3, 4, 5}, 5, 101))
        for (const cd x0 : {cd(1, 0), cd(-2, 1)})
            o.upper(generating_function_residual<double>(p, x0, 20), 1e-8);
    return o;
}

Outcome hypergeometric_form()
{
    Outcome o;
    auto grid = random_grid({2, 3, 4}, 3, 202);
    grid.push_back(make_params(2, {0.5, -0.5}));
    grid.push_back(make_params(3, {0, 0, 0}));
    for (const auto& p : grid)
        for (double r : {0.25, 0.5, 1.0, 1.5, 2.0})
            for (int k = 0; k < 8; ++k) {
                const cd z = std::polar(r, 2 * std::numbers::pi * k / 8 + 0.3);
                const auto s = gen_exp_series<double>(p, z, 80).value;
                const auto h = gen_exp_hypergeom<double>(p, z);
                o.upper(std::abs(s - h) / std::max(1.0, std::abs(h)), 1e-10);
            }
    // λ=2, ν=(0.5,-0.5), z=1 against direct summation through n=25.
    const auto p = make_params(2, {0.5, -0.5});
    const cd ref = oracle::gen_exp_direct(oracle::nu_hat({0.5, -0.5}), 1.0, 26);
    o.upper(std::abs(gen_exp_series<double>(p, cd(1), 40).value - ref), 1e-10);
    o.upper(std::abs(gen_exp_hypergeom<double>(p, cd(1)) - ref), 1e-10);
    o.require(std::abs(ref - 1.831225) < 1e-6, "oracle value");
    return o;
}

Outcome d_orthogonality()
{
    Outcome o;
    auto grid = random_grid({2, 3, 4}, 3, 303);
    grid.push_back(make_params(3, {0, 0, 0}));
    for (const auto& p : grid) {
        const auto r = verify_d_orthogonality<double>(p, 18);
        o.upper(r.at("zero_window").value, 1e-9);
        o.require(r.at("nondegeneracy").pass(), "nondegeneracy");
        const int d = p.d();
        for (int n = 0; n <= 6; ++n) {
            const auto delta = vector_orthogonality_delta<double>(p, n);
            for (int i = 0; i < d; ++i) {
                const double diag = std::abs(delta(i, i));
                o.require(diag > 1e-6, "singular diagonal in the block pairing");
                for (int j = 0; j < i; ++j)
                    o.upper(std::abs(delta(i, j)) / std::max(1.0, diag), 1e-9);
            }
            o.upper(vector_orthogonality_lower_residual<double>(p, n), 1e-9);
        }
    }
    return o;
}

Outcome fock_bargmann()
{
    Outcome o;
    for (const auto& p : random_grid({2, 3, 4, 5}, 2, 404)) {
        const auto fm = fock_matrices(p, 32);
        o.upper((bargmann_matrix(p, 32, true) - fm.lower).cwiseAbs().maxCoeff(), 1e-12);
        o.upper((bargmann_matrix(p, 32, false) - fm.raise).cwiseAbs().maxCoeff(), 1e-12);
        const auto alg = verify_algebra(fm);
        o.upper(alg.max_residual(), 1e-10);
        o.require(alg.pass(), "algebra relations");
        for (int n = 1; n <= 6; ++n) {
            const auto r = verify_power_commutators(fm, n);
            o.upper(r.max_residual(), 1e-10);
            o.require(r.pass(), "power commutators");
        }
    }
    return o;
}

Outcome hamiltonian()
{
    Outcome o;
    auto grid = random_grid({2, 3, 4, 5}, 2, 505);
    grid.push_back(make_params(3, {0.3, 0.1, -0.4}));
    for (const auto& p : grid)
        for (int n = 0; n <= 24; ++n)
            o.upper(hamiltonian_level<double>(p, n).residual, 1e-12);
    for (double mu : {0.25, 0.5, 1.3}) {
        const auto p = make_params(2, {mu, -mu});
        for (int n = 0; n <= 24; ++n) {
            const auto level = hamiltonian_level<double>(p, n);
            o.upper(level.residual, 1e-12);
            o.upper(std::abs(level.formula - cd(n + mu + 0.5)), 1e-12);
        }
    }
    return o;
}

Outcome szego_reduction()
{
    Outcome o;
    for (double mu : {0.25, 0.5, 1.3, 3.0}) {
        const auto p = make_params(2, {mu, -mu});
        const HermiteFamily<double> fam(p, 12, HermiteRoute::operational);
        for (int n = 0; n <= 12; ++n) {
            const auto h = oracle::szego_monic_hermite(mu, n);
            std::vector<cd> c(n + 1);
            for (int k = 0; k <= n; ++k)
                c[k] = h[k] * std::pow(2.0, (n - k) / 2.0);
            o.upper(poly_residual(fam.monic(n), P(c)), 1e-9);
        }
    }
    return o;
}

Outcome block_realization()
{
    Outcome o;
    const std::vector<cd> samples{cd(0.3), cd(-1.1), cd(2.7, 0.5)};
    auto grid = random_grid({2, 3, 4}, 2, 606);
    grid.push_back(make_params(2, {0.5, -0.5}));
    for (const auto& p : grid) {
        const auto bs = assemble(p, 6);
        const auto rec = verify_vector_recurrences(bs, samples);
        o.upper(rec.max_residual(), 1e-9);
        o.require(rec.pass(), "vector recurrences");
        const auto com = commutator_spectrum(bs);
        o.upper(com.max_residual(), 1e-9);
        o.require(com.pass(), "commutator diagonal");
    }
    return o;
}

Outcome bergmann_structure()
{
    Outcome o;
    std::mt19937_64 rng(707);
    for (const auto& p : random_grid({2, 3, 4}, 1, 708)) {
        for (int n = 0; n <= 25; ++n) {
            const auto en = orthonormal_monomial<double>(p, n);
            for (int m = 0; m <= 25; ++m)
                o.upper(std::abs(bergmann_inner<double>(p, en, orthonormal_monomial<double>(p, m)) -
                                 cd(n == m ? 1 : 0)),
                        1e-10);
        }
        const auto Y = dunkl_op<double>(p);
        const auto Z = multiply_op<double>();
        for (int t = 0; t < 100; ++t) {
            const auto f = random_poly(10, rng);
            const auto g = random_poly(10, rng);
            const auto a = bergmann_inner<double>(p, Y(f), g);
            const auto b = bergmann_inner<double>(p, f, Z(g));
            o.upper(std::abs(a - b) / std::max(1.0, std::abs(a)), 1e-10);
        }
        for (const cd w : {cd(0.7, 0), cd(-0.3, 0.4)}) {
            const auto K = SeriesFunction<double>::kernel_section(p, w, 40).as_poly();
            for (int t = 0; t < 10; ++t) {
                const auto f = random_poly(12, rng);
                o.upper(std::abs(bergmann_inner<double>(p, f, K) - f(w)), 1e-10);
            }
        }
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"route equivalence", route_equivalence},
        {"lowering, raising and eigen-equations", ladder_equations},
        {"generating function", generating_function},
        {"hypergeometric form", hypergeometric_form},
        {"d-orthogonality", d_orthogonality},
        {"Fock/Bargmann consistency", fock_bargmann},
        {"Hamiltonian spectrum", hamiltonian},
        {"lambda=2 Szego reduction", szego_reduction},
        {"block realization", block_realization},
        {"Bergmann structure", bergmann_structure},
    };
    const auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("criterion %2zu %s  %-40s max residual %.3e%s%s\n", i + 1, o.pass ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), o.worst, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("total %.2f s, %d failed\n", secs, failures);
    if (secs >= 30.0) {
        std::printf("runtime above 30 s\n");
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
