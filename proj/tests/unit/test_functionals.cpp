#include <doctest.h>

#include "cxosc/functionals.hpp"
#include "cxosc/sampling.hpp"

#include <random>

using namespace cxosc;
using cd = std::complex<double>;

TEST_CASE("moments at nu = 0, lambda = 3")
{
    const auto p = make_params(3, {0, 0, 0});
    CHECK(std::abs(moment<double>(p, 0, 0) - cd(1)) < 1e-15);
    CHECK(std::abs(moment<double>(p, 0, 3) - cd(2)) < 1e-15);
    CHECK(std::abs(moment<double>(p, 1, 4) - cd(8)) < 1e-15);
    CHECK(std::abs(moment<double>(p, 1, 3)) == 0);
    CHECK(std::abs(moment<double>(p, 0, 6) - cd(720.0 / 18)) < 1e-12);
    CHECK_THROWS_AS(moment<double>(p, 2, 3), ParamError);
}

TEST_CASE("functionals annihilate Hermite polynomials")
{
    const auto p = make_params(3, {0, 0, 0});
    CHECK(std::abs(pair<double>(p, 0, hermite_explicit<double>(p, 3))) < 1e-14);
    CHECK(std::abs(pair<double>(p, 1, hermite_explicit<double>(p, 4))) < 1e-14);
    CHECK(std::abs(pair<double>(p, 0, hermite_explicit<double>(p, 0)) - cd(1)) < 1e-14);
    CHECK(std::abs(pair<double>(p, 1, hermite_explicit<double>(p, 1)) - cd(1)) < 1e-14);
}

TEST_CASE("d-orthogonality on random parameters")
{
    std::mt19937_64 rng(13);
    for (int lambda = 2; lambda <= 4; ++lambda)
        for (int t = 0; t < 2; ++t) {
            const auto p = make_params(lambda, random_valid_nu(lambda, rng));
            const auto r = verify_d_orthogonality<double>(p, 18);
            CHECK(r.pass());
            CHECK(r.at("zero_window").value < 1e-9);
            CHECK(r.at("zero_window").count > 0);
            CHECK(r.at("nondegeneracy").value > 1e-3);
        }
}

TEST_CASE("vector orthogonality matrices")
{
    std::mt19937_64 rng(14);
    for (int lambda = 2; lambda <= 4; ++lambda) {
        const auto p = make_params(lambda, random_valid_nu(lambda, rng));
        const int d = p.d();
        for (int n = 0; n <= 6; ++n) {
            const auto delta = vector_orthogonality_delta<double>(p, n);
            REQUIRE(delta.rows() == d);
            for (int i = 0; i < d; ++i) {
                CHECK(std::abs(delta(i, i)) > 1e-6);
                for (int j = 0; j < i; ++j)
                    CHECK(std::abs(delta(i, j)) < 1e-9 * std::max(1.0, std::abs(delta(i, i))));
            }
            CHECK(vector_orthogonality_lower_residual<double>(p, n) < 1e-9);
        }
    }
    CHECK_THROWS_AS(vector_orthogonality_delta<double>(make_params(2, {-0.8, 0.8}), 1), ParamError);
}

TEST_CASE("extended precision pairing")
{
    const auto p = make_params(4, {0, 0, 0, 0});
    const auto r = verify_d_orthogonality<long double>(p, 18);
    CHECK(r.at("zero_window").value < 1e-12);
}
