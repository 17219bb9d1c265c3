#include <doctest.h>

#include "cxosc/fock.hpp"
#include "cxosc/sampling.hpp"

#include <random>

using namespace cxosc;
using cd = std::complex<double>;

TEST_CASE("ladder matrices at lambda = 2, nu = (0.5, -0.5)")
{
    const auto fm = fock_matrices(make_params(2, {0.5, -0.5}), 8);
    CHECK(std::abs(fm.raise(1, 0) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(fm.lower(0, 1) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(fm.raise(3, 2) - 2.0) < 1e-15);
    const CMatrix comm = fm.lower * fm.raise - fm.raise * fm.lower;
    CHECK(std::abs(comm(0, 0) - 2.0) < 1e-14);
    CHECK(std::abs(comm(1, 1)) < 1e-14);
    CHECK(std::abs(fm.klein(1, 1) - cd(-1)) < 1e-15);
}

TEST_CASE("defining relations and power commutators on random parameters")
{
    std::mt19937_64 rng(17);
    for (int lambda = 2; lambda <= 5; ++lambda) {
        const auto p = make_params(lambda, random_valid_nu(lambda, rng));
        const auto fm = fock_matrices(p, 32);
        const auto alg = verify_algebra(fm);
        CHECK(alg.pass());
        CHECK(alg.max_residual() < 1e-10);
        for (int n = 1; n <= 6; ++n) {
            const auto r = verify_power_commutators(fm, n);
            CHECK(r.pass());
            CHECK(r.max_residual() < 1e-10);
        }
    }
}

TEST_CASE("Fock matrices are the Bargmann matrix elements")
{
    std::mt19937_64 rng(18);
    for (int lambda = 2; lambda <= 4; ++lambda) {
        const auto p = make_params(lambda, random_valid_nu(lambda, rng));
        const auto fm = fock_matrices(p, 32);
        CHECK((bargmann_matrix(p, 32, true) - fm.lower).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((bargmann_matrix(p, 32, false) - fm.raise).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("projections")
{
    const auto fm = fock_matrices(make_params(3, {0, 0, 0}), 9);
    REQUIRE(fm.projections.size() == 3);
    CMatrix total = CMatrix::Zero(9, 9);
    for (const auto& P : fm.projections)
        total += P;
    CHECK((total - CMatrix::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-14);
    // Π_i picks the states with n ≡ i mod λ.
    CHECK(std::abs(fm.projections[1](4, 4) - 1.0) < 1e-14);
    CHECK(std::abs(fm.projections[1](5, 5)) < 1e-14);
}

TEST_CASE("power commutator weight")
{
    const auto fm = fock_matrices(make_params(2, {0.5, -0.5}), 6);
    // λ=2: n + β_1 (ε^n - 1)/(ε - 1) s, β_1 = 1; n = 1 gives 1 + s.
    const auto w = power_commutator_weight(fm, 1);
    CHECK(std::abs(w(0, 0) - 2.0) < 1e-14);
    CHECK(std::abs(w(1, 1) - 0.0) < 1e-14);
    const auto w2 = power_commutator_weight(fm, 2);
    CHECK(std::abs(w2(3, 3) - 2.0) < 1e-14);
}

TEST_CASE("invalid Fock configurations")
{
    CHECK_THROWS_AS(fock_matrices(make_params(2, {-0.8, 0.8}), 8), ParamError);
    CHECK_THROWS_AS(fock_matrices(make_params(4, {0, 0, 0, 0}), 3), ParamError);
    const auto fm = fock_matrices(make_params(2, {0.5, -0.5}), 8);
    CHECK_THROWS_AS(verify_power_commutators(fm, 5), ParamError);
    CHECK_THROWS_AS(verify_power_commutators(fm, 0), ParamError);
}
