#include <doctest.h>

#include "cxosc/poly.hpp"
#include "cxosc/sampling.hpp"

#include <random>

using namespace cxosc;
using cd = std::complex<double>;
using P = DensePoly<double>;

TEST_CASE("dense polynomial basics")
{
    const P f{1, 2, 0};
    CHECK(f.degree() == 1);
    CHECK(P().degree() == -1);
    CHECK(P().is_zero());
    CHECK((f - f).is_zero());
    CHECK(P::monomial(3).coeff(3) == cd(1));
    CHECK(P::monomial(3).coeff(7) == cd(0));
    CHECK(f(cd(2)) == cd(5));

    const P g{cd(0, 1), 1};
    const auto fg = f * g;
    CHECK(fg.degree() == 2);
    CHECK(fg.coeff(0) == cd(0, 1));
    CHECK(fg.coeff(1) == cd(1, 2));
    CHECK(fg.coeff(2) == cd(2));
    CHECK(f.shifted(2).coeff(3) == cd(2));
    CHECK_THROWS_AS(f.shifted(-1), ParamError);
}

TEST_CASE("Dunkl operator on monomials")
{
    const auto p = make_params(2, {0.5, -0.5});
    const auto Y = dunkl_op<double>(p);
    const auto img = Y(P::monomial(3));
    CHECK(img.degree() == 2);
    CHECK(std::abs(img.coeff(2) - cd(4)) < 1e-14);
    CHECK(Y(P::monomial(0)).is_zero());

    const auto q = make_params(3, {0, 0, 0});
    const auto Y2 = dunkl_power<double>(q, 2);
    const auto img2 = Y2(P::monomial(3));
    CHECK(img2.degree() == 1);
    CHECK(std::abs(img2.coeff(1) - cd(6)) < 1e-14);

    const auto Y2h = dunkl_power<double>(p, 2)(P::monomial(3));
    CHECK(std::abs(Y2h.coeff(1) - cd(8)) < 1e-14);
}

TEST_CASE("exponential of the Dunkl power")
{
    const auto q = make_params(3, {0, 0, 0});
    const auto h = exp_neg_dunkl_power<double>(q, P::monomial(4));
    CHECK(h.degree() == 4);
    CHECK(std::abs(h.coeff(4) - cd(1)) < 1e-14);
    CHECK(std::abs(h.coeff(1) - cd(-8)) < 1e-14);
    CHECK(std::abs(h.coeff(0)) < 1e-14);
}

TEST_CASE("reflection operator")
{
    for (int lambda = 2; lambda <= 6; ++lambda) {
        auto S = reflection_op<double>(lambda);
        auto power = identity_op<double>();
        for (int k = 0; k < lambda; ++k)
            power = S * power;
        CHECK(operator_residual(power, identity_op<double>(), 30) < 1e-13);
    }
    const auto S4 = reflection_op<double>(4);
    CHECK(S4(P::monomial(1)).coeff(1) == cd(0, 1));
}

TEST_CASE("operator composition is associative and distributes")
{
    std::mt19937_64 rng(3);
    const auto p = make_params(3, random_valid_nu(3, rng));
    const auto Y = dunkl_op<double>(p);
    const auto Z = multiply_op<double>();
    const auto S = reflection_op<double>(3);
    CHECK(operator_residual((Y * Z) * S, Y * (Z * S), 25) < 1e-13);

    const auto f = random_poly(12, rng);
    const auto g = random_poly(9, rng);
    CHECK(poly_residual(Y(f + g), Y(f) + Y(g)) < 1e-13);
    CHECK(poly_residual((Y * Z)(f), Y(Z(f))) < 1e-13);
    CHECK_THROWS_AS(Y + Z, ParamError);
}

TEST_CASE("commutator identities hold on random parameters")
{
    std::mt19937_64 rng(5);
    for (int lambda = 2; lambda <= 5; ++lambda) {
        const auto p = make_params(lambda, random_valid_nu(lambda, rng));
        for (int n = 1; n <= lambda + 1; ++n) {
            CHECK(commutator_residual<double>(p, n, 24) < 1e-10);
            CHECK(commutator_residual<long double>(p, n, 24) < 1e-12);
        }
    }
}

TEST_CASE("Y_nu reduces to the derivative at nu = 0")
{
    const auto p = make_params(4, {0, 0, 0, 0});
    CHECK(operator_residual(dunkl_op<double>(p), derivative_op<double>(), 30) < 1e-15);
}

TEST_CASE("poly residual is relative")
{
    const P a{1e6, 1};
    const P b{1e6 + 1, 1};
    CHECK(poly_residual(a, b) == doctest::Approx(1e-6).epsilon(1e-3));
    CHECK(poly_residual(P{1}, P{1, 1e-3}) == doctest::Approx(1e-3));
}

TEST_CASE("precision cast keeps coefficients")
{
    const P a{cd(0.25, -1), 3};
    const auto b = a.cast<long double>();
    CHECK(b.degree() == 1);
    CHECK(double(b.coeff(0).imag()) == -1);
}
