#include <doctest.h>

#include "cxosc/io.hpp"
#include "cxosc/report.hpp"
#include "cxosc/sampling.hpp"

#include <random>

using namespace cxosc;
using cd = std::complex<double>;

TEST_CASE("complex literal parsing")
{
    CHECK(parse_complex("1.5") == cd(1.5, 0));
    CHECK(parse_complex("-2i") == cd(0, -2));
    CHECK(parse_complex("i") == cd(0, 1));
    CHECK(parse_complex("-i") == cd(0, -1));
    CHECK(parse_complex("0.3+0.4i") == cd(0.3, 0.4));
    CHECK(parse_complex("0.3-0.4i") == cd(0.3, -0.4));
    CHECK(parse_complex("1e-3-2.5e2i") == cd(1e-3, -250));
    CHECK(parse_complex("-1e+2") == cd(-100, 0));
    CHECK_THROWS(parse_complex(""));
    CHECK_THROWS(parse_complex("abc"));
    CHECK(parse_complex("1+2j") == cd(1, 2));
    CHECK_THROWS(parse_complex("1+2k"));

    const auto list = parse_complex_list("0.5,-0.5, i");
    REQUIRE(list.size() == 3);
    CHECK(list[2] == cd(0, 1));
}

TEST_CASE("format_complex round-trips")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const cd z(uniform(rng, -10, 10), uniform(rng, -10, 10));
        CHECK(parse_complex(format_complex(z)) == z);
    }
    CHECK(format_complex(cd(0.5, 0)) == "0.5");
    CHECK(format_complex(cd(0, -1)) == "0-1i");
    CHECK(parse_complex(format_complex(cd(1e-20, -3e15))) == cd(1e-20, -3e15));
}

TEST_CASE("polynomial json round trip")
{
    std::mt19937_64 rng(2);
    const auto f = random_poly(7, rng);
    const auto j = nlohmann::json::parse(poly_to_json(f).dump());
    CHECK(poly_residual(poly_from_json(j), f) == 0);
}

TEST_CASE("matrix csv layout")
{
    CMatrix m(2, 2);
    m << cd(1, 0), cd(0, 2), cd(-1, 0), cd(0.5, -0.5);
    const auto csv = matrix_to_csv(m);
    CHECK(csv.rfind("block,0:0,1:0\n", 0) == 0);
    CHECK(csv.find("\"0,2\"") != std::string::npos);
    CHECK(csv.find("\"0.5,-0.5\"") != std::string::npos);
    const auto j = matrix_to_json(m);
    CHECK(j.dump().find("0.5") != std::string::npos);
}

TEST_CASE("report checks")
{
    Check c{"x", 0, 1e-9};
    CHECK(c.pass());
    c.absorb(1e-12);
    c.absorb(3e-10);
    CHECK(c.value == 3e-10);
    CHECK(c.count == 2);
    CHECK(c.pass());
    c.absorb(std::nan(""));
    CHECK_FALSE(c.pass());

    Check low{"y", 0.5, 1e-3, Check::Bound::lower, 1};
    CHECK(low.pass());

    Report r("s");
    Check good{"g", 1e-12, 1e-9};
    good.count = 1;
    r.add(good);
    CHECK(r.pass());
    Report outer("top");
    outer.merge(r);
    CHECK(outer.at("s.g").value == 1e-12);
    Check bad{"b", 1.0, 1e-9};
    bad.count = 1;
    outer.add(bad);
    CHECK_FALSE(outer.pass());
    const auto j = outer.to_json();
    CHECK(j["pass"] == false);
    CHECK(j["checks"].size() == 2);
}
