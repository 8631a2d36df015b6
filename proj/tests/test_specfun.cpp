#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "oracle_quadrature.hpp"
#include "superrad/specfun.hpp"

using superrad::specfun::In_farfield_asymptote;
using superrad::specfun::In_nearfield_asymptote;
using superrad::specfun::integral_In;

namespace {

struct Golden {
    int n;
    double s;
    double value;
};

// Frozen output of oracle::integral_In_bruteforce (plain Simpson with
// interval doubling, agreement 1e-12), spanning s in [1e-3, 1e3].
constexpr Golden golden_values[] = {
    {0, 0.001, 1563.4650031433487},
    {0, 0.0050000000000000001, 308.43426398478817},
    {0, 0.02, 74.189646094761883},
    {0, 0.10000000000000001, 12.910047283090938},
    {0, 0.29999999999999999, 3.4120784115353682},
    {0, 0.87, 0.76959661851980321},
    {0, 1, 0.62144962423580952},
    {0, 1.6699999999999999, 0.27121827996665526},
    {0, 3, 0.09731923689736191},
    {0, 10, 0.0098191035010173015},
    {0, 50, 0.00039968151796674874},
    {0, 200, 2.4998750374719321e-05},
    {0, 1000, 9.9999800002400651e-07},
    {1, 0.001, 6.3321064948762542},
    {1, 0.0050000000000000001, 4.7288778869616266},
    {1, 0.02, 3.3652542473617073},
    {1, 0.10000000000000001, 1.8660764089091717},
    {1, 0.29999999999999999, 0.99616666902224482},
    {1, 0.87, 0.39880306680288846},
    {1, 1, 0.3433779615564293},
    {1, 1.6699999999999999, 0.18465911603918053},
    {1, 3, 0.079221521164363026},
    {1, 10, 0.0094885390163547516},
    {1, 50, 0.00039904755453781094},
    {1, 200, 2.4996251873034242e-05},
    {1, 1000, 9.9999400011997311e-07},
    {2, 0.001, 0.99843653499686158},
    {2, 0.0050000000000000001, 0.99228914340036589},
    {2, 0.02, 0.97032414156208946},
    {2, 0.10000000000000001, 0.87089952716910657},
    {2, 0.29999999999999999, 0.69291294296181749},
    {2, 0.87, 0.41749231944236131},
    {2, 1, 0.37855037576419126},
    {2, 1.6699999999999999, 0.24359933900100136},
    {2, 3, 0.1241268679237663},
    {2, 10, 0.018089649898298425},
    {2, 50, 0.00079620508313552182},
    {2, 200, 4.9985011234286406e-05},
    {2, 1000, 1.9999760007200031e-06},
};

} // namespace

TEST_CASE("integral_In matches the frozen brute-force golden values", "[specfun]") {
    for (const Golden& g : golden_values) {
        CAPTURE(g.n, g.s);
        const double v = integral_In(g.n, g.s);
        REQUIRE(v > 0.0);
        REQUIRE(std::abs(v - g.value) <= 1e-10 * g.value);
    }
}

TEST_CASE("integral_In agrees with a live oracle run", "[specfun]") {
    for (const auto& [n, s] : {std::pair{0, 0.3}, {1, 1.0}, {2, 3.0}, {0, 10.0}, {2, 0.02}}) {
        CAPTURE(n, s);
        const double ref = oracle::integral_In_bruteforce(n, s);
        REQUIRE(std::abs(integral_In(n, s) - ref) <= 1e-11 * ref);
    }
}

TEST_CASE("near-field asymptotes", "[specfun]") {
    REQUIRE(In_nearfield_asymptote(0, 0.5) == Catch::Approx(3.14159265358979).epsilon(1e-12));
    REQUIRE(In_nearfield_asymptote(1, 0.1) == Catch::Approx(std::log(10.0)).epsilon(1e-12));
    REQUIRE(In_nearfield_asymptote(2, 0.37) == 1.0);
    REQUIRE(In_nearfield_asymptote(2, 123.0) == 1.0);

    // integrand reduces to e^-u as s -> 0 for n = 2
    REQUIRE(integral_In(2, 1e-8) == Catch::Approx(1.0).margin(1e-7));
    // s * I0(s) -> pi/2, with an s ln(s) correction: 1% needs s <= 1e-3
    REQUIRE(integral_In(0, 1e-3) * 1e-3 ==
            Catch::Approx(1.5707963267948966).epsilon(0.01));
    REQUIRE(integral_In(0, 0.01) * 0.01 ==
            Catch::Approx(1.5707963267948966).epsilon(0.04));
    // I1 / (-ln s) -> 1, slowly; the deviation must shrink with s
    const double d1 = std::abs(integral_In(1, 1e-3) / (-std::log(1e-3)) - 1.0);
    const double d2 = std::abs(integral_In(1, 1e-6) / (-std::log(1e-6)) - 1.0);
    REQUIRE(d2 < d1);
    REQUIRE(d2 < 0.05);
}

TEST_CASE("far-field asymptotes", "[specfun]") {
    REQUIRE(In_farfield_asymptote(2, 100.0) == Catch::Approx(2e-4).epsilon(1e-12));
    REQUIRE(In_farfield_asymptote(0, 10.0) == Catch::Approx(0.01).epsilon(1e-12));
    for (int n = 0; n <= 2; ++n) {
        CAPTURE(n);
        const double s = 50.0;
        REQUIRE(std::abs(integral_In(n, s) / In_farfield_asymptote(n, s) - 1.0) < 0.01);
    }
}

TEST_CASE("recurrence I2 + s^2 I0 = 1", "[specfun]") {
    for (int i = 0; i < 40; ++i) {
        const double s = std::pow(10.0, -3.0 + 6.0 * i / 39.0);
        CAPTURE(s);
        REQUIRE(std::abs(integral_In(2, s) + s * s * integral_In(0, s) - 1.0) <= 1e-10);
    }
}

TEST_CASE("I_n is strictly decreasing and positive", "[specfun]") {
    for (int n = 0; n <= 2; ++n) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 25; ++i) {
            const double s = std::pow(10.0, -2.0 + 4.0 * i / 24.0);
            const double v = integral_In(n, s);
            CAPTURE(n, s);
            REQUIRE(v > 0.0);
            REQUIRE(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("tiny-s fallback returns the asymptote", "[specfun]") {
    for (int n = 0; n <= 2; ++n)
        REQUIRE(integral_In(n, 1e-9) == In_nearfield_asymptote(n, 1e-9));
}

TEST_CASE("invalid arguments are rejected", "[specfun]") {
    REQUIRE_THROWS_AS(integral_In(3, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(integral_In(-1, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(integral_In(0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(integral_In(0, -2.0), std::invalid_argument);
    REQUIRE_THROWS_AS(integral_In(0, std::nan("")), std::invalid_argument);
    REQUIRE_THROWS_AS(integral_In(0, std::numeric_limits<double>::infinity()),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(In_nearfield_asymptote(5, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(In_farfield_asymptote(-2, 1.0), std::invalid_argument);
}
