#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "widomkit/quadrature.hpp"
#include "widomkit/rng.hpp"

using widomkit::gauss_legendre;
using widomkit::QuadratureRule;

TEST_CASE("one-point rule is the midpoint rule", "[quadrature]") {
    QuadratureRule r = gauss_legendre(1, -1.0, 1.0);
    REQUIRE(r.nodes.size() == 1);
    CHECK(r.nodes[0] == Catch::Approx(0.0).margin(1e-15));
    CHECK(r.weights[0] == Catch::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("two-point nodes are the degree-2 Legendre roots", "[quadrature]") {
    QuadratureRule r = gauss_legendre(2, -1.0, 1.0);
    const double root = 1.0 / std::sqrt(3.0);
    CHECK(r.nodes[0] == Catch::Approx(-root).epsilon(1e-14));
    CHECK(r.nodes[1] == Catch::Approx(root).epsilon(1e-14));
    CHECK(r.weights[0] == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(r.weights[1] == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("five-point rule integrates x^9 on (0,2) exactly", "[quadrature]") {
    QuadratureRule r = gauss_legendre(5, 0.0, 2.0);
    double got = r.integrate([](double x) { return std::pow(x, 9); });
    CHECK(got == Catch::Approx(1024.0 / 10.0).epsilon(1e-12));
}

TEST_CASE("degenerate inputs are rejected", "[quadrature]") {
    CHECK_THROWS_AS(gauss_legendre(0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(-3, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(4, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("rule structure: increasing interior nodes, positive weights summing to b-a",
          "[quadrature]") {
    for (int n : {1, 2, 3, 7, 16, 30, 64}) {
        QuadratureRule r = gauss_legendre(n, -2.5, 4.0);
        double wsum = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(r.weights[i] > 0.0);
            wsum += r.weights[i];
            CHECK(r.nodes[i] > -2.5);
            CHECK(r.nodes[i] < 4.0);
            if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
        }
        CHECK(wsum == Catch::Approx(6.5).epsilon(1e-13));
    }
}

TEST_CASE("exactness on random polynomials of degree <= 2n-1", "[quadrature]") {
    widomkit::RngStream rng(0xA11CE5, 7);
    for (int n = 1; n <= 30; ++n) {
        QuadratureRule r = gauss_legendre(n, -1.0, 2.0);
        for (int rep = 0; rep < 3; ++rep) {
            int deg = static_cast<int>(rng.uniform_below(2 * n));
            std::vector<double> coef(deg + 1);
            for (auto& c : coef) c = 2.0 * rng.uniform() - 1.0;
            auto poly = [&](double x) {
                double v = 0.0;
                for (int k = deg; k >= 0; --k) v = v * x + coef[k];
                return v;
            };
            // exact integral by the antiderivative
            auto prim = [&](double x) {
                double v = 0.0;
                for (int k = deg; k >= 0; --k) v = v * x + coef[k] / (k + 1.0);
                return v * x;
            };
            double exact = prim(2.0) - prim(-1.0);
            double got = r.integrate(poly);
            CHECK(std::abs(got - exact) <= 1e-11 * std::max(1.0, std::abs(exact)));
        }
    }
}
