#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "llcert/symmetric.hpp"

#include "support.hpp"

using namespace llcert;
using namespace testsupport;

TEST_CASE("threshold values at small degrees") {
    const auto t2 = symmetric_thresholds(2);
    CHECK(t2.erdos_lovasz == Rational(1, 8));
    CHECK(t2.spencer == Rational(4, 27));
    CHECK(t2.shearer == Rational(1, 4));
    CHECK(t2.cluster_ed == doctest::Approx(1.0 / (2 * std::numbers::e)).epsilon(1e-15));

    const auto t3 = symmetric_thresholds(3);
    CHECK(t3.spencer == Rational(27, 256));
    CHECK(t3.shearer == Rational(4, 27));

    CHECK_THROWS_AS(symmetric_thresholds(1), Error);
    CHECK_THROWS_AS(symmetric_thresholds(0), Error);
}

TEST_CASE("threshold chain for d up to 50") {
    for (int d = 2; d <= 50; ++d) {
        const auto t = symmetric_thresholds(d);
        CHECK(t.erdos_lovasz < t.spencer);
        CHECK(t.spencer < t.shearer);
        // The strict float comparisons stated alongside the formulas.
        CHECK(t.spencer.get_d() > 1.0 / (std::numbers::e * (d + 1)));
        CHECK(t.shearer.get_d() > t.cluster_ed);
        CHECK(t.cluster_ed == doctest::Approx(1.0 / (std::numbers::e * d)).epsilon(1e-15));
        // 1/(4d) only drops below 1/(e(d+1)) from d = 3 on; at d = 2 it
        // sits between that value and spencer.
        if (d >= 3) CHECK(t.erdos_lovasz.get_d() < 1.0 / (std::numbers::e * (d + 1)));
    }
}

TEST_CASE("degree inequality holds across the range") {
    CHECK(check_symm_inequality(2)); // 1/2 + 2 = 2.5 <= e
    CHECK(check_symm_inequality(3)); // 1/3 + 9/4 = 2.5833... <= e
    CHECK(check_symm_inequality(1000000));
    CHECK_THROWS_AS(check_symm_inequality(1), Error);

    // The float value at d = 3 is exactly representable arithmetic: 1/3 + (3/2)^2.
    const double rhs3 = 1.0 / 3 + 2.25;
    CHECK(rhs3 < std::numbers::e);

    // (d/(d-1))^(d-1) stays below exp(1 - 1/(2d)), the envelope that makes
    // the inequality work for every degree.
    for (long long d : {2LL, 3LL, 10LL, 1000LL, 1000000LL}) {
        const double power =
            std::exp(static_cast<double>(d - 1) * std::log1p(1.0 / static_cast<double>(d - 1)));
        CHECK(power < std::exp(1.0 - 1.0 / (2.0 * static_cast<double>(d))));
    }
}

TEST_CASE("uniform-weight slack identity at y = 1/(d-1)") {
    // y / (y + (1+y)^d) collapses to 1 / (1 + d^d/(d-1)^(d-1)).
    for (unsigned long d = 2; d <= 20; ++d) {
        const Rational y(1, static_cast<long>(d) - 1);
        const Rational lhs = y / (y + rational_pow(Rational(1) + y, d));
        const Rational ratio = rational_pow(Rational(static_cast<long>(d)), d) /
                               rational_pow(Rational(static_cast<long>(d) - 1), d - 1);
        CHECK(lhs == Rational(1) / (Rational(1) + ratio));
    }
}

TEST_CASE("closed neighborhood polynomial is bounded by y + (1+y)^d") {
    Rng rng(71);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = pick(rng, 2, 10);
        const Graph g = random_graph(rng, n, 0.45);
        const int d = g.max_degree();
        if (d < 1) continue;
        const Rational y = make_rational(pick(rng, 1, 8), pick(rng, 2, 8));
        WeightVector<Rational> w(std::vector<Rational>(static_cast<std::size_t>(n), y));
        const Rational cap = y + rational_pow(Rational(1) + y, static_cast<unsigned long>(d));
        for (int i = 0; i < n; ++i)
            REQUIRE(independence_polynomial(g, g.closed_neighborhood(i), w) <= cap);
    }
}

TEST_CASE("symmetric certificate on the 5-cycle") {
    const Graph c5 = cycle(5);
    // d = 2, y = 1: the closed neighborhood of each vertex is a 3-path with
    // polynomial 5, so the slack is 1/5 - p.
    const auto report = symmetric_certificate<Rational>(c5, parse_rational("0.18"));
    CHECK(report.holds);
    for (const auto& s : report.slack) CHECK(s == Rational(1, 5) - Rational(9, 50));

    const auto fail = symmetric_certificate<Rational>(c5, parse_rational("0.21"));
    CHECK_FALSE(fail.holds);
}

TEST_CASE("symmetric certificate at p = 1/(e d) on K4 and Petersen") {
    for (const Graph& g : {complete(4), petersen()}) {
        const int d = g.max_degree();
        REQUIRE(d == 3);
        const double p = 1.0 / (std::numbers::e * d);
        const auto report = symmetric_certificate<double>(g, p);
        CHECK(report.holds);
        for (double s : report.slack) CHECK(s > 0.0);

        // Exact route at a rationalized p.
        const auto exact = symmetric_certificate<Rational>(g, rationalize(p));
        CHECK(exact.holds);
    }
}

TEST_CASE("symmetric certificate refuses degree below 2") {
    CHECK_THROWS_AS(symmetric_certificate<Rational>(complete(2), Rational(1, 10)), Error);
    CHECK_THROWS_AS(symmetric_certificate<Rational>(edgeless(3), Rational(1, 10)), Error);
}

TEST_CASE("certificate uses the graph's true maximum degree") {
    // A triangle has d = 2 regardless of how large a degree the caller had
    // in mind; p = 0.18 < 1/(2e) certifies with y = 1.
    const auto report = symmetric_certificate<Rational>(cycle(3), Rational(9, 50));
    CHECK(report.holds);
    CHECK(report.bound == Rational(1) / Rational(4)); // Y(K3) = 1 + 3y = 4
}
