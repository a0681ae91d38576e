#include "doctest.h"

#include <cmath>

#include "chainrad/errors.hpp"
#include "chainrad/quadrature.hpp"

using namespace chainrad;

TEST_CASE("polynomials are exact") {
    const auto r = quadrature::integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
    CHECK(r.value == doctest::Approx(9.0 - 3.0 + 3.0).epsilon(1e-14));
    CHECK(r.panels == 1);
}

TEST_CASE("oscillatory integrand converges with refinement") {
    quadrature::Options opts;
    opts.abs_tol = 1e-13;
    const auto r = quadrature::integrate([](double x) { return std::cos(60.0 * x); }, 0.0, 3.0, opts);
    CHECK(r.value == doctest::Approx(std::sin(180.0) / 60.0).epsilon(1e-11));
    CHECK(r.error_estimate <= 1e-13);
    CHECK(r.panels > 1);
}

TEST_CASE("relative tolerance") {
    quadrature::Options opts;
    opts.abs_tol = 0.0;
    opts.rel_tol = 1e-12;
    const auto r = quadrature::integrate([](double x) { return 1e-20 * std::exp(x); }, 0.0, 1.0, opts);
    CHECK(r.value == doctest::Approx(1e-20 * (std::exp(1.0) - 1.0)).epsilon(1e-13));
}

TEST_CASE("non-convergence reports the achieved estimate") {
    quadrature::Options opts;
    opts.abs_tol = 0.0;
    opts.max_panels = 8;
    try {
        quadrature::integrate([](double x) { return x < 0.3 ? 0.0 : 1.0; }, 0.0, 1.0, opts);
        FAIL("expected AccuracyError");
    } catch (const AccuracyError& e) {
        CHECK(e.estimate() == doctest::Approx(0.7).epsilon(0.05));
        CHECK(e.error_bound() > 0.0);
    }
}
