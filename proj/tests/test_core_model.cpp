#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "stefan/delay_line.hpp"
#include "stefan/numerics.hpp"
#include "stefan/physical_params.hpp"
#include "stefan/plant_state.hpp"
#include "stefan/scenario_config.hpp"

using namespace stefan;

static PhysicalParams zinc() {
    return derive_params(6570.0, 389.5687, 116.0, 111961.0, 692.68);
}

TEST_CASE("derived transport groups for the reference material") {
    const PhysicalParams p = zinc();
    // Hand-computed on the side: 116 / (6570 * 389.5687) and 116 / (6570 * 111961).
    CHECK(p.alpha == doctest::Approx(4.53219e-5).epsilon(1e-5));
    CHECK(p.beta == doctest::Approx(1.576976e-7).epsilon(1e-6));
    CHECK(p.Tm == 692.68);
}

TEST_CASE("parameter validation names the offending constant") {
    CHECK_THROWS_WITH_AS(derive_params(0.0, 389.0, 116.0, 1e5, 692.0),
                         doctest::Contains("rho"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(derive_params(6570.0, 389.0, 116.0, -1.0, 692.0),
                         doctest::Contains("dH"), std::invalid_argument);
    CHECK_THROWS_AS(derive_params(6570.0, 389.0, 116.0, 1e5, NAN), std::invalid_argument);
}

TEST_CASE("initial profile is linear in xi and pinned at the interface") {
    const PhysicalParams p = zinc();
    const PlantState st = init_state(p, 0.1, 50.0, 4);
    REQUIRE(st.n() == 4);
    CHECK(st.theta[0] == doctest::Approx(p.Tm + 50.0));
    CHECK(st.theta[1] == doctest::Approx(p.Tm + 37.5));
    CHECK(st.theta[2] == doctest::Approx(p.Tm + 25.0));
    CHECK(st.theta[3] == doctest::Approx(p.Tm + 12.5));
    CHECK(st.theta[4] == p.Tm);
    CHECK(min_theta(st) == p.Tm);
    CHECK(st.s == 0.1);

    CHECK_THROWS_AS(init_state(p, 0.0, 50.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(init_state(p, 0.1, -1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(init_state(p, 0.1, 50.0, 1), std::invalid_argument);
}

TEST_CASE("constant warm-up history integrates to value * span") {
    DelayLine line = DelayLine::constant_history(120.0, 0.0, 500.0, 0.25);
    CHECK(line.back_time() < 0.0);
    CHECK(line.front_time() == doctest::Approx(-120.0));
    line.append(0.0, 500.0);
    CHECK(line.integral(-120.0, 0.0) == doctest::Approx(60000.0).epsilon(1e-12));
    CHECK(line.integral(-60.0, 0.0) == doctest::Approx(30000.0).epsilon(1e-12));
    CHECK(line.lookup(-37.123) == doctest::Approx(500.0).epsilon(1e-12));
}

TEST_CASE("lookup interpolates linearly and integral is exact for the interpolant") {
    DelayLine line(1.0);
    line.append(0.0, 0.0);
    line.append(1.0, 10.0);
    CHECK(line.lookup(0.5) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(line.lookup(0.25) == doctest::Approx(2.5).epsilon(1e-15));
    // trapezoid of the hat: 0.5 * 1 * 10
    CHECK(line.integral(0.0, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
    // partial panel: int_0^0.5 10 t dt = 1.25
    CHECK(line.integral(0.0, 0.5) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(line.integral(1.0, 0.0) == doctest::Approx(-5.0).epsilon(1e-15));
}

TEST_CASE("integral is additive across interior split points") {
    DelayLine line(10.0);
    for (int i = 0; i <= 40; ++i) line.append(0.25 * i, std::sin(0.3 * i) + 2.0);
    const double whole = line.integral(0.6, 9.1);
    const double split = line.integral(0.6, 4.33) + line.integral(4.33, 9.1);
    CHECK(split == doctest::Approx(whole).epsilon(1e-13));
}

TEST_CASE("append requires strictly increasing time") {
    DelayLine line(5.0);
    line.append(0.0, 1.0);
    line.append(1.0, 2.0);
    CHECK_THROWS_AS(line.append(1.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(line.append(0.5, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(line.append(2.0, NAN), std::invalid_argument);
}

TEST_CASE("lookups outside the retained window throw") {
    DelayLine line(5.0);
    line.append(0.0, 1.0);
    line.append(5.0, 2.0);
    CHECK_THROWS_AS(line.lookup(-0.5), std::out_of_range);
    CHECK_THROWS_AS(line.lookup(5.5), std::out_of_range);
    CHECK_THROWS_AS(line.integral(-1.0, 4.0), std::out_of_range);
}

TEST_CASE("pruning keeps the window answerable and compaction preserves values") {
    DelayLine line(10.0);
    line.append(0.0, 0.0);
    for (int i = 1; i <= 5000; ++i) {
        const double t = 0.5 * i;
        line.append(t, t);  // signal v(t) = t
        if (t <= 10.0) continue;
        line.prune(t - 10.0);
        CHECK(line.lookup(t - 10.0) == doctest::Approx(t - 10.0).epsilon(1e-12));
        CHECK(line.lookup(t - 3.3) == doctest::Approx(t - 3.3).epsilon(1e-12));
    }
    CHECK(line.size() < 64);  // pruning bounded the buffer
    //  int_{a}^{b} t dt = (b^2 - a^2) / 2
    const double a = 2495.0, b = 2500.0;
    CHECK(line.integral(a, b) == doctest::Approx(0.5 * (b * b - a * a)).epsilon(1e-12));
}

TEST_CASE("scenario validation catches inconsistent settings") {
    ScenarioConfig good;
    good.D = 120.0;
    good.c = 0.01;
    good.s_r = 0.15;
    good.s0 = 0.1;
    good.Tbar = 50.0;
    good.q_past = 500.0;
    good.dt = 0.003;
    good.horizon = 10.0;
    CHECK_NOTHROW(validate(good));
    CHECK(good.plant_delay() == 120.0);
    CHECK(good.needed_span() == 120.0);
    CHECK(good.z_intervals() == good.N);

    auto expect_reject = [&](auto&& tweak, const char* what) {
        ScenarioConfig bad = good;
        tweak(bad);
        INFO(what);
        CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains(what), std::invalid_argument);
    };
    expect_reject([](ScenarioConfig& c) { c.c = 0.0; }, "c");
    expect_reject([](ScenarioConfig& c) { c.s_r = 0.05; }, "s_r");
    expect_reject([](ScenarioConfig& c) { c.dt = 0.0; }, "dt");
    expect_reject([](ScenarioConfig& c) { c.horizon = 0.0; }, "horizon");
    expect_reject([](ScenarioConfig& c) { c.deltaD = -121.0; }, "plant delay");
    expect_reject([](ScenarioConfig& c) { c.deltaD = -119.999; }, "plant delay");
    expect_reject([](ScenarioConfig& c) { c.D = 0.001; c.deltaD = -0.001; }, "D");
    expect_reject([](ScenarioConfig& c) { c.N = 1; }, "N");

    ScenarioConfig mismatch = good;
    mismatch.D = 30.0;
    mismatch.deltaD = 30.0;
    CHECK(mismatch.needed_span() == 60.0);
    mismatch.deltaD = -10.0;
    CHECK(mismatch.needed_span() == 30.0);
    CHECK(mismatch.plant_delay() == 20.0);
}

TEST_CASE("quadrature and gradient helpers reproduce polynomials") {
    std::vector<double> x, f;
    for (int i = 0; i <= 20; ++i) {
        x.push_back(0.1 * i);
        f.push_back(3.0 * x.back() + 1.0);
    }
    CHECK(trapz(x, f) == doctest::Approx(3.0 * 2.0 + 2.0).epsilon(1e-13));  // int_0^2 (3t+1)
    const auto g = gradient(x, f);
    for (double gi : g) CHECK(gi == doctest::Approx(3.0).epsilon(1e-11));

    // one quadratic: gradient is second order so x^2 is exact on a uniform grid
    std::vector<double> q;
    for (double xi : x) q.push_back(xi * xi);
    const auto gq = gradient(x, q);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(gq[i] == doctest::Approx(2.0 * x[i]).epsilon(1e-10));

    const auto cum = cumtrapz(x, f);
    CHECK(cum.front() == 0.0);
    CHECK(cum.back() == doctest::Approx(trapz(x, f)).epsilon(1e-14));

    const double root = bisect([](double t) { return t * t - 2.0; }, 0.0, 2.0, 1e-12);
    CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK_THROWS_AS(bisect([](double t) { return t * t + 1.0; }, -1.0, 1.0),
                    std::invalid_argument);
}
