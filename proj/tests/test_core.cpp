#include "doctest.h"

#include <cmath>

#include "hbac/core.hpp"

using namespace hbac;

TEST_CASE("linear compression boosts the target bias") {
    const double eps0 = 0.01;
    CHECK(comp3_linear(eps0, eps0, eps0) == doctest::Approx(1.5 * eps0));
    CHECK(comp3_linear(0, 0, 0) == 0.0);
    // the PAC3 configuration {eps_j, eps_j, eps_{j-1}}
    CHECK(comp3_linear(1.5, 1.5, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("exact compression fixed points and closure") {
    CHECK(comp3_exact(1, 1, 1) == 1.0);
    CHECK(comp3_exact(0, 0, 0) == 0.0);
    const double eps = 1e-5;
    CHECK(std::abs(comp3_exact(eps, eps, eps) - comp3_linear(eps, eps, eps)) <=
          eps * eps * eps);

    // closed on [-1,1]^3, checked on a grid
    for (double a = -1.0; a <= 1.0; a += 0.25)
        for (double b = -1.0; b <= 1.0; b += 0.25)
            for (double c = -1.0; c <= 1.0; c += 0.25) {
                const double r = comp3_exact(c, b, a);
                CHECK(r >= -1.0);
                CHECK(r <= 1.0);
            }
}

TEST_CASE("exact minus linear at equal biases is eps^3/2") {
    unsigned x = 12345;
    for (int i = 0; i < 200; ++i) {
        x ^= x << 13;
        x ^= x >> 17;
        x ^= x << 5;
        const double eps = static_cast<double>(x % 20001) / 10000.0 - 1.0;
        const double diff =
            comp3_linear(eps, eps, eps) - comp3_exact(eps, eps, eps);
        CHECK(diff == doctest::Approx(0.5 * eps * eps * eps).epsilon(1e-12));
    }
}

TEST_CASE("apply_op semantics") {
    SpinSystem s({0.5, 0.2, 0.3}, 0.01, Regime::Linear);

    SUBCASE("reset rethermalizes the target") {
        const auto t = apply_op(s, PrimitiveOp::reset(1));
        CHECK(t.bias(1) == 0.01);
        CHECK(t.bias(2) == 0.2);
    }
    SUBCASE("pt is a full swap") {
        const auto t = apply_op(s, PrimitiveOp::pt(1, 3));
        CHECK(t.bias(1) == 0.3);
        CHECK(t.bias(2) == 0.2);
        CHECK(t.bias(3) == 0.5);
    }
    SUBCASE("comp3 writes the target, zeroes the hot spins") {
        const auto t = apply_op(s, PrimitiveOp::comp3(3, 2, 1));
        CHECK(t.bias(3) == doctest::Approx(0.5 * (0.3 + 0.2 + 0.5)));
        CHECK(t.bias(2) == 0.0);
        CHECK(t.bias(1) == 0.0);
    }
    SUBCASE("equilibrium compression in linear regime") {
        const auto eq = SpinSystem::equilibrium(3, 0.01, Regime::Linear);
        const auto t = apply_op(eq, PrimitiveOp::comp3(3, 2, 1));
        CHECK(t.bias(3) == doctest::Approx(0.015));
    }
}

TEST_CASE("index and argument errors") {
    SpinSystem s = SpinSystem::equilibrium(3, 0.01, Regime::Linear);
    CHECK_THROWS_AS(apply_op(s, PrimitiveOp::reset(4)), ExecutionError);
    CHECK_THROWS_AS(apply_op(s, PrimitiveOp::pt(2, 2)), ExecutionError);
    CHECK_THROWS_AS(apply_op(s, PrimitiveOp::comp3(3, 3, 1)), ExecutionError);
    CHECK_THROWS_AS(SpinSystem({0.5}, 1.5, Regime::Linear),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpinSystem({1.2}, 0.1, Regime::Exact),
                    std::invalid_argument);
}

TEST_CASE("strict runs reject compressed reads, permissive runs restart at 0") {
    Schedule sched;
    sched.push(PrimitiveOp::comp3(3, 2, 1));
    sched.push(PrimitiveOp::comp3(3, 2, 1));  // reads hot spins 2 and 1

    const auto init = SpinSystem::equilibrium(3, 0.01, Regime::Linear);
    CHECK_THROWS_AS(run_schedule(init, sched), ExecutionError);

    RunOptions opts;
    opts.compressed_reads_allowed = true;
    const auto report = run_schedule(init, sched, opts);
    CHECK(report.compressed_reads == 1);
    // second compression reads (0.015, 0, 0)
    CHECK(report.final_biases[2] == doctest::Approx(0.0075));
}

TEST_CASE("hot flags travel with PT and clear on overwrite") {
    Schedule sched;
    sched.push(PrimitiveOp::comp3(3, 2, 1));
    sched.push(PrimitiveOp::reset(1));
    sched.push(PrimitiveOp::pt(1, 2));   // fresh value lands on spin 2
    sched.push(PrimitiveOp::reset(1));
    sched.push(PrimitiveOp::comp3(3, 2, 1));  // all reads fresh again
    const auto report =
        run_schedule(SpinSystem::equilibrium(3, 0.01, Regime::Linear), sched);
    CHECK(report.compressed_reads == 0);
    CHECK(report.final_biases[2] == doctest::Approx(0.5 * (0.015 + 0.02)));
}

TEST_CASE("run_schedule bookkeeping") {
    const auto init = SpinSystem::equilibrium(3, 0.01, Regime::Linear);

    SUBCASE("empty schedule") {
        const auto report = run_schedule(init, Schedule{});
        CHECK(report.reset_count == 0);
        CHECK(report.final_biases == init.biases());
    }
    SUBCASE("reset counting") {
        Schedule sched;
        sched.push(PrimitiveOp::reset(1));
        sched.push(PrimitiveOp::pt(1, 2));
        sched.push(PrimitiveOp::reset(1));
        CHECK(sched.reset_count == 2);
        const auto report = run_schedule(init, sched);
        CHECK(report.reset_count == 2);
    }
    SUBCASE("trace records each op") {
        Schedule sched;
        sched.push(PrimitiveOp::reset(1));
        sched.push(PrimitiveOp::pt(1, 3));
        RunOptions opts;
        opts.record_trace = true;
        const auto report = run_schedule(init, sched, opts);
        REQUIRE(report.trace.has_value());
        CHECK(report.trace->size() == 2);
        CHECK((*report.trace)[1].biases_after[2] == 0.01);
    }
}
