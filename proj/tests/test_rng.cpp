#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "framescope/rng.hpp"

using framescope::Rng;

TEST_CASE("identical seeds replay identical streams") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng c(43);
    Rng d(42);
    bool all_equal = true;
    for (int i = 0; i < 8; ++i) all_equal &= (c.next_u64() == d.next_u64());
    CHECK_FALSE(all_equal);
}

TEST_CASE("split streams ignore parent consumption") {
    Rng parent(7);
    Rng before = parent.split(5);
    for (int i = 0; i < 100; ++i) parent.next_u64();
    Rng after = parent.split(5);
    for (int i = 0; i < 16; ++i) CHECK(before.next_u64() == after.next_u64());
}

TEST_CASE("split streams differ per id and from the root") {
    const Rng root(99);
    Rng a = root.split(1);
    Rng b = root.split(2);
    Rng raw(99);
    bool ab = true, ar = true;
    for (int i = 0; i < 8; ++i) {
        const std::uint64_t va = a.next_u64();
        ab &= (va == b.next_u64());
        ar &= (va == raw.next_u64());
    }
    CHECK_FALSE(ab);
    CHECK_FALSE(ar);
}

TEST_CASE("uniform01 stays inside the half-open unit interval") {
    Rng rng(11);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform(-2.0, 3.0);
        CHECK(v >= -2.0);
        CHECK(v <= 3.0);
    }
}

TEST_CASE("normal draws have the right first two moments") {
    Rng rng(12);
    const int n = 40000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.standard_normal();
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.05);

    const auto z = rng.standard_complex_normal();
    CHECK(std::isfinite(z.real()));
    CHECK(std::isfinite(z.imag()));
}

TEST_CASE("root seed is preserved") {
    const Rng rng(123456);
    CHECK(rng.root_seed() == 123456);
}
