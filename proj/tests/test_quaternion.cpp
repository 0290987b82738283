#include <doctest.h>

#include <random>

#include "dirac/quaternion.hpp"

using namespace dirac;

namespace {

std::mt19937 rng(20240811);

Quat random_quat() {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    return Quat(Cx(dist(rng), dist(rng)), Cx(dist(rng), dist(rng)));
}

Quat random_imaginary() {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    return Quat(Cx(0.0, dist(rng)), Cx(dist(rng), dist(rng)));
}

}  // namespace

TEST_CASE("basis relations") {
    const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    CHECK((j * j + Quat::one()).norm() == doctest::Approx(0.0));
    CHECK((i * j - k).norm() == doctest::Approx(0.0));
    CHECK((j * i + k).norm() == doctest::Approx(0.0));
    CHECK((i * i + Quat::one()).norm() == doctest::Approx(0.0));
    CHECK((k * k + Quat::one()).norm() == doctest::Approx(0.0));

    // identity spin transform: conj(1) * j * 1 = j
    const Quat lambda = Quat::one();
    CHECK((conj(lambda) * j * lambda - j).norm() == doctest::Approx(0.0));
}

TEST_CASE("conjugation") {
    CHECK((conj(Quat::j()) + Quat::j()).norm() == doctest::Approx(0.0));
    CHECK((conj(Quat::i()) + Quat::i()).norm() == doctest::Approx(0.0));

    for (int trial = 0; trial < 200; ++trial) {
        const Quat a = random_quat(), b = random_quat();
        CHECK((conj(a * b) - conj(b) * conj(a)).norm() < 1e-12);
    }
}

TEST_CASE("norm is multiplicative") {
    for (int trial = 0; trial < 200; ++trial) {
        const Quat a = random_quat(), b = random_quat();
        CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-12);
    }
}

TEST_CASE("to_r3 coordinate convention") {
    const Vec3 j3 = to_r3(Quat::j());
    CHECK(j3.x == 0.0);
    CHECK(j3.y == 1.0);
    CHECK(j3.z == 0.0);

    const Vec3 i3 = to_r3(Quat::i());
    CHECK(i3.x == 1.0);
    CHECK(i3.y == 0.0);
    CHECK(i3.z == 0.0);

    // j * i = -k maps to (0, 0, -1)
    const Vec3 ji = to_r3(Quat::j() * Quat::i());
    CHECK(ji.x == doctest::Approx(0.0));
    CHECK(ji.y == doctest::Approx(0.0));
    CHECK(ji.z == doctest::Approx(-1.0));

    CHECK_THROWS_AS(to_r3(Quat::one()), NonImaginary);
}

TEST_CASE("to_r3 is an isometry on Im H") {
    for (int trial = 0; trial < 200; ++trial) {
        const Quat v = random_imaginary();
        CHECK(norm(to_r3(v)) == doctest::Approx(v.norm()));
        CHECK((conj(v) + v).norm() < 1e-15);
        CHECK((from_r3(to_r3(v)) - v).norm() < 1e-15);
    }
}

TEST_CASE("unit sandwiches are stretch rotations of Im H") {
    for (int trial = 0; trial < 100; ++trial) {
        Quat lambda = random_quat();
        if (lambda.norm() < 1e-3) continue;
        lambda = lambda * (1.0 / lambda.norm());
        const Quat v = random_imaginary();
        const Quat rotated = conj(lambda) * v * lambda;
        CHECK(std::abs(rotated.p.real()) < 1e-12);          // stays imaginary
        CHECK(std::abs(rotated.norm() - v.norm()) < 1e-12);  // preserves length
    }
}
