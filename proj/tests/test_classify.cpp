#include <doctest.h>

#include <random>

#include "dirac/classify.hpp"

using namespace dirac;

namespace {

ExactComplex ec(const std::string& x, const std::string& y) {
    return {parse_quad_scalar(x), parse_quad_scalar(y)};
}

void check_witness(const Verdict& v) {
    REQUIRE(v.witness.has_value());
    CHECK(pairing(v.witness->omega1, v.witness->omega2).is_zero());
    const QuadScalar lhs = norm_sq(v.witness->omega1);
    const QuadScalar rhs = QuadScalar(v.witness->b) * norm_sq(v.witness->omega2);
    CHECK(lhs == rhs);
}

}  // namespace

TEST_CASE("square dual lattice has the obvious witness") {
    const auto basis = ExactLatticeBasis::make(ec("1", "0"), ec("0", "1"));
    const auto verdict = classify(basis, 1);
    CHECK(verdict.kind == VerdictKind::ExistsWitness);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->omega1 == ec("1", "0"));
    CHECK(verdict.witness->omega2 == ec("0", "1"));
    CHECK(verdict.witness->b == Rational(1));
    check_witness(verdict);
}

TEST_CASE("rectangular lattice with tau^2 = 2") {
    const auto basis = ExactLatticeBasis::make(ec("1", "0"), ec("0", "sqrt(2)"));
    const auto verdict = classify(basis, 1);
    CHECK(verdict.kind == VerdictKind::ExistsWitness);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->omega1 == ec("1", "0"));
    CHECK(verdict.witness->omega2 == ec("0", "sqrt(2)"));
    CHECK(verdict.witness->b == Rational(1, 2));
    check_witness(verdict);
}

TEST_CASE("hexagonal dual lattice") {
    const auto basis = ExactLatticeBasis::make(ec("1", "0"), ec("1/2", "1/2*sqrt(3)"));
    const auto verdict = classify(basis, 2);
    CHECK(verdict.kind == VerdictKind::ExistsWitness);
    REQUIRE(verdict.witness.has_value());
    // i sqrt(3) = 2 w2 - w1 pairs with 1
    CHECK(verdict.witness->omega1 == ec("1", "0"));
    CHECK(verdict.witness->omega2 == ec("0", "sqrt(3)"));
    CHECK(verdict.witness->b == Rational(1, 3));
    check_witness(verdict);
}

TEST_CASE("rectangular irrational ratio is a proven no") {
    const auto basis = ExactLatticeBasis::make(ec("1", "0"), ec("0", "1+sqrt(2)"));
    // |w2|^2 = 3 + 2 sqrt(2), irrational ratio; rectangular input makes it total
    const auto verdict = classify(basis, 3);
    CHECK(verdict.kind == VerdictKind::NoRectangularCase);
}

TEST_CASE("generic skew basis without small witnesses stays inconclusive") {
    const auto basis = ExactLatticeBasis::make(ec("1", "0"), ec("1/3", "sqrt(2)"));
    const auto verdict = classify(basis, 2);
    CHECK(verdict.kind == VerdictKind::NotFoundUpToBound);
    CHECK(verdict.search_bound == 2);
}

TEST_CASE("classify_rectangular decides rationality") {
    SUBCASE("rational tau^2 is always yes") {
        for (const char* t : {"1", "2", "3", "5", "1/2", "4/9"}) {
            const auto verdict = classify_rectangular(parse_quad_scalar(t));
            CHECK(verdict.kind == VerdictKind::ExistsWitness);
            CHECK(verdict.six_vectors.size() == 6);
            check_witness(verdict);
            // all six certificate vectors share one exact squared length
            const QuadScalar len = norm_sq(verdict.six_vectors.front());
            for (const auto& v : verdict.six_vectors) CHECK(norm_sq(v) == len);
        }
    }
    SUBCASE("irrational tau^2 is a definitive no") {
        for (const char* t : {"sqrt(2)", "sqrt(3)", "1+sqrt(2)"}) {
            const auto verdict = classify_rectangular(parse_quad_scalar(t));
            CHECK(verdict.kind == VerdictKind::NoRectangularCase);
        }
    }
    CHECK_THROWS_AS(classify_rectangular(parse_quad_scalar("-2")), NonRectangularInput);
}

TEST_CASE("rectangular witness vectors") {
    SUBCASE("tau^2 = 2") {
        const auto vectors = rectangular_witness(2, 1, Rational(2));
        REQUIRE(vectors.size() == 6);
        // {+-1 +- 2 sqrt(2) i, +-3}, all of squared norm 9
        for (const auto& v : vectors) CHECK(norm_sq(v) == QuadScalar(Rational(9)));
        CHECK(std::count(vectors.begin(), vectors.end(), ec("3", "0")) == 1);
        CHECK(std::count(vectors.begin(), vectors.end(), ec("-3", "0")) == 1);
        CHECK(std::count(vectors.begin(), vectors.end(), ec("1", "2*sqrt(2)")) == 1);
    }
    SUBCASE("tau^2 = 5") {
        const auto vectors = rectangular_witness(5, 1, Rational(5));
        for (const auto& v : vectors) CHECK(norm_sq(v) == QuadScalar(Rational(36)));
        CHECK(std::count(vectors.begin(), vectors.end(), ec("4", "2*sqrt(5)")) == 1);
        CHECK(std::count(vectors.begin(), vectors.end(), ec("6", "0")) == 1);
    }
    SUBCASE("square case pads from the norm-5 circle") {
        const auto vectors = rectangular_witness(1, 1, Rational(1));
        REQUIRE(vectors.size() == 6);
        for (const auto& v : vectors) CHECK(norm_sq(v) == QuadScalar(Rational(5)));
    }
    CHECK_THROWS_AS(rectangular_witness(2, 1, Rational(3)), PreconditionViolated);
    CHECK_THROWS_AS(rectangular_witness(0, 1, Rational(0)), PreconditionViolated);
}

TEST_CASE("witness identity (p-q)^2 + 4 q^2 tau^2 = (p+q)^2 for random p, q") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<std::int64_t> dist(1, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t p = dist(rng), q = dist(rng);
        const Rational tau_sq(p, q);
        const Rational lhs = Rational((p - q) * (p - q)) + 4 * q * q * tau_sq;
        CHECK(lhs == Rational((p + q) * (p + q)));
        // and the emitted vectors satisfy it exactly
        const auto vectors = rectangular_witness(p, q, tau_sq);
        if (p != q)
            for (const auto& v : vectors)
                CHECK(norm_sq(v) == QuadScalar(Rational((p + q) * (p + q))));
    }
}

TEST_CASE("classify and classify_rectangular agree on rectangular inputs") {
    // rational tau^2: both the total decision and the bounded search say yes
    for (const char* tau_sq_text : {"1", "2", "3", "1/2", "5/3"}) {
        const QuadScalar tau_sq = parse_quad_scalar(tau_sq_text);
        CHECK(classify_rectangular(tau_sq).kind == VerdictKind::ExistsWitness);

        const auto p = static_cast<std::int64_t>(numerator(tau_sq.a));
        const auto q = static_cast<std::int64_t>(denominator(tau_sq.a));
        const auto [k, d] = squarefree_split(p * q);
        const QuadScalar tau(Rational(0), Rational(k, q), d);  // sqrt(p/q)
        const auto basis = ExactLatticeBasis::make(ec("1", "0"), ExactComplex{QuadScalar(0), tau});
        CHECK(classify(basis, 3).kind == VerdictKind::ExistsWitness);
    }
    // irrational tau^2: the rectangular fast path and the search-based verdict
    // both reject, here represented by |w2|^2 = 3 + 2 sqrt(2)
    CHECK(classify_rectangular(parse_quad_scalar("sqrt(2)")).kind ==
          VerdictKind::NoRectangularCase);
    CHECK(classify_rectangular(parse_quad_scalar("sqrt(3)")).kind ==
          VerdictKind::NoRectangularCase);
    const auto skew = ExactLatticeBasis::make(ec("1", "0"), ec("0", "1+sqrt(2)"));
    CHECK(classify(skew, 3).kind == VerdictKind::NoRectangularCase);
    CHECK(classify_rectangular(parse_quad_scalar("3+2*sqrt(2)")).kind ==
          VerdictKind::NoRectangularCase);
}

TEST_CASE("min torus eigenvalue") {
    const auto square = DualBasis::make(Cx(1, 0), Cx(0, 1));
    const auto spin0 = SpinStructure::make(0, 0);
    const auto mu = min_torus_eigenvalue(square, spin0, 3.0);
    REQUIRE(mu.has_value());
    CHECK(*mu == doctest::Approx(std::sqrt(5.0)));

    CHECK_FALSE(min_torus_eigenvalue(square, spin0, 2.0).has_value());

    const auto hex = DualBasis::make(Cx(1, 0), Cx(0.5, std::sqrt(3.0) / 2.0));
    const auto hex_mu = min_torus_eigenvalue(hex, spin0, 2.0);
    REQUIRE(hex_mu.has_value());
    CHECK(*hex_mu == doctest::Approx(1.0));

    CHECK_THROWS_AS(min_torus_eigenvalue(square, spin0, -1.0), PreconditionViolated);
}

TEST_CASE("a witness sublattice really carries a 6-element spectral circle") {
    // tau^2 = p/q: the sublattice (1, i tau) has the explicit equal-length
    // vectors at mu = p + q, so spectrum_search must find a row there
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {1, 2}, {5, 1}}) {
        const double tau = std::sqrt(double(p) / q);
        const auto dual = DualBasis::make(Cx(1, 0), Cx(0, tau));
        const auto spin0 = SpinStructure::make(0, 0);
        const double target = p + q;  // |(p-q) + 2q tau i| = p + q
        const auto rows = spectrum_search(dual, spin0, target + 0.5, 6);
        bool found = false;
        for (const auto& row : rows)
            if (std::abs(row.mu - target) <= 1e-9 * target && row.cardinality >= 6) found = true;
        CHECK(found);
    }
}

TEST_CASE("degenerate exact lattices are rejected") {
    CHECK_THROWS_AS(ExactLatticeBasis::make(ec("1", "0"), ec("2", "0")), DegenerateLattice);
    CHECK_THROWS_AS(classify(ExactLatticeBasis{ec("1", "0"), ec("0", "1")}, 0),
                    PreconditionViolated);
}
