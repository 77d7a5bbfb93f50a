#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vander/errors.hpp"
#include "vander/functions.hpp"
#include "vander/grid.hpp"
#include "vander/interp.hpp"
#include "vander/polynomial.hpp"

using vander::Backend;
using vander::NodeVector;
using vander::Polynomial;
using vander::Rational;
using vander::SampleSet;
using vander::Scalar;
using R = Rational;

namespace {

std::vector<Scalar> vec(const std::vector<Rational>& ys) {
    return std::vector<Scalar>(ys.begin(), ys.end());
}

SampleSet set_q(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    return SampleSet(NodeVector(vec(xs)), vec(ys));
}

Polynomial poly_q(const std::vector<Rational>& cs) { return Polynomial(vec(cs)); }

}  // namespace

TEST_CASE("polynomial construction and coefficient access") {
    Polynomial p = poly_q({3, 1, -2, 2});
    CHECK(p.degree() == 3);
    CHECK(p.backend() == Backend::exact);
    CHECK(p.coeff(3).rat() == R(3));
    CHECK(p.coeff(0).rat() == R(2));
    CHECK(p.coeff(7).rat() == R(0));  // above the formal degree
    CHECK(p.descending() == vec({3, 1, -2, 2}));
    CHECK_THROWS_AS(Polynomial({}), vander::InvalidArgument);
    CHECK_THROWS_AS(Polynomial({Scalar{R(1)}, Scalar{2.0}}), vander::BackendMismatch);
}

TEST_CASE("horner evaluation") {
    Polynomial p = poly_q({3, 1, -2, 2});  // 3x^3 + x^2 - 2x + 2
    CHECK(p(Scalar{R(1)}).rat() == R(4));
    CHECK(p(Scalar{R(2)}).rat() == R(26));
    CHECK(p(Scalar{R(3)}).rat() == R(86));
    CHECK(p(Scalar{R(4)}).rat() == R(202));
    CHECK(p(Scalar{R(1, 2)}).rat() == R(13, 8));
    CHECK(vander::evaluate(p, Scalar{R(0)}).rat() == R(2));
    CHECK_THROWS_AS(p(Scalar{1.0}), vander::BackendMismatch);

    Polynomial pf = p.to_float();
    CHECK(pf.backend() == Backend::floating);
    CHECK(pf(Scalar{2.0}).flt() == 26.0);
}

TEST_CASE("display form spells out zero terms") {
    CHECK(vander::polynomial_str(poly_q({0, 3, 1, -2, 2})) == "0x^4 + 3x^3 + x^2 - 2x + 2");
    CHECK(vander::polynomial_str(poly_q({1, 0, 0, 0, 2})) == "x^4 + 0x^3 + 0x^2 + 0x + 2");
    CHECK(vander::polynomial_str(poly_q({-1, 3, 5})) == "-x^2 + 3x + 5");
    CHECK(vander::polynomial_str(poly_q({R(10, 9), 0, R(17, 9)})) == "10/9x^2 + 0x + 17/9");
    CHECK(vander::polynomial_str(poly_q({0})) == "0");
    CHECK(vander::polynomial_str(poly_q({5})) == "5");
    CHECK(vander::polynomial_str(Polynomial({Scalar{1.5}, Scalar{-0.25}})) == "1.5x - 0.25");
}

TEST_CASE("effective degree drops trailing zero coefficients") {
    auto d = effective_degree(poly_q({0, 0, 1, 3}));
    CHECK(d.formal == 3);
    CHECK(d.effective == 1);
    CHECK(effective_degree(poly_q({0, 3})).effective == 0);
    CHECK(effective_degree(poly_q({0})).effective == 0);  // zero polynomial
    CHECK(effective_degree(poly_q({0, 3, 1, -2, 2})).effective == 3);
    // exact zero test ignores the tolerance argument
    CHECK(effective_degree(poly_q({R(1, 1000000000L), 1}), 0.5).effective == 1);

    Polynomial tiny({Scalar{1e-12}, Scalar{1.0}, Scalar{2.0}});
    CHECK(effective_degree(tiny).effective == 1);  // default 1e-7 * max|c|
    CHECK(effective_degree(tiny).tolerance == doctest::Approx(2e-7));
    CHECK(effective_degree(tiny, 0.0).effective == 2);
    CHECK(effective_degree(tiny, 1e-3).effective == 1);
}

TEST_CASE("fits reproduce the linear worked example") {
    CHECK(fit(set_q({-1, 1}, {2, 4})).descending() == vec({1, 3}));
    CHECK(fit(set_q({0, 2}, {3, 5})).descending() == vec({1, 3}));
    CHECK(fit(set_q({-1, 0, 1}, {2, 3, 4})).descending() == vec({0, 1, 3}));
    CHECK(fit(set_q({-1, 0, 1, 2}, {2, 3, 4, 5})).descending() == vec({0, 0, 1, 3}));
}

TEST_CASE("fits reproduce the quartic worked example") {
    CHECK(fit(set_q({-1, 1}, {3, 3})).descending() == vec({0, 3}));
    CHECK(fit(set_q({-1, 0, 1}, {3, 2, 3})).descending() == vec({1, 0, 2}));
    CHECK(fit(set_q({-1, R(-1, 3), R(1, 3), 1}, {3, R(163, 81), R(163, 81), 3})).descending() ==
          vec({0, R(10, 9), 0, R(17, 9)}));
    CHECK(fit(set_q({-1, R(-1, 2), 0, R(1, 2), 1}, {3, R(33, 16), 2, R(33, 16), 3})).descending() ==
          vec({1, 0, 0, 0, 2}));
}

TEST_CASE("fits reproduce the unknown-degree worked example") {
    CHECK(fit(set_q({1, 2, 3}, {4, 26, 86})).descending() == vec({19, -35, 20}));
    CHECK(fit(set_q({2, 3, 4}, {26, 86, 202})).descending() == vec({28, -80, 74}));
    CHECK(fit(set_q({1, 2, 3, 4}, {4, 26, 86, 202})).descending() == vec({3, 1, -2, 2}));
    CHECK(fit(set_q({0, 1, 2, 3}, {2, 4, 26, 86})).descending() == vec({3, 1, -2, 2}));
    CHECK(fit(set_q({0, 1, 2, 3, 4}, {2, 4, 26, 86, 202})).descending() == vec({0, 3, 1, -2, 2}));
}

TEST_CASE("a single sample fits a constant") {
    Polynomial p = fit(set_q({2}, {5}));
    CHECK(p.degree() == 0);
    CHECK(p.coeff(0).rat() == R(5));
}

TEST_CASE("fitting a sampled polynomial returns its exact coefficients") {
    std::mt19937 rng(77);
    for (int t = 0; t < 25; ++t) {
        std::size_t terms = 1 + t % 9;
        Polynomial p(oracle::random_rational_values(rng, terms));
        NodeVector nodes = oracle::random_rational_nodes(rng, terms + t % 3);
        SampleSet s = sample(vander::poly_fn(p), nodes);
        Polynomial fitted = fit(s);
        // padded with zero leading coefficients when extra nodes were used
        for (std::size_t k = 0; k <= fitted.degree(); ++k)
            CHECK(fitted.coeff(k) == p.coeff(k));
        CHECK(node_residual(fitted, s) == 0.0);
    }
}

TEST_CASE("fit agrees with the Lagrange oracle on the exact backend") {
    std::mt19937 rng(88);
    for (int t = 0; t < 20; ++t) {
        SampleSet s(oracle::random_rational_nodes(rng, 2 + t % 7),
                    oracle::random_rational_values(rng, 2 + t % 7));
        Polynomial p = fit(s);
        for (int k = 0; k < 10; ++k) {
            Scalar x{oracle::random_rational(rng)};
            CHECK(p(x) == oracle::lagrange_eval(s, x));
        }
    }
}

TEST_CASE("fit agrees with the Lagrange oracle on the float backend") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> pt(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        SampleSet exact(oracle::random_rational_nodes(rng, 2 + t % 7),
                        oracle::random_rational_values(rng, 2 + t % 7));
        NodeVector fnodes = exact.nodes().to_float();
        std::vector<Scalar> fvals;
        for (const Scalar& y : exact.values()) fvals.emplace_back(y.to_double());
        SampleSet s(fnodes, fvals);
        Polynomial p = fit(s);
        for (int k = 0; k < 10; ++k) {
            Scalar x{pt(rng)};
            double got = p(x).flt();
            double want = oracle::lagrange_eval(s, x).flt();
            CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("float fits stay close on the quartic data") {
    SampleSet s(NodeVector({Scalar{-1.0}, Scalar{0.0}, Scalar{1.0}}),
                {Scalar{3.0}, Scalar{2.0}, Scalar{3.0}});
    Polynomial p = fit(s);
    CHECK(p.coeff(2).flt() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.coeff(1).flt() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.coeff(0).flt() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(node_residual(p, s) <= 1e-12);
}

TEST_CASE("degree probe flags a wrong degree and confirms the right one") {
    Polynomial cubic = poly_q({3, 1, -2, 2});
    auto f = vander::poly_fn(cubic);
    Scalar a{R(0)}, b{R(4)};

    auto wrong = degree_probe(f, a, b, 2, 2);
    CHECK_FALSE(wrong.consistent);
    REQUIRE(wrong.node_sets.size() == 2);
    CHECK(wrong.node_sets[0].values() == vec({1, 2, 3}));
    CHECK(wrong.node_sets[1].values() == vec({2, 3, 4}));
    REQUIRE(wrong.fits.size() == 2);
    CHECK(wrong.fits[0].descending() == vec({19, -35, 20}));
    CHECK(wrong.fits[1].descending() == vec({28, -80, 74}));

    auto right = degree_probe(f, a, b, 3, 2);
    CHECK(right.consistent);
    CHECK(right.fits[0].descending() == vec({3, 1, -2, 2}));
    CHECK(right.fits[1].descending() == vec({3, 1, -2, 2}));

    // probing above the true degree stays consistent, with zero padding
    auto above = degree_probe(f, a, b, 4, 3);
    CHECK(above.consistent);
    CHECK(above.fits[0].descending() == vec({0, 3, 1, -2, 2}));
}

TEST_CASE("degree probe on the linear example") {
    auto f = vander::poly_fn(poly_q({1, 3}));
    auto probe = degree_probe(f, Scalar{R(-1)}, Scalar{R(4)}, 1, 2);
    CHECK(probe.consistent);
    CHECK(probe.fits[0].descending() == vec({1, 3}));
    CHECK(probe.fits[1].descending() == vec({1, 3}));
}

TEST_CASE("degree probe validates its arguments") {
    auto f = vander::poly_fn(poly_q({1, 0}));
    CHECK_THROWS_AS(degree_probe(f, Scalar{R(0)}, Scalar{R(1)}, 1, 1), vander::InvalidArgument);
    CHECK_THROWS_AS(degree_probe(f, Scalar{R(1)}, Scalar{R(0)}, 1, 2), vander::InvalidArgument);
}

TEST_CASE("degree probe works on the float backend") {
    auto f = vander::force_float(vander::poly_fn(poly_q({3, 1, -2, 2})));
    auto probe = degree_probe(f, Scalar{0.0}, Scalar{4.0}, 3, 3);
    CHECK(probe.consistent);
    CHECK(probe.fits[0].coeff(3).flt() == doctest::Approx(3.0).epsilon(1e-9));
}
