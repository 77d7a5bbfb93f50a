#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vander/errors.hpp"
#include "vander/matrix.hpp"
#include "vander/vandermonde.hpp"

using vander::Backend;
using vander::NodeVector;
using vander::Permutation;
using vander::Rational;
using vander::Scalar;
using vander::SquareMatrix;
using R = Rational;

namespace {

NodeVector nv(const std::vector<Rational>& xs) {
    return NodeVector(std::vector<Scalar>(xs.begin(), xs.end()));
}

std::vector<Scalar> vec(const std::vector<Rational>& ys) {
    return std::vector<Scalar>(ys.begin(), ys.end());
}

SquareMatrix mat(std::size_t n, const std::vector<Rational>& rows) {
    return SquareMatrix(n, std::vector<Scalar>(rows.begin(), rows.end()));
}

}  // namespace

TEST_CASE("node vector validation") {
    CHECK_THROWS_AS(NodeVector({}), vander::InvalidArgument);
    CHECK_THROWS_AS(nv({0, 1, 1}), vander::InvalidArgument);
    CHECK_THROWS_AS(nv({2, 1}), vander::InvalidArgument);
    CHECK_THROWS_WITH_AS(nv({1, 1}), doctest::Contains("strictly increasing"),
                         vander::InvalidArgument);
    CHECK_THROWS_AS(NodeVector({Scalar{Rational(0)}, Scalar{1.0}}), vander::BackendMismatch);

    NodeVector ok = nv({-1, 0, 1});
    CHECK(ok.size() == 3);
    CHECK(ok.backend() == Backend::exact);
    CHECK(ok[2].rat() == R(1));

    NodeVector f = ok.to_float();
    CHECK(f.backend() == Backend::floating);
    CHECK(f[0].flt() == -1.0);

    // nodes that collapse to the same double cannot cross to the float backend
    Scalar a{R(1, 3)};
    Scalar b{R(1, 3) + R(1, 1000000000000000000L)};
    CHECK_THROWS_AS(NodeVector({a, b}).to_float(), vander::InvalidArgument);
}

TEST_CASE("square matrix validation and identity") {
    CHECK_THROWS_AS(SquareMatrix(0, {}), vander::InvalidArgument);
    CHECK_THROWS_AS(SquareMatrix(2, vec({1, 2, 3})), vander::InvalidArgument);
    CHECK_THROWS_AS(SquareMatrix(2, {Scalar{R(1)}, Scalar{2.0}, Scalar{3.0}, Scalar{4.0}}),
                    vander::BackendMismatch);
    SquareMatrix id = SquareMatrix::identity(3, Backend::exact);
    CHECK(id == mat(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(id.at(1, 1).rat() == R(1));
    CHECK(id.at(1, 2).rat() == R(0));
}

TEST_CASE("builders lay out powers row by row") {
    // quadratic worked example, nodes -1 < 0 < 1
    CHECK(build_descending(nv({-1, 0, 1})) == mat(3, {1, -1, 1, 0, 0, 1, 1, 1, 1}));
    CHECK(build_ascending(nv({-1, 0, 1})) == mat(3, {1, -1, 1, 1, 0, 0, 1, 1, 1}));

    CHECK(build_descending(nv({1, 2, 3})) == mat(3, {1, 1, 1, 4, 2, 1, 9, 3, 1}));
    CHECK(build_ascending(nv({1, 2, 3})) == mat(3, {1, 1, 1, 1, 2, 4, 1, 3, 9}));

    // fractional nodes, highest power 3
    CHECK(build_descending(nv({-1, R(-1, 3), R(1, 3), 1})) ==
          mat(4, {-1,        1,       -1,       1,
                  R(-1, 27), R(1, 9), R(-1, 3), 1,
                  R(1, 27),  R(1, 9), R(1, 3),  1,
                  1,         1,       1,        1}));

    // a single node gives the 1x1 matrix [1] in both layouts
    CHECK(build_descending(nv({5})) == mat(1, {1}));
    CHECK(build_ascending(nv({5})) == mat(1, {1}));

    SquareMatrix fl = build_descending(nv({-1, 0, 1}).to_float());
    CHECK(fl.backend() == Backend::floating);
    CHECK(fl.at(0, 0).flt() == 1.0);
    CHECK(fl.at(0, 1).flt() == -1.0);
}

TEST_CASE("product-form determinant") {
    CHECK(det_product(nv({0})).rat() == R(1));  // empty product
    CHECK(det_product(nv({-1, 0, 1})).rat() == R(2));
    CHECK(det_product(nv({1, 2, 3, 4})).rat() == R(12));
    CHECK(det_product(nv({0, R(1, 2), 1})).rat() == R(1, 4));
    // strictly increasing nodes always give a positive determinant
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        NodeVector nodes = oracle::random_rational_nodes(rng, 2 + t % 6);
        CHECK(det_product(nodes).sign() == 1);
    }
}

TEST_CASE("elimination determinant matches the closed form and the cofactor oracle") {
    std::mt19937 rng(22);
    for (int t = 0; t < 60; ++t) {
        NodeVector nodes = oracle::random_rational_nodes(rng, 2 + t % 7);
        Scalar prod = det_product(nodes);
        CHECK(det_elimination(build_ascending(nodes)) == prod);
        CHECK(det_elimination(build_descending(nodes)) ==
              Scalar::of_int(vander::sign_relation(nodes.size()), Backend::exact) * prod);
    }
    // cofactor expansion on matrices that are not Vandermonde at all
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + t % 5;
        std::vector<Scalar> entries;
        for (std::size_t i = 0; i < n * n; ++i) entries.emplace_back(oracle::random_rational(rng));
        SquareMatrix m(n, entries);
        CHECK(det_elimination(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("elimination determinant on the float backend") {
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 4;
        std::vector<Scalar> entries;
        for (std::size_t i = 0; i < n * n; ++i) entries.emplace_back(dist(rng));
        SquareMatrix m(n, entries);
        double got = det_elimination(m).flt();
        double want = oracle::cofactor_det(m).flt();
        CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("singular matrices eliminate to a zero determinant") {
    CHECK(det_elimination(mat(2, {1, 2, 2, 4})).rat() == R(0));
    CHECK(det_elimination(mat(3, {1, 2, 3, 0, 0, 0, 4, 5, 6})).rat() == R(0));
    SquareMatrix mf(2, {Scalar{1.0}, Scalar{2.0}, Scalar{2.0}, Scalar{4.0}});
    CHECK(det_elimination(mf).flt() == 0.0);
}

TEST_CASE("sign relation between the two layouts") {
    int expect[] = {1, -1, -1, 1, 1, -1, -1, 1, 1};
    for (std::size_t n = 1; n <= 9; ++n) CHECK(vander::sign_relation(n) == expect[n - 1]);

    // it is exactly the parity of the column-reversal permutation
    for (std::size_t n = 1; n <= 9; ++n) {
        std::vector<std::size_t> image(n);
        for (std::size_t i = 0; i < n; ++i) image[i] = n - 1 - i;
        CHECK(vander::sign_relation(n) == Permutation(image).parity());
    }
}

TEST_CASE("inverse of the quadratic worked example") {
    SquareMatrix A = build_descending(nv({-1, 0, 1}));
    CHECK(det_elimination(A).rat() == R(-2));
    CHECK(invert(A) == mat(3, {R(1, 2),  -1, R(1, 2),
                               R(-1, 2), 0,  R(1, 2),
                               0,        1,  0}));
    CHECK(solve(A, vec({1, 5, 7})) == vec({-1, 3, 5}));
}

TEST_CASE("row permutation level check on the quadratic example") {
    SquareMatrix A = build_descending(nv({-1, 0, 1}));
    Permutation p({2, 1, 0});
    CHECK(p.parity() == -1);

    SquareMatrix Ap = permute_rows(A, p);
    CHECK(Ap == mat(3, {1, 1, 1, 0, 0, 1, 1, -1, 1}));
    CHECK(det_elimination(Ap).rat() == R(2));
    CHECK(invert(Ap) == mat(3, {R(1, 2), -1, R(1, 2),
                                R(1, 2), 0,  R(-1, 2),
                                0,       1,  0}));
    CHECK(invert(Ap) == permute_columns(invert(A), p));

    std::vector<Scalar> b = vec({1, 5, 7});
    std::vector<Scalar> bp = permute_vector(b, p);
    CHECK(bp == vec({7, 5, 1}));
    CHECK(solve(Ap, bp) == solve(A, b));

    SquareMatrix P = permutation_matrix(p, Backend::exact);
    CHECK(multiply(P, A) == Ap);
    CHECK(multiply(P, b) == bp);
}

TEST_CASE("printed inverses, two-node and three-node cases") {
    CHECK(invert(build_descending(nv({-1, 1}))) == mat(2, {R(-1, 2), R(1, 2), R(1, 2), R(1, 2)}));
    CHECK(invert(build_descending(nv({0, 2}))) == mat(2, {R(-1, 2), R(1, 2), 1, 0}));
    CHECK(invert(build_descending(nv({1, 2, 3}))) ==
          mat(3, {R(1, 2),  -1, R(1, 2),
                  R(-5, 2), 4,  R(-3, 2),
                  3,        -3, 1}));
    CHECK(invert(build_descending(nv({2, 3, 4}))) ==
          mat(3, {R(1, 2),  -1, R(1, 2),
                  R(-7, 2), 6,  R(-5, 2),
                  6,        -8, 3}));
}

TEST_CASE("printed inverses, four-node and five-node cases") {
    CHECK(invert(build_descending(nv({-1, 0, 1, 2}))) ==
          mat(4, {R(-1, 6), R(1, 2),  R(-1, 2), R(1, 6),
                  R(1, 2),  -1,       R(1, 2),  0,
                  R(-1, 3), R(-1, 2), 1,        R(-1, 6),
                  0,        1,        0,        0}));
    CHECK(invert(build_descending(nv({-1, R(-1, 3), R(1, 3), 1}))) ==
          mat(4, {R(-9, 16), R(27, 16),  R(-27, 16), R(9, 16),
                  R(9, 16),  R(-9, 16),  R(-9, 16),  R(9, 16),
                  R(1, 16),  R(-27, 16), R(27, 16),  R(-1, 16),
                  R(-1, 16), R(9, 16),   R(9, 16),   R(-1, 16)}));
    CHECK(invert(build_descending(nv({1, 2, 3, 4}))) ==
          mat(4, {R(-1, 6),  R(1, 2),  R(-1, 2), R(1, 6),
                  R(3, 2),   -4,       R(7, 2),  -1,
                  R(-13, 3), R(19, 2), -7,       R(11, 6),
                  4,         -6,       4,        -1}));
    CHECK(invert(build_descending(nv({-1, R(-1, 2), 0, R(1, 2), 1}))) ==
          mat(5, {R(2, 3),  R(-8, 3), 4,  R(-8, 3), R(2, 3),
                  R(-2, 3), R(4, 3),  0,  R(-4, 3), R(2, 3),
                  R(-1, 6), R(8, 3),  -5, R(8, 3),  R(-1, 6),
                  R(1, 6),  R(-4, 3), 0,  R(4, 3),  R(-1, 6),
                  0,        0,        1,  0,        0}));
    CHECK(invert(build_descending(nv({0, 1, 2, 3, 4}))) ==
          mat(5, {R(1, 24),   R(-1, 6), R(1, 4), R(-1, 6), R(1, 24),
                  R(-5, 12),  R(3, 2),  -2,      R(7, 6),  R(-1, 4),
                  R(35, 24),  R(-13, 3), R(19, 4), R(-7, 3), R(11, 24),
                  R(-25, 12), 4,        -3,      R(4, 3),  R(-1, 4),
                  1,          0,        0,       0,        0}));
}

TEST_CASE("inverse times original is the identity") {
    std::mt19937 rng(44);
    for (int t = 0; t < 20; ++t) {
        NodeVector nodes = oracle::random_rational_nodes(rng, 2 + t % 6);
        SquareMatrix A = build_descending(nodes);
        CHECK(multiply(invert(A), A) == SquareMatrix::identity(A.order(), Backend::exact));
    }
    // float inverse stays accurate on well-conditioned sizes
    SquareMatrix Af = build_descending(nv({-1, 0, 1, 2}).to_float());
    SquareMatrix prod = multiply(invert(Af), Af);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(prod.at(i, j).flt() - (i == j ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("singular input names the failing elimination stage") {
    try {
        invert(mat(2, {1, 2, 2, 4}));
        FAIL("expected SingularMatrix");
    } catch (const vander::SingularMatrix& e) {
        CHECK(e.stage == 2);
        CHECK(std::string(e.what()).find("column 2") != std::string::npos);
    }
    CHECK_THROWS_AS(solve(mat(2, {0, 0, 0, 0}), vec({1, 2})), vander::SingularMatrix);
    try {
        solve(mat(2, {0, 0, 0, 0}), vec({1, 2}));
    } catch (const vander::SingularMatrix& e) {
        CHECK(e.stage == 1);
    }
}

TEST_CASE("solve validates the right-hand side") {
    SquareMatrix A = build_descending(nv({1, 2, 3}));
    CHECK_THROWS_AS(solve(A, vec({1, 2})), vander::InvalidArgument);
    CHECK_THROWS_AS(solve(A, {Scalar{1.0}, Scalar{2.0}, Scalar{3.0}}), vander::BackendMismatch);
}

TEST_CASE("solve recovers whatever coefficients produced the data") {
    std::mt19937 rng(55);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + t % 8;
        NodeVector nodes = oracle::random_rational_nodes(rng, n);
        std::vector<Scalar> a = oracle::random_rational_values(rng, n);
        SquareMatrix A = build_descending(nodes);
        CHECK(solve(A, multiply(A, a)) == a);
    }
}

TEST_CASE("row permutations scale the determinant by the parity") {
    std::mt19937 rng(66);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + t % 5;
        NodeVector nodes = oracle::random_rational_nodes(rng, n);
        SquareMatrix B = build_ascending(nodes);
        std::vector<std::size_t> image(n);
        for (std::size_t i = 0; i < n; ++i) image[i] = i;
        std::shuffle(image.begin(), image.end(), rng);
        Permutation p(image);
        Scalar expected = Scalar::of_int(p.parity(), Backend::exact) * det_product(nodes);
        CHECK(det_elimination(permute_rows(B, p)) == expected);
    }
}

TEST_CASE("permutation machinery") {
    CHECK(Permutation::identity(4).parity() == 1);
    CHECK(Permutation({1, 0}).parity() == -1);
    CHECK(Permutation({4, 3, 2, 1, 0}).parity() == 1);  // two swaps
    CHECK(Permutation({1, 2, 0}).parity() == 1);        // 3-cycle
    CHECK_THROWS_AS(Permutation({0, 0}), vander::InvalidArgument);
    CHECK_THROWS_AS(Permutation({0, 2}), vander::InvalidArgument);

    Permutation p({2, 0, 1});
    Permutation q = p.inverse();
    for (std::size_t i = 0; i < 3; ++i) CHECK(q(p(i)) == i);

    std::vector<Scalar> v = vec({10, 20, 30});
    CHECK(permute_vector(permute_vector(v, p), q) == v);

    SquareMatrix A = build_descending(nv({1, 2, 3}));
    CHECK(permute_rows(permute_rows(A, p), q) == A);
    CHECK(permute_columns(permute_columns(A, p), q) == A);
    CHECK_THROWS_AS(permute_rows(A, Permutation({1, 0})), vander::InvalidArgument);
}
