#ifndef VANDER_MATRIX_HPP
#define VANDER_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "vander/scalar.hpp"

namespace vander {

// Strictly increasing interpolation nodes, all on one backend. Construction
// validates; afterwards the contents are immutable.
class NodeVector {
public:
    explicit NodeVector(std::vector<Scalar> nodes);

    std::size_t size() const { return xs_.size(); }
    const Scalar& operator[](std::size_t i) const { return xs_[i]; }
    Backend backend() const { return xs_.front().backend(); }
    const std::vector<Scalar>& values() const { return xs_; }

    auto begin() const { return xs_.begin(); }
    auto end() const { return xs_.end(); }

    // Same nodes converted with to_double (exact nodes stay strictly
    // increasing unless two of them round to the same double, which throws).
    NodeVector to_float() const;

private:
    std::vector<Scalar> xs_;
};

// Dense square matrix over a single backend, row-major, immutable after
// construction. Row/column indices are 0-based.
class SquareMatrix {
public:
    SquareMatrix(std::size_t order, std::vector<Scalar> row_major);
    static SquareMatrix identity(std::size_t order, Backend b);

    std::size_t order() const { return n_; }
    Backend backend() const { return e_.front().backend(); }
    const Scalar& at(std::size_t row, std::size_t col) const {
        return e_[row * n_ + col];
    }
    const std::vector<Scalar>& entries() const { return e_; }

private:
    std::size_t n_;
    std::vector<Scalar> e_;
};

bool operator==(const SquareMatrix& a, const SquareMatrix& b);

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b);
std::vector<Scalar> multiply(const SquareMatrix& a, const std::vector<Scalar>& v);

// A bijection of {0, ..., n-1}; image(i) is where index i goes.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    Permutation inverse() const;

    // +1 for even permutations, -1 for odd ones (counted by cycle structure).
    int parity() const;

private:
    std::vector<std::size_t> image_;
};

// Row i of the result is row p(i) of m; column j of the result is column p(j).
SquareMatrix permute_rows(const SquareMatrix& m, const Permutation& p);
SquareMatrix permute_columns(const SquareMatrix& m, const Permutation& p);
std::vector<Scalar> permute_vector(const std::vector<Scalar>& v, const Permutation& p);

// The permutation matrix P with P*m == permute_rows(m, p).
SquareMatrix permutation_matrix(const Permutation& p, Backend b);

}  // namespace vander

#endif
