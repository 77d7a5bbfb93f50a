#ifndef VANDER_VANDERMONDE_HPP
#define VANDER_VANDERMONDE_HPP

#include "vander/matrix.hpp"

namespace vander {

// Row i carries the powers of node x_i. "Descending" puts the highest power
// first (entry (i,j) = x_i^(n-1-j), last column all ones), which matches
// coefficient vectors ordered a_n..a_0; "ascending" is the reverse layout
// (entry (i,j) = x_i^j, first column all ones).
SquareMatrix build_descending(const NodeVector& nodes);
SquareMatrix build_ascending(const NodeVector& nodes);

// Determinant of the ascending matrix by its closed product form,
// prod_{i<j} (x_j - x_i). Never zero for a valid NodeVector.
Scalar det_product(const NodeVector& nodes);

// Determinant of an arbitrary square matrix by Gaussian elimination with row
// swaps (partial pivoting on the float backend, first nonzero pivot on the
// exact backend). Returns zero for singular input.
Scalar det_elimination(const SquareMatrix& m);

// Sign relating the two layouts: det(descending) = sign_relation(n) *
// det(ascending). Reversing n columns takes floor(n/2) transpositions.
int sign_relation(std::size_t order);

// Gauss-Jordan inverse. Throws SingularMatrix (naming the failing stage) when
// a pivot column is zero.
SquareMatrix invert(const SquareMatrix& m);

// Solves m * x = rhs by forward elimination and back substitution, without
// forming the inverse. Same pivoting and singularity behaviour as invert.
std::vector<Scalar> solve(const SquareMatrix& m, const std::vector<Scalar>& rhs);

}  // namespace vander

#endif
