#pragma once

// Dense linear algebra over the field of rational functions in u.

#include <vector>

#include "rsos/ratfunc.hpp"

namespace rsos {

using RVector = std::vector<RatFunc>;
using RMatrix = std::vector<RVector>; // row major

/// Reduced row echelon form; pivots[i] is the pivot column of row i.
struct RowEchelon {
    RMatrix rows;
    std::vector<int> pivots;
};

RowEchelon row_reduce(RMatrix a, int ncols);
int rank(const RMatrix& a, int ncols);

/// Basis of {x : a x = 0}, one vector per free column, with a 1 in that column.
std::vector<RVector> nullspace(const RMatrix& a, int ncols);

enum class SolveStatus { unique, none, multiple };

struct LinearSolution {
    SolveStatus status = SolveStatus::none;
    RVector x; // a particular solution unless status == none
};

/// Solves a x = b.
LinearSolution solve(const RMatrix& a, const RVector& b, int ncols);

/// Inverse of a square nonsingular matrix (NoSolution when singular).
RMatrix inverse(const RMatrix& a);

RVector mat_vec(const RMatrix& a, const RVector& x);

/// Grows a set of linearly independent rows one at a time.
class IndependentRows {
public:
    explicit IndependentRows(int ncols) : ncols_(ncols) {}
    /// Adds the row if it is independent of the current set.
    bool add(const RVector& row);
    int size() const { return static_cast<int>(ech_.size()); }

private:
    int ncols_;
    RMatrix ech_;
    std::vector<int> piv_;
};

} // namespace rsos
