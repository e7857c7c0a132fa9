#pragma once

#include <gmpxx.h>

#include <vector>

#include "cayleynut/graph.hpp"

namespace cayleynut {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Integer& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Integer& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

private:
    int rows_;
    int cols_;
    std::vector<Integer> entries_;
};

// Symmetric 0/1 adjacency matrix of g, zero diagonal.
IntMatrix adjacency_matrix(const Graph& g);

// Exact matrix-vector product; throws std::invalid_argument on a dimension
// mismatch. Used to independently re-verify every kernel certificate.
RationalVector matvec(const IntMatrix& m, const RationalVector& v);

bool is_zero_vector(const RationalVector& v);

// True iff every entry is nonzero.
bool is_full_vector(const RationalVector& v);

// Scales v so that all entries are coprime integers and the first nonzero
// entry is positive. The zero vector is returned unchanged.
RationalVector canonicalize(RationalVector v);

// Exact canonical basis of {v : Mv = 0}. The vectors, stacked as rows, are
// in reduced row echelon form over Q, each then scaled to coprime integer
// entries with positive leading entry; this basis is unique, independent of
// pivoting order.
struct KernelBasis {
    std::vector<RationalVector> vectors;
    int nullity = 0;
};

KernelBasis kernel_basis(const IntMatrix& m);

// Rank over Q, by exact rational elimination.
int rank(const IntMatrix& m);

}  // namespace cayleynut
