#ifndef PRYMLAB_EXACT_MATRIX_HPP
#define PRYMLAB_EXACT_MATRIX_HPP

#include <vector>

#include "prymlab/exact/scalar.hpp"

namespace prymlab::exact {

// Dense matrix over Scalar (field operations: Q or F_p).
// rank + kernel_dimension == cols always.
class Matrix {
public:
    Matrix(size_t rows, size_t cols, Domain dom, fp::u64 p = 0)
        : rows_(rows), cols_(cols), dom_(dom), p_(p),
          a_(rows * cols, Scalar::zero(dom, p)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Matrix rref() const;
    int rank() const;
    int kernel_dimension() const { return static_cast<int>(cols_) - rank(); }
    std::vector<std::vector<Scalar>> kernel_basis() const;
    Matrix reduce_mod(fp::u64 p) const;

private:
    size_t rows_, cols_;
    Domain dom_;
    fp::u64 p_;
    std::vector<Scalar> a_;
};

} // namespace prymlab::exact

#endif
