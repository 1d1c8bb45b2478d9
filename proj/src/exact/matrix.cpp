#include "prymlab/exact/matrix.hpp"

namespace prymlab::exact {

Matrix Matrix::rref() const {
    Matrix m = *this;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t piv = r;
        while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = m.at(r, c).inv();
        for (size_t j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (size_t j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return m;
}

int Matrix::rank() const {
    Matrix m = rref();
    int rk = 0;
    for (size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < cols_; ++j)
            if (!m.at(i, j).is_zero()) { nonzero = true; break; }
        if (nonzero) ++rk;
    }
    return rk;
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
    Matrix m = rref();
    std::vector<long> pivot_of_col(cols_, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        if (!m.at(r, c).is_zero()) {
            pivot_of_col[c] = static_cast<long>(r);
            ++r;
        }
    }
    std::vector<std::vector<Scalar>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] != -1) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(dom_, p_));
        v[c] = Scalar::one(dom_, p_);
        for (size_t j = 0; j < cols_; ++j) {
            if (pivot_of_col[j] == -1) continue;
            v[j] = -m.at(static_cast<size_t>(pivot_of_col[j]), c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::reduce_mod(fp::u64 p) const {
    Matrix m(rows_, cols_, Domain::Fp, p);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).reduce_mod(p);
    return m;
}

} // namespace prymlab::exact
