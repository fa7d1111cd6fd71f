#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kadj/rational.hpp"

namespace kadj {

// Dense row-major matrix over the rationals. Values are immutable in spirit:
// all operations below are pure functions returning fresh matrices.
struct QMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::vector<Rational> row(std::size_t r) const {
        return std::vector<Rational>(data.begin() + static_cast<long>(r * cols),
                                     data.begin() + static_cast<long>((r + 1) * cols));
    }

    bool operator==(const QMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rws, std::size_t ncols);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rws);
    // Convenience for tests and fixtures.
    static QMatrix of_ints(std::initializer_list<std::initializer_list<long long>> rws);
};

struct RrefResult {
    QMatrix rref;                          // same shape as the input
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

QMatrix mul(const QMatrix& a, const QMatrix& b);
std::vector<Rational> matvec(const QMatrix& a, const std::vector<Rational>& v);
QMatrix transpose(const QMatrix& a);
QMatrix stack(const QMatrix& top, const QMatrix& bottom);
QMatrix submatrix(const QMatrix& m, const std::vector<std::size_t>& row_set,
                  const std::vector<std::size_t>& col_set);

// Reduced row echelon form; canonical for a fixed row space.
RrefResult rref(const QMatrix& m);

// The nonzero rows of the RREF: the canonical basis matrix of the row space.
QMatrix rref_basis(const QMatrix& m);

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. det of the empty 0x0 matrix is 1.
Rational det(const QMatrix& m);

// Determinant of the submatrix picked by row_set x col_set, indices taken in
// increasing order.
Rational minor_det(const QMatrix& m, const std::vector<std::size_t>& row_set,
                   const std::vector<std::size_t>& col_set);

std::size_t rank_of(const QMatrix& m);

// Rows form a canonical basis of the right kernel {x : m x^T = 0}, derived
// from the RREF free columns; row count = cols - rank.
QMatrix kernel_basis(const QMatrix& m);

} // namespace kadj
