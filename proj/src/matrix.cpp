#include "kadj/matrix.hpp"

#include <algorithm>
#include <string>

#include "kadj/error.hpp"

namespace kadj {

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rws, std::size_t ncols) {
    QMatrix m(rws.size(), ncols);
    for (std::size_t i = 0; i < rws.size(); ++i) {
        if (rws[i].size() != ncols)
            throw DimensionError("row " + std::to_string(i) + " has length " +
                                 std::to_string(rws[i].size()) + ", expected " +
                                 std::to_string(ncols));
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rws) {
    if (rws.empty()) throw DimensionError("cannot infer column count from an empty row list");
    return from_rows(rws, rws[0].size());
}

QMatrix QMatrix::of_ints(std::initializer_list<std::initializer_list<long long>> rws) {
    std::vector<std::vector<Rational>> v;
    for (const auto& r : rws) {
        std::vector<Rational> row;
        for (long long x : r) row.emplace_back(x);
        v.push_back(std::move(row));
    }
    return from_rows(v);
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols != b.rows) throw DimensionError("matrix product shape mismatch");
    QMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::vector<Rational> matvec(const QMatrix& a, const std::vector<Rational>& v) {
    if (a.cols != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Rational> out(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0) out[i] += a.at(i, j) * v[j];
    return out;
}

QMatrix transpose(const QMatrix& a) {
    QMatrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

QMatrix stack(const QMatrix& top, const QMatrix& bottom) {
    if (top.cols != bottom.cols) throw DimensionError("stack: column counts differ");
    QMatrix s(top.rows + bottom.rows, top.cols);
    std::copy(top.data.begin(), top.data.end(), s.data.begin());
    std::copy(bottom.data.begin(), bottom.data.end(),
              s.data.begin() + static_cast<long>(top.data.size()));
    return s;
}

QMatrix submatrix(const QMatrix& m, const std::vector<std::size_t>& row_set,
                  const std::vector<std::size_t>& col_set) {
    for (std::size_t r : row_set)
        if (r >= m.rows) throw DimensionError("row index " + std::to_string(r) + " out of range");
    for (std::size_t c : col_set)
        if (c >= m.cols) throw DimensionError("column index " + std::to_string(c) + " out of range");
    QMatrix s(row_set.size(), col_set.size());
    for (std::size_t i = 0; i < row_set.size(); ++i)
        for (std::size_t j = 0; j < col_set.size(); ++j) s.at(i, j) = m.at(row_set[i], col_set[j]);
    return s;
}

RrefResult rref(const QMatrix& m) {
    RrefResult res;
    res.rref = m;
    QMatrix& a = res.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a.at(p, c) == 0) ++p;
        if (p == a.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        Rational inv = Rational(1) / a.at(r, c);
        for (std::size_t j = c; j < a.cols; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (std::size_t j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

QMatrix rref_basis(const QMatrix& m) {
    RrefResult r = rref(m);
    QMatrix b(r.rank, m.cols);
    std::copy(r.rref.data.begin(), r.rref.data.begin() + static_cast<long>(r.rank * m.cols),
              b.data.begin());
    return b;
}

Rational det(const QMatrix& m) {
    if (m.rows != m.cols)
        throw DimensionError("determinant of non-square " + std::to_string(m.rows) + "x" +
                             std::to_string(m.cols) + " matrix");
    const std::size_t n = m.rows;
    if (n == 0) return Rational(1);

    // Clear denominators row by row; track the total scale factor.
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, den(m.at(i, j)));
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = m.at(i, j);
            a[i * n + j] = num(q) * (l / den(q));
        }
    }

    // Bareiss: every division below is exact.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    return Rational(a[n * n - 1] * sign) / Rational(scale);
}

Rational minor_det(const QMatrix& m, const std::vector<std::size_t>& row_set,
                   const std::vector<std::size_t>& col_set) {
    if (row_set.size() != col_set.size())
        throw DimensionError("minor: row set size " + std::to_string(row_set.size()) +
                             " != column set size " + std::to_string(col_set.size()));
    std::vector<std::size_t> rs = row_set, cs = col_set;
    std::sort(rs.begin(), rs.end());
    std::sort(cs.begin(), cs.end());
    return det(submatrix(m, rs, cs));
}

std::size_t rank_of(const QMatrix& m) { return rref(m).rank; }

QMatrix kernel_basis(const QMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
    QMatrix k(m.cols - r.rank, m.cols);
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        k.at(out, f) = 1;
        for (std::size_t j = 0; j < r.rank; ++j) k.at(out, r.pivot_columns[j]) = -r.rref.at(j, f);
        ++out;
    }
    return k;
}

} // namespace kadj
