#include "lcs/exactla.hpp"

namespace lcs {

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (data_[i][j] != 0) r[i] += data_[i][j] * v[j];
    return r;
}

std::vector<size_t> rref(RationalMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

SolutionSpace nullspace(const RationalMatrix& m) {
    RationalMatrix r = m;
    std::vector<size_t> pivots = rref(r);
    SolutionSpace space;
    space.ambient = m.cols();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
        space.basis.push_back(std::move(v));
    }
    return space;
}

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Canonical basis of the row space (nonzero rows of the RREF).
std::vector<std::vector<Rational>> row_space_basis(const std::vector<std::vector<Rational>>& rows,
                                                   size_t cols) {
    RationalMatrix m = from_rows(rows, cols);
    std::vector<size_t> pivots = rref(m);
    std::vector<std::vector<Rational>> basis;
    for (size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Rational> v(cols);
        for (size_t j = 0; j < cols; ++j) v[j] = m.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

bool contains(const SolutionSpace& s, const std::vector<Rational>& v) {
    if (v.size() != s.ambient) throw Error("contains: dimension mismatch");
    std::vector<std::vector<Rational>> rows = s.basis;
    size_t before = row_space_basis(rows, s.ambient).size();
    rows.push_back(v);
    size_t after = row_space_basis(rows, s.ambient).size();
    return after == before;
}

std::pair<SolutionSpace, SolutionSpace> sum_and_intersect(const SolutionSpace& s1,
                                                          const SolutionSpace& s2) {
    if (s1.ambient != s2.ambient) throw Error("sum_and_intersect: dimension mismatch");
    size_t n = s1.ambient;

    SolutionSpace sum;
    sum.ambient = n;
    std::vector<std::vector<Rational>> all = s1.basis;
    all.insert(all.end(), s2.basis.begin(), s2.basis.end());
    sum.basis = row_space_basis(all, n);

    // v in the intersection iff v = B1 x = B2 y; solve [B1^T | -B2^T] stacked
    // column-wise over (x, y).
    SolutionSpace inter;
    inter.ambient = n;
    size_t d1 = s1.dim(), d2 = s2.dim();
    if (d1 > 0 && d2 > 0) {
        RationalMatrix sys(n, d1 + d2);
        for (size_t j = 0; j < d1; ++j)
            for (size_t i = 0; i < n; ++i) sys.at(i, j) = s1.basis[j][i];
        for (size_t j = 0; j < d2; ++j)
            for (size_t i = 0; i < n; ++i) sys.at(i, d1 + j) = -s2.basis[j][i];
        SolutionSpace ker = nullspace(sys);
        std::vector<std::vector<Rational>> vecs;
        for (const auto& xy : ker.basis) {
            std::vector<Rational> v(n, Rational(0));
            for (size_t j = 0; j < d1; ++j)
                for (size_t i = 0; i < n; ++i) v[i] += xy[j] * s1.basis[j][i];
            vecs.push_back(std::move(v));
        }
        inter.basis = row_space_basis(vecs, n);
    }
    return {sum, inter};
}

}  // namespace lcs
