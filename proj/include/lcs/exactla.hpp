#pragma once

#include <utility>
#include <vector>

#include "lcs/poly.hpp"

namespace lcs {

/// Dense matrix over exact rationals.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows, std::vector<Rational>(cols, Rational(0))) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return data_[i][j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i][j]; }

    std::vector<Rational> multiply(const std::vector<Rational>& v) const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> data_;
};

/// A rational subspace given by an exact basis. An empty basis encodes the
/// zero space.
struct SolutionSpace {
    size_t ambient = 0;
    std::vector<std::vector<Rational>> basis;

    size_t dim() const { return basis.size(); }
};

/// Reduced row echelon form, in place. Pivot rule: first nonzero column,
/// then smallest row index. Returns the pivot columns.
std::vector<size_t> rref(RationalMatrix& m);

/// Exact basis of {v : Mv = 0}. Basis vectors come from the standard
/// free-variable parametrization of the RREF, so output is deterministic.
SolutionSpace nullspace(const RationalMatrix& m);

/// True iff v lies in the span of S's basis. Throws on dimension mismatch.
bool contains(const SolutionSpace& s, const std::vector<Rational>& v);

/// Exact sum and intersection of two subspaces of the same ambient space.
std::pair<SolutionSpace, SolutionSpace> sum_and_intersect(const SolutionSpace& s1,
                                                          const SolutionSpace& s2);

}  // namespace lcs
