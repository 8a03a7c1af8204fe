#pragma once

#include <string>
#include <vector>

#include "orderlab/rational.hpp"

namespace orderlab {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense square matrix over Rational, row-major. Dimensions stay small
/// (n <= 6), so no sparse or fraction-free machinery.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n);
  SquareMatrix(int n, std::vector<Rational> entries);

  static SquareMatrix identity(int n);

  int dim() const { return n_; }

  const Rational& at(int row, int col) const { return entries_[row * n_ + col]; }
  Rational& at(int row, int col) { return entries_[row * n_ + col]; }

  bool isIdentity() const;
  bool isIntegral() const;

  SquareMatrix transpose() const;
  Rational determinant() const;

  /// Classical adjugate (transpose of cofactors); adj(M) * M = det(M) * I.
  SquareMatrix adjugate() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) {
    return !(a == b);
  }

  /// Canonical serialization, usable as a hash/dedup key.
  std::string key() const;

 private:
  int n_;
  std::vector<Rational> entries_;
};

/// Element of SL(n): determinant checked to be exactly 1 on construction.
class SpecialLinearElement {
 public:
  explicit SpecialLinearElement(SquareMatrix matrix);

  static SpecialLinearElement identity(int n);

  const SquareMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.dim(); }

  SpecialLinearElement inverse() const;
  SpecialLinearElement pow(long exponent) const;

  friend SpecialLinearElement operator*(const SpecialLinearElement& a,
                                        const SpecialLinearElement& b);
  friend bool operator==(const SpecialLinearElement& a,
                         const SpecialLinearElement& b) {
    return a.matrix_ == b.matrix_;
  }
  friend bool operator!=(const SpecialLinearElement& a,
                         const SpecialLinearElement& b) {
    return !(a == b);
  }

 private:
  SquareMatrix matrix_;
};

/// a^-1 b^-1 a b.
SpecialLinearElement commutator(const SpecialLinearElement& a,
                                const SpecialLinearElement& b);

/// Unipotent elementary matrix E_ij(t): ones on the diagonal, t at (i, j).
/// Row and column indices are 1-based, matching the usual E_ij notation.
struct ElementaryMatrix {
  int n = 3;
  int i = 1;
  int j = 2;
  Rational t;

  ElementaryMatrix(int n, int i, int j, Rational t);

  SquareMatrix realization() const;
  SpecialLinearElement element() const;
  ElementaryMatrix inverse() const { return ElementaryMatrix(n, i, j, -t); }
};

}  // namespace orderlab
