#include "orderlab/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace orderlab {

SquareMatrix::SquareMatrix(int n) : n_(n), entries_(n * n) {
  if (n < 2) throw std::invalid_argument("matrix: dimension must be >= 2");
}

SquareMatrix::SquareMatrix(int n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 2) throw std::invalid_argument("matrix: dimension must be >= 2");
  if (entries_.size() != static_cast<size_t>(n) * n)
    throw DimensionMismatch("matrix: entry count does not match dimension");
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool SquareMatrix::isIdentity() const {
  return *this == identity(n_);
}

bool SquareMatrix::isIntegral() const {
  for (const auto& e : entries_)
    if (!e.isInteger()) return false;
  return true;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Rational SquareMatrix::determinant() const {
  // Exact Gaussian elimination with row swaps (sign tracked).
  SquareMatrix work = *this;
  Rational det(1);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row) {
      if (!work.at(row, col).isZero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n_; ++j)
        std::swap(work.at(pivot, j), work.at(col, j));
      det = -det;
    }
    det *= work.at(col, col);
    for (int row = col + 1; row < n_; ++row) {
      if (work.at(row, col).isZero()) continue;
      Rational factor = work.at(row, col) / work.at(col, col);
      for (int j = col; j < n_; ++j)
        work.at(row, j) -= factor * work.at(col, j);
    }
  }
  return det;
}

namespace {

SquareMatrix minorOf(const SquareMatrix& m, int dropRow, int dropCol) {
  const int n = m.dim();
  SquareMatrix out(n - 1 >= 2 ? n - 1 : 2);
  if (n - 1 < 2) throw std::logic_error("matrix: minor below dimension 2");
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == dropRow) continue;
    int c = 0;
    for (int j = 0; j < n; ++j) {
      if (j == dropCol) continue;
      out.at(r, c) = m.at(i, j);
      ++c;
    }
    ++r;
  }
  return out;
}

Rational det2(const SquareMatrix& m, int r0, int r1, int c0, int c1) {
  return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
}

}  // namespace

SquareMatrix SquareMatrix::adjugate() const {
  SquareMatrix cof(n_);
  if (n_ == 2) {
    cof.at(0, 0) = at(1, 1);
    cof.at(0, 1) = -at(1, 0);
    cof.at(1, 0) = -at(0, 1);
    cof.at(1, 1) = at(0, 0);
    return cof.transpose();
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Rational d;
      if (n_ == 3) {
        int r0 = i == 0 ? 1 : 0;
        int r1 = i == 2 ? 1 : 2;
        int c0 = j == 0 ? 1 : 0;
        int c1 = j == 2 ? 1 : 2;
        d = det2(*this, r0, r1, c0, c1);
      } else {
        d = minorOf(*this, i, j).determinant();
      }
      cof.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  }
  return cof.transpose();
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_)
    throw DimensionMismatch("matrix: dimensions differ in product");
  SquareMatrix out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    for (int k = 0; k < a.n_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.isZero()) continue;
      for (int j = 0; j < a.n_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

std::string SquareMatrix::key() const {
  std::ostringstream out;
  out << n_;
  for (const auto& e : entries_) out << ';' << e.str();
  return out.str();
}

SpecialLinearElement::SpecialLinearElement(SquareMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.determinant() != Rational(1))
    throw std::invalid_argument("special linear element: determinant is not 1");
}

SpecialLinearElement SpecialLinearElement::identity(int n) {
  return SpecialLinearElement(SquareMatrix::identity(n));
}

SpecialLinearElement SpecialLinearElement::inverse() const {
  // det = 1, so the adjugate is the exact inverse.
  return SpecialLinearElement(matrix_.adjugate());
}

SpecialLinearElement SpecialLinearElement::pow(long exponent) const {
  SpecialLinearElement base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  SpecialLinearElement acc = identity(dim());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

SpecialLinearElement operator*(const SpecialLinearElement& a,
                               const SpecialLinearElement& b) {
  return SpecialLinearElement(a.matrix_ * b.matrix_);
}

SpecialLinearElement commutator(const SpecialLinearElement& a,
                                const SpecialLinearElement& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("commutator: dimensions differ");
  return a.inverse() * b.inverse() * a * b;
}

ElementaryMatrix::ElementaryMatrix(int n_, int i_, int j_, Rational t_)
    : n(n_), i(i_), j(j_), t(std::move(t_)) {
  if (i == j) throw std::invalid_argument("elementary matrix: i == j");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("elementary matrix: index out of range");
}

SquareMatrix ElementaryMatrix::realization() const {
  SquareMatrix m = SquareMatrix::identity(n);
  m.at(i - 1, j - 1) = t;
  return m;
}

SpecialLinearElement ElementaryMatrix::element() const {
  return SpecialLinearElement(realization());
}

}  // namespace orderlab
