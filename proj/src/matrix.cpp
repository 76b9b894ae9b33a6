#include "hp/matrix.hpp"

#include <algorithm>

namespace hp {

ExactMatrix::ExactMatrix(int rows, int cols, ThetaMode mode)
    : rows_(rows), cols_(cols), mode_(mode),
      e_(static_cast<size_t>(rows) * cols, FieldScalar::rational(Rational(0), mode)) {}

ExactMatrix ExactMatrix::identity(int n, ThetaMode mode) {
  ExactMatrix m(n, n, mode);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldScalar::rational(Rational(1), mode);
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  ExactMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  ExactMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  ExactMatrix r(rows_, o.cols_, mode_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const FieldScalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return r;
}

ExactMatrix ExactMatrix::scaled(const FieldScalar& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

ExactMatrix ExactMatrix::pow(unsigned m) const {
  if (rows_ != cols_) throw Error("matrix power of non-square matrix");
  ExactMatrix acc = identity(rows_, mode_);
  ExactMatrix base = *this;
  while (m > 0) {
    if (m & 1u) acc = acc * base;
    base = base * base;
    m >>= 1u;
  }
  return acc;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_, mode_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

FieldScalar ExactMatrix::trace() const {
  if (rows_ != cols_) throw Error("trace of non-square matrix");
  FieldScalar t = FieldScalar::rational(Rational(0), mode_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

UPoly charpoly(const ExactMatrix& m, int symbolic_cap) {
  if (m.rows() != m.cols()) throw Error("charpoly of non-square matrix");
  int n = m.rows();
  if (m.mode() == ThetaMode::symbolic && n > symbolic_cap) {
    throw Error("symbolic dimension cap exceeded (" + std::to_string(n) + " > " +
                std::to_string(symbolic_cap) + "); rerun in specialized mode (--theta p/q)");
  }
  // det(tI - M) = t^n + c_1 t^{n-1} + ... + c_n via
  //   B_1 = M, c_k = -tr(B_k)/k, B_{k+1} = M (B_k + c_k I).
  std::vector<FieldScalar> coeffs(n + 1, FieldScalar::rational(Rational(0), m.mode()));
  coeffs[n] = FieldScalar::rational(Rational(1), m.mode());
  ExactMatrix b = m;
  for (int k = 1; k <= n; ++k) {
    FieldScalar ck = -(b.trace() / FieldScalar::rational(Rational(k), m.mode()));
    coeffs[n - k] = ck;
    if (k == n) break;
    ExactMatrix shifted = b;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
    b = m * shifted;
  }
  return UPoly(m.mode(), std::move(coeffs));
}

std::vector<int> rref(ExactMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    FieldScalar inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FieldScalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const ExactMatrix& m) {
  ExactMatrix work = m;
  return static_cast<int>(rref(work).size());
}

std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m) {
  ExactMatrix work = m;
  std::vector<int> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldScalar>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldScalar> v(m.cols(), FieldScalar::rational(Rational(0), m.mode()));
    v[free] = FieldScalar::rational(Rational(1), m.mode());
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -work.at(static_cast<int>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const ExactMatrix& m,
                                           const std::vector<FieldScalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error("rhs size mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1, m.mode());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FieldScalar> x(m.cols(), FieldScalar::rational(Rational(0), m.mode()));
  for (size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  }
  LinearSolution sol;
  sol.particular = std::move(x);
  sol.kernel = kernel_basis(m);
  return sol;
}

}  // namespace hp
