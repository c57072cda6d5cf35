#include "symcheck/exact.hpp"

#include <sstream>
#include <utility>

namespace symcheck {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape() + " vs " + b.shape());
  }
}

}  // namespace

ExactComplex::ExactComplex(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ExactComplex ExactComplex::rational(long num, long den) {
  if (den == 0) throw std::domain_error("ExactComplex::rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return ExactComplex(q);
}

std::string ExactComplex::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im = im_ == 1 ? "i" : im_ == -1 ? "-i" : im_.get_str() + "i";
  if (sgn(re_) == 0) return im;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) throw std::domain_error("ExactComplex: division by zero");
  mpq_class d = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : ExactMatrix(rows, cols, std::vector<ExactComplex>(rows * cols)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<ExactComplex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("ExactMatrix: empty shape " + shape());
  if (entries_.size() != rows * cols) {
    throw DimensionError("ExactMatrix: " + std::to_string(entries_.size()) + " entries for shape " + shape());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const ExactComplex> diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<ExactComplex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<ExactComplex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ExactMatrix::from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {r, c, std::move(entries)};
}

ExactMatrix ExactMatrix::column(std::span<const ExactComplex> values) {
  return {values.size(), 1, std::vector<ExactComplex>(values.begin(), values.end())};
}

ExactMatrix ExactMatrix::row(std::span<const ExactComplex> values) {
  return {1, values.size(), std::vector<ExactComplex>(values.begin(), values.end())};
}

ExactMatrix ExactMatrix::blocks(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                                const ExactMatrix& d) {
  const std::size_t n = a.rows();
  for (const ExactMatrix* blk : {&a, &b, &c, &d}) {
    if (blk->rows() != n || blk->cols() != n) {
      throw DimensionError("ExactMatrix::blocks: block " + blk->shape() + " vs " + a.shape());
    }
  }
  ExactMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, j + n) = b(i, j);
      m(i + n, j) = c(i, j);
      m(i + n, j + n) = d(i, j);
    }
  }
  return m;
}

std::string ExactMatrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

bool ExactMatrix::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix m = *this;
  for (auto& e : m.entries_) e = e.conj();
  return m;
}

ExactMatrix ExactMatrix::adjoint() const { return transpose().conj(); }

ExactMatrix ExactMatrix::stack(const ExactMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionError("stack: width mismatch " + shape() + " vs " + other.shape());
  std::vector<ExactComplex> entries = entries_;
  entries.insert(entries.end(), other.entries_.begin(), other.entries_.end());
  return {rows_ + other.rows_, cols_, std::move(entries)};
}

std::vector<std::complex<double>> ExactMatrix::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_complex());
  return out;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << ']';
  return os.str();
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o, "sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o, "difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactComplex& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("product: inner dimensions differ " + a.shape() + " vs " + b.shape());
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactComplex& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

// ---------------------------------------------------------------------------

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(lead, j));
    }
    const ExactComplex inv = ExactComplex(1) / a(lead, c);
    for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const ExactComplex f = a(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(lead, j).is_zero()) a(r, j) -= f * a(lead, j);
      }
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return a;
}

std::size_t rank(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

NullspaceResult linear_solve(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  const ExactMatrix r = rref(m, &pivots);
  NullspaceResult out;
  out.rank = pivots.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ExactMatrix v(m.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -r(k, f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool rowspace_equal(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionError("rowspace_equal: width mismatch " + a.shape() + " vs " + b.shape());
  }
  const std::size_t ra = rank(a);
  if (ra != rank(b)) return false;
  return rank(a.stack(b)) == ra;
}

std::optional<std::vector<ExactComplex>> row_combination(const ExactMatrix& rows,
                                                         std::span<const ExactComplex> target) {
  if (target.size() != rows.cols()) {
    throw DimensionError("row_combination: target width " + std::to_string(target.size()) + " vs " + rows.shape());
  }
  // Solve rows^T x = target^T through the augmented matrix [rows^T | target].
  const ExactMatrix t = rows.transpose();
  ExactMatrix aug(t.rows(), t.cols() + 1);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) aug(i, j) = t(i, j);
    aug(i, t.cols()) = target[i];
  }
  std::vector<std::size_t> pivots;
  const ExactMatrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == t.cols()) return std::nullopt;

  std::vector<ExactComplex> x(t.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, t.cols());
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: non-square " + m.shape());
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const ExactMatrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  }
  return inv;
}

ExactMatrix vectorize(const ExactMatrix& m) { return ExactMatrix::column(m.entries()); }

ExactMatrix unvectorize(const ExactMatrix& column, std::size_t n) {
  if (column.cols() != 1 || column.rows() != n * n) {
    throw DimensionError("unvectorize: " + column.shape() + " is not a " + std::to_string(n * n) + "x1 column");
  }
  return {n, n, std::vector<ExactComplex>(column.entries().begin(), column.entries().end())};
}

}  // namespace symcheck
