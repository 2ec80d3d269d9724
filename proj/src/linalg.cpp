#include "trihered/linalg.hpp"

#include <atomic>
#include <sstream>
#include <utility>

namespace trihered::linalg {

namespace {

std::atomic<std::uint32_t> g_prime{kDefaultPrime};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if ((e & 1U) != 0) r = r * base % m;
    base = base * base % m;
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void set_prime(std::uint32_t p) {
  if (p < 3 || p >= (1U << 31U) || !is_prime(p)) {
    throw Error("field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
  }
  g_prime.store(p, std::memory_order_relaxed);
}

std::uint32_t prime() { return g_prime.load(std::memory_order_relaxed); }

Elem reduce(std::int64_t v) {
  const auto p = static_cast<std::int64_t>(prime());
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem inv(Elem a) {
  if (a == 0) throw Error("inverse of zero in F_p");
  return static_cast<Elem>(pow_mod(a, prime() - 2, prime()));
}

std::int64_t centered(Elem a) {
  const auto p = static_cast<std::int64_t>(prime());
  const auto v = static_cast<std::int64_t>(a);
  return v > p / 2 ? v - p : v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols_if_empty) {
  const std::size_t nc = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(const std::vector<Elem>& entries) {
  Matrix m(entries.size(), 1);
  m.data_ = entries;
  return m;
}

bool Matrix::is_zero() const {
  for (Elem e : data_) {
    if (e != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("matrix block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error("matrix block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
  }
}

Matrix Matrix::scaled(Elem s) const {
  Matrix m = *this;
  for (Elem& e : m.data_) e = mul(e, s);
  return m;
}

Matrix Matrix::vec() const {
  Matrix v(rows_ * cols_, 1);
  v.data_ = data_;
  return v;
}

Matrix Matrix::unvec(const Matrix& column, std::size_t rows, std::size_t cols) {
  if (column.rows_ != rows * cols || column.cols_ != 1) throw Error("unvec: size mismatch");
  Matrix m(rows, cols);
  m.data_ = column.data_;
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, std::size_t rows_if_empty) {
  std::size_t nr = parts.empty() ? rows_if_empty : parts.front().rows();
  std::size_t nc = 0;
  for (const auto& p : parts) {
    if (p.rows() != nr) throw Error("hstack: row mismatch");
    nc += p.cols();
  }
  Matrix m(nr, nc);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, std::size_t cols_if_empty) {
  std::size_t nc = parts.empty() ? cols_if_empty : parts.front().cols();
  std::size_t nr = 0;
  for (const auto& p : parts) {
    if (p.cols() != nc) throw Error("vstack: column mismatch");
    nr += p.rows();
  }
  Matrix m(nr, nc);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& parts) {
  std::size_t nr = 0;
  std::size_t nc = 0;
  for (const auto& p : parts) {
    nr += p.rows();
    nc += p.cols();
  }
  Matrix m(nr, nc);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix add: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = add(m.data_[i], b.data_[i]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sub: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = sub(m.data_[i], b.data_[i]);
  return m;
}

Matrix operator-(const Matrix& a) {
  Matrix m = a;
  for (Elem& e : m.data_) e = neg(e);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error("matrix mul: shape mismatch " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  const std::uint64_t p = prime();
  Matrix m(a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const Elem* brow = &b.data_[k * b.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = static_cast<Elem>(acc[j]);
  }
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : ", ") << centered((*this)(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

Rref rref(const Matrix& input) {
  Rref out{input, {}};
  Matrix& m = out.reduced;
  const std::uint64_t p = prime();
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  auto& d = m.data();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && d[piv * nc + col] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != row) {
      for (std::size_t c = col; c < nc; ++c) std::swap(d[piv * nc + c], d[row * nc + c]);
    }
    const Elem s = inv(d[row * nc + col]);
    for (std::size_t c = col; c < nc; ++c) d[row * nc + c] = mul(d[row * nc + c], s);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row) continue;
      const std::uint64_t f = d[r * nc + col];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t c = col; c < nc; ++c) {
        d[r * nc + c] = static_cast<Elem>((d[r * nc + c] + nf * d[row * nc + c]) % p);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  // Row-reduce whichever orientation is cheaper.
  return m.rows() < m.cols() ? rref(m).rank() : rref(m.transpose()).rank();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("solve: A and b have different row counts");
  const std::size_t n = a.cols();
  const Rref r = rref(Matrix::hstack({a, b}, a.rows()));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const std::size_t pc = r.pivots[i];
    if (pc >= n) return std::nullopt;  // pivot in the augmented block
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = r.reduced(i, n + c);
  }
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  const Rref r = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto pc : r.pivots) is_pivot[pc] = true;
  Matrix k(n, n - r.rank());
  std::size_t col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], col) = neg(r.reduced(i, f));
    ++col;
  }
  return k;
}

Matrix column_space_basis(const Matrix& a) {
  const Rref r = rref(a);
  std::vector<Matrix> cols;
  cols.reserve(r.rank());
  for (auto pc : r.pivots) cols.push_back(a.col(pc));
  return Matrix::hstack(cols, a.rows());
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  const Rref r = rref(Matrix::hstack({a, Matrix::identity(n)}, n));
  if (r.rank() < n || (n > 0 && r.pivots[n - 1] >= n)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

Matrix left_inverse(const Matrix& a) {
  // Solve a^T * X = I in the least-structured way: rows of L span the dual basis.
  auto x = solve(a.transpose(), Matrix::identity(a.cols()));
  if (!x) throw Error("left_inverse: matrix does not have full column rank");
  return x->transpose();
}

QuotientChart::QuotientChart(const Matrix& spanning_columns, std::size_t ambient_dim) : ambient_(ambient_dim) {
  if (spanning_columns.rows() != ambient_dim && spanning_columns.cols() != 0) {
    throw Error("QuotientChart: spanning set has wrong ambient dimension");
  }
  Rref r = spanning_columns.cols() == 0 ? Rref{Matrix(0, ambient_dim), {}} : rref(spanning_columns.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto pc : r.pivots) is_pivot[pc] = true;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (!is_pivot[j]) nonpivots_.push_back(j);
  }
  projection_ = Matrix(nonpivots_.size(), ambient_dim);
  lift_ = Matrix(ambient_dim, nonpivots_.size());
  for (std::size_t q = 0; q < nonpivots_.size(); ++q) {
    const std::size_t j = nonpivots_[q];
    projection_(q, j) = 1;
    lift_(j, q) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      projection_(q, r.pivots[i]) = neg(r.reduced(i, j));
    }
  }
}

std::vector<Elem> charpoly(const Matrix& input) {
  if (!input.is_square()) throw Error("charpoly: matrix not square");
  const std::size_t n = input.rows();
  Matrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Elem pinv = inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const Elem u = mul(h(i, j), pinv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(i, c) = sub(h(i, c), mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = add(h(r, j + 1), mul(u, h(r, i)));
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
  std::vector<std::vector<Elem>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Elem> pm(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      pm[k + 1] = add(pm[k + 1], prev[k]);
      pm[k] = sub(pm[k], mul(h(m - 1, m - 1), prev[k]));
    }
    Elem prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = mul(prod, h(i, i - 1));
      if (prod == 0) break;
      const Elem coef = mul(h(i - 1, m - 1), prod);
      const auto& pp = polys[i - 1];
      for (std::size_t k = 0; k < pp.size(); ++k) pm[k] = sub(pm[k], mul(coef, pp[k]));
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

Matrix poly_eval(const std::vector<Elem>& coeffs, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * m + Matrix::identity(n).scaled(coeffs[k]);
  }
  return acc;
}

Matrix mat_pow(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (e != 0) {
    if ((e & 1U) != 0) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

}  // namespace trihered::linalg
