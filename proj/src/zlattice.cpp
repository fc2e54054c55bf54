#include "orbitkit/zlattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace orbitkit {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * static_cast<size_t>(cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) a_.emplace_back(v);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec v(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

void IntMat::set_row(int i, const IntVec& v) {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[static_cast<size_t>(j)];
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_zero() const {
  for (const Int& v : a_)
    if (v != 0) return false;
  return true;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in *");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("dimension mismatch in +");
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("dimension mismatch in -");
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntVec mul(const IntVec& x, const IntMat& A) {
  if (static_cast<int>(x.size()) != A.rows())
    throw std::invalid_argument("dimension mismatch in vector-matrix product");
  IntVec r(static_cast<size_t>(A.cols()));
  for (int i = 0; i < A.rows(); ++i) {
    const Int& xi = x[static_cast<size_t>(i)];
    if (xi == 0) continue;
    for (int j = 0; j < A.cols(); ++j) r[static_cast<size_t>(j)] += xi * A.at(i, j);
  }
  return r;
}

Int determinant(const IntMat& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  int n = M.rows();
  if (n == 0) return 1;
  IntMat a = M;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMat& A) {
  if (A.rows() != A.cols()) return false;
  Int d = determinant(A);
  return d == 1 || d == -1;
}

IntMat inverse_unimodular(const IntMat& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("inverse of non-square matrix");
  int n = A.rows();
  Int det = determinant(A);
  if (det != 1 && det != -1)
    throw std::invalid_argument("matrix is not unimodular (|det| != 1)");
  // Adjugate: inv = adj / det with det = +-1.
  IntMat inv(n, n);
  if (n == 0) return inv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = A.at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      inv.at(j, i) = det == 1 ? cof : -cof;
    }
  return inv;
}

namespace {

// floor division, denominator > 0
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

void add_row_multiple(IntMat& M, int dst, int src, const Int& f) {
  for (int j = 0; j < M.cols(); ++j) M.at(dst, j) += f * M.at(src, j);
}

void swap_rows(IntMat& M, int a, int b) {
  for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}

void negate_row(IntMat& M, int r) {
  for (int j = 0; j < M.cols(); ++j) M.at(r, j) = -M.at(r, j);
}

void add_col_multiple(IntMat& M, int dst, int src, const Int& f) {
  for (int i = 0; i < M.rows(); ++i) M.at(i, dst) += f * M.at(i, src);
}

void swap_cols(IntMat& M, int a, int b) {
  for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}

}  // namespace

HnfResult hnf(const IntMat& M) {
  HnfResult res;
  res.H = M;
  res.U = IntMat::identity(M.rows());
  IntMat& H = res.H;
  IntMat& U = res.U;
  int m = M.rows(), n = M.cols();
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    // Euclid on the entries of this column at rows >= r.
    for (;;) {
      int best = -1;
      for (int i = r; i < m; ++i)
        if (H.at(i, col) != 0 &&
            (best < 0 || abs(H.at(i, col)) < abs(H.at(best, col))))
          best = i;
      if (best < 0) break;
      if (best != r) {
        swap_rows(H, r, best);
        swap_rows(U, r, best);
      }
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (H.at(i, col) == 0) continue;
        Int q = H.at(i, col) / H.at(r, col);  // truncated: |rem| < |pivot|
        if (q != 0) {
          add_row_multiple(H, i, r, -q);
          add_row_multiple(U, i, r, -q);
        }
        if (H.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(r, col) == 0) continue;
    if (H.at(r, col) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(H.at(i, col), H.at(r, col));
      if (q != 0) {
        add_row_multiple(H, i, r, -q);
        add_row_multiple(U, i, r, -q);
      }
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  return res;
}

SnfResult snf(const IntMat& M) {
  SnfResult res;
  res.D = M;
  res.U = IntMat::identity(M.rows());
  res.V = IntMat::identity(M.cols());
  IntMat& D = res.D;
  IntMat& U = res.U;
  IntMat& V = res.V;
  int m = M.rows(), n = M.cols();
  int bound = std::min(m, n);
  for (int t = 0; t < bound; ++t) {
    // Find a nonzero entry of minimal magnitude in the trailing block.
    auto find_pivot = [&]() -> std::pair<int, int> {
      std::pair<int, int> best{-1, -1};
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D.at(i, j) != 0 &&
              (best.first < 0 ||
               abs(D.at(i, j)) < abs(D.at(best.first, best.second))))
            best = {i, j};
      return best;
    };
    auto [pi, pj] = find_pivot();
    if (pi < 0) break;
    if (pi != t) {
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
    }
    if (pj != t) {
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);
    }
    for (;;) {
      // Clear column t.
      bool changed = false;
      for (int i = 0; i < m; ++i) {
        if (i == t || D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        if (q != 0) {
          add_row_multiple(D, i, t, -q);
          add_row_multiple(U, i, t, -q);
        }
        if (D.at(i, t) != 0) {
          swap_rows(D, i, t);
          swap_rows(U, i, t);
          changed = true;
        }
      }
      if (changed) continue;
      // Clear row t.
      for (int j = 0; j < n; ++j) {
        if (j == t || D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        if (q != 0) {
          add_col_multiple(D, j, t, -q);
          add_col_multiple(V, j, t, -q);
        }
        if (D.at(t, j) != 0) {
          swap_cols(D, j, t);
          swap_cols(V, j, t);
          changed = true;
        }
      }
      if (changed) continue;
      // Pivot must divide the whole trailing block.
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; ++i)
        for (int j = t + 1; j < n && !fixed; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            add_row_multiple(D, t, i, 1);
            add_row_multiple(U, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (D.at(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
  }
  return res;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, abs(x));
  return g;
}

Lattice::Lattice(IntMat generators)
    : gens_(std::move(generators)),
      hnf_(hnf(gens_)),
      snf_box_(std::make_shared<SnfBox>()) {
  if (gens_.cols() < 1)
    throw std::invalid_argument("lattice dimension must be >= 1");
}

std::vector<IntVec> Lattice::basis() const {
  std::vector<IntVec> b;
  for (int i = 0; i < rank(); ++i) b.push_back(hnf_.H.row(i));
  return b;
}

const SnfResult& Lattice::smith() const {
  std::call_once(snf_box_->flag, [this] { snf_box_->value = snf(gens_); });
  return snf_box_->value;
}

LatticeMemberResult Lattice::member(const IntVec& v) const {
  if (static_cast<int>(v.size()) != dimension())
    throw std::invalid_argument("dimension mismatch in lattice membership");
  LatticeMemberResult res;
  int r = rank();
  IntVec w = v;
  IntVec y(static_cast<size_t>(gens_.rows()));
  int row = 0;
  for (int col = 0; col < dimension(); ++col) {
    if (row < r && hnf_.pivot_cols[static_cast<size_t>(row)] == col) {
      const Int& p = hnf_.H.at(row, col);
      if (w[static_cast<size_t>(col)] % p != 0) return res;
      Int q = w[static_cast<size_t>(col)] / p;
      if (q != 0)
        for (int j = col; j < dimension(); ++j)
          w[static_cast<size_t>(j)] -= q * hnf_.H.at(row, j);
      y[static_cast<size_t>(row)] = q;
      ++row;
    } else if (w[static_cast<size_t>(col)] != 0) {
      return res;
    }
  }
  res.verdict = Verdict::Yes;
  res.coefficients = mul(y, hnf_.U);
  return res;
}

AbelianRoot root_abelian(const IntVec& v) {
  Int c = content(v);
  if (c == 0)
    throw std::invalid_argument("root of the zero vector is undefined");
  AbelianRoot r;
  r.exponent = c;
  r.primitive.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) r.primitive[i] = v[i] / c;
  return r;
}

IntMat complete_basis(const IntVec& primitive) {
  int n = static_cast<int>(primitive.size());
  if (content(primitive) != 1)
    throw std::invalid_argument("vector is not primitive");
  IntMat row(1, n);
  row.set_row(0, primitive);
  SnfResult s = snf(row);
  // u * primitive * V = e_1 with u = +-1, so primitive = u * first row of
  // V^-1; flip that row's sign as needed.
  IntMat X = inverse_unimodular(s.V);
  if (s.U.at(0, 0) == -1) negate_row(X, 0);
  return X;
}

SodGlResult sod_gl(const IntVec& x, const Lattice& L) {
  if (static_cast<int>(x.size()) != L.dimension())
    throw std::invalid_argument("dimension mismatch in sod_gl");
  int n = L.dimension();
  SodGlResult res;
  Int cx = content(x);
  if (cx == 0) {
    res.verdict = Verdict::Yes;
    res.witness = IntMat::identity(n);
    res.target = IntVec(static_cast<size_t>(n));
    return res;
  }
  if (L.is_zero()) return res;  // nonzero x never reaches the zero lattice
  // d_1 = gcd of all generator entries = first elementary divisor.
  Int d1 = 0;
  for (int i = 0; i < L.generators().rows(); ++i)
    d1 = gcd(d1, content(L.generators().row(i)));
  if (cx % d1 != 0) return res;
  // Target h = content(x) * (first row of V^-1): a vector of L with the
  // same content as x.
  const SnfResult& s = L.smith();
  IntMat Vinv = inverse_unimodular(s.V);
  IntVec prim_h = Vinv.row(0);
  IntVec h(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) h[static_cast<size_t>(j)] = cx * prim_h[static_cast<size_t>(j)];
  // alpha maps x to h through basis completions of the primitive parts.
  IntVec prim_x = root_abelian(x).primitive;
  IntMat X = complete_basis(prim_x);
  IntMat Hm = complete_basis(prim_h);
  res.witness = inverse_unimodular(X) * Hm;
  res.target = h;
  res.verdict = Verdict::Yes;
  return res;
}

TcpResult tcp_abelian(const IntMat& A, const IntVec& u, const IntVec& v) {
  if (A.rows() != A.cols() || A.rows() != static_cast<int>(u.size()) ||
      u.size() != v.size())
    throw std::invalid_argument("dimension mismatch in tcp_abelian");
  if (!is_unimodular(A))
    throw std::invalid_argument("automorphism matrix must be unimodular");
  Lattice img(IntMat::identity(A.rows()) - A);
  LatticeMemberResult m = img.member(v - u);
  TcpResult res;
  if (m.verdict == Verdict::Yes) {
    res.verdict = Verdict::Yes;
    res.witness = m.coefficients;
  }
  return res;
}

Int quotient_exponent(const Lattice& L) {
  if (!L.is_full_rank())
    throw std::invalid_argument("quotient_exponent needs a full-rank lattice");
  const SnfResult& s = L.smith();
  return s.D.at(L.dimension() - 1, L.dimension() - 1);
}

namespace {

Int pos_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

IntMat mod_mat(const IntMat& A, const Int& m) {
  IntMat r = A;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r.at(i, j) = pos_mod(r.at(i, j), m);
  return r;
}

}  // namespace

long long order_mod(const IntMat& A, const Int& m, long long order_cap) {
  if (A.rows() != A.cols()) throw std::invalid_argument("non-square matrix");
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  if (!is_unimodular(A))
    throw std::invalid_argument("order_mod needs a unimodular matrix");
  IntMat B = mod_mat(A, m);
  IntMat P = B;
  long long T = 1;
  while (!P.is_identity()) {
    P = mod_mat(P * B, m);
    if (++T > order_cap)
      throw capacity_error("order of matrix mod " + m.str() +
                           " exceeds cap " + std::to_string(order_cap));
  }
  return T;
}

}  // namespace orbitkit
