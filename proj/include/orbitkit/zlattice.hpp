// zlattice.hpp -- exact integer linear algebra over Z^n: Hermite and Smith
// normal forms, lattice membership, gcd machinery, the GL_n(Z) subgroup-orbit
// decider and twisted conjugacy over Z^n.
//
// Convention: group elements are row vectors and automorphisms act on the
// right (x |-> x * A). Sublattices are row spans. All arithmetic is
// arbitrary precision.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <mutex>
#include <vector>

#include "orbitkit/decision.hpp"

namespace orbitkit {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
  }
  IntMat(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[idx(i, j)]; }
  const Int& at(int i, int j) const { return a_[idx(i, j)]; }

  IntVec row(int i) const;
  void set_row(int i, const IntVec& v);

  bool is_identity() const;
  bool is_zero() const;
  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  IntMat transpose() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);

// Row vector times matrix: the right action of an automorphism.
IntVec mul(const IntVec& x, const IntMat& A);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMat& M);

// Exact inverse of a matrix with det = +-1.
IntMat inverse_unimodular(const IntMat& A);

bool is_unimodular(const IntMat& A);

// Row-style Hermite normal form: U * M = H with U unimodular, pivots
// positive, entries above each pivot reduced into [0, pivot). Zero rows
// sink to the bottom. Deterministic.
struct HnfResult {
  IntMat H;
  IntMat U;
  std::vector<int> pivot_cols;  // one per nonzero row of H
};
HnfResult hnf(const IntMat& M);

// Smith normal form: U * M * V = D diagonal, d_1 | d_2 | ..., all d_i >= 0,
// U and V unimodular.
struct SnfResult {
  IntMat D;
  IntMat U;
  IntMat V;
};
SnfResult snf(const IntMat& M);

// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const IntVec& v);

struct LatticeMemberResult {
  Verdict verdict = Verdict::No;
  IntVec coefficients;  // c with c * generators = v, on Yes
};

// A sublattice of Z^n given by generator rows. The Hermite basis is computed
// on construction; the Smith form is computed once, on first use.
class Lattice {
 public:
  explicit Lattice(IntMat generators);
  static Lattice zero(int dimension) { return Lattice(IntMat(0, dimension)); }

  int dimension() const { return gens_.cols(); }
  int rank() const { return static_cast<int>(hnf_.pivot_cols.size()); }
  bool is_full_rank() const { return rank() == dimension(); }
  bool is_zero() const { return rank() == 0; }
  const IntMat& generators() const { return gens_; }

  // Nonzero rows of the Hermite form: a canonical Z-basis of the lattice.
  std::vector<IntVec> basis() const;

  const SnfResult& smith() const;

  // Complete membership decider with exact coefficients against the
  // original generators.
  LatticeMemberResult member(const IntVec& v) const;

 private:
  IntMat gens_;
  HnfResult hnf_;
  struct SnfBox {
    std::once_flag flag;
    SnfResult value;
  };
  std::shared_ptr<SnfBox> snf_box_;
};

// v = m * primitive with m = content(v) > 0 and primitive of content 1.
struct AbelianRoot {
  IntVec primitive;
  Int exponent;
};
AbelianRoot root_abelian(const IntVec& v);  // rejects the zero vector

struct SodGlResult {
  Verdict verdict = Verdict::No;
  IntMat witness;  // unimodular alpha with x * alpha in L, on Yes
  IntVec target;   // h = x * alpha
};

// Decides whether some alpha in GL_n(Z) maps x into L. The complete
// criterion is divisibility of content(x) by the gcd of all generator
// entries of L.
SodGlResult sod_gl(const IntVec& x, const Lattice& L);

// Completes a primitive row vector to the first row of a unimodular matrix.
IntMat complete_basis(const IntVec& primitive);

struct TcpResult {
  Verdict verdict = Verdict::No;
  IntVec witness;  // x with x * (I - A) = v - u, on Yes
};

// Twisted conjugacy over Z^n for the automorphism A: complete decider for
// the linear system x * (I - A) = v - u.
TcpResult tcp_abelian(const IntMat& A, const IntVec& u, const IntVec& v);

// Largest elementary divisor d of a full-rank lattice: d * Z^n lies inside.
Int quotient_exponent(const Lattice& L);

// Least T >= 1 with A^T congruent to the identity mod m. A must be
// unimodular (so the powers of A mod m are purely periodic).
long long order_mod(const IntMat& A, const Int& m,
                    long long order_cap = 1000000);

}  // namespace orbitkit
