#pragma once

#include "jmap/rational.hpp"

#include <optional>
#include <vector>

namespace jmap {

/// Bijection of {1,...,m}; images[j-1] is the image of j.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);
    static Permutation reversal(int m);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int j) const { return images_[j - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// (a.compose(b))(j) = a(b(j)).
    Permutation compose(const Permutation& other) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Sorted distinct indices in {1,...,n}.
using IndexSet = std::vector<int>;

/// Dense square matrix of Rationals. Indices are 1-based at the API
/// boundary; a 0x0 matrix is allowed as the result of trivial reduction.
class RMatrix {
public:
    RMatrix() : n_(0) {}
    explicit RMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
    RMatrix(int n, std::vector<Rational> entries);
    /// Row-major construction from integer literals, for fixtures and tests.
    static RMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RMatrix identity(int n);
    static RMatrix zero(int n) { return RMatrix(n); }

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    Rational& operator()(int j, int k) { return entries_[idx(j, k)]; }
    const Rational& operator()(int j, int k) const { return entries_[idx(j, k)]; }

    std::vector<Rational> row(int j) const;
    std::vector<Rational> column(int k) const;

    bool is_zero() const;
    RMatrix transpose() const;
    Rational trace() const;

    friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>(j - 1) * n_ + (k - 1); }

    int n_;
    std::vector<Rational> entries_;
};

RMatrix operator+(const RMatrix& a, const RMatrix& b);
RMatrix operator-(const RMatrix& a, const RMatrix& b);
RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix operator*(const Rational& c, const RMatrix& a);
std::vector<Rational> operator*(const RMatrix& a, const std::vector<Rational>& v);

/// Exact determinant by fraction-free (Bareiss) elimination over the
/// integer-scaled matrix.
Rational determinant(const RMatrix& a);

/// [A]_I: determinant of the submatrix on rows and columns I.
Rational principal_minor(const RMatrix& a, const IndexSet& I);

/// B with B[pi(j)][pi(k)] = A[j][k].
RMatrix permutation_similarity(const RMatrix& a, const Permutation& pi);

/// General submatrix on (rows, cols), both 1-based and strictly increasing.
RMatrix submatrix(const RMatrix& a, const IndexSet& rows, const IndexSet& cols);

/// A permutation pi with permutation_similarity(A, pi) strictly upper
/// triangular, when one exists. Recursive zero-column elimination; among
/// several all-zero columns the lowest index is taken first.
std::optional<Permutation> strict_triangularization(const RMatrix& a);

/// True iff every principal minor of A vanishes.
bool all_principal_minors_vanish(const RMatrix& a);

RMatrix hadamard(const RMatrix& a, const RMatrix& b);
RMatrix hadamard_pow(const RMatrix& a, int d);
RMatrix kronecker(const RMatrix& a, const RMatrix& b);

/// Exact rank by fraction-free row reduction.
int rank(const RMatrix& a);

/// True iff A^n = 0.
bool is_nilpotent(const RMatrix& a);

/// Circulant whose first row is v; each following row is the previous one
/// cyclically shifted right.
RMatrix circulant(const std::vector<Rational>& v);

/// V(v) with (j,k) entry v_j^k, k = 1..n.
RMatrix vandermonde_type(const std::vector<Rational>& v);

/// Basis of the kernel of V(v)^T: one block of difference vectors per group
/// of equal nonzero values, plus a free unit vector per zero coordinate.
std::vector<std::vector<Rational>> vandermonde_kernel(const std::vector<Rational>& v);

}  // namespace jmap
