#pragma once

#include "jmap/matrix.hpp"

#include <complex>
#include <vector>

namespace jmap {

using Complex = std::complex<double>;

/// Dense square complex matrix for the floating-point verification path.
class CMatrix {
public:
    CMatrix() : n_(0) {}
    explicit CMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
    static CMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
    static CMatrix from_rational(const RMatrix& a);

    int size() const { return n_; }
    Complex& operator()(int j, int k) { return entries_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)]; }
    const Complex& operator()(int j, int k) const {
        return entries_[static_cast<std::size_t>(j - 1) * n_ + (k - 1)];
    }

    std::vector<Complex> row(int j) const;

private:
    int n_;
    std::vector<Complex> entries_;
};

std::vector<Complex> operator*(const CMatrix& a, const std::vector<Complex>& v);

/// Determinant by Gaussian elimination with partial pivoting.
Complex determinant(const CMatrix& a);

Complex principal_minor(const CMatrix& a, const IndexSet& I);

/// Circulant with first row v.
CMatrix circulant_c(const std::vector<Complex>& v);

}  // namespace jmap
