#include "jmap/complexmat.hpp"

#include <cmath>
#include <stdexcept>

namespace jmap {

CMatrix CMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const int n = static_cast<int>(rows.size());
    CMatrix a(n);
    for (int j = 1; j <= n; ++j) {
        if (static_cast<int>(rows[j - 1].size()) != n)
            throw std::invalid_argument("matrix must be square");
        for (int k = 1; k <= n; ++k) a(j, k) = rows[j - 1][k - 1];
    }
    return a;
}

CMatrix CMatrix::from_rational(const RMatrix& a) {
    CMatrix c(a.size());
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) c(j, k) = Complex(a(j, k).to_double(), 0.0);
    return c;
}

std::vector<Complex> CMatrix::row(int j) const {
    std::vector<Complex> r(n_);
    for (int k = 1; k <= n_; ++k) r[k - 1] = (*this)(j, k);
    return r;
}

std::vector<Complex> operator*(const CMatrix& a, const std::vector<Complex>& v) {
    if (static_cast<int>(v.size()) != a.size()) throw std::invalid_argument("size mismatch");
    std::vector<Complex> w(v.size());
    for (int j = 1; j <= a.size(); ++j) {
        Complex s = 0.0;
        for (int k = 1; k <= a.size(); ++k) s += a(j, k) * v[k - 1];
        w[j - 1] = s;
    }
    return w;
}

Complex determinant(const CMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m[j][k] = a(j + 1, k + 1);
    Complex det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(m[i][col]) > std::abs(m[pivot][col])) pivot = i;
        if (std::abs(m[pivot][col]) == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int i = col + 1; i < n; ++i) {
            Complex f = m[i][col] / m[col][col];
            for (int k = col; k < n; ++k) m[i][k] -= f * m[col][k];
        }
    }
    return det;
}

Complex principal_minor(const CMatrix& a, const IndexSet& I) {
    CMatrix s(static_cast<int>(I.size()));
    for (std::size_t j = 0; j < I.size(); ++j)
        for (std::size_t k = 0; k < I.size(); ++k)
            s(static_cast<int>(j) + 1, static_cast<int>(k) + 1) = a(I[j], I[k]);
    return determinant(s);
}

CMatrix circulant_c(const std::vector<Complex>& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) throw std::invalid_argument("circulant needs a nonempty vector");
    CMatrix c(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) c(j, k) = v[((k - j) % n + n) % n];
    return c;
}

}  // namespace jmap
