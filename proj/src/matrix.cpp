#include "jmap/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jmap {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_index_set(const IndexSet& I, int n) {
    check(!I.empty(), "index set must be nonempty");
    int prev = 0;
    for (int i : I) {
        check(i > prev, "index set must be strictly increasing");
        check(i >= 1 && i <= n, "index out of range");
        prev = i;
    }
}

/// Clears denominators row by row; returns the integer matrix and the
/// product of the row scales.
std::pair<std::vector<std::vector<BigInt>>, BigInt> scale_to_integers(const RMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (int j = 1; j <= n; ++j) {
        BigInt l = 1;
        for (int k = 1; k <= n; ++k) l = boost::multiprecision::lcm(l, a(j, k).denominator());
        for (int k = 1; k <= n; ++k) m[j - 1][k - 1] = a(j, k).numerator() * (l / a(j, k).denominator());
        scale *= l;
    }
    return {std::move(m), scale};
}

/// Fraction-free elimination on an integer matrix. Returns the Bareiss
/// determinant when full pivoting succeeds, zero when the matrix is singular.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { swap = i; break; }
            if (swap < 0) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        check(v >= 1 && v <= static_cast<int>(images_.size()), "permutation image out of range");
        check(!seen[v - 1], "permutation images must be distinct");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> im(m);
    for (int j = 0; j < m; ++j) im[j] = j + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::reversal(int m) {
    std::vector<int> im(m);
    for (int j = 0; j < m; ++j) im[j] = m - j;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int j = 1; j <= size(); ++j) im[images_[j - 1] - 1] = j;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
    check(size() == other.size(), "permutation size mismatch");
    std::vector<int> im(images_.size());
    for (int j = 1; j <= size(); ++j) im[j - 1] = (*this)(other(j));
    return Permutation(std::move(im));
}

RMatrix::RMatrix(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
    check(static_cast<std::size_t>(n) * n == entries_.size(), "entry count must be n*n");
}

RMatrix RMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    RMatrix a(n);
    for (int j = 1; j <= n; ++j) {
        check(static_cast<int>(rows[j - 1].size()) == n, "matrix must be square");
        for (int k = 1; k <= n; ++k) a(j, k) = rows[j - 1][k - 1];
    }
    return a;
}

RMatrix RMatrix::identity(int n) {
    RMatrix a(n);
    for (int j = 1; j <= n; ++j) a(j, j) = Rational(1);
    return a;
}

std::vector<Rational> RMatrix::row(int j) const {
    std::vector<Rational> r(n_);
    for (int k = 1; k <= n_; ++k) r[k - 1] = (*this)(j, k);
    return r;
}

std::vector<Rational> RMatrix::column(int k) const {
    std::vector<Rational> c(n_);
    for (int j = 1; j <= n_; ++j) c[j - 1] = (*this)(j, k);
    return c;
}

bool RMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RMatrix RMatrix::transpose() const {
    RMatrix t(n_);
    for (int j = 1; j <= n_; ++j)
        for (int k = 1; k <= n_; ++k) t(k, j) = (*this)(j, k);
    return t;
}

Rational RMatrix::trace() const {
    Rational t;
    for (int j = 1; j <= n_; ++j) t += (*this)(j, j);
    return t;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
    check(a.size() == b.size(), "size mismatch");
    RMatrix c(a.size());
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) c(j, k) = a(j, k) + b(j, k);
    return c;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
    check(a.size() == b.size(), "size mismatch");
    RMatrix c(a.size());
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) c(j, k) = a(j, k) - b(j, k);
    return c;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    check(a.size() == b.size(), "size mismatch");
    const int n = a.size();
    RMatrix c(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            Rational s;
            for (int l = 1; l <= n; ++l) s += a(j, l) * b(l, k);
            c(j, k) = s;
        }
    return c;
}

RMatrix operator*(const Rational& c, const RMatrix& a) {
    RMatrix b(a.size());
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) b(j, k) = c * a(j, k);
    return b;
}

std::vector<Rational> operator*(const RMatrix& a, const std::vector<Rational>& v) {
    check(static_cast<int>(v.size()) == a.size(), "size mismatch");
    std::vector<Rational> w(v.size());
    for (int j = 1; j <= a.size(); ++j) {
        Rational s;
        for (int k = 1; k <= a.size(); ++k) s += a(j, k) * v[k - 1];
        w[j - 1] = s;
    }
    return w;
}

Rational determinant(const RMatrix& a) {
    if (a.empty()) return Rational(1);
    auto [m, scale] = scale_to_integers(a);
    return Rational(bareiss_det(std::move(m)), scale);
}

Rational principal_minor(const RMatrix& a, const IndexSet& I) {
    check_index_set(I, a.size());
    return determinant(submatrix(a, I, I));
}

RMatrix submatrix(const RMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    check(rows.size() == cols.size(), "submatrix must be square");
    const int m = static_cast<int>(rows.size());
    RMatrix s(m);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) s(j, k) = a(rows[j - 1], cols[k - 1]);
    return s;
}

RMatrix permutation_similarity(const RMatrix& a, const Permutation& pi) {
    check(pi.size() == a.size(), "permutation size mismatch");
    RMatrix b(a.size());
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) b(pi(j), pi(k)) = a(j, k);
    return b;
}

std::optional<Permutation> strict_triangularization(const RMatrix& a) {
    const int n = a.size();
    std::vector<int> alive(n);
    for (int j = 0; j < n; ++j) alive[j] = j + 1;
    std::vector<int> images(n, 0);
    for (int pos = 1; pos <= n; ++pos) {
        int found = -1;
        for (std::size_t ci = 0; ci < alive.size() && found < 0; ++ci) {
            bool zero = true;
            for (int r : alive)
                if (!a(r, alive[ci]).is_zero()) { zero = false; break; }
            if (zero) found = static_cast<int>(ci);
        }
        if (found < 0) return std::nullopt;
        images[alive[found] - 1] = pos;
        alive.erase(alive.begin() + found);
    }
    return Permutation(std::move(images));
}

bool all_principal_minors_vanish(const RMatrix& a) { return strict_triangularization(a).has_value(); }

RMatrix hadamard(const RMatrix& a, const RMatrix& b) {
    check(a.size() == b.size(), "size mismatch");
    RMatrix c(a.size());
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) c(j, k) = a(j, k) * b(j, k);
    return c;
}

RMatrix hadamard_pow(const RMatrix& a, int d) {
    check(d >= 1, "Hadamard power needs d >= 1");
    RMatrix c(a.size());
    for (int j = 1; j <= a.size(); ++j)
        for (int k = 1; k <= a.size(); ++k) c(j, k) = a(j, k).pow(d);
    return c;
}

RMatrix kronecker(const RMatrix& a, const RMatrix& b) {
    const int na = a.size(), nb = b.size();
    RMatrix c(na * nb);
    for (int j = 1; j <= na; ++j)
        for (int k = 1; k <= na; ++k)
            for (int p = 1; p <= nb; ++p)
                for (int q = 1; q <= nb; ++q)
                    c((j - 1) * nb + p, (k - 1) * nb + q) = a(j, k) * b(p, q);
    return c;
}

int rank(const RMatrix& a) {
    if (a.empty()) return 0;
    auto m = scale_to_integers(a).first;
    const int n = a.size();
    int r = 0;
    BigInt prev = 1;
    for (int col = 0; col < n && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[r][col] - m[i][col] * m[r][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

bool is_nilpotent(const RMatrix& a) {
    if (a.empty()) return true;
    RMatrix p = a;
    int covered = 1;
    while (covered < a.size()) {
        p = p * p;
        covered *= 2;
        if (p.is_zero()) return true;
    }
    return p.is_zero();
}

RMatrix circulant(const std::vector<Rational>& v) {
    check(!v.empty(), "circulant needs a nonempty vector");
    const int n = static_cast<int>(v.size());
    RMatrix c(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) c(j, k) = v[((k - j) % n + n) % n];
    return c;
}

RMatrix vandermonde_type(const std::vector<Rational>& v) {
    const int n = static_cast<int>(v.size());
    RMatrix m(n);
    for (int j = 1; j <= n; ++j) {
        Rational p(1);
        for (int k = 1; k <= n; ++k) {
            p *= v[j - 1];
            m(j, k) = p;
        }
    }
    return m;
}

std::vector<std::vector<Rational>> vandermonde_kernel(const std::vector<Rational>& v) {
    const int n = static_cast<int>(v.size());
    // Group indices of equal nonzero values, in order of first occurrence.
    std::vector<std::vector<int>> groups;
    std::vector<int> zeros;
    for (int j = 0; j < n; ++j) {
        if (v[j].is_zero()) {
            zeros.push_back(j);
            continue;
        }
        bool placed = false;
        for (auto& g : groups)
            if (v[g.front()] == v[j]) {
                g.push_back(j);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({j});
    }
    std::vector<std::vector<Rational>> basis;
    for (const auto& g : groups)
        for (std::size_t i = 1; i < g.size(); ++i) {
            std::vector<Rational> b(n);
            b[g[0]] = Rational(1);
            b[g[i]] = Rational(-1);
            basis.push_back(std::move(b));
        }
    for (int j : zeros) {
        std::vector<Rational> b(n);
        b[j] = Rational(1);
        basis.push_back(std::move(b));
    }
    return basis;
}

}  // namespace jmap
