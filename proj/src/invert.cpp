#include "jmap/invert.hpp"

#include <algorithm>
#include <cmath>

namespace jmap {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

/// Row-space basis of A in reduced echelon form, together with the pivot
/// columns. Rows of the result are linearly independent and every row of A
/// is a combination of them.
std::pair<std::vector<std::vector<Rational>>, std::vector<int>> row_space_basis(const RMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<Rational>> m(n);
    for (int j = 1; j <= n; ++j) m[j - 1] = a.row(j);
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (!m[i][col].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = m[r][col].inverse();
        for (int k = col; k < n; ++k) m[r][k] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (int k = col; k < n; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    return {std::move(m), std::move(pivots)};
}

std::vector<MPoly> apply_matrix(const std::vector<std::vector<Rational>>& m,
                                const std::vector<MPoly>& v, int nvars) {
    std::vector<MPoly> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        MPoly s(nvars);
        for (std::size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero()) s += v[k].scaled(row[k]);
        out.push_back(std::move(s));
    }
    return out;
}

/// Componentwise d-th power with reuse across equal components (blocks of
/// equal rows produce equal entries).
std::vector<MPoly> pow_vec(const std::vector<MPoly>& v, int d) {
    std::vector<MPoly> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        bool reused = false;
        for (std::size_t i = 0; i < j; ++i)
            if (v[i] == v[j]) {
                out[j] = out[i];
                reused = true;
                break;
            }
        if (!reused) out[j] = v[j].pow(d);
    }
    return out;
}

bool pow_equal_vec(const std::vector<MPoly>& p, const std::vector<MPoly>& q, int d) {
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!pow_equal(p[j], q[j], d)) return false;
    return true;
}

/// Substitutes linear images for the variables of p by multivariate Horner.
MPoly substitute(const MPoly& p, const std::vector<MPoly>& images, int var_count, int target_vars) {
    if (p.is_zero()) return MPoly(target_vars);
    if (var_count == 0) return MPoly(target_vars, p.constant_value());
    // Split by the exponent of the last active variable.
    std::vector<std::pair<Exp, std::vector<MPoly::Term>>> slices;
    for (const auto& t : p.terms()) {
        Exp e = t.exps[var_count - 1];
        MPoly::Term reduced{t.exps, t.coeff};
        reduced.exps[var_count - 1] = 0;
        auto it = std::find_if(slices.begin(), slices.end(),
                               [&](const auto& s) { return s.first == e; });
        if (it == slices.end()) {
            slices.push_back({e, {std::move(reduced)}});
        } else {
            it->second.push_back(std::move(reduced));
        }
    }
    std::sort(slices.begin(), slices.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const MPoly& lin = images[var_count - 1];
    MPoly acc(target_vars);
    Exp cur = slices.front().first;
    for (auto& [e, terms] : slices) {
        while (cur > e) {
            acc = acc * lin;
            --cur;
        }
        acc += substitute(MPoly::from_terms(p.nvars(), std::move(terms)), images, var_count - 1,
                          target_vars);
    }
    while (cur > 0) {
        acc = acc * lin;
        --cur;
    }
    return acc;
}

}  // namespace

PolyMap newton_step(const RMatrix& a, int d, const PolyMap& nu_prev) {
    check(a.size() == nu_prev.dimension(), "dimension mismatch");
    check(d >= 2, "monomial degree must be at least 2");
    const int n = a.size();
    std::vector<MPoly> comps;
    comps.reserve(n);
    for (int j = 1; j <= n; ++j) {
        MPoly arg(n);
        for (int k = 1; k <= n; ++k)
            if (!a(j, k).is_zero()) arg += nu_prev.component(k).scaled(a(j, k));
        comps.push_back(MPoly::variable(n, j) - arg.pow(d));
    }
    return PolyMap(std::move(comps));
}

std::vector<Rational> NewtonCore::eval(const std::vector<Rational>& f) const {
    check(static_cast<int>(f.size()) == n, "point length mismatch");
    std::vector<Rational> y(matrix_rank);
    for (int i = 0; i < matrix_rank; ++i) {
        Rational s;
        for (int k = 0; k < n; ++k) s += basis[i][k] * f[k];
        y[i] = s;
    }
    std::vector<Rational> out(f);
    for (int j = 0; j < n; ++j) out[j] -= w[j].eval(y);
    return out;
}

PolyMap NewtonCore::expand(std::size_t max_terms) const {
    // Rough bound: all monomials up to the degree of w in n variables.
    double bound = 1.0;
    int maxdeg = 0;
    for (const auto& c : w) maxdeg = std::max(maxdeg, c.total_degree());
    for (int i = 1; i <= n; ++i) bound *= static_cast<double>(maxdeg + i) / i;
    if (bound > static_cast<double>(max_terms))
        throw expansion_overflow("inverse expansion would exceed the term budget");

    std::vector<MPoly> images;  // y_i = <B_i, f>
    for (int i = 0; i < matrix_rank; ++i) {
        std::vector<MPoly::Term> terms;
        for (int k = 0; k < n; ++k) {
            if (basis[i][k].is_zero()) continue;
            std::vector<Exp> e(n, 0);
            e[k] = 1;
            terms.push_back({std::move(e), basis[i][k]});
        }
        images.push_back(MPoly::from_terms(n, std::move(terms)));
    }
    std::vector<MPoly> comps(n);
    for (int j = 0; j < n; ++j) {
        MPoly expanded(n);
        bool reused = false;
        for (int i = 0; i < j; ++i)
            if (w[i] == w[j]) {
                expanded = comps[i] - MPoly::variable(n, i + 1);
                reused = true;
                break;
            }
        if (!reused) expanded = -substitute(w[j], images, matrix_rank, n);
        comps[j] = MPoly::variable(n, j + 1) + expanded;
    }
    return PolyMap(std::move(comps));
}

NewtonCore finite_newton_core(const RMatrix& a, int d, int cap) {
    check(d >= 2, "monomial degree must be at least 2");
    const int n = a.size();
    check(n >= 1, "matrix must be nonempty");
    if (cap < 0) cap = n;

    auto [basis, pivots] = row_space_basis(a);
    const int r = static_cast<int>(basis.size());

    NewtonCore core;
    core.n = n;
    core.order = 0;
    core.matrix_rank = r;
    core.basis = basis;
    core.w.assign(n, MPoly(r));
    if (r == 0) return core;  // zero matrix: the map is the identity

    // A = C B with C read off at the pivot columns of the reduced basis.
    std::vector<std::vector<Rational>> cmat(n, std::vector<Rational>(r));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) cmat[j][i] = a(j + 1, pivots[i] + 1);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Rational s;
            for (int i = 0; i < r; ++i) s += cmat[j][i] * basis[i][k];
            if (s != a(j + 1, k + 1)) throw std::logic_error("row-space factorization failed");
        }

    std::vector<MPoly> yvars;
    for (int i = 1; i <= r; ++i) yvars.push_back(MPoly::variable(r, i));
    const std::vector<MPoly> cy = apply_matrix(cmat, yvars, r);

    std::vector<std::vector<Rational>> amat(n);
    for (int j = 1; j <= n; ++j) amat[j - 1] = a.row(j);

    // G_j = C y - A W_j;  W_{j+1} = G_j^{(d)};  stabilization at the first
    // repeated d-th power.
    std::vector<MPoly> w(n, MPoly(r));  // W_0
    std::vector<MPoly> g_prev;          // G_{j-2}
    std::vector<MPoly> g = cy;          // G_{j-1}
    int order = -1;
    for (int j = 1; j <= cap + 1; ++j) {
        if (j >= 2 && pow_equal_vec(g, g_prev, d)) {
            order = j - 1;
            break;
        }
        if (j == cap + 1)
            throw newton_divergence("no stabilization within cap " + std::to_string(cap));
        w = pow_vec(g, d);
        g_prev = std::move(g);
        g = cy;
        std::vector<MPoly> aw = apply_matrix(amat, w, r);
        for (int k = 0; k < n; ++k) g[k] -= aw[k];
    }
    core.order = order;
    core.w = std::move(w);

    // Composition with the forward map, checked in the compressed
    // coordinates: v_j tracks B nu_j(f(x)) with z standing for B x.
    std::vector<MPoly> bc_pow_base = apply_matrix(cmat, yvars, r);  // C z
    std::vector<MPoly> v = yvars;                                   // will become v_0
    {
        std::vector<MPoly> cz_pow = pow_vec(bc_pow_base, d);
        std::vector<MPoly> bterm = apply_matrix(basis, cz_pow, r);
        for (int i = 0; i < r; ++i) v[i] += bterm[i];
    }
    const std::vector<MPoly> v0 = v;
    for (int j = 1; j < order; ++j) {
        std::vector<MPoly> cv = apply_matrix(cmat, v, r);
        std::vector<MPoly> cvd = pow_vec(cv, d);
        std::vector<MPoly> bterm = apply_matrix(basis, cvd, r);
        v = v0;
        for (int i = 0; i < r; ++i) v[i] -= bterm[i];
    }
    // nu_order(f(x)) = x  iff  (C v_{order-1})^(d) = (C z)^(d).
    std::vector<MPoly> cv = apply_matrix(cmat, v, r);
    if (!pow_equal_vec(cv, bc_pow_base, d))
        throw newton_divergence("stabilized iterate fails to invert the forward map");
    return core;
}

NewtonResult finite_newton_inverse(const RMatrix& a, int d, int cap) {
    NewtonCore core = finite_newton_core(a, d, cap);
    return {core.order, core.expand()};
}

bool verify_inverse(const RMatrix& a, int d, const PolyMap& g) {
    check(a.size() == g.dimension(), "dimension mismatch");
    const int n = a.size();
    const PolyMap id = PolyMap::identity(n);
    // forward after g, assembled directly: g_j + <A_j, g>^d.
    std::vector<MPoly> fg;
    fg.reserve(n);
    for (int j = 1; j <= n; ++j) {
        MPoly arg(n);
        for (int k = 1; k <= n; ++k)
            if (!a(j, k).is_zero()) arg += g.component(k).scaled(a(j, k));
        fg.push_back(g.component(j) + arg.pow(d));
    }
    if (PolyMap(std::move(fg)) != id) return false;
    return poly_compose(g, PolyMap::power_map(a, d)) == id;
}

PhiPointComplex PhiPointComplex::pow(int d) {
    return {[d](const Complex& z) -> std::optional<Complex> { return std::pow(z, d); }};
}

PhiPointComplex PhiPointComplex::log() {
    return {[](const Complex& z) -> std::optional<Complex> {
        if (z == Complex(0.0, 0.0)) return std::nullopt;
        return std::log(z);
    }};
}

PhiPointComplex PhiPointComplex::exp() {
    return {[](const Complex& z) -> std::optional<Complex> { return std::exp(z); }};
}

namespace {

std::vector<Complex> newton_numeric_step(const CMatrix& a, const PhiPointComplex& phi,
                                         const std::vector<Complex>& f, const std::vector<Complex>& nu) {
    std::vector<Complex> arg = a * nu;
    std::vector<Complex> next(f);
    for (std::size_t k = 0; k < next.size(); ++k) {
        auto val = phi.eval(arg[k]);
        if (!val) throw std::domain_error("phi undefined at an iterate");
        if (!std::isfinite(val->real()) || !std::isfinite(val->imag()))
            throw std::domain_error("non-finite intermediate in Newton iteration");
        next[k] -= *val;
    }
    return next;
}

}  // namespace

std::vector<Complex> newton_numeric(const CMatrix& a, const PhiPointComplex& phi,
                                    const std::vector<Complex>& f, int iters) {
    check(static_cast<int>(f.size()) == a.size(), "point length mismatch");
    std::vector<Complex> nu = f;
    for (int j = 0; j < iters; ++j) nu = newton_numeric_step(a, phi, f, nu);
    return nu;
}

std::vector<double> newton_numeric_changes(const CMatrix& a, const PhiPointComplex& phi,
                                           const std::vector<Complex>& f, int iters) {
    check(static_cast<int>(f.size()) == a.size(), "point length mismatch");
    std::vector<double> changes;
    std::vector<Complex> nu = f;
    for (int j = 0; j < iters; ++j) {
        std::vector<Complex> next = newton_numeric_step(a, phi, f, nu);
        double diff = 0.0, norm = 0.0;
        for (std::size_t k = 0; k < nu.size(); ++k) {
            diff = std::max(diff, std::abs(next[k] - nu[k]));
            norm = std::max(norm, std::abs(next[k]));
        }
        changes.push_back(norm > 0.0 ? diff / norm : diff);
        nu = std::move(next);
    }
    return changes;
}

}  // namespace jmap
