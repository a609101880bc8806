#include "jmap/goodpair.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace jmap {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::vector<MPoly> row_forms(const RMatrix& a) {
    const int n = a.size();
    std::vector<MPoly> forms;
    forms.reserve(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<MPoly::Term> terms;
        for (int k = 1; k <= n; ++k) {
            if (a(j, k).is_zero()) continue;
            std::vector<Exp> e(n, 0);
            e[k - 1] = 1;
            terms.push_back({std::move(e), a(j, k)});
        }
        forms.push_back(MPoly::from_terms(n, std::move(terms)));
    }
    return forms;
}

IndexSet mask_to_indices(unsigned mask, int n) {
    IndexSet I;
    for (int j = 1; j <= n; ++j)
        if (mask & (1u << (j - 1))) I.push_back(j);
    return I;
}

}  // namespace

PhiDerivative PhiDerivative::pow(int d) {
    return {[d](const Rational& z) -> std::optional<Rational> {
        return Rational(d) * z.pow(d - 1);
    }};
}

PhiDerivative PhiDerivative::log() {
    return {[](const Rational& z) -> std::optional<Rational> {
        if (z.is_zero()) return std::nullopt;
        return z.inverse();
    }};
}

PhiDerivativeComplex PhiDerivativeComplex::pow(int d) {
    return {[d](const Complex& z) -> std::optional<Complex> {
        return static_cast<double>(d) * std::pow(z, d - 1);
    }};
}

PhiDerivativeComplex PhiDerivativeComplex::log() {
    return {[](const Complex& z) -> std::optional<Complex> {
        if (z == Complex(0.0, 0.0)) return std::nullopt;
        return 1.0 / z;
    }};
}

PhiDerivativeComplex PhiDerivativeComplex::exp() {
    return {[](const Complex& z) -> std::optional<Complex> { return std::exp(z); }};
}

MPoly jacobian_minor_expansion(const RMatrix& a, int d) {
    check(d >= 2, "monomial degree must be at least 2");
    const int n = a.size();
    const int r = rank(a);  // minors above the rank vanish
    auto forms = row_forms(a);
    std::vector<MPoly> powers(n);
    for (int j = 0; j < n; ++j) powers[j] = forms[j].pow(d - 1);

    MPoly sum(n, Rational(1));
    // DFS over index sets, depth-capped at the rank, sharing prefix products.
    auto rec = [&](auto&& self, int next, IndexSet& I, const MPoly& prod) -> void {
        if (!I.empty()) {
            Rational minor = principal_minor(a, I);
            if (!minor.is_zero())
                sum += prod.scaled(minor * Rational(d).pow(static_cast<long long>(I.size())));
        }
        if (static_cast<int>(I.size()) >= r) return;
        for (int j = next; j <= n; ++j) {
            I.push_back(j);
            MPoly ext = prod * powers[j - 1];
            self(self, j + 1, I, ext);
            I.pop_back();
        }
    };
    IndexSet I;
    rec(rec, 1, I, MPoly(n, Rational(1)));
    return sum;
}

bool is_good_pair_monomial(const RMatrix& a, int d) {
    MPoly j = jacobian_minor_expansion(a, d);
    return j.is_constant() && !j.is_zero();
}

namespace {

template <typename Mat, typename Scalar, typename Phi>
Scalar jacobian_value_impl(const Mat& a, const Phi& phi_prime, const std::vector<Scalar>& x,
                           const Scalar& zero, const Scalar& one) {
    const int n = a.size();
    check(n <= 12, "jacobian_value_general capped at n = 12");
    check(static_cast<int>(x.size()) == n, "point length mismatch");
    std::vector<Scalar> v(n);
    for (int j = 1; j <= n; ++j) {
        Scalar arg = zero;
        for (int k = 1; k <= n; ++k) arg += a(j, k) * x[k - 1];
        auto val = phi_prime.eval(arg);
        if (!val) throw phi_domain_error("phi' undefined at an argument row");
        v[j - 1] = *val;
    }
    // Gray-code walk over subsets, keeping the product of the nonzero phi'
    // values and a count of zero factors.
    Scalar sum = one;
    Scalar prod = one;
    int zeros = 0;
    unsigned prev = 0;
    const unsigned total = 1u << n;
    for (unsigned i = 1; i < total; ++i) {
        unsigned gray = i ^ (i >> 1);
        unsigned diff = gray ^ prev;
        int j = __builtin_ctz(diff);
        if (gray & diff) {  // element j added
            if (v[j] == zero)
                ++zeros;
            else
                prod *= v[j];
        } else {  // element j removed
            if (v[j] == zero)
                --zeros;
            else
                prod /= v[j];
        }
        prev = gray;
        if (zeros == 0) {
            Scalar minor = principal_minor(a, mask_to_indices(gray, n));
            if (!(minor == zero)) sum += minor * prod;
        }
    }
    return sum;
}

}  // namespace

Rational jacobian_value_general(const RMatrix& a, const PhiDerivative& phi_prime,
                                const std::vector<Rational>& x) {
    return jacobian_value_impl(a, phi_prime, x, Rational(0), Rational(1));
}

Complex jacobian_value_general(const CMatrix& a, const PhiDerivativeComplex& phi_prime,
                               const std::vector<Complex>& x) {
    return jacobian_value_impl(a, phi_prime, x, Complex(0.0), Complex(1.0));
}

MPoly log_jacobian_numerator(const RMatrix& a) {
    const int n = a.size();
    auto forms = row_forms(a);
    MPoly sum(n);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        IndexSet I = mask_to_indices(mask, n);
        Rational minor = principal_minor(a, I);
        if (minor.is_zero()) continue;
        MPoly prod(n, minor);
        for (int j = 1; j <= n; ++j)
            if (!(mask & (1u << (j - 1)))) prod = prod * forms[j - 1];
        sum += prod;
    }
    return sum;
}

bool is_good_pair_log(const RMatrix& a) {
    for (int j = 1; j <= a.size(); ++j) {
        bool zero_row = true;
        for (int k = 1; k <= a.size(); ++k)
            if (!a(j, k).is_zero()) zero_row = false;
        if (zero_row) return false;  // log(0) never defined
    }
    return log_jacobian_numerator(a).is_zero();
}

int JacEquationSystem::max_total_degree() const {
    int m = 0;
    for (const auto& e : equations) m = std::max(m, e.total_degree());
    return m;
}

std::vector<std::string> JacEquationSystem::variable_names() const {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) names.push_back("a" + std::to_string(j) + std::to_string(k));
    return names;
}

bool JacEquationSystem::contains(const MPoly& eq) const {
    return std::find(equations.begin(), equations.end(), eq) != equations.end();
}

JacEquationSystem generate_jacobian_equations(int n, int d) {
    check(n >= 2 && d >= 2, "need n >= 2 and d >= 2");
    if (n > 4 || d > 3) throw std::length_error("equation generation guarded to n <= 4, d <= 3");

    const int nv = n * n + n;  // a11..ann then x1..xn
    auto avar = [&](int j, int k) { return MPoly::variable(nv, (j - 1) * n + k); };
    std::vector<MPoly> lin(n);  // <A_j, x> in the joint variables
    for (int j = 1; j <= n; ++j) {
        MPoly f(nv);
        for (int k = 1; k <= n; ++k) f += avar(j, k) * MPoly::variable(nv, n * n + k);
        lin[j - 1] = f;
    }
    std::vector<MPoly> powers(n);
    for (int j = 0; j < n; ++j) powers[j] = lin[j].pow(d - 1);

    MPoly total(nv);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        IndexSet I = mask_to_indices(mask, n);
        std::vector<std::vector<MPoly>> sub(I.size(), std::vector<MPoly>(I.size()));
        for (std::size_t r = 0; r < I.size(); ++r)
            for (std::size_t c = 0; c < I.size(); ++c) sub[r][c] = avar(I[r], I[c]);
        MPoly term = poly_matrix_det(sub).scaled(Rational(d).pow(static_cast<long long>(I.size())));
        for (int j : I) term = term * powers[j - 1];
        total += term;
    }

    // Coefficients of the x-monomials, as polynomials in the a variables.
    std::map<std::vector<Exp>, std::vector<MPoly::Term>> buckets;
    for (const auto& t : total.terms()) {
        std::vector<Exp> xpart(t.exps.begin() + n * n, t.exps.end());
        std::vector<Exp> apart(t.exps.begin(), t.exps.begin() + n * n);
        buckets[std::move(xpart)].push_back({std::move(apart), t.coeff});
    }

    std::vector<std::pair<std::vector<Exp>, std::pair<Rational, MPoly>>> normalized;
    std::set<MPoly> unique;
    for (auto& [xmono, terms] : buckets) {
        MPoly eq = MPoly::from_terms(n * n, std::move(terms));
        if (eq.is_zero()) continue;
        Rational content = eq.make_primitive();
        unique.insert(eq);
        normalized.push_back({xmono, {content, std::move(eq)}});
    }
    JacEquationSystem sys;
    sys.n = n;
    sys.d = d;
    sys.raw_coefficient_count = normalized.size();
    sys.equations.assign(unique.begin(), unique.end());
    for (auto& [xmono, pair] : normalized) {
        std::size_t idx =
            std::find(sys.equations.begin(), sys.equations.end(), pair.second) - sys.equations.begin();
        sys.buckets.push_back({xmono, pair.first, idx});
    }
    return sys;
}

std::vector<Rational> simple_jacobian_equations(const RMatrix& a, int d) {
    check(d >= 2, "monomial degree must be at least 2");
    std::vector<Rational> diag(a.size());
    for (int j = 1; j <= a.size(); ++j) diag[j - 1] = a(j, j);
    return hadamard_pow(a.transpose(), d - 1) * diag;
}

std::vector<MPoly> simple_jacobian_equations_symbolic(int n, int d) {
    check(n >= 2 && d >= 2, "need n >= 2 and d >= 2");
    const int nv = n * n;
    auto avar = [&](int j, int k) { return MPoly::variable(nv, (j - 1) * n + k); };
    std::vector<MPoly> eqs;
    eqs.reserve(n);
    for (int j = 1; j <= n; ++j) {
        MPoly e(nv);
        for (int k = 1; k <= n; ++k) e += avar(k, j).pow(d - 1) * avar(k, k);
        e.make_primitive();
        eqs.push_back(std::move(e));
    }
    return eqs;
}

RMatrix homogeneity_matrix(int n, int d, const std::vector<Rational>& s) {
    check(d >= 2, "monomial degree must be at least 2");
    check(static_cast<int>(s.size()) == n, "s must have length n");
    std::vector<Rational> dth(n);
    for (int k = 0; k < n; ++k) dth[k] = s[k].pow(d);
    RMatrix h(n);
    for (int j = 1; j <= n; ++j) {
        Rational rowfac(1);
        for (int i = 1; i <= n; ++i)
            if (i != j) rowfac *= s[i - 1];
        for (int k = 1; k <= n; ++k) h(j, k) = rowfac * dth[k - 1];
    }
    return h;
}

RMatrix g2d(const Rational& s, const Rational& t, int d) {
    check(d >= 2, "monomial degree must be at least 2");
    RMatrix g(2);
    g(1, 1) = s * t.pow(d);
    g(1, 2) = -s.pow(d + 1);
    g(2, 1) = t.pow(d + 1);
    g(2, 2) = -(s.pow(d) * t);
    return g;
}

std::optional<Rank1Decomposition> rank1_good_pair_decomposition(const std::vector<Rational>& c,
                                                                const std::vector<Rational>& v, int d) {
    check(c.size() == v.size() && !c.empty(), "c and v must have equal positive length");
    const int n = static_cast<int>(c.size());
    for (const auto& cj : c) check(!cj.is_zero(), "all proportionality coefficients must be nonzero");
    Rational cond;
    for (int j = 0; j < n; ++j) cond += c[j].pow(d) * v[j];
    if (!cond.is_zero()) return std::nullopt;

    Rank1Decomposition dec;
    dec.zparams.resize(n);
    dec.s.resize(n);
    for (int j = 0; j < n - 1; ++j) dec.zparams[j] = (c[j] / c[n - 1]).pow(d) * v[j];
    for (int j = 0; j < n; ++j) dec.s[j] = c[j].inverse();
    return dec;
}

}  // namespace jmap
