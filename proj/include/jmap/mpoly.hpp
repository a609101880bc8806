#pragma once

#include "jmap/matrix.hpp"
#include "jmap/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jmap {

using Exp = std::uint16_t;

/// Graded-lex on exponent vectors: higher total degree wins, ties broken
/// lexicographically from the first variable.
bool grlex_less(const std::vector<Exp>& a, const std::vector<Exp>& b);

/// Sparse multivariate polynomial over Rationals. Terms are kept in graded-lex
/// descending order with no zero coefficients, so equality is structural.
class MPoly {
public:
    struct Term {
        std::vector<Exp> exps;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}
    MPoly(int nvars, const Rational& c);

    static MPoly constant(int nvars, const Rational& c) { return MPoly(nvars, c); }
    static MPoly variable(int nvars, int var);  // var is 1-based
    static MPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.front(); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const Rational& c) const;
    MPoly pow(int d) const;
    MPoly derivative(int var) const;  // d/dx_var, 1-based

    Rational eval(const std::vector<Rational>& point) const;
    /// Substitute images[v-1] for variable v; images share a common nvars.
    MPoly compose(const std::vector<MPoly>& images) const;

    /// Integer content together with the sign of the leading coefficient
    /// divided out: the result has coprime integer coefficients and a
    /// positive leading term. Returns the factor that was removed.
    Rational make_primitive();

    /// Human-readable form with the given variable names, graded-lex
    /// descending, e.g. "3/2*x1^2*x2 - x3 + 1".
    std::string str(const std::vector<std::string>& names) const;
    /// Default names x1..xn.
    std::string str() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;
    bool operator<(const MPoly& o) const;  // for canonical system ordering

private:
    int nvars_;
    std::vector<Term> terms_;
};

/// True iff p^d == q^d; over the rationals this happens exactly when p == q,
/// or p == -q with d even.
bool pow_equal(const MPoly& p, const MPoly& q, int d);

/// Polynomial self-map of n-space: n components in n variables.
class PolyMap {
public:
    PolyMap() = default;
    explicit PolyMap(std::vector<MPoly> components);

    static PolyMap identity(int n);
    /// The linear map x -> Ax.
    static PolyMap linear(const RMatrix& a);
    /// x + (Ax)^d applied coordinatewise.
    static PolyMap power_map(const RMatrix& a, int d);

    int dimension() const { return static_cast<int>(components_.size()); }
    const MPoly& component(int j) const { return components_[j - 1]; }
    const std::vector<MPoly>& components() const { return components_; }

    std::vector<Rational> eval(const std::vector<Rational>& point) const;

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

private:
    std::vector<MPoly> components_;
};

/// f after g: component j is f_j with g's components substituted.
PolyMap poly_compose(const PolyMap& f, const PolyMap& g);

/// Symbolic determinant of the matrix of partials (d f_k / d x_j), expanded
/// by minor recursion. Exponential in n; intended for n <= 8.
MPoly jacobian_det(const PolyMap& f);

/// Determinant of an explicit polynomial matrix (row-major, square).
MPoly poly_matrix_det(const std::vector<std::vector<MPoly>>& m);

}  // namespace jmap
