#pragma once

#include "jmap/complexmat.hpp"
#include "jmap/matrix.hpp"
#include "jmap/mpoly.hpp"
#include "jmap/universal.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jmap {

/// phi' undefined at a required argument.
class phi_domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation contract for phi' in exact rational arithmetic; returns
/// nullopt where phi' is undefined.
struct PhiDerivative {
    std::function<std::optional<Rational>(const Rational&)> eval;

    /// phi(z) = z^d, so phi'(z) = d z^{d-1}.
    static PhiDerivative pow(int d);
    /// phi(z) = log z, so phi'(z) = 1/z, undefined at 0.
    static PhiDerivative log();
};

/// Same contract over complex doubles, for phi with no rational derivative.
struct PhiDerivativeComplex {
    std::function<std::optional<Complex>(const Complex&)> eval;

    static PhiDerivativeComplex pow(int d);
    static PhiDerivativeComplex log();
    static PhiDerivativeComplex exp();
};

/// The Jacobian of x + (Ax)^d as a polynomial in x, assembled from principal
/// minors: 1 + sum over nonempty I of [A]_I prod_{j in I} d<A_j,x>^{d-1}.
MPoly jacobian_minor_expansion(const RMatrix& a, int d);

/// True iff the Jacobian of x + (Ax)^d is a nonzero constant (then 1).
bool is_good_pair_monomial(const RMatrix& a, int d);

/// Value of J(A,phi;x) by direct summation over nonempty subsets, with the
/// phi' products updated in Gray-code order. Throws phi_domain_error when
/// phi' is undefined at some <A_j,x>; n is capped at 12.
Rational jacobian_value_general(const RMatrix& a, const PhiDerivative& phi_prime,
                                const std::vector<Rational>& x);
Complex jacobian_value_general(const CMatrix& a, const PhiDerivativeComplex& phi_prime,
                               const std::vector<Complex>& x);

/// J(A,log;x) - 1 with denominators cleared: sum over nonempty I of
/// [A]_I prod_{j not in I} <A_j,x>. Identically zero iff (A, log) is good,
/// for A without zero rows.
MPoly log_jacobian_numerator(const RMatrix& a);

/// Symbolic good-pair test for phi = log (requires no zero row).
bool is_good_pair_log(const RMatrix& a);

/// Jacobian equations in dimension n of degree d: the primitive coefficient
/// polynomials of J(A, z^d; x) - 1 in the variables a_11..a_nn, deduplicated
/// and sorted.
struct JacEquationSystem {
    /// Where each x-monomial coefficient of J - 1 went: coefficient =
    /// content * equations[equation_index].
    struct Bucket {
        std::vector<Exp> x_monomial;  // length n
        Rational content;
        std::size_t equation_index;
    };

    int n = 0;
    int d = 0;
    std::size_t raw_coefficient_count = 0;  // nonzero x-monomial coefficients before dedup
    std::vector<MPoly> equations;           // nvars = n*n, variable order a11,a12,...,ann
    std::vector<Bucket> buckets;

    int max_total_degree() const;
    std::vector<std::string> variable_names() const;
    bool contains(const MPoly& eq) const;
};

/// Cost guard: n <= 4 and d <= 3.
JacEquationSystem generate_jacobian_equations(int n, int d);

/// The n-vector (A^T)^{Hadamard (d-1)} diag A; zero is necessary for a good
/// pair with z^d.
std::vector<Rational> simple_jacobian_equations(const RMatrix& a, int d);

/// The same n polynomials symbolically, in the a_jk variables.
std::vector<MPoly> simple_jacobian_equations_symbolic(int n, int d);

/// H_{n,d}(s): row j is (prod_{i != j} s_i) * (s_1^d, ..., s_n^d). The row
/// product form extends the matrix to vectors with zero coordinates.
RMatrix homogeneity_matrix(int n, int d, const std::vector<Rational>& s);

/// G(2,d) = [[s t^d, -s^{d+1}], [t^{d+1}, -s^d t]]; a good pair with z^d for
/// every (s, t).
RMatrix g2d(const Rational& s, const Rational& t, int d);

/// Rank-1 decomposition data: c (x) v = lambda * (Z_nn[zparams] (.) H_{n,d}(s))
/// for a nonzero constant lambda.
struct Rank1Decomposition {
    std::vector<Rational> zparams;  // length n, last coordinate ignored by the Z block
    std::vector<Rational> s;        // length n
};

/// Checks c_1^d v_1 + ... + c_n^d v_n = 0 and returns the decomposition
/// parameters when it holds. All c_j must be nonzero.
std::optional<Rank1Decomposition> rank1_good_pair_decomposition(const std::vector<Rational>& c,
                                                                const std::vector<Rational>& v, int d);

}  // namespace jmap
