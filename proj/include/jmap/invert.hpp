#pragma once

#include "jmap/complexmat.hpp"
#include "jmap/matrix.hpp"
#include "jmap/mpoly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jmap {

/// The iteration failed to stabilize within the cap; by convention the
/// Newton order is infinite (or exceeds the cap).
class newton_divergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested polynomial expansion would exceed the term budget.
class expansion_overflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One Newton iteration: component j of the result is
/// f_j - <A_j, nu_prev(f)>^d.
PolyMap newton_step(const RMatrix& a, int d, const PolyMap& nu_prev);

/// Stabilized Newton inverse of x + (Ax)^d in rank-compressed form: with
/// y = B f (a row-space basis of A), the inverse is f - w(B f), where the
/// components of w are polynomials in rank(A) variables. Both compositions
/// with the forward map are verified exactly during construction.
struct NewtonCore {
    int n = 0;
    int order = 0;
    int matrix_rank = 0;
    std::vector<std::vector<Rational>> basis;  // rank x n, rows of B
    std::vector<MPoly> w;                      // n components in rank variables

    /// Inverse image of a point f.
    std::vector<Rational> eval(const std::vector<Rational>& f) const;

    /// Expanded inverse as a PolyMap in f. Throws expansion_overflow when a
    /// rough term estimate exceeds max_terms.
    PolyMap expand(std::size_t max_terms = 200000) const;
};

/// Iterates newton_step from the identity until exact stabilization; order
/// is the index of the last change. Throws newton_divergence when order
/// would exceed cap (default: the dimension).
NewtonCore finite_newton_core(const RMatrix& a, int d, int cap = -1);

struct NewtonResult {
    int order = 0;
    PolyMap inverse;
};

/// finite_newton_core followed by expansion.
NewtonResult finite_newton_inverse(const RMatrix& a, int d, int cap = -1);

/// Exact check that g composed with x + (Ax)^d in both orders yields the
/// identity.
bool verify_inverse(const RMatrix& a, int d, const PolyMap& g);

/// Point-evaluable analytic function over complex doubles.
struct PhiPointComplex {
    std::function<std::optional<Complex>(const Complex&)> eval;

    static PhiPointComplex pow(int d);
    static PhiPointComplex log();
    static PhiPointComplex exp();
};

/// nu_iters(f) by direct floating iteration; throws phi domain violations
/// as std::domain_error and rejects non-finite intermediates.
std::vector<Complex> newton_numeric(const CMatrix& a, const PhiPointComplex& phi,
                                    const std::vector<Complex>& f, int iters);

/// Relative sup-norm change between consecutive iterates, one entry per
/// step; a witness for (non-)stabilization.
std::vector<double> newton_numeric_changes(const CMatrix& a, const PhiPointComplex& phi,
                                           const std::vector<Complex>& f, int iters);

}  // namespace jmap
