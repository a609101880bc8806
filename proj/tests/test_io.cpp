#include "jmap/fixtures.hpp"
#include "jmap/goodpair.hpp"
#include "jmap/io.hpp"
#include "jmap/rng.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace jmap;
using namespace jmap::testing;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

MPoly random_poly(Rng& rng, int nvars, int max_deg, int max_terms) {
    std::vector<MPoly::Term> terms;
    int count = static_cast<int>(rng.range(0, max_terms));
    for (int t = 0; t < count; ++t) {
        MPoly::Term term;
        term.exps.resize(nvars);
        for (int v = 0; v < nvars; ++v) term.exps[v] = static_cast<Exp>(rng.range(0, max_deg / nvars));
        term.coeff = rng.rational(9, 4);
        if (!term.coeff.is_zero()) terms.push_back(std::move(term));
    }
    return MPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

TEST_CASE("matrix text format round-trips exactly") {
    RMatrix m = fixtures::numeric_universal_ordered();
    CHECK(parse_matrix(format_matrix(m)) == m);

    RMatrix q = RMatrix::from_rows({{R(1, 2), R(-3, 7)}, {R(0), R(22, 5)}});
    std::string text = format_matrix(q);
    CHECK(text == "n 2\n1/2 -3/7\n0 22/5\n");
    CHECK(parse_matrix(text) == q);

    CHECK_THROWS_AS(parse_matrix("m 2\n1 2\n3 4\n"), parse_error);
    CHECK_THROWS_AS(parse_matrix("n 2\n1 2\n3\n"), parse_error);
    CHECK_THROWS_AS(parse_matrix("n 2\n1 2\n3 x\n"), parse_error);

    Rng rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.range(1, 6));
        RMatrix a(n);
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) a(j, k) = rng.rational(50, 9);
        CHECK(parse_matrix(format_matrix(a)) == a);
    }
}

TEST_CASE("complex matrix format round-trips") {
    CMatrix c = fixtures::log_circulant4_i();
    CMatrix back = parse_cmatrix(format_cmatrix(c));
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) CHECK(back(j, k) == c(j, k));

    CMatrix g = fixtures::log_circulant5_golden();
    CMatrix gback = parse_cmatrix(format_cmatrix(g));
    for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k) CHECK(gback(j, k) == g(j, k));
}

TEST_CASE("universal spec format") {
    std::vector<Rational> params;
    for (int i = 1; i <= 32; ++i) params.push_back(R(i));
    UniversalSpec spec = fixtures::universal_dim8_spec(params);
    std::string text = format_universal_spec(spec);
    UniversalSpec back = parse_universal_spec(text);
    CHECK(back.partition == spec.partition);
    CHECK(back.permutation == spec.permutation);
    CHECK(back.parameters == spec.parameters);
    CHECK(build_universal(back) == build_universal(spec));

    CHECK_THROWS_AS(parse_universal_spec("perm 1\n"), parse_error);
    // A zero part is an invariant violation, not a parse failure.
    CHECK_THROWS_AS(parse_universal_spec("partition 0 2\nperm 1 2\n"), std::invalid_argument);
}

TEST_CASE("machine polynomial format") {
    Rng rng(9001);
    for (int trial = 0; trial < 25; ++trial) {
        int nvars = static_cast<int>(rng.range(1, 5));
        MPoly p = random_poly(rng, nvars, 8, 6);
        CHECK(parse_mpoly_machine(format_mpoly_machine(p), nvars) == p);
    }
    CHECK(parse_mpoly_machine("", 3).is_zero());
    CHECK_THROWS_AS(parse_mpoly_machine("1 2", 3), parse_error);

    PolyMap f = PolyMap::power_map(fixtures::numeric_universal_ordered(), 2);
    CHECK(parse_polymap_machine(format_polymap_machine(f)) == f);
}

TEST_CASE("equation system format") {
    JacEquationSystem sys = generate_jacobian_equations(2, 2);
    JacEquationSystem back = parse_equation_system(format_equation_system(sys));
    CHECK(back.n == 2);
    CHECK(back.d == 2);
    CHECK(back.equations == sys.equations);
}

TEST_CASE("human-readable polynomial strings") {
    MPoly x1 = MPoly::variable(2, 1), x2 = MPoly::variable(2, 2);
    MPoly p = (x1 * x1).scaled(R(3, 2)) - x2 + MPoly(2, R(1));
    CHECK(p.str() == "3/2*x1^2 - x2 + 1");
    CHECK(MPoly(2).str() == "0");
    CHECK((-x1).str() == "-x1");
}
