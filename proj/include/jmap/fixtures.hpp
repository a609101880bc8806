#pragma once

#include "jmap/complexmat.hpp"
#include "jmap/matrix.hpp"
#include "jmap/universal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jmap::fixtures {

// Builders for the regression corpus. Each returns one concrete matrix;
// parametric families take their parameters explicitly.

/// 6x6 universal matrix with three distinct rows, scrambled.
RMatrix numeric_universal_unordered();
/// Its ordered form: blocks of sizes 1, 2, 3.
RMatrix numeric_universal_ordered();
/// Golden block row-sum matrix of the ordered form.
RMatrix numeric_universal_s_matrix();

/// U((2,3), id) with parameters (a,-a,b,c | s,t,u,v).
RMatrix universal_dim5(const Rational& a, const Rational& b, const Rational& c, const Rational& s,
                       const Rational& t, const Rational& u, const Rational& v);

/// Spec for the 8x8 example U((1,2,2,3), (1423)); parameters are consumed
/// in row-major block order.
UniversalSpec universal_dim8_spec(const std::vector<Rational>& params);

/// Idempotent centrosymmetric 4x4 matrix; a good pair with z^2 but not
/// universal. Requires ab(a+b)(2ac+b^2) != 0.
RMatrix idempotent_centrosymmetric(const Rational& a, const Rational& b, const Rational& c);

/// 6x6 rank-2 family, good with z^3.
RMatrix rank2_dim6(const Rational& a, const Rational& b);

/// 8x8 rank-2 family, good with z^5.
RMatrix rank2_dim8(const Rational& a, const Rational& b);

/// Cross-shaped matrix: first row (0, a), first column (0, b)^T, zero
/// elsewhere. Good with z^d iff sum a_j b_j^d = 0.
RMatrix cross_shaped(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// 4x4 family of good pairs with log.
RMatrix log_family_dim4(const Rational& a, const Rational& b, const Rational& s, const Rational& t);

/// 4x4 rank-2 matrix of rational functions in the entries of two
/// nondegenerate 2x2 matrices ((a,b),(c,d)) and ((s,t),(u,v)); good with z^2.
RMatrix rational_rank2_dim4(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                            const Rational& s, const Rational& t, const Rational& u, const Rational& v);

/// H_{4,3}(s) (.) (((a,b),(c,d)) (x) ((1,-1),(1,-1))) with rows/columns in
/// the display order of the dim-4 degree-3 family.
RMatrix homogeneity_family_dim4(const Rational& a, const Rational& b, const Rational& c,
                                const Rational& d, const std::vector<Rational>& s);

// Floating circulants that form good pairs with log.
CMatrix log_circulant4_i();      // C(0, 1, -1-i, i)
CMatrix log_circulant4_conj();   // C(0, 1+i, -2, 1-i)
CMatrix log_circulant5_sqrt5();  // C(0, 2, -1-sqrt5, 1+sqrt5, -2)
CMatrix log_circulant5_golden(); // C(0, ...) with sqrt(10-2 sqrt5) entries

/// Catalog entry: a matrix file plus the expected verdicts.
struct FixtureRecord {
    std::string name;
    std::string file;
    std::string phi;   // "pow <d>" | "log" | "exp"
    std::string mode;  // "exact" | "float"
    bool expect_good = true;
    std::optional<bool> expect_universal;
    std::optional<int> expect_order;
};

struct FixtureOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<FixtureRecord> load_catalog(const std::string& path);
FixtureOutcome run_fixture(const FixtureRecord& rec, const std::string& base_dir);

/// Runs every fixture whose name contains `filter` (all when empty).
std::vector<FixtureOutcome> run_fixtures(const std::string& catalog_path, const std::string& base_dir,
                                         const std::string& filter = "");

}  // namespace jmap::fixtures
