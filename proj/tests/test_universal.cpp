#include "jmap/fixtures.hpp"
#include "jmap/rng.hpp"
#include "jmap/universal.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace jmap;
using namespace jmap::testing;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

/// Exhaustive fixed-order principal minor sums; all must vanish for a
/// universal matrix.
bool minor_sums_vanish(const RMatrix& a) {
    const int n = a.size();
    std::vector<Rational> sums(n);
    for (const auto& I : all_subsets(n)) sums[I.size() - 1] += principal_minor(a, I);
    for (const auto& s : sums)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("partitions") {
    CHECK_THROWS_AS(Partition({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
    CHECK(Partition({1, 2, 3}).total() == 6);
    CHECK(Partition({1, 2, 3}).offset(3) == 4);
    CHECK(all_partitions(5).size() == 7);
    CHECK(all_partitions(8).size() == 22);
}

TEST_CASE("ordered form reproduces the 6x6 golden example") {
    RMatrix a = fixtures::numeric_universal_unordered();
    OrderedForm of = ordered_form(a);
    CHECK(of.partition == Partition({1, 2, 3}));
    CHECK(of.matrix == fixtures::numeric_universal_ordered());
    CHECK(permutation_similarity(a, of.applied_permutation) == of.matrix);
    CHECK(of.block_index == std::vector<int>{1, 2, 2, 3, 3, 3});
}

TEST_CASE("ordered form on degenerate shapes") {
    RMatrix distinct = RMatrix::from_rows({
        {R(1), R(0), R(2), R(5)},
        {R(4), R(-1), R(3), R(0)},
        {R(7), R(2), R(-3), R(1)},
        {R(0), R(6), R(1), R(-2)},
    });
    OrderedForm of = ordered_form(distinct);
    CHECK(of.partition == Partition({1, 1, 1, 1}));
    CHECK(ordered_form(distinct).applied_permutation == of.applied_permutation);  // deterministic

    RMatrix equal = RMatrix::from_rows({
        {R(5), R(3), R(-8)},
        {R(5), R(3), R(-8)},
        {R(5), R(3), R(-8)},
    });
    OrderedForm ofe = ordered_form(equal);
    CHECK(ofe.partition == Partition({3}));
    CHECK(ofe.block_index == std::vector<int>{1, 1, 1});

    // Idempotence: the ordered form of an ordered form is itself.
    OrderedForm twice = ordered_form(of.matrix);
    CHECK(twice.matrix == of.matrix);
}

TEST_CASE("ordered form invariants on random block matrices") {
    Rng rng(60606);
    for (int trial = 0; trial < 25; ++trial) {
        // Build a matrix with a prescribed row-multiplicity profile, then
        // scramble it.
        int n = static_cast<int>(rng.range(2, 7));
        auto parts = all_partitions(n);
        Partition p = parts[rng.range(0, static_cast<long long>(parts.size()) - 1)];
        RMatrix a(n);
        int row = 1;
        for (int b = 1; b <= p.block_count(); ++b) {
            std::vector<Rational> content(n);
            for (auto& c : content) c = Rational(rng.range(-9, 9));
            content[0] = Rational(100 + b);  // keep the blocks distinct
            for (int i = 0; i < p.part(b); ++i, ++row)
                for (int k = 1; k <= n; ++k) a(row, k) = content[k - 1];
        }
        RMatrix scrambled = permutation_similarity(a, random_permutation(rng, n));

        OrderedForm of = ordered_form(scrambled);
        CHECK(of.partition == p);
        CHECK(permutation_similarity(scrambled, of.applied_permutation) == of.matrix);
        // Rows inside one block equal, rows across blocks differ, sizes
        // ascend.
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                bool same_block = of.block_index[j - 1] == of.block_index[k - 1];
                CHECK((of.matrix.row(j) == of.matrix.row(k)) == same_block);
            }
    }
}

TEST_CASE("block row-sum matrix") {
    CHECK(block_row_sum_matrix(fixtures::numeric_universal_ordered()) ==
          fixtures::numeric_universal_s_matrix());
    // The unordered original has a permutation-similar S, so the same test
    // applies through the ordered form.
    CHECK(block_row_sum_matrix(fixtures::numeric_universal_unordered()) ==
          fixtures::numeric_universal_s_matrix());

    // Against the brute-force similarity search: S of a scrambled matrix is
    // permutation-similar to S of the original.
    Rng srng(4711);
    RMatrix u = random_universal(Partition({1, 2, 2}), Permutation::identity(3), 99);
    RMatrix scrambled = permutation_similarity(u, random_permutation(srng, u.size()));
    CHECK(are_permutation_similar(block_row_sum_matrix(u), block_row_sum_matrix(scrambled)));

    RMatrix zsum = RMatrix::from_rows({
        {R(2), R(-1), R(-1)},
        {R(2), R(-1), R(-1)},
        {R(2), R(-1), R(-1)},
    });
    RMatrix s = block_row_sum_matrix(zsum);
    CHECK(s.size() == 1);
    CHECK(s(1, 1) == R(0));

    CHECK(block_row_sum_matrix(RMatrix::identity(2)) == RMatrix::identity(2));
}

TEST_CASE("universality test") {
    CHECK(is_universal(RMatrix::from_rows({{R(7), R(-7)}, {R(7), R(-7)}})));
    CHECK_FALSE(is_universal(RMatrix::from_rows({{R(0), R(1)}, {R(1), R(0)}})));
    CHECK(is_universal(fixtures::numeric_universal_ordered()));
    CHECK(is_universal(fixtures::numeric_universal_unordered()));
    CHECK(is_universal(RMatrix::zero(3)));
}

TEST_CASE("universality is invariant under similarity and scaling") {
    Rng rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        auto parts = all_partitions(static_cast<int>(rng.range(2, 6)));
        Partition p = parts[rng.range(0, static_cast<long long>(parts.size()) - 1)];
        Permutation pi = random_permutation(rng, p.block_count());
        RMatrix u = random_universal(p, pi, rng.next());
        Permutation sim = random_permutation(rng, u.size());
        CHECK(is_universal(permutation_similarity(u, sim)));
        CHECK(is_universal(Rational(rng.range(1, 5), 3) * u));
    }
}

TEST_CASE("tau and eta") {
    CHECK(tau(1) == RMatrix::zero(1));
    CHECK(tau(4) == RMatrix::from_rows({
                        {R(0), R(0), R(0), R(0)},
                        {R(1), R(0), R(0), R(0)},
                        {R(1), R(1), R(0), R(0)},
                        {R(1), R(1), R(1), R(0)},
                    }));
    CHECK(eta(4, Permutation({1, 4, 2, 3})) == RMatrix::from_rows({
                                                   {R(0), R(0), R(0), R(0)},
                                                   {R(1), R(0), R(0), R(1)},
                                                   {R(1), R(1), R(0), R(1)},
                                                   {R(1), R(0), R(0), R(0)},
                                               }));
}

TEST_CASE("building universal matrices from specs") {
    // Single block: all rows equal with zero row sum.
    UniversalSpec z44{Partition({4}), Permutation::identity(1), {{R(3), R(1), R(-2), R(0)}}};
    RMatrix u = build_universal(z44);
    for (int j = 1; j <= 4; ++j) {
        CHECK(u(j, 1) == R(3));
        CHECK(u(j, 2) == R(1));
        CHECK(u(j, 3) == R(-2));
        CHECK(u(j, 4) == R(-2));  // negated partial sum, ignores the given last coordinate
    }
    CHECK(is_universal(u));

    // The 5x5 example with partition (2,3).
    RMatrix d5 = build_universal(UniversalSpec{
        Partition({2, 3}),
        Permutation::identity(2),
        {{R(1), R(0)}, {R(2), R(3), R(99)}, {R(4), R(6)}, {R(7), R(8), R(99)}},
    });
    CHECK(d5 == fixtures::universal_dim5(R(1), R(2), R(3), R(4), R(6), R(7), R(8)));

    // The 8x8 example: partition (1,2,2,3) with permutation (1423). Block
    // types follow eta; S blocks keep all coordinates, Z blocks recompute
    // the last one.
    std::vector<Rational> params;
    for (int i = 1; i <= 32; ++i) params.push_back(R(i));
    UniversalSpec spec8 = fixtures::universal_dim8_spec(params);
    RMatrix u8 = build_universal(spec8);
    CHECK(u8.size() == 8);
    CHECK(is_universal(u8));
    // Row 1: blocks (1,1)..(1,4) are all Z (eta row 1 is zero):
    // zero column, (a,-a), (a,-a), (a,b,-a-b).
    CHECK(u8.row(1) == std::vector<Rational>{R(0), R(2), R(-2), R(4), R(-4), R(6), R(7), R(-13)});
    // Row 4 lies in block row 3 with eta = (1,1,0,1): S, S, Z, S.
    CHECK(u8.row(4) ==
          std::vector<Rational>{R(17), R(18), R(19), R(20), R(-20), R(22), R(23), R(24)});

    CHECK_THROWS_AS(build_universal(UniversalSpec{Partition({2}), Permutation::identity(2), {}}),
                    std::invalid_argument);
}

TEST_CASE("every built universal matrix verifies universal") {
    Rng rng(2718);
    int built = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& p : all_partitions(n)) {
            Permutation pi = random_permutation(rng, p.block_count());
            RMatrix u = random_universal(p, pi, rng.next());
            CHECK(is_universal(u));
            CHECK(is_nilpotent(u));
            ++built;
        }
    CHECK(built == 2 + 3 + 5 + 7 + 11 + 15 + 22);
}

TEST_CASE("universal matrices satisfy the minor-sum identities") {
    Rng rng(31415);
    for (int trial = 0; trial < 8; ++trial) {
        int n = static_cast<int>(rng.range(2, 6));
        auto parts = all_partitions(n);
        Partition p = parts[rng.range(0, static_cast<long long>(parts.size()) - 1)];
        RMatrix u = random_universal(p, random_permutation(rng, p.block_count()), rng.next());
        CHECK(u.trace() == R(0));
        CHECK(determinant(u) == R(0));
        CHECK(minor_sums_vanish(u));
    }
    CHECK(minor_sums_vanish(fixtures::numeric_universal_ordered()));
}

TEST_CASE("positive powers of universal matrices are universal") {
    Rng rng(999);
    for (int trial = 0; trial < 6; ++trial) {
        int n = static_cast<int>(rng.range(2, 6));
        auto parts = all_partitions(n);
        Partition p = parts[rng.range(0, static_cast<long long>(parts.size()) - 1)];
        RMatrix u = random_universal(p, random_permutation(rng, p.block_count()), rng.next());
        RMatrix power = u;
        for (int e = 2; e <= 4; ++e) {
            power = power * u;
            CHECK(is_universal(power));
        }
    }
}

TEST_CASE("kronecker products with universal matrices are universal") {
    Rng rng(525);
    Partition p({1, 2});
    RMatrix u = random_universal(p, Permutation::identity(2), 12345);
    for (int trial = 0; trial < 20; ++trial) {
        RMatrix m = random_matrix(rng, static_cast<int>(rng.range(2, 3)), 4);
        CHECK(is_universal(kronecker(u, m)));
        CHECK(is_universal(kronecker(m, u)));
    }
}

TEST_CASE("parameter count") {
    CHECK(parameter_count(Partition({4})) == 3);           // n-1 for one block
    CHECK(parameter_count(Partition({1, 2, 3})) == 12);    // 3*(6-2)
    CHECK(parameter_count(Partition({1, 1, 1, 1})) == 6);  // n(n-1)/2

    // The count of free coordinates consumed by the builder matches: S
    // blocks take p_k, Z blocks take p_k - 1.
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : all_partitions(n)) {
            Permutation pi = Permutation::identity(p.block_count());
            RMatrix e = eta(p.block_count(), pi);
            long long consumed = 0;
            for (int j = 1; j <= p.block_count(); ++j)
                for (int k = 1; k <= p.block_count(); ++k)
                    consumed += e(j, k) == Rational(1) ? p.part(k) : p.part(k) - 1;
            CHECK(consumed == parameter_count(p));
        }
}

TEST_CASE("trivial reduction") {
    RMatrix upper = RMatrix::from_rows({
        {R(0), R(1), R(2)},
        {R(0), R(0), R(3)},
        {R(0), R(0), R(0)},
    });
    CHECK(reduce_trivial(upper).empty());
    CHECK(reduce_trivial(RMatrix::from_rows({{R(0), R(5)}, {R(0), R(0)}})).empty());

    RMatrix core = RMatrix::from_rows({{R(3), R(-3)}, {R(3), R(-3)}});
    CHECK(reduce_trivial(core) == core);

    Rng rng(818);
    for (int trial = 0; trial < 10; ++trial) {
        int n = static_cast<int>(rng.range(2, 6));
        auto parts = all_partitions(n);
        Partition p = parts[rng.range(0, static_cast<long long>(parts.size()) - 1)];
        RMatrix u = random_universal(p, random_permutation(rng, p.block_count()), rng.next());
        RMatrix reduced = reduce_trivial(u);
        CHECK((reduced.empty() || is_universal(reduced)));
    }
}

TEST_CASE("random universal matrices are deterministic in the seed") {
    Partition p({2, 2});
    Permutation pi = Permutation::identity(2);
    CHECK(random_universal(p, pi, 7) == random_universal(p, pi, 7));
    CHECK(is_universal(random_universal(p, pi, 7)));
    CHECK(is_universal(Rational(3) * random_universal(p, pi, 7)));
}
