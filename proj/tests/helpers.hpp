#pragma once

#include "jmap/matrix.hpp"
#include "jmap/rng.hpp"

#include <vector>

namespace jmap::testing {

// Independent oracles, deliberately naive: these must not share code with
// the library paths they check.

/// Determinant by recursive cofactor expansion along the first row.
inline Rational cofactor_det(const RMatrix& a) {
    const int n = a.size();
    if (n == 0) return Rational(1);
    if (n == 1) return a(1, 1);
    Rational det;
    for (int c = 1; c <= n; ++c) {
        if (a(1, c).is_zero()) continue;
        IndexSet rows, cols;
        for (int j = 2; j <= n; ++j) rows.push_back(j);
        for (int k = 1; k <= n; ++k)
            if (k != c) cols.push_back(k);
        Rational term = a(1, c) * cofactor_det(submatrix(a, rows, cols));
        det += (c % 2 == 1) ? term : -term;
    }
    return det;
}

/// All nonempty subsets of {1..n} as index sets.
inline std::vector<IndexSet> all_subsets(int n) {
    std::vector<IndexSet> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        IndexSet I;
        for (int j = 1; j <= n; ++j)
            if (mask & (1u << (j - 1))) I.push_back(j);
        out.push_back(std::move(I));
    }
    return out;
}

/// Exhaustive check over all 2^n - 1 principal minors, via the cofactor
/// oracle.
inline bool minors_all_vanish_oracle(const RMatrix& a) {
    for (const auto& I : all_subsets(a.size()))
        if (!cofactor_det(submatrix(a, I, I)).is_zero()) return false;
    return true;
}

/// Rank as the largest k admitting a nonzero k x k minor (any rows/columns).
inline int minor_rank_oracle(const RMatrix& a) {
    const int n = a.size();
    auto subsets_of_size = [&](int k) {
        std::vector<IndexSet> out;
        for (const auto& I : all_subsets(n))
            if (static_cast<int>(I.size()) == k) out.push_back(I);
        return out;
    };
    for (int k = n; k >= 1; --k) {
        for (const auto& rows : subsets_of_size(k))
            for (const auto& cols : subsets_of_size(k))
                if (!cofactor_det(submatrix(a, rows, cols)).is_zero()) return k;
    }
    return 0;
}

inline RMatrix random_matrix(Rng& rng, int n, long long bound = 5, int zero_percent = 0) {
    RMatrix a(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (zero_percent > 0 && rng.range(0, 99) < zero_percent) continue;
            a(j, k) = Rational(rng.range(-bound, bound));
        }
    return a;
}

inline Permutation random_permutation(Rng& rng, int m) {
    std::vector<int> im(m);
    for (int j = 0; j < m; ++j) im[j] = j + 1;
    for (int j = m - 1; j > 0; --j) std::swap(im[j], im[rng.range(0, j)]);
    return Permutation(im);
}

inline std::vector<Rational> random_point(Rng& rng, int n, long long num_bound = 10,
                                          long long den_bound = 4) {
    std::vector<Rational> x(n);
    for (auto& c : x) c = rng.rational(num_bound, den_bound);
    return x;
}

/// Brute-force permutation-similarity search over all n! permutations;
/// usable up to n = 8.
inline bool are_permutation_similar(const RMatrix& a, const RMatrix& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    std::vector<int> im(n);
    for (int j = 0; j < n; ++j) im[j] = j + 1;
    do {
        if (permutation_similarity(a, Permutation(im)) == b) return true;
    } while (std::next_permutation(im.begin(), im.end()));
    return false;
}

}  // namespace jmap::testing
