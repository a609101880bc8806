#include "jmap/universal.hpp"

#include "jmap/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jmap {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

/// Equal-row blocks in first-occurrence order; each block lists original row
/// indices ascending.
std::vector<std::vector<int>> row_blocks(const RMatrix& a) {
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= a.size(); ++j) {
        bool placed = false;
        for (auto& b : blocks)
            if (a.row(b.front()) == a.row(j)) {
                b.push_back(j);
                placed = true;
                break;
            }
        if (!placed) blocks.push_back({j});
    }
    return blocks;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check(!parts_.empty(), "partition must be nonempty");
    int prev = 1;
    for (int p : parts_) {
        check(p >= 1, "partition parts must be positive");
        check(p >= prev, "partition parts must ascend");
        prev = p;
    }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::offset(int j) const {
    int off = 1;
    for (int i = 1; i < j; ++i) off += parts_[i - 1];
    return off;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int min_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = min_part; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, 1);
    return out;
}

OrderedForm ordered_form(const RMatrix& a) {
    const int n = a.size();
    check(n >= 1, "ordered form needs a nonempty matrix");
    auto blocks = row_blocks(a);

    std::vector<int> reps;
    for (const auto& b : blocks) reps.push_back(b.front());

    // Blocks by (multiplicity, first occurrence).
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const std::vector<int>& x, const std::vector<int>& y) {
                         return x.size() < y.size();
                     });

    // Within a block, columns by total magnitude over the representative
    // rows, ties by original index.
    auto column_key = [&](int c) {
        Rational key;
        for (int r : reps) key += a(r, c).abs();
        return key;
    };
    for (auto& b : blocks)
        std::stable_sort(b.begin(), b.end(), [&](int x, int y) { return column_key(x) < column_key(y); });

    std::vector<int> dest;  // new position -> original index
    std::vector<int> parts;
    std::vector<int> block_of_row;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        parts.push_back(static_cast<int>(blocks[bi].size()));
        for (int r : blocks[bi]) {
            dest.push_back(r);
            block_of_row.push_back(static_cast<int>(bi) + 1);
        }
    }
    std::vector<int> images(n);
    for (int pos = 1; pos <= n; ++pos) images[dest[pos - 1] - 1] = pos;
    Permutation pi{std::move(images)};

    OrderedForm of;
    of.matrix = permutation_similarity(a, pi);
    of.applied_permutation = pi;
    of.partition = Partition(std::move(parts));
    of.block_index = std::move(block_of_row);
    return of;
}

RMatrix block_row_sum_matrix(const RMatrix& a) {
    OrderedForm of = ordered_form(a);
    const int m = of.partition.block_count();
    RMatrix s(m);
    for (int j = 1; j <= m; ++j) {
        const int row = of.partition.offset(j);
        for (int k = 1; k <= m; ++k) {
            Rational sum;
            const int off = of.partition.offset(k);
            for (int c = off; c < off + of.partition.part(k); ++c) sum += of.matrix(row, c);
            s(j, k) = sum;
        }
    }
    return s;
}

bool is_universal(const RMatrix& a) {
    if (a.empty()) return true;
    auto blocks = row_blocks(a);
    const int m = static_cast<int>(blocks.size());
    RMatrix s(m);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            Rational sum;
            for (int c : blocks[k - 1]) sum += a(blocks[j - 1].front(), c);
            s(j, k) = sum;
        }
    return all_principal_minors_vanish(s);
}

RMatrix tau(int m) {
    check(m >= 1, "tau needs m >= 1");
    RMatrix t(m);
    for (int j = 2; j <= m; ++j)
        for (int k = 1; k < j; ++k) t(j, k) = Rational(1);
    return t;
}

RMatrix eta(int m, const Permutation& pi) { return permutation_similarity(tau(m), pi); }

RMatrix build_universal(const UniversalSpec& spec) {
    const Partition& p = spec.partition;
    const int m = p.block_count();
    const int n = p.total();
    check(spec.permutation.size() == m, "permutation must act on the partition blocks");
    check(static_cast<int>(spec.parameters.size()) == m * m, "need one parameter vector per block");
    const RMatrix e = eta(m, spec.permutation);

    RMatrix u(n);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            const auto& a = spec.parameter(j, k);
            check(static_cast<int>(a.size()) == p.part(k), "parameter vector length must be p_k");
            std::vector<Rational> row(p.part(k));
            if (e(j, k) == Rational(1)) {
                row = a;
            } else if (p.part(k) > 1) {
                Rational sum;
                for (int i = 0; i < p.part(k) - 1; ++i) {
                    row[i] = a[i];
                    sum += a[i];
                }
                row[p.part(k) - 1] = -sum;
            }  // p_k = 1: zero column
            for (int r = p.offset(j); r < p.offset(j) + p.part(j); ++r)
                for (int i = 0; i < p.part(k); ++i) u(r, p.offset(k) + i) = row[i];
        }
    return u;
}

long long parameter_count(const Partition& p) {
    const long long m = p.block_count();
    const long long n = p.total();
    return m * n - m * (m + 1) / 2;
}

RMatrix reduce_trivial(const RMatrix& a) {
    RMatrix cur = a;
    for (;;) {
        const int n = cur.size();
        if (n == 0) return cur;
        int victim = 0;
        for (int j = 1; j <= n && victim == 0; ++j) {
            bool row_zero = true, col_zero = true;
            for (int k = 1; k <= n; ++k) {
                if (!cur(j, k).is_zero()) row_zero = false;
                if (!cur(k, j).is_zero()) col_zero = false;
            }
            if (row_zero || col_zero) victim = j;
        }
        if (victim == 0) return cur;
        RMatrix next(n - 1);
        for (int j = 1, jj = 1; j <= n; ++j) {
            if (j == victim) continue;
            for (int k = 1, kk = 1; k <= n; ++k) {
                if (k == victim) continue;
                next(jj, kk) = cur(j, k);
                ++kk;
            }
            ++jj;
        }
        cur = std::move(next);
    }
}

UniversalSpec random_universal_spec(const Partition& p, const Permutation& pi, std::uint64_t seed) {
    const int m = p.block_count();
    check(pi.size() == m, "permutation must act on the partition blocks");
    Rng rng(seed);
    const RMatrix e = eta(m, pi);
    UniversalSpec spec{p, pi, {}};
    spec.parameters.resize(static_cast<std::size_t>(m) * m);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            const bool s_block = e(j, k) == Rational(1);
            const int len = p.part(k);
            const int effective = s_block ? len : len - 1;
            std::vector<Rational> vec(len);
            for (;;) {
                bool nonzero = effective == 0;
                Rational sum;
                for (int i = 0; i < len; ++i) {
                    vec[i] = Rational(rng.range(-9, 9));
                    if (i < effective && !vec[i].is_zero()) nonzero = true;
                    sum += vec[i];
                }
                // An S block with zero row sum degenerates into a Z block
                // and changes the dependency chain; keep parameters generic.
                if (s_block && sum.is_zero()) continue;
                if (nonzero) break;
            }
            spec.parameters[static_cast<std::size_t>(j - 1) * m + (k - 1)] = std::move(vec);
        }
    return spec;
}

RMatrix random_universal(const Partition& p, const Permutation& pi, std::uint64_t seed) {
    return build_universal(random_universal_spec(p, pi, seed));
}

}  // namespace jmap
