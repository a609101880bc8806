#pragma once

#include "jmap/matrix.hpp"

#include <cstdint>
#include <vector>

namespace jmap {

/// Ascending positive parts summing to n.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int block_count() const { return static_cast<int>(parts_.size()); }
    int total() const;
    int part(int j) const { return parts_[j - 1]; }
    const std::vector<int>& parts() const { return parts_; }
    /// 1-based start offset of block j's row/column range.
    int offset(int j) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, ascending parts, in a deterministic order.
std::vector<Partition> all_partitions(int n);

/// Permutation-similar representative with equal rows grouped into adjacent
/// blocks of ascending size.
struct OrderedForm {
    RMatrix matrix;
    Permutation applied_permutation;  // matrix[pi(j)][pi(k)] = original[j][k]
    Partition partition;
    std::vector<int> block_index;  // block number (1-based) of each row of `matrix`
};

/// Groups equal rows into blocks and orders blocks by (multiplicity,
/// first occurrence). Within a block the columns are ordered by the total
/// magnitude of their entries across one representative row per block,
/// ties by original index; this makes the result deterministic.
OrderedForm ordered_form(const RMatrix& a);

/// S(A): the m x m matrix of block row sums, computed through the ordered
/// form of A.
RMatrix block_row_sum_matrix(const RMatrix& a);

/// Universality test: all principal minors of the block row-sum matrix
/// vanish. Uses the grouping of equal rows directly, without physically
/// reordering A.
bool is_universal(const RMatrix& a);

/// Strictly lower triangular m x m 0/1 matrix with units under the diagonal;
/// tau(1) is the 1x1 zero matrix.
RMatrix tau(int m);

/// eta = Pi tau_m Pi^T for the permutation pi on m elements.
RMatrix eta(int m, const Permutation& pi);

/// Data defining U(p, Pi): for each block (j,k) a parameter vector of length
/// p_k. Blocks with eta_{jk} = 0 ignore the last coordinate (recomputed as
/// the negated partial sum); their p_k = 1 case is a zero column.
struct UniversalSpec {
    Partition partition;
    Permutation permutation;  // on m = partition.block_count() elements
    std::vector<std::vector<Rational>> parameters;  // m*m vectors, row-major by (j,k)

    const std::vector<Rational>& parameter(int j, int k) const {
        return parameters[static_cast<std::size_t>(j - 1) * partition.block_count() + (k - 1)];
    }
};

/// Assembles the block matrix from the spec; the result is always universal.
RMatrix build_universal(const UniversalSpec& spec);

/// Number of free parameters of U(p, Pi): m*n - m*(m+1)/2.
long long parameter_count(const Partition& p);

/// Repeatedly deletes any index whose row or column is entirely zero;
/// the result may be 0x0.
RMatrix reduce_trivial(const RMatrix& a);

/// Deterministic universal matrix with integer parameters in [-9, 9],
/// no parameter vector entirely zero.
RMatrix random_universal(const Partition& p, const Permutation& pi, std::uint64_t seed);

/// The spec behind random_universal, for tests that need the parameters.
UniversalSpec random_universal_spec(const Partition& p, const Permutation& pi, std::uint64_t seed);

}  // namespace jmap
