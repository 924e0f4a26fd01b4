#ifndef HILBHODGE_PARTITIONS_HPP
#define HILBHODGE_PARTITIONS_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace hilbhodge
{

/// Partition of n written as 1^{a_1} 2^{a_2} ... r^{a_r}: mults[k-1] = a_k is
/// the number of parts equal to k. The last entry is positive; the empty
/// vector is the partition of 0.
class PartitionMultiplicity
{
public:
    PartitionMultiplicity() = default;
    explicit PartitionMultiplicity(std::vector<int> mults);

    const std::vector<int> &mults() const { return m_mults; }
    /// a_k for k >= 1; zero beyond the largest part.
    int mult(int k) const;
    /// Largest part r (0 for the empty partition).
    int largest() const { return static_cast<int>(m_mults.size()); }

    /// n = sum k a_k
    int size() const;
    /// |lambda| = sum a_k, the number of parts.
    int length() const;

    friend auto operator<=>(const PartitionMultiplicity &, const PartitionMultiplicity &) = default;

private:
    std::vector<int> m_mults;
};

/// All partitions of n, sorted lexicographically by multiplicity vector.
std::vector<PartitionMultiplicity> partitions(int n);

/// Calls f on every tuple (i_1..i_r) with 0 <= i_k <= bounds[k] and
/// sum i_k = total, in lexicographic order. Nothing is emitted when total < 0.
void for_each_bounded_composition(int total, const std::vector<int> &bounds,
                                  const std::function<void(const std::vector<int> &)> &f);

std::vector<std::vector<int>> bounded_compositions(int total, const std::vector<int> &bounds);

/// Pairs (lambda, j) with lambda a partition of n and j = 0 or a_j > 0,
/// ordered by lambda then j.
std::vector<std::pair<PartitionMultiplicity, int>> nested_index_set(int n);

} // namespace hilbhodge

#endif
