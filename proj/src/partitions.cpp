#include <hilbhodge/partitions.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilbhodge
{

PartitionMultiplicity::PartitionMultiplicity(std::vector<int> mults) : m_mults(std::move(mults))
{
    if (std::any_of(m_mults.begin(), m_mults.end(), [](int a) { return a < 0; })) {
        throw std::invalid_argument("PartitionMultiplicity: negative multiplicity");
    }
    while (!m_mults.empty() && m_mults.back() == 0) {
        m_mults.pop_back();
    }
}

int PartitionMultiplicity::mult(int k) const
{
    if (k < 1 || k > largest()) {
        return 0;
    }
    return m_mults[k - 1];
}

int PartitionMultiplicity::size() const
{
    int n = 0;
    for (int k = 1; k <= largest(); ++k) {
        n += k * m_mults[k - 1];
    }
    return n;
}

int PartitionMultiplicity::length() const
{
    return std::accumulate(m_mults.begin(), m_mults.end(), 0);
}

namespace
{

// Fill mults[k-1] for parts k <= max_part summing to remaining.
void enumerate(int remaining, int max_part, std::vector<int> &mults, std::vector<PartitionMultiplicity> &out)
{
    if (remaining == 0) {
        out.emplace_back(mults);
        return;
    }
    if (max_part == 0) {
        return;
    }
    for (int a = remaining / max_part; a >= 0; --a) {
        mults[max_part - 1] = a;
        enumerate(remaining - a * max_part, max_part - 1, mults, out);
    }
    mults[max_part - 1] = 0;
}

} // namespace

std::vector<PartitionMultiplicity> partitions(int n)
{
    if (n < 0) {
        return {};
    }
    std::vector<PartitionMultiplicity> out;
    std::vector<int> mults(static_cast<std::size_t>(n), 0);
    enumerate(n, n, mults, out);
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_bounded_composition(int total, const std::vector<int> &bounds,
                                  const std::function<void(const std::vector<int> &)> &f)
{
    if (total < 0) {
        return;
    }
    const auto r = bounds.size();
    // suffix[i] = max reachable sum of slots i..r-1
    std::vector<int> suffix(r + 1, 0);
    for (std::size_t i = r; i-- > 0;) {
        if (bounds[i] < 0) {
            throw std::invalid_argument("bounded_compositions: negative bound");
        }
        suffix[i] = suffix[i + 1] + bounds[i];
    }
    if (total > suffix[0]) {
        return;
    }
    std::vector<int> cur(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == r) {
            if (left == 0) {
                f(cur);
            }
            return;
        }
        int lo = std::max(0, left - suffix[i + 1]);
        int hi = std::min(bounds[i], left);
        for (int v = lo; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(0, total);
}

std::vector<std::vector<int>> bounded_compositions(int total, const std::vector<int> &bounds)
{
    std::vector<std::vector<int>> out;
    for_each_bounded_composition(total, bounds, [&](const std::vector<int> &c) { out.push_back(c); });
    return out;
}

std::vector<std::pair<PartitionMultiplicity, int>> nested_index_set(int n)
{
    std::vector<std::pair<PartitionMultiplicity, int>> out;
    for (const auto &lambda : partitions(n)) {
        out.emplace_back(lambda, 0);
        for (int j = 1; j <= lambda.largest(); ++j) {
            if (lambda.mult(j) > 0) {
                out.emplace_back(lambda, j);
            }
        }
    }
    return out;
}

} // namespace hilbhodge
