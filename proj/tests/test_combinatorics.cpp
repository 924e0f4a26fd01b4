#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <hilbhodge/partitions.hpp>
#include <hilbhodge/series.hpp>

using namespace hilbhodge;

namespace
{

// Part lists in non-increasing order, independent of the multiplicity code.
void part_lists(int n, int max_part, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        part_lists(n - k, k, cur, out);
        cur.pop_back();
    }
}

PartitionMultiplicity from_parts(const std::vector<int> &parts)
{
    std::vector<int> mults(parts.empty() ? 0 : parts.front(), 0);
    for (int k : parts) {
        ++mults[k - 1];
    }
    return PartitionMultiplicity(mults);
}

} // namespace

TEST_SUITE("partitions")
{
    TEST_CASE("small cases")
    {
        auto p0 = partitions(0);
        REQUIRE(p0.size() == 1);
        CHECK(p0[0].mults().empty());
        auto p1 = partitions(1);
        REQUIRE(p1.size() == 1);
        CHECK(p1[0].mults() == std::vector<int>{1});
        CHECK(partitions(4).size() == 5);
    }

    TEST_CASE("matches an exhaustive recursive enumeration")
    {
        for (int n = 0; n <= 14; ++n) {
            std::vector<std::vector<int>> lists;
            std::vector<int> cur;
            part_lists(n, n, cur, lists);
            std::set<PartitionMultiplicity> expected;
            for (const auto &l : lists) {
                expected.insert(from_parts(l));
            }
            auto got = partitions(n);
            CHECK(std::set<PartitionMultiplicity>(got.begin(), got.end()) == expected);
            CHECK(got.size() == expected.size());
            CHECK(std::is_sorted(got.begin(), got.end()));
        }
    }

    TEST_CASE("count equals the partition function from the Euler product")
    {
        const unsigned N = 20;
        auto pf = euler_product(
            [](unsigned k) {
                auto f = TriSeries::one(N);
                f.add_term({0, 0, k}, -1);
                return invert(f);
            },
            N);
        for (unsigned n = 0; n <= N; ++n) {
            CHECK(Coefficient{static_cast<std::int64_t>(partitions(static_cast<int>(n)).size())} == pf.coeff({0, 0, n}));
        }
    }

    TEST_CASE("arithmetic invariants")
    {
        for (int n = 0; n <= 12; ++n) {
            for (const auto &lambda : partitions(n)) {
                CHECK(lambda.size() == n);
                int length = 0;
                for (int a : lambda.mults()) {
                    CHECK(a >= 0);
                    length += a;
                }
                CHECK(lambda.length() == length);
                if (!lambda.mults().empty()) {
                    CHECK(lambda.mults().back() > 0);
                }
            }
        }
    }

    TEST_CASE("trailing zeros are trimmed and negatives rejected")
    {
        CHECK(PartitionMultiplicity({2, 0, 0}).mults() == std::vector<int>{2});
        CHECK(PartitionMultiplicity({2, 0, 0}).largest() == 1);
        CHECK_THROWS(PartitionMultiplicity({1, -1}));
    }
}

TEST_SUITE("bounded compositions")
{
    TEST_CASE("examples")
    {
        CHECK(bounded_compositions(2, {2, 2}) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
        CHECK(bounded_compositions(-1, {3, 3}).empty());
        CHECK(bounded_compositions(0, {1, 4, 2}) == std::vector<std::vector<int>>{{0, 0, 0}});
        CHECK(bounded_compositions(0, {}) == std::vector<std::vector<int>>{{}});
        CHECK(bounded_compositions(1, {}).empty());
        CHECK(bounded_compositions(5, {2, 2}).empty());
    }

    TEST_CASE("count equals the coefficient of prod (1 + z + ... + z^b)")
    {
        std::mt19937_64 rng(21);
        std::uniform_int_distribution<int> r(0, 4), b(0, 5);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<int> bounds(static_cast<std::size_t>(r(rng)));
            for (auto &v : bounds) {
                v = b(rng);
            }
            BiPolynomial gen = BiPolynomial::constant(1);
            for (int bound : bounds) {
                BiPolynomial f;
                for (int i = 0; i <= bound; ++i) {
                    f.add_term({static_cast<std::uint32_t>(i), 0}, 1);
                }
                gen = gen * f;
            }
            for (int total = -1; total <= 22; ++total) {
                auto comps = bounded_compositions(total, bounds);
                auto expected = total < 0 ? Coefficient{0} : gen.coeff({static_cast<std::uint32_t>(total), 0});
                CHECK(Coefficient{static_cast<std::int64_t>(comps.size())} == expected);
                CHECK(std::is_sorted(comps.begin(), comps.end()));
                for (const auto &c : comps) {
                    int s = 0;
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        CHECK(c[i] >= 0);
                        CHECK(c[i] <= bounds[i]);
                        s += c[i];
                    }
                    CHECK(s == total);
                }
            }
        }
    }
}

TEST_SUITE("nested index set")
{
    TEST_CASE("examples")
    {
        auto n0 = nested_index_set(0);
        REQUIRE(n0.size() == 1);
        CHECK(n0[0].first.mults().empty());
        CHECK(n0[0].second == 0);

        auto n1 = nested_index_set(1);
        REQUIRE(n1.size() == 2);
        CHECK(n1[0] == std::pair{PartitionMultiplicity({1}), 0});
        CHECK(n1[1] == std::pair{PartitionMultiplicity({1}), 1});

        // (1^2) with j in {0, 1} and (2) with j in {0, 2}
        CHECK(nested_index_set(2).size() == 4);
    }

    TEST_CASE("size is the number of partitions plus the number of distinct parts")
    {
        for (int n = 0; n <= 10; ++n) {
            std::size_t expected = 0;
            for (const auto &lambda : partitions(n)) {
                expected += 1;
                for (int a : lambda.mults()) {
                    expected += a > 0 ? 1 : 0;
                }
            }
            auto set = nested_index_set(n);
            CHECK(set.size() == expected);
            for (const auto &[lambda, j] : set) {
                CHECK((j == 0 || lambda.mult(j) > 0));
            }
        }
    }
}
