#include <doctest.h>

#include <hilbhodge/verify.hpp>

using namespace hilbhodge;

namespace
{

bool all_passed(const std::vector<CheckResult> &results)
{
    for (const auto &r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return !results.empty();
}

bool has_check(const std::vector<CheckResult> &results, const std::string &name)
{
    for (const auto &r : results) {
        if (r.name == name) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_SUITE("verify")
{
    TEST_CASE("every preset passes")
    {
        for (const auto &name : preset_names()) {
            CAPTURE(name);
            CHECK(all_passed(run_verification(preset(name), 4)));
        }
    }

    TEST_CASE("omega-trivial cross-check runs only where it applies")
    {
        CHECK(has_check(run_verification(preset("torus"), 3), "omega-trivial deformation cross-check"));
        CHECK(has_check(run_verification(preset("k3"), 3), "omega-trivial deformation cross-check"));
        CHECK_FALSE(has_check(run_verification(preset("enriques"), 3), "omega-trivial deformation cross-check"));
        CHECK_FALSE(has_check(run_verification(preset("hopf"), 3), "deformation closed forms"));
    }

    TEST_CASE("corrupted Betti numbers are caught")
    {
        auto ds = preset("hopf");
        ds.betti = std::array<std::int64_t, 5>{1, 1, 1, 1, 1};
        auto results = run_verification(ds, 3);
        CHECK_FALSE(all_passed(results));
        for (const auto &r : results) {
            if (!r.passed) {
                CHECK(r.name == "Frolicher degeneration (Betti vs Hodge)");
                CHECK(r.detail.find("Hilb^1") != std::string::npos);
                break;
            }
        }
    }

    TEST_CASE("insufficient powers surface to the caller")
    {
        CHECK_THROWS_AS(run_verification(preset("hopf", 2), 3), InsufficientPowers);
    }
}
