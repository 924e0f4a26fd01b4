#ifndef HILBHODGE_VERIFY_HPP
#define HILBHODGE_VERIFY_HPP

#include <string>
#include <vector>

#include <hilbhodge/surface.hpp>

namespace hilbhodge
{

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every two-path identity that applies to the dataset up to t^N.
/// Checks whose inputs are absent from the dataset are skipped, not failed.
std::vector<CheckResult> run_verification(const SurfaceDataset &ds, unsigned N);

} // namespace hilbhodge

#endif
