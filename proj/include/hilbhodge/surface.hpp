#ifndef HILBHODGE_SURFACE_HPP
#define HILBHODGE_SURFACE_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <hilbhodge/series.hpp>

namespace hilbhodge
{

class DatasetError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text.
class ParseError : public DatasetError
{
public:
    using DatasetError::DatasetError;
};

/// Well-formed input with missing or mistyped fields.
class SchemaError : public DatasetError
{
public:
    using DatasetError::DatasetError;
};

class ValidationError : public DatasetError
{
public:
    using DatasetError::DatasetError;
};

class UnknownPreset : public DatasetError
{
public:
    using DatasetError::DatasetError;
};

/// A computation needs h^{p,q}(S, L^k) for a k the table does not cover.
class InsufficientPowers : public std::runtime_error
{
public:
    InsufficientPowers(unsigned missing, unsigned available);

    unsigned missing_power() const { return m_missing; }

private:
    unsigned m_missing;
};

/// h[p][q] = h^{p,q}(S, M) for a fixed line bundle M.
struct SurfaceDiamond {
    std::array<std::array<std::int64_t, 3>, 3> h{};

    std::int64_t operator()(int p, int q) const { return h[p][q]; }

    SurfaceDiamond transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;
    /// sum h^{p,q} x^p y^q
    BiPolynomial polynomial() const;
    /// Collapse along p + q: the Betti numbers when M is trivial.
    std::array<std::int64_t, 5> total_degree_sums() const;

    friend bool operator==(const SurfaceDiamond &, const SurfaceDiamond &) = default;
};

/// Diamonds of S with coefficients in L^k (possibly tensored with a fixed
/// L'), for k = 0..max_power().
class TwistedTable
{
public:
    TwistedTable() = default;
    explicit TwistedTable(std::vector<SurfaceDiamond> diamonds) : m_diamonds(std::move(diamonds)) {}

    /// The table of a trivial bundle: every power has the same diamond.
    static TwistedTable constant(const SurfaceDiamond &d, unsigned max_power);

    bool empty() const { return m_diamonds.empty(); }
    unsigned max_power() const;
    const std::vector<SurfaceDiamond> &diamonds() const { return m_diamonds; }

    /// Diamond for L^k; throws InsufficientPowers past max_power().
    const SurfaceDiamond &at(unsigned k) const;
    /// Throws InsufficientPowers unless powers 0..k are all present.
    void require(unsigned k) const;

    bool is_constant() const;

    friend bool operator==(const TwistedTable &, const TwistedTable &) = default;

private:
    std::vector<SurfaceDiamond> m_diamonds;
};

/// Inputs for the tangent cohomology of Hilb^n S.
struct DeformationInput {
    std::array<std::int64_t, 3> hT{};  // h^q(S, T_S)
    std::array<std::int64_t, 3> hO{};  // h^{0,q}(S)
    std::array<std::int64_t, 3> hW2{}; // h^q(S, Lambda^2 T_S)
    bool connected = true;

    friend bool operator==(const DeformationInput &, const DeformationInput &) = default;
};

struct SurfaceDataset {
    std::string name;
    TwistedTable table;
    std::optional<TwistedTable> nested_table;
    std::optional<DeformationInput> deformation;
    std::optional<std::array<std::int64_t, 5>> betti;
    bool kahler_symmetric = false;

    friend bool operator==(const SurfaceDataset &, const SurfaceDataset &) = default;
};

struct ValidationReport {
    std::vector<std::string> warnings;

    bool clean() const { return warnings.empty(); }
};

/// Hard violations throw ValidationError; soft ones become warnings.
ValidationReport validate(const SurfaceDataset &ds);

/// Parses and validates a dataset in the JSON schema.
SurfaceDataset parse_dataset(std::string_view text);
SurfaceDataset load_dataset(const std::filesystem::path &path);
std::string serialize_dataset(const SurfaceDataset &ds);

std::vector<std::string> preset_names();
/// Built-in surfaces with L = O; the table is materialized up to max_power.
SurfaceDataset preset(std::string_view name, unsigned max_power = 32);

} // namespace hilbhodge

#endif
