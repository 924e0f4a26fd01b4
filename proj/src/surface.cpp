#include <hilbhodge/surface.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hilbhodge
{

using nlohmann::json;

InsufficientPowers::InsufficientPowers(unsigned missing, unsigned available)
    : std::runtime_error("insufficient powers: h^{p,q}(S, L^" + std::to_string(missing)
                         + ") is missing; the table only covers k <= " + std::to_string(available)),
      m_missing(missing)
{
}

// ---------------------------------------------------------------------------
// SurfaceDiamond / TwistedTable

SurfaceDiamond SurfaceDiamond::transposed() const
{
    SurfaceDiamond r;
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            r.h[q][p] = h[p][q];
        }
    }
    return r;
}

bool SurfaceDiamond::is_symmetric() const
{
    return *this == transposed();
}

bool SurfaceDiamond::is_zero() const
{
    return *this == SurfaceDiamond{};
}

BiPolynomial SurfaceDiamond::polynomial() const
{
    BiPolynomial r;
    for (std::uint32_t p = 0; p < 3; ++p) {
        for (std::uint32_t q = 0; q < 3; ++q) {
            r.add_term({p, q}, Coefficient{h[p][q]});
        }
    }
    return r;
}

std::array<std::int64_t, 5> SurfaceDiamond::total_degree_sums() const
{
    std::array<std::int64_t, 5> b{};
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            b[p + q] += h[p][q];
        }
    }
    return b;
}

TwistedTable TwistedTable::constant(const SurfaceDiamond &d, unsigned max_power)
{
    return TwistedTable(std::vector<SurfaceDiamond>(max_power + 1, d));
}

unsigned TwistedTable::max_power() const
{
    if (m_diamonds.empty()) {
        throw ValidationError("twisted table has no k = 0 diamond");
    }
    return static_cast<unsigned>(m_diamonds.size() - 1);
}

const SurfaceDiamond &TwistedTable::at(unsigned k) const
{
    require(k);
    return m_diamonds[k];
}

void TwistedTable::require(unsigned k) const
{
    if (k >= m_diamonds.size()) {
        // Name the first power that is absent, not the one requested.
        throw InsufficientPowers(static_cast<unsigned>(m_diamonds.size()), m_diamonds.empty() ? 0 : max_power());
    }
}

bool TwistedTable::is_constant() const
{
    return std::all_of(m_diamonds.begin(), m_diamonds.end(),
                       [&](const SurfaceDiamond &d) { return d == m_diamonds.front(); });
}

// ---------------------------------------------------------------------------
// Validation

namespace
{

template <std::size_t N>
bool any_negative(const std::array<std::int64_t, N> &v)
{
    return std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x < 0; });
}

void validate_table(const TwistedTable &table, const std::string &label, ValidationReport &report, bool kahler)
{
    if (table.empty()) {
        throw ValidationError(label + ": the k = 0 diamond is missing");
    }
    for (std::size_t k = 0; k < table.diamonds().size(); ++k) {
        const auto &d = table.diamonds()[k];
        for (int p = 0; p < 3; ++p) {
            if (any_negative(d.h[p])) {
                throw ValidationError(label + "[" + std::to_string(k) + "]: negative Hodge number in row p = "
                                      + std::to_string(p));
            }
        }
        if (kahler && !d.is_symmetric()) {
            report.warnings.push_back(label + "[" + std::to_string(k)
                                      + "]: kahler_symmetric is set but h^{p,q} != h^{q,p}");
        }
    }
}

} // namespace

ValidationReport validate(const SurfaceDataset &ds)
{
    ValidationReport report;
    validate_table(ds.table, "diamonds", report, ds.kahler_symmetric);
    if (ds.nested_table) {
        validate_table(*ds.nested_table, "nested_diamonds", report, ds.kahler_symmetric);
    }
    if (ds.deformation) {
        const auto &d = *ds.deformation;
        if (any_negative(d.hT) || any_negative(d.hO) || any_negative(d.hW2)) {
            throw ValidationError("deformation: negative dimension");
        }
    }
    if (ds.betti) {
        if (any_negative(*ds.betti)) {
            throw ValidationError("betti: negative Betti number");
        }
        if (*ds.betti != ds.table.diamonds().front().total_degree_sums()) {
            report.warnings.push_back("betti: b_i differs from sum_{p+q=i} h^{p,q} of the k = 0 diamond");
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// JSON

namespace
{

std::int64_t get_int(const json &j, const std::string &where)
{
    if (!j.is_number_integer()) {
        throw SchemaError(where + ": expected an integer");
    }
    return j.get<std::int64_t>();
}

template <std::size_t N>
std::array<std::int64_t, N> get_int_array(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != N) {
        throw SchemaError(where + ": expected an array of " + std::to_string(N) + " integers");
    }
    std::array<std::int64_t, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = get_int(j[i], where + "[" + std::to_string(i) + "]");
    }
    return out;
}

TwistedTable get_table(const json &j, const std::string &where)
{
    if (!j.is_array()) {
        throw SchemaError(where + ": expected an array of diamonds");
    }
    if (j.empty()) {
        throw SchemaError(where + ": the table is empty");
    }
    std::vector<SurfaceDiamond> diamonds;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto &jd = j[k];
        auto at = where + "[" + std::to_string(k) + "]";
        if (!jd.is_array() || jd.size() != 3) {
            throw SchemaError(at + ": expected a 3x3 matrix");
        }
        SurfaceDiamond d;
        for (std::size_t p = 0; p < 3; ++p) {
            d.h[p] = get_int_array<3>(jd[p], at + "[" + std::to_string(p) + "]");
        }
        diamonds.push_back(d);
    }
    return TwistedTable(std::move(diamonds));
}

json table_json(const TwistedTable &t)
{
    json arr = json::array();
    for (const auto &d : t.diamonds()) {
        arr.push_back(d.h);
    }
    return arr;
}

} // namespace

SurfaceDataset parse_dataset(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("dataset is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw SchemaError("dataset: expected a JSON object");
    }
    for (const char *field : {"name", "max_power", "diamonds"}) {
        if (!j.contains(field)) {
            throw SchemaError(std::string("dataset: missing field \"") + field + "\"");
        }
    }
    SurfaceDataset ds;
    if (!j["name"].is_string()) {
        throw SchemaError("name: expected a string");
    }
    ds.name = j["name"].get<std::string>();
    auto K = get_int(j["max_power"], "max_power");
    ds.table = get_table(j["diamonds"], "diamonds");
    if (K < 0 || static_cast<std::size_t>(K) + 1 != ds.table.diamonds().size()) {
        throw SchemaError("max_power = " + std::to_string(K) + " but diamonds has "
                          + std::to_string(ds.table.diamonds().size()) + " entries (expected max_power + 1)");
    }
    if (j.contains("nested_diamonds")) {
        ds.nested_table = get_table(j["nested_diamonds"], "nested_diamonds");
    }
    if (j.contains("deformation")) {
        const auto &d = j["deformation"];
        if (!d.is_object()) {
            throw SchemaError("deformation: expected an object");
        }
        for (const char *field : {"hT", "hO", "hW2"}) {
            if (!d.contains(field)) {
                throw SchemaError(std::string("deformation: missing field \"") + field + "\"");
            }
        }
        DeformationInput din;
        din.hT = get_int_array<3>(d["hT"], "deformation.hT");
        din.hO = get_int_array<3>(d["hO"], "deformation.hO");
        din.hW2 = get_int_array<3>(d["hW2"], "deformation.hW2");
        if (d.contains("connected")) {
            if (!d["connected"].is_boolean()) {
                throw SchemaError("deformation.connected: expected a boolean");
            }
            din.connected = d["connected"].get<bool>();
        }
        ds.deformation = din;
    }
    if (j.contains("betti")) {
        ds.betti = get_int_array<5>(j["betti"], "betti");
    }
    if (j.contains("kahler_symmetric")) {
        if (!j["kahler_symmetric"].is_boolean()) {
            throw SchemaError("kahler_symmetric: expected a boolean");
        }
        ds.kahler_symmetric = j["kahler_symmetric"].get<bool>();
    }
    validate(ds);
    return ds;
}

SurfaceDataset load_dataset(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open dataset file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str());
}

std::string serialize_dataset(const SurfaceDataset &ds)
{
    json j;
    j["name"] = ds.name;
    j["max_power"] = ds.table.max_power();
    j["diamonds"] = table_json(ds.table);
    if (ds.nested_table) {
        j["nested_diamonds"] = table_json(*ds.nested_table);
    }
    if (ds.deformation) {
        j["deformation"] = {{"hT", ds.deformation->hT},
                            {"hO", ds.deformation->hO},
                            {"hW2", ds.deformation->hW2},
                            {"connected", ds.deformation->connected}};
    }
    if (ds.betti) {
        j["betti"] = *ds.betti;
    }
    j["kahler_symmetric"] = ds.kahler_symmetric;
    return j.dump(1) + "\n";
}

// ---------------------------------------------------------------------------
// Presets

namespace
{

struct PresetEntry {
    SurfaceDiamond diamond;
    std::optional<DeformationInput> deformation;
    bool kahler;
};

SurfaceDiamond diamond(std::array<std::array<std::int64_t, 3>, 3> h)
{
    return SurfaceDiamond{h};
}

const std::map<std::string, PresetEntry, std::less<>> &preset_table()
{
    // Hopf and Inoue surfaces: Hodge polynomial 1 + y + x^2 y + x^2 y^2.
    static const SurfaceDiamond hopf = diamond({{{1, 1, 0}, {0, 0, 0}, {0, 1, 1}}});
    static const SurfaceDiamond bielliptic = diamond({{{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}});
    static const std::map<std::string, PresetEntry, std::less<>> table = {
        {"hopf", {hopf, std::nullopt, false}},
        {"inoue", {hopf, std::nullopt, false}},
        {"kodaira_secondary", {hopf.transposed(), std::nullopt, false}},
        {"k3", {diamond({{{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}}), DeformationInput{{0, 20, 0}, {1, 0, 1}, {1, 0, 1}, true}, true}},
        {"torus", {diamond({{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}}), DeformationInput{{2, 4, 2}, {1, 2, 1}, {1, 2, 1}, true}, true}},
        {"enriques", {diamond({{{1, 0, 0}, {0, 10, 0}, {0, 0, 1}}}), DeformationInput{{0, 10, 0}, {1, 0, 0}, {0, 0, 1}, true}, true}},
        {"bielliptic_ord2", {bielliptic, DeformationInput{{1, 2, 1}, {1, 1, 0}, {0, 1, 1}, true}, true}},
        {"bielliptic_ord3", {bielliptic, DeformationInput{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}, true}, true}},
        {"p2", {diamond({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), DeformationInput{{8, 0, 0}, {1, 0, 0}, {10, 0, 0}, true}, true}},
    };
    return table;
}

} // namespace

std::vector<std::string> preset_names()
{
    return {"hopf", "inoue", "kodaira_secondary", "k3", "torus", "enriques", "bielliptic_ord2", "bielliptic_ord3", "p2"};
}

SurfaceDataset preset(std::string_view name, unsigned max_power)
{
    const auto &table = preset_table();
    auto it = table.find(name);
    if (it == table.end()) {
        throw UnknownPreset("unknown preset \"" + std::string(name) + "\"");
    }
    const auto &entry = it->second;
    SurfaceDataset ds;
    ds.name = it->first;
    ds.table = TwistedTable::constant(entry.diamond, max_power);
    ds.deformation = entry.deformation;
    ds.betti = entry.diamond.total_degree_sums();
    ds.kahler_symmetric = entry.kahler;
    return ds;
}

} // namespace hilbhodge
