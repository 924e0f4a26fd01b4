#include <hilbhodge/verify.hpp>

#include <algorithm>
#include <functional>

#include <hilbhodge/engine.hpp>

namespace hilbhodge
{

namespace
{

std::string join(const std::vector<std::int64_t> &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(v[i]);
    }
    return s + ")";
}

CheckResult guarded(const std::string &name, const std::function<std::string()> &body)
{
    try {
        auto detail = body();
        return {name, detail.empty(), detail.empty() ? "ok" : detail};
    } catch (const std::exception &e) {
        return {name, false, e.what()};
    }
}

std::string first_slice_mismatch(const TriSeries &a, const TriSeries &b)
{
    for (unsigned n = 0; n <= std::min(a.trunc(), b.trunc()); ++n) {
        if (!(a.slice(n) == b.slice(n))) {
            return "differs at t^" + std::to_string(n);
        }
    }
    return {};
}

} // namespace

std::vector<CheckResult> run_verification(const SurfaceDataset &ds, unsigned N)
{
    std::vector<CheckResult> out;
    const auto &table = ds.table;
    table.require(N);
    const TwistedTable &llp = ds.nested_table ? *ds.nested_table : ds.table;

    out.push_back(guarded("product vs partition sum", [&]() -> std::string {
        auto series = hilb_series(table, N);
        for (unsigned n = 0; n <= N; ++n) {
            auto direct = HodgePolynomial::from_bipolynomial(series.slice(n), static_cast<int>(2 * n));
            if (!(direct == hilb_via_partitions(table, n))) {
                return "differs at n = " + std::to_string(n);
            }
        }
        return {};
    }));

    out.push_back(guarded("chi_y product / exp / Hodge specialization", [&]() -> std::string {
        auto prod = chi_y_product(table, N);
        if (auto d = first_slice_mismatch(prod, chi_y_exp(table, N)); !d.empty()) {
            return "product vs exp " + d;
        }
        if (auto d = first_slice_mismatch(prod, chi_y_from_hodge(table, N)); !d.empty()) {
            return "product vs Hodge " + d;
        }
        return {};
    }));

    if (ds.betti) {
        out.push_back(guarded("Frolicher degeneration (Betti vs Hodge)", [&]() -> std::string {
            auto trivial = TwistedTable::constant(table.at(0), N);
            auto rep = frolicher_check(trivial, *ds.betti, N);
            if (rep.ok()) {
                return {};
            }
            const auto &m = *rep.first_mismatch;
            return "b_" + std::to_string(m.degree) + "(Hilb^" + std::to_string(m.n) + ") = " + m.betti_value
                   + " but Hodge sum = " + m.hodge_value;
        }));
    }

    out.push_back(guarded("Hochschild homology two-path", [&]() -> std::string {
        auto rhs = hh_rhs_series(table, N);
        for (unsigned n = 0; n <= N; ++n) {
            if (!(rhs.at(n) == hh_dims(table, n))) {
                return "differs at n = " + std::to_string(n);
            }
        }
        return {};
    }));

    out.push_back(guarded("nested series vs strata", [&]() -> std::string {
        auto series = nested_series(table, llp, N);
        for (unsigned n = 0; n <= N; ++n) {
            auto direct = HodgePolynomial::from_bipolynomial(series.slice(n), static_cast<int>(2 * n + 2));
            if (!(direct == nested_via_strata(table, llp, n))) {
                return "differs at n = " + std::to_string(n);
            }
        }
        return {};
    }));

    if (table.is_constant() && llp == table) {
        out.push_back(guarded("nested trivial-bundle factorization", [&]() -> std::string {
            auto lhs = nested_series(table, table, N);
            TriSeries e_s(N);
            auto surface = table.at(0).polynomial();
            for (const auto &[e, c] : surface.terms()) {
                e_s.add_term({e.x, e.y, 0}, c);
            }
            auto geom = binomial_power_series({Coefficient{1}, Monomial{1, 1, 1}, -1}, N);
            return first_slice_mismatch(lhs, hilb_series(table, N) * e_s * geom);
        }));
    }

    if (ds.deformation && ds.deformation->connected) {
        const auto &din = *ds.deformation;
        out.push_back(guarded("deformation closed forms", [&]() -> std::string {
            for (unsigned n = 2; n <= std::max(N, 2u); ++n) {
                auto dims = deformation_dims(din, n, 2);
                auto cf = deformation_closed_forms(din, n);
                std::vector<std::int64_t> closed{cf.h0, cf.h1, cf.h2};
                if (dims != closed) {
                    return "n = " + std::to_string(n) + ": " + join(dims) + " vs closed form " + join(closed);
                }
            }
            return {};
        }));
        if (table.is_constant() && din.hW2 == din.hO) {
            out.push_back(guarded("omega-trivial deformation cross-check", [&]() -> std::string {
                for (unsigned n = 2; n <= std::max(N, 2u); ++n) {
                    auto dims = deformation_dims(din, n, 3);
                    auto hodge = tangent_from_trivial_table(TwistedTable::constant(table.at(0), n), n, 3);
                    if (dims != hodge) {
                        return "n = " + std::to_string(n) + ": " + join(dims) + " vs Hodge " + join(hodge);
                    }
                }
                return {};
            }));
        }
    }
    return out;
}

} // namespace hilbhodge
