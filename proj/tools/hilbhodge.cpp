// Command-line frontend for twisted Hodge numbers of Hilbert schemes of
// points on surfaces.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <hilbhodge/engine.hpp>
#include <hilbhodge/render.hpp>
#include <hilbhodge/surface.hpp>
#include <hilbhodge/verify.hpp>

using namespace hilbhodge;

namespace
{

enum Exit { ok = 0, bad_input = 1, missing_power = 2, verify_failed = 3 };

struct Common {
    std::string preset;
    std::string input;
    std::string format;
    unsigned threads = 1;
};

void add_common(CLI::App *cmd, Common &c)
{
    auto *p = cmd->add_option("--preset", c.preset, "Built-in surface: " + [] {
        std::string s;
        for (const auto &n : preset_names()) {
            s += (s.empty() ? "" : ", ") + n;
        }
        return s;
    }());
    auto *i = cmd->add_option("--input", c.input, "Surface dataset (JSON)");
    p->excludes(i);
    cmd->add_option("--format", c.format, "diamond, latex, json or poly");
    cmd->add_option("--threads", c.threads, "Worker threads for series products")->check(CLI::Range(1u, 256u));
}

SurfaceDataset load(const Common &c)
{
    if (!c.input.empty()) {
        return load_dataset(c.input);
    }
    if (!c.preset.empty()) {
        return preset(c.preset);
    }
    throw SchemaError("one of --preset or --input is required");
}

RenderFormat format_or(const Common &c, RenderFormat fallback)
{
    if (c.format.empty()) {
        return fallback;
    }
    auto f = parse_format(c.format);
    if (!f) {
        throw SchemaError("unknown format '" + c.format + "'");
    }
    return *f;
}

void warn(const SurfaceDataset &ds)
{
    for (const auto &w : validate(ds).warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

std::vector<HodgePolynomial> slices_as_hodge(const TriSeries &s, int offset)
{
    std::vector<HodgePolynomial> out;
    for (unsigned n = 0; n <= s.trunc(); ++n) {
        out.push_back(HodgePolynomial::from_bipolynomial(s.slice(n), static_cast<int>(2 * n) + offset));
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Twisted Hodge numbers of Hilbert schemes of points on surfaces"};
    app.require_subcommand(1);

    Common common;
    std::optional<unsigned> n_opt, big_n_opt;
    unsigned a = 0, k = 0, qmax = 4;
    std::string method = "product";

    auto *hilb = app.add_subcommand("hilb", "Hodge numbers of Hilb^n S with L_n");
    add_common(hilb, common);
    auto *hilb_n = hilb->add_option("-n", n_opt, "Single n");
    auto *hilb_bn = hilb->add_option("-N", big_n_opt, "All n up to N");
    hilb_n->excludes(hilb_bn);

    auto *sym = app.add_subcommand("sym", "Hodge numbers of S^(a) with L^k_(a)");
    add_common(sym, common);
    sym->add_option("-a", a, "Symmetric power")->required();
    sym->add_option("-k", k, "Power of L")->required();

    auto *nested = app.add_subcommand("nested", "Hodge numbers of the nested scheme Hilb^{n,n+1} S");
    add_common(nested, common);
    nested->add_option("-n", n_opt, "n")->required();

    auto *chiy = app.add_subcommand("chiy", "chi_{-y} genera up to t^N");
    add_common(chiy, common);
    chiy->add_option("-N", big_n_opt, "Truncation")->required();
    chiy->add_option("--method", method, "product, exp or hodge")
        ->check(CLI::IsMember({"product", "exp", "hodge"}));

    auto *betti = app.add_subcommand("betti", "Betti numbers up to t^N");
    add_common(betti, common);
    betti->add_option("-N", big_n_opt, "Truncation")->required();

    auto *hh = app.add_subcommand("hh", "Hochschild homology dimensions of Hilb^n S with L_n");
    add_common(hh, common);
    hh->add_option("-n", n_opt, "n")->required();

    auto *deform = app.add_subcommand("deform", "h^q(Hilb^n S, T) for q = 0..qmax");
    add_common(deform, common);
    deform->add_option("-n", n_opt, "n")->required();
    deform->add_option("--qmax", qmax, "Largest degree");

    auto *verify = app.add_subcommand("verify", "Run every two-path identity on a dataset");
    add_common(verify, common);
    verify->add_option("-N", big_n_opt, "Truncation")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::bad_input;
    }

    try {
        auto ds = load(common);
        warn(ds);
        EngineOptions opts{common.threads};

        if (hilb->parsed()) {
            if (n_opt) {
                auto s = hilb_series(ds.table, *n_opt, opts);
                auto h = HodgePolynomial::from_bipolynomial(s.slice(*n_opt), static_cast<int>(2 * *n_opt));
                std::cout << render_hodge(h, *n_opt, format_or(common, RenderFormat::diamond));
            } else if (big_n_opt) {
                auto s = hilb_series(ds.table, *big_n_opt, opts);
                std::cout << render_hodge_series(slices_as_hodge(s, 0), format_or(common, RenderFormat::json));
            } else {
                throw SchemaError("hilb needs -n or -N");
            }
        } else if (sym->parsed()) {
            auto h = sym_power_twisted_hodge(ds.table.at(k), a);
            std::cout << render_hodge(h, a, format_or(common, RenderFormat::diamond));
        } else if (nested->parsed()) {
            const auto &llp = ds.nested_table ? *ds.nested_table : ds.table;
            auto s = nested_series(ds.table, llp, *n_opt, opts);
            auto h = HodgePolynomial::from_bipolynomial(s.slice(*n_opt), static_cast<int>(2 * *n_opt + 2));
            std::cout << render_hodge(h, *n_opt, format_or(common, RenderFormat::diamond));
        } else if (chiy->parsed()) {
            TriSeries s = method == "exp"     ? chi_y_exp(ds.table, *big_n_opt)
                          : method == "hodge" ? chi_y_from_hodge(ds.table, *big_n_opt)
                                              : chi_y_product(ds.table, *big_n_opt);
            std::cout << render_y_series(s, format_or(common, RenderFormat::json));
        } else if (betti->parsed()) {
            auto b = ds.betti ? *ds.betti : ds.table.at(0).total_degree_sums();
            std::cout << render_betti(betti_series(b, *big_n_opt), format_or(common, RenderFormat::json));
        } else if (hh->parsed()) {
            std::cout << render_graded(hh_dims(ds.table, *n_opt), *n_opt, format_or(common, RenderFormat::diamond));
        } else if (deform->parsed()) {
            if (!ds.deformation) {
                throw SchemaError("dataset has no deformation data");
            }
            auto dims = deformation_dims(*ds.deformation, *n_opt, qmax);
            std::cout << render_deformation(dims, *n_opt, format_or(common, RenderFormat::diamond));
        } else if (verify->parsed()) {
            bool all = true;
            for (const auto &r : run_verification(ds, *big_n_opt)) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.passed) {
                    std::cout << ": " << r.detail;
                }
                std::cout << "\n";
                all = all && r.passed;
            }
            return all ? Exit::ok : Exit::verify_failed;
        }
    } catch (const InsufficientPowers &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::missing_power;
    } catch (const DatasetError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::bad_input;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::bad_input;
    }
    return Exit::ok;
}
