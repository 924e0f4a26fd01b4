#include <doctest.h>

#include <hilbhodge/render.hpp>

#include "support.hpp"

using namespace hilbhodge;

namespace
{

HodgePolynomial hopf_hilb(unsigned n)
{
    auto s = hilb_series(preset("hopf", n).table, n);
    return HodgePolynomial::from_bipolynomial(s.slice(n), static_cast<int>(2 * n));
}

} // namespace

TEST_SUITE("render")
{
    TEST_CASE("format names")
    {
        for (auto f : {RenderFormat::diamond, RenderFormat::latex, RenderFormat::json, RenderFormat::poly}) {
            CHECK(parse_format(format_name(f)) == f);
        }
        CHECK_FALSE(parse_format("svg").has_value());
    }

    TEST_CASE("diamond layout")
    {
        CHECK(render_diamond(hopf_hilb(0)) == "1\n");
        CHECK(render_diamond(hopf_hilb(1)) == "    1\n"
                                              "  1   0\n"
                                              "0   0   0\n"
                                              "  0   1\n"
                                              "    1\n");
        CHECK(render_diamond(hopf_hilb(2)) == "        1\n"
                                              "      1   0\n"
                                              "    0   1   0\n"
                                              "  0   1   1   0\n"
                                              "0   0   2   0   0\n"
                                              "  0   1   1   0\n"
                                              "    0   1   0\n"
                                              "      0   1\n"
                                              "        1\n");
    }

    TEST_CASE("wide entries keep the grid aligned")
    {
        auto k3 = HodgePolynomial::from_bipolynomial(preset("k3").table.at(0).polynomial(), 2);
        CHECK(render_diamond(k3) == "       1\n"
                                    "    0     0\n"
                                    " 1    20     1\n"
                                    "    0     0\n"
                                    "       1\n");
    }

    TEST_CASE("latex")
    {
        auto tex = render_latex(hopf_hilb(1));
        CHECK(tex == "\\begin{smallmatrix}\n"
                     "&& 1 &&\\\\\n"
                     "& 1 && 0 &\\\\\n"
                     " 0 && 0 && 0 \\\\\n"
                     "& 0 && 1 &\\\\\n"
                     "&& 1 &&\\\\\n"
                     "\\end{smallmatrix}\n");
    }

    TEST_CASE("poly")
    {
        CHECK(render_poly(hopf_hilb(1)) == "1 + y + x^2*y + x^2*y^2\n");
        CHECK(render_poly(hopf_hilb(2))
              == "1 + y + x*y + x*y^2 + x^2*y + 2*x^2*y^2 + x^2*y^3 + x^3*y^2 + x^3*y^3 + x^4*y^3 + x^4*y^4\n");
    }

    TEST_CASE("json is sorted by (p + q, p) and round-trips")
    {
        CHECK(render_json(hopf_hilb(1), 1)
              == R"({"n":1,"space_dim":2,"terms":[{"h":1,"p":0,"q":0},{"h":1,"p":0,"q":1},{"h":1,"p":2,"q":1},{"h":1,"p":2,"q":2}]})"
                 "\n");
        std::mt19937_64 rng(61);
        for (int i = 0; i < 20; ++i) {
            auto table = testing::random_table(rng, 3, 4);
            auto s = hilb_series(table, 4);
            for (unsigned n = 0; n <= 4; ++n) {
                auto h = HodgePolynomial::from_bipolynomial(s.slice(n), static_cast<int>(2 * n));
                auto [n2, h2] = parse_hodge_json(render_json(h, n));
                CHECK(n2 == n);
                CHECK(h2 == h);
            }
        }
    }

    TEST_CASE("series documents")
    {
        std::vector<HodgePolynomial> coeffs{hopf_hilb(0), hopf_hilb(1)};
        CHECK(render_hodge_series(coeffs, RenderFormat::poly) == "n = 0\n1\n\nn = 1\n1 + y + x^2*y + x^2*y^2\n");
        auto chi = chi_y_product(preset("hopf", 2).table, 2);
        CHECK(render_y_series(chi, RenderFormat::poly) == "t^0: 1\nt^1: 0\nt^2: 0\n");
        auto chi_k3 = chi_y_product(preset("k3", 1).table, 1);
        CHECK(render_y_series(chi_k3, RenderFormat::poly) == "t^0: 1\nt^1: 2 + 20*y + 2*y^2\n");
        CHECK(render_betti(betti_series({1, 1, 0, 1, 1}, 1), RenderFormat::poly) == "n = 0: 1\nn = 1: 1 1 0 1 1\n");
    }

    TEST_CASE("graded and deformation tables")
    {
        GradedDims g;
        g.add(-1, 3);
        g.add(0, 6);
        CHECK(render_graded(g, 2, RenderFormat::diamond) == "HH_-1: 3\nHH_0: 6\n");
        CHECK(render_graded(g, 2, RenderFormat::json) == R"({"dims":[{"dim":3,"i":-1},{"dim":6,"i":0}],"n":2})" "\n");
        CHECK(render_deformation({0, 21, 0, 22}, 3, RenderFormat::diamond)
              == "q  h^q(Hilb^3 S, T)\n0  0\n1  21\n2  0\n3  22  (derived convention)\n");
    }
}
