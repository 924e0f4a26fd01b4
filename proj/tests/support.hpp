#ifndef HILBHODGE_TESTS_SUPPORT_HPP
#define HILBHODGE_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <tuple>

#include <hilbhodge/engine.hpp>
#include <hilbhodge/series.hpp>
#include <hilbhodge/surface.hpp>

namespace testing
{

using namespace hilbhodge;

struct Term {
    std::uint32_t x, y, t;
    Coefficient c;
};

inline TriSeries series(unsigned trunc, std::initializer_list<Term> terms)
{
    TriSeries s(trunc);
    for (const auto &term : terms) {
        s.add_term({term.x, term.y, term.t}, term.c);
    }
    return s;
}

inline BiPolynomial bipoly(std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, std::int64_t>> terms)
{
    BiPolynomial p;
    for (const auto &[x, y, c] : terms) {
        p.add_term({x, y}, Coefficient{c});
    }
    return p;
}

/// Random series with small integer (or rational) coefficients.
inline TriSeries random_series(std::mt19937_64 &rng, unsigned trunc, unsigned max_xy, int terms,
                               bool rational = false)
{
    std::uniform_int_distribution<std::uint32_t> e_xy(0, max_xy);
    std::uniform_int_distribution<std::uint32_t> e_t(0, trunc);
    std::uniform_int_distribution<int> c(-4, 4);
    std::uniform_int_distribution<int> d(1, 3);
    TriSeries s(trunc);
    for (int i = 0; i < terms; ++i) {
        Coefficient v = rational ? Coefficient::ratio(c(rng), d(rng)) : Coefficient{c(rng)};
        s.add_term({e_xy(rng), e_xy(rng), e_t(rng)}, v);
    }
    return s;
}

/// Drops the t^0 slice and sets it to the given constant.
inline TriSeries with_constant(const TriSeries &a, const Coefficient &c)
{
    auto slices = a.slices();
    slices[0] = BiPolynomial::constant(c);
    return TriSeries::from_slices(slices);
}

inline SurfaceDiamond random_diamond(std::mt19937_64 &rng, int max_entry)
{
    std::uniform_int_distribution<int> h(0, max_entry);
    SurfaceDiamond d;
    for (auto &row : d.h) {
        for (auto &v : row) {
            v = h(rng);
        }
    }
    return d;
}

inline TwistedTable random_table(std::mt19937_64 &rng, int max_entry, unsigned max_power)
{
    std::vector<SurfaceDiamond> ds;
    for (unsigned k = 0; k <= max_power; ++k) {
        ds.push_back(random_diamond(rng, max_entry));
    }
    return TwistedTable(ds);
}

} // namespace testing

#endif
