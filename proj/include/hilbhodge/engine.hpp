#ifndef HILBHODGE_ENGINE_HPP
#define HILBHODGE_ENGINE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hilbhodge/series.hpp>
#include <hilbhodge/surface.hpp>

namespace hilbhodge
{

/// Twisted Hodge numbers (p, q) -> h^{p,q} of one space of complex
/// dimension space_dim. Only positive values are stored.
struct HodgePolynomial {
    std::map<std::pair<int, int>, std::int64_t> terms;
    int space_dim = 0;

    std::int64_t at(int p, int q) const;
    void set(int p, int q, std::int64_t h);

    /// Converts an (x, y)-polynomial, asserting nonnegative integer
    /// coefficients inside [0, space_dim]^2.
    static HodgePolynomial from_bipolynomial(const BiPolynomial &poly, int space_dim);
    BiPolynomial to_bipolynomial() const;

    friend bool operator==(const HodgePolynomial &, const HodgePolynomial &) = default;
};

/// Dimensions of a singly graded space, degree -> dim. Zero entries are
/// not stored.
struct GradedDims {
    std::map<int, std::int64_t> dims;

    std::int64_t at(int degree) const;
    void add(int degree, std::int64_t d);

    friend bool operator==(const GradedDims &, const GradedDims &) = default;
};

/// Bigraded dimensions v_{p,q} of a super vector space; parity is p + q.
using BigradedDims = std::map<std::pair<int, int>, std::int64_t>;

BigradedDims to_bigraded(const SurfaceDiamond &d);

/// Generating series sum_n Sym^n(V) t^n in the super sense.
TriSeries super_sym_series(const BigradedDims &v, unsigned trunc);

/// Twisted Hodge numbers of the symmetric power S^(a) with values in L_(a).
HodgePolynomial sym_power_twisted_hodge(const SurfaceDiamond &d, unsigned a);

struct EngineOptions {
    unsigned threads = 1;
};

/// Euler product for h^{p,q}(Hilb^n S, L_n), truncated at t^N.
TriSeries hilb_series(const TwistedTable &table, unsigned N, const EngineOptions &opts = {});

/// Same numbers through the sum over partitions of n.
HodgePolynomial hilb_via_partitions(const TwistedTable &table, unsigned n);

/// Nested Hilbert schemes Hilb^{n,n+1} S with phi^* L_n (x) rho^* L'.
/// table_llp holds the diamonds of L^j (x) L'.
TriSeries nested_series(const TwistedTable &table_l, const TwistedTable &table_llp, unsigned N,
                        const EngineOptions &opts = {});
HodgePolynomial nested_via_strata(const TwistedTable &table_l, const TwistedTable &table_llp, unsigned n);

/// chi(S, Omega^p (x) L^k) = sum_q (-1)^q h^{p,q}(S, L^k)
std::array<std::int64_t, 3> holomorphic_euler_characteristics(const SurfaceDiamond &d);

/// chi_{-y}(Hilb^n S, L_n) as a series in (y, t); three independent routes.
TriSeries chi_y_product(const TwistedTable &table, unsigned N);
TriSeries chi_y_exp(const TwistedTable &table, unsigned N);
TriSeries chi_y_from_hodge(const TwistedTable &table, unsigned N);

using BettiVector = std::array<std::int64_t, 5>;

/// sum b_i(Hilb^n S) x^i t^n
TriSeries betti_series(const BettiVector &b, unsigned N);

struct FrolicherMismatch {
    unsigned n = 0;
    unsigned degree = 0;
    std::string betti_value;
    std::string hodge_value;
};

struct FrolicherReport {
    std::optional<FrolicherMismatch> first_mismatch;

    bool ok() const { return !first_mismatch.has_value(); }
};

/// Compares betti_series(b) with the (x, y) -> (z, z) collapse of the Hodge
/// series of the trivial-bundle table.
FrolicherReport frolicher_check(const TwistedTable &table_trivial, const BettiVector &b, unsigned N);

/// HH_i(Hilb^n S, L_n) = sum_{q-p=i} h^{p,q}(Hilb^n S, L_n)
GradedDims hh_dims(const TwistedTable &table, unsigned n);

/// Sym of sum_k HH_*(S, L^k) t^k. Degree i at t^n is stored as y^{i + 2n},
/// which keeps every exponent nonnegative.
struct HochschildSeries {
    TriSeries series;

    GradedDims at(unsigned n) const;
};

HochschildSeries hh_rhs_series(const TwistedTable &table, unsigned N);

/// Graded dimensions of H^*(S^n, T_{S^n})^{S_n}, expanded as
/// H^*(S, T_S) (x) Sym^{n-1} H^{0,*}(S).
GradedDims sn_invariant_tangent(const DeformationInput &din, unsigned n);

/// h^q(Hilb^n S, T) for q = 0..qmax.
std::vector<std::int64_t> deformation_dims(const DeformationInput &din, unsigned n, unsigned qmax);

struct DeformationClosedForms {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;

    friend bool operator==(const DeformationClosedForms &, const DeformationClosedForms &) = default;
};

/// Closed forms for q = 0, 1, 2; requires a connected surface and n >= 2.
/// The summands that live on S^(n-2) or Sym^{n-1} in degree 2 vanish at n = 2.
DeformationClosedForms deformation_closed_forms(const DeformationInput &din, unsigned n);

/// h^{2n-1,q}(Hilb^n S, O) read off hilb_series; equals h^q(Hilb^n S, T)
/// when omega_S is trivial.
std::vector<std::int64_t> tangent_from_trivial_table(const TwistedTable &table_trivial, unsigned n, unsigned qmax);

} // namespace hilbhodge

#endif
