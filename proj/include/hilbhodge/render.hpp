#ifndef HILBHODGE_RENDER_HPP
#define HILBHODGE_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <hilbhodge/engine.hpp>

namespace hilbhodge
{

enum class RenderFormat { diamond, latex, json, poly };

/// nullopt for an unknown name.
std::optional<RenderFormat> parse_format(std::string_view name);
std::string format_name(RenderFormat f);

/// Diamond layout: row s lists h^{p,q} with p + q = s, p increasing from
/// left to right, centred on a grid of 2 * space_dim + 1 columns.
std::string render_diamond(const HodgePolynomial &h);
std::string render_latex(const HodgePolynomial &h);
/// Terms ordered by (p + q, p), e.g. "1 + y + 2*x^2*y^2".
std::string render_poly(const HodgePolynomial &h);
/// {"n": n, "space_dim": d, "terms": [{"p":..,"q":..,"h":..}, ...]}
std::string render_json(const HodgePolynomial &h, unsigned n);

std::string render_hodge(const HodgePolynomial &h, unsigned n, RenderFormat f);

/// Inverse of render_json.
std::pair<unsigned, HodgePolynomial> parse_hodge_json(std::string_view text);

/// Several Hodge polynomials (one per n) in one document.
std::string render_hodge_series(const std::vector<HodgePolynomial> &coeffs, RenderFormat f);

/// Coefficients of t^0..t^N of a series in (y, t), such as the chi_y series.
std::string render_y_series(const TriSeries &s, RenderFormat f);

std::string render_betti(const TriSeries &betti, RenderFormat f);

std::string render_graded(const GradedDims &g, unsigned n, RenderFormat f);

std::string render_deformation(const std::vector<std::int64_t> &dims, unsigned n, RenderFormat f);

} // namespace hilbhodge

#endif
