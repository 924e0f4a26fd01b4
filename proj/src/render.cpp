#include <hilbhodge/render.hpp>

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace hilbhodge
{

using nlohmann::json;

namespace
{

std::string pad_left(const std::string &s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void rstrip(std::string &s)
{
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
}

// Cells of row s on the 2d+1 column grid; empty strings where nothing sits.
std::vector<std::string> diamond_row(const HodgePolynomial &h, int s)
{
    const int d = h.space_dim;
    std::vector<std::string> cells(static_cast<std::size_t>(2 * d + 1));
    int p_lo = std::max(0, s - d);
    int p_hi = std::min(s, d);
    int len = p_hi - p_lo + 1;
    int col = d - (len - 1);
    for (int p = p_lo; p <= p_hi; ++p, col += 2) {
        cells[col] = std::to_string(h.at(p, s - p));
    }
    return cells;
}

json hodge_json(const HodgePolynomial &h, unsigned n)
{
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> terms(h.terms.begin(), h.terms.end());
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        auto ka = std::pair{a.first.first + a.first.second, a.first.first};
        auto kb = std::pair{b.first.first + b.first.second, b.first.first};
        return ka < kb;
    });
    json arr = json::array();
    for (const auto &[pq, v] : terms) {
        arr.push_back({{"p", pq.first}, {"q", pq.second}, {"h", v}});
    }
    return {{"n", n}, {"space_dim", h.space_dim}, {"terms", arr}};
}

std::string mono(const char *var, std::int64_t e)
{
    if (e == 0) {
        return "";
    }
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

std::string signed_join(const std::vector<std::pair<std::int64_t, std::string>> &terms)
{
    std::string out;
    for (const auto &[c, m] : terms) {
        auto mag = c < 0 ? -c : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.empty()) {
            out += std::to_string(mag);
        } else if (mag == 1) {
            out += m;
        } else {
            out += std::to_string(mag) + "*" + m;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::optional<RenderFormat> parse_format(std::string_view name)
{
    if (name == "diamond") {
        return RenderFormat::diamond;
    }
    if (name == "latex") {
        return RenderFormat::latex;
    }
    if (name == "json") {
        return RenderFormat::json;
    }
    if (name == "poly") {
        return RenderFormat::poly;
    }
    return std::nullopt;
}

std::string format_name(RenderFormat f)
{
    switch (f) {
    case RenderFormat::diamond:
        return "diamond";
    case RenderFormat::latex:
        return "latex";
    case RenderFormat::json:
        return "json";
    case RenderFormat::poly:
        return "poly";
    }
    return "?";
}

std::string render_diamond(const HodgePolynomial &h)
{
    const int d = h.space_dim;
    std::size_t width = 1;
    for (const auto &[pq, v] : h.terms) {
        width = std::max(width, std::to_string(v).size());
    }
    std::string out;
    for (int s = 0; s <= 2 * d; ++s) {
        std::string line;
        for (const auto &cell : diamond_row(h, s)) {
            line += pad_left(cell, width) + " ";
        }
        rstrip(line);
        out += line + "\n";
    }
    return out;
}

std::string render_latex(const HodgePolynomial &h)
{
    std::string out = "\\begin{smallmatrix}\n";
    for (int s = 0; s <= 2 * h.space_dim; ++s) {
        std::string line;
        auto cells = diamond_row(h, s);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                line += "&";
            }
            if (!cells[i].empty()) {
                line += " " + cells[i] + " ";
            }
        }
        out += line + "\\\\\n";
    }
    return out + "\\end{smallmatrix}\n";
}

std::string render_poly(const HodgePolynomial &h)
{
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> terms(h.terms.begin(), h.terms.end());
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        return std::pair{a.first.first + a.first.second, a.first.first}
               < std::pair{b.first.first + b.first.second, b.first.first};
    });
    std::vector<std::pair<std::int64_t, std::string>> parts;
    for (const auto &[pq, v] : terms) {
        auto mx = mono("x", pq.first);
        auto my = mono("y", pq.second);
        parts.emplace_back(v, mx.empty() ? my : (my.empty() ? mx : mx + "*" + my));
    }
    return signed_join(parts) + "\n";
}

std::string render_json(const HodgePolynomial &h, unsigned n)
{
    return hodge_json(h, n).dump() + "\n";
}

std::string render_hodge(const HodgePolynomial &h, unsigned n, RenderFormat f)
{
    switch (f) {
    case RenderFormat::diamond:
        return render_diamond(h);
    case RenderFormat::latex:
        return render_latex(h);
    case RenderFormat::json:
        return render_json(h, n);
    case RenderFormat::poly:
        return render_poly(h);
    }
    return {};
}

std::pair<unsigned, HodgePolynomial> parse_hodge_json(std::string_view text)
{
    auto j = json::parse(text);
    HodgePolynomial h;
    h.space_dim = j.at("space_dim").get<int>();
    for (const auto &t : j.at("terms")) {
        h.set(t.at("p").get<int>(), t.at("q").get<int>(), t.at("h").get<std::int64_t>());
    }
    return {j.at("n").get<unsigned>(), h};
}

std::string render_hodge_series(const std::vector<HodgePolynomial> &coeffs, RenderFormat f)
{
    if (f == RenderFormat::json) {
        json arr = json::array();
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            arr.push_back(hodge_json(coeffs[n], static_cast<unsigned>(n)));
        }
        return json{{"N", coeffs.size() - 1}, {"coefficients", arr}}.dump() + "\n";
    }
    std::string out;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        out += "n = " + std::to_string(n) + "\n" + render_hodge(coeffs[n], static_cast<unsigned>(n), f);
        if (n + 1 < coeffs.size()) {
            out += "\n";
        }
    }
    return out;
}

std::string render_y_series(const TriSeries &s, RenderFormat f)
{
    if (f == RenderFormat::json) {
        json arr = json::array();
        for (unsigned n = 0; n <= s.trunc(); ++n) {
            json terms = json::array();
            for (const auto &[e, c] : s.slice(n).terms()) {
                terms.push_back({{"y", e.y}, {"c", c.as_int64()}});
            }
            arr.push_back({{"n", n}, {"terms", terms}});
        }
        return json{{"N", s.trunc()}, {"coefficients", arr}}.dump() + "\n";
    }
    std::string out;
    for (unsigned n = 0; n <= s.trunc(); ++n) {
        std::vector<std::pair<std::int64_t, std::string>> parts;
        for (const auto &[e, c] : s.slice(n).terms()) {
            parts.emplace_back(c.as_int64(), mono("y", e.y));
        }
        out += "t^" + std::to_string(n) + ": " + signed_join(parts) + "\n";
    }
    return out;
}

std::string render_betti(const TriSeries &betti, RenderFormat f)
{
    std::vector<std::vector<std::int64_t>> rows;
    for (unsigned n = 0; n <= betti.trunc(); ++n) {
        std::vector<std::int64_t> b(4 * n + 1, 0);
        for (const auto &[e, c] : betti.slice(n).terms()) {
            b.at(e.x) = c.as_int64();
        }
        rows.push_back(std::move(b));
    }
    if (f == RenderFormat::json) {
        json arr = json::array();
        for (std::size_t n = 0; n < rows.size(); ++n) {
            arr.push_back({{"n", n}, {"betti", rows[n]}});
        }
        return json{{"N", betti.trunc()}, {"coefficients", arr}}.dump() + "\n";
    }
    std::string out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        out += "n = " + std::to_string(n) + ":";
        for (auto b : rows[n]) {
            out += " " + std::to_string(b);
        }
        out += "\n";
    }
    return out;
}

std::string render_graded(const GradedDims &g, unsigned n, RenderFormat f)
{
    if (f == RenderFormat::json) {
        json arr = json::array();
        for (const auto &[i, d] : g.dims) {
            arr.push_back({{"i", i}, {"dim", d}});
        }
        return json{{"n", n}, {"dims", arr}}.dump() + "\n";
    }
    std::string out;
    for (const auto &[i, d] : g.dims) {
        out += "HH_" + std::to_string(i) + ": " + std::to_string(d) + "\n";
    }
    return out;
}

std::string render_deformation(const std::vector<std::int64_t> &dims, unsigned n, RenderFormat f)
{
    if (f == RenderFormat::json) {
        json arr = json::array();
        for (std::size_t q = 0; q < dims.size(); ++q) {
            arr.push_back({{"q", q}, {"h", dims[q]}, {"derived_convention", q >= 3}});
        }
        return json{{"n", n}, {"tangent_cohomology", arr}}.dump() + "\n";
    }
    std::string out = "q  h^q(Hilb^" + std::to_string(n) + " S, T)\n";
    for (std::size_t q = 0; q < dims.size(); ++q) {
        out += std::to_string(q) + "  " + std::to_string(dims[q]);
        if (q >= 3) {
            out += "  (derived convention)";
        }
        out += "\n";
    }
    return out;
}

} // namespace hilbhodge
