#include <hilbhodge/engine.hpp>

#include <stdexcept>
#include <thread>

#include <hilbhodge/partitions.hpp>

namespace hilbhodge
{

namespace
{

int parity_sign(int d)
{
    return (d % 2 == 0) ? 1 : -1;
}

std::uint32_t u32(int v)
{
    return static_cast<std::uint32_t>(v);
}

// Every user-facing Hodge series must have nonnegative integer coefficients
// and respect the dimension bound of the spaces it describes.
void check_hodge_series(const TriSeries &s, unsigned offset, const char *what)
{
    for (const auto &[m, c] : s.terms()) {
        if (!c.is_integer() || c.sign() < 0) {
            throw std::logic_error(std::string(what) + ": coefficient " + c.str() + " is not a nonnegative integer");
        }
    }
    if (!s.satisfies_degree_bound(offset)) {
        throw std::logic_error(std::string(what) + ": term outside the dimension bound");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// HodgePolynomial / GradedDims

std::int64_t HodgePolynomial::at(int p, int q) const
{
    auto it = terms.find({p, q});
    return it == terms.end() ? 0 : it->second;
}

void HodgePolynomial::set(int p, int q, std::int64_t h)
{
    if (h == 0) {
        terms.erase({p, q});
    } else {
        terms[{p, q}] = h;
    }
}

HodgePolynomial HodgePolynomial::from_bipolynomial(const BiPolynomial &poly, int space_dim)
{
    HodgePolynomial r;
    r.space_dim = space_dim;
    for (const auto &[e, c] : poly.terms()) {
        auto h = c.as_int64();
        if (h < 0) {
            throw std::logic_error("negative Hodge number " + c.str());
        }
        if (static_cast<int>(e.x) > space_dim || static_cast<int>(e.y) > space_dim) {
            throw std::logic_error("Hodge number outside [0, " + std::to_string(space_dim) + "]^2");
        }
        r.set(static_cast<int>(e.x), static_cast<int>(e.y), h);
    }
    return r;
}

BiPolynomial HodgePolynomial::to_bipolynomial() const
{
    BiPolynomial r;
    for (const auto &[pq, h] : terms) {
        r.add_term({u32(pq.first), u32(pq.second)}, Coefficient{h});
    }
    return r;
}

std::int64_t GradedDims::at(int degree) const
{
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

void GradedDims::add(int degree, std::int64_t d)
{
    auto v = at(degree) + d;
    if (v == 0) {
        dims.erase(degree);
    } else {
        dims[degree] = v;
    }
}

// ---------------------------------------------------------------------------
// Symmetric powers

BigradedDims to_bigraded(const SurfaceDiamond &d)
{
    BigradedDims v;
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            if (d.h[p][q] != 0) {
                v[{p, q}] = d.h[p][q];
            }
        }
    }
    return v;
}

TriSeries super_sym_series(const BigradedDims &v, unsigned trunc)
{
    // prod_{(p,q)} (1 - s x^p y^q t)^{-s v_{p,q}}, s = (-1)^{p+q}
    std::vector<BinomialPower> factors;
    for (const auto &[pq, dim] : v) {
        if (dim == 0) {
            continue;
        }
        int s = parity_sign(pq.first + pq.second);
        factors.push_back({Coefficient{s}, Monomial{u32(pq.first), u32(pq.second), 1}, -s * dim});
    }
    return binomial_product(factors, trunc);
}

HodgePolynomial sym_power_twisted_hodge(const SurfaceDiamond &d, unsigned a)
{
    auto series = super_sym_series(to_bigraded(d), a);
    return HodgePolynomial::from_bipolynomial(series.slice(a), static_cast<int>(2 * a));
}

// ---------------------------------------------------------------------------
// Hilbert schemes

namespace
{

std::vector<BinomialPower> hilb_factor(const SurfaceDiamond &d, unsigned k)
{
    std::vector<BinomialPower> factors;
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            auto h = d.h[p][q];
            if (h == 0) {
                continue;
            }
            int s = parity_sign(p + q);
            factors.push_back({Coefficient{s}, Monomial{u32(p) + k - 1, u32(q) + k - 1, k}, -s * h});
        }
    }
    return factors;
}

} // namespace

TriSeries hilb_series(const TwistedTable &table, unsigned N, const EngineOptions &opts)
{
    table.require(N);
    TriSeries result(N);
    if (opts.threads <= 1) {
        std::vector<BinomialPower> factors;
        for (unsigned k = 1; k <= N; ++k) {
            auto f = hilb_factor(table.at(k), k);
            factors.insert(factors.end(), f.begin(), f.end());
        }
        result = binomial_product(factors, N);
    } else {
        // Factors for different k are independent; build them concurrently,
        // then multiply in a fixed order.
        std::vector<TriSeries> per_k(N + 1, TriSeries::one(N));
        {
            std::vector<std::jthread> pool;
            unsigned workers = std::min(opts.threads, std::max(1u, N));
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (unsigned k = 1 + w; k <= N; k += workers) {
                        per_k[k] = binomial_product(hilb_factor(table.at(k), k), N);
                    }
                });
            }
        }
        result = TriSeries::one(N);
        for (unsigned k = 1; k <= N; ++k) {
            result = mul(result, per_k[k], opts.threads);
        }
    }
    check_hodge_series(result, 0, "hilb_series");
    return result;
}

namespace
{

struct StratumFactor {
    HodgePolynomial poly;
    int bound = 0; // Hodge degrees of the factor lie in [0, bound]
};

// Adds to out, for every (p, q) in [0, dim]^2, the sum over
// sum i_k = p - shift and sum j_k = q - shift of prod_k h^{i_k, j_k}(factor_k).
void accumulate_stratum(const std::vector<StratumFactor> &factors, int shift, int dim, std::vector<Coefficient> &out)
{
    std::vector<int> bounds;
    for (const auto &f : factors) {
        bounds.push_back(f.bound);
    }
    std::vector<std::vector<std::vector<int>>> comps(static_cast<std::size_t>(dim) + 1);
    for (int p = 0; p <= dim; ++p) {
        comps[p] = bounded_compositions(p - shift, bounds);
    }
    for (int p = 0; p <= dim; ++p) {
        for (int q = 0; q <= dim; ++q) {
            Coefficient sum;
            for (const auto &is : comps[p]) {
                for (const auto &js : comps[q]) {
                    Coefficient prod{1};
                    for (std::size_t k = 0; k < factors.size() && !prod.is_zero(); ++k) {
                        prod *= Coefficient{factors[k].poly.at(is[k], js[k])};
                    }
                    sum += prod;
                }
            }
            out[static_cast<std::size_t>(p) * (dim + 1) + q] += sum;
        }
    }
}

HodgePolynomial collect(const std::vector<Coefficient> &cells, int dim)
{
    HodgePolynomial r;
    r.space_dim = dim;
    for (int p = 0; p <= dim; ++p) {
        for (int q = 0; q <= dim; ++q) {
            r.set(p, q, cells[static_cast<std::size_t>(p) * (dim + 1) + q].as_int64());
        }
    }
    return r;
}

StratumFactor diamond_factor(const SurfaceDiamond &d)
{
    return {HodgePolynomial::from_bipolynomial(d.polynomial(), 2), 2};
}

} // namespace

HodgePolynomial hilb_via_partitions(const TwistedTable &table, unsigned n)
{
    table.require(n);
    const int dim = static_cast<int>(2 * n);
    std::vector<Coefficient> cells(static_cast<std::size_t>(dim + 1) * (dim + 1));
    for (const auto &lambda : partitions(static_cast<int>(n))) {
        std::vector<StratumFactor> factors;
        for (int k = 1; k <= lambda.largest(); ++k) {
            if (int a = lambda.mult(k); a > 0) {
                factors.push_back({sym_power_twisted_hodge(table.at(u32(k)), u32(a)), 2 * a});
            }
        }
        accumulate_stratum(factors, static_cast<int>(n) - lambda.length(), dim, cells);
    }
    return collect(cells, dim);
}

TriSeries nested_series(const TwistedTable &table_l, const TwistedTable &table_llp, unsigned N,
                        const EngineOptions &opts)
{
    table_llp.require(N);
    auto hilb = hilb_series(table_l, N, opts);
    TriSeries residual(N);
    for (unsigned j = 0; j <= N; ++j) {
        const auto &d = table_llp.at(j);
        for (std::uint32_t p = 0; p < 3; ++p) {
            for (std::uint32_t q = 0; q < 3; ++q) {
                residual.add_term({p + j, q + j, j}, Coefficient{d.h[p][q]});
            }
        }
    }
    auto result = mul(hilb, residual, opts.threads);
    check_hodge_series(result, 2, "nested_series");
    return result;
}

HodgePolynomial nested_via_strata(const TwistedTable &table_l, const TwistedTable &table_llp, unsigned n)
{
    table_l.require(n);
    table_llp.require(n);
    const int dim = static_cast<int>(2 * n + 2);
    const int ni = static_cast<int>(n);
    std::vector<Coefficient> cells(static_cast<std::size_t>(dim + 1) * (dim + 1));
    for (const auto &[lambda, j] : nested_index_set(ni)) {
        std::vector<StratumFactor> factors;
        for (int k = 1; k <= lambda.largest(); ++k) {
            int a = lambda.mult(k) - (k == j ? 1 : 0);
            if (a > 0) {
                factors.push_back({sym_power_twisted_hodge(table_l.at(u32(k)), u32(a)), 2 * a});
            }
        }
        factors.push_back(diamond_factor(table_llp.at(u32(j))));
        int shift = ni - lambda.length() + (j == 0 ? 0 : 1);
        accumulate_stratum(factors, shift, dim, cells);
    }
    return collect(cells, dim);
}

// ---------------------------------------------------------------------------
// chi_y genera

std::array<std::int64_t, 3> holomorphic_euler_characteristics(const SurfaceDiamond &d)
{
    std::array<std::int64_t, 3> chi{};
    for (int p = 0; p < 3; ++p) {
        chi[p] = d.h[p][0] - d.h[p][1] + d.h[p][2];
    }
    return chi;
}

TriSeries chi_y_product(const TwistedTable &table, unsigned N)
{
    table.require(N);
    std::vector<BinomialPower> factors;
    for (unsigned k = 1; k <= N; ++k) {
        auto chi = holomorphic_euler_characteristics(table.at(k));
        for (int p = 0; p < 3; ++p) {
            if (chi[p] != 0) {
                factors.push_back({Coefficient{1}, Monomial{0, u32(p) + k - 1, k}, -parity_sign(p) * chi[p]});
            }
        }
    }
    return binomial_product(factors, N);
}

TriSeries chi_y_exp(const TwistedTable &table, unsigned N)
{
    table.require(N);
    // sum_m t^m/m sum_k (ty)^{(k-1)m} chi_{-y^m}(S, L^k)
    TriSeries inner(N);
    for (unsigned m = 1; m <= N; ++m) {
        for (unsigned k = 1; k * m <= N; ++k) {
            auto chi = holomorphic_euler_characteristics(table.at(k));
            for (unsigned p = 0; p < 3; ++p) {
                if (chi[p] == 0) {
                    continue;
                }
                auto c = Coefficient::ratio(parity_sign(static_cast<int>(p)) * chi[p], m);
                inner.add_term({0, m * (k - 1) + m * p, m * k}, c);
            }
        }
    }
    auto e = exp_series(inner);
    for (const auto &[mono, c] : e.terms()) {
        if (!c.is_integer()) {
            throw IntegralityFailure("chi_y_exp: coefficient " + c.str() + " of t^" + std::to_string(mono.t)
                                     + " is not an integer");
        }
    }
    return e;
}

TriSeries chi_y_from_hodge(const TwistedTable &table, unsigned N)
{
    // y -> -1, then x -> -y
    Substitution s{VarImage::variable(Var::y, -1), VarImage::constant(-1)};
    return substitute(hilb_series(table, N), s);
}

// ---------------------------------------------------------------------------
// Betti numbers and the Frolicher check

TriSeries betti_series(const BettiVector &b, unsigned N)
{
    std::vector<BinomialPower> factors;
    for (unsigned k = 1; k <= N; ++k) {
        for (unsigned i = 0; i < 5; ++i) {
            if (b[i] == 0) {
                continue;
            }
            int s = parity_sign(static_cast<int>(i));
            factors.push_back({Coefficient{s}, Monomial{i + 2 * k - 2, 0, k}, -s * b[i]});
        }
    }
    return binomial_product(factors, N);
}

FrolicherReport frolicher_check(const TwistedTable &table_trivial, const BettiVector &b, unsigned N)
{
    auto hodge = substitute(hilb_series(table_trivial, N), Substitution::poincare());
    auto betti = betti_series(b, N);
    FrolicherReport report;
    for (unsigned n = 0; n <= N; ++n) {
        for (std::uint32_t i = 0; i <= 4 * n; ++i) {
            auto bh = betti.coeff({i, 0, n});
            auto hh = hodge.coeff({i, 0, n});
            if (!(bh == hh)) {
                report.first_mismatch = FrolicherMismatch{n, i, bh.str(), hh.str()};
                return report;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Hochschild homology

GradedDims hh_dims(const TwistedTable &table, unsigned n)
{
    auto poly = hilb_series(table, n).slice(n);
    GradedDims out;
    for (const auto &[e, c] : poly.terms()) {
        out.add(static_cast<int>(e.y) - static_cast<int>(e.x), c.as_int64());
    }
    return out;
}

GradedDims HochschildSeries::at(unsigned n) const
{
    GradedDims out;
    for (const auto &[e, c] : series.slice(n).terms()) {
        if (e.x != 0) {
            throw std::logic_error("HochschildSeries: unexpected x exponent");
        }
        out.add(static_cast<int>(e.y) - static_cast<int>(2 * n), c.as_int64());
    }
    return out;
}

HochschildSeries hh_rhs_series(const TwistedTable &table, unsigned N)
{
    table.require(N);
    std::vector<BinomialPower> factors;
    for (unsigned k = 1; k <= N; ++k) {
        // HH_i(S, L^k) = sum_{q-p=i} h^{p,q}(S, L^k), i in [-2, 2]
        std::array<std::int64_t, 5> hh{};
        const auto &d = table.at(k);
        for (int p = 0; p < 3; ++p) {
            for (int q = 0; q < 3; ++q) {
                hh[q - p + 2] += d.h[p][q];
            }
        }
        for (int i = -2; i <= 2; ++i) {
            if (hh[i + 2] == 0) {
                continue;
            }
            int s = parity_sign(i < 0 ? -i : i);
            factors.push_back({Coefficient{s}, Monomial{0, u32(i + static_cast<int>(2 * k)), k}, -s * hh[i + 2]});
        }
    }
    return {binomial_product(factors, N)};
}

// ---------------------------------------------------------------------------
// Deformation theory

namespace
{

// Graded Sym^m of (h^0, h^1, h^2) with odd degrees anticommuting.
GradedDims super_sym_graded(const std::array<std::int64_t, 3> &dims, unsigned m)
{
    BigradedDims v;
    for (int q = 0; q < 3; ++q) {
        if (dims[q] != 0) {
            v[{0, q}] = dims[q];
        }
    }
    GradedDims out;
    auto series = super_sym_series(v, m);
    for (const auto &[e, c] : series.slice(m).terms()) {
        out.add(static_cast<int>(e.y), c.as_int64());
    }
    return out;
}

} // namespace

GradedDims sn_invariant_tangent(const DeformationInput &din, unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("sn_invariant_tangent: n must be positive");
    }
    auto sym = super_sym_graded(din.hO, n - 1);
    GradedDims out;
    for (int a = 0; a < 3; ++a) {
        for (const auto &[b, d] : sym.dims) {
            out.add(a + b, din.hT[a] * d);
        }
    }
    return out;
}

std::vector<std::int64_t> deformation_dims(const DeformationInput &din, unsigned n, unsigned qmax)
{
    std::vector<std::int64_t> out(qmax + 1, 0);
    if (n == 0) {
        return out;
    }
    if (n == 1) {
        for (unsigned q = 0; q <= qmax && q < 3; ++q) {
            out[q] = din.hT[q];
        }
        return out;
    }
    auto inv = sn_invariant_tangent(din, n);
    auto sym_o = super_sym_graded(din.hO, n - 2); // H^*(S^(n-2), O)
    for (unsigned q = 0; q <= qmax; ++q) {
        std::int64_t v = inv.at(static_cast<int>(q));
        for (int r = 0; r < 3; ++r) {
            v += sym_o.at(static_cast<int>(q) - 1 - r) * din.hW2[r];
        }
        out[q] = v;
    }
    return out;
}

DeformationClosedForms deformation_closed_forms(const DeformationInput &din, unsigned n)
{
    if (!din.connected || n < 2) {
        throw std::invalid_argument("deformation_closed_forms: requires a connected surface and n >= 2");
    }
    const auto &T = din.hT;
    const auto &O = din.hO;
    const auto &W = din.hW2;
    DeformationClosedForms r;
    r.h0 = T[0];
    r.h1 = T[1] + T[0] * O[1] + W[0];
    r.h2 = T[2] + T[1] * O[1] + T[0] * O[2] + W[1];
    if (n >= 3) {
        // Lambda^2 H^1(O) (x) H^0(T) and H^1(O) (x) H^0(Lambda^2 T)
        r.h2 += T[0] * (O[1] * (O[1] - 1) / 2) + O[1] * W[0];
    }
    return r;
}

std::vector<std::int64_t> tangent_from_trivial_table(const TwistedTable &table_trivial, unsigned n, unsigned qmax)
{
    std::vector<std::int64_t> out(qmax + 1, 0);
    if (n == 0) {
        return out;
    }
    auto poly = hilb_series(table_trivial, n).slice(n);
    for (std::uint32_t q = 0; q <= qmax; ++q) {
        out[q] = poly.coeff({2 * n - 1, q}).as_int64();
    }
    return out;
}

} // namespace hilbhodge
