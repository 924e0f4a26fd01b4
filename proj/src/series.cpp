#include <hilbhodge/series.hpp>

#include <algorithm>
#include <sstream>
#include <thread>

namespace hilbhodge
{

namespace
{

// Dense (x, y) accumulator used by the product kernels.
class DenseAccumulator
{
public:
    DenseAccumulator(std::uint32_t max_x, std::uint32_t max_y)
        : m_width(max_y + 1), m_cells(static_cast<std::size_t>(max_x + 1) * (max_y + 1))
    {
    }

    void accumulate(const BiPolynomial &a, const BiPolynomial &b)
    {
        for (const auto &[ea, ca] : a.terms()) {
            for (const auto &[eb, cb] : b.terms()) {
                auto idx = static_cast<std::size_t>(ea.x + eb.x) * m_width + (ea.y + eb.y);
                m_cells[idx].add_product(ca, cb);
            }
        }
    }

    BiPolynomial collect() const
    {
        BiPolynomial r;
        for (std::size_t i = 0; i < m_cells.size(); ++i) {
            if (!m_cells[i].is_zero()) {
                r.add_term({static_cast<std::uint32_t>(i / m_width), static_cast<std::uint32_t>(i % m_width)},
                           m_cells[i]);
            }
        }
        return r;
    }

private:
    std::size_t m_width;
    std::vector<Coefficient> m_cells;
};

// Dense buffers are only used when they are not much larger than the number
// of products; otherwise a map is cheaper.
constexpr std::size_t dense_limit = 1u << 20;

void parallel_for(unsigned count, unsigned threads, const std::function<void(unsigned)> &body)
{
    if (threads <= 1 || count <= 1) {
        for (unsigned i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    threads = std::min(threads, count);
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (unsigned i = w; i < count; i += threads) {
                body(i);
            }
        });
    }
}

void debug_check(const TriSeries &s)
{
#ifndef NDEBUG
    s.check_invariants();
#else
    (void)s;
#endif
}

BiPolynomial scaled(BiPolynomial p, const Coefficient &c)
{
    p *= c;
    return p;
}

std::string monomial_str(std::uint32_t ex, std::uint32_t ey, std::uint32_t et)
{
    std::string out;
    auto put = [&](const char *v, std::uint32_t e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += v;
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    };
    put("x", ex);
    put("y", ey);
    put("t", et);
    return out;
}

void append_term(std::string &out, const Coefficient &c, std::uint32_t ex, std::uint32_t ey, std::uint32_t et)
{
    auto mono = monomial_str(ex, ey, et);
    Coefficient mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
        if (c.sign() < 0) {
            out += "-";
        }
    } else {
        out += c.sign() < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
        out += mag.str();
    } else if (mag.is_one()) {
        out += mono;
    } else {
        out += mag.str() + "*" + mono;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// BiPolynomial

BiPolynomial BiPolynomial::constant(const Coefficient &c)
{
    return monomial({0, 0}, c);
}

BiPolynomial BiPolynomial::monomial(BiExponent e, const Coefficient &c)
{
    BiPolynomial p;
    p.add_term(e, c);
    return p;
}

Coefficient BiPolynomial::coeff(BiExponent e) const
{
    auto it = m_terms.find(e);
    return it == m_terms.end() ? Coefficient{} : it->second;
}

void BiPolynomial::add_term(BiExponent e, const Coefficient &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void BiPolynomial::sub_term(BiExponent e, const Coefficient &c)
{
    add_term(e, -c);
}

void BiPolynomial::add_shifted(const BiPolynomial &other, BiExponent shift, const Coefficient &c)
{
    if (c.is_zero()) {
        return;
    }
    for (const auto &[e, v] : other.m_terms) {
        add_term({e.x + shift.x, e.y + shift.y}, v * c);
    }
}

std::uint32_t BiPolynomial::max_x() const
{
    std::uint32_t m = 0;
    for (const auto &[e, c] : m_terms) {
        m = std::max(m, e.x);
    }
    return m;
}

std::uint32_t BiPolynomial::max_y() const
{
    std::uint32_t m = 0;
    for (const auto &[e, c] : m_terms) {
        m = std::max(m, e.y);
    }
    return m;
}

BiPolynomial &BiPolynomial::operator+=(const BiPolynomial &o)
{
    for (const auto &[e, c] : o.m_terms) {
        add_term(e, c);
    }
    return *this;
}

BiPolynomial &BiPolynomial::operator-=(const BiPolynomial &o)
{
    for (const auto &[e, c] : o.m_terms) {
        sub_term(e, c);
    }
    return *this;
}

BiPolynomial &BiPolynomial::operator*=(const Coefficient &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, v] : m_terms) {
        v *= c;
    }
    return *this;
}

BiPolynomial operator*(const BiPolynomial &a, const BiPolynomial &b)
{
    return multiply(a, b);
}

BiPolynomial multiply(const BiPolynomial &a, const BiPolynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    auto mx = a.max_x() + b.max_x();
    auto my = a.max_y() + b.max_y();
    auto cells = static_cast<std::size_t>(mx + 1) * (my + 1);
    if (cells <= dense_limit && cells <= 8 * a.size() * b.size() + 64) {
        DenseAccumulator acc(mx, my);
        acc.accumulate(a, b);
        return acc.collect();
    }
    BiPolynomial r;
    for (const auto &[ea, ca] : a.terms()) {
        for (const auto &[eb, cb] : b.terms()) {
            r.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
        }
    }
    return r;
}

std::string BiPolynomial::str() const
{
    std::string out;
    for (const auto &[e, c] : m_terms) {
        append_term(out, c, e.x, e.y, 0);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// TriSeries

TriSeries::TriSeries(unsigned trunc) : m_slices(static_cast<std::size_t>(trunc) + 1) {}

TriSeries TriSeries::one(unsigned trunc)
{
    return constant(Coefficient{1}, trunc);
}

TriSeries TriSeries::constant(const Coefficient &c, unsigned trunc)
{
    TriSeries s(trunc);
    s.m_slices[0].add_term({0, 0}, c);
    return s;
}

TriSeries TriSeries::monomial(Monomial m, const Coefficient &c, unsigned trunc)
{
    TriSeries s(trunc);
    s.add_term(m, c);
    return s;
}

TriSeries TriSeries::from_terms(const std::vector<std::pair<Monomial, Coefficient>> &terms, unsigned trunc)
{
    TriSeries s(trunc);
    for (const auto &[m, c] : terms) {
        s.add_term(m, c);
    }
    return s;
}

TriSeries TriSeries::from_slices(std::vector<BiPolynomial> slices)
{
    if (slices.empty()) {
        slices.emplace_back();
    }
    TriSeries s;
    s.m_slices = std::move(slices);
    return s;
}

const BiPolynomial &TriSeries::slice(unsigned n) const
{
    if (n > trunc()) {
        throw TruncationExceeded("coefficient of t^" + std::to_string(n) + " requested from a series truncated at t^"
                                 + std::to_string(trunc()));
    }
    return m_slices[n];
}

Coefficient TriSeries::coeff(Monomial m) const
{
    if (m.t > trunc()) {
        return {};
    }
    return m_slices[m.t].coeff({m.x, m.y});
}

std::vector<std::pair<Monomial, Coefficient>> TriSeries::terms() const
{
    std::vector<std::pair<Monomial, Coefficient>> out;
    out.reserve(term_count());
    for (unsigned n = 0; n < m_slices.size(); ++n) {
        for (const auto &[e, c] : m_slices[n].terms()) {
            out.emplace_back(Monomial{e.x, e.y, n}, c);
        }
    }
    return out;
}

std::size_t TriSeries::term_count() const
{
    std::size_t n = 0;
    for (const auto &s : m_slices) {
        n += s.size();
    }
    return n;
}

bool TriSeries::is_zero() const
{
    return std::all_of(m_slices.begin(), m_slices.end(), [](const BiPolynomial &p) { return p.is_zero(); });
}

void TriSeries::add_term(Monomial m, const Coefficient &c)
{
    if (m.t > trunc()) {
        return;
    }
    m_slices[m.t].add_term({m.x, m.y}, c);
}

TriSeries TriSeries::truncated(unsigned trunc) const
{
    trunc = std::min(trunc, this->trunc());
    return from_slices(std::vector<BiPolynomial>(m_slices.begin(), m_slices.begin() + trunc + 1));
}

bool TriSeries::satisfies_degree_bound(unsigned offset) const
{
    for (unsigned n = 0; n < m_slices.size(); ++n) {
        for (const auto &[e, c] : m_slices[n].terms()) {
            if (e.x > 2 * n + offset || e.y > 2 * n + offset) {
                return false;
            }
        }
    }
    return true;
}

TriSeries TriSeries::pruned_to_degree_bound(unsigned offset) const
{
    TriSeries r(trunc());
    for (unsigned n = 0; n < m_slices.size(); ++n) {
        for (const auto &[e, c] : m_slices[n].terms()) {
            if (e.x <= 2 * n + offset && e.y <= 2 * n + offset) {
                r.m_slices[n].add_term(e, c);
            }
        }
    }
    return r;
}

void TriSeries::check_invariants() const
{
    for (const auto &s : m_slices) {
        for (const auto &[e, c] : s.terms()) {
            if (c.is_zero()) {
                throw std::logic_error("TriSeries stores a zero coefficient");
            }
        }
    }
}

std::string TriSeries::str() const
{
    std::string out;
    for (const auto &[m, c] : terms()) {
        append_term(out, c, m.x, m.y, m.t);
    }
    return (out.empty() ? std::string("0") : out) + " + O(t^" + std::to_string(trunc() + 1) + ")";
}

// ---------------------------------------------------------------------------
// Arithmetic

TriSeries add(const TriSeries &a, const TriSeries &b)
{
    auto n = std::min(a.trunc(), b.trunc());
    std::vector<BiPolynomial> out(a.slices().begin(), a.slices().begin() + n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        out[i] += b.slice(i);
    }
    auto r = TriSeries::from_slices(std::move(out));
    debug_check(r);
    return r;
}

TriSeries operator+(const TriSeries &a, const TriSeries &b)
{
    return add(a, b);
}

TriSeries operator-(const TriSeries &a)
{
    return Coefficient{-1} * a;
}

TriSeries operator-(const TriSeries &a, const TriSeries &b)
{
    return add(a, -b);
}

TriSeries operator*(const TriSeries &a, const TriSeries &b)
{
    return mul(a, b);
}

TriSeries operator*(const Coefficient &c, const TriSeries &a)
{
    std::vector<BiPolynomial> out = a.slices();
    for (auto &s : out) {
        s *= c;
    }
    return TriSeries::from_slices(std::move(out));
}

TriSeries mul(const TriSeries &a, const TriSeries &b, unsigned threads)
{
    auto n = std::min(a.trunc(), b.trunc());
    std::vector<BiPolynomial> out(n + 1);
    parallel_for(n + 1, threads, [&](unsigned k) {
        std::uint32_t mx = 0, my = 0;
        bool any = false;
        for (unsigned i = 0; i <= k; ++i) {
            const auto &sa = a.slice(i);
            const auto &sb = b.slice(k - i);
            if (sa.is_zero() || sb.is_zero()) {
                continue;
            }
            any = true;
            mx = std::max(mx, sa.max_x() + sb.max_x());
            my = std::max(my, sa.max_y() + sb.max_y());
        }
        if (!any) {
            return;
        }
        auto cells = static_cast<std::size_t>(mx + 1) * (my + 1);
        if (cells <= dense_limit) {
            DenseAccumulator acc(mx, my);
            for (unsigned i = 0; i <= k; ++i) {
                acc.accumulate(a.slice(i), b.slice(k - i));
            }
            out[k] = acc.collect();
        } else {
            for (unsigned i = 0; i <= k; ++i) {
                out[k] += multiply(a.slice(i), b.slice(k - i));
            }
        }
    });
    auto r = TriSeries::from_slices(std::move(out));
    debug_check(r);
    return r;
}

namespace
{

// The t^0 slice as a single constant, or nullopt if it involves x or y.
std::optional<Coefficient> constant_slice(const TriSeries &a)
{
    const auto &s0 = a.slice(0);
    if (s0.is_zero()) {
        return Coefficient{};
    }
    if (s0.size() == 1 && s0.terms().begin()->first == BiExponent{0, 0}) {
        return s0.terms().begin()->second;
    }
    return std::nullopt;
}

} // namespace

TriSeries invert(const TriSeries &a)
{
    auto c0 = constant_slice(a);
    if (!c0 || c0->is_zero()) {
        throw NonUnitConstantTerm("invert: the t^0 part " + a.slice(0).str() + " is not a nonzero constant");
    }
    Coefficient inv = Coefficient{1} / *c0;
    auto n = a.trunc();
    std::vector<BiPolynomial> b(n + 1);
    b[0] = BiPolynomial::constant(inv);
    for (unsigned k = 1; k <= n; ++k) {
        BiPolynomial acc;
        for (unsigned i = 1; i <= k; ++i) {
            if (!a.slice(i).is_zero() && !b[k - i].is_zero()) {
                acc += multiply(a.slice(i), b[k - i]);
            }
        }
        b[k] = scaled(std::move(acc), -inv);
    }
    auto r = TriSeries::from_slices(std::move(b));
    debug_check(r);
    return r;
}

TriSeries int_pow(const TriSeries &a, std::int64_t e)
{
    if (e < 0) {
        return invert(int_pow(a, -e));
    }
    auto result = TriSeries::one(a.trunc());
    auto base = a;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

TriSeries exp_series(const TriSeries &a)
{
    if (!a.slice(0).is_zero()) {
        throw BadConstantTerm("exp_series: the t^0 part " + a.slice(0).str() + " must vanish");
    }
    auto n = a.trunc();
    std::vector<BiPolynomial> b(n + 1);
    b[0] = BiPolynomial::constant(Coefficient{1});
    // n b_n = sum_{k=1}^{n} k a_k b_{n-k}
    for (unsigned m = 1; m <= n; ++m) {
        BiPolynomial acc;
        for (unsigned k = 1; k <= m; ++k) {
            if (!a.slice(k).is_zero() && !b[m - k].is_zero()) {
                acc += scaled(multiply(a.slice(k), b[m - k]), Coefficient{static_cast<std::int64_t>(k)});
            }
        }
        b[m] = scaled(std::move(acc), Coefficient::ratio(1, m));
    }
    auto r = TriSeries::from_slices(std::move(b));
    debug_check(r);
    return r;
}

TriSeries log_series(const TriSeries &a)
{
    auto c0 = constant_slice(a);
    if (!c0 || !c0->is_one()) {
        throw BadConstantTerm("log_series: the t^0 part " + a.slice(0).str() + " must equal 1");
    }
    auto n = a.trunc();
    std::vector<BiPolynomial> l(n + 1);
    // m l_m = m f_m - sum_{k=1}^{m-1} k l_k f_{m-k}
    for (unsigned m = 1; m <= n; ++m) {
        BiPolynomial acc = scaled(a.slice(m), Coefficient{static_cast<std::int64_t>(m)});
        for (unsigned k = 1; k < m; ++k) {
            if (!l[k].is_zero() && !a.slice(m - k).is_zero()) {
                acc -= scaled(multiply(l[k], a.slice(m - k)), Coefficient{static_cast<std::int64_t>(k)});
            }
        }
        l[m] = scaled(std::move(acc), Coefficient::ratio(1, m));
    }
    auto r = TriSeries::from_slices(std::move(l));
    debug_check(r);
    return r;
}

namespace
{

void validate_image(const VarImage &img)
{
    if (img.kind == VarImage::Kind::constant) {
        if (img.value < -1 || img.value > 1) {
            throw UnsupportedSubstitution("substitute: constants are limited to -1, 0, 1");
        }
        return;
    }
    if (img.value != 1 && img.value != -1) {
        throw UnsupportedSubstitution("substitute: a variable image needs sign +1 or -1");
    }
    if (img.var == Var::t) {
        throw UnsupportedSubstitution("substitute: x and y cannot be sent to t");
    }
}

// Contribution of v^e under img: a sign and an (x, y) exponent, or nullopt
// when the image is zero.
std::optional<std::pair<int, BiExponent>> image_power(const VarImage &img, std::uint32_t e)
{
    if (e == 0) {
        return std::pair{1, BiExponent{0, 0}};
    }
    if (img.kind == VarImage::Kind::constant) {
        if (img.value == 0) {
            return std::nullopt;
        }
        return std::pair{(img.value < 0 && (e & 1)) ? -1 : 1, BiExponent{0, 0}};
    }
    int sign = (img.value < 0 && (e & 1)) ? -1 : 1;
    return std::pair{sign, img.var == Var::x ? BiExponent{e, 0} : BiExponent{0, e}};
}

} // namespace

TriSeries substitute(const TriSeries &a, const Substitution &s)
{
    validate_image(s.x);
    validate_image(s.y);
    TriSeries r(a.trunc());
    for (unsigned n = 0; n <= a.trunc(); ++n) {
        for (const auto &[e, c] : a.slice(n).terms()) {
            auto ix = image_power(s.x, e.x);
            auto iy = image_power(s.y, e.y);
            if (!ix || !iy) {
                continue;
            }
            Coefficient v = (ix->first * iy->first < 0) ? -c : c;
            r.add_term({ix->second.x + iy->second.x, ix->second.y + iy->second.y, n}, v);
        }
    }
    debug_check(r);
    return r;
}

BiPolynomial coefficient_of_t(const TriSeries &a, unsigned n)
{
    return a.slice(n);
}

TriSeries euler_product(const std::function<TriSeries(unsigned k)> &factor, unsigned trunc)
{
    auto result = TriSeries::one(trunc);
    for (unsigned k = 1; k <= trunc; ++k) {
        auto f = factor(k);
        if (f.slice(0) != BiPolynomial::constant(Coefficient{1})) {
            throw FactorNotNormalized("euler_product: factor " + std::to_string(k) + " has t^0 part "
                                      + f.slice(0).str());
        }
        for (unsigned i = 1; i < k && i <= f.trunc(); ++i) {
            if (!f.slice(i).is_zero()) {
                throw FactorNotNormalized("euler_product: factor " + std::to_string(k)
                                          + " is not congruent to 1 modulo t^" + std::to_string(k));
            }
        }
        result = mul(result, f);
    }
    return result;
}

TriSeries binomial_power_series(const BinomialPower &f, unsigned trunc)
{
    return mul_binomial_power(TriSeries::one(trunc), f);
}

TriSeries mul_binomial_power(TriSeries a, const BinomialPower &f)
{
    if (f.e == 0 || f.c.is_zero()) {
        return a;
    }
    if (f.e < 0 && f.m.t == 0) {
        throw FactorNotNormalized("mul_binomial_power: negative power of a factor without t");
    }
    const auto n = a.trunc();
    const BiExponent shift{f.m.x, f.m.y};
    std::vector<BiPolynomial> s = a.slices();
    if (f.e > 0 && f.m.t == 0) {
        // m is t-free, so the recurrence would alias; expand (1 - c m)^e per slice.
        for (auto &slice : s) {
            BiPolynomial acc;
            Coefficient power{1};
            for (std::int64_t j = 0; j <= f.e; ++j) {
                acc.add_shifted(slice,
                                {static_cast<std::uint32_t>(shift.x * j), static_cast<std::uint32_t>(shift.y * j)},
                                binomial(f.e, j) * power);
                power *= -f.c;
            }
            slice = std::move(acc);
        }
    } else if (f.e > 0) {
        // Multiply by (1 - c m), e times; walk downwards so sources are unmodified.
        for (std::int64_t pass = 0; pass < f.e; ++pass) {
            for (unsigned k = n + 1; k-- > f.m.t;) {
                s[k].add_shifted(s[k - f.m.t], shift, -f.c);
            }
        }
    } else {
        // Divide by (1 - c m), |e| times: b_k = a_k + c m b_{k - deg_t m}.
        for (std::int64_t pass = 0; pass < -f.e; ++pass) {
            for (unsigned k = f.m.t; k <= n; ++k) {
                s[k].add_shifted(s[k - f.m.t], shift, f.c);
            }
        }
    }
    auto r = TriSeries::from_slices(std::move(s));
    debug_check(r);
    return r;
}

TriSeries binomial_product(const std::vector<BinomialPower> &factors, unsigned trunc)
{
    auto r = TriSeries::one(trunc);
    for (const auto &f : factors) {
        r = mul_binomial_power(std::move(r), f);
    }
    return r;
}

} // namespace hilbhodge
