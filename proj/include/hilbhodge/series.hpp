#ifndef HILBHODGE_SERIES_HPP
#define HILBHODGE_SERIES_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <hilbhodge/coefficient.hpp>

// Exact truncated power series in x, y, t. Series are truncated t-adically
// at a fixed order; x and y are polynomial variables. Every value is
// immutable once built and every operation is a pure function.

namespace hilbhodge
{

class SeriesError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class NonUnitConstantTerm : public SeriesError
{
public:
    using SeriesError::SeriesError;
};

class BadConstantTerm : public SeriesError
{
public:
    using SeriesError::SeriesError;
};

class UnsupportedSubstitution : public SeriesError
{
public:
    using SeriesError::SeriesError;
};

class TruncationExceeded : public SeriesError
{
public:
    using SeriesError::SeriesError;
};

class FactorNotNormalized : public SeriesError
{
public:
    using SeriesError::SeriesError;
};

struct BiExponent {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    auto operator<=>(const BiExponent &) const = default;
};

/// Exponent triple; ordered by (t, x, y), which is the canonical iteration
/// order of TriSeries.
struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint32_t t = 0;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
    {
        if (auto c = a.t <=> b.t; c != 0) {
            return c;
        }
        if (auto c = a.x <=> b.x; c != 0) {
            return c;
        }
        return a.y <=> b.y;
    }
};

/// Sparse polynomial in x and y with exact coefficients. Zero coefficients
/// are never stored.
class BiPolynomial
{
public:
    using term_map = std::map<BiExponent, Coefficient>;

    BiPolynomial() = default;
    static BiPolynomial constant(const Coefficient &c);
    static BiPolynomial monomial(BiExponent e, const Coefficient &c);

    const term_map &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }
    Coefficient coeff(BiExponent e) const;

    void add_term(BiExponent e, const Coefficient &c);
    void sub_term(BiExponent e, const Coefficient &c);
    // Adds c * m * other, with m = x^shift.x y^shift.y.
    void add_shifted(const BiPolynomial &other, BiExponent shift, const Coefficient &c);

    std::uint32_t max_x() const;
    std::uint32_t max_y() const;

    BiPolynomial &operator+=(const BiPolynomial &o);
    BiPolynomial &operator-=(const BiPolynomial &o);
    BiPolynomial &operator*=(const Coefficient &c);

    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial &b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial &b) { return a -= b; }
    friend BiPolynomial operator*(const BiPolynomial &a, const BiPolynomial &b);
    friend bool operator==(const BiPolynomial &, const BiPolynomial &) = default;

    /// Human-readable form such as "1 + y + 2*x^2*y^2", terms in (x, y) order.
    std::string str() const;

private:
    term_map m_terms;
};

/// Product accumulated in a dense buffer; exposed for the series kernel.
BiPolynomial multiply(const BiPolynomial &a, const BiPolynomial &b);

class TriSeries
{
public:
    /// The zero series truncated at t^trunc.
    explicit TriSeries(unsigned trunc = 0);

    static TriSeries one(unsigned trunc);
    static TriSeries constant(const Coefficient &c, unsigned trunc);
    static TriSeries monomial(Monomial m, const Coefficient &c, unsigned trunc);
    static TriSeries from_terms(const std::vector<std::pair<Monomial, Coefficient>> &terms, unsigned trunc);
    /// Series whose t^n coefficient is slices[n]; trunc = slices.size() - 1.
    static TriSeries from_slices(std::vector<BiPolynomial> slices);

    unsigned trunc() const { return static_cast<unsigned>(m_slices.size() - 1); }

    /// Coefficient of t^n. Throws TruncationExceeded when n > trunc().
    const BiPolynomial &slice(unsigned n) const;
    const std::vector<BiPolynomial> &slices() const { return m_slices; }

    Coefficient coeff(Monomial m) const;
    std::vector<std::pair<Monomial, Coefficient>> terms() const;
    std::size_t term_count() const;
    bool is_zero() const;

    // Terms beyond the truncation order are dropped.
    void add_term(Monomial m, const Coefficient &c);

    TriSeries truncated(unsigned trunc) const;

    /// True if e_x <= 2 e_t + offset and e_y <= 2 e_t + offset for every term.
    bool satisfies_degree_bound(unsigned offset) const;
    /// Drops terms violating the degree bound.
    TriSeries pruned_to_degree_bound(unsigned offset) const;

    /// Debug check: no stored zero coefficients.
    void check_invariants() const;

    friend bool operator==(const TriSeries &, const TriSeries &) = default;

    std::string str() const;

private:
    std::vector<BiPolynomial> m_slices;
};

TriSeries operator+(const TriSeries &a, const TriSeries &b);
TriSeries operator-(const TriSeries &a, const TriSeries &b);
TriSeries operator-(const TriSeries &a);
TriSeries operator*(const TriSeries &a, const TriSeries &b);
TriSeries operator*(const Coefficient &c, const TriSeries &a);

TriSeries add(const TriSeries &a, const TriSeries &b);

/// Product truncated at min(a.trunc(), b.trunc()). Output slices may be
/// computed on several threads; the result does not depend on the count.
TriSeries mul(const TriSeries &a, const TriSeries &b, unsigned threads = 1);

/// Multiplicative inverse. The t^0 slice must be a nonzero constant.
TriSeries invert(const TriSeries &a);

/// a^e by repeated squaring; negative e inverts first.
TriSeries int_pow(const TriSeries &a, std::int64_t e);

/// Requires the t^0 slice to be zero.
TriSeries exp_series(const TriSeries &a);
/// Requires the t^0 slice to be exactly 1.
TriSeries log_series(const TriSeries &a);

enum class Var { x, y, t };

/// Image of one variable: either sign * (another variable) or a constant in
/// {-1, 0, 1}.
struct VarImage {
    enum class Kind { variable, constant };

    Kind kind = Kind::variable;
    Var var = Var::x;
    int value = 1; // sign for variables, the constant otherwise

    static VarImage variable(Var v, int sign = 1) { return {Kind::variable, v, sign}; }
    static VarImage constant(int c) { return {Kind::constant, Var::x, c}; }
};

/// Simultaneous substitution of x and y; t is left alone.
struct Substitution {
    VarImage x = VarImage::variable(Var::x);
    VarImage y = VarImage::variable(Var::y);

    static Substitution swap_xy() { return {VarImage::variable(Var::y), VarImage::variable(Var::x)}; }
    /// x -> z, y -> z with z stored as x.
    static Substitution poincare() { return {VarImage::variable(Var::x), VarImage::variable(Var::x)}; }
};

TriSeries substitute(const TriSeries &a, const Substitution &s);

BiPolynomial coefficient_of_t(const TriSeries &a, unsigned n);

/// prod_{k=1}^{N} factor(k) truncated at t^N. Each factor must be congruent
/// to 1 modulo t^k.
TriSeries euler_product(const std::function<TriSeries(unsigned k)> &factor, unsigned trunc);

/// The factor (1 - c * m)^e with m a monomial of positive t-degree.
struct BinomialPower {
    Coefficient c;
    Monomial m;
    std::int64_t e = 0;
};

/// (1 - c m)^e expanded up to t^trunc.
TriSeries binomial_power_series(const BinomialPower &f, unsigned trunc);

/// a * (1 - c m)^e computed by e passes of a sparse recurrence, which is far
/// cheaper than a general product when a is dense.
TriSeries mul_binomial_power(TriSeries a, const BinomialPower &f);

/// Product of all factors starting from 1, truncated at t^trunc.
TriSeries binomial_product(const std::vector<BinomialPower> &factors, unsigned trunc);

} // namespace hilbhodge

#endif
