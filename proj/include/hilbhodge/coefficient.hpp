#ifndef HILBHODGE_COEFFICIENT_HPP
#define HILBHODGE_COEFFICIENT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hilbhodge
{

/// Raised when an exact rational is required to be an integer but is not.
class IntegralityFailure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number. Values that are integers fitting in 64 bits are
/// kept unboxed; everything else lives in a GMP rational. The representation
/// is canonical: an integral value that fits in int64 is never boxed.
class Coefficient
{
public:
    Coefficient() = default;
    Coefficient(std::int64_t v) : m_value(v) {}
    Coefficient(int v) : m_value(static_cast<std::int64_t>(v)) {}
    explicit Coefficient(const mpq_class &q);
    explicit Coefficient(const mpz_class &z);

    static Coefficient ratio(std::int64_t num, std::int64_t den);

    bool is_zero() const;
    bool is_one() const;
    bool is_integer() const;
    // -1, 0 or 1.
    int sign() const;

    /// Integer view; throws IntegralityFailure unless the denominator is 1.
    mpz_class as_integer() const;
    /// As as_integer, additionally requiring the value to fit in int64.
    std::int64_t as_int64() const;
    std::optional<std::int64_t> try_int64() const;

    mpq_class to_mpq() const;
    std::string str() const;

    Coefficient &operator+=(const Coefficient &o);
    Coefficient &operator-=(const Coefficient &o);
    Coefficient &operator*=(const Coefficient &o);
    // Throws std::domain_error on division by zero.
    Coefficient &operator/=(const Coefficient &o);

    friend Coefficient operator+(Coefficient a, const Coefficient &b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient &b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient &b) { return a *= b; }
    friend Coefficient operator/(Coefficient a, const Coefficient &b) { return a /= b; }
    Coefficient operator-() const;

    friend bool operator==(const Coefficient &a, const Coefficient &b);

    // Adds a * b to this value.
    void add_product(const Coefficient &a, const Coefficient &b);

    bool is_small() const { return std::holds_alternative<std::int64_t>(m_value); }

private:
    void normalize();

    std::variant<std::int64_t, mpq_class> m_value{std::int64_t{0}};
};

std::ostream &operator<<(std::ostream &os, const Coefficient &c);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
Coefficient binomial(std::int64_t n, std::int64_t k);

} // namespace hilbhodge

#endif
