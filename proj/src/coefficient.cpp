#include <hilbhodge/coefficient.hpp>

#include <limits>
#include <stdexcept>

namespace hilbhodge
{

namespace
{

mpz_class to_mpz(std::int64_t v)
{
    static_assert(sizeof(long) == sizeof(std::int64_t), "expects LP64");
    return mpz_class(static_cast<long>(v));
}

mpq_class to_mpq_small(std::int64_t v)
{
    return mpq_class(to_mpz(v));
}

} // namespace

Coefficient::Coefficient(const mpq_class &q) : m_value(q)
{
    std::get<mpq_class>(m_value).canonicalize();
    normalize();
}

Coefficient::Coefficient(const mpz_class &z) : m_value(mpq_class(z))
{
    normalize();
}

Coefficient Coefficient::ratio(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::domain_error("Coefficient::ratio: zero denominator");
    }
    return Coefficient(mpq_class(to_mpz(num), to_mpz(den)));
}

void Coefficient::normalize()
{
    auto *q = std::get_if<mpq_class>(&m_value);
    if (q == nullptr) {
        return;
    }
    if (q->get_den() == 1 && q->get_num().fits_slong_p()) {
        m_value = static_cast<std::int64_t>(q->get_num().get_si());
    }
}

bool Coefficient::is_zero() const
{
    // Boxed values are never zero after normalize().
    return is_small() && std::get<std::int64_t>(m_value) == 0;
}

bool Coefficient::is_one() const
{
    return is_small() && std::get<std::int64_t>(m_value) == 1;
}

bool Coefficient::is_integer() const
{
    return is_small() || std::get<mpq_class>(m_value).get_den() == 1;
}

int Coefficient::sign() const
{
    if (is_small()) {
        auto v = std::get<std::int64_t>(m_value);
        return (v > 0) - (v < 0);
    }
    return sgn(std::get<mpq_class>(m_value));
}

mpz_class Coefficient::as_integer() const
{
    if (is_small()) {
        return to_mpz(std::get<std::int64_t>(m_value));
    }
    const auto &q = std::get<mpq_class>(m_value);
    if (q.get_den() != 1) {
        throw IntegralityFailure("coefficient " + q.get_str() + " is not an integer");
    }
    return q.get_num();
}

std::int64_t Coefficient::as_int64() const
{
    if (is_small()) {
        return std::get<std::int64_t>(m_value);
    }
    // A boxed integer is by construction outside the int64 range.
    const auto &q = std::get<mpq_class>(m_value);
    if (q.get_den() != 1) {
        throw IntegralityFailure("coefficient " + q.get_str() + " is not an integer");
    }
    throw std::overflow_error("coefficient " + q.get_str() + " does not fit in 64 bits");
}

std::optional<std::int64_t> Coefficient::try_int64() const
{
    if (is_small()) {
        return std::get<std::int64_t>(m_value);
    }
    return std::nullopt;
}

mpq_class Coefficient::to_mpq() const
{
    if (is_small()) {
        return to_mpq_small(std::get<std::int64_t>(m_value));
    }
    return std::get<mpq_class>(m_value);
}

std::string Coefficient::str() const
{
    if (is_small()) {
        return std::to_string(std::get<std::int64_t>(m_value));
    }
    return std::get<mpq_class>(m_value).get_str();
}

Coefficient &Coefficient::operator+=(const Coefficient &o)
{
    if (is_small() && o.is_small()) {
        std::int64_t r;
        if (!__builtin_add_overflow(std::get<std::int64_t>(m_value), std::get<std::int64_t>(o.m_value), &r)) {
            m_value = r;
            return *this;
        }
    }
    m_value = mpq_class(to_mpq() + o.to_mpq());
    normalize();
    return *this;
}

Coefficient &Coefficient::operator-=(const Coefficient &o)
{
    if (is_small() && o.is_small()) {
        std::int64_t r;
        if (!__builtin_sub_overflow(std::get<std::int64_t>(m_value), std::get<std::int64_t>(o.m_value), &r)) {
            m_value = r;
            return *this;
        }
    }
    m_value = mpq_class(to_mpq() - o.to_mpq());
    normalize();
    return *this;
}

Coefficient &Coefficient::operator*=(const Coefficient &o)
{
    if (is_small() && o.is_small()) {
        std::int64_t r;
        if (!__builtin_mul_overflow(std::get<std::int64_t>(m_value), std::get<std::int64_t>(o.m_value), &r)) {
            m_value = r;
            return *this;
        }
    }
    m_value = mpq_class(to_mpq() * o.to_mpq());
    normalize();
    return *this;
}

Coefficient &Coefficient::operator/=(const Coefficient &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Coefficient: division by zero");
    }
    if (is_small() && o.is_small()) {
        auto a = std::get<std::int64_t>(m_value);
        auto b = std::get<std::int64_t>(o.m_value);
        if (b != -1 && a % b == 0) {
            m_value = a / b;
            return *this;
        }
    }
    m_value = mpq_class(to_mpq() / o.to_mpq());
    normalize();
    return *this;
}

Coefficient Coefficient::operator-() const
{
    Coefficient r;
    r -= *this;
    return r;
}

bool operator==(const Coefficient &a, const Coefficient &b)
{
    if (a.is_small() != b.is_small()) {
        return false;
    }
    if (a.is_small()) {
        return std::get<std::int64_t>(a.m_value) == std::get<std::int64_t>(b.m_value);
    }
    return std::get<mpq_class>(a.m_value) == std::get<mpq_class>(b.m_value);
}

void Coefficient::add_product(const Coefficient &a, const Coefficient &b)
{
    if (a.is_small() && b.is_small() && is_small()) {
        std::int64_t prod, sum;
        if (!__builtin_mul_overflow(std::get<std::int64_t>(a.m_value), std::get<std::int64_t>(b.m_value), &prod)
            && !__builtin_add_overflow(std::get<std::int64_t>(m_value), prod, &sum)) {
            m_value = sum;
            return;
        }
    }
    *this += a * b;
}

std::ostream &operator<<(std::ostream &os, const Coefficient &c)
{
    return os << c.str();
}

Coefficient binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return Coefficient{};
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Coefficient(r);
}

} // namespace hilbhodge
