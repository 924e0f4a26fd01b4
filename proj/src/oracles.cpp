#include <hilbhodge/oracles.hpp>

#include <map>

namespace hilbhodge::oracles
{

namespace
{

struct BasisVector {
    int p;
    int q;
    bool odd;
};

void choose(const std::vector<BasisVector> &basis, std::size_t i, unsigned left, int p, int q, BigradedDims &out)
{
    if (i == basis.size()) {
        if (left == 0) {
            ++out[{p, q}];
        }
        return;
    }
    const auto &b = basis[i];
    unsigned max_count = b.odd ? std::min(left, 1u) : left;
    for (unsigned c = 0; c <= max_count; ++c) {
        choose(basis, i + 1, left - c, p + static_cast<int>(c) * b.p, q + static_cast<int>(c) * b.q, out);
    }
}

} // namespace

BigradedDims super_sym_multiset(const BigradedDims &v, unsigned n)
{
    std::vector<BasisVector> basis;
    std::int64_t total = 0;
    for (const auto &[pq, dim] : v) {
        if (dim < 0) {
            throw std::invalid_argument("super_sym_multiset: negative dimension");
        }
        total += dim;
        if (total > max_enumerated_dimension) {
            throw TooLarge("super_sym_multiset: total dimension exceeds " + std::to_string(max_enumerated_dimension));
        }
        for (std::int64_t i = 0; i < dim; ++i) {
            basis.push_back({pq.first, pq.second, (pq.first + pq.second) % 2 != 0});
        }
    }
    BigradedDims out;
    choose(basis, 0, n, 0, 0, out);
    return out;
}

TriSeries naive_mul(const TriSeries &a, const TriSeries &b)
{
    const unsigned trunc = std::min(a.trunc(), b.trunc());
    std::map<Monomial, Coefficient> acc;
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            Monomial m{ma.x + mb.x, ma.y + mb.y, ma.t + mb.t};
            if (m.t > trunc) {
                continue;
            }
            acc[m] += ca * cb;
        }
    }
    std::vector<std::pair<Monomial, Coefficient>> terms;
    for (const auto &[m, c] : acc) {
        if (!c.is_zero()) {
            terms.emplace_back(m, c);
        }
    }
    return TriSeries::from_terms(terms, trunc);
}

} // namespace hilbhodge::oracles
