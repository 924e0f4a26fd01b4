#ifndef HILBHODGE_ORACLES_HPP
#define HILBHODGE_ORACLES_HPP

#include <stdexcept>

#include <hilbhodge/engine.hpp>
#include <hilbhodge/series.hpp>

// Brute-force reference implementations. They share no code with the
// series kernels and are only meant for cross-validation.

namespace hilbhodge::oracles
{

class TooLarge : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t max_enumerated_dimension = 12;

/// Bigraded dimensions of Sym^n(V) counted from an explicit basis:
/// multisets of even basis vectors times subsets of odd ones, n in total.
BigradedDims super_sym_multiset(const BigradedDims &v, unsigned n);

/// Schoolbook product over the flat term lists.
TriSeries naive_mul(const TriSeries &a, const TriSeries &b);

} // namespace hilbhodge::oracles

#endif
