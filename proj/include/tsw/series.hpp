#ifndef TSW_SERIES_HPP
#define TSW_SERIES_HPP

#include <deque>
#include <functional>
#include <shared_mutex>
#include <vector>

#include "tsw/scalar.hpp"

namespace tsw
{

// Which expansion of a rational function phi(z) a series represents:
// at_infinity in powers z^{-k}, at_zero in powers z^k.
enum class Expansion { at_infinity, at_zero };

// Lazily computed, memoized coefficient stream c_0, c_1, ...
//
// coeff() may be called concurrently; each index is computed at most once
// under the writer lock and the same value is returned forever after.
class SeriesTail
{
public:
    using Generator = std::function<Scalar(int)>;

    SeriesTail(Expansion direction, Generator gen) : direction_(direction), gen_(std::move(gen)) {}

    SeriesTail(const SeriesTail &) = delete;
    SeriesTail &operator=(const SeriesTail &) = delete;

    Expansion direction() const { return direction_; }
    Scalar coeff(int k) const;
    std::vector<Scalar> head(int count) const;

private:
    Expansion direction_;
    Generator gen_;
    mutable std::shared_mutex mutex_;
    mutable std::deque<Scalar> cache_;
};

// psi_r(z) = (q^r - q^{-r} z) / (1 - z).
// The returned stream is shared process-wide and lives forever.
const SeriesTail &psi_series(int r, Expansion direction);

// First `count` expansion coefficients of psi_r: at_infinity gives the
// coefficients of z^{-k}, at_zero those of z^k.
std::vector<Scalar> psi_coeffs(int r, Expansion direction, int count);

} // namespace tsw

#endif
