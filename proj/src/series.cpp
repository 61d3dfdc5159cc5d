#include "tsw/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace tsw
{

Scalar SeriesTail::coeff(int k) const
{
    if (k < 0) {
        throw std::out_of_range("SeriesTail::coeff: negative index");
    }
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::size_t>(k) < cache_.size()) {
            return cache_[static_cast<std::size_t>(k)];
        }
    }
    std::unique_lock lock(mutex_);
    while (cache_.size() <= static_cast<std::size_t>(k)) {
        cache_.push_back(gen_(static_cast<int>(cache_.size())));
    }
    return cache_[static_cast<std::size_t>(k)];
}

std::vector<Scalar> SeriesTail::head(int count) const
{
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
    for (int k = 0; k < count; ++k) {
        out.push_back(coeff(k));
    }
    return out;
}

const SeriesTail &psi_series(int r, Expansion direction)
{
    static std::mutex registry_mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<SeriesTail>> registry;

    std::lock_guard lock(registry_mutex);
    auto key = std::make_pair(r, direction == Expansion::at_infinity ? 1 : 0);
    auto it = registry.find(key);
    if (it == registry.end()) {
        // At zero: q^r + (q^r - q^{-r})(z + z^2 + ...).
        // At infinity, in w = 1/z: (q^{-r} - q^r w)/(1 - w), i.e. r -> -r.
        int lead = direction == Expansion::at_zero ? r : -r;
        SeriesTail::Generator gen = [lead](int k) {
            if (k == 0) {
                return Scalar::q_pow(lead);
            }
            return Scalar::q_pow(lead) - Scalar::q_pow(-lead);
        };
        it = registry.emplace(key, std::make_unique<SeriesTail>(direction, std::move(gen))).first;
    }
    return *it->second;
}

std::vector<Scalar> psi_coeffs(int r, Expansion direction, int count)
{
    if (count < 0) {
        throw std::invalid_argument("psi_coeffs: count must be non-negative");
    }
    return psi_series(r, direction).head(count);
}

} // namespace tsw
