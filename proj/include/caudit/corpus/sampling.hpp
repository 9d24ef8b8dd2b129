#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "caudit/util/rng.hpp"

namespace caudit::corpus {

// Reservoir sampling (Algorithm R) with a deterministic generator; every
// stream element ends up in the sample with equal probability.
template <typename T>
class ReservoirSampler {
public:
    ReservoirSampler(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {
        if (n == 0)
            throw std::invalid_argument("reservoir sample size must be >= 1");
        sample_.reserve(n);
    }

    void offer(T item) {
        ++seen_;
        if (sample_.size() < n_) {
            sample_.push_back(std::move(item));
            return;
        }
        std::uint64_t j = rng_.next_below(seen_);
        if (j < n_)
            sample_[static_cast<std::size_t>(j)] = std::move(item);
    }

    std::uint64_t seen() const { return seen_; }
    const std::vector<T>& sample() const { return sample_; }
    std::vector<T> take() { return std::move(sample_); }

private:
    std::size_t n_;
    util::Rng rng_;
    std::uint64_t seen_ = 0;
    std::vector<T> sample_;
};

template <typename Range>
auto reservoir_sample(Range&& docs, std::size_t n, std::uint64_t seed) {
    using T = std::decay_t<decltype(*std::begin(docs))>;
    ReservoirSampler<T> sampler(n, seed);
    for (auto&& d : docs)
        sampler.offer(d);
    return sampler.take();
}

}  // namespace caudit::corpus
