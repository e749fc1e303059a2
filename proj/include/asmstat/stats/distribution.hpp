#pragma once

#include "asmstat/asms/observable.hpp"
#include "asmstat/exact/rational.hpp"
#include "asmstat/stats/sharding.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace asmstat::stats {

using exact::BigInt;
using exact::Rational;

/// Exact law of E_k under the uniform measure on n x n ASMs.
class ObservableDistribution {
public:
    ObservableDistribution(std::size_t n, unsigned k) : n_(n), k_(k) {}

    std::size_t n() const { return n_; }
    unsigned k() const { return k_; }
    const BigInt& total() const { return total_; }
    const std::map<BigInt, BigInt>& frequencies() const { return freq_; }

    BigInt frequency(const BigInt& value) const {
        const auto it = freq_.find(value);
        return it == freq_.end() ? BigInt(0) : it->second;
    }

    void add(const BigInt& value, const BigInt& multiplicity = 1) {
        if (multiplicity <= 0) {
            throw std::invalid_argument("multiplicity must be positive");
        }
        freq_[value] += multiplicity;
        total_ += multiplicity;
    }

    void merge(const ObservableDistribution& other) {
        if (other.n_ != n_ || other.k_ != k_) {
            throw std::invalid_argument("merging distributions of different (n, k)");
        }
        for (const auto& [value, mult] : other.freq_) {
            freq_[value] += mult;
        }
        total_ += other.total_;
    }

    /// frequency(v) == frequency(-v) for every v.
    bool is_symmetric() const {
        for (const auto& [value, mult] : freq_) {
            if (frequency(-value) != mult) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const ObservableDistribution&, const ObservableDistribution&) = default;

private:
    std::size_t n_;
    unsigned k_;
    std::map<BigInt, BigInt> freq_;
    BigInt total_ = 0;
};

namespace detail {

// One pass over the ensemble feeding several observables at once.
class MultiDistributionAccumulator {
public:
    MultiDistributionAccumulator(std::size_t n, std::span<const unsigned> ks) {
        for (const unsigned k : ks) {
            kernels_.emplace_back(n, k);
            dists_.emplace_back(n, k);
        }
    }

    void visit(const asms::Asm& a) {
        for (std::size_t idx = 0; idx < kernels_.size(); ++idx) {
            dists_[idx].add(kernels_[idx](a));
        }
    }

    void merge(const MultiDistributionAccumulator& other) {
        for (std::size_t idx = 0; idx < dists_.size(); ++idx) {
            dists_[idx].merge(other.dists_[idx]);
        }
    }

    std::vector<ObservableDistribution> release() && { return std::move(dists_); }

private:
    std::vector<asms::ObservableKernel> kernels_;
    std::vector<ObservableDistribution> dists_;
};

}  // namespace detail

/// Laws of E_k for every k in ks, from a single enumeration pass.
inline std::vector<ObservableDistribution> distributions(std::size_t n, std::span<const unsigned> ks,
                                                         const EnsembleOptions& options = {}) {
    auto acc = accumulate_ensemble<detail::MultiDistributionAccumulator>(
        n, options, [&] { return detail::MultiDistributionAccumulator(n, ks); });
    return std::move(acc).release();
}

inline ObservableDistribution distribution(std::size_t n, unsigned k, const EnsembleOptions& options = {}) {
    const unsigned ks[] = {k};
    return std::move(distributions(n, ks, options).front());
}

/// Raw moment sum_v v^order f(v) / total.
inline Rational ensemble_moment(const ObservableDistribution& d, unsigned order) {
    if (order == 0) {
        throw std::invalid_argument("moment order must be >= 1");
    }
    if (d.total() == 0) {
        throw std::invalid_argument("empty distribution");
    }
    BigInt acc = 0;
    for (const auto& [value, mult] : d.frequencies()) {
        acc += exact::ipow(value, order) * mult;
    }
    return exact::make_rational(acc, d.total());
}

}  // namespace asmstat::stats
