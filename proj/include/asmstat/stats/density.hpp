#pragma once

#include "asmstat/asms/asm.hpp"
#include "asmstat/exact/rational.hpp"
#include "asmstat/stats/sharding.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace asmstat::stats {

using exact::BigInt;
using exact::Rational;

/// rho_n(i,j) = E[A_ij] over the uniform ensemble; 0-based, row-major.
class DensityMatrix {
public:
    DensityMatrix(std::size_t n, std::vector<Rational> rho) : n_(n), rho_(std::move(rho)) {
        if (rho_.size() != n * n) {
            throw std::invalid_argument("density matrix needs n*n entries");
        }
    }

    std::size_t size() const { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rho_[i * n_ + j]; }
    const std::vector<Rational>& entries() const { return rho_; }

    Rational row_sum(std::size_t i) const {
        Rational s = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            s += (*this)(i, j);
        }
        return s;
    }

    Rational column_sum(std::size_t j) const {
        Rational s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            s += (*this)(i, j);
        }
        return s;
    }

    bool is_bistochastic() const {
        for (std::size_t t = 0; t < n_; ++t) {
            if (row_sum(t) != 1 || column_sum(t) != 1) {
                return false;
            }
        }
        return true;
    }

    /// Invariance under transposition and under the half-turn (i,j) -> (n-1-i, n-1-j).
    bool has_ensemble_symmetries() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if ((*this)(i, j) != (*this)(j, i) || (*this)(i, j) != (*this)(n_ - 1 - i, n_ - 1 - j)) {
                    return false;
                }
            }
        }
        return true;
    }

    /// sum_{i,j} (i-j)^k rho(i,j), i.e. E[E_k] by linearity.
    Rational expected_observable(unsigned k) const {
        Rational acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const long long diff = static_cast<long long>(i) - static_cast<long long>(j);
                acc += Rational(exact::ipow(BigInt(diff), k)) * (*this)(i, j);
            }
        }
        return acc;
    }

    friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Rational> rho_;
};

/// Entry-wise sums over a slice of the ensemble.
class DensityAccumulator {
public:
    explicit DensityAccumulator(std::size_t n) : n_(n), sums_(n * n, 0) {}

    void visit(const asms::Asm& a) {
        const auto entries = a.entries();
        for (std::size_t idx = 0; idx < sums_.size(); ++idx) {
            sums_[idx] += entries[idx];
        }
        ++count_;
    }

    void merge(const DensityAccumulator& other) {
        for (std::size_t idx = 0; idx < sums_.size(); ++idx) {
            sums_[idx] += other.sums_[idx];
        }
        count_ += other.count_;
    }

    std::uint64_t count() const { return count_; }

    DensityMatrix finalize() const {
        if (count_ == 0) {
            throw std::logic_error("density of an empty ensemble");
        }
        std::vector<Rational> rho;
        rho.reserve(sums_.size());
        for (const auto s : sums_) {
            rho.push_back(exact::make_rational(BigInt(s), BigInt(count_)));
        }
        return DensityMatrix(n_, std::move(rho));
    }

private:
    std::size_t n_;
    // Counts stay far below 2^63 for any enumerable n.
    std::vector<std::int64_t> sums_;
    std::uint64_t count_ = 0;
};

inline DensityMatrix mean_density(std::size_t n, const EnsembleOptions& options = {}) {
    return accumulate_ensemble<DensityAccumulator>(n, options, [n] { return DensityAccumulator(n); }).finalize();
}

/// max_{i,j} |rho(i,j) - 1/n|.
inline Rational density_deviation(const DensityMatrix& rho) {
    const Rational uniform = exact::make_rational(1, rho.size());
    Rational worst = 0;
    for (const auto& v : rho.entries()) {
        const Rational dev = exact::abs(v - uniform);
        if (dev > worst) {
            worst = dev;
        }
    }
    return worst;
}

inline Rational density_deviation(std::size_t n, const EnsembleOptions& options = {}) {
    return density_deviation(mean_density(n, options));
}

}  // namespace asmstat::stats
