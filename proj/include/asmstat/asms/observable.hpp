#pragma once

#include "asmstat/asms/asm.hpp"
#include "asmstat/exact/rational.hpp"

#include <cstddef>
#include <vector>

namespace asmstat::asms {

/// E_k(A) = sum_{i,j} (i-j)^k A_ij.
struct ObservableValue {
    unsigned k = 0;
    exact::BigInt value;
};

/// Evaluates E_k repeatedly for one (n, k) with precomputed kernel values
/// f_k(i,j) = (i-j)^k, indexed by i-j+n-1.
class ObservableKernel {
public:
    ObservableKernel(std::size_t n, unsigned k) : n_(n), k_(k), powers_(n == 0 ? 0 : 2 * n - 1) {
        for (std::size_t d = 0; d < powers_.size(); ++d) {
            const long long diff = static_cast<long long>(d) - static_cast<long long>(n) + 1;
            powers_[d] = exact::ipow(exact::BigInt(diff), k);
        }
    }

    std::size_t size() const { return n_; }
    unsigned k() const { return k_; }

    const exact::BigInt& weight(std::size_t i, std::size_t j) const { return powers_[i + n_ - 1 - j]; }

    exact::BigInt operator()(const Asm& a) const {
        exact::BigInt acc = 0;
        const auto entries = a.entries();
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const int v = entries[i * n_ + j];
                if (v > 0) {
                    acc += weight(i, j);
                } else if (v < 0) {
                    acc -= weight(i, j);
                }
            }
        }
        return acc;
    }

private:
    std::size_t n_;
    unsigned k_;
    std::vector<exact::BigInt> powers_;
};

inline ObservableValue observable(const Asm& a, unsigned k) {
    return {k, ObservableKernel(a.size(), k)(a)};
}

/// Crude bound |E_k| <= n * n * (n-1)^k.
inline exact::BigInt observable_bound(std::size_t n, unsigned k) {
    return exact::BigInt(n) * n * exact::ipow(exact::BigInt(n - 1), k);
}

}  // namespace asmstat::asms
