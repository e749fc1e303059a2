#pragma once

#include "asmstat/exact/rational.hpp"

#include <algorithm>
#include <vector>

namespace asmstat::exact {

/// Stirling number of the second kind from S(m,k) = k S(m-1,k) + S(m-1,k-1),
/// S(0,0) = 1, S(m,0) = 0 for m > 0, S(0,k) = 0 for k > 0.
inline BigInt stirling2(unsigned m, unsigned k) {
    if (k > m) {
        return 0;
    }
    // row[j] holds S(i, j) for the current i.
    std::vector<BigInt> row(k + 1);
    row[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) {
            row[j] = BigInt(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return row[k];
}

}  // namespace asmstat::exact
