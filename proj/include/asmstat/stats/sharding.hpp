#pragma once

#include "asmstat/asms/enumerate.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace asmstat::stats {

struct EnsembleOptions {
    asms::EnumerationOptions enumeration;
    /// Worker threads; the enumeration is split by the top triangle entry.
    unsigned threads = 1;
};

/// Folds every ASM of size n into an accumulator. With several threads each
/// top-entry shard gets its own accumulator and shards are merged in
/// ascending order, so the result does not depend on scheduling.
///
/// Accumulator needs visit(const Asm&) and merge(const Accumulator&).
template <class Accumulator, class Make>
Accumulator accumulate_ensemble(std::size_t n, const EnsembleOptions& options, Make make) {
    if (options.threads <= 1 || n <= 1 || options.enumeration.top_value) {
        Accumulator acc = make();
        asms::for_each_asm(n, [&](const asms::Asm& a) { acc.visit(a); }, options.enumeration);
        return acc;
    }
    if (n > options.enumeration.cap) {
        throw asms::EnumerationCapError(n, options.enumeration.cap);
    }
    std::vector<Accumulator> shards;
    shards.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        shards.push_back(make());
    }
    const unsigned workers = std::min<unsigned>(options.threads, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t s = w; s < n; s += workers) {
                    asms::EnumerationOptions shard = options.enumeration;
                    shard.top_value = static_cast<int>(s) + 1;
                    asms::for_each_asm(n, [&](const asms::Asm& a) { shards[s].visit(a); }, shard);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    Accumulator out = std::move(shards.front());
    for (std::size_t s = 1; s < n; ++s) {
        out.merge(shards[s]);
    }
    return out;
}

}  // namespace asmstat::stats
