#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace unexpected {

/// binom(n, k) as a signed 64-bit integer; 0 when k < 0 or k > n (n >= 0).
/// Throws InvalidArgument on overflow.
long long binomial(long long n, long long k);

/// Advances `c` (strictly increasing indices in [0, n)) to the next k-subset in
/// lexicographic order. Returns false after the last subset.
bool next_combination(std::vector<int>& c, int n);

/// The `rank`-th k-subset of [0, n) in lexicographic order.
std::vector<int> unrank_combination(long long rank, int n, int k);

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). fn must only write to slot i of caller-owned storage.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Worker count used when callers pass 0.
unsigned default_threads();

}  // namespace unexpected
