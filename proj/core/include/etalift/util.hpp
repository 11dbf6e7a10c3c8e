#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace etalift {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

// Inverse of a modulo m; throws std::domain_error unless gcd(a, m) = 1.
uint64_t invmod(uint64_t a, uint64_t m);

long long gcdll(long long a, long long b);

// (prime, exponent) pairs by trial division; fine for the word-sized inputs
// this project deals in.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

bool is_squarefree(uint64_t n);

std::vector<uint32_t> primes_below(uint32_t bound);

// Worker count: ETALIFT_THREADS if set and positive, else 1.  Transform
// kernels are the only consumers; results never depend on the value.
int thread_budget();

// Runs fn(begin, end) over a partition of [0, n) on thread_budget() threads.
// fn must only write to disjoint state per range.
void parallel_ranges(int64_t n, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace etalift
