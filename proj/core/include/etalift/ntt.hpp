#pragma once

#include <cstdint>
#include <vector>

namespace etalift::ntt {

// Convolution-friendly primes p = c * 2^k + 1 below 2^31 with a primitive
// root, so Shoup butterflies can run in 32-bit lanes.
struct Prime {
  uint32_t p;
  uint32_t g;
  int max_log2;  // largest power-of-two transform length
};

inline constexpr Prime kPrimes[] = {
    {998244353u, 3u, 23},    // 119 * 2^23 + 1
    {469762049u, 3u, 26},    // 7 * 2^26 + 1
    {2013265921u, 31u, 27},  // 15 * 2^27 + 1
};

// In-place power-of-two NTT over Z/p.  a.size() must be a power of two not
// exceeding 2^max_log2 for the prime.
void transform(std::vector<uint32_t>& a, const Prime& pr, bool inverse);

// First out_len coefficients of (a * b) mod `modulus`, where a and b hold
// residues in [0, modulus).  Exact because the integer convolution values are
// bounded by (modulus-1)^2 * min(a.size, b.size), which must fit inside the
// product of the one or two primes chosen; throws when no prime pair covers
// the bound or the transform length.
std::vector<uint64_t> convolve_mod(const std::vector<uint64_t>& a,
                                   const std::vector<uint64_t>& b,
                                   uint64_t modulus, size_t out_len);

}  // namespace etalift::ntt
