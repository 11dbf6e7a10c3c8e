#include "etalift/ntt.hpp"

#include <algorithm>
#include <stdexcept>

#include "etalift/util.hpp"

namespace etalift::ntt {

namespace {

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t r = a + b;  // p < 2^31, no overflow
  return r >= p ? r - p : r;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}

// Shoup multiplication by a constant w with wq = floor(w * 2^32 / p)
// precomputed; valid for p < 2^31.
inline uint32_t mul_shoup(uint32_t a, uint32_t w, uint32_t wq, uint32_t p) {
  uint32_t q = (uint32_t)(((uint64_t)a * wq) >> 32);
  uint32_t r = a * w - q * p;  // mod 2^32, true value < 2p
  return r >= p ? r - p : r;
}

}  // namespace

void transform(std::vector<uint32_t>& a, const Prime& pr, bool inverse) {
  const uint32_t p = pr.p;
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("ntt: length must be a power of two");
  int lg = 0;
  while ((size_t(1) << lg) < n) ++lg;
  if (lg > pr.max_log2)
    throw std::invalid_argument("ntt: length exceeds root order for prime");

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<uint32_t> w, wq;
  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t half = len >> 1;
    uint64_t e = (p - 1) / len;
    uint32_t wlen = (uint32_t)powmod(pr.g, inverse ? (p - 1 - e) : e, p);
    w.assign(half, 1);
    wq.assign(half, 0);
    for (size_t i = 1; i < half; ++i)
      w[i] = (uint32_t)((uint64_t)w[i - 1] * wlen % p);
    for (size_t i = 0; i < half; ++i)
      wq[i] = (uint32_t)(((uint64_t)w[i] << 32) / p);

    const size_t nblocks = n / len;
    auto run = [&](int64_t blo, int64_t bhi) {
      for (int64_t b = blo; b < bhi; ++b) {
        size_t base = (size_t)b * len;
        for (size_t i = 0; i < half; ++i) {
          uint32_t u = a[base + i];
          uint32_t v = mul_shoup(a[base + i + half], w[i], wq[i], p);
          a[base + i] = add_mod(u, v, p);
          a[base + i + half] = sub_mod(u, v, p);
        }
      }
    };
    if (nblocks >= 8 && n >= (size_t(1) << 18) && thread_budget() > 1)
      parallel_ranges((int64_t)nblocks, run);
    else
      run(0, (int64_t)nblocks);
  }

  if (inverse) {
    uint32_t ninv = (uint32_t)invmod(n % p, p);
    uint32_t nq = (uint32_t)(((uint64_t)ninv << 32) / p);
    for (auto& x : a) x = mul_shoup(x, ninv, nq, p);
  }
}

std::vector<uint64_t> convolve_mod(const std::vector<uint64_t>& a,
                                   const std::vector<uint64_t>& b,
                                   uint64_t modulus, size_t out_len) {
  if (out_len == 0 || a.empty() || b.empty()) return {};
  const size_t la = std::min(a.size(), out_len);
  const size_t lb = std::min(b.size(), out_len);
  const size_t full = la + lb - 1;
  size_t L = 1;
  int lg = 0;
  while (L < full) { L <<= 1; ++lg; }

  const unsigned __int128 bound =
      (unsigned __int128)(modulus - 1) * (modulus - 1) * std::min(la, lb);
  std::vector<const Prime*> chosen;
  unsigned __int128 cap = 1;
  for (const auto& pr : kPrimes) {
    if (lg > pr.max_log2) continue;
    chosen.push_back(&pr);
    cap *= pr.p;
    if (cap > bound) break;
  }
  if (chosen.empty() || cap <= bound)
    throw std::domain_error("convolve_mod: no prime set covers modulus^2 * length");

  const bool square = (&a == &b) && la == lb;
  std::vector<std::vector<uint32_t>> res;
  res.reserve(chosen.size());
  for (const Prime* pr : chosen) {
    std::vector<uint32_t> fa(L, 0), fb;
    for (size_t i = 0; i < la; ++i) fa[i] = (uint32_t)(a[i] % pr->p);
    transform(fa, *pr, false);
    if (square) {
      for (size_t i = 0; i < L; ++i)
        fa[i] = (uint32_t)((uint64_t)fa[i] * fa[i] % pr->p);
    } else {
      fb.assign(L, 0);
      for (size_t i = 0; i < lb; ++i) fb[i] = (uint32_t)(b[i] % pr->p);
      transform(fb, *pr, false);
      for (size_t i = 0; i < L; ++i)
        fa[i] = (uint32_t)((uint64_t)fa[i] * fb[i] % pr->p);
    }
    transform(fa, *pr, true);
    res.push_back(std::move(fa));
  }

  std::vector<uint64_t> out(out_len, 0);
  const size_t upto = std::min(out_len, full);
  if (chosen.size() == 1) {
    for (size_t k = 0; k < upto; ++k) out[k] = res[0][k] % modulus;
    return out;
  }
  // Garner reconstruction; at most three primes, product < 2^127.
  const uint64_t p1 = chosen[0]->p, p2 = chosen[1]->p;
  const uint64_t inv12 = invmod(p1 % p2, p2);
  uint64_t p3 = 0, inv123 = 0;
  if (chosen.size() == 3) {
    p3 = chosen[2]->p;
    inv123 = invmod((uint64_t)((unsigned __int128)p1 * p2 % p3), p3);
  }
  for (size_t k = 0; k < upto; ++k) {
    uint64_t r1 = res[0][k], r2 = res[1][k];
    uint64_t t2 = (uint64_t)((unsigned __int128)((r2 + p2 - r1 % p2) % p2) * inv12 % p2);
    unsigned __int128 x = (unsigned __int128)p1 * t2 + r1;
    if (chosen.size() == 3) {
      uint64_t xm = (uint64_t)(x % p3);
      uint64_t r3 = res[2][k];
      uint64_t t3 = (uint64_t)((unsigned __int128)((r3 + p3 - xm) % p3) * inv123 % p3);
      x += (unsigned __int128)p1 * p2 * t3;
    }
    out[k] = (uint64_t)(x % modulus);
  }
  return out;
}

}  // namespace etalift::ntt
