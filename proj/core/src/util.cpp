#include "etalift/util.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace etalift {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = (uint64_t)((unsigned __int128)r * a % m);
    a = (uint64_t)((unsigned __int128)a * a % m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  long long t = 0, nt = 1;
  long long r = (long long)m, nr = (long long)(a % m);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("invmod: " + std::to_string(a) +
                                      " not invertible mod " + std::to_string(m));
  if (t < 0) t += (long long)m;
  return (uint64_t)t;
}

long long gcdll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { long long t = a % b; a = b; b = t; }
  return a;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(uint64_t n) {
  if (n == 0) return false;
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

std::vector<uint32_t> primes_below(uint32_t bound) {
  std::vector<uint32_t> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (uint32_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (uint64_t j = (uint64_t)i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

int thread_budget() {
  const char* env = std::getenv("ETALIFT_THREADS");
  if (env) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void parallel_ranges(int64_t n, const std::function<void(int64_t, int64_t)>& fn) {
  int workers = thread_budget();
  if (workers <= 1 || n < 1024) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int64_t lo = w * chunk, hi = std::min<int64_t>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace etalift
