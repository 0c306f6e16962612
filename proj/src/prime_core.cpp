#include "zrl/prime_core.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "zrl/errors.hpp"
#include "zrl/numeric.hpp"

namespace zrl {

namespace {

std::atomic<std::uint64_t> g_sieve_limit{1'000'000'000ull};

// 2^20 odd entries per segment, i.e. 2^21 integers of span.
constexpr std::uint64_t kSegmentSpan = 1ull << 21;

std::uint64_t isqrt_u64(std::uint64_t n) { return iroot(n, 2); }

// Simple sieve for the base primes, ascending.
std::vector<std::uint32_t> base_primes(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

// hi is exclusive, so values up to sieve_limit() itself stay reachable.
void check_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo >= hi) throw std::out_of_range("sieve range is empty or inverted");
  if (hi - 1 > sieve_limit())
    throw std::out_of_range("sieve range reaches " + std::to_string(hi - 1) +
                            ", beyond configured limit " + std::to_string(sieve_limit()));
}

// Sieve of the odds in [a, b) into a scratch bitmap (bit j <=> a + 2j, a odd),
// then hand each prime to fn. Evens never enter; the caller handles 2.
template <typename F>
void sieve_odd_chunk(std::uint64_t a, std::uint64_t b,
                     const std::vector<std::uint32_t>& bases,
                     std::vector<std::uint64_t>& scratch, F&& fn) {
  std::uint64_t n_odd = (b - a + 1) / 2;
  std::uint64_t words = (n_odd + 63) / 64;
  scratch.assign(words, ~0ull);
  for (std::uint32_t p : bases) {
    if (p == 2) continue;
    std::uint64_t p2 = std::uint64_t(p) * p;
    if (p2 >= b) break;
    std::uint64_t m = std::max(p2, ((a + p - 1) / p) * p);
    if ((m & 1) == 0) m += p;
    for (; m < b; m += 2ull * p) {
      std::uint64_t j = (m - a) / 2;
      scratch[j >> 6] &= ~(1ull << (j & 63));
    }
  }
  if (a == 1) scratch[0] &= ~1ull;  // 1 is not prime
  for (std::uint64_t w = 0; w < words; ++w) {
    std::uint64_t word = scratch[w];
    while (word) {
      unsigned bit = std::countr_zero(word);
      word &= word - 1;
      std::uint64_t n = a + 2 * (w * 64 + bit);
      if (n >= b) return;
      fn(n);
    }
  }
}

}  // namespace

std::uint64_t sieve_limit() { return g_sieve_limit.load(); }
void set_sieve_limit(std::uint64_t limit) { g_sieve_limit.store(limit); }

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn) {
  check_range(lo, hi);
  if (lo <= 2 && hi > 2) fn(2);
  std::uint64_t start = std::max<std::uint64_t>(lo, 3);
  if (start >= hi) return;
  if ((start & 1) == 0) ++start;
  auto bases = base_primes(static_cast<std::uint32_t>(isqrt_u64(hi - 1)));
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t a = start; a < hi; ) {
    std::uint64_t b = std::min(hi, a + kSegmentSpan);
    sieve_odd_chunk(a, b, bases, scratch, fn);
    a = b;
  }
}

PrimeTable sieve_segment(std::uint64_t lo, std::uint64_t hi) {
  if (hi > sieve_limit())
    throw std::out_of_range("segment end " + std::to_string(hi) +
                            " exceeds configured limit " + std::to_string(sieve_limit()));
  check_range(lo, hi);
  PrimeTable t;
  t.lo = lo;
  t.hi = hi;
  t.bits.assign((hi - lo + 63) / 64, 0);
  std::uint64_t count = 0;
  for_each_prime(lo, hi, [&](std::uint64_t p) {
    std::uint64_t i = p - lo;
    t.bits[i >> 6] |= 1ull << (i & 63);
    ++count;
  });
  t.count = count;
  return t;
}

std::int64_t prime_pi(double x) {
  if (!(x >= 0)) throw std::domain_error("prime_pi: x must be >= 0");
  if (x < 2) return 0;
  auto n = static_cast<std::uint64_t>(std::floor(x));
  std::int64_t count = 0;
  for_each_prime(2, n + 1, [&](std::uint64_t) { ++count; });
  return count;
}

namespace {

// Contribution of proper prime powers p^k <= n, k >= 2. Only primes up to
// sqrt(n) matter. Separate accumulator so the batch path can reuse it
// verbatim and stay bit-identical with the single-point path.
double power_correction(std::uint64_t n) {
  if (n < 4) return 0.0;
  NeumaierSum s;
  std::uint64_t root = isqrt_u64(n);
  for_each_prime(2, root + 1, [&](std::uint64_t p) {
    double lp = std::log(static_cast<double>(p));
    unsigned __int128 q = static_cast<unsigned __int128>(p) * p;
    while (q <= n) {
      s.add(lp);
      q *= p;
    }
  });
  return s.value();
}

}  // namespace

ChebyshevValue chebyshev_values(double x) {
  if (!(x >= 0)) throw std::domain_error("chebyshev_values: x must be >= 0");
  ChebyshevValue v;
  v.x = x;
  if (x < 2) return v;
  auto n = static_cast<std::uint64_t>(std::floor(x));
  NeumaierSum theta;
  std::int64_t pi = 0;
  for_each_prime(2, n + 1, [&](std::uint64_t p) {
    theta.add(std::log(static_cast<double>(p)));
    ++pi;
  });
  v.theta = theta.value();
  v.psi = v.theta + power_correction(n);
  v.pi_count = pi;
  return v;
}

std::vector<ChebyshevValue> chebyshev_batch(const std::vector<double>& xs) {
  if (xs.empty()) return {};
  if (!std::is_sorted(xs.begin(), xs.end()))
    throw std::invalid_argument("chebyshev_batch: abscissas must be ascending");
  if (!(xs.front() >= 0)) throw std::domain_error("chebyshev_batch: x must be >= 0");

  std::vector<ChebyshevValue> out(xs.size());
  std::size_t i = 0;
  while (i < xs.size() && xs[i] < 2) {
    out[i].x = xs[i];
    ++i;
  }
  if (i == xs.size()) return out;

  NeumaierSum theta;
  std::int64_t pi = 0;
  auto n_max = static_cast<std::uint64_t>(std::floor(xs.back()));
  auto flush_up_to = [&](std::uint64_t next_prime) {
    // emit every abscissa whose floor falls before the next prime
    while (i < xs.size() && static_cast<std::uint64_t>(std::floor(xs[i])) < next_prime) {
      out[i].x = xs[i];
      out[i].theta = theta.value();
      out[i].psi = out[i].theta + power_correction(static_cast<std::uint64_t>(std::floor(xs[i])));
      out[i].pi_count = pi;
      ++i;
    }
  };
  for_each_prime(2, n_max + 1, [&](std::uint64_t p) {
    flush_up_to(p);
    theta.add(std::log(static_cast<double>(p)));
    ++pi;
  });
  flush_up_to(n_max + 1);
  return out;
}

double psi_via_theta_roots(double x) {
  if (!(x >= 0)) throw std::domain_error("psi_via_theta_roots: x must be >= 0");
  if (x < 2) return 0.0;
  auto n = static_cast<std::uint64_t>(std::floor(x));
  double acc = 0.0;
  // 2^k <= n bounds k; roots shrink fast so the k >= 2 passes are tiny.
  for (unsigned k = 1; (1ull << k) <= n + 0ull && k < 64; ++k) {
    std::uint64_t r = iroot(n, k);
    if (r < 2) break;
    NeumaierSum theta;
    for_each_prime(2, r + 1, [&](std::uint64_t p) {
      theta.add(std::log(static_cast<double>(p)));
    });
    acc += theta.value();
  }
  return acc;
}

IntervalCensus interval_census(double x, double y) {
  if (!(x >= 0) || !(y >= 0))
    throw std::domain_error("interval_census: need x >= 0 and y >= 0");
  IntervalCensus c;
  c.x = x;
  c.y = y;
  if (y == 0) return c;
  // primes p with x < p <= x + y
  auto lo = static_cast<std::uint64_t>(std::floor(x)) + 1;
  auto hi = static_cast<std::uint64_t>(std::floor(x + y));
  if (hi < lo || hi < 2) return c;
  lo = std::max<std::uint64_t>(lo, 2);
  NeumaierSum s;
  std::int64_t count = 0;
  for_each_prime(lo, hi + 1, [&](std::uint64_t p) {
    s.add(std::log(static_cast<double>(p)));
    ++count;
  });
  c.prime_count = count;
  c.log_sum = count ? s.value() : 0.0;
  return c;
}

PiTable::PiTable(std::uint64_t limit) : limit_(limit) {
  if (limit > sieve_limit())
    throw std::out_of_range("PiTable limit exceeds configured sieve limit");
  cum_.assign(limit + 1, 0);
  std::vector<std::uint8_t> flag(limit + 1, 0);
  if (limit >= 2)
    for_each_prime(2, limit + 1, [&](std::uint64_t p) { flag[p] = 1; });
  std::uint32_t run = 0;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    run += flag[n];
    cum_[n] = run;
  }
}

std::int64_t PiTable::count_le(double x) const {
  if (!(x >= 0)) throw std::domain_error("PiTable: x must be >= 0");
  if (x < 2) return 0;
  auto n = static_cast<std::uint64_t>(std::floor(x));
  if (n > limit_) throw std::out_of_range("PiTable: query beyond table limit");
  return cum_[n];
}

void save_prime_table(const PrimeTable& t, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CacheError("cannot open cache file for writing: " + path, 0);
  f.write("ZRL1", 4);
  auto put_u64 = [&](std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    f.write(reinterpret_cast<const char*>(b), 8);
  };
  put_u64(t.lo);
  put_u64(t.hi);
  std::uint64_t first_odd = (t.lo & 1) ? t.lo : t.lo + 1;
  std::uint64_t n_odd = first_odd < t.hi ? (t.hi - first_odd + 1) / 2 : 0;
  std::vector<unsigned char> packed((n_odd + 7) / 8, 0);
  for (std::uint64_t j = 0; j < n_odd; ++j)
    if (t.is_prime(first_odd + 2 * j)) packed[j >> 3] |= static_cast<unsigned char>(1u << (j & 7));
  f.write(reinterpret_cast<const char*>(packed.data()),
          static_cast<std::streamsize>(packed.size()));
  if (!f) throw CacheError("short write to cache file: " + path, 0);
}

PrimeTable load_prime_table(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheError("cannot open cache file: " + path, 0);
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, "ZRL1", 4) != 0)
    throw CacheError("bad magic in prime cache: " + path, 0);
  auto get_u64 = [&]() {
    unsigned char b[8];
    f.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
    return v;
  };
  std::uint64_t lo = get_u64();
  std::uint64_t hi = get_u64();
  if (!f || lo >= hi) throw CacheError("bad range in prime cache: " + path, 0);
  std::uint64_t first_odd = (lo & 1) ? lo : lo + 1;
  std::uint64_t n_odd = first_odd < hi ? (hi - first_odd + 1) / 2 : 0;
  std::vector<unsigned char> packed((n_odd + 7) / 8);
  f.read(reinterpret_cast<char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
  if (!f) throw CacheError("truncated prime cache: " + path, 0);

  PrimeTable t;
  t.lo = lo;
  t.hi = hi;
  t.bits.assign((hi - lo + 63) / 64, 0);
  std::uint64_t count = 0;
  auto set = [&](std::uint64_t n) {
    std::uint64_t i = n - lo;
    t.bits[i >> 6] |= 1ull << (i & 63);
    ++count;
  };
  if (lo <= 2 && hi > 2) set(2);  // the one even prime is not in the odd bitmap
  for (std::uint64_t j = 0; j < n_odd; ++j)
    if (packed[j >> 3] & (1u << (j & 7))) set(first_odd + 2 * j);
  t.count = count;
  return t;
}

}  // namespace zrl
