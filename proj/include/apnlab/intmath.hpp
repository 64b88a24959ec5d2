#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace apnlab {

using int128 = __int128;

// q = 2^e as 64-bit; callers keep e < 63.
inline std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

// t = 2^i * odd; returns i and writes the odd part.
inline int split_two_adic(long long v, long long& odd) {
  int i = 0;
  while (v % 2 == 0) { v /= 2; ++i; }
  odd = v;
  return i;
}

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod_u64(r, a, m);
    a = mul_mod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Multiplicative order of 2 modulo odd m >= 3.
inline int order_of_two_mod(long long m) {
  int k = 1;
  std::uint64_t v = 2 % m;
  while (v != 1) {
    v = (v * 2) % static_cast<std::uint64_t>(m);
    ++k;
  }
  return k;
}

// Trial-division factorization; fine for the 64-bit values this project sees.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; p += (p == 2) ? 1 : 2) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

inline std::vector<std::uint64_t> all_divisors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d != v / d) out.push_back(v / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string_i128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace apnlab
