#include "apnlab/apncode.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "apnlab/intmath.hpp"
#include "apnlab/parallel.hpp"

namespace apnlab {

namespace {

void check_scan(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw CeilingError("scan degree n outside [1, max_n=" + std::to_string(max_n) + "]");
}

// x^t for every x, via discrete logs of a fixed generator: one pass to build
// exp/log tables, then x^t = exp[(log x * t) mod (2^n - 1)].
std::vector<std::uint32_t> power_table(const FieldSpec& F, long long t) {
  const std::uint64_t q = F.order(), go = F.group_order();
  std::vector<std::uint32_t> expt(go), logt(q);
  std::uint32_t g = F.generator(), v = 1;
  for (std::uint64_t k = 0; k < go; ++k) {
    expt[k] = v;
    logt[v] = static_cast<std::uint32_t>(k);
    v = F.mul(v, g);
  }
  std::vector<std::uint32_t> pow_t(q);
  pow_t[0] = 0;
  const std::uint64_t tmod = static_cast<std::uint64_t>(t) % go;
  for (std::uint64_t x = 1; x < q; ++x)
    pow_t[x] = expt[(static_cast<std::uint64_t>(logt[x]) * tmod) % go];
  return pow_t;
}

}  // namespace

DifferentialSpectrum differential_spectrum(long long t, int n, unsigned workers,
                                           int max_n) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  check_scan(n, max_n);
  const FieldSpec& F = FieldSpec::get(n);
  const std::uint64_t q = F.order();
  const auto pow_t = power_table(F, t);

  struct Acc {
    long long max = 0;
    std::map<long long, long long> hist;
  };
  auto chunk = [&](std::size_t lo, std::size_t hi) -> Acc {
    Acc acc;
    std::vector<std::uint32_t> bucket(q);
    for (std::size_t a = std::max<std::size_t>(lo, 1); a < hi; ++a) {
      std::fill(bucket.begin(), bucket.end(), 0);
      for (std::uint64_t x = 0; x < q; ++x)
        ++bucket[pow_t[x ^ a] ^ pow_t[x]];
      for (std::uint64_t b = 0; b < q; ++b) {
        if (bucket[b] == 0) continue;
        acc.max = std::max<long long>(acc.max, bucket[b]);
        ++acc.hist[bucket[b]];
      }
    }
    return acc;
  };
  Acc total = parallel_chunks<Acc>(
      q, workers, Acc{}, chunk, [](Acc l, Acc r) {
        l.max = std::max(l.max, r.max);
        for (auto [k, v] : r.hist) l.hist[k] += v;
        return l;
      });

  DifferentialSpectrum out;
  out.t = t;
  out.n = n;
  out.max_solutions = total.max;
  out.histogram = std::move(total.hist);
  return out;
}

Weight4Result weight4_exists(long long t, int n, unsigned workers, int max_n) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  check_scan(n, max_n);
  const FieldSpec& F = FieldSpec::get(n);
  const std::uint64_t q = F.order();
  const auto pow_t = power_table(F, t);

  // For each pair sum s != 0, hash u = x^t + (x+s)^t over the dedup'd pairs
  // {x, x+s}; a repeated u yields two pair-disjoint pairs, i.e. four distinct
  // nonzero values with zero sum and zero t-power sum. Pairs through 0 are
  // excluded up front.
  struct Acc {
    bool found = false;
    std::array<std::uint32_t, 4> w{};
  };
  auto chunk = [&](std::size_t lo, std::size_t hi) -> Acc {
    Acc acc;
    std::vector<std::uint32_t> stamp(q, 0), first_x(q, 0);
    std::uint32_t version = 0;
    for (std::size_t sv = std::max<std::size_t>(lo, 1); sv < hi && !acc.found; ++sv) {
      const auto s = static_cast<std::uint32_t>(sv);
      ++version;
      for (std::uint64_t xv = 1; xv < q; ++xv) {
        const auto x = static_cast<std::uint32_t>(xv);
        const std::uint32_t y = x ^ s;
        if (y == 0 || y < x) continue;  // skip zero partner, dedup {x, y}
        const std::uint32_t u = pow_t[x] ^ pow_t[y];
        if (stamp[u] == version) {
          const std::uint32_t x0 = first_x[u];
          acc.found = true;
          acc.w = {x0, x0 ^ s, x, y};
          break;
        }
        stamp[u] = version;
        first_x[u] = x;
      }
    }
    return acc;
  };
  // Ordered reduce keeps the smallest-s witness, so results are
  // deterministic for any worker count.
  Acc total = parallel_chunks<Acc>(q, workers, Acc{}, chunk,
                                   [](Acc l, Acc r) { return l.found ? l : r; });

  Weight4Result out;
  out.exists = total.found;
  if (total.found) {
    out.witness = total.w;
    // Re-verify the witness before emitting it.
    std::uint32_t sum = 0, powsum = 0;
    for (auto v : out.witness) {
      if (v == 0) throw VerificationError("weight-4 witness contains zero");
      sum ^= v;
      powsum ^= pow_t[v];
    }
    auto w = out.witness;
    std::sort(w.begin(), w.end());
    if (sum != 0 || powsum != 0 || std::adjacent_find(w.begin(), w.end()) != w.end())
      throw VerificationError("weight-4 witness failed re-verification");
  }
  return out;
}

bool cross_check(long long t, int n, const CurveFamily& fam, unsigned workers,
                 int max_n) {
  const bool apn = is_apn(t, n, workers, max_n);
  const bool w4 = weight4_exists(t, n, workers, max_n).exists;
  const long long pts = count_points(fam, n, /*distinct_only=*/true, workers, max_n);
  if (apn == w4 || apn == (pts > 0))
    throw VerificationError("oracle disagreement at t=" + std::to_string(t) +
                            ", n=" + std::to_string(n) + ": apn=" +
                            std::to_string(apn) + " weight4=" + std::to_string(w4) +
                            " points=" + std::to_string(pts));
  return apn;
}

bool cross_check(long long t, int n, unsigned workers, int max_n) {
  return cross_check(t, n, build_curves(t), workers, max_n);
}

ExponentClass classify_exponent(long long t, int* param_out) {
  for (int i = 1; (1LL << i) + 1 <= t; ++i) {
    if ((1LL << i) + 1 == t) {
      if (param_out) *param_out = i;
      return ExponentClass::Gold;
    }
  }
  for (int i = 2; (1LL << (2 * i)) - (1LL << i) + 1 <= t; ++i) {
    if ((1LL << (2 * i)) - (1LL << i) + 1 == t) {
      if (param_out) *param_out = i;
      return ExponentClass::KasamiWelch;
    }
  }
  if (param_out) *param_out = 0;
  return ExponentClass::Neither;
}

ExceptionalVerdict exceptional_scan(long long t, int n_lo, int n_hi,
                                    unsigned workers, int max_n) {
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("bad n window");
  ExceptionalVerdict v;
  v.t = t;
  v.cls = classify_exponent(t, &v.param_i);
  v.window_lo = n_lo;
  v.window_hi = n_hi;
  CurveFamily fam = build_curves(t);
  for (int n = n_lo; n <= n_hi; ++n)
    if (cross_check(t, n, fam, workers, max_n)) v.apn_n.push_back(n);
  if (v.cls != ExponentClass::Neither) {
    std::vector<int> expect;
    for (int n = n_lo; n <= n_hi; ++n)
      if (std::gcd(v.param_i, n) == 1) expect.push_back(n);
    v.gcd_law = (expect == v.apn_n);
  }
  return v;
}

std::vector<long long> gold_kasami_sequence(long long limit) {
  if (limit < 3) throw std::invalid_argument("limit must be >= 3");
  std::vector<long long> out;
  for (int i = 1; (1LL << i) + 1 <= limit; ++i) out.push_back((1LL << i) + 1);
  for (int i = 2; (1LL << (2 * i)) - (1LL << i) + 1 <= limit; ++i)
    out.push_back((1LL << (2 * i)) - (1LL << i) + 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace apnlab
