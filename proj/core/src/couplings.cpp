// Copyright 2026 The syklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "syklab/couplings.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <string>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw ParameterError("count overflows 64 bits");
  }
  return a * b;
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

// Majorana pairs (a, b), a < b, that a gauged cluster contributes.
std::vector<std::pair<int, int>> gauged_pairs(const ModelSpec& spec, int cluster) {
  std::vector<std::pair<int, int>> out;
  const int first = spec.M * cluster + 1;
  for (int a = first; a < first + spec.M; ++a) {
    for (int b = a + 1; b < first + spec.M; ++b) {
      // (a+1)/2 is the qubit site of chi_a.
      if (!spec.same_site && (a + 1) / 2 == (b + 1) / 2) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

void overlapping_recurse(const ModelSpec& spec, int start, std::vector<int>& prefix,
                         std::vector<int>& out) {
  if (static_cast<int>(prefix.size()) == 2 * spec.q_tilde) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    return;
  }
  for (int r = start; r <= spec.N; ++r) {
    for (int s = r + 1; s <= std::min(r + spec.M - 1, spec.N); ++s) {
      prefix.push_back(r);
      prefix.push_back(s);
      overlapping_recurse(spec, s + 1, prefix, out);
      prefix.resize(prefix.size() - 2);
    }
  }
}

std::uint64_t overlapping_count(const ModelSpec& spec) {
  // ways[s] = number of ways to place the remaining pairs using labels >= s.
  const int N = spec.N;
  std::vector<std::uint64_t> ways(N + 2, 1);
  for (int pair = 0; pair < spec.q_tilde; ++pair) {
    std::vector<std::uint64_t> next(N + 2, 0);
    for (int start = N; start >= 1; --start) {
      std::uint64_t total = next[start + 1];
      for (int s = start + 1; s <= std::min(start + spec.M - 1, N); ++s) {
        total += ways[s + 1];
      }
      next[start] = total;
    }
    ways = std::move(next);
  }
  return ways[1];
}

std::uint64_t family_stream(ModelFamily f) { return static_cast<std::uint64_t>(f) + 1; }

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    // out * (n-k+i) is divisible by i; cancel the common factor first.
    const std::uint64_t g = std::gcd(out, static_cast<std::uint64_t>(i));
    out = checked_mul(out / g, static_cast<std::uint64_t>(n - k + i) / (i / g));
  }
  return out;
}

double qudit_variance(int d, int L, int q) {
  if (d < 2 || L < 1 || q < 1 || q > L) {
    throw ParameterError("qudit_variance needs d >= 2 and 1 <= q <= L");
  }
  const double per_site = 2.0 * (d * d - 1) / d;
  return 1.0 / (static_cast<double>(binomial(L, q)) * std::pow(per_site, q));
}

double overlapping_m2_variance(int N) {
  if (N < 6 || N % 2 != 0) {
    throw ParameterError("overlapping_m2_variance needs even N >= 6");
  }
  const double n = N;
  return 6.0 / (n * n * n) * static_cast<double>(binomial(N, 4)) /
         static_cast<double>(binomial(N - 2, 2));
}

double original_syk_variance(int N) {
  if (N < 4 || N % 2 != 0) throw ParameterError("original_syk_variance needs even N >= 4");
  const double n = N;
  return 6.0 / (n * n * n);
}

std::uint64_t coupling_count(const ModelSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case ModelFamily::kQuditSyk:
      return checked_mul(binomial(spec.L, spec.q),
                         ipow(static_cast<std::uint64_t>(spec.d * spec.d - 1), spec.q));
    case ModelFamily::kClustersSpinSyk:
      return checked_mul(binomial(spec.L, 2), 81);
    case ModelFamily::kGaugedClustersSyk: {
      const auto pairs = gauged_pairs(spec, 0).size();
      return checked_mul(binomial(spec.L, 2), pairs * pairs);
    }
    case ModelFamily::kOverlappingClustersSyk:
      return overlapping_count(spec);
    case ModelFamily::kOriginalSyk:
      return binomial(spec.N, 4);
  }
  return 0;
}

CouplingTable enumerate_couplings(const ModelSpec& spec) {
  spec.validate();
  CouplingTable t;
  switch (spec.family) {
    case ModelFamily::kQuditSyk: {
      const int q = spec.q;
      const int g = spec.d * spec.d - 1;
      t.arity = 2 * q;
      std::vector<int> sites(q);
      for (int k = 0; k < q; ++k) sites[k] = k;
      while (true) {
        std::vector<int> alpha(q, 1);
        while (true) {
          for (int k = 0; k < q; ++k) {
            t.indices.push_back(sites[k]);
            t.indices.push_back(alpha[k]);
          }
          int k = q - 1;
          while (k >= 0 && alpha[k] == g) alpha[k--] = 1;
          if (k < 0) break;
          ++alpha[k];
        }
        int k = q - 1;
        while (k >= 0 && sites[k] == spec.L - q + k) --k;
        if (k < 0) break;
        ++sites[k];
        for (int m = k + 1; m < q; ++m) sites[m] = sites[m - 1] + 1;
      }
      break;
    }
    case ModelFamily::kClustersSpinSyk:
      t.arity = 6;
      for (int i1 = 0; i1 < spec.L; ++i1) {
        for (int i2 = i1 + 1; i2 < spec.L; ++i2) {
          for (int a1 = 1; a1 <= 3; ++a1) {
            for (int b1 = 1; b1 <= 3; ++b1) {
              for (int a2 = 1; a2 <= 3; ++a2) {
                for (int b2 = 1; b2 <= 3; ++b2) {
                  t.indices.insert(t.indices.end(), {i1, a1, b1, i2, a2, b2});
                }
              }
            }
          }
        }
      }
      break;
    case ModelFamily::kGaugedClustersSyk:
      t.arity = 4;
      for (int i = 0; i < spec.L; ++i) {
        const auto left = gauged_pairs(spec, i);
        for (int j = i + 1; j < spec.L; ++j) {
          const auto right = gauged_pairs(spec, j);
          for (const auto& [a, b] : left) {
            for (const auto& [c, e] : right) t.indices.insert(t.indices.end(), {a, b, c, e});
          }
        }
      }
      break;
    case ModelFamily::kOverlappingClustersSyk: {
      t.arity = 2 * spec.q_tilde;
      std::vector<int> prefix;
      overlapping_recurse(spec, 1, prefix, t.indices);
      break;
    }
    case ModelFamily::kOriginalSyk:
      t.arity = 4;
      for (int a = 1; a <= spec.N; ++a) {
        for (int b = a + 1; b <= spec.N; ++b) {
          for (int c = b + 1; c <= spec.N; ++c) {
            for (int e = c + 1; e <= spec.N; ++e) t.indices.insert(t.indices.end(), {a, b, c, e});
          }
        }
      }
      break;
  }
  t.values.assign(t.indices.size() / t.arity, 0.0);
  t.variance = coupling_variance(spec, t.values.size());
  return t;
}

double coupling_variance(const ModelSpec& spec, std::uint64_t count) {
  if (count == 0) throw ParameterError("coupling_variance: model has no couplings");
  const double n = static_cast<double>(count);
  const auto syk_matched = [&] {
    const double N = spec.majorana_count();
    return 6.0 / (N * N * N) * static_cast<double>(binomial(spec.majorana_count(), 4)) / n;
  };
  switch (spec.variance) {
    case VarianceConvention::kUnitEnergy:
      if (spec.family == ModelFamily::kQuditSyk) return qudit_variance(spec.d, spec.L, spec.q);
      return 1.0 / n;
    case VarianceConvention::kSykMatched:
      return syk_matched();
    case VarianceConvention::kDefault:
      break;
  }
  switch (spec.family) {
    case ModelFamily::kQuditSyk:
      return qudit_variance(spec.d, spec.L, spec.q);
    case ModelFamily::kClustersSpinSyk:
      return 1.0 / n;
    case ModelFamily::kOriginalSyk:
      return original_syk_variance(spec.N);
    case ModelFamily::kOverlappingClustersSyk:
      if (spec.M == 2 && spec.q_tilde == 2) return overlapping_m2_variance(spec.N);
      return syk_matched();
    case ModelFamily::kGaugedClustersSyk:
      return syk_matched();
  }
  return 1.0 / n;
}

double counter_gaussian(std::uint64_t seed, std::uint64_t sample_id,
                        std::uint64_t stream, std::span<const int> index) {
  std::uint64_t h = mix64(seed + kGolden);
  h = mix64(h ^ (sample_id + 2 * kGolden));
  h = mix64(h ^ (stream + 3 * kGolden));
  for (std::size_t k = 0; k < index.size(); ++k) {
    h = mix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(index[k])) +
                   (k + 4) * kGolden));
  }
  constexpr double kUnit = 0x1.0p-53;
  const double u1 = static_cast<double>((mix64(h ^ 0xA5A5A5A5A5A5A5A5ULL) >> 11) + 1) * kUnit;
  const double u2 = static_cast<double>(mix64(h ^ 0x5A5A5A5A5A5A5A5AULL) >> 11) * kUnit;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CouplingTable draw_couplings(const ModelSpec& spec, std::uint64_t sample_id) {
  auto t = enumerate_couplings(spec);
  const double sigma = std::sqrt(t.variance);
  const auto stream = family_stream(spec.family);
  for (std::size_t k = 0; k < t.count(); ++k) {
    t.values[k] = sigma * counter_gaussian(spec.seed, sample_id, stream, t.index(k));
  }
  return t;
}

}  // namespace syklab
