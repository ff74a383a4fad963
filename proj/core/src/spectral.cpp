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

#include "syklab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "syklab/errors.hpp"

namespace syklab {
namespace {

constexpr double kPi = std::numbers::pi;

// Least-squares Chebyshev fit y ~ sum_k c_k T_k((x - mid) / half).
struct ChebyshevFit {
  double mid = 0.0;
  double half = 1.0;
  Eigen::VectorXd coef;

  double operator()(double x) const {
    const double u = (x - mid) / half;
    double t_prev = 1.0;
    double t = u;
    double out = coef(0);
    if (coef.size() > 1) out += coef(1) * u;
    for (Eigen::Index k = 2; k < coef.size(); ++k) {
      const double next = 2.0 * u * t - t_prev;
      out += coef(k) * next;
      t_prev = t;
      t = next;
    }
    return out;
  }
};

ChebyshevFit fit_chebyshev(const std::vector<double>& x, const std::vector<double>& y, int degree) {
  ChebyshevFit fit;
  const double lo = x.front();
  const double hi = x.back();
  fit.mid = 0.5 * (lo + hi);
  fit.half = hi > lo ? 0.5 * (hi - lo) : 1.0;
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, degree + 1);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u = (x[i] - fit.mid) / fit.half;
    a(i, 0) = 1.0;
    if (degree >= 1) a(i, 1) = u;
    for (int k = 2; k <= degree; ++k) a(i, k) = 2.0 * u * a(i, k - 1) - a(i, k - 2);
    b(i) = y[i];
  }
  fit.coef = a.colPivHouseholderQr().solve(b);
  return fit;
}

void check_monotone(const ChebyshevFit& f, double lo, double hi) {
  constexpr int kGrid = 1000;
  double prev = f(lo);
  for (int k = 1; k <= kGrid; ++k) {
    const double v = f(lo + (hi - lo) * k / kGrid);
    if (!(v > prev)) {
      throw UnfoldingError("fitted staircase is not increasing near E = " +
                           std::to_string(lo + (hi - lo) * k / kGrid) +
                           "; raise the degree or the edge trim");
    }
    prev = v;
  }
}

void check_unfold_options(const UnfoldOptions& o) {
  if (o.poly_degree < 3 || o.poly_degree > 30) throw ParameterError("unfolding degree must be in 3..30");
  if (!(o.edge_trim >= 0.0 && o.edge_trim < 0.25)) throw ParameterError("edge trim must be in [0, 0.25)");
}

double normalize_mean(std::vector<double>& s) {
  if (s.empty()) return 1.0;
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
  if (!(mean > 0.0)) throw UnfoldingError("unfolded spacings have non-positive mean");
  for (auto& v : s) v /= mean;
  return mean;
}

double restricted_ratio_norm(SpectralClass cls) {
  switch (cls) {
    case SpectralClass::kGOE:
      return 8.0 / 27.0;
    case SpectralClass::kGUE:
      return 4.0 * kPi / (81.0 * std::sqrt(3.0));
    default:
      throw ParameterError("no surmise for an unknown symmetry class");
  }
}

std::size_t bulk_begin(std::size_t m, double fraction) {
  return static_cast<std::size_t>(std::floor(0.5 * (1.0 - fraction) * static_cast<double>(m)));
}

}  // namespace

double DosHistogram::integral() const {
  double total = 0.0;
  for (std::size_t b = 0; b < density.size(); ++b) total += density[b] * (edges[b + 1] - edges[b]);
  return total;
}

int freedman_diaconis_bins(std::vector<double> pooled) {
  const auto n = pooled.size();
  if (n < 2) return 1;
  std::sort(pooled.begin(), pooled.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(n - 1);
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return i + 1 < n ? pooled[i] * (1 - frac) + pooled[i + 1] * frac : pooled[i];
  };
  const double iqr = quantile(0.75) - quantile(0.25);
  const double range = pooled.back() - pooled.front();
  if (!(iqr > 0.0) || !(range > 0.0)) return std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
  const double h = 2.0 * iqr / std::cbrt(static_cast<double>(n));
  return std::clamp(static_cast<int>(std::ceil(range / h)), 1, 10000);
}

DosHistogram density_of_states(const SpectrumEnsemble& ensemble, int bins) {
  if (ensemble.empty()) throw InputError("density_of_states: empty ensemble");
  std::vector<double> pooled;
  for (const auto& s : ensemble) {
    if (s.size() < 2) throw InputError("density_of_states: each spectrum needs >= 2 levels");
    pooled.insert(pooled.end(), s.begin(), s.end());
  }
  if (bins <= 0) bins = freedman_diaconis_bins(pooled);
  auto [mn, mx] = std::minmax_element(pooled.begin(), pooled.end());
  double lo = *mn;
  double hi = *mx;
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  DosHistogram h;
  h.n_samples = ensemble.size();
  h.n_eigenvalues = pooled.size();
  h.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) h.edges[b] = lo + (hi - lo) * b / bins;
  h.edges[bins] = hi;
  std::vector<std::size_t> counts(bins, 0);
  const double width = (hi - lo) / bins;
  for (double e : pooled) {
    auto b = static_cast<int>((e - lo) / width);
    counts[std::clamp(b, 0, bins - 1)]++;
  }
  h.density.resize(bins);
  for (int b = 0; b < bins; ++b) {
    h.density[b] = static_cast<double>(counts[b]) /
                   (static_cast<double>(pooled.size()) * (h.edges[b + 1] - h.edges[b]));
  }
  return h;
}

EdgeMetrics edge_metrics(const SpectrumEnsemble& ensemble, double tail_cut) {
  if (ensemble.empty()) throw InputError("edge_metrics: empty ensemble");
  double m4 = 0.0;
  double tail = 0.0;
  std::size_t total = 0;
  for (const auto& s : ensemble) {
    if (s.size() < 2) throw InputError("edge_metrics: each spectrum needs >= 2 levels");
    const double n = static_cast<double>(s.size());
    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / n;
    double var = 0.0;
    for (double e : s) var += (e - mean) * (e - mean);
    var /= n;
    if (!(var > 0.0)) throw InputError("edge_metrics: spectrum has zero width");
    const double sd = std::sqrt(var);
    for (double e : s) {
      const double z = (e - mean) / sd;
      m4 += z * z * z * z;
      tail += std::abs(z) > tail_cut ? 1.0 : 0.0;
    }
    total += s.size();
  }
  return {m4 / static_cast<double>(total) - 3.0, tail / static_cast<double>(total)};
}

int unfold_degree(const UnfoldOptions& options, std::size_t n) {
  const auto by_size = static_cast<int>(n / static_cast<std::size_t>(std::max(1, options.levels_per_degree)));
  return std::clamp(by_size, 3, options.poly_degree);
}

UnfoldedSpectrum unfold(const std::vector<double>& sorted, const UnfoldOptions& options, double bulk_fraction) {
  check_unfold_options(options);
  if (!(bulk_fraction > 0.0 && bulk_fraction <= 1.0)) throw ParameterError("bulk_fraction must be in (0, 1]");
  const std::size_t n = sorted.size();
  if (n < kMinUnfoldLevels) {
    throw InputError("unfold needs at least " + std::to_string(kMinUnfoldLevels) + " levels, got " +
                     std::to_string(n));
  }
  if (!std::is_sorted(sorted.begin(), sorted.end())) throw InputError("unfold needs sorted levels");
  const auto trim = static_cast<std::size_t>(std::floor(options.edge_trim * static_cast<double>(n)));
  std::vector<double> x(sorted.begin() + trim, sorted.end() - trim);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = static_cast<double>(i + trim) + 0.5;
  const int degree = unfold_degree(options, n);
  const auto fit = fit_chebyshev(x, y, degree);
  // The fit is used, and must increase, only between the retained levels.
  const std::size_t m = x.size() - 1;
  const std::size_t first = bulk_begin(m, bulk_fraction);
  const std::size_t last = m - first;
  check_monotone(fit, x[first], x[last]);

  UnfoldedSpectrum out;
  out.raw = sorted;
  out.poly_degree = degree;
  out.discarded_edge_fraction = static_cast<double>(n - (last - first + 1)) / static_cast<double>(n);
  out.unfolded.reserve(last - first + 1);
  for (std::size_t i = first; i <= last; ++i) out.unfolded.push_back(fit(x[i]));
  for (std::size_t i = 1; i < out.unfolded.size(); ++i) {
    out.spacings.push_back(out.unfolded[i] - out.unfolded[i - 1]);
  }
  out.scale_correction = normalize_mean(out.spacings);
  return out;
}

EnsembleUnfolding unfold_ensemble(const SpectrumEnsemble& ensemble, const UnfoldOptions& options) {
  check_unfold_options(options);
  if (ensemble.empty()) throw InputError("unfold_ensemble: empty ensemble");
  std::vector<double> pooled;
  for (const auto& s : ensemble) pooled.insert(pooled.end(), s.begin(), s.end());
  std::sort(pooled.begin(), pooled.end());
  const std::size_t n = pooled.size();
  if (n < 50) throw InputError("unfold_ensemble needs at least 50 pooled levels");
  const auto trim = static_cast<std::size_t>(std::floor(options.edge_trim * static_cast<double>(n)));
  const double per = 1.0 / static_cast<double>(ensemble.size());
  std::vector<double> x(pooled.begin() + trim, pooled.end() - trim);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = (static_cast<double>(i + trim) + 0.5) * per;
  const auto fit = fit_chebyshev(x, y, options.poly_degree);
  const double lo = x.front();
  const double hi = x.back();
  check_monotone(fit, lo, hi);

  EnsembleUnfolding out;
  out.n_spectra = ensemble.size();
  out.poly_degree = options.poly_degree;
  out.discarded_edge_fraction = static_cast<double>(2 * trim) / static_cast<double>(n);
  for (const auto& s : ensemble) {
    double prev = 0.0;
    bool have = false;
    for (double e : s) {
      if (e < lo || e > hi) continue;
      const double u = fit(e);
      if (have) out.spacings.push_back(u - prev);
      prev = u;
      have = true;
    }
  }
  out.scale_correction = normalize_mean(out.spacings);
  return out;
}

std::vector<double> unfolded_spacings(const SpectrumEnsemble& ensemble, const UnfoldOptions& options,
                                      std::size_t min_levels, double bulk_fraction) {
  if (ensemble.empty()) throw InputError("unfolded_spacings: empty ensemble");
  if (!(bulk_fraction > 0.0 && bulk_fraction <= 1.0)) throw ParameterError("bulk_fraction must be in (0, 1]");
  const bool per_spectrum = std::all_of(ensemble.begin(), ensemble.end(), [&](const auto& s) {
    return s.size() >= std::max(min_levels, kMinUnfoldLevels);
  });
  if (!per_spectrum) {
    // Pooled staircase; spectra are not split, so the bulk cut is not applied.
    return unfold_ensemble(ensemble, options).spacings;
  }
  std::vector<double> out;
  for (const auto& s : ensemble) {
    UnfoldOptions o = options;
    std::vector<double> sp;
    while (true) {
      try {
        const auto u = unfold(s, o, bulk_fraction);
        sp = u.spacings;
        for (double& v : sp) v *= u.scale_correction;
        break;
      } catch (const UnfoldingError&) {
        const int used = unfold_degree(o, s.size());
        if (used <= 3) throw;
        o.poly_degree = used - 1;
      }
    }
    // unfold() normalized this spectrum alone; undo that so the pooled mean is set once.
    out.insert(out.end(), sp.begin(), sp.end());
  }
  normalize_mean(out);
  return out;
}

double wigner_surmise(SpectralClass cls, double s) {
  if (s < 0.0) return 0.0;
  switch (cls) {
    case SpectralClass::kGOE:
      return 0.5 * kPi * s * std::exp(-0.25 * kPi * s * s);
    case SpectralClass::kGUE:
      return 32.0 / (kPi * kPi) * s * s * std::exp(-4.0 * s * s / kPi);
    default:
      throw ParameterError("no Wigner surmise for an unknown symmetry class");
  }
}

double wigner_surmise_cdf(SpectralClass cls, double s) {
  if (s <= 0.0) return 0.0;
  switch (cls) {
    case SpectralClass::kGOE:
      return 1.0 - std::exp(-0.25 * kPi * s * s);
    case SpectralClass::kGUE:
      return std::erf(2.0 * s / std::sqrt(kPi)) - 4.0 * s / kPi * std::exp(-4.0 * s * s / kPi);
    default:
      throw ParameterError("no Wigner surmise for an unknown symmetry class");
  }
}

SurmiseComparison compare_to_surmise(const std::vector<double>& spacings, SpectralClass cls,
                                     double bin_width, double s_max) {
  if (spacings.empty()) throw InputError("compare_to_surmise: no spacings");
  if (!(bin_width > 0.0) || !(s_max > bin_width)) throw ParameterError("bad surmise histogram range");
  const int bins = static_cast<int>(std::lround(s_max / bin_width));
  SurmiseComparison out;
  out.n_spacings = spacings.size();
  out.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) out.edges[b] = s_max * b / bins;
  std::vector<std::size_t> counts(bins, 0);
  std::size_t tail = 0;
  for (double s : spacings) {
    if (s >= s_max) {
      ++tail;
      continue;
    }
    counts[std::clamp(static_cast<int>(s / (s_max / bins)), 0, bins - 1)]++;
  }
  const double n = static_cast<double>(spacings.size());
  out.empirical.resize(bins);
  out.surmise.resize(bins);
  for (int b = 0; b < bins; ++b) {
    const double w = out.edges[b + 1] - out.edges[b];
    out.empirical[b] = static_cast<double>(counts[b]) / (n * w);
    out.surmise[b] = (wigner_surmise_cdf(cls, out.edges[b + 1]) - wigner_surmise_cdf(cls, out.edges[b])) / w;
    out.l1_distance += std::abs(out.empirical[b] - out.surmise[b]) * w;
  }
  out.tail_empirical = static_cast<double>(tail) / n;
  out.tail_surmise = 1.0 - wigner_surmise_cdf(cls, s_max);
  out.l1_distance += std::abs(out.tail_empirical - out.tail_surmise);
  return out;
}

std::vector<double> gap_ratios(const std::vector<double>& sorted, std::size_t* excluded,
                               double zero_tolerance) {
  std::vector<double> out;
  if (sorted.size() < 3) return out;
  const double width = sorted.back() - sorted.front();
  const double zero = zero_tolerance * width;
  out.reserve(sorted.size() - 2);
  std::size_t skipped = 0;
  for (std::size_t i = 0; i + 2 < sorted.size(); ++i) {
    const double a = sorted[i + 1] - sorted[i];
    const double b = sorted[i + 2] - sorted[i + 1];
    if (a <= zero || b <= zero) {
      out.push_back(std::numeric_limits<double>::quiet_NaN());
      ++skipped;
      continue;
    }
    out.push_back(std::min(a / b, b / a));
  }
  if (excluded) *excluded += skipped;
  return out;
}

GapRatioCurve gap_ratio_stats(const SpectrumEnsemble& ensemble, const GapRatioOptions& options) {
  if (ensemble.empty()) throw InputError("gap_ratio_stats: empty ensemble");
  if (!(options.bulk_fraction > 0.0 && options.bulk_fraction <= 1.0)) {
    throw ParameterError("bulk fraction must be in (0, 1]");
  }
  if (options.hist_bins < 1) throw ParameterError("gap ratio histogram needs >= 1 bin");
  GapRatioCurve out;
  out.n_spectra = ensemble.size();
  std::vector<double> sum;
  std::vector<double> sumsq;
  std::vector<std::size_t> hist(options.hist_bins, 0);
  double bulk_total = 0.0;
  std::size_t bulk_count = 0;
  std::vector<double> spectrum_bulk;
  for (const auto& s : ensemble) {
    const auto r = gap_ratios(s, &out.excluded_zero_spacings);
    if (r.size() > sum.size()) {
      sum.resize(r.size(), 0.0);
      sumsq.resize(r.size(), 0.0);
      out.index_count.resize(r.size(), 0);
    }
    const auto lo = bulk_begin(r.size(), options.bulk_fraction);
    const auto hi = r.size() - lo;
    double b_sum = 0.0;
    std::size_t b_count = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (std::isnan(r[i])) continue;
      sum[i] += r[i];
      sumsq[i] += r[i] * r[i];
      out.index_count[i]++;
      hist[std::min(static_cast<int>(r[i] * options.hist_bins), options.hist_bins - 1)]++;
      ++out.n_ratios;
      if (i >= lo && i < hi) {
        b_sum += r[i];
        ++b_count;
      }
    }
    if (b_count) {
      bulk_total += b_sum;
      bulk_count += b_count;
      spectrum_bulk.push_back(b_sum / static_cast<double>(b_count));
    }
  }
  if (bulk_count == 0) throw InputError("gap_ratio_stats: no ratios in the bulk");
  out.index_mean.resize(sum.size());
  out.index_se.resize(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const double c = static_cast<double>(out.index_count[i]);
    if (c == 0) {
      out.index_mean[i] = std::numeric_limits<double>::quiet_NaN();
      out.index_se[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const double mean = sum[i] / c;
    out.index_mean[i] = mean;
    const double var = c > 1 ? std::max(0.0, (sumsq[i] - c * mean * mean) / (c - 1)) : 0.0;
    out.index_se[i] = std::sqrt(var / c);
  }
  out.bulk_mean = bulk_total / static_cast<double>(bulk_count);
  const double s = static_cast<double>(spectrum_bulk.size());
  if (spectrum_bulk.size() > 1) {
    const double m = std::accumulate(spectrum_bulk.begin(), spectrum_bulk.end(), 0.0) / s;
    double var = 0.0;
    for (double v : spectrum_bulk) var += (v - m) * (v - m);
    out.bulk_se = std::sqrt(var / (s - 1) / s);
  }
  out.hist_edges.resize(options.hist_bins + 1);
  out.hist_density.resize(options.hist_bins);
  const double w = 1.0 / options.hist_bins;
  for (int b = 0; b <= options.hist_bins; ++b) out.hist_edges[b] = b * w;
  for (int b = 0; b < options.hist_bins; ++b) {
    out.hist_density[b] = out.n_ratios ? static_cast<double>(hist[b]) / (static_cast<double>(out.n_ratios) * w) : 0.0;
  }
  return out;
}

EdgeRatioContrast edge_ratio_contrast(const SpectrumEnsemble& ensemble, int n_edge, double bulk_fraction) {
  if (ensemble.empty()) throw InputError("edge_ratio_contrast: empty ensemble");
  if (n_edge < 1) throw ParameterError("edge_ratio_contrast needs n_edge >= 1");
  std::vector<double> diffs;
  double edge_sum = 0.0;
  double bulk_sum = 0.0;
  for (const auto& s : ensemble) {
    const auto r = gap_ratios(s);
    const auto lo = bulk_begin(r.size(), bulk_fraction);
    const auto hi = r.size() - lo;
    double e = 0.0, b = 0.0;
    std::size_t ne = 0, nb = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (std::isnan(r[i])) continue;
      if (i < static_cast<std::size_t>(n_edge)) {
        e += r[i];
        ++ne;
      }
      if (i >= lo && i < hi) {
        b += r[i];
        ++nb;
      }
    }
    if (ne == 0 || nb == 0) continue;
    e /= static_cast<double>(ne);
    b /= static_cast<double>(nb);
    edge_sum += e;
    bulk_sum += b;
    diffs.push_back(b - e);
  }
  if (diffs.size() < 2) throw InputError("edge_ratio_contrast needs at least two usable spectra");
  const double n = static_cast<double>(diffs.size());
  EdgeRatioContrast out;
  out.edge_mean = edge_sum / n;
  out.bulk_mean = bulk_sum / n;
  out.difference = std::accumulate(diffs.begin(), diffs.end(), 0.0) / n;
  double var = 0.0;
  for (double d : diffs) var += (d - out.difference) * (d - out.difference);
  out.standard_error = std::sqrt(var / (n - 1) / n);
  return out;
}

double gap_ratio_surmise(SpectralClass cls, double r) {
  if (r < 0.0 || r > 1.0) return 0.0;
  const double beta = cls == SpectralClass::kGOE ? 1.0 : 2.0;
  const double z = restricted_ratio_norm(cls);
  return 2.0 / z * std::pow(r + r * r, beta) / std::pow(1.0 + r + r * r, 1.0 + 1.5 * beta);
}

double gap_ratio_reference(SpectralClass cls) {
  switch (cls) {
    case SpectralClass::kGOE:
      return 0.5307;
    case SpectralClass::kGUE:
      return 0.59975;
    default:
      throw ParameterError("no gap ratio reference for an unknown symmetry class");
  }
}

std::vector<double> sff_time_grid(const SffOptions& options, double scale) {
  if (options.points < 2) throw InputError("SFF grid needs at least two points");
  if (!(options.t_min > 0.0) || !(options.t_max > options.t_min) || !(scale > 0.0)) {
    throw ParameterError("SFF grid needs 0 < t_min < t_max and a positive scale");
  }
  std::vector<double> t(options.points);
  const double a = std::log(options.t_min);
  const double b = std::log(options.t_max);
  for (int k = 0; k < options.points; ++k) {
    t[k] = scale * std::exp(a + (b - a) * k / (options.points - 1));
  }
  return t;
}

double ensemble_energy_scale(const SpectrumEnsemble& samples) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& s : samples) {
    for (double e : s) sum += e * e;
    n += s.size();
  }
  if (n == 0) throw InputError("ensemble_energy_scale: no levels");
  return std::sqrt(sum / static_cast<double>(n));
}

SffSeries spectral_form_factor(const SpectrumEnsemble& samples, const std::vector<double>& t_grid,
                               int degeneracy_factor) {
  if (t_grid.empty()) throw InputError("spectral_form_factor: empty time grid");
  if (samples.empty()) throw InputError("spectral_form_factor: empty ensemble");
  if (degeneracy_factor < 1) throw ParameterError("degeneracy factor must be >= 1");
  const double g = degeneracy_factor;
  SffSeries out;
  out.t = t_grid;
  out.degeneracy_factor = degeneracy_factor;
  std::vector<double> acc(t_grid.size(), 0.0);
  double z0 = 0.0;
  double n_mean = 0.0;
  double n2_mean = 0.0;
  for (const auto& levels : samples) {
    const double n = static_cast<double>(levels.size());
    z0 += g * g * n * n;
    n_mean += n;
    n2_mean += n * n;
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
      double re = 0.0;
      double im = 0.0;
      for (double e : levels) {
        re += std::cos(t_grid[k] * e);
        im -= std::sin(t_grid[k] * e);
      }
      acc[k] += g * g * (re * re + im * im);
    }
  }
  if (!(z0 > 0.0)) throw InputError("spectral_form_factor: no levels");
  out.value.resize(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) out.value[k] = acc[k] / z0;
  out.expected_plateau = n_mean / n2_mean;

  const double late = t_grid.back() / 10.0;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (t_grid[k] >= late) {
      sum += out.value[k];
      ++count;
    }
  }
  out.plateau = count ? sum / static_cast<double>(count) : out.value.back();
  out.ramp = fit_ramp(out.t, out.value, out.plateau);
  return out;
}

RampFit fit_ramp(const std::vector<double>& t, const std::vector<double>& value, double plateau,
                 double plateau_fraction, double rise_factor) {
  RampFit fit;
  if (t.size() != value.size() || t.size() < 5 || !(plateau > 0.0)) return fit;
  const double late = t.back() / 10.0;
  const double top = plateau_fraction * plateau;
  // end: one past the last point below `top` before the late-time window.
  std::size_t end = 0;
  for (std::size_t k = 0; k < t.size() && t[k] < late; ++k) {
    if (value[k] < top) end = k + 1;
  }
  if (end == 0) return fit;
  std::size_t dip = 0;
  for (std::size_t k = 0; k < end; ++k) {
    if (value[k] < value[dip]) dip = k;
  }
  // The ramp is the contiguous run ending at `end` that stays above the floor;
  // isolated near-zeros of an oscillating early decay cannot start it.
  const double floor = std::max(rise_factor * value[dip], top / rise_factor);
  std::size_t begin = end;
  while (begin > dip && value[begin - 1] >= floor) --begin;
  if (begin >= end || end - begin < 5) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(end - begin);
  for (std::size_t k = begin; k < end; ++k) {
    const double x = std::log(t[k]);
    const double y = std::log(std::max(value[k], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (!(den > 0.0)) return fit;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.t_begin = t[begin];
  fit.t_end = t[end - 1];
  fit.points = end - begin;
  fit.valid = true;
  return fit;
}

}  // namespace syklab
