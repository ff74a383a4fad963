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

#pragma once

#include <cstddef>
#include <vector>

#include "syklab/sectors.hpp"

namespace syklab {

/// One sorted eigenvalue list per (sample, sector).
using SpectrumEnsemble = std::vector<std::vector<double>>;

// ---------------------------------------------------------------------------
// Density of states

struct DosHistogram {
  std::vector<double> edges;    // bins + 1 entries
  std::vector<double> density;  // counts / (n_eigenvalues * width)
  std::size_t n_samples = 0;
  std::size_t n_eigenvalues = 0;

  /// Rectangle-rule integral, 1 up to rounding.
  double integral() const;
};

/// Freedman-Diaconis bin count for pooled data (at least 1).
int freedman_diaconis_bins(std::vector<double> pooled);

/// Pooled histogram over the ensemble. bins <= 0 selects Freedman-Diaconis.
DosHistogram density_of_states(const SpectrumEnsemble& ensemble, int bins = 0);

/// Shape of the level density after scaling each spectrum to zero mean and
/// unit variance: a Gaussian has excess kurtosis 0 and tail mass (|E| > 2)
/// of about 0.0455; a semicircle has -1 and 0.
struct EdgeMetrics {
  double excess_kurtosis = 0.0;
  double tail_mass = 0.0;
};
EdgeMetrics edge_metrics(const SpectrumEnsemble& ensemble, double tail_cut = 2.0);

// ---------------------------------------------------------------------------
// Unfolding

struct UnfoldOptions {
  int poly_degree = 7;        // upper limit
  double edge_trim = 0.02;    // fraction dropped at each end
  int levels_per_degree = 8;  // short spectra get degree n / levels_per_degree (at least 3)
};

inline constexpr std::size_t kMinUnfoldLevels = 12;

/// Degree actually fitted to a spectrum of n levels.
int unfold_degree(const UnfoldOptions& options, std::size_t n);

/// Polynomial fit of the cumulative level count, evaluated at the levels.
/// Spacings are rescaled so their mean is exactly 1; the factor removed is
/// kept in scale_correction.
struct UnfoldedSpectrum {
  std::vector<double> raw;
  std::vector<double> unfolded;  // retained levels only
  std::vector<double> spacings;
  int poly_degree = 0;
  double discarded_edge_fraction = 0.0;
  double scale_correction = 1.0;
};

/// Needs >= kMinUnfoldLevels levels. Only the middle bulk_fraction of the
/// spacings (after the edge trim) is kept. Throws UnfoldingError when the
/// fitted staircase is not increasing between the retained levels.
UnfoldedSpectrum unfold(const std::vector<double>& sorted, const UnfoldOptions& options = {},
                        double bulk_fraction = 1.0);

/// Fits one staircase to the pooled ensemble (average count per spectrum) and
/// maps every spectrum through it. Suited to small sectors.
struct EnsembleUnfolding {
  std::vector<double> spacings;
  std::size_t n_spectra = 0;
  int poly_degree = 0;
  double discarded_edge_fraction = 0.0;
  double scale_correction = 1.0;
};
EnsembleUnfolding unfold_ensemble(const SpectrumEnsemble& ensemble,
                                  const UnfoldOptions& options = {});

/// Spectra with at least min_levels are unfolded one by one (lowering the
/// degree if a fit is not monotone); otherwise the pooled fit is used for the
/// whole ensemble. Only the middle bulk_fraction of each spectrum's spacings
/// is kept.
std::vector<double> unfolded_spacings(const SpectrumEnsemble& ensemble,
                                      const UnfoldOptions& options,
                                      std::size_t min_levels = kMinUnfoldLevels,
                                      double bulk_fraction = 1.0);

// ---------------------------------------------------------------------------
// Nearest-neighbour spacings

/// Wigner surmise with unit mean spacing. Throws ParameterError for kUnknown.
double wigner_surmise(SpectralClass cls, double s);
double wigner_surmise_cdf(SpectralClass cls, double s);

/// Histogram of spacings against the bin-averaged surmise on [0, s_max]
/// plus one tail bin. l1_distance = sum |empirical - surmise| * width + tail
/// difference.
struct SurmiseComparison {
  std::vector<double> edges;
  std::vector<double> empirical;  // density per bin
  std::vector<double> surmise;    // bin-averaged density
  double tail_empirical = 0.0;    // fraction above s_max
  double tail_surmise = 0.0;
  double l1_distance = 0.0;
  std::size_t n_spacings = 0;
};
SurmiseComparison compare_to_surmise(const std::vector<double>& spacings, SpectralClass cls,
                                     double bin_width = 0.2, double s_max = 4.0);

// ---------------------------------------------------------------------------
// Gap ratios

/// r_i = min(s_{i+1}/s_i, s_i/s_{i+1}) over consecutive raw spacings. Pairs
/// touching a spacing <= zero_tolerance * width are skipped and counted; the
/// returned vector keeps NaN at those indices so positions stay aligned.
std::vector<double> gap_ratios(const std::vector<double>& sorted, std::size_t* excluded = nullptr,
                               double zero_tolerance = 1e-12);

struct GapRatioOptions {
  double bulk_fraction = 0.6;  // middle part of each spectrum
  int hist_bins = 50;
};

struct GapRatioCurve {
  std::vector<double> index_mean;  // <r_i> at fixed i across spectra
  std::vector<double> index_se;
  std::vector<std::size_t> index_count;
  std::vector<double> hist_edges;  // whole-spectrum distribution on [0, 1]
  std::vector<double> hist_density;
  double bulk_mean = 0.0;
  double bulk_se = 0.0;  // from the spread of per-spectrum bulk means
  std::size_t n_ratios = 0;
  std::size_t excluded_zero_spacings = 0;
  std::size_t n_spectra = 0;
};
GapRatioCurve gap_ratio_stats(const SpectrumEnsemble& ensemble, const GapRatioOptions& options = {});

/// Low-edge versus bulk contrast of <r_i>: per spectrum, d = bulk mean -
/// mean of r_0..r_{n_edge-1}; reports the ensemble mean of d and its
/// standard error.
struct EdgeRatioContrast {
  double edge_mean = 0.0;
  double bulk_mean = 0.0;
  double difference = 0.0;
  double standard_error = 0.0;
};
EdgeRatioContrast edge_ratio_contrast(const SpectrumEnsemble& ensemble, int n_edge = 5,
                                      double bulk_fraction = 0.6);

/// Surmise densities of the restricted ratio on [0, 1] (GOE, GUE).
double gap_ratio_surmise(SpectralClass cls, double r);
/// Reference bulk means of the restricted ratio: 0.5307 (GOE), 0.59975 (GUE).
double gap_ratio_reference(SpectralClass cls);

// ---------------------------------------------------------------------------
// Spectral form factor

struct SffOptions {
  int points = 400;
  double t_min = 1e-1;
  double t_max = 1e5;
};

/// Log-spaced grid t_min*scale .. t_max*scale.
std::vector<double> sff_time_grid(const SffOptions& options, double scale = 1.0);

/// sqrt of the mean of E^2 over all levels of all spectra.
double ensemble_energy_scale(const SpectrumEnsemble& samples);

struct RampFit {
  double slope = 0.0;
  double t_begin = 0.0;
  double t_end = 0.0;
  std::size_t points = 0;
  bool valid = false;
};

struct SffSeries {
  std::vector<double> t;
  std::vector<double> value;  // <|Z(t)|^2> / <|Z(0)|^2>
  int degeneracy_factor = 1;
  double plateau = 0.0;           // mean over the last decade of t
  double expected_plateau = 0.0;  // <sum g^2> / <(sum g)^2> without accidental degeneracy
  RampFit ramp;
};

/// Z(t) = g * sum_j exp(-i t E_j) per sample, levels of all sectors of one
/// sample concatenated. Each entry of `samples` is one disorder sample.
SffSeries spectral_form_factor(const SpectrumEnsemble& samples, const std::vector<double>& t_grid,
                               int degeneracy_factor = 1);

/// Least-squares slope of log value against log t over the rise into the
/// plateau: the contiguous run of points that ends where the series last
/// crosses `plateau_fraction` of the plateau and stays above
/// max(rise_factor * dip, plateau_fraction * plateau / rise_factor).
RampFit fit_ramp(const std::vector<double>& t, const std::vector<double>& value, double plateau,
                 double plateau_fraction = 0.5, double rise_factor = 3.0);

}  // namespace syklab
