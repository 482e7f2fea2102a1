// dsp/lld.cc

// Copyright 2026 The rrassess Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "rrassess/dsp/lld.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rrassess/common/csv.h"
#include "rrassess/common/error.h"
#include "rrassess/dsp/spectrum.h"
#include "rrassess/simd/kernels.h"

namespace rrassess::dsp {

namespace {

constexpr double kLogFloor = 1e-20;

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

// Offset and value of the vertex of the parabola through (-1,a), (0,b), (1,c).
void ParabolicPeak(double a, double b, double c, double *offset,
                   double *value) {
  double denom = a - 2.0 * b + c;
  double d = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
  d = std::clamp(d, -0.5, 0.5);
  *offset = d;
  *value = b - 0.25 * (a - c) * d;
}

}  // namespace

// ---------------------------------------------------------------------------
// LldMatrix

LldMatrix::LldMatrix(double frame_len, double frame_hop,
                     std::vector<std::string> names, std::size_t num_frames)
    : frame_len_(frame_len),
      frame_hop_(frame_hop),
      num_frames_(num_frames),
      names_(std::move(names)),
      columns_(names_.size(), std::vector<double>(num_frames, 0.0)) {}

std::size_t LldMatrix::ColumnIndex(const std::string &name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UsageError("unknown LLD column: " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

LldMatrix LldMatrix::Select(const std::vector<std::string> &names) const {
  LldMatrix out(frame_len_, frame_hop_, names, num_frames_);
  for (std::size_t i = 0; i < names.size(); ++i)
    out.columns_[i] = columns_[ColumnIndex(names[i])];
  return out;
}

LldMatrix LldMatrix::Concat(const LldMatrix &other) const {
  if (other.num_frames_ != num_frames_)
    throw UsageError("LLD concat: frame counts differ");
  LldMatrix out = *this;
  out.names_.insert(out.names_.end(), other.names_.begin(), other.names_.end());
  out.columns_.insert(out.columns_.end(), other.columns_.begin(),
                      other.columns_.end());
  return out;
}

std::string LldMatrix::ToCsv() const {
  CsvTable t;
  t.header = names_;
  for (std::size_t f = 0; f < num_frames_; ++f) {
    std::vector<std::string> row;
    row.reserve(names_.size());
    for (const auto &col : columns_) row.push_back(FormatReal(col[f]));
    t.rows.push_back(std::move(row));
  }
  return t.Serialize();
}

// ---------------------------------------------------------------------------
// LldExtractor

std::vector<std::string> LldColumnNames(const LldOptions &opts) {
  std::vector<std::string> names = {"f0", "voicing", "rms", "zcr"};
  for (int i = 1; i <= opts.num_ceps; ++i)
    names.push_back("mfcc" + std::to_string(i));
  for (const char *n : {"jitter", "shimmer", "hnr", "spectral_centroid",
                        "spectral_rolloff", "spectral_flux"})
    names.emplace_back(n);
  return names;
}

LldExtractor::LldExtractor(int sample_rate, const LldOptions &opts)
    : sample_rate_(sample_rate), opts_(opts) {
  if (sample_rate < kMinSampleRate)
    throw DataError("sample rate below 8000 Hz: " +
                    std::to_string(sample_rate));
  frame_len_ = static_cast<std::size_t>(
      std::lround(opts.frame_length_s * sample_rate));
  frame_shift_ = static_cast<std::size_t>(
      std::lround(opts.frame_shift_s * sample_rate));
  min_lag_ = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::floor(sample_rate / opts.f0_max_hz)));
  max_lag_ = std::min<std::size_t>(
      static_cast<std::size_t>(std::ceil(sample_rate / opts.f0_min_hz)),
      frame_len_ - 2);

  window_.resize(frame_len_);
  for (std::size_t i = 0; i < frame_len_; ++i)
    window_[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i /
                                        (frame_len_ - 1));

  fft_ = std::make_unique<RealFft>(NextPowerOfTwo(frame_len_));
  const std::size_t bins = fft_->num_bins();
  const double nfft = static_cast<double>(fft_->size());

  const int bands = opts.num_mel_bands;
  const double mel_hi = HzToMel(sample_rate / 2.0);
  std::vector<double> edges(bands + 2);
  for (int i = 0; i < bands + 2; ++i)
    edges[i] = MelToHz(mel_hi * i / (bands + 1));
  mel_bank_.assign(bands, std::vector<double>(bins, 0.0));
  for (int m = 0; m < bands; ++m) {
    const double lo = edges[m], mid = edges[m + 1], hi = edges[m + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      double f = k * sample_rate / nfft;
      if (f > lo && f <= mid)
        mel_bank_[m][k] = (f - lo) / (mid - lo);
      else if (f > mid && f < hi)
        mel_bank_[m][k] = (hi - f) / (hi - mid);
    }
  }

  dct_.assign(opts.num_ceps, std::vector<double>(bands, 0.0));
  for (int j = 0; j < opts.num_ceps; ++j) {
    double scale = std::sqrt((j == 0 ? 1.0 : 2.0) / bands);
    for (int m = 0; m < bands; ++m)
      dct_[j][m] =
          scale * std::cos(std::numbers::pi * j * (m + 0.5) / bands);
  }
}

LldExtractor::~LldExtractor() = default;

std::size_t LldExtractor::NumFrames(std::size_t n) const {
  if (n < frame_len_) return 0;
  return 1 + (n - frame_len_) / frame_shift_;
}

LldExtractor::PitchResult LldExtractor::EstimatePitch(
    std::span<const double> raw) const {
  PitchResult res;
  const std::size_t n = raw.size();
  double mean = 0.0;
  for (double v : raw) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = raw[i] - mean;

  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i] * x[i];
  if (prefix[n] < 1e-20) return res;

  // Normalized cross-correlation for lags [min_lag-1, max_lag+1].
  const std::size_t lo = min_lag_ - 1, hi = max_lag_ + 1;
  std::vector<double> r(hi + 1, 0.0);
  for (std::size_t lag = lo; lag <= hi; ++lag) {
    const std::size_t m = n - lag;
    double e0 = prefix[m];
    double e1 = prefix[n] - prefix[lag];
    if (e0 <= 0.0 || e1 <= 0.0) continue;
    double num = simd::Dot(std::span<const double>(x.data(), m),
                           std::span<const double>(x.data() + lag, m));
    r[lag] = num / std::sqrt(e0 * e1);
  }

  // Smallest-lag local maximum within 95% of the best one.
  double best = -1.0;
  for (std::size_t lag = min_lag_; lag <= max_lag_; ++lag)
    if (r[lag] > r[lag - 1] && r[lag] >= r[lag + 1]) best = std::max(best, r[lag]);
  if (best <= 0.0) return res;
  std::size_t chosen = 0;
  for (std::size_t lag = min_lag_; lag <= max_lag_; ++lag) {
    if (r[lag] > r[lag - 1] && r[lag] >= r[lag + 1] && r[lag] >= 0.95 * best) {
      chosen = lag;
      break;
    }
  }
  double offset, peak;
  ParabolicPeak(r[chosen - 1], r[chosen], r[chosen + 1], &offset, &peak);
  peak = std::min(peak, 1.0);
  res.peak = peak;
  double f0 = sample_rate_ / (static_cast<double>(chosen) + offset);
  if (peak >= opts_.voicing_threshold && f0 >= opts_.f0_min_hz &&
      f0 <= opts_.f0_max_hz)
    res.f0 = f0;
  return res;
}

void LldExtractor::VoiceQuality(std::span<const double> x,
                                const std::vector<double> &f0,
                                std::vector<double> *jitter,
                                std::vector<double> *shimmer) const {
  const std::size_t frames = f0.size();
  const double half = frame_len_ / 2.0;
  std::size_t f = 0;
  while (f < frames) {
    if (f0[f] <= 0.0) {
      ++f;
      continue;
    }
    std::size_t run_begin = f;
    while (f < frames && f0[f] > 0.0) ++f;
    std::size_t run_end = f;  // exclusive

    const std::size_t a = run_begin * frame_shift_;
    const std::size_t b = (run_end - 1) * frame_shift_ + frame_len_;
    auto period_at = [&](double pos) {
      double idx = std::round((pos - half) / frame_shift_);
      auto fi = static_cast<std::size_t>(std::clamp(
          idx, static_cast<double>(run_begin),
          static_cast<double>(run_end - 1)));
      return sample_rate_ / f0[fi];
    };
    auto argmax = [&](std::size_t lo, std::size_t hi) {
      std::size_t best = lo;
      for (std::size_t i = lo + 1; i <= hi; ++i)
        if (x[i] > x[best]) best = i;
      return best;
    };
    auto refine = [&](std::size_t p, double *pos, double *amp) {
      if (p == 0 || p + 1 >= x.size()) {
        *pos = static_cast<double>(p);
        *amp = x[p];
        return;
      }
      double off;
      ParabolicPeak(x[p - 1], x[p], x[p + 1], &off, amp);
      *pos = p + off;
    };

    std::vector<double> pos, amp;
    double t0 = period_at(static_cast<double>(a));
    std::size_t first_hi =
        std::min(b - 1, a + static_cast<std::size_t>(std::ceil(t0)) - 1);
    std::size_t p = argmax(a, first_hi);
    double mp, ma;
    refine(p, &mp, &ma);
    pos.push_back(mp);
    amp.push_back(ma);
    while (true) {
      double t = period_at(static_cast<double>(p));
      auto lo = static_cast<std::size_t>(std::ceil(p + 0.8 * t));
      auto hi = static_cast<std::size_t>(std::floor(p + 1.2 * t));
      if (hi >= b || lo > hi) break;
      p = argmax(lo, hi);
      refine(p, &mp, &ma);
      pos.push_back(mp);
      amp.push_back(ma);
    }

    for (std::size_t fr = run_begin; fr < run_end; ++fr) {
      const double start = static_cast<double>(fr * frame_shift_);
      const double end = start + frame_len_;
      double dt = 0.0, sum_t = 0.0, da = 0.0, sum_a = 0.0;
      int count = 0;
      for (std::size_t k = 2; k < pos.size(); ++k) {
        if (pos[k] < start || pos[k] >= end) continue;
        double tk = pos[k] - pos[k - 1];
        double tprev = pos[k - 1] - pos[k - 2];
        dt += std::abs(tk - tprev);
        sum_t += tk;
        da += std::abs(amp[k] - amp[k - 1]);
        sum_a += amp[k];
        ++count;
      }
      if (count == 0) continue;
      (*jitter)[fr] = sum_t > 0.0 ? dt / sum_t : 0.0;
      (*shimmer)[fr] = sum_a > 0.0 ? da / sum_a : 0.0;
    }
  }
}

LldMatrix LldExtractor::Extract(std::span<const double> samples) const {
  const std::size_t frames = NumFrames(samples.size());
  if (frames == 0)
    throw DataError("LLD extraction needs at least one " +
                    std::to_string(frame_len_) + "-sample frame, got " +
                    std::to_string(samples.size()) + " samples");
  LldMatrix m(opts_.frame_length_s, opts_.frame_shift_s, LldColumnNames(opts_),
              frames);
  const std::size_t c_f0 = 0, c_voicing = 1, c_rms = 2, c_zcr = 3,
                    c_mfcc = 4;
  const std::size_t c_jitter = c_mfcc + opts_.num_ceps;
  const std::size_t c_shimmer = c_jitter + 1, c_hnr = c_jitter + 2,
                    c_centroid = c_jitter + 3, c_rolloff = c_jitter + 4,
                    c_flux = c_jitter + 5;

  const double frame_seconds = static_cast<double>(frame_len_) / sample_rate_;
  const double bin_hz = static_cast<double>(sample_rate_) / fft_->size();
  std::vector<double> windowed(frame_len_), power, mag, prev_mag,
      log_mel(opts_.num_mel_bands);
  std::vector<double> f0(frames, 0.0);

  for (std::size_t t = 0; t < frames; ++t) {
    std::span<const double> frame = samples.subspan(t * frame_shift_, frame_len_);

    m.MutableColumn(c_rms)[t] =
        std::sqrt(simd::SumSquares(frame) / static_cast<double>(frame_len_));
    std::size_t crossings = 0;
    for (std::size_t i = 1; i < frame_len_; ++i)
      if ((frame[i - 1] >= 0.0) != (frame[i] >= 0.0)) ++crossings;
    m.MutableColumn(c_zcr)[t] = crossings / frame_seconds;

    PitchResult pitch = EstimatePitch(frame);
    f0[t] = pitch.f0;
    m.MutableColumn(c_f0)[t] = pitch.f0;
    m.MutableColumn(c_voicing)[t] = pitch.f0 > 0.0 ? 1.0 : 0.0;
    double hnr = opts_.hnr_min_db;
    if (pitch.peak >= 1.0)
      hnr = opts_.hnr_max_db;
    else if (pitch.peak > 0.0)
      hnr = std::clamp(10.0 * std::log10(pitch.peak / (1.0 - pitch.peak)),
                       opts_.hnr_min_db, opts_.hnr_max_db);
    m.MutableColumn(c_hnr)[t] = hnr;

    simd::Multiply(frame, window_, windowed);
    fft_->PowerSpectrum(windowed, &power);
    mag.resize(power.size());
    double mag_sum = 0.0, weighted = 0.0, power_sum = 0.0;
    for (std::size_t k = 0; k < power.size(); ++k) {
      mag[k] = std::sqrt(power[k]);
      mag_sum += mag[k];
      weighted += k * bin_hz * mag[k];
      power_sum += power[k];
    }
    m.MutableColumn(c_centroid)[t] = mag_sum > 0.0 ? weighted / mag_sum : 0.0;
    double rolloff = 0.0;
    if (power_sum > 0.0) {
      double cum = 0.0;
      for (std::size_t k = 0; k < power.size(); ++k) {
        cum += power[k];
        if (cum >= opts_.rolloff_fraction * power_sum) {
          rolloff = k * bin_hz;
          break;
        }
      }
    }
    m.MutableColumn(c_rolloff)[t] = rolloff;
    double flux = 0.0;
    if (t > 0)
      flux = simd::SquaredDistance(mag, prev_mag);
    m.MutableColumn(c_flux)[t] = flux;
    prev_mag = mag;

    for (int b = 0; b < opts_.num_mel_bands; ++b)
      log_mel[b] = std::log(std::max(simd::Dot(mel_bank_[b], power), kLogFloor));
    for (int j = 0; j < opts_.num_ceps; ++j)
      m.MutableColumn(c_mfcc + j)[t] = simd::Dot(dct_[j], log_mel);
  }

  VoiceQuality(samples, f0, &m.MutableColumn(c_jitter),
               &m.MutableColumn(c_shimmer));
  return m;
}

LldMatrix ExtractLld(const Fragment &fragment) {
  return LldExtractor(fragment.sample_rate).Extract(fragment.samples);
}

LldMatrix ExtractLld(const AudioSignal &signal) {
  return LldExtractor(signal.sample_rate).Extract(signal.samples);
}

}  // namespace rrassess::dsp
