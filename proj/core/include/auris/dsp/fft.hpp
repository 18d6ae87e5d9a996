// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace auris::dsp {

// One-dimensional real FFT of a fixed size, backed by FFTW. Plans and
// workspace are owned by the instance, so construction is the expensive
// step and transforms are cheap to repeat. An instance is not thread-safe;
// use one per thread.
class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();

  RealFft(RealFft&& other) noexcept;
  RealFft& operator=(RealFft&& other) noexcept;
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return size_; }
  std::size_t bins() const { return size_ / 2 + 1; }

  // out must hold bins() complex values. Unnormalised DFT.
  void forward(std::span<const double> in, std::complex<double>* out);

  // in must hold bins() complex values; out size() doubles. Unnormalised
  // inverse (a forward/inverse round trip scales by size()).
  void inverse(std::span<const std::complex<double>> in, double* out);

 private:
  std::size_t size_ = 0;
  double* real_buf_ = nullptr;
  void* complex_buf_ = nullptr;  // fftw_complex*
  void* fwd_plan_ = nullptr;     // fftw_plan
  void* inv_plan_ = nullptr;     // fftw_plan
};

}  // namespace auris::dsp
