// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/dsp/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <cstring>
#include <mutex>
#include <utility>

namespace auris::dsp {
namespace {

// FFTW's planner is not thread-safe; execution on private buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

RealFft::RealFft(std::size_t size) : size_(size) {
  assert(size_ > 0);
  real_buf_ = fftw_alloc_real(size_);
  auto* cplx = fftw_alloc_complex(size_ / 2 + 1);
  complex_buf_ = cplx;
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(size_), real_buf_, cplx,
                                   FFTW_ESTIMATE);
  inv_plan_ = fftw_plan_dft_c2r_1d(static_cast<int>(size_), cplx, real_buf_,
                                   FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  if (fwd_plan_ || inv_plan_) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd_plan_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
    if (inv_plan_) fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
  }
  if (real_buf_) fftw_free(real_buf_);
  if (complex_buf_) fftw_free(static_cast<fftw_complex*>(complex_buf_));
}

RealFft::RealFft(RealFft&& other) noexcept { *this = std::move(other); }

RealFft& RealFft::operator=(RealFft&& other) noexcept {
  std::swap(size_, other.size_);
  std::swap(real_buf_, other.real_buf_);
  std::swap(complex_buf_, other.complex_buf_);
  std::swap(fwd_plan_, other.fwd_plan_);
  std::swap(inv_plan_, other.inv_plan_);
  return *this;
}

void RealFft::forward(std::span<const double> in, std::complex<double>* out) {
  assert(in.size() == size_);
  std::memcpy(real_buf_, in.data(), size_ * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  // fftw_complex and std::complex<double> share layout.
  std::memcpy(out, complex_buf_, bins() * sizeof(std::complex<double>));
}

void RealFft::inverse(std::span<const std::complex<double>> in, double* out) {
  assert(in.size() == bins());
  std::memcpy(complex_buf_, in.data(), bins() * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(inv_plan_));
  std::memcpy(out, real_buf_, size_ * sizeof(double));
}

}  // namespace auris::dsp
