#pragma once

#include <complex>
#include <vector>

// Minimal radix-2 FFT. Sizes are restricted to powers of two everywhere in
// this project, which keeps the transform simple and fully deterministic.

namespace retone::fftops {

bool is_pow2(int n);

// In-place complex FFT, n a power of two. inverse=true applies the conjugate
// transform WITHOUT the 1/n normalization (callers scale when they need to).
void fft_inplace(std::complex<float>* x, int n, bool inverse);

// Real input of length n (power of two) to n/2+1 complex bins.
void rfft(const float* in, int n, std::complex<float>* out);

// Adjoint of rfft as used by spectral losses: given cograds (gr, gi) on the
// n/2+1 bins of an rfft, returns the gradient w.r.t. the n real inputs.
void rfft_adjoint(const float* grad_re, const float* grad_im, int n, float* grad_time);

// Inverse of rfft including the 1/n factor: spectrum of n/2+1 bins
// (interpreted with Hermitian symmetry) back to n real samples.
void irfft(const std::complex<float>* in, int n, float* out);

}  // namespace retone::fftops
