// prosodyne/fft.hpp

// Copyright 2026 The Prosodyne Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROSODYNE_FFT_HPP_
#define PROSODYNE_FFT_HPP_

#include <complex>
#include <span>
#include <vector>

namespace prosodyne::dsp {

int next_pow2(int n);

// In-place iterative radix-2 transform; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& x);

// |FFT| of a real frame zero-padded to n_fft (power of two, >= frame size).
// Returns the n_fft/2 + 1 non-redundant magnitudes.
std::vector<double> magnitude_spectrum(std::span<const double> frame,
                                       int n_fft);

}  // namespace prosodyne::dsp

#endif  // PROSODYNE_FFT_HPP_
