// prosodyne/framing.hpp

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

#ifndef PROSODYNE_FRAMING_HPP_
#define PROSODYNE_FRAMING_HPP_

#include <vector>

#include "prosodyne/audio.hpp"
#include "prosodyne/matrix.hpp"

namespace prosodyne::dsp {

// Window/hop pair in milliseconds. Cepstral default is 25/10 ms; pitch
// tracking uses a 12.5 ms hop.
struct FrameSpec {
  double window_ms = 25.0;
  double hop_ms = 10.0;

  int window_samples(int sample_rate) const;
  int hop_samples(int sample_rate) const;

  // Requires 0 < hop <= window; throws Error(kConfig) otherwise.
  void validate() const;
};

// floor((num_samples - window) / hop) + 1. Requires num_samples >= window
// (Error(kInput) otherwise: the signal is unanalyzable).
int frame_count(size_t num_samples, int window, int hop);

// Periodic Hann window of the given length.
std::vector<double> hann_window(int length);

// Cuts the signal into Hann-windowed frames, no padding or reflection.
// Result is frame_count x window_samples.
Matrix frame_signal(const AudioBuffer& audio, const FrameSpec& spec);

}  // namespace prosodyne::dsp

#endif  // PROSODYNE_FRAMING_HPP_
