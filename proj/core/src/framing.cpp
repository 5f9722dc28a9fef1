// prosodyne/framing.cpp

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

#include "prosodyne/framing.hpp"

#include <cmath>
#include <string>

#include "prosodyne/error.hpp"

namespace prosodyne::dsp {

int FrameSpec::window_samples(int sample_rate) const {
  return static_cast<int>(std::llround(window_ms * sample_rate / 1000.0));
}

int FrameSpec::hop_samples(int sample_rate) const {
  return static_cast<int>(std::llround(hop_ms * sample_rate / 1000.0));
}

void FrameSpec::validate() const {
  if (!(hop_ms > 0.0) || !(window_ms > 0.0) || hop_ms > window_ms) {
    throw Error(ErrorKind::kConfig,
                "frame spec requires 0 < hop (" + std::to_string(hop_ms) +
                    " ms) <= window (" + std::to_string(window_ms) + " ms)");
  }
}

int frame_count(size_t num_samples, int window, int hop) {
  if (window <= 0 || hop <= 0) {
    throw Error(ErrorKind::kConfig, "window and hop must be positive");
  }
  if (num_samples < static_cast<size_t>(window)) {
    throw Error(ErrorKind::kInput,
                "signal of " + std::to_string(num_samples) +
                    " samples is shorter than one window (" +
                    std::to_string(window) + "); nothing to analyze");
  }
  return static_cast<int>((num_samples - window) / hop) + 1;
}

std::vector<double> hann_window(int length) {
  std::vector<double> w(length);
  for (int i = 0; i < length; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / length);
  }
  return w;
}

Matrix frame_signal(const AudioBuffer& audio, const FrameSpec& spec) {
  spec.validate();
  if (audio.sample_rate <= 0) {
    throw Error(ErrorKind::kConfig, "sample_rate must be positive");
  }
  const int window = spec.window_samples(audio.sample_rate);
  const int hop = spec.hop_samples(audio.sample_rate);
  const int num_frames = frame_count(audio.samples.size(), window, hop);
  const std::vector<double> hann = hann_window(window);

  Matrix frames(num_frames, window);
  for (int t = 0; t < num_frames; ++t) {
    const double* src = audio.samples.data() + static_cast<size_t>(t) * hop;
    auto dst = frames.row(t);
    for (int i = 0; i < window; ++i) dst[i] = src[i] * hann[i];
  }
  return frames;
}

}  // namespace prosodyne::dsp
