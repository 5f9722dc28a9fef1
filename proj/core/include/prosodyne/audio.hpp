// prosodyne/audio.hpp

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

#ifndef PROSODYNE_AUDIO_HPP_
#define PROSODYNE_AUDIO_HPP_

#include <filesystem>
#include <vector>

namespace prosodyne::dsp {

// Mono PCM waveform. Samples are nominally in [-1, 1]; the canonical
// evaluation rate is 16 kHz (resampling is a pre-step, not done here).
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 16000;

  double duration_seconds() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// Reads a RIFF/WAVE file. Accepts only 16-bit little-endian PCM, mono.
// Multi-channel or non-PCM content throws Error(kInput).
AudioBuffer read_wav(const std::filesystem::path& path);

// Writes 16-bit PCM mono; samples are clamped to [-1, 1].
void write_wav(const std::filesystem::path& path, const AudioBuffer& audio);

}  // namespace prosodyne::dsp

#endif  // PROSODYNE_AUDIO_HPP_
