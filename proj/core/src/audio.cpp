// prosodyne/audio.cpp

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

#include "prosodyne/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "prosodyne/error.hpp"

namespace prosodyne::dsp {

namespace {

constexpr uint16_t kFormatPcm = 1;

uint16_t read_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t read_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

void put_u16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

[[noreturn]] void bad_wav(const std::filesystem::path& path,
                          const std::string& why) {
  throw Error(ErrorKind::kInput, "invalid WAV file " + path.string() + ": " + why);
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::kInput, "cannot open WAV file " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(file)),
                    std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const size_t n = bytes.size();

  if (n < 12 || std::memcmp(p, "RIFF", 4) != 0 ||
      std::memcmp(p + 8, "WAVE", 4) != 0) {
    bad_wav(path, "missing RIFF/WAVE header");
  }

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  const unsigned char* data = nullptr;
  uint32_t data_size = 0;

  // Walk chunks; chunk bodies are word-aligned.
  size_t pos = 12;
  while (pos + 8 <= n) {
    const unsigned char* hdr = p + pos;
    uint32_t chunk_size = read_u32(hdr + 4);
    const unsigned char* body = hdr + 8;
    if (pos + 8 + chunk_size > n) bad_wav(path, "truncated chunk");

    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16) bad_wav(path, "fmt chunk too small");
      format = read_u16(body);
      channels = read_u16(body + 2);
      sample_rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_size = chunk_size;
    }
    pos += 8 + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt) bad_wav(path, "missing fmt chunk");
  if (format != kFormatPcm) {
    bad_wav(path, "unsupported format tag " + std::to_string(format) +
                      " (only PCM accepted)");
  }
  if (channels != 1) {
    bad_wav(path, "expected mono, got " + std::to_string(channels) +
                      " channels");
  }
  if (bits != 16) {
    bad_wav(path, "expected 16-bit samples, got " + std::to_string(bits));
  }
  if (sample_rate == 0) bad_wav(path, "zero sample rate");
  if (data == nullptr) bad_wav(path, "missing data chunk");

  AudioBuffer out;
  out.sample_rate = static_cast<int>(sample_rate);
  const size_t num_samples = data_size / 2;
  out.samples.resize(num_samples);
  for (size_t i = 0; i < num_samples; ++i) {
    int16_t v = static_cast<int16_t>(read_u16(data + 2 * i));
    out.samples[i] = static_cast<double>(v) / 32768.0;
  }
  return out;
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& audio) {
  if (audio.sample_rate <= 0) {
    throw Error(ErrorKind::kConfig, "write_wav: sample_rate must be positive");
  }
  const uint32_t data_size =
      static_cast<uint32_t>(audio.samples.size() * 2);

  std::string out;
  out.reserve(44 + data_size);
  out.append("RIFF");
  put_u32(out, 36 + data_size);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<uint32_t>(audio.sample_rate));
  put_u32(out, static_cast<uint32_t>(audio.sample_rate) * 2);  // byte rate
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out.append("data");
  put_u32(out, data_size);
  for (double s : audio.samples) {
    double clamped = std::clamp(s, -1.0, 1.0);
    int v = static_cast<int>(std::lrint(clamped * 32767.0));
    put_u16(out, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorKind::kInput, "cannot open for writing: " + path.string());
  }
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) {
    throw Error(ErrorKind::kInput, "short write to " + path.string());
  }
}

}  // namespace prosodyne::dsp
