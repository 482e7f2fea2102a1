// dsp/wav.cc

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

#include "rrassess/dsp/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>

#include "rrassess/common/error.h"

namespace rrassess::dsp {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t ReadLe32(std::string_view b, size_t off) {
  return static_cast<uint32_t>(static_cast<unsigned char>(b[off])) |
         static_cast<uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8 |
         static_cast<uint32_t>(static_cast<unsigned char>(b[off + 2])) << 16 |
         static_cast<uint32_t>(static_cast<unsigned char>(b[off + 3])) << 24;
}

uint16_t ReadLe16(std::string_view b, size_t off) {
  return static_cast<uint16_t>(
      static_cast<unsigned char>(b[off]) |
      static_cast<unsigned char>(b[off + 1]) << 8);
}

void PutLe32(std::string *out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutLe16(std::string *out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>(v >> 8));
}

}  // namespace

AudioSignal ParseWav(std::string_view b, const std::string &name) {
  if (b.size() < 12 || b.substr(0, 4) != "RIFF" || b.substr(8, 4) != "WAVE")
    throw DataError(name + ": not a RIFF/WAVE file");
  size_t pos = 12;
  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  while (pos + 8 <= b.size()) {
    std::string_view id = b.substr(pos, 4);
    uint32_t size = ReadLe32(b, pos + 4);
    size_t body = pos + 8;
    if (id == "fmt ") {
      if (size < 16 || body + size > b.size())
        throw DataError(name + ": truncated fmt chunk");
      format = ReadLe16(b, body);
      channels = ReadLe16(b, body + 2);
      rate = ReadLe32(b, body + 4);
      bits = ReadLe16(b, body + 14);
      if (format == kFormatExtensible) {
        if (size < 40) throw DataError(name + ": truncated extensible fmt");
        format = ReadLe16(b, body + 24);
      }
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw DataError(name + ": data chunk before fmt chunk");
      if (format != kFormatPcm || bits != 16)
        throw DataError(name + ": unsupported encoding (format " +
                        std::to_string(format) + ", " + std::to_string(bits) +
                        " bits); only 16-bit PCM is accepted");
      if (channels != 1 && channels != 2)
        throw DataError(name + ": unsupported channel count " +
                        std::to_string(channels));
      if (rate < static_cast<uint32_t>(kMinSampleRate))
        throw DataError(name + ": sample rate " + std::to_string(rate) +
                        " Hz is below 8000 Hz");
      if (body + size > b.size())
        throw DataError(name + ": truncated data chunk");
      size_t frame_bytes = 2u * channels;
      if (size % frame_bytes != 0)
        throw DataError(name + ": truncated sample frame");
      size_t frames = size / frame_bytes;
      AudioSignal sig;
      sig.sample_rate = static_cast<int>(rate);
      sig.samples.resize(frames);
      for (size_t i = 0; i < frames; ++i) {
        double acc = 0.0;
        for (uint16_t c = 0; c < channels; ++c) {
          auto raw = static_cast<int16_t>(
              ReadLe16(b, body + i * frame_bytes + 2u * c));
          acc += raw / 32768.0;
        }
        sig.samples[i] = acc / channels;
      }
      return sig;
    }
    pos = body + size + (size & 1u);
  }
  if (!have_fmt) throw DataError(name + ": missing fmt chunk");
  throw DataError(name + ": missing data chunk");
}

AudioSignal LoadWav(const std::string &path) {
  return ParseWav(ReadFileBytes(path), path);
}

std::string EncodeWav16(const AudioSignal &signal) {
  const uint32_t data_bytes = static_cast<uint32_t>(signal.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutLe32(&out, 36 + data_bytes);
  out += "WAVEfmt ";
  PutLe32(&out, 16);
  PutLe16(&out, kFormatPcm);
  PutLe16(&out, 1);
  PutLe32(&out, static_cast<uint32_t>(signal.sample_rate));
  PutLe32(&out, static_cast<uint32_t>(signal.sample_rate) * 2);
  PutLe16(&out, 2);
  PutLe16(&out, 16);
  out += "data";
  PutLe32(&out, data_bytes);
  for (double s : signal.samples) {
    double c = std::clamp(s, -1.0, 1.0);
    long v = std::min(std::lround(c * 32768.0), 32767L);
    PutLe16(&out, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  return out;
}

void SaveWav(const std::string &path, const AudioSignal &signal) {
  WriteFileBytes(path, EncodeWav16(signal));
}

}  // namespace rrassess::dsp
