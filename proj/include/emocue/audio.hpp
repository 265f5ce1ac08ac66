#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "emocue/errors.hpp"

namespace emocue {

// Mono PCM audio. Samples are doubles so repeated gain operations stay stable
// well below the 16-bit quantization floor.
struct AudioBuffer {
    int sample_rate = 16000;
    std::vector<double> samples;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    double duration_ms() const {
        return sample_rate > 0 ? 1000.0 * static_cast<double>(samples.size()) / sample_rate : 0.0;
    }
};

namespace detail {

inline void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

inline void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

inline std::uint16_t get_u16(const std::string& b, std::size_t off) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[off]) |
                                      (static_cast<unsigned char>(b[off + 1]) << 8));
}

inline std::uint32_t get_u32(const std::string& b, std::size_t off) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(b[off])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 3])) << 24);
}

} // namespace detail

// PCM16 LE mono only. Decode divides by 32768; encode multiplies by 32768 and
// clamps to the int16 range, so decode(encode(x)) is byte-exact for canonical
// files and 1.0 still lands on 0x7FFF.
inline AudioBuffer decode_wav(const std::string& bytes) {
    using namespace detail;
    if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 || bytes.compare(8, 4, "WAVE") != 0)
        throw MalformedWav("not a RIFF/WAVE file");

    bool have_fmt = false;
    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    std::size_t data_off = 0, data_len = 0;
    bool have_data = false;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::string id = bytes.substr(pos, 4);
        const std::uint32_t len = get_u32(bytes, pos + 4);
        pos += 8;
        if (pos + len > bytes.size()) throw MalformedWav("truncated chunk '" + id + "'");
        if (id == "fmt ") {
            if (len < 16) throw MalformedWav("fmt chunk too short");
            format = get_u16(bytes, pos);
            channels = get_u16(bytes, pos + 2);
            rate = get_u32(bytes, pos + 4);
            bits = get_u16(bytes, pos + 14);
            have_fmt = true;
        } else if (id == "data") {
            data_off = pos;
            data_len = len;
            have_data = true;
        }
        pos += len + (len & 1); // chunks are word-aligned
    }
    if (!have_fmt) throw MalformedWav("missing fmt chunk");
    if (!have_data) throw MalformedWav("missing data chunk");
    if (format != 1) throw UnsupportedFormat("only PCM supported, got format " + std::to_string(format));
    if (channels != 1) throw UnsupportedFormat("only mono supported, got " + std::to_string(channels) + " channels");
    if (bits != 16) throw UnsupportedFormat("only 16-bit supported, got " + std::to_string(bits));
    if (rate == 0) throw MalformedWav("zero sample rate");
    if (data_len % 2 != 0) throw MalformedWav("odd data chunk size");

    AudioBuffer buf;
    buf.sample_rate = static_cast<int>(rate);
    buf.samples.resize(data_len / 2);
    for (std::size_t i = 0; i < buf.samples.size(); ++i) {
        const auto u = get_u16(bytes, data_off + 2 * i);
        buf.samples[i] = static_cast<std::int16_t>(u) / 32768.0;
    }
    return buf;
}

inline std::string encode_wav(const AudioBuffer& buf) {
    using namespace detail;
    const std::uint32_t data_len = static_cast<std::uint32_t>(buf.samples.size() * 2);
    std::string out;
    out.reserve(44 + data_len);
    out += "RIFF";
    put_u32(out, 36 + data_len);
    out += "WAVE";
    out += "fmt ";
    put_u32(out, 16);
    put_u16(out, 1); // PCM
    put_u16(out, 1); // mono
    put_u32(out, static_cast<std::uint32_t>(buf.sample_rate));
    put_u32(out, static_cast<std::uint32_t>(buf.sample_rate) * 2u);
    put_u16(out, 2);  // block align
    put_u16(out, 16); // bits
    out += "data";
    put_u32(out, data_len);
    for (double s : buf.samples) {
        const double c = std::clamp(s, -1.0, 1.0);
        auto v = static_cast<long>(std::llround(c * 32768.0));
        v = std::clamp(v, -32768L, 32767L);
        put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
    }
    return out;
}

inline AudioBuffer resample(const AudioBuffer& buf, int target_rate) {
    if (target_rate <= 0) throw Error("resample: target rate must be positive");
    if (buf.sample_rate == target_rate || buf.samples.empty()) {
        AudioBuffer out = buf;
        out.sample_rate = target_rate;
        return out;
    }
    const std::size_t n = buf.samples.size();
    const auto out_len = static_cast<std::size_t>(
        std::llround(static_cast<double>(n) * target_rate / buf.sample_rate));
    AudioBuffer out;
    out.sample_rate = target_rate;
    out.samples.resize(out_len);
    const double step = static_cast<double>(buf.sample_rate) / target_rate;
    for (std::size_t i = 0; i < out_len; ++i) {
        const double pos = i * step;
        auto idx = static_cast<std::size_t>(pos);
        if (idx >= n - 1) {
            out.samples[i] = buf.samples[n - 1];
        } else {
            const double frac = pos - static_cast<double>(idx);
            out.samples[i] = buf.samples[idx] * (1.0 - frac) + buf.samples[idx + 1] * frac;
        }
    }
    return out;
}

inline AudioBuffer time_stretch(const AudioBuffer& buf, double factor) {
    if (factor < 1.0) throw Error("time_stretch: factor must be >= 1.0");
    if (factor == 1.0 || buf.samples.empty()) return buf;
    const std::size_t n = buf.samples.size();
    const auto out_len = static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor));
    AudioBuffer out;
    out.sample_rate = buf.sample_rate;
    out.samples.resize(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        const double pos = static_cast<double>(i) / factor;
        auto idx = static_cast<std::size_t>(pos);
        if (idx >= n - 1) {
            out.samples[i] = buf.samples[n - 1];
        } else {
            const double frac = pos - static_cast<double>(idx);
            out.samples[i] = buf.samples[idx] * (1.0 - frac) + buf.samples[idx + 1] * frac;
        }
    }
    return out;
}

// Sample count rounds half away from zero: (250 ms, 22050 Hz) -> 5513.
inline AudioBuffer silence(int duration_ms, int rate) {
    if (duration_ms < 0) throw Error("silence: negative duration");
    if (rate <= 0) throw Error("silence: sample rate must be positive");
    AudioBuffer out;
    out.sample_rate = rate;
    const auto count = (static_cast<std::int64_t>(duration_ms) * rate + 500) / 1000;
    out.samples.assign(static_cast<std::size_t>(count), 0.0);
    return out;
}

inline AudioBuffer concat(const std::vector<AudioBuffer>& buffers) {
    AudioBuffer out;
    bool rate_set = false;
    std::size_t total = 0;
    for (const auto& b : buffers) {
        if (!rate_set) {
            out.sample_rate = b.sample_rate;
            rate_set = true;
        } else if (b.sample_rate != out.sample_rate) {
            throw RateMismatch("concat: " + std::to_string(b.sample_rate) + " Hz buffer in a " +
                               std::to_string(out.sample_rate) + " Hz sequence");
        }
        total += b.samples.size();
    }
    out.samples.reserve(total);
    for (const auto& b : buffers)
        out.samples.insert(out.samples.end(), b.samples.begin(), b.samples.end());
    return out;
}

inline AudioBuffer normalize_peak(const AudioBuffer& buf, double target_peak = 0.89) {
    if (target_peak <= 0.0 || target_peak > 1.0)
        throw Error("normalize_peak: target must be in (0, 1]");
    double peak = 0.0;
    for (double s : buf.samples) peak = std::max(peak, std::abs(s));
    if (peak == 0.0) return buf;
    AudioBuffer out;
    out.sample_rate = buf.sample_rate;
    out.samples.reserve(buf.samples.size());
    const double gain = target_peak / peak;
    for (double s : buf.samples) out.samples.push_back(s * gain);
    return out;
}

} // namespace emocue
