#include "stego/wav.hpp"

#include <cassert>
#include <cstring>
#include <string>

#include "stego/errors.hpp"

namespace stego {

namespace {

const std::array<std::uint8_t, 4> kFmtId = {'f', 'm', 't', ' '};
const std::array<std::uint8_t, 4> kDataId = {'d', 'a', 't', 'a'};

bool id_is(ByteView bytes, std::size_t off, const char* id) {
    return std::memcmp(bytes.data() + off, id, 4) == 0;
}

void append_chunk(Bytes& out, const WavChunk& chunk) {
    out.insert(out.end(), chunk.id.begin(), chunk.id.end());
    push_u32le(out, static_cast<std::uint32_t>(chunk.payload.size()));
    out.insert(out.end(), chunk.payload.begin(), chunk.payload.end());
    if (chunk.payload.size() % 2 != 0) out.push_back(0);  // RIFF word alignment
}

}  // namespace

WavClip WavClip::make(std::uint32_t sample_rate, std::uint16_t channels,
                      std::vector<std::int16_t> samples) {
    WavClip clip;
    clip.sample_rate = sample_rate;
    clip.channels = channels;
    clip.samples = std::move(samples);

    WavChunk fmt;
    fmt.id = kFmtId;
    push_u16le(fmt.payload, 1);  // PCM
    push_u16le(fmt.payload, channels);
    push_u32le(fmt.payload, sample_rate);
    push_u32le(fmt.payload, sample_rate * channels * 2u);  // byte rate
    push_u16le(fmt.payload, static_cast<std::uint16_t>(channels * 2u));  // block align
    push_u16le(fmt.payload, bits_per_sample);
    clip.pre_data_chunks.push_back(std::move(fmt));
    return clip;
}

WavClip parse_wav(ByteView bytes) {
    if (bytes.size() < 4) throw Error(Errc::truncated, "file shorter than the RIFF magic");
    if (!id_is(bytes, 0, "RIFF")) throw Error(Errc::not_wav, "missing RIFF magic");
    if (bytes.size() < 12) throw Error(Errc::truncated, "file shorter than the RIFF header");
    if (!id_is(bytes, 8, "WAVE")) throw Error(Errc::not_wav, "missing WAVE form type");

    const std::uint64_t riff_end = 8ull + read_u32le(bytes, 4);
    if (riff_end > bytes.size())
        throw Error(Errc::truncated, "RIFF size exceeds file length");
    if (riff_end < bytes.size())
        throw Error(Errc::unsupported_wav, "trailing bytes after the RIFF payload");

    WavClip clip;
    bool have_fmt = false;
    bool have_data = false;
    std::uint64_t off = 12;
    while (off < riff_end) {
        if (off + 8 > riff_end) throw Error(Errc::truncated, "chunk header past RIFF end");
        WavChunk chunk;
        std::memcpy(chunk.id.data(), bytes.data() + off, 4);
        const std::uint32_t csize = read_u32le(bytes, off + 4);
        const std::uint64_t payload_off = off + 8;
        if (payload_off + csize > riff_end)
            throw Error(Errc::truncated, "chunk '" + std::string(chunk.id.begin(), chunk.id.end()) +
                                             "' overruns the RIFF payload");
        chunk.payload.assign(bytes.begin() + payload_off, bytes.begin() + payload_off + csize);

        if (chunk.id == kFmtId) {
            if (have_fmt) throw Error(Errc::unsupported_wav, "duplicate fmt chunk");
            if (csize < 16) throw Error(Errc::unsupported_wav, "fmt chunk too small");
            const ByteView fmt(chunk.payload);
            if (read_u16le(fmt, 0) != 1)
                throw Error(Errc::unsupported_wav, "only PCM (format tag 1) is supported");
            clip.channels = read_u16le(fmt, 2);
            clip.sample_rate = read_u32le(fmt, 4);
            if (read_u16le(fmt, 14) != WavClip::bits_per_sample)
                throw Error(Errc::unsupported_wav, "only 16-bit samples are supported");
            if (clip.channels == 0) throw Error(Errc::unsupported_wav, "zero channels");
            if (clip.sample_rate == 0) throw Error(Errc::unsupported_wav, "zero sample rate");
            clip.pre_data_chunks.push_back(std::move(chunk));
            have_fmt = true;
        } else if (chunk.id == kDataId) {
            if (!have_fmt) throw Error(Errc::unsupported_wav, "data chunk before fmt");
            if (have_data) throw Error(Errc::unsupported_wav, "duplicate data chunk");
            if (csize % (2u * clip.channels) != 0)
                throw Error(Errc::unsupported_wav, "data size is not a whole number of frames");
            clip.samples.resize(csize / 2);
            for (std::size_t i = 0; i < clip.samples.size(); ++i)
                clip.samples[i] = static_cast<std::int16_t>(read_u16le(chunk.payload, i * 2));
            have_data = true;
        } else {
            (have_data ? clip.post_data_chunks : clip.pre_data_chunks).push_back(std::move(chunk));
        }

        off = payload_off + csize;
        if (csize % 2 != 0) {
            if (off >= riff_end)
                throw Error(Errc::truncated, "odd-sized chunk missing its pad byte");
            if (bytes[off] != 0)
                throw Error(Errc::unsupported_wav, "nonzero chunk pad byte");
            ++off;
        }
    }
    if (!have_fmt) throw Error(Errc::unsupported_wav, "missing fmt chunk");
    if (!have_data) throw Error(Errc::unsupported_wav, "missing data chunk");
    return clip;
}

Bytes write_wav(const WavClip& clip) {
    assert(clip.channels == 0 || clip.samples.size() % clip.channels == 0);

    Bytes out;
    const char* riff = "RIFF";
    out.insert(out.end(), riff, riff + 4);
    push_u32le(out, 0);  // patched below
    const char* wave = "WAVE";
    out.insert(out.end(), wave, wave + 4);

    for (const auto& chunk : clip.pre_data_chunks) append_chunk(out, chunk);

    out.insert(out.end(), kDataId.begin(), kDataId.end());
    push_u32le(out, static_cast<std::uint32_t>(clip.samples.size() * 2));
    for (std::int16_t s : clip.samples) push_u16le(out, static_cast<std::uint16_t>(s));

    for (const auto& chunk : clip.post_data_chunks) append_chunk(out, chunk);

    store_u32le(out.data() + 4, static_cast<std::uint32_t>(out.size() - 8));
    return out;
}

}  // namespace stego
