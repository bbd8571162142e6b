// stegkit: command-line front end for the BMP LSB codec and the WAV echo codec.
// Every action prints one JSON summary line to stdout; errors go to stderr as
// JSON with a documented exit code:
//   0 ok, 2 format error, 3 capacity error, 4 missing/corrupt stego metadata,
//   5 usage or I/O error.
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stego/bmp.hpp"
#include "stego/echo.hpp"
#include "stego/errors.hpp"
#include "stego/io.hpp"
#include "stego/lsb.hpp"
#include "stego/metrics.hpp"
#include "stego/wav.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code_for(stego::Errc code) {
    switch (code) {
        case stego::Errc::not_bmp:
        case stego::Errc::unsupported_bmp:
        case stego::Errc::truncated:
        case stego::Errc::not_wav:
        case stego::Errc::unsupported_wav:
            return 2;
        case stego::Errc::capacity_exceeded:
        case stego::Errc::too_many_bits:
        case stego::Errc::extension_too_long:
        case stego::Errc::invalid_extension:
        case stego::Errc::empty_payload:
            return 3;
        case stego::Errc::not_genuine_stego:
        case stego::Errc::corrupt_metadata:
            return 4;
        default:
            return 5;
    }
}

json finite_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::string extension_from_path(const fs::path& path) {
    const std::string name = path.filename().string();
    const auto dot = name.rfind('.');
    if (dot == std::string::npos || dot + 1 == name.size()) return "";
    return name.substr(dot + 1);
}

stego::BitSequence bytes_to_bits(stego::ByteView bytes) {
    stego::BitSequence bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes)
        for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1);
    return bits;
}

stego::Bytes bits_to_bytes(const stego::BitSequence& bits) {
    stego::Bytes bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    return bytes;
}

struct ImageOpts {
    std::string cover;
    std::string payload;
    std::string stego;
    std::string out;
    std::string out_dir = ".";
    std::string ext;
    bool ext_given = false;
};

struct AudioOpts {
    std::string cover;
    std::string bits;
    std::string stego;
    std::string out;
    std::size_t nbits = 0;
    stego::EchoParams params;
};

bool g_verbose = false;

void note(const std::string& message) {
    if (g_verbose) std::cerr << "stegkit: " << message << "\n";
}

json run_embed(const ImageOpts& o) {
    const auto cover_bytes = stego::read_file(o.cover);
    const auto cover = stego::parse_bmp(cover_bytes);
    note("cover carrier " + std::to_string(cover.carrier.size()) + " bytes");

    stego::Payload payload;
    payload.data = stego::read_file(o.payload);
    payload.extension = o.ext_given ? o.ext : extension_from_path(o.payload);
    if (payload.extension.size() > 3 && !o.ext_given)
        throw stego::Error(stego::Errc::extension_too_long,
                           "payload filename extension exceeds 3 characters; pass --ext");

    const auto stego_img = stego::embed(cover, payload);
    const auto stego_bytes = stego::write_bmp(stego_img);
    stego::write_file_atomic(o.out, stego_bytes);

    const auto report = stego::distortion(cover_bytes, stego_bytes);
    return {
        {"action", "embed"},
        {"status", "ok"},
        {"cover", o.cover},
        {"payload", o.payload},
        {"out", o.out},
        {"payload_bytes", payload.data.size()},
        {"extension", payload.extension},
        {"pixel_spacing", stego::pixel_spacing(cover.carrier.size(), payload.data.size())},
        {"capacity_bytes", stego::capacity(cover)},
        {"changed_bytes", report.changed_count},
        {"psnr_db", finite_or_null(report.psnr_db)},
    };
}

json run_extract(const ImageOpts& o) {
    const auto image = stego::parse_bmp(stego::read_file(o.stego));
    const auto payload = stego::extract(image);

    const std::string name = payload.extension.empty() ? "org" : "org." + payload.extension;
    const fs::path out = fs::path(o.out_dir) / name;
    if (!o.out_dir.empty()) fs::create_directories(o.out_dir);
    stego::write_file_atomic(out, payload.data);
    return {
        {"action", "extract"},
        {"status", "ok"},
        {"stego", o.stego},
        {"out", out.string()},
        {"payload_bytes", payload.data.size()},
        {"extension", payload.extension},
    };
}

json run_inspect(const ImageOpts& o) {
    const auto image = stego::parse_bmp(stego::read_file(o.stego));
    const auto report = stego::inspect(image);

    json j = {
        {"action", "inspect"},
        {"status", "ok"},
        {"stego", o.stego},
        {"marker_present", report.marker_present},
        {"plausible", report.plausible},
        {"note", report.note},
    };
    if (report.metadata) {
        const auto& md = *report.metadata;
        j["payload_size"] = md.payload_size;
        j["pixel_spacing"] = md.pixel_spacing;
        std::string ext, hex;
        bool clean = true;
        for (std::uint8_t c : md.extension) {
            static const char* digits = "0123456789abcdef";
            hex += digits[c >> 4];
            hex += digits[c & 0xF];
            if (c == 0) continue;
            if (c < 0x20 || c >= 0x7F) clean = false;
            ext.push_back(static_cast<char>(c));
        }
        if (clean)
            j["extension"] = ext;
        else
            j["extension_hex"] = hex;
    }
    return j;
}

json run_capacity(const ImageOpts& o) {
    const auto cover = stego::parse_bmp(stego::read_file(o.cover));
    return {
        {"action", "capacity"},
        {"status", "ok"},
        {"cover", o.cover},
        {"capacity_bytes", stego::capacity(cover)},
        {"carrier_bytes", cover.carrier.size()},
        {"groups", cover.carrier.size() / 3},
    };
}

json run_audio_embed(const AudioOpts& o) {
    const auto cover = stego::parse_wav(stego::read_file(o.cover));
    const auto bits = bytes_to_bits(stego::read_file(o.bits));
    note("cover frames " + std::to_string(cover.frames()) + ", bits " + std::to_string(bits.size()));

    const auto stego_clip = stego::echo_embed(cover, bits, o.params);
    stego::write_file_atomic(o.out, stego::write_wav(stego_clip));
    return {
        {"action", "audio-embed"},
        {"status", "ok"},
        {"cover", o.cover},
        {"bits", o.bits},
        {"out", o.out},
        {"bit_count", bits.size()},
        {"segment_len", o.params.segment_len},
        {"delay0", o.params.delay_zero},
        {"delay1", o.params.delay_one},
        {"decay", o.params.decay},
    };
}

json run_audio_extract(const AudioOpts& o) {
    const auto clip = stego::parse_wav(stego::read_file(o.stego));
    const auto bits = stego::echo_extract(clip, o.nbits, o.params);
    stego::write_file_atomic(o.out, bits_to_bytes(bits));
    return {
        {"action", "audio-extract"},
        {"status", "ok"},
        {"stego", o.stego},
        {"out", o.out},
        {"bit_count", bits.size()},
    };
}

json run_metrics(const std::string& a_path, const std::string& b_path) {
    const auto a = stego::read_file(a_path);
    const auto b = stego::read_file(b_path);

    // Two parseable WAVs are compared sample-wise (peak 32767); anything
    // else is compared as raw bytes (peak 255).
    std::string domain = "bytes";
    stego::DistortionReport report;
    try {
        const auto wav_a = stego::parse_wav(a);
        const auto wav_b = stego::parse_wav(b);
        report = stego::distortion(std::span<const std::int16_t>(wav_a.samples),
                                   std::span<const std::int16_t>(wav_b.samples));
        domain = "samples";
    } catch (const stego::Error&) {
        report = stego::distortion(stego::ByteView(a), stego::ByteView(b));
    }
    return {
        {"action", "metrics"},
        {"status", "ok"},
        {"a", a_path},
        {"b", b_path},
        {"domain", domain},
        {"mse", report.mse},
        {"psnr_db", finite_or_null(report.psnr_db)},
        {"identical", report.changed_count == 0},
        {"max_abs_diff", report.max_abs_diff},
        {"changed", report.changed_count},
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stegkit: hide payload files in 24-bit BMP images (2-3-3 LSB substitution with "
                 "pixel spacing) and bit sequences in PCM WAV audio (echo hiding)"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", g_verbose, "print progress notes to stderr");

    ImageOpts img;
    AudioOpts audio;
    std::string metrics_a, metrics_b;

    auto* embed = app.add_subcommand("embed", "Hide a payload file inside a BMP cover");
    embed->add_option("--cover", img.cover, "cover BMP")->required();
    embed->add_option("--payload", img.payload, "payload file")->required();
    embed->add_option("--out", img.out, "output stego BMP")->required();
    embed->add_option("--ext", img.ext, "stored extension (default: payload filename suffix)");

    auto* extract = app.add_subcommand("extract", "Recover the payload from a stego BMP");
    extract->add_option("--stego", img.stego, "stego BMP")->required();
    extract->add_option("--out-dir", img.out_dir, "directory for the recovered payload (org.<ext>)");

    auto* inspect = app.add_subcommand("inspect", "Report stego metadata without extracting");
    inspect->add_option("--stego", img.stego, "BMP to inspect")->required();

    auto* capacity = app.add_subcommand("capacity", "Print the embeddable payload bound for a cover");
    capacity->add_option("--cover", img.cover, "cover BMP")->required();

    auto add_echo_params = [&](CLI::App* cmd) {
        cmd->add_option("--delay0", audio.params.delay_zero, "echo delay for bit 0 (samples)");
        cmd->add_option("--delay1", audio.params.delay_one, "echo delay for bit 1 (samples)");
        cmd->add_option("--decay", audio.params.decay, "echo amplitude ratio in (0,1)");
        cmd->add_option("--segment", audio.params.segment_len, "segment length (samples)");
    };

    auto* audio_embed = app.add_subcommand("audio-embed", "Hide a bit file inside a PCM WAV");
    audio_embed->add_option("--cover", audio.cover, "cover WAV")->required();
    audio_embed->add_option("--bits", audio.bits, "bits file (raw bytes, MSB first)")->required();
    audio_embed->add_option("--out", audio.out, "output stego WAV")->required();
    add_echo_params(audio_embed);

    auto* audio_extract = app.add_subcommand("audio-extract", "Recover bits from a stego WAV");
    audio_extract->add_option("--stego", audio.stego, "stego WAV")->required();
    audio_extract->add_option("--nbits", audio.nbits, "number of bits to read")->required();
    audio_extract->add_option("--out", audio.out, "output bits file");
    add_echo_params(audio_extract);

    auto* metrics = app.add_subcommand("metrics", "Distortion metrics between two files");
    metrics->add_option("--a", metrics_a, "first file")->required();
    metrics->add_option("--b", metrics_b, "second file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 5;
    }

    img.ext_given = embed->count("--ext") > 0;
    if (audio.out.empty()) audio.out = "extracted.bits";

    std::string action = app.get_subcommands().front()->get_name();
    try {
        json summary;
        if (*embed) summary = run_embed(img);
        else if (*extract) summary = run_extract(img);
        else if (*inspect) summary = run_inspect(img);
        else if (*capacity) summary = run_capacity(img);
        else if (*audio_embed) summary = run_audio_embed(audio);
        else if (*audio_extract) summary = run_audio_extract(audio);
        else summary = run_metrics(metrics_a, metrics_b);
        std::cout << summary.dump() << "\n";
        return 0;
    } catch (const stego::Error& e) {
        const json err = {{"action", action},
                          {"status", "error"},
                          {"error", stego::errc_name(e.code())},
                          {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        const json err = {
            {"action", action}, {"status", "error"}, {"error", "IoError"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 5;
    }
}
