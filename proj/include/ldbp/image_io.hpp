#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include <png.h>

#include "ldbp/error.hpp"
#include "ldbp/image.hpp"

namespace ldbp {

namespace detail {

// ---- binary PGM (P5, maxval 255) ----

struct PgmCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    int peek() const { return eof() ? -1 : bytes[pos]; }
    int get() { return eof() ? -1 : bytes[pos++]; }

    void skip_ws_and_comments() {
        while (!eof()) {
            int c = peek();
            if (c == '#') {
                while (!eof() && get() != '\n') {}
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    }

    long read_int(const char* what) {
        skip_ws_and_comments();
        if (eof() || peek() < '0' || peek() > '9')
            throw Error("load_frame: PGM: expected " + std::string(what) +
                        " at offset " + std::to_string(pos));
        long v = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (get() - '0');
            if (v > 1000000)
                throw Error("load_frame: PGM: " + std::string(what) +
                            " out of range at offset " + std::to_string(pos));
        }
        return v;
    }
};

inline GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
    PgmCursor cur{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw Error("load_frame: PGM: malformed header (missing P5 magic) at offset 0");
    cur.pos = 2;
    const long w = cur.read_int("width");
    const long h = cur.read_int("height");
    const long maxval = cur.read_int("maxval");
    if (w < 1 || h < 1)
        throw Error("load_frame: PGM: invalid dimensions " + std::to_string(w) + "x" +
                    std::to_string(h));
    if (maxval != 255)
        throw Error("load_frame: PGM: unsupported bit depth (maxval " +
                    std::to_string(maxval) + ", want 255) at offset " +
                    std::to_string(cur.pos));
    // exactly one whitespace byte separates the header from the payload
    int sep = cur.get();
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
        throw Error("load_frame: PGM: malformed header separator at offset " +
                    std::to_string(cur.pos - 1));
    const std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (bytes.size() - cur.pos < need)
        throw Error("load_frame: PGM: truncated payload at offset " + std::to_string(cur.pos) +
                    " (have " + std::to_string(bytes.size() - cur.pos) + " bytes, need " +
                    std::to_string(need) + ")");
    std::vector<std::uint8_t> px(bytes.begin() + cur.pos, bytes.begin() + cur.pos + need);
    return GrayImage::from_pixels(static_cast<int>(w), static_cast<int>(h), std::move(px));
}

// ---- 8-bit grayscale PNG via libpng ----

struct PngReader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;
    std::string error;
};

inline void png_read_fn(png_structp png, png_bytep out, png_size_t count) {
    auto* rd = static_cast<PngReader*>(png_get_io_ptr(png));
    if (rd->pos + count > rd->bytes.size()) {
        rd->error = "truncated payload at offset " + std::to_string(rd->pos);
        png_error(png, rd->error.c_str());
    }
    std::memcpy(out, rd->bytes.data() + rd->pos, count);
    rd->pos += count;
}

inline void png_error_fn(png_structp png, png_const_charp msg) {
    auto* rd = static_cast<PngReader*>(png_get_error_ptr(png));
    if (rd && rd->error.empty()) rd->error = msg ? msg : "unknown error";
    png_longjmp(png, 1);
}

inline void png_warn_fn(png_structp, png_const_charp) {}

inline GrayImage decode_png(std::span<const std::uint8_t> bytes) {
    PngReader reader{bytes};
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &reader,
                                             png_error_fn, png_warn_fn);
    if (!png) throw Error("load_frame: PNG: failed to initialize decoder");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error("load_frame: PNG: failed to initialize decoder");
    }

    std::vector<std::uint8_t> pixels;
    std::vector<png_bytep> rows;
    int w = 0, h = 0, depth = 0, color = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("load_frame: PNG: " +
                    (reader.error.empty() ? std::string("malformed stream") : reader.error));
    }

    png_set_read_fn(png, &reader, png_read_fn);
    png_read_info(png, info);

    w = static_cast<int>(png_get_image_width(png, info));
    h = static_cast<int>(png_get_image_height(png, info));
    depth = png_get_bit_depth(png, info);
    color = png_get_color_type(png, info);
    if (color != PNG_COLOR_TYPE_GRAY || depth != 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("load_frame: PNG: unsupported bit depth/color type (depth " +
                    std::to_string(depth) + ", color type " + std::to_string(color) +
                    "; want 8-bit grayscale)");
    }

    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    pixels.resize(static_cast<std::size_t>(w) * h);
    rows.resize(h);
    for (int y = 0; y < h; ++y)
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * w;

    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    return GrayImage::from_pixels(w, h, std::move(pixels));
}

} // namespace detail

/// Decodes an in-memory image file. Accepts 8-bit grayscale PNG and
/// binary PGM (P5, maxval 255); the format is chosen by magic bytes.
inline GrayImage load_frame(std::span<const std::uint8_t> bytes) {
    static const std::uint8_t png_magic[4] = {0x89, 'P', 'N', 'G'};
    if (bytes.size() >= 4 && std::memcmp(bytes.data(), png_magic, 4) == 0)
        return detail::decode_png(bytes);
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5')
        return detail::decode_pgm(bytes);
    throw Error("load_frame: unrecognized image format (expected PNG or binary PGM)");
}

inline GrayImage load_frame(const std::vector<std::uint8_t>& bytes) {
    return load_frame(std::span<const std::uint8_t>(bytes));
}

inline GrayImage load_frame_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("load_frame: cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    try {
        return load_frame(bytes);
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " [" + path.string() + "]");
    }
}

inline std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    std::string header = "P5\n" + std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

inline void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("save_pgm: cannot open " + path.string() + " for writing");
    auto bytes = encode_pgm(img);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("save_pgm: write failed for " + path.string());
}

inline bool is_image_file(const std::filesystem::path& p) {
    auto ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".pgm";
}

/// Loads an explicitly ordered list of frame files into a volume.
inline VideoVolume load_sequence_files(const std::vector<std::filesystem::path>& files) {
    if (files.empty()) throw Error("load_sequence: no frame files given");
    std::vector<GrayImage> frames;
    frames.reserve(files.size());
    for (const auto& f : files)
        frames.push_back(load_frame_file(f));
    try {
        return build_volume(std::move(frames));
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " [sequence starting at " +
                    files.front().string() + "]");
    }
}

/// Loads all PNG/PGM files of a directory in lexicographic file-name order.
inline VideoVolume load_sequence_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw Error("load_sequence: not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && is_image_file(entry.path()))
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
    if (files.empty())
        throw Error("load_sequence: no PNG/PGM frames in " + dir.string());
    return load_sequence_files(files);
}

} // namespace ldbp
