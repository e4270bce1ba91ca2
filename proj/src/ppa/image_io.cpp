#include "ppa/image_io.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

namespace ppa {

namespace {

// Skips whitespace and '#' comment lines, then reads one unsigned integer.
int read_header_int(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF || !isdigit(c)) throw IoError("malformed netpbm header");
    int v = 0;
    while (c != EOF && isdigit(c)) {
        v = v * 10 + (c - '0');
        c = in.get();
    }
    return v;
}

}  // namespace

void write_pgm(const GreyImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for write: " + path);
    out << "P5\n" << kSize << " " << kSize << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data()), kPixelCount);
    if (!out) throw IoError("write failed: " + path);
}

GreyImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    char m0 = static_cast<char>(in.get());
    char m1 = static_cast<char>(in.get());
    if (m0 != 'P' || m1 != '5') throw IoError("not a binary PGM: " + path);
    int w = read_header_int(in);
    int h = read_header_int(in);
    int maxval = read_header_int(in);
    if (w != kSize || h != kSize) throw IoError("PGM is not 256x256: " + path);
    if (maxval != 255) throw IoError("PGM maxval must be 255: " + path);
    GreyImage img;
    in.read(reinterpret_cast<char*>(img.data()), kPixelCount);
    if (in.gcount() != kPixelCount) throw IoError("short PGM payload: " + path);
    return img;
}

void write_pbm(const BitImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for write: " + path);
    out << "P4\n" << kSize << " " << kSize << "\n";
    std::vector<uint8_t> rowbuf(kSize / 8);
    for (int r = 0; r < kSize; ++r) {
        for (int b = 0; b < kSize / 8; ++b) {
            uint8_t byte = 0;
            for (int i = 0; i < 8; ++i) {
                // PBM is MSB-first within a byte and 1 = black.
                if (!img.get(r, b * 8 + i)) byte |= uint8_t(0x80 >> i);
            }
            rowbuf[b] = byte;
        }
        out.write(reinterpret_cast<const char*>(rowbuf.data()), rowbuf.size());
    }
    if (!out) throw IoError("write failed: " + path);
}

BitImage read_pbm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    char m0 = static_cast<char>(in.get());
    char m1 = static_cast<char>(in.get());
    if (m0 != 'P' || m1 != '4') throw IoError("not a binary PBM: " + path);
    int w = read_header_int(in);
    int h = read_header_int(in);
    if (w != kSize || h != kSize) throw IoError("PBM is not 256x256: " + path);
    BitImage img;
    std::vector<uint8_t> rowbuf(kSize / 8);
    for (int r = 0; r < kSize; ++r) {
        in.read(reinterpret_cast<char*>(rowbuf.data()), rowbuf.size());
        if (in.gcount() != static_cast<std::streamsize>(rowbuf.size())) {
            throw IoError("short PBM payload: " + path);
        }
        for (int b = 0; b < kSize / 8; ++b) {
            for (int i = 0; i < 8; ++i) {
                if (!(rowbuf[b] & (0x80 >> i))) img.set(r, b * 8 + i);
            }
        }
    }
    return img;
}

}  // namespace ppa
