#ifndef PPA_IMAGE_IO_HPP_
#define PPA_IMAGE_IO_HPP_

#include <stdexcept>
#include <string>

#include "ppa/bit_image.hpp"
#include "ppa/grey_image.hpp"

namespace ppa {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary PGM (P5, maxval 255). Images are always 256x256.
void write_pgm(const GreyImage& img, const std::string& path);
GreyImage read_pgm(const std::string& path);

// Binary PBM (P4). PBM stores 1 = black; our set bits are "white" marks,
// so bits are inverted on the way in and out.
void write_pbm(const BitImage& img, const std::string& path);
BitImage read_pbm(const std::string& path);

}  // namespace ppa

#endif  // PPA_IMAGE_IO_HPP_
