#pragma once

#include <iosfwd>
#include <string>

#include "nls/field.hpp"

namespace nls {

// Text snapshot of a spectral field. Format:
//   nlsfield v1 M=<M>
//   k re im          (one line per mode, k increasing from -M/2)
// Values are written with 17 significant digits.
void write_snapshot(const SpectralField& f, std::ostream& out);
void write_snapshot_file(const SpectralField& f, const std::string& path);

SpectralField read_snapshot(std::istream& in);
SpectralField read_snapshot_file(const std::string& path);

}  // namespace nls
