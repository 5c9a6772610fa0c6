#pragma once

#include <cstdint>
#include <filesystem>
#include <variant>
#include <vector>

#include "qg/field.hpp"

namespace qg {

// Snapshot layout, all little-endian:
//   "QGF1" | u32 n | f64 L | u8 kind | payload
// kind 0: n*n f64 samples, row-major.
// kind 1: n*n (f64 re, f64 im) coefficients in FFT index order.
// The dealias fraction is not stored; decoded grids use the default.

enum class SnapshotKind : std::uint8_t { kReal = 0, kSpectral = 1 };

using Snapshot = std::variant<RealField, SpectralField>;

std::vector<std::uint8_t> encode_snapshot(const RealField& field);
std::vector<std::uint8_t> encode_snapshot(const SpectralField& field);
/// Throws std::invalid_argument on a malformed buffer.
Snapshot decode_snapshot(const std::vector<std::uint8_t>& bytes);

void write_snapshot(const std::filesystem::path& path, const RealField& field);
void write_snapshot(const std::filesystem::path& path, const SpectralField& field);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace qg
