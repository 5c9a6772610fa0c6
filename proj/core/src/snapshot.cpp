#include "qg/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace qg {
namespace {

constexpr char kMagic[4] = {'Q', 'G', 'F', '1'};
constexpr std::size_t kHeaderSize = 4 + 4 + 8 + 1;

template <typename Word>
void put_le(std::vector<std::uint8_t>& out, Word word) {
  for (std::size_t b = 0; b < sizeof(Word); ++b) {
    out.push_back(static_cast<std::uint8_t>(word >> (8 * b)));
  }
}

template <typename Word>
Word get_le(const std::vector<std::uint8_t>& in, std::size_t& pos) {
  Word word = 0;
  for (std::size_t b = 0; b < sizeof(Word); ++b) {
    word |= static_cast<Word>(in[pos + b]) << (8 * b);
  }
  pos += sizeof(Word);
  return word;
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  put_le(out, std::bit_cast<std::uint64_t>(v));
}

double get_f64(const std::vector<std::uint8_t>& in, std::size_t& pos) {
  return std::bit_cast<double>(get_le<std::uint64_t>(in, pos));
}

std::vector<std::uint8_t> header(const Grid2D& grid, SnapshotKind kind, std::size_t payload) {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + payload);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_le(out, static_cast<std::uint32_t>(grid.n()));
  put_f64(out, grid.period());
  out.push_back(static_cast<std::uint8_t>(kind));
  return out;
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::vector<std::uint8_t> encode_snapshot(const RealField& field) {
  auto out = header(field.grid(), SnapshotKind::kReal, 8 * field.grid().size());
  for (double v : field.samples()) put_f64(out, v);
  return out;
}

std::vector<std::uint8_t> encode_snapshot(const SpectralField& field) {
  auto out = header(field.grid(), SnapshotKind::kSpectral, 16 * field.grid().size());
  for (const Complex& c : field.coeffs()) {
    put_f64(out, c.real());
    put_f64(out, c.imag());
  }
  return out;
}

Snapshot decode_snapshot(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderSize || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw std::invalid_argument("snapshot: bad magic or truncated header");
  }
  std::size_t pos = 4;
  const auto n = get_le<std::uint32_t>(bytes, pos);
  const double period = get_f64(bytes, pos);
  const std::uint8_t kind = bytes[pos++];
  if (n > (1u << 15)) throw std::invalid_argument("snapshot: unreasonable n");
  const Grid2D grid(static_cast<int>(n), period);
  const std::size_t count = grid.size();
  if (kind == static_cast<std::uint8_t>(SnapshotKind::kReal)) {
    if (bytes.size() != kHeaderSize + 8 * count) {
      throw std::invalid_argument("snapshot: payload size mismatch");
    }
    std::vector<double> samples(count);
    for (double& v : samples) v = get_f64(bytes, pos);
    return RealField(grid, std::move(samples));
  }
  if (kind == static_cast<std::uint8_t>(SnapshotKind::kSpectral)) {
    if (bytes.size() != kHeaderSize + 16 * count) {
      throw std::invalid_argument("snapshot: payload size mismatch");
    }
    std::vector<Complex> coeffs(count);
    for (Complex& c : coeffs) {
      const double re = get_f64(bytes, pos);
      const double im = get_f64(bytes, pos);
      c = Complex(re, im);
    }
    return SpectralField(grid, std::move(coeffs));
  }
  throw std::invalid_argument("snapshot: unknown kind " + std::to_string(kind));
}

void write_snapshot(const std::filesystem::path& path, const RealField& field) {
  write_bytes(path, encode_snapshot(field));
}

void write_snapshot(const std::filesystem::path& path, const SpectralField& field) {
  write_bytes(path, encode_snapshot(field));
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

}  // namespace qg
