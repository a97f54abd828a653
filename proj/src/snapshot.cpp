#include "gmhd/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gmhd {

namespace {

constexpr char kMagic[4] = {'G', 'M', 'H', 'D'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::istream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

}  // namespace

void write_snapshot(const std::string& path, const SpectralField& f,
                    double time) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(kMagic, 4);
  write_u32(out, kVersion);
  write_u32(out, std::uint32_t(f.grid().dim()));
  write_u32(out, std::uint32_t(f.grid().points_per_axis()));
  write_u32(out, std::uint32_t(f.components()));
  out.write(reinterpret_cast<const char*>(&time), sizeof time);
  for (int c = 0; c < f.components(); ++c) {
    const auto& comp = f.component(c);
    out.write(reinterpret_cast<const char*>(comp.data()),
              std::streamsize(comp.size() * sizeof(comp[0])));
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not a field snapshot: " + path);
  std::uint32_t version = read_u32(in);
  if (version != kVersion)
    throw std::runtime_error("unsupported snapshot version in " + path);
  std::uint32_t dim = read_u32(in);
  std::uint32_t n = read_u32(in);
  std::uint32_t ncomp = read_u32(in);
  double time = 0.0;
  in.read(reinterpret_cast<char*>(&time), sizeof time);
  if (!in) throw std::runtime_error("truncated snapshot header: " + path);
  if (ncomp < 1 || ncomp > 16)
    throw std::runtime_error("implausible component count in " + path);

  Grid grid{int(dim), int(n)};
  SpectralField f(grid, int(ncomp));
  for (std::uint32_t c = 0; c < ncomp; ++c) {
    auto& comp = f.component(int(c));
    in.read(reinterpret_cast<char*>(comp.data()),
            std::streamsize(comp.size() * sizeof(comp[0])));
  }
  if (!in) throw std::runtime_error("truncated snapshot data: " + path);
  return Snapshot{std::move(f), time};
}

}  // namespace gmhd
