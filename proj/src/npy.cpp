#include "segnoise/npy.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace segnoise {

static_assert(std::endian::native == std::endian::little, "little-endian host required");

namespace {

constexpr char kMagic[6] = {'\x93', 'N', 'U', 'M', 'P', 'Y'};

std::string shape_tuple(const std::vector<std::size_t>& shape) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    os << shape[i];
    if (shape.size() == 1 || i + 1 < shape.size()) os << ',';
    if (i + 1 < shape.size()) os << ' ';
  }
  os << ')';
  return os.str();
}

// Minimal parser for the v1.0 header dict: extracts the value token after a
// quoted key. Tolerates arbitrary spacing.
std::string dict_value(const std::string& header, const std::string& key) {
  const std::string quoted = "'" + key + "'";
  auto pos = header.find(quoted);
  if (pos == std::string::npos) throw Error("NPY header missing key " + key);
  pos = header.find(':', pos + quoted.size());
  if (pos == std::string::npos) throw Error("malformed NPY header");
  ++pos;
  while (pos < header.size() && header[pos] == ' ') ++pos;
  if (pos >= header.size()) throw Error("malformed NPY header");
  if (header[pos] == '(') {
    const auto end = header.find(')', pos);
    if (end == std::string::npos) throw Error("malformed NPY shape");
    return header.substr(pos, end - pos + 1);
  }
  if (header[pos] == '\'') {
    const auto end = header.find('\'', pos + 1);
    if (end == std::string::npos) throw Error("malformed NPY descr");
    return header.substr(pos + 1, end - pos - 1);
  }
  auto end = header.find_first_of(",}", pos);
  if (end == std::string::npos) throw Error("malformed NPY header");
  while (end > pos && header[end - 1] == ' ') --end;
  return header.substr(pos, end - pos);
}

std::vector<std::size_t> parse_shape(const std::string& tuple) {
  std::vector<std::size_t> shape;
  std::size_t i = 1;  // skip '('
  while (i < tuple.size()) {
    while (i < tuple.size() && (tuple[i] == ' ' || tuple[i] == ',')) ++i;
    if (i >= tuple.size() || tuple[i] == ')') break;
    std::size_t value = 0;
    if (tuple[i] < '0' || tuple[i] > '9') throw Error("malformed NPY shape entry");
    while (i < tuple.size() && tuple[i] >= '0' && tuple[i] <= '9') {
      value = value * 10 + static_cast<std::size_t>(tuple[i] - '0');
      ++i;
    }
    shape.push_back(value);
  }
  return shape;
}

}  // namespace

Grid read_npy(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());

  char magic[6];
  in.read(magic, 6);
  if (!in || std::memcmp(magic, kMagic, 6) != 0)
    throw Error(path.string() + " is not an NPY file");

  unsigned char version[2];
  in.read(reinterpret_cast<char*>(version), 2);
  if (!in || version[0] != 1 || version[1] != 0)
    throw Error("unsupported NPY version " + std::to_string(version[0]) + "." +
                std::to_string(version[1]) + " (only 1.0 is supported)");

  unsigned char len_bytes[2];
  in.read(reinterpret_cast<char*>(len_bytes), 2);
  if (!in) throw Error("truncated NPY header");
  const std::size_t header_len = static_cast<std::size_t>(len_bytes[0]) |
                                 (static_cast<std::size_t>(len_bytes[1]) << 8);

  std::string header(header_len, '\0');
  in.read(header.data(), static_cast<std::streamsize>(header_len));
  if (!in) throw Error("truncated NPY header");

  const std::string descr = dict_value(header, "descr");
  const std::string fortran = dict_value(header, "fortran_order");
  if (fortran != "False") throw Error("only C-order NPY files are supported");
  const std::vector<std::size_t> shape = parse_shape(dict_value(header, "shape"));
  if (shape.empty() || shape.size() > 3)
    throw Error("NPY rank must be 1 to 3, got " + std::to_string(shape.size()));

  std::size_t total = 1;
  for (std::size_t s : shape) total *= s;

  std::vector<double> data(total);
  if (descr == "<f8") {
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(total * 8));
    if (!in) throw Error("truncated NPY payload");
  } else if (descr == "|u1") {
    std::vector<unsigned char> raw(total);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(total));
    if (!in) throw Error("truncated NPY payload");
    for (std::size_t i = 0; i < total; ++i) data[i] = static_cast<double>(raw[i]);
  } else {
    throw Error("unsupported NPY dtype '" + descr + "' (expected '<f8' or '|u1')");
  }
  return Grid(shape, std::move(data));
}

void write_npy(const std::filesystem::path& path, const Grid& g, NpyDtype dtype) {
  const char* descr = (dtype == NpyDtype::Float64) ? "<f8" : "|u1";
  if (dtype == NpyDtype::UInt8) {
    const auto vals = g.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] != 0.0 && vals[i] != 1.0) throw NonBinaryValue(i, vals[i]);
    }
  }

  std::string dict = "{'descr': '";
  dict += descr;
  dict += "', 'fortran_order': False, 'shape': ";
  dict += shape_tuple(g.shape());
  dict += ", }";
  // pad so that the full preamble is a multiple of 64 bytes, newline-terminated
  const std::size_t unpadded = 6 + 2 + 2 + dict.size() + 1;
  const std::size_t padding = (64 - unpadded % 64) % 64;
  dict.append(padding, ' ');
  dict += '\n';

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(kMagic, 6);
  const unsigned char version[2] = {1, 0};
  out.write(reinterpret_cast<const char*>(version), 2);
  const auto header_len = static_cast<std::uint16_t>(dict.size());
  const unsigned char len_bytes[2] = {static_cast<unsigned char>(header_len & 0xFF),
                                      static_cast<unsigned char>(header_len >> 8)};
  out.write(reinterpret_cast<const char*>(len_bytes), 2);
  out.write(dict.data(), static_cast<std::streamsize>(dict.size()));

  const auto vals = g.values();
  if (dtype == NpyDtype::Float64) {
    out.write(reinterpret_cast<const char*>(vals.data()),
              static_cast<std::streamsize>(vals.size() * 8));
  } else {
    std::vector<unsigned char> raw(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) raw[i] = vals[i] == 1.0 ? 1 : 0;
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  }
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace segnoise
