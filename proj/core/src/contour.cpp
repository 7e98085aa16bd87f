#include "shortcut/contour.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace shortcut {
namespace {

// Clockwise on screen (rows grow downwards): E, SE, S, SW, W, NW, N, NE.
constexpr std::array<std::array<int, 2>, 8> kRing = {{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

int direction_of(int dc, int dr) {
  for (int d = 0; d < 8; ++d)
    if (kRing[d][0] == dc && kRing[d][1] == dr) return d;
  return -1;
}

struct Pixel {
  int col, row;
  friend bool operator==(Pixel, Pixel) = default;
};

// Drops one-pixel spurs: a pattern A, B, A along the chain collapses to A.
void remove_spurs(std::vector<Pixel>& chain) {
  bool changed = true;
  while (changed && chain.size() >= 3) {
    changed = false;
    const std::size_t n = chain.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n, k = (i + 2) % n;
      if (chain[i] == chain[k]) {
        std::vector<std::size_t> drop = {j, k};
        std::sort(drop.rbegin(), drop.rend());
        for (std::size_t d : drop) chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(d));
        changed = true;
        break;
      }
    }
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mask parse_pgm(const std::string& data, const std::string& name) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < data.size()) {
      if (data[pos] == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(data[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto read_int = [&] {
    skip_ws();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(data.data() + pos, data.data() + data.size(), value);
    if (ec != std::errc()) throw Error("malformed PGM header in " + name);
    pos = static_cast<std::size_t>(ptr - data.data());
    return value;
  };
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '2' && data[1] != '5'))
    throw Error(name + " is not a P2/P5 PGM file");
  const bool binary = data[1] == '5';
  pos = 2;
  const int width = read_int(), height = read_int(), maxval = read_int();
  if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 65535)
    throw Error("invalid PGM dimensions in " + name);

  Mask mask(width, height);
  auto store = [&](int index, int value) {
    if (value * 255 >= 128 * maxval) mask.set(index % width, index / width, true);
  };
  const int total = width * height;
  if (binary) {
    ++pos;  // single whitespace after maxval
    const int bytes = maxval > 255 ? 2 : 1;
    if (data.size() < pos + static_cast<std::size_t>(total) * bytes)
      throw Error("truncated PGM raster in " + name);
    for (int i = 0; i < total; ++i) {
      const auto* p = reinterpret_cast<const unsigned char*>(data.data() + pos + i * bytes);
      store(i, bytes == 2 ? (p[0] << 8) | p[1] : p[0]);
    }
  } else {
    for (int i = 0; i < total; ++i) store(i, read_int());
  }
  return mask;
}

Mask load_png(const std::filesystem::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.string().c_str()))
    throw Error("cannot read PNG " + path.string() + ": " + image.message);
  image.format = PNG_FORMAT_GRAY;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error("cannot decode PNG " + path.string() + ": " + msg);
  }
  const int width = static_cast<int>(image.width), height = static_cast<int>(image.height);
  Mask mask(width, height);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (buffer[static_cast<std::size_t>(r) * width + c] >= 128) mask.set(c, r, true);
  return mask;
}

}  // namespace

Mask::Mask(int width, int height)
    : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height, 0) {
  if (width < 0 || height < 0) throw Error("negative mask dimensions");
}

std::size_t Mask::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

bool Mask::touches_border() const {
  for (int c = 0; c < width_; ++c)
    if (at(c, 0) || at(c, height_ - 1)) return true;
  for (int r = 0; r < height_; ++r)
    if (at(0, r) || at(width_ - 1, r)) return true;
  return false;
}

Mask Mask::padded(int pad) const {
  Mask out(width_ + 2 * pad, height_ + 2 * pad);
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c)
      if (at(c, r)) out.set(c + pad, r + pad, true);
  return out;
}

int count_components(const Mask& mask) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(mask.width()) * mask.height(), 0);
  std::vector<Pixel> stack;
  int components = 0;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * mask.width() + c;
      if (!mask.at(c, r) || seen[idx]) continue;
      ++components;
      seen[idx] = 1;
      stack.push_back({c, r});
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        for (const auto& d : kRing) {
          const int nc = p.col + d[0], nr = p.row + d[1];
          if (!mask.at(nc, nr)) continue;
          const std::size_t nidx = static_cast<std::size_t>(nr) * mask.width() + nc;
          if (seen[nidx]) continue;
          seen[nidx] = 1;
          stack.push_back({nc, nr});
        }
      }
    }
  }
  return components;
}

Polygon trace_contour(const Mask& input) {
  const int components = count_components(input);
  if (components == 0) throw Error("no foreground");
  if (components > 1) throw Error("multiple components (" + std::to_string(components) + ")");

  const int pad = input.touches_border() ? 1 : 0;
  const Mask mask = pad ? input.padded(pad) : input;
  if (mask.touches_border()) throw Error("foreground touches the image border");

  Pixel start{-1, -1};
  for (int r = 0; r < mask.height() && start.col < 0; ++r)
    for (int c = 0; c < mask.width(); ++c)
      if (mask.at(c, r)) {
        start = {c, r};
        break;
      }

  // The west neighbour of the first raster pixel is background.
  std::vector<Pixel> chain;
  Pixel current = start;
  int backtrack = direction_of(-1, 0);
  const int start_backtrack = backtrack;
  const std::size_t limit = 4 * static_cast<std::size_t>(mask.width()) * mask.height() + 8;
  do {
    chain.push_back(current);
    int found = -1;
    for (int k = 1; k <= 8; ++k) {
      const int d = (backtrack + k) % 8;
      if (mask.at(current.col + kRing[d][0], current.row + kRing[d][1])) {
        found = d;
        break;
      }
    }
    if (found < 0) break;  // isolated pixel
    const Pixel next{current.col + kRing[found][0], current.row + kRing[found][1]};
    // The neighbour examined just before `found` is background; express it
    // relative to the new pixel.
    const int prev_dir = (found + 7) % 8;
    const Pixel bg{current.col + kRing[prev_dir][0], current.row + kRing[prev_dir][1]};
    backtrack = direction_of(bg.col - next.col, bg.row - next.row);
    current = next;
    if (chain.size() > limit) throw Error("contour tracing did not terminate");
  } while (!(current == start && backtrack == start_backtrack));

  remove_spurs(chain);
  if (chain.size() < 3) throw Error("foreground too small to form a polygon");
  std::vector<Pixel> sorted = chain;
  std::sort(sorted.begin(), sorted.end(),
            [](Pixel a, Pixel b) { return a.row < b.row || (a.row == b.row && a.col < b.col); });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("contour is not simple (one-pixel-wide bridge)");

  std::vector<Point> vertices;
  vertices.reserve(chain.size());
  for (const Pixel& p : chain)
    vertices.push_back({static_cast<double>(p.col - pad), static_cast<double>(p.row - pad)});
  return Polygon(std::move(vertices));
}

Mask rasterize(const Polygon& poly, int width, int height) {
  Mask mask(width, height);
  const std::size_t n = poly.size();
  std::vector<double> xs;
  for (int r = 0; r < height; ++r) {
    const double y = r;
    xs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = poly[i], b = poly[poly.next(i)];
      if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      const int c0 = std::max(0, static_cast<int>(std::ceil(xs[k])));
      const int c1 = std::min(width - 1, static_cast<int>(std::floor(xs[k + 1])));
      for (int c = c0; c <= c1; ++c) mask.set(c, r, true);
    }
  }
  // Boundary pixels: centres lying on an edge.
  const double eps = poly.eps();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment e = poly.edge(i);
    const Box box = bounding_box(std::vector<Point>{e.a, e.b});
    const int c0 = std::max(0, static_cast<int>(std::floor(box.lo.x)));
    const int c1 = std::min(width - 1, static_cast<int>(std::ceil(box.hi.x)));
    const int r0 = std::max(0, static_cast<int>(std::floor(box.lo.y)));
    const int r1 = std::min(height - 1, static_cast<int>(std::ceil(box.hi.y)));
    for (int r = r0; r <= r1; ++r)
      for (int c = c0; c <= c1; ++c)
        if (point_segment_distance({double(c), double(r)}, e.a, e.b) <= eps) mask.set(c, r, true);
  }
  return mask;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_polygon(const Polygon& poly) {
  std::string out = std::to_string(poly.size()) + "\n";
  for (const Point& p : poly.vertices()) out += format_double(p.x) + " " + format_double(p.y) + "\n";
  return out;
}

Polygon parse_polygon(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  auto next_number = [&](const char* what) {
    if (!(in >> token)) throw Error(std::string("malformed polygon file: missing ") + what);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error("malformed polygon file: bad number '" + token + "'");
    return v;
  };
  const double count = next_number("vertex count");
  if (count < 0 || count != std::floor(count)) throw Error("malformed polygon file: bad vertex count");
  std::vector<Point> vertices(static_cast<std::size_t>(count));
  for (Point& p : vertices) {
    p.x = next_number("x coordinate");
    p.y = next_number("y coordinate");
  }
  if (in >> token) throw Error("malformed polygon file: trailing data");
  return Polygon(std::move(vertices));
}

Polygon load_polygon(const std::filesystem::path& path) { return parse_polygon(read_file(path)); }

void save_polygon(const Polygon& poly, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_polygon(poly);
}

Mask load_mask(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw Error("no such input: " + path.string());
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".png") return load_png(path);
  return parse_pgm(read_file(path), path.string());
}

void save_pgm(const Mask& mask, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "P5\n" << mask.width() << " " << mask.height() << "\n255\n";
  for (int r = 0; r < mask.height(); ++r)
    for (int c = 0; c < mask.width(); ++c) out.put(mask.at(c, r) ? static_cast<char>(255) : 0);
}

}  // namespace shortcut
