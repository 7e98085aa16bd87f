#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "shortcut/geometry.hpp"

namespace shortcut {

/// Binary silhouette, row-major, true = foreground. Pixel (col, row) has its
/// center at the point (col, row).
class Mask {
 public:
  Mask() = default;
  Mask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return width_ == 0 || height_ == 0; }

  bool at(int col, int row) const {
    return col >= 0 && row >= 0 && col < width_ && row < height_ &&
           bits_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  void set(int col, int row, bool value) {
    bits_[static_cast<std::size_t>(row) * width_ + col] = value ? 1 : 0;
  }

  std::size_t count() const;
  bool touches_border() const;
  /// Copy with a background frame of `pad` pixels on every side.
  Mask padded(int pad) const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Number of 8-connected foreground components.
int count_components(const Mask& mask);

/// Moore-neighbour boundary tracing of the single foreground component. One
/// vertex per boundary pixel centre, counterclockwise, holes ignored. Masks
/// touching the image border are padded internally; coordinates are reported
/// in the input frame.
Polygon trace_contour(const Mask& mask);

/// Pixels whose centre is inside or on the polygon.
Mask rasterize(const Polygon& poly, int width, int height);

/// Plain-text polygon: vertex count on the first line, then "x y" per line.
Polygon load_polygon(const std::filesystem::path& path);
void save_polygon(const Polygon& poly, const std::filesystem::path& path);
Polygon parse_polygon(const std::string& text);
std::string format_polygon(const Polygon& poly);

/// PGM (P2/P5) or PNG (grayscale or colour, luminance >= 128 is foreground).
Mask load_mask(const std::filesystem::path& path);
/// Binary P5 PGM, foreground 255.
void save_pgm(const Mask& mask, const std::filesystem::path& path);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace shortcut
