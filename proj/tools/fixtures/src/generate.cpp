// Writes the synthetic fixture suite to disk: masks as PGM, polygons as
// .poly files, hand-placed annotation lines and gesture masks.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "shortcut/fixtures.hpp"

namespace fs = std::filesystem;
using namespace shortcut;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: shortcut-fixtures <out-dir>\n";
    return 2;
  }
  const fs::path root = argv[1];
  try {
    for (const char* sub : {"masks", "polygons", "annotated", "annotations", "gestures"})
      fs::create_directories(root / sub);

    for (const auto& m : fixtures::mask_suite()) save_pgm(m.mask, root / "masks" / (m.name + ".pgm"));

    save_polygon(fixtures::plus_sign(40, 50, {10, 10}), root / "polygons" / "plus.poly");
    save_polygon(fixtures::rectangle(10, 10, 90, 90), root / "polygons" / "square.poly");
    save_polygon(fixtures::t_shape(120, 30, 30, 70, {20, 10}), root / "polygons" / "tee.poly");
    save_polygon(fixtures::l_shape(100, 120, 30, {10, 10}), root / "polygons" / "ell.poly");
    save_polygon(fixtures::u_shape(110, 120, 30, 40, {10, 10}), root / "polygons" / "you.poly");
    save_polygon(fixtures::dumbbell(40, 12, 64, {100, 60}), root / "polygons" / "dumbbell.poly");

    for (const auto& a : fixtures::annotated_suite()) {
      save_pgm(a.mask, root / "annotated" / (a.name + ".pgm"));
      std::ofstream lines(root / "annotations" / (a.name + ".lines"));
      for (const Segment& s : a.lines)
        lines << format_double(s.a.x) << " " << format_double(s.a.y) << " " << format_double(s.b.x) << " "
              << format_double(s.b.y) << "\n";
    }

    save_pgm(fixtures::fist_mask(), root / "gestures" / "rock_1.pgm");
    save_pgm(fixtures::open_hand_mask(), root / "gestures" / "paper_1.pgm");
    save_pgm(fixtures::two_finger_mask(), root / "gestures" / "scissors_1.pgm");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
