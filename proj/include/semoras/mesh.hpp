#pragma once

#include <array>
#include <vector>

namespace semoras {

/// Uniform rectangular element mesh of a 2D box, periodic by default in
/// both directions. Elements are indexed e = ey*elements_x + ex with ex
/// fastest.
struct Mesh2D {
  int elements_x = 1;
  int elements_y = 1;
  double length_x = 1.0;  // domain extent
  double length_y = 1.0;
  bool periodic_x = true;
  bool periodic_y = true;

  int num_elements() const { return elements_x * elements_y; }
  double element_size_x() const { return length_x / elements_x; }
  double element_size_y() const { return length_y / elements_y; }

  int element_id(int ex, int ey) const { return ey * elements_x + ex; }
  int ex_of(int e) const { return e % elements_x; }
  int ey_of(int e) const { return e / elements_x; }

  /// Neighbor at offset (dx,dy) in {-1,0,1}, periodic wraparound.
  /// Returns -1 when the neighbor falls outside a non-periodic boundary.
  int neighbor(int e, int dx, int dy) const;

  /// The 8 face+corner neighbors in the fixed order
  /// (-1,-1),(0,-1),(1,-1),(-1,0),(1,0),(-1,1),(0,1),(1,1).
  std::array<int, 8> neighbors(int e) const;
};

Mesh2D make_mesh(int elements_x, int elements_y, double length_x,
                 double length_y);

}  // namespace semoras
