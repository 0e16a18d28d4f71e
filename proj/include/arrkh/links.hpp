#pragma once

#include <array>
#include <string>
#include <vector>

#include "arrkh/arrangement.hpp"
#include "arrkh/poly.hpp"

namespace arrkh {

// Crossing "X a b c d": arcs counterclockwise, starting at the incoming under-strand.
struct PlanarDiagram {
  std::vector<std::array<long, 4>> crossings;
  std::size_t free_loops = 0;
};

PlanarDiagram parse_pd(const std::string& text);
std::string format_pd(const PlanarDiagram& d);

// Slot k of crossing c is 4c + k; quadrant k sits between slots k and k+1.
struct DiagramFace {
  std::vector<std::pair<std::size_t, int>> corners;  // (crossing, quadrant)
  std::size_t component = 0;
  bool outer = false;
};

struct DiagramStructure {
  std::vector<std::size_t> partner;     // slot -> slot at the other end of its arc
  std::vector<bool> incoming;           // slot -> arc arrives at the crossing
  std::vector<std::size_t> component;   // crossing -> component index
  std::size_t components = 0;           // including free loops
  std::vector<DiagramFace> faces;
  std::vector<std::array<std::size_t, 4>> quadrant_face;  // crossing -> face per quadrant
};

DiagramStructure analyze(const PlanarDiagram& d);

// Faces of every component traced separately on its own sphere.
std::vector<DiagramFace> faces(const PlanarDiagram& d);

// Shading per face; index 0 leaves every component's outer face unshaded.
std::array<std::vector<bool>, 2> checkerboard(const PlanarDiagram& d);

Graph tait_graph(const PlanarDiagram& d, int shading);
SignedArrangement link_arrangement(const PlanarDiagram& d, int shading);

// +1 or -1 per crossing in the usual oriented sense.
std::vector<int> crossing_signs(const PlanarDiagram& d);
long writhe(const PlanarDiagram& d);

// Circles after smoothing crossings in S one way and the rest the other.
std::size_t smoothing_circles(const PlanarDiagram& d, Mask S);
std::vector<std::size_t> all_smoothing_circles(const PlanarDiagram& d, Exec exec = Exec::parallel);

LaurentPoly jones_diagram(const PlanarDiagram& d, Exec exec = Exec::parallel);
// (-i q^{-3/2})^w.
LaurentPoly framing_factor(long w);

}  // namespace arrkh
