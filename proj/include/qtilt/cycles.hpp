#pragma once
// Chordless cycles, admissible cuts and (anti)parallel paths.

#include <vector>

#include "qtilt/quiver.hpp"

namespace qtilt {

struct ChordlessCycle {
  std::vector<int> vertices;  // in cyclic order, smallest first
  std::vector<int> arrows;    // arrows[k] joins vertices[k] and vertices[k+1 mod len]
  bool oriented = false;
};

std::vector<ChordlessCycle> chordless_cycles(const Quiver& q);
std::vector<ChordlessCycle> oriented_chordless_cycles(const Quiver& q);

// Cuts only use arrows lying on some oriented chordless cycle.
bool is_admissible_cut(const Quiver& q, const std::vector<int>& cut);
std::vector<std::vector<int>> enumerate_admissible_cuts(const Quiver& q);
// Oriented chordless cycles meeting the arrow set in more than one arrow.
std::vector<ChordlessCycle> overcut_cycles(const Quiver& q, const std::vector<int>& cut);

// Simple paths only; a path through a repeated vertex contains a proper cycle.
std::vector<Path> parallel_paths(const Quiver& q, int arrow);
std::vector<Path> antiparallel_paths(const Quiver& q, int arrow);
// Paths whose vertex set spans a full subquiver consisting of the path and the arrow.
std::vector<Path> shortest_parallel_paths(const Quiver& q, int arrow);
std::vector<Path> shortest_antiparallel_paths(const Quiver& q, int arrow);

}  // namespace qtilt
