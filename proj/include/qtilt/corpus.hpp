#pragma once
// Exhaustive checks over a Dynkin type: every orientation, every tilting
// module, the relation extensions of the tilted algebras and all their
// admissible cuts, plus rolling traces of small tilting complexes.

#include <string>
#include <vector>

#include "qtilt/quiver.hpp"

namespace qtilt {

// Orientations of the Dynkin graph of q, one per isomorphism class.
std::vector<Quiver> orientations(const Quiver& q);

struct CorpusReport {
  std::string type;
  int orientations = 0;
  int tilting_modules = 0;
  int cluster_tilted = 0;  // distinct up to isomorphism
  int cuts = 0;
  int cut_quotients = 0;   // cuts with gldim <= 2
  int verified = 0;        // cut quotients answered YES
  int roll_traces = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct CorpusOptions {
  int roll_hi = 2;     // tilting complexes with shifts 0..roll_hi are rolled
  int roll_steps = 6;
};

CorpusReport run_corpus(const std::string& type, const CorpusOptions& opt = {});

}  // namespace qtilt
