#pragma once
// Cluster-tilted algebras of Dynkin type given by their quiver, admissible
// cuts realizing a given algebra, and the decision procedure for iterated
// tilted algebras of global dimension at most two.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtilt/quiver.hpp"

namespace qtilt {

struct NotClusterQuiver : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One zero relation per arrow with a single chordless antiparallel path, one
// commutativity relation per arrow with two of them.
Presentation synth_cluster_relations(const Quiver& q);

struct IdempotentQuotient {
  Presentation quotient;               // C / C e C
  std::optional<Presentation> cluster;  // synthesized on the quotient quiver
  bool consistent = false;             // both ideals agree
  std::string detail;
};
IdempotentQuotient idempotent_quotient(const Presentation& c, const std::vector<int>& remove);

// Arrows of the quiver of b, then one arrow eta_k from tgt to src of each minimal relation.
Quiver augmented_quiver(const Presentation& b);

std::optional<std::vector<int>> find_cut_realization(const Presentation& b, const Presentation& c);

struct CondD {
  bool holds = true;
  int rho1 = -1, rho2 = -1;  // indices into the minimal relations
  Path mu;
  std::string witness;
};
// b is taken with its minimal relations.
CondD cond_d_check(const Presentation& b);

struct Decision {
  bool yes = false;
  std::string stage;  // last stage reached: gldim, directed, tits, synth, cut
  std::string detail;
  int gldim = -1;
  std::optional<Presentation> cluster;
  std::vector<int> cut;
};
Decision iterated_tilted_dynkin_decision(const Presentation& b);

}  // namespace qtilt
