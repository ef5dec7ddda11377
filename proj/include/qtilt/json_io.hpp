#pragma once
// JSON views of presentations, algebras, complexes and verdicts.

#include "json.hpp"
#include "qtilt/dynkincut.hpp"
#include "qtilt/endoalg.hpp"
#include "qtilt/rolling.hpp"

namespace qtilt {

using Json = nlohmann::ordered_json;

Json to_json(const Presentation& p);
// Basis labels, grading and the nonzero structure constants b_j * b_i.
Json to_json(const ConcreteAlgebra& a);
Json to_json(const DerivedCategory& d, const std::vector<ZVertex>& t);
Json to_json(const Section& s);
Json to_json(const TiltingVerdict& v);
Json to_json(const PiReport& r);
Json to_json(const Presentation& b, const Decision& d);
Json to_json(const DerivedCategory& d, const RollStep& s);
Json to_json(const Quiver& q, const CondD& c);

std::string rational_string(const Rat& q);

}  // namespace qtilt
