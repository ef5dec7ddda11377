#include "qtilt/json_io.hpp"

namespace qtilt {

std::string rational_string(const Rat& q) { return to_string(q); }

Json to_json(const Presentation& p) {
  const Quiver& q = p.quiver;
  Json j;
  j["name"] = q.name;
  j["vertices"] = q.vertices;
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows) j["arrows"].push_back({{"id", a.id}, {"src", q.vertices[a.src]}, {"tgt", q.vertices[a.tgt]}});
  j["relations"] = Json::array();
  for (const auto& r : p.relations) j["relations"].push_back(relation_string(q, r));
  return j;
}

Json to_json(const ConcreteAlgebra& a) {
  Json j;
  j["vertices"] = a.vertex_names();
  j["dim"] = a.dim();
  j["graded"] = a.graded();
  j["basis"] = Json::array();
  for (const auto& b : a.basis())
    j["basis"].push_back({{"name", b.name}, {"src", a.vertex_names()[b.src]}, {"tgt", a.vertex_names()[b.tgt]}, {"deg", b.deg}});
  j["products"] = Json::array();
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      const auto& v = a.product(static_cast<int>(x), static_cast<int>(y));
      if (v.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : v) terms.push_back({a.label(static_cast<int>(k)).name, rational_string(c)});
      j["products"].push_back({{"left", a.label(static_cast<int>(x)).name}, {"right", a.label(static_cast<int>(y)).name}, {"value", terms}});
    }
  return j;
}

Json to_json(const DerivedCategory& d, const std::vector<ZVertex>& t) {
  Json j = Json::array();
  auto c = d.to_complex(t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& s = c.summands[i];
    j.push_back({{"label", d.label(t[i])},
                 {"orbit", t[i].orbit + 1},
                 {"level", t[i].level},
                 {"height", d.height(t[i])},
                 {"vertex", s.vertex + 1},
                 {"tau", s.tau},
                 {"shift", s.shift}});
  }
  return j;
}

Json to_json(const Section& s) { return s.level; }

Json to_json(const TiltingVerdict& v) {
  Json j{{"tilting", v.tilting}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["witnesses"] = Json::array();
  for (const auto& w : v.witnesses) j["witnesses"].push_back({{"a", w.a + 1}, {"b", w.b + 1}, {"shift", w.shift}, {"dim", w.dim}});
  return j;
}

Json to_json(const PiReport& r) {
  return {{"holds", r.holds()},
          {"multiplicative", r.multiplicative},
          {"kernel_dim", r.kernel.size()},
          {"kernel_in_rad2", r.kernel_in_rad2},
          {"kernel_is_eta_square", r.kernel_is_eta_square},
          {"split", r.split},
          {"quivers_iso", r.quivers_iso}};
}

Json to_json(const Presentation& b, const Decision& d) {
  Json j{{"verdict", d.yes ? "YES" : "NO"}, {"stage", d.stage}, {"gldim", d.gldim}};
  if (!d.detail.empty()) j["detail"] = d.detail;
  if (d.cluster) {
    Json cut = Json::array();
    for (int a : d.cut) cut.push_back(d.cluster->quiver.arrows[a].id);
    j["certificate"] = {{"cluster", to_json(*d.cluster)}, {"cut", cut}};
  }
  j["input"] = b.quiver.name;
  return j;
}

Json to_json(const DerivedCategory& d, const RollStep& s) {
  Json j{{"complex", to_json(d, s.complex)},
         {"presentation", to_json(s.presentation)},
         {"gldim", s.gldim},
         {"section", to_json(s.sigma)},
         {"n", s.n},
         {"tilted", s.tilted}};
  if (s.witness) j["module_section"] = to_json(*s.witness);
  return j;
}

Json to_json(const Quiver& q, const CondD& c) {
  Json j{{"holds", c.holds}};
  if (!c.holds) {
    j["witness"] = c.witness;
    j["mu_length"] = c.mu.length();
    j["mu_source"] = q.vertices[c.mu.src];
  }
  return j;
}

}  // namespace qtilt
