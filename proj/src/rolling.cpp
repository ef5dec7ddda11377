#include "qtilt/rolling.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qtilt/endoalg.hpp"

namespace qtilt {

Rolled roll(const DerivedCategory& d, const std::vector<ZVertex>& t) {
  Rolled r;
  r.sigma = d.section_of(t);
  r.complex = t;
  std::vector<bool> on(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == r.sigma.at(t[i].orbit)) {
      on[i] = true;
      r.moved.push_back(static_cast<int>(i));
      r.complex[i] = d.F_inv(t[i]);
    }
  r.hom_x_rest_zero = true;
  for (int a : r.moved)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (!on[b] && d.hom_dim(t[a], t[b]) != 0) r.hom_x_rest_zero = false;
  r.below_tau_sigma = true;
  for (const auto& y : r.complex)
    if (y.level >= r.sigma.level[y.orbit] - 1)
      r.below_tau_sigma = false;
  return r;
}

RollCheck roll_preserves(const DerivedCategory& d, const std::vector<ZVertex>& t) {
  RollCheck c;
  c.gldim = gldim(end_algebra(d, t));
  Rolled r = roll(d, t);
  c.rolled = r.complex;
  c.rolled_verdict = d.is_tilting_complex(r.complex);
  if (c.rolled_verdict.tilting) c.rolled_gldim = gldim(end_algebra(d, r.complex));
  std::vector<bool> on(t.size(), false);
  for (int a : r.moved) on[a] = true;
  for (int a : r.moved)
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (on[b]) continue;
      for (int k : {0, -1}) {
        int h = d.hom_dim(d.tau(t[a]), d.shift(t[b], k));
        if (h) c.tau_x_witnesses.push_back({a, static_cast<int>(b), k, h});
      }
      ZVertex x = d.F_inv(t[a]);
      int span = std::abs(d.height(x) - d.height(t[b])) / d.coxeter_number() + 2;
      for (int j = -span; j <= span; ++j) {
        int h = j ? d.hom_dim(x, d.shift(t[b], j)) : 0;
        if (h) c.shifted_witnesses.push_back({a, static_cast<int>(b), j, h});
      }
    }
  return c;
}

bool RollCheck::consistent() const {
  if (shifted_witnesses.empty() != rolled_verdict.tilting) return false;
  if (gldim < 0 || gldim > 2) return true;
  return rolled_verdict.tilting && rolled_gldim && *rolled_gldim >= 0 && *rolled_gldim <= 2 &&
         tau_x_witnesses.empty();
}

Potential potential(const DerivedCategory& d, const std::vector<ZVertex>& t, const Section& s) {
  Potential p;
  for (std::size_t i = 0; i < t.size(); ++i) {
    int m = 0;
    for (const auto& y : t) m += d.distance(t[i], y);
    p.m.push_back(m);
    if (!d.in_module_region(t[i], s)) {
      p.G.push_back(static_cast<int>(i));
      p.n += m;
    }
  }
  return p;
}

std::optional<Section> module_section(const DerivedCategory& d, const std::vector<ZVertex>& t) {
  int lo = d.height(t.front()), hi = lo, diam = 0;
  for (const auto& x : t) lo = std::min(lo, d.height(x)), hi = std::max(hi, d.height(x));
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.n(); ++j) diam = std::max(diam, d.graph_distance(i, j));
  for (const auto& s : d.sections_between(lo - diam, hi + diam))
    if (std::all_of(t.begin(), t.end(), [&](const ZVertex& x) { return d.in_module_region(x, s); })) return s;
  return std::nullopt;
}

namespace {

RollStep make_step(const DerivedCategory& d, const std::vector<ZVertex>& t) {
  RollStep s;
  s.complex = t;
  auto b = end_algebra(d, t);
  s.presentation = extract_presentation(b, "B").presentation;
  s.gldim = gldim(b);
  s.sigma = d.section_of(t);
  s.n = potential(d, t, s.sigma).n;
  s.witness = module_section(d, t);
  s.tilted = s.witness.has_value();
  return s;
}

void check_potential(const RollTrace& tr) {
  std::size_t h = tr.steps.size() - 1;
  if (h == 0) return;
  int prev = tr.steps[h - 1].n, cur = tr.steps[h].n;
  if ((prev > 0 && cur >= prev) || (prev == 0 && cur != 0))
    throw PotentialNotDecreasing("potential went from " + std::to_string(prev) + " to " + std::to_string(cur) +
                                 " at step " + std::to_string(h));
}

RollTrace run(const DerivedCategory& d, const std::vector<ZVertex>& t, int steps, bool stop_when_tilted) {
  RollTrace tr;
  std::vector<ZVertex> cur = t;
  for (int h = 0;; ++h) {
    tr.steps.push_back(make_step(d, cur));
    if (tr.steps.back().gldim < 0 || tr.steps.back().gldim > 2)
      throw GldimTooLarge("global dimension " + std::to_string(tr.steps.back().gldim) + " at step " +
                          std::to_string(h));
    check_potential(tr);
    if (tr.tilted_at < 0 && tr.steps.back().tilted) tr.tilted_at = h;
    if (stop_when_tilted && tr.tilted_at >= 0) return tr;
    if (h == steps) {
      if (stop_when_tilted) throw MaxStepsExceeded("no tilted algebra within " + std::to_string(steps) + " rolls");
      return tr;
    }
    cur = roll(d, cur).complex;
  }
}

}  // namespace

RollTrace roll_sequence(const DerivedCategory& d, const std::vector<ZVertex>& t, int steps) {
  return run(d, t, steps, false);
}

RollTrace roll_to_tilted(const DerivedCategory& d, const std::vector<ZVertex>& t, int max_steps) {
  return run(d, t, max_steps, true);
}

}  // namespace qtilt
