#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtilt/algebra.hpp"
#include "qtilt/corpus.hpp"
#include "qtilt/cycles.hpp"
#include "qtilt/dynkin.hpp"
#include "qtilt/forms.hpp"
#include "qtilt/json_io.hpp"

using namespace qtilt;

namespace {

constexpr int kOk = 0, kInputError = 1, kVerdictNo = 2;

struct Config {
  std::string input;
  std::string format = "json";
  int truncation = 0;
  std::vector<int> window;
  unsigned seed = 1;
  std::string type;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_complex_file(const std::string& text) {
  std::istringstream in(text);
  std::string w;
  while (in >> w) {
    if (w[0] == '#') {
      std::getline(in, w);
      continue;
    }
    return w == "complex";
  }
  return false;
}

Presentation read_presentation(const Config& c) {
  Presentation p = parse_presentation(slurp(c.input));
  if (c.truncation > 0) p.truncation = c.truncation;
  return p;
}

// A Dynkin category and a tilting complex, from a complex file or by
// realizing a presentation over --type.
struct Realized {
  DerivedCategory d;
  std::vector<ZVertex> t;
};

Realized read_complex(const Config& c) {
  std::string text = slurp(c.input);
  if (is_complex_file(text)) {
    DComplex cx = parse_complex(text);
    DerivedCategory d(dynkin_quiver(cx.quiver_name));
    auto t = d.coordinates(cx);
    auto v = d.is_tilting_complex(t);
    if (!v.tilting) throw InputError("not a tilting complex: " + v.reason);
    return {d, t};
  }
  if (c.type.empty()) throw InputError("a presentation needs --type to be realized as a tilting complex");
  Presentation p = parse_presentation(text);
  DerivedCategory d(dynkin_quiver(c.type));
  auto r = realize_presentation(d, p);
  if (!r.complex) throw InputError("no tilting complex over " + c.type + " realizes " + p.quiver.name);
  return {d, *r.complex};
}

std::pair<int, int> window(const Config& c, int lo, int hi) {
  if (c.window.empty()) return {lo, hi};
  if (c.window.size() != 2 || c.window[0] > 0 || c.window[1] < 1) throw InputError("--window needs lo <= 0 < hi");
  return {c.window[0], c.window[1]};
}

int cmd_check(const Config& c) {
  Presentation p = read_presentation(c);
  if (c.format == "dot") {
    std::cout << to_dot(p);
    return kOk;
  }
  QuotientBasis qb(p);
  Json j = to_json(with_minimal_relations(p));
  j["dim"] = qb.dim();
  j["schurian"] = qb.is_schurian();
  j["loewy_length"] = qb.loewy();
  j["gldim"] = gldim(from_presentation(p));
  emit(j);
  return kOk;
}

Json matrix_json(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_string(m(i, k)));
    j.push_back(row);
  }
  return j;
}

int cmd_form(const Config& c) {
  Presentation p = read_presentation(c);
  auto res = simple_resolutions(from_presentation(p));
  auto tits = tits_matrix(p.quiver, ext_dims(res, 2));
  Json j{{"name", p.quiver.name}, {"gldim", gldim(res)}, {"tits", matrix_json(tits)}};
  Json minors = Json::array();
  for (const auto& m : leading_principal_minors(tits)) minors.push_back(rational_string(m));
  j["minors"] = minors;
  j["positive_definite"] = is_positive_definite(tits);
  if (gldim(res) >= 0) j["euler"] = matrix_json(euler_form(res));
  emit(j);
  return kOk;
}

int cmd_relext(const Config& c) {
  auto r = read_complex(c);
  auto b = end_algebra(r.d, r.t);
  auto rel = relation_extension(r.d, r.t);
  auto m = ext2_bimodule(r.d, r.t);
  if (c.format == "dot") {
    std::cout << to_dot(rel.presentation);
    return kOk;
  }
  emit({{"complex", to_json(r.d, r.t)},
        {"B", to_json(extract_presentation(b, "B").presentation)},
        {"gldim", gldim(b)},
        {"ext2_dim", m.dim},
        {"R", to_json(rel.presentation)},
        {"algebra", to_json(rel.algebra)}});
  return kOk;
}

int cmd_cluster(const Config& c) {
  auto r = read_complex(c);
  auto [lo, hi] = window(c, -3, 6);
  auto ca = cluster_algebra(r.d, r.t, lo, hi);
  ca.verify(200, c.seed);
  auto p = extract_presentation(ca, "C").presentation;
  if (c.format == "dot") {
    std::cout << to_dot(p);
    return kOk;
  }
  emit({{"window", {lo, hi}}, {"C", to_json(p)}, {"algebra", to_json(ca)}});
  return kOk;
}

int cmd_pi(const Config& c) {
  auto r = read_complex(c);
  auto [lo, hi] = window(c, -3, 6);
  auto ca = cluster_algebra(r.d, r.t, lo, hi);
  auto rel = relation_extension(r.d, r.t);
  auto rep = projection_pi(ca, rel.algebra);
  auto bc = cond_bc(ca);
  auto b = extract_presentation(end_algebra(r.d, r.t), "B").presentation;
  auto d = cond_d_check(b);
  Json j = to_json(rep);
  j["cond_bc"] = {{"holds", bc.holds}};
  if (!bc.holds) j["cond_bc"]["witness"] = bc.witness;
  j["cond_d"] = to_json(b.quiver, d);
  j["R_equals_C"] = rep.kernel.empty();
  emit(j);
  return rep.holds() ? kOk : kVerdictNo;
}

int cmd_roll(const Config& c, int steps, bool to_tilted, const std::string& dot_dir) {
  auto r = read_complex(c);
  RollTrace tr = to_tilted ? roll_to_tilted(r.d, r.t, steps > 0 ? steps : 64) : roll_sequence(r.d, r.t, steps);
  Json j{{"tilted_at", tr.tilted_at}, {"steps", Json::array()}};
  for (std::size_t h = 0; h < tr.steps.size(); ++h) {
    Json s = to_json(r.d, tr.steps[h]);
    s["h"] = h;
    j["steps"].push_back(s);
    if (!dot_dir.empty()) {
      std::filesystem::create_directories(dot_dir);
      std::ofstream(dot_dir + "/step" + std::to_string(h) + ".dot") << to_dot(tr.steps[h].presentation);
    }
  }
  emit(j);
  return kOk;
}

std::vector<int> arrow_ids(const Quiver& q, const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string id;
  while (std::getline(ss, id, ',')) {
    int a = q.arrow_index(id);
    if (a < 0) throw InputError("unknown arrow " + id);
    out.push_back(a);
  }
  return out;
}

int cmd_cut(const Config& c, bool enumerate, const std::string& apply) {
  Presentation p = read_presentation(c);
  if (!enumerate) {
    Presentation b = cut_quotient(p, arrow_ids(p.quiver, apply));
    if (c.format == "json")
      emit(to_json(b));
    else if (c.format == "dot")
      std::cout << to_dot(b);
    else
      std::cout << format_presentation(b);
    return kOk;
  }
  Json j = Json::array();
  for (const auto& cut : enumerate_admissible_cuts(p.quiver)) {
    Json ids = Json::array();
    for (int a : cut) ids.push_back(p.quiver.arrows[a].id);
    auto b = cut_quotient(p, cut);
    j.push_back({{"cut", ids}, {"gldim", gldim(from_presentation(b))}, {"quotient", to_json(b)}});
  }
  emit(j);
  return kOk;
}

int cmd_synth(const Config& c) {
  Presentation p = read_presentation(c);
  Presentation s = synth_cluster_relations(p.quiver);
  if (c.format == "json")
    emit(to_json(s));
  else if (c.format == "dot")
    std::cout << to_dot(s);
  else
    std::cout << format_presentation(s);
  return kOk;
}

int cmd_verify(const Config& c) {
  Presentation p = read_presentation(c);
  auto d = iterated_tilted_dynkin_decision(p);
  emit(to_json(p, d));
  return d.yes ? kOk : kVerdictNo;
}

int cmd_corpus(const Config& c) {
  auto rep = run_corpus(c.input);
  emit({{"type", rep.type},
        {"orientations", rep.orientations},
        {"tilting_modules", rep.tilting_modules},
        {"cluster_tilted", rep.cluster_tilted},
        {"cuts", rep.cuts},
        {"cut_quotients", rep.cut_quotients},
        {"verified", rep.verified},
        {"roll_traces", rep.roll_traces},
        {"failures", rep.failures}});
  return rep.ok() ? kOk : kVerdictNo;
}

int error(const std::string& kind, const std::string& msg, int line = 0, int col = 0) {
  Json j{{"error", kind}, {"message", msg}};
  if (line > 0) j["line"] = line, j["col"] = col;
  std::cout << j.dump(2) << "\n";
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated tilted algebras, relation extensions and cluster-tilted algebras of Dynkin type"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--truncation", cfg.truncation, "path length bound for presentations");
  app.add_option("--window", cfg.window, "grading window lo hi for C(B)")->expected(2);
  app.add_option("--seed", cfg.seed, "seed for associativity spot checks");
  app.add_option("--type", cfg.type, "Dynkin type used to realize a presentation, e.g. A4");

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("file", cfg.input)->required()->check(CLI::ExistingFile);
    return s;
  };
  auto* check = file_cmd("check", "validate a presentation and report dimension and gldim");
  auto* form = file_cmd("form", "Tits and Euler forms of a presentation");
  auto* relext = file_cmd("relext", "relation extension of End(T)");
  auto* cluster = file_cmd("cluster", "orbit algebra C(B) of a tilting complex");
  auto* pi = file_cmd("pi", "the projection C(B) -> R(B) and the criteria for R(B) = C(B)");
  auto* roll = file_cmd("roll", "rolling sequence of a tilting complex");
  int steps = 0;
  bool to_tilted = false;
  std::string dot_dir;
  roll->add_option("--steps", steps, "number of rolls");
  roll->add_flag("--to-tilted", to_tilted, "roll until the algebra is tilted");
  roll->add_option("--dot-dir", dot_dir, "write one DOT file per step");
  auto* cut = file_cmd("cut", "admissible cuts of a presentation");
  bool enumerate = false;
  std::string apply;
  auto* en = cut->add_flag("--enumerate", enumerate, "list all admissible cuts");
  auto* ap = cut->add_option("--apply", apply, "comma separated arrow ids");
  en->excludes(ap);
  auto* synth = file_cmd("synth", "cluster-tilted relations on the quiver of a file");
  auto* verify = file_cmd("verify-iff", "decide whether a presentation is iterated tilted of Dynkin type");
  auto* corpus = app.add_subcommand("corpus", "exhaustive checks over a Dynkin type");
  corpus->add_option("type", cfg.input, "A3, A4, A5, D4, ...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*form) return cmd_form(cfg);
    if (*relext) return cmd_relext(cfg);
    if (*cluster) return cmd_cluster(cfg);
    if (*pi) return cmd_pi(cfg);
    if (*roll) {
      if (!to_tilted && steps <= 0) throw InputError("roll needs --steps k or --to-tilted");
      return cmd_roll(cfg, steps, to_tilted, dot_dir);
    }
    if (*cut) {
      if (!enumerate && apply.empty()) throw InputError("cut needs --enumerate or --apply");
      return cmd_cut(cfg, enumerate, apply);
    }
    if (*synth) return cmd_synth(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*corpus) return cmd_corpus(cfg);
  } catch (const ParseError& e) {
    bool admissibility = std::string(e.what()).find("length") != std::string::npos;
    return error(admissibility ? "admissibility" : "parse", e.what(), e.line, e.col);
  } catch (const InvalidRelation& e) {
    return error("admissibility", e.what());
  } catch (const TruncationTooSmall& e) {
    return error("admissibility", e.what());
  } catch (const InvalidQuiver& e) {
    return error("quiver", e.what());
  } catch (const NotDynkin& e) {
    return error("type", e.what());
  } catch (const InputError& e) {
    return error("input", e.what());
  } catch (const std::invalid_argument& e) {
    return error("input", e.what());
  } catch (const NotClusterQuiver& e) {
    emit({{"verdict", "NO"}, {"reason", e.what()}});
    return kVerdictNo;
  } catch (const NotAdmissibleCut& e) {
    emit({{"verdict", "NO"}, {"reason", e.what()}});
    return kVerdictNo;
  } catch (const std::runtime_error& e) {
    // gldim too large, window too small, potential failures, step limits
    emit({{"verdict", "NO"}, {"reason", e.what()}});
    return kVerdictNo;
  }
  return kInputError;
}
