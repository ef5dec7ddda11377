#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qtilt/quotient.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(QTILT_DATA_DIR) + "/" + name; }

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(QTILT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify-iff answers with a certificate") {
  auto yes = run("verify-iff " + data("a3rel.pres"));
  CHECK(yes.code == 0);
  auto j = parse(yes);
  CHECK(j["verdict"] == "YES");
  CHECK(j["certificate"]["cut"].size() == 1);
  CHECK(j["certificate"]["cluster"]["relations"].size() == 3);

  auto no = run("verify-iff " + data("notcut_b.pres"));
  CHECK(no.code == 2);
  CHECK(parse(no)["verdict"] == "NO");
}

TEST_CASE("input errors exit with code 1") {
  auto bad = run("check " + data("bad.pres"));
  CHECK(bad.code == 1);
  auto j = parse(bad);
  CHECK(j["error"] == "admissibility");
  CHECK(j["line"] == 7);
  CHECK(run("check /nonexistent.pres").code == 1);
  CHECK(run("roll " + data("d8.cplx")).code == 1);
  CHECK(run("relext " + data("a3rel.pres")).code == 1);
}

TEST_CASE("roll to a tilted algebra") {
  auto dir = std::filesystem::temp_directory_path() / "qtilt_roll_dots";
  std::filesystem::remove_all(dir);
  auto r = run("roll " + data("d8.cplx") + " --to-tilted --dot-dir " + dir.string());
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["tilted_at"] == 3);
  REQUIRE(j["steps"].size() == 4);
  for (int h = 0; h < 3; ++h) CHECK(j["steps"][h]["tilted"] == false);
  CHECK(j["steps"][3]["tilted"] == true);
  CHECK(j["steps"][3]["n"] == 0);
  CHECK(std::filesystem::exists(dir / "step3.dot"));
  std::filesystem::remove_all(dir);

  auto bad = run("roll " + data("a4_gldim3.cplx") + " --steps 1");
  CHECK(bad.code == 2);
}

TEST_CASE("output is deterministic") {
  auto a = run("pi " + data("d8.cplx"));
  auto b = run("pi " + data("d8.cplx"));
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse(a)["R_equals_C"] == false);
  CHECK(parse(a)["cond_d"]["holds"] == false);
  CHECK(run("cluster " + data("d8.cplx") + " --seed 3").out == run("cluster " + data("d8.cplx") + " --seed 3").out);
}

TEST_CASE("dot snapshots") {
  for (const char* f : {"a2", "cycle3", "d8_b0"}) {
    auto r = run(std::string("check ") + data(std::string(f) + ".pres") + " --format dot");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(data(std::string("golden/") + f + ".dot")));
  }
}

TEST_CASE("synth, cut and relext round trips") {
  auto s = run("synth " + data("cycle3.pres") + " --format text");
  CHECK(s.code == 0);
  auto p = qtilt::parse_presentation(s.out);
  CHECK(qtilt::schurian_iso(p, qtilt::load_presentation(data("cycle3.pres"))).has_value());

  auto cuts = parse(run("cut " + data("cycle3.pres") + " --enumerate"));
  CHECK(cuts.size() == 3);
  for (const auto& c : cuts) CHECK(c["gldim"] == 2);
  CHECK(run("cut " + data("cycle3.pres") + " --apply a,b").code == 2);

  auto rel = run("relext " + data("a3rel.pres") + " --type A3");
  CHECK(rel.code == 0);
  CHECK(parse(rel)["R"]["arrows"].size() == 3);
  CHECK(run("synth " + data("notcut_r.pres")).code == 0);
  CHECK(run("synth " + data("notcut_b.pres")).code == 2);
  CHECK(run("corpus A3").code == 0);
}
