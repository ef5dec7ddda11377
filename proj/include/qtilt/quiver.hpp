#pragma once
// Quivers, paths, relations and presentations (Q, I) with their text format.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtilt/linalg.hpp"

namespace qtilt {

struct InvalidQuiver : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidRelation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg);
  int line, col;
};

struct Arrow {
  std::string id;
  int src = -1;
  int tgt = -1;
};

class Quiver {
 public:
  std::string name = "Q";
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t n() const { return vertices.size(); }
  std::size_t m() const { return arrows.size(); }

  int add_vertex(const std::string& id);
  int add_arrow(const std::string& id, int src, int tgt);
  int add_arrow(const std::string& id, const std::string& src, const std::string& tgt);

  int vertex_index(const std::string& id) const;  // -1 if absent
  int arrow_index(const std::string& id) const;

  void validate() const;  // throws InvalidQuiver

  std::vector<std::vector<int>> out_arrows() const;
  std::vector<std::vector<int>> in_arrows() const;
  int arrow_count(int from, int to) const;
  bool is_acyclic() const;
  bool is_connected() const;

  Quiver without_arrows(const std::vector<int>& drop) const;
  // Full subquiver on the kept vertices, in the given order.
  Quiver full_subquiver(const std::vector<int>& keep) const;
};

// Arrows are stored in application order: arrows[0] is applied first.
// Notation prints them right to left, so "b*a" means first a then b.
struct Path {
  int src = -1;
  int tgt = -1;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }
  bool operator<(const Path& o) const;
  bool operator==(const Path& o) const;
  static Path trivial_at(int v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a);
  Path then(const Quiver& q, int a) const;  // append arrow a after this path
  bool contains_arrow(int a) const;
};

// Concatenation: p first, then q.
Path concat(const Path& p, const Path& q);
std::string path_string(const Quiver& q, const Path& p);

struct Term {
  Rat coef;
  Path path;
};

struct Relation {
  std::vector<Term> terms;

  int src() const { return terms.empty() ? -1 : terms.front().path.src; }
  int tgt() const { return terms.empty() ? -1 : terms.front().path.tgt; }
  bool is_zero_relation() const { return terms.size() == 1; }
  bool involves_arrow(int a) const;
  void validate() const;  // parallel terms, length >= 2, some nonzero coefficient
};

std::string relation_string(const Quiver& q, const Relation& r);
// Drops zero coefficients, merges equal paths, sorts terms deterministically.
Relation normalized(Relation r);

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  int truncation = 0;  // 0 means the default 2 * |vertices|

  int bound() const { return truncation > 0 ? truncation : 2 * static_cast<int>(quiver.n()); }
  void validate() const;
};

Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

std::string to_dot(const Quiver& q);
std::string to_dot(const Presentation& p);

}  // namespace qtilt
