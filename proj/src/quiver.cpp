#include "qtilt/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace qtilt {

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

int Quiver::add_vertex(const std::string& id) {
  vertices.push_back(id);
  return static_cast<int>(vertices.size()) - 1;
}

int Quiver::add_arrow(const std::string& id, int src, int tgt) {
  arrows.push_back(Arrow{id, src, tgt});
  return static_cast<int>(arrows.size()) - 1;
}

int Quiver::add_arrow(const std::string& id, const std::string& src, const std::string& tgt) {
  int s = vertex_index(src), t = vertex_index(tgt);
  if (s < 0 || t < 0) throw InvalidQuiver("arrow " + id + " uses an undeclared vertex");
  return add_arrow(id, s, t);
}

int Quiver::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  return -1;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw InvalidQuiver("duplicate vertex " + v);
  std::set<std::string> aseen;
  for (const auto& a : arrows) {
    if (!aseen.insert(a.id).second) throw InvalidQuiver("duplicate arrow " + a.id);
    if (a.src < 0 || a.tgt < 0 || a.src >= static_cast<int>(n()) || a.tgt >= static_cast<int>(n()))
      throw InvalidQuiver("arrow " + a.id + " has an undeclared endpoint");
    if (a.src == a.tgt) throw InvalidQuiver("loop at arrow " + a.id);
  }
}

std::vector<std::vector<int>> Quiver::out_arrows() const {
  std::vector<std::vector<int>> out(n());
  for (std::size_t a = 0; a < arrows.size(); ++a) out[arrows[a].src].push_back(static_cast<int>(a));
  return out;
}

std::vector<std::vector<int>> Quiver::in_arrows() const {
  std::vector<std::vector<int>> in(n());
  for (std::size_t a = 0; a < arrows.size(); ++a) in[arrows[a].tgt].push_back(static_cast<int>(a));
  return in;
}

int Quiver::arrow_count(int from, int to) const {
  int c = 0;
  for (const auto& a : arrows)
    if (a.src == from && a.tgt == to) ++c;
  return c;
}

bool Quiver::is_acyclic() const {
  std::vector<int> indeg(n(), 0);
  for (const auto& a : arrows) ++indeg[a.tgt];
  auto out = out_arrows();
  std::vector<int> stack;
  for (std::size_t v = 0; v < n(); ++v)
    if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int a : out[v])
      if (--indeg[arrows[a].tgt] == 0) stack.push_back(arrows[a].tgt);
  }
  return seen == n();
}

bool Quiver::is_connected() const {
  if (n() == 0) return true;
  std::vector<std::vector<int>> adj(n());
  for (const auto& a : arrows) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
  std::vector<bool> seen(n(), false);
  std::vector<int> st{0};
  seen[0] = true;
  std::size_t cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        st.push_back(w);
      }
  }
  return cnt == n();
}

Quiver Quiver::without_arrows(const std::vector<int>& drop) const {
  Quiver q;
  q.name = name;
  q.vertices = vertices;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (std::find(drop.begin(), drop.end(), static_cast<int>(a)) == drop.end()) q.arrows.push_back(arrows[a]);
  return q;
}

Quiver Quiver::full_subquiver(const std::vector<int>& keep) const {
  Quiver q;
  q.name = name;
  std::vector<int> pos(n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = static_cast<int>(i);
    q.vertices.push_back(vertices[keep[i]]);
  }
  for (const auto& a : arrows)
    if (pos[a.src] >= 0 && pos[a.tgt] >= 0) q.arrows.push_back(Arrow{a.id, pos[a.src], pos[a.tgt]});
  return q;
}

bool Path::operator<(const Path& o) const {
  if (src != o.src) return src < o.src;
  if (tgt != o.tgt) return tgt < o.tgt;
  return arrows < o.arrows;
}

bool Path::operator==(const Path& o) const {
  return src == o.src && tgt == o.tgt && arrows == o.arrows;
}

Path Path::of_arrow(const Quiver& q, int a) {
  return Path{q.arrows[a].src, q.arrows[a].tgt, {a}};
}

Path Path::then(const Quiver& q, int a) const {
  if (q.arrows[a].src != tgt) throw InvalidRelation("arrows do not compose");
  Path p = *this;
  p.arrows.push_back(a);
  p.tgt = q.arrows[a].tgt;
  return p;
}

bool Path::contains_arrow(int a) const {
  return std::find(arrows.begin(), arrows.end(), a) != arrows.end();
}

Path concat(const Path& p, const Path& q) {
  if (p.tgt != q.src) throw InvalidRelation("paths do not compose");
  Path r{p.src, q.tgt, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::string path_string(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertices[p.src];
  std::string s;
  for (std::size_t i = p.arrows.size(); i-- > 0;) {
    s += q.arrows[p.arrows[i]].id;
    if (i) s += "*";
  }
  return s;
}

bool Relation::involves_arrow(int a) const {
  for (const auto& t : terms)
    if (t.path.contains_arrow(a)) return true;
  return false;
}

void Relation::validate() const {
  if (terms.empty()) throw InvalidRelation("empty relation");
  bool nonzero = false;
  for (const auto& t : terms) {
    if (t.path.length() < 2) throw InvalidRelation("relation term of length < 2");
    if (t.path.src != terms[0].path.src || t.path.tgt != terms[0].path.tgt)
      throw InvalidRelation("relation terms are not parallel");
    if (sgn(t.coef) != 0) nonzero = true;
  }
  if (!nonzero) throw InvalidRelation("relation with only zero coefficients");
}

Relation normalized(Relation r) {
  std::map<Path, Rat> acc;
  for (auto& t : r.terms) acc[t.path] += t.coef;
  Relation out;
  for (auto& [p, c] : acc)
    if (sgn(c) != 0) out.terms.push_back(Term{c, p});
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const Term& a, const Term& b) {
    if (a.path.length() != b.path.length()) return a.path.length() < b.path.length();
    return a.path.arrows < b.path.arrows;
  });
  return out;
}

std::string relation_string(const Quiver& q, const Relation& r) {
  std::string s;
  bool first = true;
  for (const auto& t : r.terms) {
    Rat c = t.coef;
    if (first) {
      if (sgn(c) < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    if (c != 1) s += c.get_str() + "*";
    s += path_string(q, t.path);
    first = false;
  }
  return s;
}

void Presentation::validate() const {
  quiver.validate();
  for (const auto& r : relations) {
    r.validate();
    for (const auto& t : r.terms) {
      int v = t.path.src;
      for (int a : t.path.arrows) {
        if (a < 0 || a >= static_cast<int>(quiver.m())) throw InvalidRelation("unknown arrow in relation");
        if (quiver.arrows[a].src != v) throw InvalidRelation("arrows in a relation term do not compose");
        v = quiver.arrows[a].tgt;
      }
      if (v != t.path.tgt) throw InvalidRelation("relation term endpoints are inconsistent");
    }
  }
  if (truncation < 0) throw InvalidRelation("truncation bound must be positive");
}

namespace {

struct Line {
  int number;
  std::string text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::pair<int, std::string>> split_words(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    out.emplace_back(static_cast<int>(i) + 1, s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string strip_comment(const std::string& s) {
  auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!((c >= '0' && c <= '9') || c == '/')) return false;
  return true;
}

Relation parse_relation_line(const Quiver& q, const Line& ln) {
  const std::string& s = ln.text;
  Relation rel;
  std::size_t i = 0;
  int sign = 1;
  bool expect_term = true;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    if (s[i] == '+' || s[i] == '-') {
      if (!expect_term && rel.terms.empty()) throw ParseError(ln.number, static_cast<int>(i) + 1, "unexpected sign");
      if (expect_term && !rel.terms.empty())
        throw ParseError(ln.number, static_cast<int>(i) + 1, "two signs in a row");
      sign = s[i] == '-' ? -1 : 1;
      expect_term = true;
      ++i;
      continue;
    }
    if (!expect_term) throw ParseError(ln.number, static_cast<int>(i) + 1, "expected '+' or '-' between terms");
    // a term runs until the next unescaped sign at factor boundary or whitespace-separated sign
    std::size_t j = i;
    std::vector<std::pair<int, std::string>> factors;
    std::size_t fstart = i;
    while (j <= s.size()) {
      if (j == s.size() || s[j] == '*' || is_space(s[j]) || s[j] == '+' ||
          (s[j] == '-' && j > fstart)) {
        std::string f = s.substr(fstart, j - fstart);
        if (f.empty()) throw ParseError(ln.number, static_cast<int>(fstart) + 1, "empty factor");
        factors.emplace_back(static_cast<int>(fstart) + 1, f);
        if (j < s.size() && s[j] == '*') {
          ++j;
          while (j < s.size() && is_space(s[j])) ++j;
          fstart = j;
          continue;
        }
        // allow spaces before a following '*'
        std::size_t k = j;
        while (k < s.size() && is_space(s[k])) ++k;
        if (k < s.size() && s[k] == '*') {
          j = k + 1;
          while (j < s.size() && is_space(s[j])) ++j;
          fstart = j;
          continue;
        }
        j = k;
        break;
      }
      ++j;
    }
    Rat coef = sign;
    std::size_t first_path = 0;
    if (looks_rational(factors[0].second) && q.arrow_index(factors[0].second) < 0) {
      try {
        coef *= parse_rational(factors[0].second);
      } catch (const std::exception& e) {
        throw ParseError(ln.number, factors[0].first, e.what());
      }
      first_path = 1;
    }
    if (first_path == factors.size()) throw ParseError(ln.number, factors[0].first, "term has no path");
    Path p;
    // factors are written right to left
    for (std::size_t k = factors.size(); k-- > first_path;) {
      int a = q.arrow_index(factors[k].second);
      if (a < 0) throw ParseError(ln.number, factors[k].first, "unknown arrow '" + factors[k].second + "'");
      if (p.src < 0) {
        p = Path::of_arrow(q, a);
      } else {
        if (q.arrows[a].src != p.tgt)
          throw ParseError(ln.number, factors[k].first, "arrow '" + factors[k].second + "' does not compose");
        p = p.then(q, a);
      }
    }
    if (p.length() < 2)
      throw ParseError(ln.number, factors[first_path].first, "relation terms must have length at least 2");
    if (!rel.terms.empty() && (p.src != rel.terms[0].path.src || p.tgt != rel.terms[0].path.tgt))
      throw ParseError(ln.number, factors[first_path].first, "relation terms are not parallel");
    rel.terms.push_back(Term{coef, p});
    sign = 1;
    expect_term = false;
    i = j;
  }
  if (rel.terms.empty()) throw ParseError(ln.number, 1, "empty relation");
  if (expect_term) throw ParseError(ln.number, static_cast<int>(s.size()), "dangling sign");
  Relation r = normalized(rel);
  if (r.terms.empty()) throw ParseError(ln.number, 1, "relation cancels to zero");
  return r;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  enum class Section { Header, Arrows, Relations } sec = Section::Header;
  bool have_quiver = false, have_vertices = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip_comment(raw);
    auto words = split_words(s);
    if (words.empty()) continue;
    const std::string& kw = words[0].second;
    if (kw == "quiver") {
      if (have_quiver) throw ParseError(lineno, words[0].first, "duplicate 'quiver' line");
      if (words.size() != 2) throw ParseError(lineno, words[0].first, "expected 'quiver <name>'");
      p.quiver.name = words[1].second;
      have_quiver = true;
      continue;
    }
    if (kw == "vertices") {
      if (!have_quiver) throw ParseError(lineno, words[0].first, "'vertices' before 'quiver'");
      if (have_vertices) throw ParseError(lineno, words[0].first, "duplicate 'vertices' line");
      for (std::size_t k = 1; k < words.size(); ++k) {
        if (p.quiver.vertex_index(words[k].second) >= 0)
          throw ParseError(lineno, words[k].first, "duplicate vertex '" + words[k].second + "'");
        p.quiver.add_vertex(words[k].second);
      }
      have_vertices = true;
      continue;
    }
    if (kw == "truncation") {
      if (words.size() != 2) throw ParseError(lineno, words[0].first, "expected 'truncation <N>'");
      try {
        p.truncation = std::stoi(words[1].second);
      } catch (...) {
        throw ParseError(lineno, words[1].first, "bad truncation bound");
      }
      if (p.truncation <= 0) throw ParseError(lineno, words[1].first, "truncation bound must be positive");
      continue;
    }
    if (kw == "arrows" && words.size() == 1) {
      if (!have_vertices) throw ParseError(lineno, words[0].first, "'arrows' before 'vertices'");
      sec = Section::Arrows;
      continue;
    }
    if (kw == "relations" && words.size() == 1) {
      if (!have_vertices) throw ParseError(lineno, words[0].first, "'relations' before 'vertices'");
      sec = Section::Relations;
      continue;
    }
    if (sec == Section::Arrows) {
      // id: src -> tgt
      auto colon = s.find(':');
      if (colon == std::string::npos) throw ParseError(lineno, words[0].first, "expected 'id: src -> tgt'");
      auto idw = split_words(s.substr(0, colon));
      auto rest = split_words(s.substr(colon + 1));
      int off = static_cast<int>(colon) + 1;
      if (idw.size() != 1) throw ParseError(lineno, words[0].first, "bad arrow id");
      if (rest.size() != 3 || rest[1].second != "->")
        throw ParseError(lineno, off + (rest.empty() ? 1 : rest[0].first), "expected 'src -> tgt'");
      const std::string& id = idw[0].second;
      if (p.quiver.arrow_index(id) >= 0) throw ParseError(lineno, idw[0].first, "duplicate arrow '" + id + "'");
      int sidx = p.quiver.vertex_index(rest[0].second);
      int tidx = p.quiver.vertex_index(rest[2].second);
      if (sidx < 0) throw ParseError(lineno, off + rest[0].first, "unknown vertex '" + rest[0].second + "'");
      if (tidx < 0) throw ParseError(lineno, off + rest[2].first, "unknown vertex '" + rest[2].second + "'");
      if (sidx == tidx) throw ParseError(lineno, off + rest[0].first, "loops are not allowed");
      p.quiver.add_arrow(id, sidx, tidx);
      continue;
    }
    if (sec == Section::Relations) {
      p.relations.push_back(parse_relation_line(p.quiver, Line{lineno, s}));
      continue;
    }
    throw ParseError(lineno, words[0].first, "unexpected '" + kw + "'");
  }
  if (!have_quiver) throw ParseError(lineno, 1, "missing 'quiver' line");
  if (!have_vertices) throw ParseError(lineno, 1, "missing 'vertices' line");
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "quiver " << p.quiver.name << "\n";
  os << "vertices";
  for (const auto& v : p.quiver.vertices) os << " " << v;
  os << "\n";
  if (p.truncation > 0) os << "truncation " << p.truncation << "\n";
  os << "arrows\n";
  for (const auto& a : p.quiver.arrows)
    os << a.id << ": " << p.quiver.vertices[a.src] << " -> " << p.quiver.vertices[a.tgt] << "\n";
  os << "relations\n";
  for (const auto& r : p.relations) os << relation_string(p.quiver, r) << "\n";
  return os.str();
}

namespace {
std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_dot(const Quiver& q) {
  Presentation p;
  p.quiver = q;
  return to_dot(p);
}

std::string to_dot(const Presentation& p) {
  const Quiver& q = p.quiver;
  std::ostringstream os;
  os << "digraph " << dot_quote(q.name) << " {\n";
  os << "  rankdir=LR;\n";
  for (const auto& v : q.vertices) os << "  " << dot_quote(v) << ";\n";
  for (const auto& a : q.arrows)
    os << "  " << dot_quote(q.vertices[a.src]) << " -> " << dot_quote(q.vertices[a.tgt])
       << " [label=" << dot_quote(a.id) << "];\n";
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    os << "  " << dot_quote(q.vertices[r.src()]) << " -> " << dot_quote(q.vertices[r.tgt()])
       << " [style=dashed, constraint=false, arrowhead=none, label=" << dot_quote(relation_string(q, r))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qtilt
