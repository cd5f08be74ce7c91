#include "fivelist/format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace fivelist {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::string spaced;
  for (char ch : line) {
    if (ch == ':') spaced += " : ";
    else spaced += ch;
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

class LineReader {
 public:
  LineReader(int line, std::vector<std::string> toks) : line_(line), toks_(std::move(toks)) {}

  int integer(const char* what) {
    if (pos_ >= toks_.size()) throw ParseError(line_, std::string("missing ") + what);
    const std::string& t = toks_[pos_++];
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw ParseError(line_, std::string("expected ") + what + ", got '" + t + "'");
    }
    return value;
  }
  void colon() {
    if (pos_ >= toks_.size() || toks_[pos_] != ":") throw ParseError(line_, "expected ':'");
    ++pos_;
  }
  bool done() const { return pos_ >= toks_.size(); }
  void finish() {
    if (!done()) throw ParseError(line_, "unexpected token '" + toks_[pos_] + "'");
  }
  int line() const { return line_; }

 private:
  int line_;
  std::vector<std::string> toks_;
  std::size_t pos_ = 1;
};

}  // namespace

Instance parse_instance(std::string_view text) {
  std::optional<int> n;
  RawDrawing raw;
  std::vector<bool> has_rot;
  std::vector<ColorList> lists;
  std::vector<bool> has_list;
  std::vector<Vertex> path;
  int path_line = 0;
  std::vector<Vertex> n_set;
  std::vector<std::pair<Edge, int>> m_edges;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string key = toks.front();
    LineReader r(lineno, std::move(toks));
    auto vertex = [&](const char* what) {
      const int v = r.integer(what);
      if (v < 0 || v >= *n) {
        throw ParseError(lineno, std::string(what) + " " + std::to_string(v) + " out of range 0.." +
                                     std::to_string(*n - 1));
      }
      return v;
    };

    if (key == "GRAPH") {
      if (n) throw ParseError(lineno, "GRAPH given twice");
      const int count = r.integer("vertex count");
      if (count < 0) throw ParseError(lineno, "negative vertex count");
      r.finish();
      n = count;
      raw.rotation.assign(count, {});
      has_rot.assign(count, false);
      lists.assign(count, {});
      has_list.assign(count, false);
      continue;
    }
    if (!n) throw ParseError(lineno, "expected GRAPH before '" + key + "'");

    if (key == "ROT") {
      const Vertex v = vertex("vertex");
      r.colon();
      if (has_rot[v]) throw ParseError(lineno, "ROT " + std::to_string(v) + " given twice");
      has_rot[v] = true;
      while (!r.done()) raw.rotation[v].push_back(vertex("neighbor"));
    } else if (key == "OUTER") {
      const Vertex a = vertex("vertex");
      const Vertex b = vertex("vertex");
      r.finish();
      raw.outer.push_back({a, b});
    } else if (key == "CROSS") {
      CrossingSpec x;
      x.a = vertex("vertex");
      x.b = vertex("vertex");
      x.c = vertex("vertex");
      x.d = vertex("vertex");
      r.finish();
      raw.crossings.push_back(x);
    } else if (key == "LIST") {
      const Vertex v = vertex("vertex");
      r.colon();
      if (has_list[v]) throw ParseError(lineno, "LIST " + std::to_string(v) + " given twice");
      has_list[v] = true;
      while (!r.done()) {
        const int c = r.integer("color");
        if (c < 0) throw ParseError(lineno, "negative color " + std::to_string(c));
        lists[v].push_back(c);
      }
    } else if (key == "PATH") {
      if (path_line) throw ParseError(lineno, "PATH given twice");
      path_line = lineno;
      while (!r.done()) path.push_back(vertex("path vertex"));
    } else if (key == "NSET") {
      while (!r.done()) n_set.push_back(vertex("N vertex"));
    } else if (key == "MSET") {
      const Vertex a = vertex("vertex");
      const Vertex b = vertex("vertex");
      r.finish();
      m_edges.push_back({make_edge(a, b), lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!n) throw ParseError(0, "missing GRAPH line");

  Instance inst;
  try {
    inst.drawing = Drawing::planarize(raw);
  } catch (const StructuralError& e) {
    throw ParseError(0, e.what());
  }
  inst.lists = ListAssignment(std::move(lists));
  try {
    require_outer_path(inst.drawing, path, 3);
  } catch (const StructuralError& e) {
    throw ParseError(path_line, e.what());
  }
  inst.path = std::move(path);
  std::sort(n_set.begin(), n_set.end());
  n_set.erase(std::unique(n_set.begin(), n_set.end()), n_set.end());
  inst.n_set = std::move(n_set);
  for (const auto& [e, line] : m_edges) {
    if (!inst.drawing.adjacent(e.first, e.second)) {
      throw ParseError(line, "MSET " + std::to_string(e.first) + " " + std::to_string(e.second) +
                                 " is not an edge");
    }
    inst.m_set.push_back(e);
  }
  std::sort(inst.m_set.begin(), inst.m_set.end());
  inst.m_set.erase(std::unique(inst.m_set.begin(), inst.m_set.end()), inst.m_set.end());
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const RawDrawing raw = inst.drawing.unplanarize();
  const int n = inst.num_vertices();
  std::ostringstream out;
  out << "GRAPH " << n << "\n";
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> r = raw.rotation[v];
    if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    out << "ROT " << v << ":";
    for (Vertex w : r) out << ' ' << w;
    out << "\n";
  }
  for (const Dart& d : raw.outer) out << "OUTER " << d.from << ' ' << d.to << "\n";
  for (const CrossingSpec& x0 : raw.crossings) {
    const CrossingSpec x = canonical(x0);
    out << "CROSS " << x.a << ' ' << x.b << ' ' << x.c << ' ' << x.d << "\n";
  }
  for (Vertex v = 0; v < n; ++v) {
    out << "LIST " << v << ":";
    for (Color c : inst.lists[v]) out << ' ' << c;
    out << "\n";
  }
  if (!inst.path.empty()) {
    out << "PATH";
    for (Vertex v : inst.path) out << ' ' << v;
    out << "\n";
  }
  if (!inst.n_set.empty()) {
    out << "NSET";
    for (Vertex v : inst.n_set) out << ' ' << v;
    out << "\n";
  }
  for (const Edge& e : inst.m_set) out << "MSET " << e.first << ' ' << e.second << "\n";
  return out.str();
}

}  // namespace fivelist
