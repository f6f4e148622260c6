#include "actbij/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <string_view>

namespace actbij {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Arc {
  int tail, head;
};

std::vector<Arc> resolve(const OrderedDigraph& g) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], static_cast<int>(i));
  std::vector<Arc> arcs;
  for (const auto& [t, h] : g.edges) {
    auto it = index.find(t), ih = index.find(h);
    if (it == index.end()) throw std::invalid_argument("unknown vertex token '" + t + "'");
    if (ih == index.end()) throw std::invalid_argument("unknown vertex token '" + h + "'");
    arcs.push_back({it->second, ih->second});
  }
  return arcs;
}

std::vector<SignedSet> simple_cycles(const std::vector<Arc>& arcs, int nv) {
  const int n = static_cast<int>(arcs.size());
  std::vector<std::vector<int>> incident(nv);
  for (int f = 0; f < n; ++f) {
    if (arcs[f].tail == arcs[f].head) continue;
    incident[arcs[f].tail].push_back(f);
    incident[arcs[f].head].push_back(f);
  }
  std::vector<SignedSet> out;
  std::vector<char> visited(nv, 0);
  for (int e = 0; e < n; ++e) {
    const Element el = e + 1;
    if (arcs[e].tail == arcs[e].head) {
      out.push_back({ElementSet::single(el), {}});
      continue;
    }
    // Paths head(e) -> tail(e) through edges later than e close a cycle
    // whose smallest edge is e, traversed along e.
    const int target = arcs[e].tail;
    std::fill(visited.begin(), visited.end(), 0);
    visited[arcs[e].head] = 1;
    auto walk = [&](auto&& self, int at, SignedSet path) -> void {
      for (int f : incident[at]) {
        if (f <= e) continue;
        bool forward = arcs[f].tail == at;
        int next = forward ? arcs[f].head : arcs[f].tail;
        SignedSet step = path;
        (forward ? step.positive : step.negative) |= ElementSet::single(f + 1);
        if (next == target) {
          out.push_back(step);
        } else if (!visited[next]) {
          visited[next] = 1;
          self(self, next, step);
          visited[next] = 0;
        }
      }
    };
    walk(walk, arcs[e].head, SignedSet{ElementSet::single(el), {}});
  }
  return out;
}

std::vector<SignedSet> minimal_cuts(const std::vector<Arc>& arcs, int nv) {
  // components over vertices that carry edges
  std::vector<int> comp(nv, -1);
  std::vector<std::vector<int>> members;
  std::vector<std::vector<int>> adj(nv);
  for (const auto& a : arcs) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  for (int v = 0; v < nv; ++v) {
    if (comp[v] >= 0 || adj[v].empty()) continue;
    members.emplace_back();
    std::vector<int> stack{v};
    comp[v] = static_cast<int>(members.size()) - 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.back().push_back(u);
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = comp[v];
          stack.push_back(w);
        }
    }
  }
  std::vector<SignedSet> cuts;
  std::vector<char> side(nv, 0);
  for (const auto& vs : members) {
    const int k = static_cast<int>(vs.size());
    // subsets containing vs[0], excluding the whole component
    for (std::uint64_t s = 0; s + 1 < (std::uint64_t{1} << (k - 1)); ++s) {
      side[vs[0]] = 1;
      for (int i = 1; i < k; ++i) side[vs[i]] = (s >> (i - 1)) & 1U;
      SignedSet cut;
      for (size_t f = 0; f < arcs.size(); ++f) {
        const auto& a = arcs[f];
        if (comp[a.tail] != comp[vs[0]] || side[a.tail] == side[a.head]) continue;
        (side[a.tail] ? cut.positive : cut.negative) |= ElementSet::single(static_cast<Element>(f) + 1);
      }
      if (!cut.is_zero()) cuts.push_back(cut.canonical());
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<SignedSet> out;
  for (const auto& c : cuts)
    if (std::none_of(cuts.begin(), cuts.end(), [&](const SignedSet& d) {
          return d.support() != c.support() && d.support().subset_of(c.support());
        }))
      out.push_back(c);
  return out;
}

struct Line {
  int number;
  std::vector<std::pair<int, std::string>> tokens;  // (column, text)
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.emplace_back(static_cast<int>(start) + 1, raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_count(const Line& line, const std::string& keyword) {
  if (line.tokens.size() != 2 || line.tokens[0].second != keyword)
    throw ParseError(line.number, line.tokens[0].first, "expected '" + keyword + " <count>'");
  const auto& [col, tok] = line.tokens[1];
  int value = -1;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError(line.number, col, "expected a nonnegative integer, got '" + tok + "'");
  return value;
}

}  // namespace

OrientedMatroid om_from_digraph(const OrderedDigraph& g) {
  const int n = static_cast<int>(g.edges.size());
  require_enumerable(n, "om_from_digraph");
  auto arcs = resolve(g);
  const int nv = static_cast<int>(g.vertices.size());
  return om_from_lists(n, simple_cycles(arcs, nv), minimal_cuts(arcs, nv));
}

OrderedDigraph reverse_edges(const OrderedDigraph& g, ElementSet a) {
  OrderedDigraph out = g;
  for (Element e : a) std::swap(out.edges.at(e - 1).first, out.edges.at(e - 1).second);
  return out;
}

OrderedDigraph parse_graph_file(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty file, expected 'graph <num_vertices>'");
  const int declared = parse_count(lines[0], "graph");
  OrderedDigraph g;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2)
      throw ParseError(line.number, line.tokens[0].first, "expected '<tail> <head>'");
    for (const auto& [col, tok] : line.tokens)
      if (std::find(g.vertices.begin(), g.vertices.end(), tok) == g.vertices.end()) {
        if (static_cast<int>(g.vertices.size()) == declared)
          throw ParseError(line.number, col, "unknown vertex token '" + tok + "' (more than " +
                                                 std::to_string(declared) + " vertices)");
        g.vertices.push_back(tok);
      }
    g.edges.emplace_back(line.tokens[0].second, line.tokens[1].second);
  }
  if (static_cast<int>(g.edges.size()) > kMaxElements)
    throw ParseError(lines.back().number, 1, "too many edges");
  // declared but unused vertices are isolated
  for (int k = static_cast<int>(g.vertices.size()); k < declared; ++k) g.vertices.push_back("_" + std::to_string(k));
  return g;
}

OrientedMatroid parse_om_file(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty file, expected 'om <n>'");
  const int n = parse_count(lines[0], "om");
  if (n > kMaxElements) throw ParseError(lines[0].number, lines[0].tokens[1].first, "too many elements");
  std::vector<SignedSet> circuits, cocircuits;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& head = line.tokens[0].second;
    if (line.tokens.size() != 2 || (head != "C" && head != "D"))
      throw ParseError(line.number, line.tokens[0].first, "expected 'C <signs>' or 'D <signs>'");
    const auto& [col, signs] = line.tokens[1];
    if (static_cast<int>(signs.size()) != n)
      throw ParseError(line.number, col, "sign string of length " + std::to_string(signs.size()) + ", expected " +
                                             std::to_string(n));
    SignedSet s;
    for (int k = 0; k < n; ++k) {
      char c = signs[k];
      if (c == '+') s.positive |= ElementSet::single(k + 1);
      else if (c == '-') s.negative |= ElementSet::single(k + 1);
      else if (c != '0') throw ParseError(line.number, col + k, std::string("bad sign character '") + c + "'");
    }
    if (s.is_zero()) throw ParseError(line.number, col, "signed set with empty support");
    (head == "C" ? circuits : cocircuits).push_back(s);
  }
  try {
    return om_from_lists(n, std::move(circuits), std::move(cocircuits));
  } catch (const InvalidMatroid& err) {
    throw ParseError(lines[0].number, 1, std::string("invalid oriented matroid: ") + err.what());
  }
}

ElementSet parse_reorientation(const std::string& token, int n) {
  auto fail = [&](const std::string& why) {
    return ParseError(1, 1, "reorientation '" + token + "': " + why);
  };
  if (token == "-") return {};
  ElementSet out;
  if (token.rfind("b:", 0) == 0) {
    std::string bits = token.substr(2);
    if (static_cast<int>(bits.size()) != n) throw fail("bitstring must have length " + std::to_string(n));
    for (int k = 0; k < n; ++k) {
      if (bits[k] == '1') out = out.with(k + 1);
      else if (bits[k] != '0') throw fail("bitstring must use 0 and 1");
    }
    return out;
  }
  size_t pos = 0;
  while (pos <= token.size()) {
    size_t comma = token.find(',', pos);
    if (comma == std::string::npos) comma = token.size();
    std::string_view part(token.data() + pos, comma - pos);
    int e = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), e);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw fail("expected comma-separated element indices");
    if (e < 1 || e > n) throw fail("element " + std::to_string(e) + " out of range 1.." + std::to_string(n));
    out = out.with(e);
    pos = comma + 1;
  }
  return out;
}

std::string serialize_graph(const OrderedDigraph& g) {
  std::string out = "graph " + std::to_string(g.vertices.size()) + "\n";
  for (const auto& [t, h] : g.edges) out += t + " " + h + "\n";
  return out;
}

std::string serialize_om(const OrientedMatroid& m) {
  const int n = m.size();
  if (m.ground() != ElementSet::first(n))
    throw std::invalid_argument("om files need the ground set {1..n}; got " + format_set(m.ground()));
  std::string out = "om " + std::to_string(n) + "\n";
  for (const auto& c : m.circuits()) out += "C " + format_signs(c, n) + "\n";
  for (const auto& d : m.cocircuits()) out += "D " + format_signs(d, n) + "\n";
  return out;
}

OrientedMatroid parse_matroid_file(const std::string& text) {
  auto lines = tokenize(text);
  if (!lines.empty() && lines[0].tokens[0].second == "graph") {
    auto g = parse_graph_file(text);
    try {
      return om_from_digraph(g);
    } catch (const std::invalid_argument& err) {
      throw ParseError(1, 1, err.what());
    }
  }
  return parse_om_file(text);
}

}  // namespace actbij
