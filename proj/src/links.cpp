#include "arrkh/links.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace arrkh {

PlanarDiagram parse_pd(const std::string& text) {
  PlanarDiagram d;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    for (char& ch : line)
      if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& why) {
      return DomainError("line " + std::to_string(lineno) + ": " + why);
    };
    std::vector<long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw fail("expected an integer, got '" + tok + "'");
      }
      if (used != tok.size() || v <= 0) throw fail("expected a positive integer, got '" + tok + "'");
      nums.push_back(v);
    }
    if (tag == "X") {
      if (nums.size() != 4) throw fail("a crossing needs four arc labels");
      d.crossings.push_back({nums[0], nums[1], nums[2], nums[3]});
    } else if (tag == "O") {
      if (nums.size() > 1) throw fail("'O' takes at most one count");
      d.free_loops += nums.empty() ? 1 : static_cast<std::size_t>(nums[0]);
    } else {
      throw fail("unknown record '" + tag + "'");
    }
  }
  analyze(d);
  return d;
}

std::string format_pd(const PlanarDiagram& d) {
  std::string out;
  for (const auto& x : d.crossings)
    out += "X " + std::to_string(x[0]) + " " + std::to_string(x[1]) + " " + std::to_string(x[2]) + " " +
           std::to_string(x[3]) + "\n";
  if (d.free_loops) out += "O " + std::to_string(d.free_loops) + "\n";
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t rot(std::size_t slot) { return (slot & ~std::size_t(3)) | ((slot + 1) & 3); }

}  // namespace

DiagramStructure analyze(const PlanarDiagram& d) {
  DiagramStructure st;
  const std::size_t N = d.crossings.size(), slots = 4 * N;
  if (N == 0 && d.free_loops == 0) throw DomainError("empty diagram");
  std::map<long, std::vector<std::size_t>> where;
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t k = 0; k < 4; ++k) where[d.crossings[c][k]].push_back(4 * c + k);
  st.partner.assign(slots, 0);
  for (const auto& [label, ss] : where) {
    if (ss.size() != 2)
      throw DomainError("arc " + std::to_string(label) + " appears " + std::to_string(ss.size()) +
                        " time(s); every arc must appear exactly twice");
    st.partner[ss[0]] = ss[1];
    st.partner[ss[1]] = ss[0];
  }

  // Orientation: slot 0 incoming, slot 2 outgoing; over slots and arc ends alternate.
  std::vector<int> dir(slots, 0);  // +1 incoming, -1 outgoing
  std::vector<std::size_t> todo;
  auto set = [&](std::size_t s, int v) {
    if (dir[s] == 0) {
      dir[s] = v;
      todo.push_back(s);
    } else if (dir[s] != v) {
      throw DomainError("inconsistent orientation at crossing " + std::to_string(s / 4 + 1));
    }
  };
  auto drain = [&] {
    while (!todo.empty()) {
      std::size_t s = todo.back();
      todo.pop_back();
      set(st.partner[s], -dir[s]);
      set(s ^ 2, -dir[s]);  // the other end of the same strand through the crossing
    }
  };
  for (std::size_t c = 0; c < N; ++c) {
    set(4 * c, 1);
    set(4 * c + 2, -1);
  }
  drain();
  for (std::size_t s = 0; s < slots; ++s)
    if (dir[s] == 0) {
      set(s, 1);
      drain();
    }
  st.incoming.resize(slots);
  for (std::size_t s = 0; s < slots; ++s) st.incoming[s] = dir[s] > 0;

  UnionFind uf(N);
  for (std::size_t s = 0; s < slots; ++s) uf.unite(s / 4, st.partner[s] / 4);
  std::map<std::size_t, std::size_t> comp_id;
  st.component.resize(N);
  for (std::size_t c = 0; c < N; ++c) {
    auto [it, fresh] = comp_id.emplace(uf.find(c), comp_id.size());
    st.component[c] = it->second;
  }
  const std::size_t crossing_components = comp_id.size();
  st.components = crossing_components + d.free_loops;

  // Faces are the orbits of slot -> rot(partner(slot)).
  std::vector<std::size_t> face_of(slots, SIZE_MAX);
  st.quadrant_face.assign(N, {SIZE_MAX, SIZE_MAX, SIZE_MAX, SIZE_MAX});
  for (std::size_t s0 = 0; s0 < slots; ++s0) {
    if (face_of[s0] != SIZE_MAX) continue;
    DiagramFace f;
    f.component = st.component[s0 / 4];
    const std::size_t id = st.faces.size();
    for (std::size_t s = s0; face_of[s] == SIZE_MAX; s = rot(st.partner[s])) {
      face_of[s] = id;
      const std::size_t p = st.partner[s];
      f.corners.emplace_back(p / 4, static_cast<int>(p % 4));
      st.quadrant_face[p / 4][p % 4] = id;
    }
    st.faces.push_back(std::move(f));
  }
  std::vector<std::size_t> nfaces(crossing_components, 0), ncross(crossing_components, 0);
  for (const auto& f : st.faces) ++nfaces[f.component];
  for (std::size_t c = 0; c < N; ++c) ++ncross[st.component[c]];
  for (std::size_t k = 0; k < crossing_components; ++k)
    if (nfaces[k] != ncross[k] + 2) throw DomainError("diagram is not planar (Euler characteristic check failed)");
  for (std::size_t k = 0; k < crossing_components; ++k) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < st.faces.size(); ++i)
      if (st.faces[i].component == k && (best == SIZE_MAX || st.faces[i].corners.size() > st.faces[best].corners.size()))
        best = i;
    st.faces[best].outer = true;
  }
  for (std::size_t k = 0; k < d.free_loops; ++k) {
    st.faces.push_back({{}, crossing_components + k, false});
    st.faces.push_back({{}, crossing_components + k, true});
  }
  return st;
}

std::vector<DiagramFace> faces(const PlanarDiagram& d) { return analyze(d).faces; }

namespace {

std::array<std::vector<bool>, 2> shade(const PlanarDiagram& d, const DiagramStructure& st) {
  const std::size_t F = st.faces.size(), N = d.crossings.size();
  std::vector<int> color(F, -1);
  // Faces across a strand: quadrants k and k+1 at a crossing.
  std::vector<std::vector<std::size_t>> adj(F);
  for (std::size_t c = 0; c < N; ++c)
    for (int k = 0; k < 4; ++k) {
      std::size_t a = st.quadrant_face[c][k], b = st.quadrant_face[c][(k + 1) % 4];
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  for (std::size_t i = 0; i < F; ++i) {
    if (!st.faces[i].outer) continue;
    color[i] = 0;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t f = stack.back();
      stack.pop_back();
      for (std::size_t g : adj[f]) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          stack.push_back(g);
        } else if (color[g] == color[f]) {
          throw DomainError("face adjacency is not bipartite");
        }
      }
    }
  }
  for (std::size_t i = 0; i < F; ++i)
    if (color[i] == -1) color[i] = 1;  // inside of a free loop
  std::array<std::vector<bool>, 2> out;
  for (std::size_t i = 0; i < F; ++i) {
    out[0].push_back(color[i] == 1);
    out[1].push_back(color[i] == 0);
  }
  return out;
}

}  // namespace

std::array<std::vector<bool>, 2> checkerboard(const PlanarDiagram& d) { return shade(d, analyze(d)); }

Graph tait_graph(const PlanarDiagram& d, int shading) {
  if (shading != 0 && shading != 1) throw DomainError("shading must be 0 or 1");
  const DiagramStructure st = analyze(d);
  const auto shaded = shade(d, st)[static_cast<std::size_t>(shading)];
  std::vector<std::size_t> vertex(st.faces.size(), 0);
  Graph g;
  g.reduced = true;
  for (std::size_t i = 0; i < st.faces.size(); ++i)
    if (shaded[i]) vertex[i] = ++g.vertices;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& q = st.quadrant_face[c];
    // A positive shaded sign means the second smoothing joins the shaded quadrants.
    const bool first_pair = shaded[q[0]];
    if (shaded[q[0]] != shaded[q[2]] || shaded[q[1]] != shaded[q[3]] || shaded[q[0]] == shaded[q[1]])
      throw DomainError("shading is not a checkerboard at a crossing");
    std::size_t u = vertex[first_pair ? q[0] : q[1]], v = vertex[first_pair ? q[2] : q[3]];
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
    g.signs.push_back(first_pair ? Sign::plus : Sign::minus);
  }
  return g;
}

SignedArrangement link_arrangement(const PlanarDiagram& d, int shading) {
  return from_signed_graph(tait_graph(d, shading));
}

std::vector<int> crossing_signs(const PlanarDiagram& d) {
  const DiagramStructure st = analyze(d);
  std::vector<int> out;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) out.push_back(st.incoming[4 * c + 3] ? 1 : -1);
  return out;
}

long writhe(const PlanarDiagram& d) {
  long w = 0;
  for (int s : crossing_signs(d)) w += s;
  return w;
}

namespace {

std::size_t circles(const DiagramStructure& st, std::size_t N, std::size_t loops, Mask S) {
  UnionFind uf(4 * N);
  for (std::size_t s = 0; s < 4 * N; ++s) uf.unite(s, st.partner[s]);
  for (std::size_t c = 0; c < N; ++c) {
    const std::size_t b = 4 * c;
    if (S >> c & 1u) {
      uf.unite(b, b + 3);
      uf.unite(b + 1, b + 2);
    } else {
      uf.unite(b, b + 1);
      uf.unite(b + 2, b + 3);
    }
  }
  std::size_t count = loops;
  for (std::size_t s = 0; s < 4 * N; ++s)
    if (uf.find(s) == s) ++count;
  return count;
}

}  // namespace

std::size_t smoothing_circles(const PlanarDiagram& d, Mask S) {
  return circles(analyze(d), d.crossings.size(), d.free_loops, S);
}

std::vector<std::size_t> all_smoothing_circles(const PlanarDiagram& d, Exec exec) {
  const DiagramStructure st = analyze(d);
  const std::size_t N = d.crossings.size();
  if (N > 24) throw DomainError("too many crossings for a full state sum");
  const long count = 1L << N;
  std::vector<std::size_t> out(static_cast<std::size_t>(count));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long S = 0; S < count; ++S) out[S] = circles(st, N, d.free_loops, static_cast<Mask>(S));
  } else {
    for (long S = 0; S < count; ++S) out[S] = circles(st, N, d.free_loops, static_cast<Mask>(S));
  }
  return out;
}

LaurentPoly jones_diagram(const PlanarDiagram& d, Exec exec) {
  const auto c = all_smoothing_circles(d, exec);
  long n0 = 0, n1 = 0;
  for (int s : crossing_signs(d)) (s > 0 ? n0 : n1)++;
  std::map<std::pair<int, std::size_t>, long> hist;
  for (std::size_t S = 0; S < c.size(); ++S) ++hist[{std::popcount(S), c[S]}];
  const std::vector<std::string> q{"q"};
  const LaurentPoly loop = LaurentPoly::monomial(q, {2}) + LaurentPoly::monomial(q, {-2});
  LaurentPoly total(q);
  for (const auto& [key, count] : hist) {
    const auto [s, circ] = key;
    const long e = s + n0 - 2 * n1;
    const GaussInt coef((s + n1) % 2 ? -count : count);
    total = total + LaurentPoly::monomial(q, {static_cast<int>(2 * e)}, coef) * loop.pow(static_cast<unsigned>(circ - 1));
  }
  return total;
}

LaurentPoly framing_factor(long w) {
  return LaurentPoly::monomial({"q"}, {static_cast<int>(-3 * w)}, i_power(3 * w));
}

}  // namespace arrkh
