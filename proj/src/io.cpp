#include "arrkh/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace arrkh {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::exception& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
}

namespace {

Rational rational_from(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw DomainError("rational entries must be strings or integers");
}

Json signs_json(const std::vector<Sign>& s) {
  Json out = Json::array();
  for (Sign x : s) out.push_back(std::string(1, sign_char(x)));
  return out;
}

std::vector<Sign> signs_from(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw DomainError("need one sign per vector");
  std::vector<Sign> out;
  for (const auto& s : j) {
    const std::string t = s.is_string() ? s.get<std::string>() : std::to_string(s.get<int>());
    if (t == "+" || t == "1" || t == "+1")
      out.push_back(Sign::plus);
    else if (t == "-" || t == "-1")
      out.push_back(Sign::minus);
    else
      throw DomainError("invalid sign: " + t);
  }
  return out;
}

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw DomainError("coefficient parts must be integers");
}

}  // namespace

Json to_json(const VectorArrangement& a) {
  Json vecs = Json::array();
  for (const auto& v : a.coordinate_vectors()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    vecs.push_back(row);
  }
  Json j;
  j["ambient_dim"] = a.dim();
  j["vectors"] = vecs;
  return j;
}

Json to_json(const SignedArrangement& a) {
  Json j = to_json(a.base);
  j["signs"] = signs_json(a.signs);
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  try {
    g.vertices = j.at("vertices").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("edges must be pairs");
      auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
      if (u < 1 || v < 1 || u > g.vertices || v > g.vertices) throw DomainError("edge endpoint out of range");
      g.edges.emplace_back(u, v);
    }
    if (j.contains("signs")) g.signs = signs_from(j["signs"], g.edges.size());
    g.reduced = j.value("reduced", false);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("graph JSON: ") + e.what());
  }
  return g;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  Json j;
  j["vertices"] = g.vertices;
  j["edges"] = edges;
  if (!g.signs.empty()) j["signs"] = signs_json(g.signs);
  j["reduced"] = g.reduced;
  return j;
}

VectorArrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("arrangement JSON must be an object");
  if (j.contains("edges")) return from_graph(graph_from_json(j));
  try {
    const std::size_t k = j.at("ambient_dim").get<std::size_t>();
    std::vector<Vec> vecs;
    for (const auto& row : j.at("vectors")) {
      if (!row.is_array() || row.size() != k) throw DomainError("every vector needs ambient_dim entries");
      Vec v;
      for (const auto& x : row) v.push_back(rational_from(x));
      vecs.push_back(std::move(v));
    }
    if (vecs.size() > 20) throw DomainError("at most 20 vectors are supported");
    return VectorArrangement::standard(k, std::move(vecs));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("arrangement JSON: ") + e.what());
  }
}

SignedArrangement signed_arrangement_from_json(const Json& j) {
  if (j.is_object() && j.contains("edges")) {
    Graph g = graph_from_json(j);
    if (g.signs.empty()) throw DomainError("signed graph needs signs");
    return from_signed_graph(g);
  }
  SignedArrangement a{arrangement_from_json(j), {}};
  if (!j.contains("signs")) throw DomainError("signed arrangement needs signs");
  a.signs = signs_from(j["signs"], a.size());
  return a;
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["coeff"] = {{"re", integer_json(c.re)}, {"im", integer_json(c.im)}};
    t["exp2"] = e;
    terms.push_back(t);
  }
  Json j;
  j["vars"] = p.vars();
  j["terms"] = terms;
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  try {
    LaurentPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms"))
      p.add_term(t.at("exp2").get<std::vector<int>>(),
                 GaussInt(integer_from(t.at("coeff").at("re")), integer_from(t.at("coeff").at("im"))));
    return p;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("polynomial JSON: ") + e.what());
  }
}

std::string degree_string(int stored, int denominator) {
  return to_string(Rational(stored, denominator));
}

Json betti_to_json(const BettiTable& b, int denominator) {
  Json rows = Json::array();
  for (const auto& [g, d] : b) {
    if (d == 0) continue;
    Json deg = Json::array();
    for (int x : g) {
      if (denominator == 1)
        deg.push_back(x);
      else
        deg.push_back(degree_string(x, denominator));
    }
    rows.push_back({{"deg", deg}, {"dim", d}});
  }
  Json j;
  j["grading_denominator"] = denominator;
  j["betti"] = rows;
  return j;
}

BettiTable betti_from_json(const Json& j) {
  BettiTable b;
  const int den = j.value("grading_denominator", 1);
  for (const auto& row : j.at("betti")) {
    Grade g;
    for (const auto& x : row.at("deg")) {
      Rational q = rational_from(x) * den;
      if (q.get_den() != 1) throw DomainError("degree not on the grading lattice");
      g.push_back(static_cast<int>(q.get_num().get_si()));
    }
    b[g] = row.at("dim").get<long>();
  }
  return b;
}

std::string betti_to_table(const BettiTable& b, int denominator, const std::vector<std::string>& axes) {
  if (b.empty()) return "(zero homology)\n";
  std::set<int> cols, rows;
  for (const auto& [g, d] : b) {
    cols.insert(g[0]);
    rows.insert(g.size() > 1 ? g[1] : 0);
  }
  auto cell = [&](int c, int r) {
    std::string s;
    for (const auto& [g, d] : b) {
      if (g[0] != c || (g.size() > 1 ? g[1] : 0) != r || d == 0) continue;
      if (!s.empty()) s += ",";
      s += std::to_string(d);
      if (g.size() > 2) {
        s += "@";
        for (std::size_t k = 2; k < g.size(); ++k) s += (k > 2 ? ":" : "") + degree_string(g[k], denominator);
      }
    }
    return s.empty() ? std::string(".") : s;
  };
  std::size_t width = 4;
  for (int c : cols) width = std::max(width, degree_string(c, denominator).size() + 1);
  for (int c : cols)
    for (int r : rows) width = std::max(width, cell(c, r).size() + 1);
  std::string head = axes.size() > 1 ? axes[1] + "\\" + axes[0] : axes.empty() ? "" : axes[0];
  std::size_t lead = std::max<std::size_t>(head.size() + 1, 6);
  for (int r : rows) lead = std::max(lead, degree_string(r, denominator).size() + 2);
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  out << pad(head, lead);
  for (int c : cols) out << pad(degree_string(c, denominator), width);
  out << "\n";
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out << pad(degree_string(*it, denominator), lead);
    for (int c : cols) out << pad(cell(c, *it), width);
    out << "\n";
  }
  return out.str();
}

Json to_json(const MoveDescriptor& m) {
  Json j;
  j["kind"] = move_name(m.kind);
  j["l"] = m.l + 1;
  j["m"] = m.m + 1;
  switch (m.kind) {
    case MoveKind::R2:
    case MoveKind::R2_dual:
      j["alpha"] = to_string(m.alpha);
      break;
    case MoveKind::R3:
    case MoveKind::R3_dual:
      j["p"] = m.p + 1;
      j["alpha_m"] = to_string(m.alpha_m);
      j["alpha_p"] = to_string(m.alpha_p);
      break;
    default:
      break;
  }
  return j;
}

MoveDescriptor move_from_json(const Json& j) {
  MoveDescriptor m;
  try {
    m.kind = parse_move_kind(j.at("kind").get<std::string>());
    auto index = [&](const char* key) {
      long v = j.at(key).get<long>();
      if (v < 1) throw DomainError(std::string("move index '") + key + "' must be at least 1");
      return static_cast<std::size_t>(v - 1);
    };
    m.l = index("l");
    m.m = index("m");
    if (m.kind == MoveKind::R2 || m.kind == MoveKind::R2_dual) m.alpha = rational_from(j.at("alpha"));
    if (m.kind == MoveKind::R3 || m.kind == MoveKind::R3_dual) {
      m.p = index("p");
      m.alpha_m = rational_from(j.at("alpha_m"));
      m.alpha_p = rational_from(j.at("alpha_p"));
    }
  } catch (const Json::exception& e) {
    throw DomainError(std::string("move JSON: ") + e.what());
  }
  return m;
}

Json to_json(const SesReport& r, int denominator) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json deg = Json::array();
    for (int x : row.grade) {
      if (denominator == 1)
        deg.push_back(x);
      else
        deg.push_back(degree_string(x, denominator));
    }
    rows.push_back({{"deg", deg},
                    {"sub", row.dim_sub},
                    {"total", row.dim_total},
                    {"quotient", row.dim_quotient},
                    {"rank_inclusion", row.rank_iota},
                    {"rank_projection", row.rank_pi},
                    {"exact", row.exact}});
  }
  Json j;
  j["exact"] = r.ok();
  j["inclusion_chain_map"] = r.iota_chain;
  j["projection_chain_map"] = r.pi_chain;
  j["long_exact_sequence_consistent"] = r.les_consistent;
  j["failures"] = r.failures;
  j["degrees"] = rows;
  return j;
}

}  // namespace arrkh
