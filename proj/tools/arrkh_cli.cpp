#include <CLI11.hpp>

#include <iostream>

#include "arrkh/io.hpp"
#include "arrkh/suites.hpp"

using namespace arrkh;

namespace {

struct Globals {
  std::string format = "json";
  int threads = 0;
  Exec exec() const { return threads == 1 ? Exec::serial : Exec::parallel; }
  bool table() const { return format == "table"; }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_poly(const Globals& g, const std::string& kind, const std::string& file) {
  const Json in = load_json_file(file);
  LaurentPoly p;
  if (kind == "jones-framed") {
    p = framed_jones(signed_arrangement_from_json(in), g.exec());
  } else {
    const VectorArrangement a = arrangement_from_json(in);
    if (kind == "char") p = char_poly(a, g.exec());
    else if (kind == "charbar") p = char_poly_bar(a, g.exec());
    else if (kind == "poincare") p = poincare_poly(a, g.exec());
    else if (kind == "tutte") p = tutte_poly(a, g.exec());
    else p = tutte_hat(a, g.exec());
  }
  if (g.table()) {
    std::cout << p.str() << "\n";
  } else {
    Json j;
    j["kind"] = kind;
    j["polynomial"] = to_json(p);
    j["text"] = p.str();
    emit(j);
  }
  return 0;
}

void print_betti(const Globals& g, Json head, const BettiTable& b, int denominator,
                 const std::vector<std::string>& axes) {
  if (g.table()) {
    std::cout << betti_to_table(b, denominator, axes);
    return;
  }
  const Json body = betti_to_json(b, denominator);
  for (const auto& [k, v] : body.items()) head[k] = v;
  emit(head);
}

std::vector<std::string> theory_axes(Theory t) {
  switch (t) {
    case Theory::d:
    case Theory::partial: return {"i", "j"};
    case Theory::poincare: return {"i", "j", "k"};
    default: return {"c", "i", "j"};
  }
}

int run_homology(const Globals& g, const std::string& theory, const std::string& file) {
  const Theory t = parse_theory(theory);
  const VectorArrangement a = arrangement_from_json(load_json_file(file));
  const CubeComplex cc = build_complex(a, t, g.exec());
  const BettiTable b = homology(cc.complex, g.exec());
  print_betti(g, Json{{"theory", theory_name(t)}}, b, cc.complex.denominator, theory_axes(t));
  return 0;
}

int run_khovanov(const Globals& g, const std::string& file) {
  const SignedArrangement a = signed_arrangement_from_json(load_json_file(file));
  print_betti(g, Json{{"theory", "khovanov"}}, kh_homology(a, g.exec()), 2, {"i", "j"});
  return 0;
}

int run_link(const Globals& g, const std::string& pd, int shading, const std::string& what) {
  const PlanarDiagram d = parse_pd(read_text_file(pd));
  const SignedArrangement v = link_arrangement(d, shading);
  if (what == "arrangement") {
    if (g.table()) {
      const Graph tg = tait_graph(d, shading);
      std::cout << "Tait graph: " << tg.vertices << " vertices\n";
      for (std::size_t e = 0; e < tg.edges.size(); ++e)
        std::cout << "  crossing " << e + 1 << ": " << tg.edges[e].first << " - " << tg.edges[e].second << " "
                  << sign_char(tg.signs[e]) << "\n";
      std::cout << to_json(v).dump() << "\n";
    } else {
      emit(to_json(v));
    }
  } else if (what == "betti") {
    print_betti(g, Json{{"theory", "khovanov"}, {"shading", shading}}, kh_homology(v, g.exec()), 2, {"i", "j"});
  } else {
    const LaurentPoly jd = jones_diagram(d, g.exec());
    const LaurentPoly fj = framed_jones(v, g.exec());
    if (g.table()) {
      std::cout << "writhe        " << writhe(d) << "\njones         " << jd.str() << "\nframed jones  " << fj.str()
                << "\n";
    } else {
      emit(Json{{"writhe", writhe(d)}, {"jones", to_json(jd)}, {"framed_jones", to_json(fj)},
                {"jones_text", jd.str()}, {"framed_jones_text", fj.str()}});
    }
  }
  return 0;
}

int run_move(const Globals& g, const std::string& descriptor, const std::string& file) {
  const SignedArrangement a = signed_arrangement_from_json(load_json_file(file));
  if (descriptor.empty()) {
    Json moves = Json::array();
    for (const auto& mv : find_moves(a)) moves.push_back(to_json(mv));
    if (g.table())
      for (const auto& m : moves) std::cout << m.dump() << "\n";
    else
      emit(Json{{"moves", moves}});
    return 0;
  }
  const MoveDescriptor mv = move_from_json(load_json_file(descriptor));
  const SignedArrangement b = apply_move(a, mv);
  if (g.table()) std::cout << to_json(b).dump() << "\n";
  else emit(to_json(b));
  return 0;
}

int run_check(const Globals& g, const std::string& suite, std::size_t max_n, std::uint64_t seed) {
  SuiteOptions opt;
  opt.max_n = max_n;
  opt.seed = seed;
  opt.exec = g.exec();
  const SuiteReport r = run_suite(suite, opt);
  if (g.table()) {
    for (const auto& t : r.tested) std::cout << "tested  " << t << "\n";
    for (const auto& f : r.failures) std::cout << "FAILED  " << f << "\n";
    std::cout << r.suite << ": " << r.message << " (" << r.checks << " checks)\n";
  } else {
    emit(Json{{"suite", r.suite}, {"ok", r.ok()}, {"message", r.message}, {"checks", r.checks},
              {"tested", r.tested}, {"failures", r.failures}});
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of vector arrangements and odd Khovanov homology of signed arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", g.threads, "Worker threads (1 runs the serial reference path)")
      ->check(CLI::NonNegativeNumber);

  std::string file, kind, theory, pd, emit_what, descriptor, suite;
  int shading = 0;
  std::size_t max_n = 5;
  std::uint64_t seed = kCorpusSeed;

  auto* poly = app.add_subcommand("poly", "Matroid and link polynomials of an arrangement");
  poly->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"char", "charbar", "poincare", "tutte", "tuttehat", "jones-framed"}));
  poly->add_option("file", file, "Arrangement or graph JSON")->required();

  auto* hom = app.add_subcommand("homology", "Betti table of one of the unsigned complexes");
  hom->add_option("--theory", theory)
      ->required()
      ->check(CLI::IsMember({"d", "partial", "poincare", "tutte-d", "tutte-partial-1", "tutte-partial-2",
                             "tutte-partial-3", "tutte-partial-4"}));
  hom->add_option("file", file)->required();

  auto* kh = app.add_subcommand("khovanov", "Odd Khovanov homology of a signed arrangement");
  kh->add_option("file", file, "Signed arrangement or signed graph JSON")->required();

  auto* link = app.add_subcommand("link", "Arrangement, homology or Jones polynomial of a PD code");
  link->add_option("--pd", pd, "PD code file")->required();
  link->add_option("--shading", shading)->check(CLI::IsMember({0, 1}));
  link->add_option("--emit", emit_what)->required()->check(CLI::IsMember({"arrangement", "betti", "jones"}));

  auto* move = app.add_subcommand("move", "Apply a Reidemeister move, or list the applicable ones");
  move->add_option("--apply", descriptor, "Move descriptor JSON");
  move->add_option("file", file, "Signed arrangement JSON")->required();

  auto* check = app.add_subcommand("check", "Run a built-in verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("dg");
  suites.push_back("cube");
  check->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  check->add_option("--max-n", max_n)->check(CLI::Range(0, 6));
  check->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (g.threads > 0) set_threads(g.threads);

  try {
    if (*poly) return run_poly(g, kind, file);
    if (*hom) return run_homology(g, theory, file);
    if (*kh) return run_khovanov(g, file);
    if (*link) return run_link(g, pd, shading, emit_what);
    if (*move) return run_move(g, descriptor, file);
    if (*check) return run_check(g, suite, max_n, seed);
  } catch (const NoEdgeScalars& e) {
    emit(Json{{"error", {{"type", "no_edge_scalars"}, {"message", e.what()}}}});
    return 1;
  } catch (const DomainError& e) {
    emit(Json{{"error", {{"type", "domain_error"}, {"message", e.what()}}}});
    return 1;
  } catch (const Json::exception& e) {
    emit(Json{{"error", {{"type", "schema_error"}, {"message", e.what()}}}});
    return 1;
  }
  return 2;
}
