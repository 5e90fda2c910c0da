// drs: command-line front end. Every analysis command prints one JSON line
// (a run report) or, with --format text, a readable summary. Generators print
// DQS so they can be piped into the analysis commands.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "drs/abel_jacobi.hpp"
#include "drs/acceptance.hpp"
#include "drs/coverings.hpp"
#include "drs/differentials.hpp"
#include "drs/generators.hpp"
#include "drs/geometry.hpp"
#include "drs/io.hpp"
#include "drs/riemann_roch.hpp"

namespace {

using namespace drs;
using io::json;

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "json";
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// Accumulates one run report.
class Report {
 public:
  Report(std::string command, const Globals& g)
      : command_(std::move(command)), g_(g), t0_(std::chrono::steady_clock::now()) {}

  void input(const std::string& name, const std::string& bytes) { inputs_[name] = fnv1a(bytes); }
  json& out() { return outputs_; }
  void check(const std::string& name, bool pass, double value = 0) {
    checks_.push_back({{"name", name}, {"pass", pass}, {"value", value}});
    ok_ = ok_ && pass;
  }
  void residual(const std::string& name, double value, double bound) { check(name, value < bound, value); }
  bool ok() const { return ok_; }

  int emit() const {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    if (g_.format == "text") {
      std::cout << command_ << ": " << (ok_ ? "ok" : "FAILED") << "\n";
      for (auto it = outputs_.begin(); it != outputs_.end(); ++it) std::cout << "  " << it.key() << " = " << it.value().dump() << "\n";
      for (const auto& c : checks_)
        std::cout << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] " << c["name"].get<std::string>()
                  << " (" << c["value"].get<double>() << ")\n";
    } else {
      json r = {{"command", command_}, {"inputs", inputs_},  {"outputs", outputs_},
                {"checks", checks_},   {"pass", ok_},        {"seed", g_.seed},
                {"tol", g_.tol},       {"wall_time_s", wall}};
      std::cout << r.dump() << "\n";
    }
    return ok_ ? 0 : 1;
  }

 private:
  std::string command_;
  const Globals& g_;
  std::chrono::steady_clock::time_point t0_;
  json inputs_ = json::object(), outputs_ = json::object(), checks_ = json::array();
  bool ok_ = true;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::string s((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return s;
  }
  return io::read_file(path);
}

// "0+1i", "i", "-0.5", "0.3+1.2i", "2-i"
cplx parse_cplx(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])?((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
  std::smatch m;
  if (text.empty() || !std::regex_match(text, m, re)) throw Error("parse", "bad complex number '" + text + "'");
  const bool has_i = text.find('i') != std::string::npos;
  double re_part = m[1].matched ? std::stod(m[1]) : 0.0;
  double im_part = 0.0;
  if (has_i) {
    im_part = m[3].matched ? std::stod(m[3]) : 1.0;
    if (m[2].matched && m[2] == "-") im_part = -im_part;
    if (!m[2].matched && m[1].matched) throw Error("parse", "bad complex number '" + text + "'");
  }
  return {re_part, im_part};
}

json issues_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& i : r.issues) out.push_back({{"kind", i.kind}, {"ids", i.ids}, {"message", i.message}});
  return out;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0;
  for (auto z : v) m = std::max(m, std::abs(z));
  return m;
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals& g, const std::string& path) {
  Report rep("check", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  QuadComplex c = io::parse_dqs(text);
  ValidationReport vr = validate(c);
  rep.out()["issues"] = issues_json(vr);
  rep.out()["vertices"] = c.num_vertices();
  rep.out()["quads"] = c.num_quads();
  for (const auto& i : vr.issues) std::cerr << "drs check: " << i.kind << ": " << i.message << "\n";
  rep.check("valid", !vr.fatal(), double(vr.issues.size()));
  rep.check("strongly regular", vr.ok(), double(vr.issues.size()));
  return rep.emit();
}

int cmd_genus(const Globals& g, const std::string& path) {
  Report rep("genus", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  Surface s(io::parse_dqs(text));
  rep.out()["V"] = s.num_vertices();
  rep.out()["E"] = s.num_edges();
  rep.out()["F"] = s.num_quads();
  rep.out()["genus"] = s.genus();
  rep.check("euler characteristic", s.num_vertices() - s.num_edges() + s.num_quads() == 2 - 2 * s.genus());
  return rep.emit();
}

int cmd_homology(const Globals& g, const std::string& path, bool cycles) {
  Report rep("homology", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  Surface s(io::parse_dqs(text));
  HomologyBasis h = homology_basis(s);
  json la = json::array(), lb = json::array();
  for (auto& c : h.a) la.push_back(c.walk.size());
  for (auto& c : h.b) lb.push_back(c.walk.size());
  rep.out()["genus"] = h.genus;
  rep.out()["a_lengths"] = la;
  rep.out()["b_lengths"] = lb;
  rep.out()["intersection"] = h.intersection;
  if (cycles) rep.out()["basis"] = io::homology_to_json(h);
  bool canonical = true, closed = true;
  for (int i = 0; i < 2 * h.genus; ++i) {
    closed = closed && is_closed_walk(s, h.cycle(i).walk);
    for (int j = 0; j < 2 * h.genus; ++j) {
      int want = (j == i + h.genus) ? 1 : (i == j + h.genus ? -1 : 0);
      canonical = canonical && h.intersection[i][j] == want;
    }
  }
  rep.check("cycles are closed", closed);
  rep.check("intersection matrix is canonical", canonical);
  return rep.emit();
}

int cmd_periods(const Globals& g, const std::string& path, bool complete) {
  Report rep("periods", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  Surface s(io::parse_dqs(text));
  HomologyBasis h = homology_basis(s);
  if (h.genus == 1) h = reduce_torus_basis(s, h);
  PeriodMatrices pm = period_matrices(s, h, canonical_bases(s, h));
  rep.out()["genus"] = h.genus;
  rep.out()["pi"] = io::to_json(pm.pi);
  if (complete) {
    rep.out()["pi_tilde"] = io::to_json(pm.pi_tilde);
    rep.out()["pi_black"] = io::to_json(pm.pi_b);
    rep.out()["pi_white"] = io::to_json(pm.pi_w);
  }
  if (h.genus > 0) {
    MatrixChecks mc = check_period_matrices(pm);
    rep.residual("Pi symmetric", mc.asym_pi, 1e-8);
    rep.residual("Pi~ symmetric", mc.asym_tilde, 1e-8);
    rep.residual("(Pi^BB)^T = Pi^WW", mc.bb_vs_ww, 1e-8);
    rep.check("Im Pi positive definite", mc.min_eig_im_pi > 0, mc.min_eig_im_pi);
    rep.check("Im Pi~ positive definite", mc.min_eig_im_tilde > 0, mc.min_eig_im_tilde);
  }
  return rep.emit();
}

std::vector<cplx> parse_cplx_list(const std::string& text) {
  std::vector<cplx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_cplx(item));
  return out;
}

int cmd_harmonic(const Globals& g, const std::string& path, const std::string& targets_text) {
  Report rep("harmonic", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  Surface s(io::parse_dqs(text));
  HomologyBasis h = homology_basis(s);
  const int gg = h.genus;
  std::vector<cplx> targets(4 * gg, 0.0);
  if (!targets_text.empty()) targets = parse_cplx_list(targets_text);
  else if (gg > 0) targets[0] = 1.0;
  if (static_cast<int>(targets.size()) != 4 * gg)
    throw Error("bad-argument", "--periods needs 4g = " + std::to_string(4 * gg) + " values");
  rep.out()["nullity"] = la::nullity(harmonic_system(s));
  rep.check("harmonic nullity = 4g", rep.out()["nullity"].get<int>() == 4 * gg);
  if (gg > 0) {
    DiamondForm w = harmonic_with_periods(s, h, targets, g.tol);
    rep.out()["form"] = io::form_to_json(w);
    double closed = d_diamond(s, w).max_abs(), coclosed = d_diamond(s, hodge_star(s, w)).max_abs();
    PeriodReport pr = periods(s, w, h, 1e300);
    double per = 0;
    for (int k = 0; k < gg; ++k) {
      per = std::max(per, std::abs(pr.AB[k] - targets[4 * k]));
      per = std::max(per, std::abs(pr.AW[k] - targets[4 * k + 1]));
      per = std::max(per, std::abs(pr.BB[k] - targets[4 * k + 2]));
      per = std::max(per, std::abs(pr.BW[k] - targets[4 * k + 3]));
    }
    rep.residual("closed", closed, 1e-9);
    rep.residual("co-closed", coclosed, 1e-9);
    rep.residual("periods", per, 1e-9);
  }
  return rep.emit();
}

int cmd_abelian(const Globals& g, const std::string& path, std::optional<int> second, const std::vector<int>& third) {
  Report rep("abelian", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  Surface s(io::parse_dqs(text));
  HomologyBasis h = homology_basis(s);
  PSolver ps(s, h);
  HolomorphicBasis hb = ps.canonical();
  AbelianDifferential w;
  if (second) {
    w = ps.second(*second);
  } else if (third.size() == 2) {
    w = ps.third(third[0], third[1]);
  } else {
    throw Error("bad-argument", "give --second Q or --third v v'");
  }
  rep.out()["kind"] = second ? "second" : "third";
  rep.out()["form"] = io::form_to_json(w.form);
  std::vector<cplx> res(s.num_vertices());
  for (int v = 0; v < s.num_vertices(); ++v) res[v] = residue(s, w.form, v);
  PeriodReport pr = periods(s, w.form, h, 1e300);
  json ab = json::array(), aw = json::array(), bper = json::array();
  double apers = 0, law = 0;
  for (int k = 0; k < h.genus; ++k) {
    ab.push_back(io::to_json(pr.AB[k]));
    aw.push_back(io::to_json(pr.AW[k]));
    bper.push_back(io::to_json(pr.B[k]));
  }
  if (second) {
    for (int k = 0; k < h.genus; ++k) {
      apers = std::max({apers, std::abs(pr.AB[k]), std::abs(pr.AW[k])});
      law = std::max(law, std::abs(pr.B[k] - cplx(0, 2 * kPi) * decompose_quad(s, hb.canonical[k], *second).p));
    }
    rep.residual("residues vanish", max_abs(res), 1e-10);
    rep.residual("black and white a-periods vanish", apers, 1e-9);
    rep.residual("b-period law", law, 1e-8);
  } else {
    double rdev = 0;
    for (int v = 0; v < s.num_vertices(); ++v) {
      cplx want = v == third[0] ? 1.0 : (v == third[1] ? -1.0 : 0.0);
      rdev = std::max(rdev, std::abs(res[v] - want));
    }
    rep.residual("residues +1 / -1", rdev, 1e-10);
    for (int k = 0; k < h.genus; ++k) apers = std::max(apers, std::abs(pr.A[k]));
    rep.residual("a-periods vanish", apers, 1e-9);
    const Color col = s.is_black(third[0]) ? Color::black : Color::white;
    std::vector<char> blocked = crossed_quads(s, h, col);
    auto path_r = graph_path(s, third[1], third[0], &blocked);
    if (path_r) {
      for (int k = 0; k < h.genus; ++k)
        law = std::max(law, std::abs(pr.B[k] - cplx(0, 2 * kPi) * integrate_graph_path(s, hb.canonical[k], *path_r)));
      rep.residual("b-period law", law, 1e-8);
    } else {
      rep.out()["b_period_law"] = "no path avoiding the basis cycles";
    }
  }
  rep.out()["a_periods_black"] = ab;
  rep.out()["a_periods_white"] = aw;
  rep.out()["b_periods"] = bper;
  return rep.emit();
}

int cmd_riemann_roch(const Globals& g, const std::string& path, const std::string& divisor) {
  Report rep("riemann-roch", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  Surface s(io::parse_dqs(text));
  Divisor d = parse_divisor(divisor);
  DimensionReport dr = check_riemann_roch(s, d);
  rep.out()["divisor"] = format_divisor(d);
  rep.out()["l"] = dr.l;
  rep.out()["i"] = dr.i;
  rep.out()["deg"] = dr.deg;
  rep.out()["genus"] = dr.genus;
  rep.out()["residual"] = dr.residual;
  rep.check("l(-D) = deg D - 2g + 2 + i(D)", dr.residual == 0, dr.residual);
  if (s.genus() > 0) {
    HomologyBasis h = homology_basis(s);
    PSolver ps(s, h);
    MMatrixCount mc = m_matrix_dims(ps, ps.canonical(), ps.second_all(), d);
    rep.out()["m_matrix"] = {{"i", mc.i}, {"l", mc.l}, {"rank", mc.rank}};
    rep.check("M-matrix i(D) agrees", mc.i == dr.i);
    rep.check("M-matrix l(-D) agrees", mc.l == dr.l);
  }
  return rep.emit();
}

QuadComplex surface_from_map(const std::string& inline_dqs, const std::string& ref, const std::string& map_path,
                             Report& rep, const char* name) {
  std::string text;
  if (!inline_dqs.empty()) {
    text = inline_dqs;
  } else {
    std::filesystem::path p(ref);
    if (p.is_relative() && !map_path.empty() && map_path != "-") p = std::filesystem::path(map_path).parent_path() / p;
    text = io::read_file(p.string());
  }
  rep.input(name, text);
  return io::parse_dqs(text);
}

int cmd_hurwitz(const Globals& g, const std::string& path) {
  Report rep("hurwitz", g);
  const std::string text = read_input(path);
  rep.input("map", text);
  io::MapFile mf = io::parse_map(text);
  Surface src(surface_from_map(mf.source_dqs, mf.source, path, rep, "source"));
  Surface tgt(surface_from_map(mf.target_dqs, mf.target, path, rep, "target"));
  if (static_cast<int>(mf.vertex_map.size()) != src.num_vertices())
    throw Error("parse", "map.vertex_map: expected " + std::to_string(src.num_vertices()) + " entries");
  if (!mf.quad_map.empty() && static_cast<int>(mf.quad_map.size()) != src.num_quads())
    throw Error("parse", "map.quad_map: expected " + std::to_string(src.num_quads()) + " entries");
  CoveringMap f{&src, &tgt, mf.vertex_map, mf.quad_map};
  ValidationReport vr = validate_map(f);
  rep.out()["map_issues"] = issues_json(vr);
  rep.check("map is discrete holomorphic", vr.ok(), double(vr.issues.size()));
  if (vr.ok()) {
    BranchReport br = check_riemann_hurwitz(f);
    rep.out()["genus"] = br.genus;
    rep.out()["target_genus"] = br.target_genus;
    rep.out()["sheets"] = br.sheets;
    rep.out()["branching"] = br.total_branching;
    rep.out()["identity"] = br.identity;
    json branch = json::array();
    for (int v = 0; v < src.num_vertices(); ++v)
      if (br.wrap[v] > 1) branch.push_back({v, br.wrap[v] - 1});
    rep.out()["branch_vertices"] = branch;
    rep.check("surjective", br.surjective);
    rep.check("Riemann-Hurwitz", br.residual == 0, br.residual);
    if (g.format == "text") std::cout << br.identity << "\n";
  }
  return rep.emit();
}

int cmd_abel_jacobi(const Globals& g, const std::string& path, int base, int point) {
  Report rep("abel-jacobi", g);
  const std::string text = read_input(path);
  rep.input("surface", text);
  Surface s(io::parse_dqs(text));
  if (base < 0 || base >= s.num_quads()) throw Error("id", "no quad " + std::to_string(base));
  if (point < 0 || point >= s.num_vertices()) throw Error("id", "no vertex " + std::to_string(point));
  HomologyBasis h = homology_basis(s);
  HolomorphicBasis hb = canonical_bases(s, h);
  PeriodMatrices pm = period_matrices(s, h, hb);
  AbelJacobi aj(s, h, hb.canonical, pm);
  const bool black = s.is_black(point);
  AJValue v = black ? aj.black(base, point) : aj.white(base, point);
  const Lattice& L = black ? aj.lattices().black : aj.lattices().white;
  Reduction red = reduce(L, v.value);
  rep.out()["map"] = black ? "black" : "white";
  rep.out()["value"] = io::to_json(v.value);
  rep.out()["reduced"] = io::to_json(red.rep);
  rep.out()["lattice_generators"] = io::to_json(L.generators());
  rep.out()["common_zero_quads"] = aj.common_zeros();
  rep.residual("component CR residual", aj.cr_residual(base), 1e-10);
  return rep.emit();
}

int cmd_selftest(const Globals& g, int only) {
  acceptance::Options opt;
  opt.seed = g.seed;
  bool ok = true;
  for (int id = 1; id <= acceptance::kNumCriteria; ++id) {
    if (only && id != only) continue;
    auto r = acceptance::run_criterion(id, opt);
    ok = ok && r.pass();
    if (g.format == "text") {
      std::cout << r.line() << "\n";
    } else {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"detail", c.detail}});
      std::cout << json{{"command", "selftest"}, {"criterion", r.id}, {"title", r.title}, {"pass", r.pass()},
                        {"checks", checks}, {"seed", g.seed}, {"wall_time_s", r.seconds}}
                       .dump()
                << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Discrete Riemann surfaces on bipartite quad-decompositions"};
  app.require_subcommand(1);
  app.add_option("--tol", g.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized checks and generators")->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.fallthrough();

  std::string path;
  auto add_surface = [&](CLI::App* sc) { sc->add_option("file", path, "DQS surface (default: stdin)"); };

  auto* check = app.add_subcommand("check", "validate a surface");
  add_surface(check);
  auto* genus = app.add_subcommand("genus", "combinatorial genus");
  add_surface(genus);
  bool cycles = false;
  auto* homology = app.add_subcommand("homology", "canonical homology basis");
  add_surface(homology);
  homology->add_flag("--cycles", cycles, "include the cycles as medial-edge keys");
  bool complete = false;
  auto* periods_cmd = app.add_subcommand("periods", "period matrices");
  add_surface(periods_cmd);
  periods_cmd->add_flag("--complete", complete, "also print Pi~, Pi^B and Pi^W");
  std::string targets;
  auto* harmonic = app.add_subcommand("harmonic", "harmonic differential with prescribed periods");
  add_surface(harmonic);
  harmonic->add_option("--periods", targets, "4g values A^B,A^W,B^B,B^W per k (complex, e.g. 1,0,0+1i,0)");
  std::optional<int> second;
  std::vector<int> third;
  auto* abelian = app.add_subcommand("abelian", "Abelian differential of the second or third kind");
  add_surface(abelian);
  auto* opt_second = abelian->add_option("--second", second, "pole quad");
  auto* opt_third = abelian->add_option("--third", third, "vertices v v'")->expected(2);
  opt_second->excludes(opt_third);
  std::string divisor;
  auto* rr = app.add_subcommand("riemann-roch", "dimension counts for an admissible divisor");
  add_surface(rr);
  rr->add_option("--divisor", divisor, "e.g. v:3=-1,q:7=-2,q:9=1")->required();
  auto* hurwitz = app.add_subcommand("hurwitz", "branch data of a map file");
  hurwitz->add_option("file", path, "map JSON (default: stdin)");
  int base = 0, point = 0;
  auto* aj = app.add_subcommand("abel-jacobi", "Abel-Jacobi image of a vertex");
  add_surface(aj);
  aj->add_option("--base", base, "base quad")->required();
  aj->add_option("--point", point, "vertex")->required();
  int only = 0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--only", only, "run a single criterion");

  auto* gen = app.add_subcommand("gen", "generate surfaces");
  gen->require_subcommand(1);
  int m = 4, n = 4, cube_n = 1, quad = 0, nu = 24, nv = 6;
  std::string tau = "i", rho1 = "1", rho2 = "1", out_dir, mesh = "tetrahedron", fn_out;
  bool random_rho = false;
  auto* gtorus = gen->add_subcommand("torus", "flat torus grid");
  gtorus->add_option("--m", m)->capture_default_str();
  gtorus->add_option("--n", n)->capture_default_str();
  gtorus->add_option("--tau", tau, "lattice parameter, e.g. 0+1i")->capture_default_str();
  gtorus->add_flag("--random-rho", random_rho, "replace rho by random values (uses --seed)");
  auto* gcube = gen->add_subcommand("cube", "surface of a subdivided cube");
  gcube->add_option("--n", cube_n)->capture_default_str();
  auto* gpillow = gen->add_subcommand("pillow", "two quads glued along all sides (not strongly regular)");
  auto* gcover = gen->add_subcommand("cube-cover", "double cover of the cube branched at its corners");
  gcover->add_option("--out", out_dir, "write total.dqs, base.dqs and map.json here instead of stdout");
  auto* gone = gen->add_subcommand("one-pole", "surface with a function having a single simple pole");
  gone->add_option("file", path, "base DQS (default: 4x4 square torus)");
  gone->add_option("--quad", quad)->capture_default_str();
  gone->add_option("--rho1", rho1)->capture_default_str();
  gone->add_option("--rho2", rho2)->capture_default_str();
  gone->add_option("--function-out", fn_out, "write the function as JSON here");
  auto* gdel = gen->add_subcommand("delaunay", "Delaunay-Voronoi quadrangulation of a triangle mesh");
  gdel->add_option("file", path, "OBJ mesh (default: built-in mesh)");
  gdel->add_option("--mesh", mesh, "built-in mesh when no file is given")
      ->check(CLI::IsMember({"tetrahedron", "torus"}))
      ->capture_default_str();
  gdel->add_option("--nu", nu)->capture_default_str();
  gdel->add_option("--nv", nv)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(g, path);
    if (*genus) return cmd_genus(g, path);
    if (*homology) return cmd_homology(g, path, cycles);
    if (*periods_cmd) return cmd_periods(g, path, complete);
    if (*harmonic) return cmd_harmonic(g, path, targets);
    if (*abelian) return cmd_abelian(g, path, second, third);
    if (*rr) return cmd_riemann_roch(g, path, divisor);
    if (*hurwitz) return cmd_hurwitz(g, path);
    if (*aj) return cmd_abel_jacobi(g, path, base, point);
    if (*selftest) return cmd_selftest(g, only);
    if (*gtorus) {
      QuadComplex c = gen_torus(m, n, parse_cplx(tau));
      if (random_rho) randomize_rho(c, g.seed);
      std::cout << io::serialize_dqs(c);
      return 0;
    }
    if (*gcube) {
      std::cout << io::serialize_dqs(gen_cube(cube_n));
      return 0;
    }
    if (*gpillow) {
      std::cout << io::serialize_dqs(gen_pillow());
      return 0;
    }
    if (*gcover) {
      CoverData d = gen_cube_double_cover();
      io::MapFile mf;
      mf.vertex_map = d.vertex_map;
      mf.quad_map = d.quad_map;
      if (out_dir.empty()) {
        mf.source_dqs = io::serialize_dqs(d.total);
        mf.target_dqs = io::serialize_dqs(d.base);
        std::cout << io::serialize_map(mf);
      } else {
        std::filesystem::create_directories(out_dir);
        std::ofstream(std::filesystem::path(out_dir) / "total.dqs") << io::serialize_dqs(d.total);
        std::ofstream(std::filesystem::path(out_dir) / "base.dqs") << io::serialize_dqs(d.base);
        mf.source = "total.dqs";
        mf.target = "base.dqs";
        std::ofstream(std::filesystem::path(out_dir) / "map.json") << io::serialize_map(mf);
      }
      return 0;
    }
    if (*gone) {
      QuadComplex basec = path.empty() ? gen_torus(4, 4, cplx(0, 1)) : io::load_dqs(path);
      OnePoleSurface op = gen_one_pole_surface(basec, quad, parse_cplx(rho1), parse_cplx(rho2));
      std::cout << io::serialize_dqs(op.complex);
      std::cerr << "drs: pole quad " << op.center << "\n";
      if (!fn_out.empty()) std::ofstream(fn_out) << io::function_to_json(op.f).dump() << "\n";
      return 0;
    }
    if (*gdel) {
      TriMesh tm = !path.empty() ? parse_obj(io::read_file(path))
                   : mesh == "torus" ? torus_mesh(nu, nv, 3.0, 1.0)
                                     : regular_tetrahedron();
      std::cout << io::serialize_dqs(delaunay_voronoi(tm).complex);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "drs: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "drs: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
