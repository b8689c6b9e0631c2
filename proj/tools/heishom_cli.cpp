#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heishom/braid.hpp"
#include "heishom/config_complex.hpp"
#include "heishom/graph_io.hpp"
#include "heishom/homology.hpp"
#include "heishom/mcg.hpp"
#include "heishom/render.hpp"
#include "heishom/ribbon_graph.hpp"
#include "json.hpp"

using namespace heishom;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string graph;
  int n = 2;
  bool relative = false;
  std::string coeff = "trivial";
  std::string word;
  std::string format = "text";
  bool twists_only = false;
};

struct Source {
  bool is_model = false;
  StandardModel sm;
  ParsedGraph pg;
  std::string describe;
};

bool want_json(const Options& o) {
  if (o.format == "json") return true;
  if (o.format == "text") return false;
  throw UsageError("--format must be 'text' or 'json'");
}

Source load_source(const Options& o) {
  if (!o.model.empty() && !o.graph.empty())
    throw UsageError("give exactly one of --model and --graph");
  if (o.model.empty() && o.graph.empty())
    throw UsageError("a graph source is required: --model g,m or --graph FILE");
  Source s;
  if (!o.model.empty()) {
    int g = -1, m = -1;
    char comma = 0;
    std::istringstream in(o.model);
    if (!(in >> g >> comma >> m) || comma != ',' || !in.eof() || g < 0 || m < 1)
      throw UsageError("--model expects 'g,m' with g >= 0 and m >= 1");
    s.is_model = true;
    s.sm = standard_model(g, m);
    s.describe = "standard model (" + std::to_string(g) + "," + std::to_string(m) + ")";
  } else {
    s.pg = parse_graph_file(o.graph);
    s.describe = o.graph;
  }
  return s;
}

SurfaceParams source_params(const Source& s) {
  if (s.is_model) return s.sm.params;
  SurfaceInvariants inv = surface_invariants(s.pg.graph);
  return SurfaceParams{inv.genus, inv.boundary_components};
}

BMComplex make_complex(const Source& s, bool relative, int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (s.is_model) return build_wedge_complex(s.sm, relative, n);
  if (relative && s.pg.rel.empty())
    throw UsageError("--relative requires a graph file with a relative subgraph");
  return build_trivial_complex(s.pg.graph, s.pg.rel, relative, n);
}

SurfaceParams model_params(const Options& o) {
  if (o.model.empty()) return SurfaceParams{1, 1};
  int g = -1, m = -1;
  char comma = 0;
  std::istringstream in(o.model);
  if (!(in >> g >> comma >> m) || comma != ',' || !in.eof() || g < 0 || m < 1)
    throw UsageError("--model expects 'g,m' with g >= 0 and m >= 1");
  return SurfaceParams{g, m};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  parts.push_back(cur);
  return parts;
}

Specialization parse_coeff(const std::string& text, const SurfaceParams& P, bool is_model) {
  Specialization S;
  if (text == "trivial") {
    S.kind = SpecKind::TrivialInt;
    return S;
  }
  if (text == "linearized") {
    if (!is_model) throw UsageError("linearized coefficients require --model");
    S.kind = SpecKind::Linearized;
    return S;
  }
  if (text.rfind("scalar", 0) == 0) {
    if (!is_model) throw UsageError("scalar coefficients require --model");
    S.kind = SpecKind::Scalar;
    S.scalar = default_scalar(P);
    std::string rest = text.substr(6);
    if (!rest.empty()) {
      if (rest[0] != ':')
        throw UsageError("scalar assignments follow a colon: scalar:u=-1,a1=2");
      for (const std::string& item : split(rest.substr(1), ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
          throw UsageError("scalar assignment '" + item + "' is not name=value");
        std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        if (name == "u") {
          if (value == "1" || value == "+1")
            S.scalar.epsilon = 1;
          else if (value == "-1")
            S.scalar.epsilon = -1;
          else
            throw UsageError("the central value must be 1 or -1");
          continue;
        }
        int slot = -1;
        for (int sl = 0; sl < P.h1_rank(); ++sl)
          if (slot_name(P, sl) == name) slot = sl;
        if (slot < 0) throw UsageError("unknown coefficient name '" + name + "'");
        try {
          S.scalar.slot_values[slot] = Rational(value);
        } catch (const std::exception&) {
          throw UsageError("cannot parse rational value '" + value + "'");
        }
        if (S.scalar.slot_values[slot] == 0)
          throw UsageError("coefficient values must be nonzero");
      }
    }
    return S;
  }
  throw UsageError("--coeff must be trivial, scalar[:assignments], or linearized");
}

std::string describe_coeff(const Specialization& S, const SurfaceParams& P) {
  switch (S.kind) {
    case SpecKind::TrivialInt:
      return "trivial";
    case SpecKind::Linearized:
      return "linearized";
    case SpecKind::Scalar: {
      std::string s = "scalar(u=" + std::to_string(S.scalar.epsilon);
      for (int sl = 0; sl < P.h1_rank(); ++sl) {
        std::ostringstream v;
        v << S.scalar.slot_values[sl];
        s += "," + slot_name(P, sl) + "=" + v.str();
      }
      return s + ")";
    }
  }
  return "?";
}

std::string join_row(const std::vector<std::string>& entries) {
  std::string line;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) line += "&";
    line += entries[i];
  }
  return line;
}

std::vector<std::vector<std::string>> dense_rows(const BMComplex& C, int k) {
  int rows = (int)C.cells[k].size();
  int cols = (int)C.cells[k - 1].size();
  std::vector<std::vector<std::string>> out(rows, std::vector<std::string>(cols, "0"));
  for (int r = 0; r < rows; ++r)
    for (const auto& [c, val] : C.boundary[k][r]) out[r][c] = render_group_ring(val);
  return out;
}

int finish(const std::string& command, const std::string& status) {
  std::cout << "RESULT " << command << " " << status << "\n";
  if (status == "ok") return 0;
  return status == "fail" ? 1 : 2;
}

int cmd_invariants(const Options& o) {
  Source s = load_source(o);
  const RibbonGraph& G = s.is_model ? s.sm.graph : s.pg.graph;
  const RelativeSubgraph& A = s.is_model ? s.sm.rel : s.pg.rel;
  SurfaceInvariants inv = surface_invariants(G);
  int faces = (int)trace_faces(G).size();
  std::string rel = "none";
  if (!A.empty()) {
    ValidationReport r = validate_relative(G, A);
    rel = r.valid ? "valid" : ("invalid: " + r.message);
  }
  int h1 = 2 * inv.genus + inv.boundary_components - 1;
  if (want_json(o)) {
    json j;
    j["source"] = s.describe;
    j["vertices"] = G.num_vertices();
    j["edges"] = G.num_edges();
    j["faces"] = faces;
    j["euler"] = inv.euler;
    j["genus"] = inv.genus;
    j["boundary_components"] = inv.boundary_components;
    j["connected"] = G.is_connected();
    j["h1_rank"] = h1;
    j["relative"] = rel;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "source: " << s.describe << "\n";
    std::cout << "vertices: " << G.num_vertices() << "\n";
    std::cout << "edges: " << G.num_edges() << "\n";
    std::cout << "faces: " << faces << "\n";
    std::cout << "euler: " << inv.euler << "\n";
    std::cout << "genus: " << inv.genus << "\n";
    std::cout << "boundary-components: " << inv.boundary_components << "\n";
    std::cout << "connected: " << (G.is_connected() ? "yes" : "no") << "\n";
    std::cout << "h1-rank: " << h1 << "\n";
    std::cout << "relative: " << rel << "\n";
  }
  return finish("invariants", "ok");
}

int cmd_cells(const Options& o) {
  Source s = load_source(o);
  BMComplex C = make_complex(s, o.relative, o.n);
  int total = 0;
  for (int k = 0; k <= C.n; ++k) total += (int)C.cells[k].size();
  if (want_json(o)) {
    json j;
    j["source"] = s.describe;
    j["points"] = C.n;
    j["relative"] = C.relative;
    j["total"] = total;
    j["degrees"] = json::array();
    for (int k = 0; k <= C.n; ++k) {
      json d;
      d["dim"] = k;
      d["count"] = (int)C.cells[k].size();
      d["cells"] = json::array();
      for (const auto& c : C.cells[k]) d["cells"].push_back(render_cell(C.graph, c));
      j["degrees"].push_back(d);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "source: " << s.describe << "\n";
    std::cout << "points: " << C.n << "\n";
    std::cout << "mode: " << (C.relative ? "relative" : "absolute") << "\n";
    for (int k = 0; k <= C.n; ++k) {
      std::cout << "degree " << k << ": " << C.cells[k].size() << " cells\n";
      for (const auto& c : C.cells[k]) std::cout << "  " << render_cell(C.graph, c) << "\n";
    }
    std::cout << "total: " << total << "\n";
  }
  return finish("cells", "ok");
}

int cmd_boundary(const Options& o) {
  Source s = load_source(o);
  BMComplex C = make_complex(s, o.relative, o.n);
  if (want_json(o)) {
    json j;
    j["source"] = s.describe;
    j["points"] = C.n;
    j["relative"] = C.relative;
    j["matrices"] = json::array();
    for (int k = 1; k <= C.n; ++k) {
      json m;
      m["degree"] = k;
      m["rows"] = (int)C.cells[k].size();
      m["cols"] = (int)C.cells[k - 1].size();
      m["entries"] = json::array();
      for (const auto& row : dense_rows(C, k)) m["entries"].push_back(row);
      j["matrices"].push_back(m);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "source: " << s.describe << "\n";
    std::cout << "points: " << C.n << "\n";
    std::cout << "mode: " << (C.relative ? "relative" : "absolute") << "\n";
    for (int k = 1; k <= C.n; ++k) {
      std::cout << "boundary degree " << k << " (" << C.cells[k].size() << " x "
                << C.cells[k - 1].size() << ")\n";
      for (const auto& row : dense_rows(C, k)) std::cout << join_row(row) << "\n";
    }
  }
  return finish("boundary", "ok");
}

int cmd_homology(const Options& o) {
  Source s = load_source(o);
  BMComplex C = make_complex(s, o.relative, o.n);
  SurfaceParams P = s.is_model ? s.sm.params : SurfaceParams{0, 1};
  Specialization S = parse_coeff(o.coeff, P, s.is_model);
  HomologySummary H = bm_homology(C, S);
  std::string coeff_desc = describe_coeff(S, P);
  if (want_json(o)) {
    json j;
    j["source"] = s.describe;
    j["points"] = C.n;
    j["relative"] = C.relative;
    j["coefficients"] = coeff_desc;
    j["unit"] = H.unit;
    j["over_field"] = H.over_field;
    j["degrees"] = json::array();
    for (int k = 0; k <= C.n; ++k) {
      json d;
      d["degree"] = k;
      d["chains"] = H.chain_ranks[k];
      d["betti"] = H.groups[k].free_rank;
      d["torsion"] = json::array();
      for (const auto& t : H.groups[k].torsion) d["torsion"].push_back(t.str());
      j["degrees"].push_back(d);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "source: " << s.describe << "\n";
    std::cout << "points: " << C.n << "\n";
    std::cout << "mode: " << (C.relative ? "relative" : "absolute") << "\n";
    std::cout << "coefficients: " << coeff_desc << "\n";
    std::cout << "unit: " << H.unit << "\n";
    for (int k = 0; k <= C.n; ++k) {
      std::cout << "degree " << k << ": chains " << H.chain_ranks[k] << ", betti "
                << H.groups[k].free_rank;
      if (!H.groups[k].torsion.empty()) {
        std::cout << ", torsion ";
        for (size_t i = 0; i < H.groups[k].torsion.size(); ++i) {
          if (i) std::cout << ",";
          std::cout << H.groups[k].torsion[i];
        }
      }
      std::cout << "\n";
    }
  }
  return finish("homology", "ok");
}

int cmd_phi(const Options& o) {
  if (o.word.empty()) throw UsageError("phi requires --word");
  SurfaceParams P = model_params(o);
  if (o.n < 2) throw UsageError("--n must be at least 2 for braid words");
  BraidWord w = parse_word(o.word);
  HeisenbergElement h = phi_eval(w, P, o.n);
  std::string value = render_monomial(P, h);
  if (want_json(o)) {
    json j;
    j["surface"] = {{"g", P.g}, {"m", P.m}};
    j["strands"] = o.n;
    j["word"] = word_to_string(w);
    j["value"] = value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "surface: (" << P.g << "," << P.m << ")\n";
    std::cout << "strands: " << o.n << "\n";
    std::cout << "word: " << word_to_string(w) << "\n";
    std::cout << "value: " << value << "\n";
  }
  return finish("phi", "ok");
}

int cmd_twist_matrices(const Options& o) {
  auto ra = render_twist_matrix(twist_matrix(TwistCurve::CurveA));
  auto rb = render_twist_matrix(twist_matrix(TwistCurve::CurveB));
  auto rows = [](const std::array<std::array<std::string, 3>, 3>& r) {
    std::vector<std::string> lines;
    for (int i = 0; i < 3; ++i) lines.push_back(join_row({r[i][0], r[i][1], r[i][2]}));
    return lines;
  };
  if (want_json(o)) {
    json j;
    j["basis"] = {"w(a)", "w(b)", "v(a,b)"};
    j["a"] = json::array();
    j["b"] = json::array();
    for (int i = 0; i < 3; ++i) {
      j["a"].push_back({ra[i][0], ra[i][1], ra[i][2]});
      j["b"].push_back({rb[i][0], rb[i][1], rb[i][2]});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "basis: w(a), w(b), v(a,b)\n";
    std::cout << "twist a (3 x 3)\n";
    for (const auto& l : rows(ra)) std::cout << l << "\n";
    std::cout << "twist b (3 x 3)\n";
    for (const auto& l : rows(rb)) std::cout << l << "\n";
  }
  return finish("twist-matrices", "ok");
}

int cmd_verify(const Options& o) {
  SurfaceParams P = model_params(o);
  if (o.n < 2) throw UsageError("--n must be at least 2 for the relation check");
  bool ok = true;
  json j;
  std::ostringstream text;
  if (!o.twists_only) {
    RelationReport rr = check_relations(P, o.n);
    ok = ok && rr.all_pass;
    text << "relations (g=" << P.g << ", m=" << P.m << ", n=" << o.n << ")\n";
    j["relations"] = json::array();
    for (const auto& f : rr.families) {
      text << "  " << f.name << ": " << f.instances << " instances "
           << (f.pass ? "PASS" : "FAIL") << "\n";
      j["relations"].push_back({{"name", f.name}, {"instances", f.instances}, {"pass", f.pass}});
    }
  }
  IdentityReport ir = verify_identities();
  ok = ok && ir.all_pass();
  text << "twisted identities\n";
  text << "  automorphisms-preserve-form: " << (ir.automorphisms_preserve_form ? "PASS" : "FAIL")
       << "\n";
  text << "  braid-relation identity: " << (ir.braid_identity ? "PASS" : "FAIL") << "\n";
  text << "  boundary-twist-trivial-on-h1: " << (ir.boundary_trivial_on_h1 ? "PASS" : "FAIL")
       << "\n";
  text << "  boundary-twist-commutes-a: " << (ir.boundary_commutes_a ? "PASS" : "FAIL") << "\n";
  text << "  boundary-twist-commutes-b: " << (ir.boundary_commutes_b ? "PASS" : "FAIL") << "\n";
  j["twists"] = {{"automorphisms_preserve_form", ir.automorphisms_preserve_form},
                 {"braid_identity", ir.braid_identity},
                 {"boundary_trivial_on_h1", ir.boundary_trivial_on_h1},
                 {"boundary_commutes_a", ir.boundary_commutes_a},
                 {"boundary_commutes_b", ir.boundary_commutes_b}};
  j["pass"] = ok;
  if (want_json(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text.str();
  return finish("verify", ok ? "ok" : "fail");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Borel-Moore homology of graph configuration spaces with "
               "Heisenberg coefficients"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* c) {
    c->add_option("--model", o.model, "built-in surface model 'g,m'");
    c->add_option("--graph", o.graph, "ribbon graph interchange file");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format: text|json");
  };
  auto add_complex = [&](CLI::App* c) {
    c->add_option("--n", o.n, "number of configuration points");
    c->add_flag("--relative", o.relative, "use the complex relative to the base subgraph");
  };

  CLI::App* c_inv = app.add_subcommand("invariants", "surface invariants of a ribbon graph");
  add_source(c_inv);
  add_format(c_inv);

  CLI::App* c_cells = app.add_subcommand("cells", "list configuration cells per degree");
  add_source(c_cells);
  add_complex(c_cells);
  add_format(c_cells);

  CLI::App* c_bound = app.add_subcommand("boundary", "print boundary matrices");
  add_source(c_bound);
  add_complex(c_bound);
  add_format(c_bound);

  CLI::App* c_hom = app.add_subcommand("homology", "Borel-Moore homology of the complex");
  add_source(c_hom);
  add_complex(c_hom);
  c_hom->add_option("--coeff", o.coeff, "trivial | scalar[:u=...,a1=...] | linearized");
  add_format(c_hom);

  CLI::App* c_phi = app.add_subcommand("phi", "evaluate the braid surjection on a word");
  c_phi->add_option("--model", o.model, "surface model 'g,m' (default 1,1)");
  c_phi->add_option("--n", o.n, "strand count (default 2)");
  c_phi->add_option("--word", o.word, "braid word, e.g. 's1 a1 b1^-1'");
  add_format(c_phi);

  CLI::App* c_tw = app.add_subcommand("twist-matrices", "matrices of the two core twists");
  add_format(c_tw);

  CLI::App* c_ver = app.add_subcommand("verify", "check relations and twist identities");
  c_ver->add_option("--model", o.model, "surface model 'g,m' for the relation check");
  c_ver->add_option("--n", o.n, "strand count for the relation check");
  c_ver->add_flag("--twists", o.twists_only, "check only the twist identities");
  add_format(c_ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string command;
  try {
    if (app.got_subcommand(c_inv)) {
      command = "invariants";
      return cmd_invariants(o);
    }
    if (app.got_subcommand(c_cells)) {
      command = "cells";
      return cmd_cells(o);
    }
    if (app.got_subcommand(c_bound)) {
      command = "boundary";
      return cmd_boundary(o);
    }
    if (app.got_subcommand(c_hom)) {
      command = "homology";
      return cmd_homology(o);
    }
    if (app.got_subcommand(c_phi)) {
      command = "phi";
      return cmd_phi(o);
    }
    if (app.got_subcommand(c_tw)) {
      command = "twist-matrices";
      return cmd_twist_matrices(o);
    }
    command = "verify";
    return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return finish(command, "error");
  }
}
