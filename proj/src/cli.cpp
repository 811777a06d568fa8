#include "grobfan/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grobfan/fan.hpp"
#include "grobfan/parse.hpp"
#include "grobfan/render.hpp"
#include "grobfan/serialize.hpp"

namespace grobfan {

namespace {

struct Options {
  std::string input_file;  // stdin when empty
  std::string order_spec;  // degrevlex in declared order when empty
  std::string symmetry_spec;
  std::string algorithm = "reverse-search";
  std::string output = "text";
  std::string facet_spec;
  bool flippable_only = false;
  long long seed = 0;  // accepted for script parity; everything is deterministic
};

IdealInput load_input(const Options& opt, std::istream& in) {
  if (opt.input_file.empty() || opt.input_file == "-") {
    std::ostringstream text;
    text << in.rdbuf();
    return parse_input(text.str());
  }
  std::ifstream file(opt.input_file);
  if (!file) throw Error("cannot open input file '" + opt.input_file + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_input(text.str());
}

TermOrderMatrix make_order(const Options& opt, const IdealInput& doc) {
  if (!opt.order_spec.empty()) return parse_order(opt.order_spec, doc.variables);
  std::vector<size_t> natural(doc.n());
  for (size_t i = 0; i < natural.size(); ++i) natural[i] = i;
  return TermOrderMatrix::degrevlex(natural);
}

IntVec parse_facet_flag(const std::string& spec, size_t n) {
  IntVec v;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || cur.find_first_not_of("0123456789-+") != std::string::npos)
      throw Error("malformed --facet entry '" + cur + "'");
    v.push_back(Integer(cur));
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  flush();
  if (v.size() != n)
    throw Error("--facet needs " + std::to_string(n) + " comma-separated integers");
  return v;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Shared enumeration front end.  Fills summary.maximal with orbit
// representatives under symmetric-bfs (orbit_sizes set) and with every
// basis otherwise; `all` always receives the full basis set.
FanSummary run_enumeration(const Options& opt, const IdealInput& doc,
                           const TermOrderMatrix& order,
                           std::vector<MarkedBasis>* all) {
  FanSummary summary;
  if (opt.algorithm == "symmetric-bfs") {
    if (opt.symmetry_spec.empty())
      throw SymmetryError("--algorithm symmetric-bfs requires --symmetry");
    std::vector<Permutation> gens = parse_symmetry(opt.symmetry_spec, doc.n());
    if (!validate_symmetry(doc.generators, gens))
      throw SymmetryError("symmetry generators do not fix the ideal");
    PermutationGroup group(gens, doc.n());
    MarkedBasis start = buchberger(doc.generators, order);
    std::vector<Orbit> orbits = symmetric_bfs(start, group, &summary.stats);
    for (Orbit& o : orbits) {
      summary.orbit_sizes.push_back(o.size);
      summary.maximal.push_back(std::move(o.representative));
    }
    if (all) {
      std::vector<Orbit> again;
      again.reserve(summary.maximal.size());
      for (size_t i = 0; i < summary.maximal.size(); ++i)
        again.push_back(Orbit{summary.maximal[i], summary.orbit_sizes[i]});
      *all = expand_orbits(again, group);
    }
  } else if (opt.algorithm == "bfs") {
    MarkedBasis start = buchberger(doc.generators, order);
    bfs_enumerate(start,
                  [&](const MarkedBasis& g) { summary.maximal.push_back(g); },
                  &summary.stats);
    if (all) *all = summary.maximal;
  } else {
    reverse_search(doc.generators, order,
                   [&](const MarkedBasis& g) { summary.maximal.push_back(g); },
                   &summary.stats);
    if (all) *all = summary.maximal;
  }
  if (!summary.maximal.empty())
    summary.h = homogeneity_space(marked_differences(summary.maximal[0]),
                                  doc.n()).size();
  return summary;
}

int cmd_gb(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  MarkedBasis g = buchberger(doc.generators, make_order(opt, doc));
  if (opt.output == "json") {
    Json j;
    j["basis"] = basis_to_json(g, doc.variables);
    out << j.dump(2) << "\n";
  } else {
    out << basis_to_text(g, doc.variables) << "\n";
  }
  return 0;
}

int cmd_cone(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  Cone c = cone_of(buchberger(doc.generators, make_order(opt, doc)));
  if (opt.output == "json") out << cone_to_json(c).dump(2) << "\n";
  else out << cone_to_text(c);
  return 0;
}

int cmd_facets(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  MarkedBasis g = buchberger(doc.generators, make_order(opt, doc));
  std::vector<FacetNormal> facets = facet_normals(g, opt.flippable_only);
  if (opt.output == "json") {
    Json j;
    Json arr = Json::array();
    for (const FacetNormal& f : facets) {
      Json entry;
      entry["normal"] = vector_to_json(f.normal);
      entry["flippable"] = f.flippable;
      arr.push_back(std::move(entry));
    }
    j["facets"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    for (const FacetNormal& f : facets)
      out << ivec_to_string(f.normal) << " "
          << (f.flippable ? "flippable" : "non-flippable") << "\n";
  }
  return 0;
}

int cmd_flip(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  MarkedBasis g = buchberger(doc.generators, make_order(opt, doc));
  IntVec alpha = parse_facet_flag(opt.facet_spec, doc.n());
  MarkedBasis flipped = flip(g, alpha);
  if (opt.output == "json") {
    Json j;
    j["basis"] = basis_to_json(flipped, doc.variables);
    out << j.dump(2) << "\n";
  } else {
    out << basis_to_text(flipped, doc.variables) << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  TermOrderMatrix order = make_order(opt, doc);
  if (opt.output == "text" && opt.algorithm != "symmetric-bfs") {
    // stream bases as the traversal produces them
    auto emit = [&](const MarkedBasis& g) {
      out << basis_to_text(g, doc.variables) << "\n" << std::flush;
    };
    RunStats stats;
    if (opt.algorithm == "bfs")
      bfs_enumerate(buchberger(doc.generators, order), emit, &stats);
    else
      reverse_search(doc.generators, order, emit, &stats);
    return 0;
  }
  FanSummary summary = run_enumeration(opt, doc, order, nullptr);
  if (opt.output == "json") {
    out << summary_to_json(summary, doc.variables).dump(2) << "\n";
  } else {
    for (size_t i = 0; i < summary.maximal.size(); ++i)
      out << summary.orbit_sizes[i] << " "
          << basis_to_text(summary.maximal[i], doc.variables) << "\n";
  }
  return 0;
}

int cmd_fvector(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  std::vector<MarkedBasis> all;
  FanSummary summary = run_enumeration(opt, doc, make_order(opt, doc), &all);
  summary.fvec = f_vector(all);
  if (opt.output == "json") {
    out << summary_to_json(summary, doc.variables).dump(2) << "\n";
  } else {
    out << "h: " << summary.h << "\n";
    std::string fv;
    for (std::uint64_t c : *summary.fvec) {
      if (!fv.empty()) fv += ", ";
      fv += std::to_string(c);
    }
    out << "f_vector: (" << fv << ")\n";
  }
  return 0;
}

int cmd_universal(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  std::vector<MarkedBasis> all;
  run_enumeration(opt, doc, make_order(opt, doc), &all);
  std::vector<Polynomial> universal = universal_basis(all);
  if (opt.output == "json") {
    Json j;
    Json arr = Json::array();
    for (const Polynomial& f : universal)
      arr.push_back(polynomial_to_text(f, doc.variables));
    j["universal_basis"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    for (const Polynomial& f : universal)
      out << polynomial_to_text(f, doc.variables) << "\n";
  }
  return 0;
}

int cmd_render(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  std::vector<MarkedBasis> all;
  FanSummary summary = run_enumeration(opt, doc, make_order(opt, doc), &all);
  summary.maximal = std::move(all);  // render every cone, not just reps
  out << render_slice_svg(summary);
  return 0;
}

int cmd_stats(const Options& opt, std::istream& in, std::ostream& out) {
  IdealInput doc = load_input(opt, in);
  FanSummary summary = run_enumeration(opt, doc, make_order(opt, doc), nullptr);
  std::uint64_t total = 0;
  if (summary.orbit_sizes.empty()) total = summary.maximal.size();
  else for (size_t s : summary.orbit_sizes) total += s;
  if (opt.output == "json") {
    Json j;
    j["total_cones"] = std::to_string(total);
    if (!summary.orbit_sizes.empty())
      j["orbits"] = std::to_string(summary.orbit_sizes.size());
    j["counters"] = counters_to_json(summary.stats);
    out << j.dump(2) << "\n";
  } else {
    out << "cones: " << total << "\n";
    if (!summary.orbit_sizes.empty())
      out << "orbits: " << summary.orbit_sizes.size() << "\n";
    out << "facet_computations: " << summary.stats.facet_computations << "\n"
        << "shoots: " << summary.stats.shoots << "\n"
        << "flips: " << summary.stats.flips << "\n"
        << "lp_calls: " << summary.stats.lp_calls << "\n"
        << "wall_seconds: " << fixed3(summary.stats.wall_seconds) << "\n";
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"grobfan: Gröbner fans of rational polynomial ideals"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool traversal) {
    cmd->add_option("input", opt.input_file,
                    "ideal document file (stdin when omitted)");
    cmd->add_option("--order", opt.order_spec,
                    "term order: lex|deglex|degrevlex[:vars], "
                    "weight:w1,...;tiebreak=<spec>, matrix:rows");
    cmd->add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", opt.seed,
                    "accepted for script parity; output is deterministic");
    if (traversal) {
      cmd->add_option("--algorithm", opt.algorithm, "traversal algorithm")
          ->check(CLI::IsMember({"reverse-search", "bfs", "symmetric-bfs"}));
      cmd->add_option("--symmetry", opt.symmetry_spec,
                      "permutation generators, 1-based images: '2,3,1;...'");
    }
  };

  add_common(app.add_subcommand("gb", "reduced Gröbner basis for --order"),
             false);
  add_common(app.add_subcommand("cone", "Gröbner cone of the --order basis"),
             false);
  CLI::App* facets =
      app.add_subcommand("facets", "facet normals of the --order cone");
  add_common(facets, false);
  facets->add_flag("--flippable-only", opt.flippable_only,
                   "drop non-flippable facets");
  CLI::App* flip_cmd =
      app.add_subcommand("flip", "flip the --order basis across --facet");
  add_common(flip_cmd, false);
  flip_cmd->add_option("--facet", opt.facet_spec,
                       "inner facet normal, comma-separated integers")
      ->required();
  add_common(app.add_subcommand("enumerate", "every marked reduced basis"),
             true);
  add_common(app.add_subcommand("fvector", "face counts by dimension"), true);
  add_common(app.add_subcommand("universal", "universal Gröbner basis"), true);
  add_common(app.add_subcommand("render", "SVG slice at x+y+z=1 (3 variables)"),
             true);
  add_common(app.add_subcommand("stats", "traversal counters"), true);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("grobfan");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "gb") return cmd_gb(opt, in, out);
    if (command == "cone") return cmd_cone(opt, in, out);
    if (command == "facets") return cmd_facets(opt, in, out);
    if (command == "flip") return cmd_flip(opt, in, out);
    if (command == "enumerate") return cmd_enumerate(opt, in, out);
    if (command == "fvector") return cmd_fvector(opt, in, out);
    if (command == "universal") return cmd_universal(opt, in, out);
    if (command == "render") return cmd_render(opt, in, out);
    if (command == "stats") return cmd_stats(opt, in, out);
    err << "error: unknown command '" << command << "'\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const OrderError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SymmetryError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace grobfan
