// Command-line front end for the classification engine.
#include "sph/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace sph;

namespace {

struct Options {
  std::string system;
  std::string input;
  std::string support;
  std::string format = "text";
  std::string output;
  bool reduced = false;
  bool valid = false;
  int jobs = 1;
  int center = -1;
};

std::string read_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  if (arg.empty() || arg == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(arg);
  if (!f) throw std::invalid_argument("cannot open " + arg);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

SystemPtr system_of(const Options& o) {
  if (o.system.empty()) throw std::invalid_argument("--system is required");
  return std::make_shared<const RootSystem>(RootSystem::parse(o.system));
}

std::vector<int> parse_support(const std::string& s, const RootSystem& rs) {
  if (s.empty()) return all_nodes(rs);
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string root_text(const Root& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i]);
  return s;
}

struct Input {
  CombTriple triple;
  std::optional<TorusSpec> torus;
};

Input load_triple(const Options& o) {
  json j = json::parse(read_input(o.input));
  SystemPtr sys = o.system.empty() ? nullptr : system_of(o);
  Input in{triple_from_json(j, sys), std::nullopt};
  if (j.contains("torus")) in.torus = torus_from_json(j.at("torus"), in.triple.system().rank());
  return in;
}

int cmd_roots(const Options& o, std::ostream& out) {
  auto sys = system_of(o);
  StructureConstants sc(*sys);
  const auto& roots = sys->positive_roots();
  if (o.format == "json") {
    json N = json::array();
    for (size_t a = 0; a < roots.size(); ++a)
      for (size_t b = 0; b < roots.size(); ++b)
        if (int v = sc.N(roots[a], roots[b]))
          N.push_back({{"a", roots[a]}, {"b", roots[b]}, {"N", v}});
    out << json{{"system", sys->label()}, {"positive_roots", roots}, {"structure_constants", N}}.dump(2)
        << "\n";
    return 0;
  }
  out << sys->label() << ": " << roots.size() << " positive roots\n";
  for (const auto& a : roots) out << "  " << root_text(a) << "  height " << height(a) << "\n";
  out << "N(a,b) for positive a, b with a+b a root:\n";
  for (size_t a = 0; a < roots.size(); ++a)
    for (size_t b = a + 1; b < roots.size(); ++b)
      if (int v = sc.N(roots[a], roots[b]))
        out << "  [" << root_text(roots[a]) << "] [" << root_text(roots[b]) << "] " << v << "\n";
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto in = load_triple(o);
  auto r = validate(in.triple, in.torus);
  if (o.reduced) {
    auto red = check_reduced(in.triple);
    r.A_reduced = red.A_reduced;
    r.D_reduced = red.D_reduced;
    r.E_reduced = red.E_reduced;
    r.failures.insert(r.failures.end(), red.failures.begin(), red.failures.end());
  }
  if (o.format == "json") {
    out << to_json(r).dump(2) << "\n";
  } else {
    auto show = [&](const char* name, const std::optional<bool>& v) {
      if (v) out << name << ": " << (*v ? "pass" : "fail") << "\n";
    };
    show("A", r.A);
    show("D", r.D);
    show("E", r.E);
    show("C", r.C);
    show("T", r.T);
    show("A'", r.A_reduced);
    show("D'", r.D_reduced);
    show("E'", r.E_reduced);
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
  return r.ok() ? 0 : 1;
}

int cmd_build(const Options& o, std::ostream& out) {
  auto in = load_triple(o);
  TorusSpec torus = in.torus ? *in.torus : largest_torus(in.triple);
  auto report = validate(in.triple, torus);
  if (!report.ok()) {
    for (const auto& f : report.failures) std::cerr << f << "\n";
    return 1;
  }
  StructureConstants sc(in.triple.system());
  auto m = build_subalgebra(in.triple, torus, sc);
  bool closed = verify_closure(m, sc);
  bool spherical = check_sphericity(m);
  if (o.format == "json") {
    json j = to_json(m);
    j["closed"] = closed;
    j["spherical"] = spherical;
    out << j.dump(2) << "\n";
  } else {
    out << "dim n = " << m.dim() << " (positive roots " << in.triple.system().num_positive() << ")\n"
        << "rank S = " << torus.rank_S() << "\n"
        << "closed under bracket: " << (closed ? "yes" : "no") << "\n"
        << "spherical: " << (spherical ? "yes" : "no") << "\n";
  }
  return closed && spherical ? 0 : 1;
}

void print_triple(const CombTriple& t, const Options& o, std::ostream& out) {
  if (o.format == "json")
    out << to_json(t).dump() << "\n";
  else
    out << format_pairs(t) << (t.classes.size() < t.M.size() ? "  " + format_classes(t) : "") << "\n";
}

int cmd_transform(const Options& o, std::ostream& out) {
  auto in = load_triple(o);
  print_triple(elementary_transform(in.triple, o.center), o, out);
  return 0;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  auto in = load_triple(o);
  auto g = orbit(in.triple, o.reduced);
  if (o.format == "json") {
    out << to_json(g).dump(2) << "\n";
    return 0;
  }
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    out << i << ": ";
    print_triple(g.nodes[i], o, out);
  }
  for (const auto& e : g.edges)
    if (e.from != e.to) out << e.from << " -> " << e.to << " at " << e.center << "\n";
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto sys = system_of(o);
  auto nodes = parse_support(o.support, *sys);
  auto c = o.valid ? enumerate_valid(sys, nodes, o.jobs) : enumerate_reduced(sys, nodes, o.jobs);
  compute_orbits(c, !o.valid);
  if (o.format == "json") {
    write_catalog_jsonl(out, c);
    return 0;
  }
  for (size_t i = 0; i < c.triples.size(); ++i)
    out << i + 1 << " | " << format_pairs(c.triples[i]) << " | " << format_classes(c.triples[i])
        << " | orbit " << c.orbit_of[i] << " | " << c.codims[i].first << " | "
        << c.codims[i].second << "\n";
  out << c.triples.size() << " triples, " << c.orbits.size() << " orbits\n";
  return 0;
}

int cmd_counts(const Options& o, std::ostream& out) {
  auto sys = system_of(o);
  int z = d0(sys), total = d(sys);
  if (o.format == "json")
    out << json{{"system", sys->label()}, {"d0", z}, {"d", total}}.dump() << "\n";
  else
    out << "d0=" << z << " d=" << total << "\n";
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  std::vector<SystemPtr> systems;
  std::stringstream ss(o.system);
  std::string label;
  while (std::getline(ss, label, ','))
    systems.push_back(std::make_shared<const RootSystem>(RootSystem::parse(label)));
  if (systems.empty()) throw std::invalid_argument("--system is required");
  auto t = make_table(systems, o.jobs);
  if (o.format == "json")
    out << to_json(t).dump(2) << "\n";
  else if (o.format == "csv")
    out << format_table_csv(t);
  else
    out << format_table_text(t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of solvable spherical subgroups through combinatorial data"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", o.output, "Write output to this file");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Triple JSON: file path, inline object, or - for stdin");
    sub->add_option("--system", o.system, "Override the system label of the input");
  };

  auto* roots = app.add_subcommand("roots", "Positive roots and structure constants");
  roots->add_option("label", o.system, "System label");
  roots->add_option("--system", o.system, "System label");
  add_common(roots);

  auto* val = app.add_subcommand("validate", "Check conditions (A), (D), (E), (C) and (T)");
  add_input(val);
  val->add_flag("--reduced", o.reduced, "Also check the reduced conditions");
  add_common(val);

  auto* build = app.add_subcommand("build", "Construct the subalgebra and verify it");
  add_input(build);
  add_common(build);

  auto* tr = app.add_subcommand("transform", "Apply one elementary transformation");
  add_input(tr);
  tr->add_option("--center", o.center, "Simple root index (0-based)")->required();
  add_common(tr);

  auto* orb = app.add_subcommand("orbit", "Orbit under elementary transformations");
  add_input(orb);
  orb->add_flag("--reduced", o.reduced, "Follow only transformations that keep the set reduced");
  add_common(orb);

  auto* en = app.add_subcommand("enumerate", "List all reduced (or valid) triples");
  en->add_option("label", o.system, "System label");
  en->add_option("--system", o.system, "System label");
  en->add_option("--support", o.support, "Comma-separated simple-root indices (default: all)");
  en->add_flag("--reduced", o.reduced, "Reduced triples (default)");
  en->add_flag("--valid", o.valid, "All valid triples, rank at most 3");
  en->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(en);

  auto* cnt = app.add_subcommand("counts", "Print d0 and d");
  cnt->add_option("label", o.system, "System label");
  cnt->add_option("--system", o.system, "System label");
  add_common(cnt);

  auto* tab = app.add_subcommand("table", "Emit the transition table for systems sharing a graph");
  tab->add_option("labels", o.system, "Comma-separated system labels");
  tab->add_option("--system", o.system, "Comma-separated system labels");
  tab->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(tab);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      std::cerr << "cannot write " << o.output << "\n";
      return 2;
    }
  }
  std::ostream& out = o.output.empty() ? std::cout : file;

  try {
    if (*roots) return cmd_roots(o, out);
    if (*val) return cmd_validate(o, out);
    if (*build) return cmd_build(o, out);
    if (*tr) return cmd_transform(o, out);
    if (*orb) return cmd_orbit(o, out);
    if (*en) return cmd_enumerate(o, out);
    if (*cnt) return cmd_counts(o, out);
    if (*tab) return cmd_table(o, out);
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
