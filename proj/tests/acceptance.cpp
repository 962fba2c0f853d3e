// Acceptance run: one PASS/FAIL line per criterion.
#include "lie_oracle.hpp"
#include "sph/build.hpp"
#include "sph/enumerate.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

using namespace sph;

#ifndef REFERENCE_TABLES
#define REFERENCE_TABLES "paper.md"
#endif

namespace {

SystemPtr sys(const std::string& label) {
  return std::make_shared<const RootSystem>(RootSystem::parse(label));
}

struct Criterion {
  int failures = 0;
  std::vector<std::string> notes;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void fail(const std::string& what) {
    if (++failures <= 10) notes.push_back(what);
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  bool report(int n, const std::string& title, const std::string& detail) const {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& s : notes) std::cout << "  [" << n << "] " << s << "\n";
    std::cout << (failures ? "FAIL" : "PASS") << " criterion " << n << ": " << title << " ("
              << detail << (failures ? ", " + std::to_string(failures) + " failures" : "") << ", "
              << static_cast<int>(secs * 1000) << " ms)\n";
    return failures == 0;
  }
};

const std::vector<std::string> kTypes = {"A1", "A2", "B2", "G2", "A3", "B3",
                                         "C3", "A4", "B4", "C4", "D4", "F4"};
const std::vector<std::string> kProducts = {"A1xA1", "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1",
                                            "A1xA3", "A1xB3", "A1xC3", "A2xA2", "A2xB2",
                                            "B2xG2", "A1xA1xA2", "A1xA1xA1xA1"};

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------- reference tables

using PairKey = std::vector<std::pair<std::string, int>>;
using ClassKey = std::vector<std::vector<std::string>>;
using RowKey = std::pair<PairKey, ClassKey>;

RowKey row_key(const std::string& pairs, const std::string& classes) {
  PairKey p;
  static const std::regex pair_re(R"(\((\d+),(\d+)\))");
  for (auto it = std::sregex_iterator(pairs.begin(), pairs.end(), pair_re); it != std::sregex_iterator();
       ++it)
    p.emplace_back((*it)[1], std::stoi((*it)[2]));
  std::sort(p.begin(), p.end());
  ClassKey c;
  std::stringstream ss(classes);
  std::string block;
  while (std::getline(ss, block, ',')) {
    std::vector<std::string> members;
    std::stringstream bs(block);
    std::string m;
    while (std::getline(bs, m, '~'))
      if (!m.empty()) members.push_back(m);
    std::sort(members.begin(), members.end());
    if (!members.empty()) c.push_back(members);
  }
  std::sort(c.begin(), c.end());
  return {p, c};
}

// "5(1),13(4),23" -> {(5,1),(13,4),(23,0)}
std::set<std::pair<int, int>> parse_entry(const std::string& s) {
  std::set<std::pair<int, int>> out;
  static const std::regex tok(R"((\d+)(?:\((\d+)\))?)");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), tok); it != std::sregex_iterator(); ++it)
    out.insert({std::stoi((*it)[1]), (*it)[2].matched ? std::stoi((*it)[2]) : 0});
  return out;
}

struct RefRow {
  int no;
  std::string pairs, classes;
  std::vector<std::string> entries;
  int cS, cN;
};

struct RefTable {
  std::vector<RefRow> rows;
  std::vector<int> d0;
};

std::string strip(std::string s) {
  auto drop = [&](const std::string& what, const std::string& with = "") {
    for (size_t p; (p = s.find(what)) != std::string::npos;) s.replace(p, what.size(), with);
  };
  drop("\\begin{tabular}{c}");
  drop("\\end{tabular}");
  drop("$\\\\$");
  drop("{\\sim}", "~");
  drop("$");
  drop(" ");
  return s;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::string body = line;
  auto end = body.rfind("\\\\");
  if (end != std::string::npos) body = body.substr(0, end);
  std::vector<std::string> cells;
  std::stringstream ss(body);
  std::string cell;
  while (std::getline(ss, cell, '&')) cells.push_back(strip(cell));
  return cells;
}

RefTable read_table(const std::string& label, int ncols) {
  std::ifstream f(REFERENCE_TABLES);
  if (!f) throw std::runtime_error("cannot open " + std::string(REFERENCE_TABLES));
  RefTable t;
  std::string line;
  bool inside = false;
  static const std::regex row_re(R"(^\d+ &)");
  while (std::getline(f, line)) {
    if (line.find("\\label{" + label + "}") != std::string::npos) inside = true;
    if (!inside) continue;
    if (line.find("d_0(G)") != std::string::npos) {
      auto cells = split_cells(line);
      for (size_t k = 1; k < cells.size(); ++k)
        if (!cells[k].empty() && std::isdigit(static_cast<unsigned char>(cells[k][0])))
          t.d0.push_back(std::stoi(cells[k]));
      break;
    }
    if (!std::regex_search(line, row_re)) continue;
    auto cells = split_cells(line);
    if (static_cast<int>(cells.size()) != 5 + ncols)
      throw std::runtime_error("unexpected row shape in " + label + ": " + line);
    RefRow r;
    r.no = std::stoi(cells[0]);
    r.pairs = cells[1];
    r.classes = cells[2];
    for (int k = 0; k < ncols; ++k) r.entries.push_back(cells[3 + k]);
    r.cS = std::stoi(cells[3 + ncols]);
    r.cN = std::stoi(cells[4 + ncols]);
    t.rows.push_back(r);
  }
  return t;
}

struct TableCheck {
  std::string label;
  std::vector<std::string> systems;
  size_t expected_rows;
};

// A misprinted row reference in a transition cell. It is applied only if the
// reference table itself backs it: the replacement row lists this row in the same
// column and the printed row does not.
struct Erratum {
  std::string label, system;
  int row, printed, replacement;
};

const std::vector<Erratum> kErrata = {{"table_rank_4A", "F4", 5, 42, 52}};

bool mentions(const RefRow& r, size_t col, int target) {
  for (const auto& [row, center] : parse_entry(r.entries[col]))
    if (row == target) return true;
  return false;
}

void apply_errata(const TableCheck& tc, RefTable& ref, Criterion& c) {
  for (const auto& e : kErrata) {
    if (e.label != tc.label) continue;
    size_t col = std::find(tc.systems.begin(), tc.systems.end(), e.system) - tc.systems.begin();
    auto row = [&](int no) -> RefRow& { return ref.rows.at(no - 1); };
    bool backed = mentions(row(e.replacement), col, e.row) && !mentions(row(e.printed), col, e.row) &&
                  mentions(row(e.row), col, e.printed);
    c.check(backed, e.label + " row " + std::to_string(e.row) + ": erratum is not supported by the table");
    if (!backed) continue;
    auto& cell = row(e.row).entries[col];
    cell = std::regex_replace(cell, std::regex("\\b" + std::to_string(e.printed) + "\\b"),
                              std::to_string(e.replacement));
    std::cout << "  [3] " << e.label << " row " << e.row << " column " << e.system << ": reading "
              << e.printed << " as " << e.replacement << " (the table lists row " << e.row
              << " in row " << e.replacement << " and not in row " << e.printed << ")\n";
  }
}

// Compares row sets, codimensions, every transition entry and the d0 footer.
int compare_table(const TableCheck& tc, Criterion& c) {
  auto ref = read_table(tc.label, static_cast<int>(tc.systems.size()));
  apply_errata(tc, ref, c);
  std::vector<SystemPtr> systems;
  for (const auto& s : tc.systems) systems.push_back(sys(s));
  auto ours = make_table(systems);
  c.check(ref.rows.size() == tc.expected_rows,
          tc.label + ": reference parse gave " + std::to_string(ref.rows.size()) + " rows");
  c.check(ours.rows.size() == ref.rows.size(),
          tc.label + ": " + std::to_string(ours.rows.size()) + " rows, reference has " +
              std::to_string(ref.rows.size()));
  c.check(ours.d0 == ref.d0, tc.label + ": d0 footer differs");

  std::map<int, RowKey> ref_key;
  for (const auto& r : ref.rows) ref_key[r.no] = row_key(r.pairs, r.classes);
  std::map<RowKey, int> our_row;
  std::vector<RowKey> our_key;
  for (size_t i = 0; i < ours.rows.size(); ++i) {
    our_key.push_back(row_key(format_pairs(ours.rows[i].triple), format_classes(ours.rows[i].triple)));
    our_row[our_key.back()] = static_cast<int>(i);
  }
  auto translate = [](const std::set<std::pair<int, int>>& e, auto&& key_of) {
    std::set<std::pair<RowKey, int>> out;
    for (const auto& [row, center] : e) out.insert({key_of(row), center});
    return out;
  };
  int checked = 0;
  for (const auto& pr : ref.rows) {
    auto it = our_row.find(ref_key[pr.no]);
    if (it == our_row.end()) {
      c.fail(tc.label + " row " + std::to_string(pr.no) + " " + pr.pairs + " " + pr.classes +
             " not enumerated");
      continue;
    }
    const auto& orow = ours.rows[it->second];
    c.check(orow.cS == pr.cS && orow.cN == pr.cN,
            tc.label + " row " + std::to_string(pr.no) + ": codimensions differ");
    for (size_t s = 0; s < tc.systems.size(); ++s) {
      auto want = translate(parse_entry(pr.entries[s]), [&](int r) { return ref_key.at(r); });
      auto got = translate(parse_entry(orow.entries[s].value_or("")),
                           [&](int r) { return our_key.at(r - 1); });
      checked += static_cast<int>(want.size());
      c.check(want == got, tc.label + " row " + std::to_string(pr.no) + " column " +
                               tc.systems[s] + ": reference \"" + pr.entries[s] + "\", got \"" +
                               orow.entries[s].value_or("-") + "\"");
    }
  }
  return checked;
}

// ---------------------------------------------------------------- criteria

bool criterion1() {
  Criterion c;
  const std::map<std::string, int> expected = {{"A1", 2},  {"A2", 5},  {"B2", 6},  {"G2", 6},
                                               {"A3", 18}, {"B3", 22}, {"C3", 21}, {"A4", 74},
                                               {"B4", 91}, {"C4", 86}, {"D4", 86}, {"F4", 87}};
  std::map<std::string, int> memo;
  std::string line;
  for (const auto& l : kTypes) {
    auto s = sys(l);
    int sum = d(s, &memo);
    int direct = d_direct(s);
    c.check(sum == expected.at(l), l + ": d=" + std::to_string(sum) + ", expected " +
                                       std::to_string(expected.at(l)));
    c.check(sum == direct, l + ": subset sum " + std::to_string(sum) + " vs direct count " +
                               std::to_string(direct));
    line += (line.empty() ? "" : " ") + l + "=" + std::to_string(sum);
  }
  return c.report(1, "d(G) for all twelve types", line);
}

bool criterion2() {
  Criterion c;
  const std::vector<std::pair<std::string, int>> expected = {
      {"A2", 2}, {"B2", 3},  {"G2", 3},  {"A1xA1xA1", 5}, {"A1xA2", 5}, {"A1xB2", 7}, {"A3", 8},
      {"B3", 11}, {"C3", 10}, {"A4", 31}, {"B4", 42},      {"C4", 38},  {"F4", 38},   {"D4", 40}};
  std::string line;
  for (const auto& [l, want] : expected) {
    auto s = sys(l);
    int got = d0(s, true);
    int full = d0(s, false);
    c.check(got == want, l + ": d0=" + std::to_string(got) + ", expected " + std::to_string(want));
    c.check(full == got, l + ": full search gives " + std::to_string(full));
    line += (line.empty() ? "" : " ") + l + "=" + std::to_string(got);
  }
  return c.report(2, "d0 at every table footer", line);
}

bool criterion3() {
  Criterion c;
  int checked = 0;
  try {
    const std::vector<TableCheck> tables = {
        {"table_rank_2", {"A2", "B2", "G2"}, 4},
        {"table_A1A1A1", {"A1xA1xA1"}, 5},
        {"table_A1A2", {"A1xA2", "A1xB2"}, 9},
        {"table_rank_3", {"A3", "B3", "C3"}, 17},
        {"table_rank_4A", {"A4", "B4", "C4", "F4"}, 75},
        {"table_rank_4D", {"D4"}, 77},
    };
    for (const auto& t : tables) checked += compare_table(t, c);
  } catch (const std::exception& e) {
    c.fail(e.what());
  }
  // orbit partitions of the rank-2 rows, numbered as in the reference table
  const std::vector<std::pair<std::string, std::set<std::set<int>>>> partitions = {
      {"A2", {{1, 2, 3}, {4}}}, {"B2", {{1}, {2, 3}, {4}}}, {"G2", {{1, 3}, {2}, {4}}}};
  for (const auto& [l, want] : partitions) {
    auto s = sys(l);
    auto cat = enumerate_reduced(s, {0, 1});
    compute_orbits(cat, false);
    auto number = [&](const CombTriple& t) {
      if (t.M.size() == 1) return t.pi[0] == 0 ? 1 : 2;
      return t.classes.size() == 2 ? 3 : 4;
    };
    std::set<std::set<int>> got;
    for (const auto& orb : cat.orbits) {
      std::set<int> rows;
      for (int k : orb) rows.insert(number(cat.triples[k]));
      got.insert(rows);
    }
    c.check(got == want, l + ": rank-2 orbit partition differs");
  }
  c.check(checked >= 10, "fewer than 10 transition entries checked");
  return c.report(3, "table content", std::to_string(checked) + " transition items compared across 6 tables");
}

bool criterion4() {
  Criterion c;
  int triples = 0;
  std::vector<std::string> systems = kTypes;
  systems.insert(systems.end(), kProducts.begin(), kProducts.end());
  for (const auto& l : systems) {
    auto s = sys(l);
    StructureConstants sc(*s);
    for (const auto& part : subsets(s->rank())) {
      auto cat = enumerate_reduced(s, part);
      for (size_t i = 0; i < cat.triples.size(); ++i) {
        const auto& t = cat.triples[i];
        ++triples;
        std::string tag = l + " " + format_pairs(t) + " " + format_classes(t);
        try {
          auto torus = largest_torus(t);
          c.check(validate(t, torus).ok(), tag + ": fails validation with its largest torus");
          auto m = build_subalgebra(t, torus, sc);
          bool weights = true;
          for (const auto& v : m.basis) weights = weights && is_weight_vector(m, v);
          c.check(weights, tag + ": basis vector is not a weight vector");
          c.check(verify_closure(m, sc), tag + ": not closed under the bracket");
          c.check(check_sphericity(m), tag + ": sphericity test fails");
          c.check(m.dim() == s->num_positive() - static_cast<int>(m.aset.classes.size()),
                  tag + ": dim n differs from |positive roots| - K");
          c.check(cat.codims[i].first + cat.codims[i].second ==
                      static_cast<int>(t.support_union().size()),
                  tag + ": c(S) + c(N) differs from |Supp M|");
        } catch (const std::exception& e) {
          c.fail(tag + ": " + e.what());
        }
      }
    }
  }
  return c.report(4, "construction soundness", std::to_string(triples) + " reduced triples in " +
                                            std::to_string(systems.size()) + " systems");
}

bool criterion5() {
  Criterion c;
  int edges = 0, verdicts = 0;
  std::vector<std::string> systems = kTypes;
  systems.insert(systems.end(), kProducts.begin(), kProducts.end());
  for (const auto& l : systems) {
    auto s = sys(l);
    for (const auto& part : subsets(s->rank())) {
      auto reduced = enumerate_reduced(s, part);
      auto full = reduced;
      compute_orbits(reduced, true);
      compute_orbits(full, false);
      std::set<std::vector<int>> a(reduced.orbits.begin(), reduced.orbits.end()),
          b(full.orbits.begin(), full.orbits.end());
      c.check(a == b, l + ": reduced-only orbits differ from full orbits on reduced nodes");
      for (const auto& orb : full.orbits) {
        auto g = orbit(full.triples[orb.front()], false);
        for (const auto& t : g.nodes) {
          auto supp = t.support_union();
          auto cod = codims(t);
          bool red = is_reduced(t);
          std::string tag = l + " " + format_pairs(t) + " " + format_classes(t);
          for (int dlt : regular_active_simple_roots(t)) {
            ++edges;
            auto u = elementary_transform(t, dlt);
            c.check(elementary_transform(u, dlt) == t, tag + ": not an involution at " + std::to_string(dlt));
            c.check(u.support_union() == supp, tag + ": support changes");
            c.check(codims(u) == cod, tag + ": codimensions change");
            if (red) {
              ++verdicts;
              auto v = preserves_reduced(t, dlt);
              c.check((v != ReducedVerdict::NOT_REDUCED) == is_reduced(u),
                      tag + ": verdict " + to_string(v) + " disagrees with check_reduced");
            }
          }
        }
      }
    }
  }
  return c.report(5, "transformation algebra",
           std::to_string(edges) + " edges, " + std::to_string(verdicts) + " verdicts");
}

bool criterion6() {
  Criterion c;
  int triples = 0;
  const std::vector<std::string> systems = {"A1", "A2", "B2", "G2", "A3", "B3", "C3",
                                            "A1xA1", "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1"};
  for (const auto& l : systems) {
    auto s = sys(l);
    for (const auto& part : subsets(s->rank())) {
      for (const auto& t : enumerate_valid(s, part).triples) {
        ++triples;
        std::string tag = l + " " + format_pairs(t) + " " + format_classes(t);
        try {
          auto r = reduce_to_reduced(t);
          c.check(is_reduced(r.result), tag + ": reduction output is not reduced");
          c.check(orbit(t, false).find(r.result) >= 0, tag + ": reduction left the orbit");
        } catch (const std::exception& e) {
          c.fail(tag + ": " + e.what());
        }
      }
    }
  }
  // the count covers every support: 6 with full support, 3 with smaller ones
  auto g2 = sys("G2");
  size_t g2_valid = 0, g2_full = enumerate_valid(g2, {0, 1}).triples.size();
  for (const auto& part : subsets(2)) g2_valid += enumerate_valid(g2, part).triples.size();
  c.check(g2_valid == 9, "G2 has " + std::to_string(g2_valid) + " valid triples");
  c.check(g2_full == 6, "G2 has " + std::to_string(g2_full) + " valid triples with full support");
  return c.report(6, "reduction procedure",
           std::to_string(triples) + " valid triples, G2 count " + std::to_string(g2_valid));
}

bool criterion7() {
  Criterion c;
  long jacobi = 0;
  std::vector<std::string> systems = kTypes;
  systems.insert(systems.end(), kProducts.begin(), kProducts.end());
  for (const auto& l : systems) {
    auto rs = RootSystem::parse(l);
    StructureConstants sc(rs);
    std::vector<Root> all = rs.positive_roots();
    for (const auto& a : rs.positive_roots()) all.push_back(neg(a));
    for (const auto& a : all)
      for (const auto& b : all) {
        c.check(sc.N(a, b) == -sc.N(b, a), l + ": N is not antisymmetric");
        // every Jacobi term lies in the space of a+b+c, so only sums in roots or 0 matter
        std::vector<Root> targets = all;
        targets.push_back(Root(rs.rank(), 0));
        for (const auto& t : targets) {
          Root cc = sub(sub(t, a), b);
          if (!rs.is_root(cc)) continue;
          ++jacobi;
          auto x = oracle::root_vector(rs, a), y = oracle::root_vector(rs, b),
               z = oracle::root_vector(rs, cc);
          oracle::Elt sum;
          sum.h.assign(rs.rank(), Rat(0));
          oracle::axpy(sum, 1, oracle::bracket(sc, x, oracle::bracket(sc, y, z)));
          oracle::axpy(sum, 1, oracle::bracket(sc, y, oracle::bracket(sc, z, x)));
          oracle::axpy(sum, 1, oracle::bracket(sc, z, oracle::bracket(sc, x, y)));
          c.check(sum.zero(), l + ": Jacobi fails");
        }
      }
    for (const auto& comp : rs.components()) {
      if (comp.type != 'A' && comp.type != 'D') continue;
      for (const auto& a : rs.positive_roots()) {
        auto supp = support(a);
        std::set<int> nodes(comp.nodes.begin(), comp.nodes.end());
        if (!std::all_of(supp.begin(), supp.end(), [&](int v) { return nodes.count(v); })) continue;
        c.check(count_decompositions(rs, a) == height(a) - 1, l + ": s(alpha) != hgt - 1");
      }
    }
    for (const auto& a : rs.positive_roots())
      for (int pi : admissible_pis(rs, a)) {
        ActivePair p{a, pi};
        auto f = family(rs, p);
        auto supp = support(a);
        c.check(f.size() == supp.size(), l + ": |F(alpha)| != |Supp alpha|");
        std::set<int> image;
        for (const auto& b : f) image.insert(member_pi(rs, p, b));
        c.check(image == std::set<int>(supp.begin(), supp.end()), l + ": pi is not a bijection");
      }
  }
  return c.report(7, "substrate checks", std::to_string(jacobi) + " Jacobi triples in " +
                                      std::to_string(systems.size()) + " systems");
}

}  // namespace

int main() {
  std::cout << "Acceptance run\n";
  bool ok = true;
  for (auto* run : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7})
    ok = run() && ok;
  return ok ? 0 : 1;
}
