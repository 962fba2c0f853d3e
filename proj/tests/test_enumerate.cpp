#include "doctest.h"
#include "sph/enumerate.hpp"

using namespace sph;

namespace {

SystemPtr sys(const char* label) { return std::make_shared<const RootSystem>(RootSystem::parse(label)); }

size_t reduced_count(const char* label) {
  auto s = sys(label);
  return enumerate_reduced(s, all_nodes(*s)).triples.size();
}

}  // namespace

TEST_CASE("reduced catalog sizes") {
  CHECK(reduced_count("A2") == 4);
  CHECK(reduced_count("B2") == 4);
  CHECK(reduced_count("A3") == 17);
  CHECK(reduced_count("A4") == 75);
  CHECK(reduced_count("D4") == 77);
  CHECK(reduced_count("A1xA1xA1") == 5);
  CHECK(reduced_count("A1xA2") == 9);
}

TEST_CASE("supports are matched exactly") {
  auto a3 = sys("A3");
  auto c = enumerate_reduced(a3, {0, 2});
  CHECK(c.triples.size() == 2);
  for (const auto& t : c.triples) CHECK(t.support_union() == std::vector<int>{0, 2});
  CHECK(enumerate_reduced(a3, {}).triples.size() == 1);
}

TEST_CASE("valid catalogs") {
  auto b2 = sys("B2");
  auto c = enumerate_valid(b2, all_nodes(*b2));
  CHECK(c.find(make_triple(b2, {{1, 2}}, {0}, {{0}})) >= 0);
  CHECK(c.triples.size() > 4);

  auto a2 = sys("A2");
  CHECK(enumerate_valid(a2, all_nodes(*a2)).triples == enumerate_reduced(a2, all_nodes(*a2)).triples);

  auto g2 = sys("G2");
  CHECK(enumerate_valid(g2, all_nodes(*g2)).triples.size() == 6);
  size_t all = 0;
  for (std::vector<int> part : {std::vector<int>{}, {0}, {1}, {0, 1}})
    all += enumerate_valid(g2, part).triples.size();
  CHECK(all == 9);

  CHECK_THROWS(enumerate_valid(sys("A4"), {0, 1, 2, 3}));
}

TEST_CASE("every valid orbit meets the reduced triples") {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3", "A1xA2", "A1xB2"}) {
    auto s = sys(label);
    auto c = enumerate_valid(s, all_nodes(*s));
    compute_orbits(c, false);
    for (const auto& orb : c.orbits) {
      bool has_reduced = false;
      for (int k : orb) has_reduced = has_reduced || is_reduced(c.triples[k]);
      CHECK(has_reduced);
    }
  }
}

TEST_CASE("d0 and d") {
  CHECK(d0(sys("A1xA1")) == 2);
  CHECK(d0(sys("A3")) == 8);
  CHECK(d0(sys("B3")) == 11);
  CHECK(d0(sys("C3")) == 10);
  CHECK(d0(sys("D4")) == 40);
  CHECK(d(sys("A2")) == 5);
  CHECK(d(sys("B4")) == 91);
  CHECK(d(sys("F4")) == 87);
  for (const char* label : {"A3", "B3", "C3"}) CHECK(d(sys(label)) == d_direct(sys(label)));
}

TEST_CASE("parallel enumeration is deterministic") {
  auto f4 = sys("F4");
  auto one = enumerate_reduced(f4, all_nodes(*f4), 1);
  auto three = enumerate_reduced(f4, all_nodes(*f4), 3);
  CHECK(one.triples == three.triples);
  CHECK(one.codims == three.codims);
}

TEST_CASE("rank-2 table") {
  auto t = make_table({sys("A2"), sys("B2"), sys("G2")});
  REQUIRE(t.rows.size() == 4);
  CHECK(t.d0 == std::vector<int>{2, 3, 3});
  CHECK(format_pairs(t.rows[0].triple) == "(12,1)");
  CHECK(*t.rows[0].entries[0] == "2,3(2)");
  CHECK(*t.rows[0].entries[1] == "");
  CHECK(*t.rows[0].entries[2] == "3(2)");
  CHECK(t.rows[3].cS == 1);
  CHECK(t.rows[3].cN == 1);
  auto text = format_table_text(t);
  CHECK(text.find("(1,1),(2,2) | 1~2") != std::string::npos);
  auto csv = format_table_csv(t);
  CHECK(csv.find("\"(1,1),(2,2)\",1~2") != std::string::npos);
}

TEST_CASE("small tables") {
  auto t = make_table({sys("A1xA2"), sys("A1xB2")});
  CHECK(t.rows.size() == 9);
  CHECK(t.d0 == std::vector<int>{5, 7});
  auto u = make_table({sys("A1xA1xA1")});
  CHECK(u.rows.size() == 5);
  CHECK(u.d0 == std::vector<int>{5});
}
