#include "doctest.h"

#include <algorithm>

#include "gadgetforge/gadget.hpp"

using namespace gf;

namespace {

// Lemma conformance: for every input pattern the enumerated output set
// equals the declared behavior; on Akari targets each row's completion is
// unique (parsimony).
void check_template(const GadgetTemplate& t, bool parsimony) {
  int rows = 1 << t.num_inputs();
  REQUIRE(static_cast<int>(t.behavior.size()) == rows);
  for (int p = 0; p < rows; ++p) {
    auto res = enumerate_gadget(t, static_cast<unsigned>(p));
    CAPTURE(t.name);
    CAPTURE(p);
    CHECK(res.output_set == t.behavior[static_cast<std::size_t>(p)]);
    if (parsimony)
      CHECK(res.completions() == t.behavior[static_cast<std::size_t>(p)].size());
  }
}

bool is_akari(Target t) {
  return t == Target::AkariSquare || t == Target::AkariHex || t == Target::AkariTri;
}

}  // namespace

TEST_CASE("catalog completeness per proof") {
  auto names = [](Target tg) {
    std::vector<std::string> out;
    for (const auto& t : catalog(tg)) out.push_back(t.name);
    return out;
  };
  auto has = [](const std::vector<std::string>& v, const char* n) {
    return std::find(v.begin(), v.end(), n) != v.end();
  };
  auto sq = names(Target::AkariSquare);
  for (const char* n : {"SELECT", "WIRE", "TURN_L", "TURN_R", "NOT", "FANOUT", "OR", "CAP"})
    CHECK_MESSAGE(has(sq, n), "square missing ", n);
  auto hx = names(Target::AkariHex);
  for (const char* n : {"SELECT", "WIRE", "TURN60", "TURN120", "NOT", "NFANOUT", "OR", "CAP"})
    CHECK_MESSAGE(has(hx, n), "hex missing ", n);
  auto tr = names(Target::AkariTri);
  for (const char* n : {"SELECT", "WIRE", "TURN", "DOUBLE_TURN", "NOT", "FANOUT", "OR", "CAP"})
    CHECK_MESSAGE(has(tr, n), "tri missing ", n);
  auto hc = names(Target::HexCells);
  for (const char* n : {"SELECT", "WIRE", "TURN", "NOT", "NFANOUT", "NOR", "CAP"})
    CHECK_MESSAGE(has(hc, n), "hexcells missing ", n);
  auto hm = names(Target::Hexiom);
  for (const char* n :
       {"SELECT", "WIRE", "TURN", "NOT", "NFANOUT", "NOR", "CAP", "2-EXCESS", "3-OR-21", "PAIR_DUMP"})
    CHECK_MESSAGE(has(hm, n), "hexiom missing ", n);
}

TEST_CASE("gadget lemma conformance, all targets") {
  for (Target tg : {Target::AkariSquare, Target::AkariHex, Target::AkariTri,
                    Target::HexCells, Target::Hexiom}) {
    for (const auto& t : catalog(tg)) {
      if (t.ports.empty()) continue;  // excess gadgets checked separately
      check_template(t, is_akari(tg));
    }
  }
}

TEST_CASE("hexiom excess gadgets have the lemma completions") {
  // 2-EXCESS: a single 2 in the middle (own 1s pair at the top), or the
  // own 1s flank the fixed clues.
  auto res = enumerate_gadget(find_template(Target::Hexiom, "2-EXCESS"), 0);
  CHECK(res.completions() >= 2);
  bool has_middle_two = false, has_flank_ones = false;
  for (auto& pieces : res.used_pieces) {
    if (pieces == std::vector<int>{1, 1, 2}) has_middle_two = true;
    if (pieces == std::vector<int>{1, 1}) has_flank_ones = true;
  }
  CHECK(has_middle_two);
  CHECK(has_flank_ones);

  // 3-or-{2,1}: a single 3 in the center, or a 2 and a 1.
  auto res3 = enumerate_gadget(find_template(Target::Hexiom, "3-OR-21"), 0);
  bool has_three = false, has_two_one = false;
  for (auto& pieces : res3.used_pieces) {
    if (pieces == std::vector<int>{3}) has_three = true;
    if (pieces == std::vector<int>{1, 2}) has_two_one = true;
  }
  CHECK(has_three);
  CHECK(has_two_one);
  CHECK(res3.completions() == 2);

  // PAIR_DUMP: empty or two adjacent 1-cells.
  auto resd = enumerate_gadget(find_template(Target::Hexiom, "PAIR_DUMP"), 0);
  bool has_empty = false, has_pair = false;
  for (auto& pieces : resd.used_pieces) {
    if (pieces.empty()) has_empty = true;
    if (pieces == std::vector<int>{1, 1}) has_pair = true;
  }
  CHECK(has_empty);
  CHECK(has_pair);
  CHECK(resd.completions() == 2);
}

TEST_CASE("hexiom balance entries match the footprints and the table") {
  // Totals pinned by the balance table: SELECT 5, WIRE 4, NOT 3, FAN-OUT 5,
  // NOR 6, 2-EXCESS 4, 3-or-{2,1} 6.
  auto total = [](const GadgetTemplate& t) {
    int s = 0;
    for (int v : t.balance_fixed) s += v;
    for (int v : t.balance_free) s += v;
    return s;
  };
  auto check_fixed = [](const GadgetTemplate& t) {
    std::vector<int> declared = t.balance_fixed;
    std::vector<int> actual;
    for (auto& [c, v] : t.cells) {
      (void)c;
      if (v >= 0) actual.push_back(v);
    }
    std::sort(declared.begin(), declared.end());
    std::sort(actual.begin(), actual.end());
    CHECK(declared == actual);
  };
  const struct {
    const char* name;
    int tot;
  } rows[] = {{"SELECT", 5}, {"WIRE", 4},    {"NOT", 3},   {"NFANOUT", 5},
              {"NOR", 6},    {"2-EXCESS", 4}, {"3-OR-21", 6}};
  for (const auto& row : rows) {
    const auto& t = find_template(Target::Hexiom, row.name);
    CAPTURE(row.name);
    CHECK(total(t) == row.tot);
    check_fixed(t);
  }
  // Used pieces in every enumerated completion stay within the declared
  // free multiset.
  for (const auto& t : catalog(Target::Hexiom)) {
    int rows_n = 1 << t.num_inputs();
    for (int p = 0; p < rows_n; ++p) {
      auto res = enumerate_gadget(t, static_cast<unsigned>(p));
      for (auto& pieces : res.used_pieces) {
        std::vector<int> declared = t.balance_free;
        std::sort(declared.begin(), declared.end());
        CAPTURE(t.name);
        CHECK(std::includes(declared.begin(), declared.end(), pieces.begin(),
                            pieces.end()));
      }
    }
  }
}

TEST_CASE("hexcells wire has period 3 and NOT period 2") {
  const auto& wire = find_template(Target::HexCells, "WIRE");
  // Chain span: from the input cell to the expectation cell, exclusive.
  const auto& win = wire.input(0);
  const auto& wout = wire.output(0);
  CHECK(win.cell.y - wout.cell.y == 3);
  const auto& nt = find_template(Target::HexCells, "NOT");
  CHECK(nt.input(0).cell.y - nt.output(0).cell.y == 2);
}

TEST_CASE("parity shift pair: identity behavior, length 4") {
  for (Target tg : {Target::HexCells, Target::Hexiom}) {
    auto t = parity_shift_pair(tg);
    check_template(t, false);
    CHECK(t.input(0).cell.y - t.output(0).cell.y == 4);
    CHECK(4 - 3 == 1);  // one cell of alignment shift against a wire
  }
}

TEST_CASE("three applications of the shift realign an offset of 3") {
  int offset = 3;
  for (int i = 0; i < 3; ++i) offset -= (4 - 3);
  CHECK(offset == 0);
}

TEST_CASE("geometry closure: transformed variants pass the same enumeration") {
  // A representative sample per grid kind; full-catalog transforms are
  // exercised by the compiler tests.
  for (const char* name : {"WIRE", "NOT", "OR"}) {
    const auto& t = find_template(Target::AkariSquare, name);
    for (int rot = 0; rot < 4; ++rot)
      for (bool mir : {false, true})
        check_template(transform_template(t, {rot, mir}), true);
  }
  for (const char* name : {"WIRE", "NOT", "OR", "NFANOUT"}) {
    const auto& t = find_template(Target::AkariHex, name);
    for (int rot = 0; rot < 6; ++rot)
      check_template(transform_template(t, {rot, false}), true);
    check_template(transform_template(t, {0, true}), true);
  }
  for (const char* name : {"WIRE", "NOT", "OR", "FANOUT", "TURN"}) {
    const auto& t = find_template(Target::AkariTri, name);
    for (int rot : {0, 1})
      for (bool mir : {false, true})
        check_template(transform_template(t, {rot, mir}), true);
  }
  for (const char* name : {"WIRE", "NOT", "NOR"}) {
    const auto& t = find_template(Target::HexCells, name);
    for (int rot = 0; rot < 6; ++rot)
      check_template(transform_template(t, {rot, false}), false);
  }
}
