#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ofs/calculus.hpp"
#include "ofs/canonical.hpp"
#include "support/fixtures.hpp"

using namespace ofs;

TEST_CASE("size vectors") {
  CHECK(size_vector(fixtures::o0()) == SizeVector{1});
  CHECK(size_vector(fixtures::i1()) == SizeVector{1, 1});
  CHECK(size_vector(fixtures::path2()) == SizeVector{1, 2});
  CHECK(size_vector(fixtures::g2(2)) == SizeVector{1, 1, 1});
  CHECK(size_vector(fixtures::b0()) == SizeVector{1, 1, 1});
  CHECK(size_vector(fixtures::vcomp()) == SizeVector{1, 1, 2});
  CHECK(size_vector(fixtures::grid2x2()) == SizeVector{1, 2, 4});

  CHECK(size_less(size_vector(fixtures::i1()), size_vector(fixtures::path2())));
  CHECK_FALSE(
      size_less(size_vector(fixtures::path2()), size_vector(fixtures::i1())));
  CHECK_FALSE(size_less(size_vector(fixtures::o0()), size_vector(fixtures::o0())));
  // a structure with more faces in a lower dimension but fewer on top is smaller
  CHECK(size_less(size_vector(fixtures::path3()), size_vector(fixtures::g2(1))));
}

TEST_CASE("principality") {
  for (int n = 0; n <= 3; ++n) CHECK(is_principal(fixtures::g2(n)));
  CHECK(is_principal(fixtures::o0()));
  CHECK(is_principal(fixtures::comp3()));
  CHECK(is_principal(fixtures::globe3()));
  CHECK_FALSE(is_principal(fixtures::path2()));
  CHECK_FALSE(is_principal(fixtures::vcomp()));
  CHECK_FALSE(is_principal(fixtures::grid2x2()));
  CHECK_FALSE(is_principal(fixtures::sfig()));
}

TEST_CASE("domains and codomains of the fixtures") {
  Ofs i = fixtures::i1();
  auto d0 = k_domain(i, 0), c0 = k_codomain(i, 0);
  CHECK(d0.structure.total_faces() == 1);
  CHECK(d0.structure.names[0][0] == "x");
  CHECK(c0.structure.names[0][0] == "y");
  CHECK(check_morphism(d0.inclusion, MorphKind::Monotone).ok);

  Ofs g = fixtures::g2(2);
  CHECK(find_iso(k_domain(g, 1).structure, fixtures::path2()).has_value());
  Ofs cg = k_codomain(g, 1).structure;
  CHECK(cg.dim() == 1);
  CHECK(cg.count(1) == 1);
  CHECK(cg.names[1][0] == "b");

  // beyond the dimension both are identities
  auto full = k_domain(g, 5);
  CHECK(full.structure == g);
  CHECK(full.inclusion.map == identity(g).map);

  // the bubble: 1-domain collapses to the point, 1-codomain is a relaxed
  // interface holding the unfilled loop
  Ofs b = fixtures::b0();
  CHECK(find_iso(k_domain(b, 1).structure, fixtures::o0()).has_value());
  Ofs cb = k_codomain(b, 1).structure;
  CHECK(cb.dim() == 1);
  CHECK(cb.relaxed_top);
  CHECK(is_loop(cb, 1, 0));

  Ofs v = fixtures::vcomp();
  CHECK(find_iso(k_domain(v, 1).structure, fixtures::g2(1)).has_value() ==
        false);  // d1 of vcomp is the single edge a
  CHECK(k_domain(v, 1).structure.count(1) == 1);
  CHECK(k_codomain(v, 1).structure.names[1][0] == "c");
}

TEST_CASE("tensor rebuilds the composite fixtures") {
  TensorResult p = tensor(fixtures::i1(), fixtures::i1(), 0);
  CHECK(find_iso(p.object, fixtures::path2()).has_value());
  CHECK(check_morphism(p.kappa1, MorphKind::Monotone).ok);
  CHECK(check_morphism(p.kappa2, MorphKind::Monotone).ok);

  TensorResult v = tensor(fixtures::g2(1), fixtures::g2(1), 1);
  CHECK(find_iso(v.object, fixtures::vcomp()).has_value());
  // the completion was forced to order the first 2-cell below the second
  const Ofs& vo = v.object;
  int al = v.kappa1.map[2][0], be = v.kappa2.map[2][0];
  CHECK(vo.tilde_has(2, al, be));
  CHECK_FALSE(vo.tilde_has(2, be, al));

  // the loop-pencil figure is the 0-tensor of two bubbles
  TensorResult s = tensor(fixtures::b0(), fixtures::b0(), 0);
  CHECK(find_iso(s.object, fixtures::sfig()).has_value());
  CHECK(s.object.tilde[1].size() == 1);

  // 2x2 grid as a horizontal composite of two vertical composites
  TensorResult g =
      tensor(tensor(fixtures::g2(1), fixtures::g2(1), 1).object,
             tensor(fixtures::g2(1), fixtures::g2(1), 1).object, 0);
  CHECK(find_iso(g.object, fixtures::grid2x2()).has_value());
}

TEST_CASE("tensor interface mismatch") {
  CHECK_THROWS_WITH_AS(tensor(fixtures::g2(1), fixtures::path2(), 1),
                       doctest::Contains("InterfaceMismatch"), OfsError);
}

TEST_CASE("cuts of the fixtures") {
  CHECK(enumerate_cuts(fixtures::g2(2)).empty());
  CHECK(enumerate_cuts(fixtures::comp3()).empty());

  auto pc = enumerate_cuts(fixtures::path2());
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].level == 0);
  Ofs p = fixtures::path2();
  CHECK(p.names[pc[0].witness.level][pc[0].witness.index] == "x1");
  auto [down, up] = split(p, pc[0]);
  CHECK(find_iso(down, fixtures::i1()).has_value());
  CHECK(find_iso(up, fixtures::i1()).has_value());

  auto vc = enumerate_cuts(fixtures::vcomp());
  REQUIRE(vc.size() == 1);
  CHECK(vc[0].level == 1);
  Ofs v = fixtures::vcomp();
  CHECK(v.names[1][vc[0].witness.index] == "b");
  auto [vd, vu] = split(v, vc[0]);
  CHECK(find_iso(vd, fixtures::g2(1)).has_value());
  CHECK(find_iso(vu, fixtures::g2(1)).has_value());

  CHECK_THROWS_WITH_AS(split(fixtures::g2(2), pc[0]),
                       doctest::Contains("InvalidCut"), OfsError);
}

TEST_CASE("decomposition round-trip, size descent and dichotomy") {
  for (auto& [name, s] : fixtures::corpus()) {
    CAPTURE(name);
    auto cuts = enumerate_cuts(s);
    CHECK(is_principal(s) == cuts.empty());
    for (const auto& cut : cuts) {
      auto [down, up] = split(s, cut);
      CHECK(size_less(size_vector(down), size_vector(s)));
      CHECK(size_less(size_vector(up), size_vector(s)));
      TensorResult t = tensor(down, up, cut.level);
      CHECK(find_iso(t.object, s).has_value());
    }
  }
}

TEST_CASE("whiskered composites decompose through shared edges") {
  // 2-cell then an edge: alpha whiskered by e, then cut vertically
  TensorResult w = tensor(fixtures::g2(1), fixtures::i1(), 0);
  Ofs ws = w.object;
  CHECK(ws.dim() == 2);
  auto cuts = enumerate_cuts(ws);
  CHECK_FALSE(cuts.empty());
  // stack two whiskered cells: both parts of the 1-cut keep the edge
  TensorResult tall = tensor(ws, tensor(fixtures::g2(1), fixtures::i1(), 0).object, 1);
  bool found_1cut = false;
  for (const auto& cut : enumerate_cuts(tall.object)) {
    if (cut.level != 1) continue;
    found_1cut = true;
    auto [down, up] = split(tall.object, cut);
    CHECK(find_iso(down, ws).has_value());
    CHECK(find_iso(up, ws).has_value());
  }
  CHECK(found_1cut);
}

TEST_CASE("domain/codomain composition laws") {
  for (auto& [name, s] : fixtures::corpus()) {
    CAPTURE(name);
    LawReport rep = check_dc_laws(s);
    for (auto& f : rep.failures) {
      CAPTURE(f);
      CHECK(false);
    }
  }
}

TEST_CASE("unit laws") {
  for (auto& [name, s] : fixtures::corpus()) {
    CAPTURE(name);
    LawReport rep = check_unit_laws(s);
    for (auto& f : rep.failures) {
      CAPTURE(f);
      CHECK(false);
    }
  }
}

TEST_CASE("associativity") {
  Ofs i = fixtures::i1(), g = fixtures::g2(1);
  CHECK(check_associativity(i, i, i, 0).ok());
  CHECK(check_associativity(g, g, g, 1).ok());
  // associating a 0-composite of 2-cells
  CHECK(check_associativity(g, g, g, 0).ok());
}

TEST_CASE("middle exchange on the grid") {
  Ofs g = fixtures::g2(1);
  LawReport rep = check_middle_exchange(g, g, g, g, 0, 1);
  for (auto& f : rep.failures) {
    CAPTURE(f);
    CHECK(false);
  }
}

TEST_CASE("domains and codomains of tensors") {
  CHECK(check_dc_of_tensor(fixtures::i1(), fixtures::i1(), 0).ok());
  CHECK(check_dc_of_tensor(fixtures::g2(1), fixtures::g2(1), 1).ok());
  CHECK(check_dc_of_tensor(fixtures::g2(2), fixtures::g2(1), 1).ok());
  CHECK(check_dc_of_tensor(fixtures::b0(), fixtures::b0(), 0).ok());
}

TEST_CASE("tensor squares are pushouts for local maps") {
  std::vector<TensorResult> squares;
  squares.push_back(tensor(fixtures::i1(), fixtures::i1(), 0));
  squares.push_back(tensor(fixtures::g2(1), fixtures::g2(1), 1));
  squares.push_back(tensor(fixtures::b0(), fixtures::b0(), 0));
  for (auto& [name, probe] : fixtures::corpus()) {
    CAPTURE(name);
    for (size_t i = 0; i < squares.size(); ++i) {
      CAPTURE(i);
      CHECK(check_pushout(squares[i], probe, MorphKind::Local));
    }
  }
}

TEST_CASE("the bubble square is not a pushout for monotone maps") {
  TensorResult s = tensor(fixtures::b0(), fixtures::b0(), 0);
  // probing with either orientation of the glued object detects that the
  // agreeing pairs outnumber the mediating monotone maps
  CHECK_FALSE(check_pushout(s, fixtures::sfig(false), MorphKind::Monotone));
  CHECK_FALSE(check_pushout(s, fixtures::sfig(true), MorphKind::Monotone));
  // whereas a pencil-free probe cannot tell the difference
  CHECK(check_pushout(tensor(fixtures::i1(), fixtures::i1(), 0),
                      fixtures::path3(), MorphKind::Monotone));
}

TEST_CASE("factorization through the injections") {
  std::vector<TensorResult> squares;
  squares.push_back(tensor(fixtures::i1(), fixtures::i1(), 0));
  squares.push_back(tensor(fixtures::g2(1), fixtures::g2(1), 1));
  squares.push_back(tensor(fixtures::b0(), fixtures::b0(), 0));
  std::vector<Ofs> principals = {fixtures::o0(), fixtures::i1(),
                                 fixtures::g2(0), fixtures::g2(1),
                                 fixtures::g2(2)};
  for (auto& sq : squares)
    for (auto& p : principals) {
      LawReport rep = check_factorization(sq, p);
      for (auto& f : rep.failures) {
        CAPTURE(f);
        CHECK(false);
      }
    }
}
