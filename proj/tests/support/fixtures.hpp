#ifndef OFS_TEST_FIXTURES_HPP
#define OFS_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "ofs/structure.hpp"

// Named structures used across the test suites.  All are valid unless the
// comment says otherwise.

namespace fixtures {

using ofs::Ofs;
using ofs::RawDelta;
using ofs::RawStructure;

inline Ofs o0() {
  RawStructure r;
  r.faces = {{"x"}};
  return build(r);
}

// The 1-globe x --a--> y.
inline Ofs i1() {
  RawStructure r;
  r.faces = {{"x", "y"}, {"a"}};
  r.gamma = {{"a", "y"}};
  r.delta = {{"a", {{}, {"x"}}}};
  return build(r);
}

// Composable chain of n edges: x0 --a1--> x1 --a2--> ... --an--> xn.
inline Ofs path(int n) {
  RawStructure r;
  r.faces.resize(2);
  for (int i = 0; i <= n; ++i) r.faces[0].push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    std::string a = "a" + std::to_string(i);
    r.faces[1].push_back(a);
    r.gamma.emplace_back(a, "x" + std::to_string(i));
    r.delta.emplace_back(a, RawDelta{{}, {"x" + std::to_string(i - 1)}});
    for (int j = 1; j < i; ++j)
      r.tilde.emplace_back("a" + std::to_string(j), a);
  }
  return build(r);
}

inline Ofs path2() { return path(2); }
inline Ofs path3() { return path(3); }

// The 2-globe with an n-ary domain: alpha : (a1;...;an) => b.  For n = 0
// this is the bubble: a 2-face with empty domain on a loop.
inline Ofs g2(int n) {
  RawStructure r;
  if (n == 0) {
    r.faces = {{"x"}, {"b"}, {"alpha"}};
    r.gamma = {{"b", "x"}, {"alpha", "b"}};
    r.delta = {{"b", {{}, {"x"}}}, {"alpha", {{"x"}, {}}}};
    return build(r);
  }
  r.faces.resize(3);
  for (int i = 0; i <= n; ++i) r.faces[0].push_back("x" + std::to_string(i));
  std::vector<std::string> dom;
  for (int i = 1; i <= n; ++i) {
    std::string a = "a" + std::to_string(i);
    r.faces[1].push_back(a);
    r.gamma.emplace_back(a, "x" + std::to_string(i));
    r.delta.emplace_back(a, RawDelta{{}, {"x" + std::to_string(i - 1)}});
    for (int j = 1; j < i; ++j)
      r.tilde.emplace_back("a" + std::to_string(j), a);
    dom.push_back(a);
  }
  r.faces[1].push_back("b");
  r.gamma.emplace_back("b", "x" + std::to_string(n));
  r.delta.emplace_back("b", RawDelta{{}, {"x0"}});
  r.faces[2].push_back("alpha");
  r.gamma.emplace_back("alpha", "b");
  r.delta.emplace_back("alpha", RawDelta{{}, dom});
  return build(r);
}

inline Ofs b0() { return g2(0); }

// Vertical composite: alpha : a => b, beta : b => c, with alpha <~ beta.
inline Ofs vcomp() {
  RawStructure r;
  r.faces = {{"x", "y"}, {"a", "b", "c"}, {"alpha", "beta"}};
  r.gamma = {{"a", "y"}, {"b", "y"}, {"c", "y"},
             {"alpha", "b"}, {"beta", "c"}};
  r.delta = {{"a", {{}, {"x"}}},   {"b", {{}, {"x"}}}, {"c", {{}, {"x"}}},
             {"alpha", {{}, {"a"}}}, {"beta", {{}, {"b"}}}};
  r.tilde = {{"alpha", "beta"}};
  return build(r);
}

// 2x2 pasting grid: two columns of vertically stacked 2-cells.
inline Ofs grid2x2() {
  RawStructure r;
  r.faces = {{"x0", "x1", "x2"},
             {"a1", "a2", "f1", "f2", "g1", "g2"},
             {"al1", "al2", "be1", "be2"}};
  r.gamma = {{"a1", "x1"}, {"a2", "x2"}, {"f1", "x1"}, {"f2", "x2"},
             {"g1", "x1"}, {"g2", "x2"},
             {"al1", "f1"}, {"al2", "f2"}, {"be1", "g1"}, {"be2", "g2"}};
  r.delta = {{"a1", {{}, {"x0"}}}, {"a2", {{}, {"x1"}}},
             {"f1", {{}, {"x0"}}}, {"f2", {{}, {"x1"}}},
             {"g1", {{}, {"x0"}}}, {"g2", {{}, {"x1"}}},
             {"al1", {{}, {"a1"}}}, {"al2", {{}, {"a2"}}},
             {"be1", {{}, {"f1"}}}, {"be2", {{}, {"f2"}}}};
  for (const char* l : {"a1", "f1", "g1"})
    for (const char* u : {"a2", "f2", "g2"}) r.tilde.emplace_back(l, u);
  r.tilde.emplace_back("al1", "be1");
  r.tilde.emplace_back("al2", "be2");
  return build(r);
}

// Two 2-cells with empty domains on two loops at a single 0-face.  The two
// loops form a pencil at the base point; either tilde orientation between
// them yields a valid structure, and no other data distinguishes the two.
inline Ofs sfig(bool flipped = false) {
  RawStructure r;
  r.faces = {{"s"}, {"p", "q"}, {"bp", "bq"}};
  r.gamma = {{"p", "s"}, {"q", "s"}, {"bp", "p"}, {"bq", "q"}};
  r.delta = {{"p", {{}, {"s"}}}, {"q", {{}, {"s"}}},
             {"bp", {{"s"}, {}}}, {"bq", {{"s"}, {}}}};
  r.tilde = {flipped ? std::pair<std::string, std::string>{"q", "p"}
                     : std::pair<std::string, std::string>{"p", "q"}};
  return build(r);
}

// The 3-globe.
inline Ofs globe3() {
  RawStructure r;
  r.faces = {{"x", "y"}, {"a", "b"}, {"alpha", "beta"}, {"Phi"}};
  r.gamma = {{"a", "y"}, {"b", "y"}, {"alpha", "b"}, {"beta", "b"},
             {"Phi", "beta"}};
  r.delta = {{"a", {{}, {"x"}}}, {"b", {{}, {"x"}}},
             {"alpha", {{}, {"a"}}}, {"beta", {{}, {"a"}}},
             {"Phi", {{}, {"alpha"}}}};
  return build(r);
}

// A 3-cell composing a vertical pair into one 2-cell:
// Phi : (alpha ; beta) => xi.
inline Ofs comp3() {
  RawStructure r;
  r.faces = {{"x", "y"}, {"a", "b", "c"}, {"alpha", "beta", "xi"}, {"Phi"}};
  r.gamma = {{"a", "y"}, {"b", "y"}, {"c", "y"},
             {"alpha", "b"}, {"beta", "c"}, {"xi", "c"},
             {"Phi", "xi"}};
  r.delta = {{"a", {{}, {"x"}}}, {"b", {{}, {"x"}}}, {"c", {{}, {"x"}}},
             {"alpha", {{}, {"a"}}}, {"beta", {{}, {"b"}}},
             {"xi", {{}, {"a"}}},
             {"Phi", {{}, {"alpha", "beta"}}}};
  r.tilde = {{"alpha", "beta"}};
  return build(r);
}

// Every valid fixture, for corpus-wide properties.
inline std::vector<std::pair<std::string, Ofs>> corpus() {
  return {
      {"o0", o0()},         {"i1", i1()},        {"path2", path2()},
      {"path3", path3()},   {"g2_0", g2(0)},     {"g2_1", g2(1)},
      {"g2_2", g2(2)},      {"g2_3", g2(3)},     {"vcomp", vcomp()},
      {"grid2x2", grid2x2()}, {"sfig", sfig(false)}, {"sfig_flipped", sfig(true)},
      {"globe3", globe3()}, {"comp3", comp3()},
  };
}

}  // namespace fixtures

#endif
