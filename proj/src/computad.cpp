#include "ofs/computad.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "ofs/axioms.hpp"
#include "ofs/canonical.hpp"

namespace ofs {

namespace {

Cell from_gt(int level, const GtCell& g) {
  return Cell{level, g.shape, g.map, g.key};
}

GtCell to_gt(const Cell& c) { return GtCell{c.shape, c.map, c.key}; }

Morphism iso_as_morphism(const Ofs& s, const Ofs& t, const LevelPerm& perm) {
  Morphism m{s, t, {}};
  m.map.resize(s.dim() + 1);
  for (int k = 0; k <= s.dim(); ++k) {
    m.map[k].resize(s.count(k));
    for (int i = 0; i < s.count(k); ++i) m.map[k][i] = perm[k][i];
  }
  return m;
}

}  // namespace

Cell make_computad_cell(int level, const Ofs& shape,
                        const Morphism& into_ambient) {
  return from_gt(level, make_cell(shape, into_ambient));
}

Cell cell_domain(const Cell& a, int k) {
  if (k > a.level)
    throw OfsError("InvalidInput", "boundary level exceeds the cell level");
  return from_gt(k, cell_boundary(to_gt(a), k, true));
}

Cell cell_codomain(const Cell& a, int k) {
  if (k > a.level)
    throw OfsError("InvalidInput", "boundary level exceeds the cell level");
  return from_gt(k, cell_boundary(to_gt(a), k, false));
}

Cell compose_cells(const Cell& a, const Cell& b, int k, Dim0Linearity mode) {
  return from_gt(std::max(a.level, b.level),
                 cell_compose(to_gt(a), to_gt(b), k, mode));
}

bool is_indet(const Cell& a) {
  return a.shape.dim() == a.level && is_principal(a.shape);
}

std::vector<Cell> cells(const Ofs& s, int n, const Budget& budget) {
  std::map<std::string, Cell> pool;
  auto admit = [&](Cell c) {
    if (c.shape.total_faces() > budget.max_object_faces)
      throw OfsError("BudgetExceeded",
                     "cell shape outgrew the face cap (the generating "
                     "structure admits unbounded pastings)");
    bool fresh = pool.emplace(c.key, std::move(c)).second;
    if (static_cast<int>(pool.size()) > budget.max_cells_per_level)
      throw OfsError("BudgetExceeded", "cell cap exceeded");
    return fresh;
  };

  std::vector<Cell> work;
  for (int k = 0; k <= std::min(n, s.dim()); ++k)
    for (int i = 0; i < s.count(k); ++i) {
      PrincipalCover pc = principal_cover(s, FaceId{k, i});
      // A loop face has no cell of its own: its downward closure is not a
      // valid shape (the loop is unfilled there).  Its cell content enters
      // through the faces that fill it.
      if (!validate(pc.shape).failures.empty()) continue;
      Cell c = make_computad_cell(n, pc.shape, pc.map);
      if (admit(c)) work.push_back(std::move(c));
    }

  // Close under composition: every new cell is paired with everything seen
  // so far, in both orders, along every composable level below n.
  for (size_t next = 0; next < work.size(); ++next) {
    Cell cur = work[next];  // copy: work may reallocate below
    std::vector<Cell> seen;
    seen.reserve(pool.size());
    for (const auto& [_, c] : pool) seen.push_back(c);
    auto try_pair = [&](const Cell& a, const Cell& b, int k) {
      if (k > std::min(a.shape.dim(), b.shape.dim())) return;
      if (cell_codomain(a, k).key != cell_domain(b, k).key) return;
      Cell c = compose_cells(a, b, k);
      if (admit(c)) work.push_back(std::move(c));
    };
    for (const Cell& other : seen)
      for (int k = 0; k < n; ++k) {
        try_pair(cur, other, k);
        try_pair(other, cur, k);
      }
  }

  std::vector<Cell> out;
  out.reserve(pool.size());
  for (auto& [_, c] : pool) out.push_back(std::move(c));
  return out;
}

LawReport check_cut_independence(const Cell& a, Dim0Linearity mode) {
  LawReport rep;
  // Recursive evaluation: split the shape along a cut, evaluate the two
  // restricted cells, compose them back.  Every cut must yield the
  // original cell.
  auto eval = [&](auto&& self, const Cell& c) -> Cell {
    std::vector<Cut> cuts = enumerate_cuts(c.shape, mode);
    for (const Cut& cut : cuts) {
      auto [down, up] = split(c.shape, cut, mode);
      TensorResult t = tensor(down, up, cut.level, mode);
      std::optional<LevelPerm> phi = find_iso(t.object, c.shape);
      if (!phi) {
        rep.failures.push_back("tensor of the cut parts is not iso to the "
                               "shape at level " +
                               std::to_string(cut.level));
        continue;
      }
      Morphism glue =
          compose(iso_as_morphism(t.object, c.shape, *phi), c.map);
      Cell low = self(self, make_computad_cell(c.level, down,
                                               compose(t.kappa1, glue)));
      Cell high = self(self, make_computad_cell(c.level, up,
                                                compose(t.kappa2, glue)));
      Cell back = compose_cells(low, high, cut.level, mode);
      if (back.key != c.key)
        rep.failures.push_back(
            "evaluation along the level-" + std::to_string(cut.level) +
            " cut at " + c.shape.names[cut.witness.level][cut.witness.index] +
            " differs from the cell");
    }
    return c;
  };
  eval(eval, a);
  return rep;
}

}  // namespace ofs
