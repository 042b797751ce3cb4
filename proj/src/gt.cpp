#include "ofs/gt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ofs/axioms.hpp"
#include "ofs/canonical.hpp"
#include "ofs/enumerate.hpp"

namespace ofs {

namespace {

// The chain [n]: n+1 vertices, n composable edges (a 1-dimensional face
// structure; the order relation on edges is forced and included).
Ofs chain(int n) {
  RawStructure raw;
  raw.faces.push_back({});
  for (int i = 0; i <= n; ++i) raw.faces[0].push_back("x" + std::to_string(i));
  if (n > 0) {
    raw.faces.push_back({});
    for (int i = 1; i <= n; ++i) {
      std::string a = "a" + std::to_string(i);
      raw.faces[1].push_back(a);
      raw.gamma.push_back({a, "x" + std::to_string(i)});
      raw.delta.push_back({a, RawDelta{{}, {"x" + std::to_string(i - 1)}}});
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        raw.tilde.push_back({"a" + std::to_string(i), "a" + std::to_string(j)});
  }
  return build(raw);
}

std::string encode_map(const Morphism& m) {
  std::string out;
  for (const auto& level : m.map) {
    out += '[';
    for (int v : level) out += std::to_string(v) + ",";
    out += ']';
  }
  return out;
}

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

GtInstance delta0_instance() {
  GtInstance inst;
  inst.name = "delta0";
  inst.model_kind = MorphKind::Hypergraph;
  inst.objects = [](int dim, int max_faces) {
    std::vector<Ofs> out;
    if (max_faces >= 1) out.push_back(canonical_form(chain(0)).structure);
    if (dim >= 1)
      for (int n = 1; 2 * n + 1 <= max_faces; ++n)
        out.push_back(canonical_form(chain(n)).structure);
    return out;
  };
  return inst;
}

GtInstance ofs_instance() {
  GtInstance inst;
  inst.name = "ofs";
  inst.model_kind = MorphKind::Local;
  inst.objects = [](int dim, int max_faces) {
    return enumerate_valid(dim, max_faces).all();
  };
  return inst;
}

LawReport check_gt_laws(const GtInstance& inst, int dim, int max_faces,
                        int max_tuples) {
  LawReport rep;
  std::vector<Ofs> objs = inst.objects(dim, max_faces);
  auto note = [&](const LawReport& sub, const std::string& where) {
    for (const std::string& f : sub.failures)
      rep.failures.push_back(inst.name + " " + where + ": " + f);
  };
  for (const Ofs& s : objs) {
    note(check_dc_laws(s), canonical_key(s));
    note(check_unit_laws(s), canonical_key(s));
  }
  // composable pairs: domains/codomains of tensors
  struct Pair {
    const Ofs *a, *b;
    int k;
  };
  std::vector<Pair> pairs;
  for (const Ofs& a : objs)
    for (const Ofs& b : objs)
      for (int k = 0; k <= std::min(a.dim(), b.dim()); ++k) {
        if (static_cast<int>(pairs.size()) >= max_tuples) break;
        Interface c = k_codomain(a, k), d = k_domain(b, k);
        if (find_iso(c.structure, d.structure)) pairs.push_back({&a, &b, k});
      }
  for (const Pair& p : pairs)
    note(check_dc_of_tensor(*p.a, *p.b, p.k),
         "tensor pair at " + std::to_string(p.k));
  int triples = 0;
  for (const Pair& p : pairs) {
    for (const Pair& q : pairs) {
      if (q.k != p.k || q.a != p.b) continue;
      if (++triples > max_tuples) break;
      note(check_associativity(*p.a, *p.b, *q.b, p.k),
           "triple at " + std::to_string(p.k));
    }
    if (triples > max_tuples) break;
  }
  return rep;
}

// ---------------------------------------------------------------------------

int OmegaCategory::total() const {
  int n = 0;
  for (const auto& level : cells) n += static_cast<int>(level.size());
  return n;
}

GtCell make_cell(const Ofs& shape, const Morphism& into_ambient) {
  CanonicalForm cf = canonical_form(shape);
  Morphism m{cf.structure, into_ambient.target, {}};
  m.map.resize(cf.structure.dim() + 1);
  for (int k = 0; k <= cf.structure.dim(); ++k) {
    m.map[k].resize(cf.structure.count(k));
    for (int i = 0; i < shape.count(k); ++i)
      m.map[k][cf.perm[k][i]] = into_ambient.map[k][i];
  }
  return GtCell{cf.structure, m, cf.key + "|" + encode_map(m)};
}

OmegaCategory omega_category_of(const GtInstance& inst, const Ofs& ambient,
                                int n_max, const Budget& budget) {
  OmegaCategory out;
  out.ambient = ambient;
  out.kind = inst.model_kind;
  out.cells.assign(n_max + 1, {});
  for (const Ofs& shape : inst.objects(n_max, budget.max_object_faces)) {
    std::vector<Morphism> homs = enumerate_homs(shape, ambient, inst.model_kind);
    if (homs.empty()) continue;
    // Shapes at the face cap that still admit maps leave the enumeration
    // open-ended: larger shapes could admit maps too.
    if (shape.total_faces() + 2 > budget.max_object_faces)
      throw OfsError("BudgetExceeded",
                     "shapes at the face budget still admit maps into the "
                     "ambient object");
    auto& level = out.cells[shape.dim()];
    for (const Morphism& h : homs) {
      level.push_back(make_cell(shape, h));
      if (static_cast<int>(level.size()) > budget.max_cells_per_level)
        throw OfsError("BudgetExceeded", "cell cap exceeded at dimension " +
                                             std::to_string(shape.dim()));
    }
  }
  for (auto& level : out.cells)
    std::sort(level.begin(), level.end(),
              [](const GtCell& a, const GtCell& b) { return a.key < b.key; });
  return out;
}

GtCell cell_boundary(const GtCell& a, int k, bool domain) {
  Interface i =
      domain ? k_domain(a.shape, k) : k_codomain(a.shape, k);
  return make_cell(i.structure, compose(i.inclusion, a.map));
}

GtCell cell_compose(const GtCell& a, const GtCell& b, int k,
                    Dim0Linearity mode) {
  if (cell_boundary(a, k, false).key != cell_boundary(b, k, true).key)
    throw OfsError("NotComposable",
                   "k-codomain of the first cell differs from the k-domain "
                   "of the second");
  TensorResult t = tensor(a.shape, b.shape, k, mode);
  Morphism w{t.object, a.map.target, {}};
  w.map.resize(t.object.dim() + 1);
  for (int j = 0; j <= t.object.dim(); ++j)
    w.map[j].assign(t.object.count(j), -1);
  auto install = [&](const Morphism& kappa, const Morphism& cell) {
    for (size_t j = 0; j < kappa.map.size(); ++j)
      for (size_t i = 0; i < kappa.map[j].size(); ++i) {
        int& slot = w.map[j][kappa.map[j][i]];
        int want = cell.map[j][i];
        if (slot >= 0 && slot != want) return false;
        slot = want;
      }
    return true;
  };
  if (!install(t.kappa1, a.map) || !install(t.kappa2, b.map))
    throw OfsError("NotComposable", "cells disagree on the glued interface");
  if (!check_morphism(w, MorphKind::Hypergraph).ok)
    throw OfsError("NotComposable", "no mediating map out of the tensor");
  return make_cell(t.object, w);
}

LawReport check_omega_laws(const OmegaCategory& oc, int max_tuples,
                           Dim0Linearity mode) {
  LawReport rep;
  std::vector<const GtCell*> all;
  for (const auto& level : oc.cells)
    for (const GtCell& c : level) all.push_back(&c);

  // boundary composition equations: the k-boundary of an l-boundary is the
  // k-boundary, for k < l
  for (const GtCell* a : all) {
    int d = a->shape.dim();
    for (int l = 0; l <= d; ++l)
      for (int k = 0; k < l; ++k)
        for (bool outer : {false, true})
          for (bool inner : {false, true}) {
            GtCell lhs = cell_boundary(cell_boundary(*a, l, inner), k, outer);
            GtCell rhs = cell_boundary(*a, k, outer);
            if (lhs.key != rhs.key)
              rep.failures.push_back("boundary composition fails on " +
                                     a->key);
          }
  }

  // composable pairs: boundary compatibility of the composite
  struct Pair {
    const GtCell *a, *b;
    int k;
    GtCell ab;
  };
  std::vector<Pair> pairs;
  for (const GtCell* a : all) {
    for (const GtCell* b : all) {
      for (int k = 0; k < std::min(a->shape.dim(), b->shape.dim()); ++k) {
        if (static_cast<int>(pairs.size()) >= max_tuples) break;
        if (cell_boundary(*a, k, false).key != cell_boundary(*b, k, true).key)
          continue;
        try {
          GtCell ab = cell_compose(*a, *b, k, mode);
          if (cell_boundary(ab, k, true).key !=
              cell_boundary(*a, k, true).key)
            rep.failures.push_back("composite domain mismatch on " + a->key);
          if (cell_boundary(ab, k, false).key !=
              cell_boundary(*b, k, false).key)
            rep.failures.push_back("composite codomain mismatch on " + b->key);
          pairs.push_back({a, b, k, std::move(ab)});
        } catch (const OfsError& e) {
          rep.failures.push_back(std::string("composition failed: ") +
                                 e.what());
        }
      }
    }
  }

  // associativity over composable triples
  int triples = 0;
  for (const Pair& p : pairs) {
    for (const Pair& q : pairs) {
      if (q.k != p.k || q.a->key != p.b->key) continue;
      if (++triples > max_tuples) break;
      try {
        GtCell left = cell_compose(p.ab, *q.b, p.k, mode);
        GtCell right = cell_compose(*p.a, q.ab, p.k, mode);
        if (left.key != right.key)
          rep.failures.push_back("associativity fails at level " +
                                 std::to_string(p.k) + " on " + p.a->key);
      } catch (const OfsError& e) {
        rep.failures.push_back(std::string("associative composition failed: ") +
                               e.what());
      }
    }
    if (triples > max_tuples) break;
  }
  return rep;
}

long long free_category_cell_count(const Ofs& graph, int max_len) {
  if (graph.dim() > 1)
    throw OfsError("InvalidInput", "free-category oracle needs a graph");
  int n = graph.count(0);
  long long total = n;  // identities
  // step[u][v] = number of edges u -> v
  std::vector<std::vector<long long>> step(n, std::vector<long long>(n, 0));
  for (int e = 0; e < graph.count(1); ++e)
    step[graph.delta[1][e].faces[0]][graph.gamma[1][e]] += 1;
  auto cur = step;
  for (int len = 1; len <= max_len; ++len) {
    long long layer = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) layer += cur[u][v];
    if (layer == 0) return total;
    total += layer;
    // next length: one more edge
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int m = 0; m < n; ++m) {
        if (cur[u][m] == 0) continue;
        for (int v = 0; v < n; ++v) next[u][v] += cur[u][m] * step[m][v];
      }
    cur = next;
  }
  throw OfsError("BudgetExceeded", "paths keep growing past the length cap");
}

// ---------------------------------------------------------------------------

LawReport check_is_model(const FiniteModel& m,
                         const std::vector<TensorResult>& squares) {
  LawReport rep;
  std::function<std::vector<Morphism>(const Ofs&)> eval = m.eval;
  if (!eval)
    eval = [&m](const Ofs& s) { return enumerate_homs(s, m.ambient, m.kind); };
  int idx = 0;
  for (const TensorResult& sq : squares) {
    std::string where = "square " + std::to_string(idx++) + " at level " +
                        std::to_string(sq.level);
    const Ofs& s = sq.kappa1.source;
    const Ofs& sp = sq.kappa2.source;
    Interface c = k_codomain(s, sq.level);
    Interface d = k_domain(sp, sq.level);
    auto perm = find_iso(c.structure, d.structure);
    if (!perm) {
      rep.failures.push_back(where + ": interface mismatch");
      continue;
    }
    Morphism iota = iso_as_morphism(c.structure, d.structure, *perm);
    std::vector<Morphism> ms = eval(s), msp = eval(sp), mt = eval(sq.object);
    // the agreeing pairs (the pullback the square must map onto)
    std::set<std::pair<std::string, std::string>> agreeing;
    for (const Morphism& u : ms) {
      Morphism u_res = compose(c.inclusion, u);
      for (const Morphism& v : msp) {
        Morphism v_res = compose(iota, compose(d.inclusion, v));
        if (u_res == v_res) agreeing.insert({encode_map(u), encode_map(v)});
      }
    }
    std::set<std::pair<std::string, std::string>> image;
    for (const Morphism& t : mt) {
      auto pr = std::make_pair(encode_map(compose(sq.kappa1, t)),
                               encode_map(compose(sq.kappa2, t)));
      if (!image.insert(pr).second) {
        rep.failures.push_back(where + ": evaluation is not injective");
        break;
      }
    }
    if (image != agreeing)
      rep.failures.push_back(where +
                             ": image differs from the agreeing pairs");
  }
  return rep;
}

}  // namespace ofs
