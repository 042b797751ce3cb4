#include "ofs/axioms.hpp"

#include <algorithm>

namespace ofs {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Globularity: return "globularity";
    case Axiom::LocalDiscreteness: return "local-discreteness";
    case Axiom::Strictness: return "strictness";
    case Axiom::Disjointness: return "disjointness";
    case Axiom::PencilLinearity: return "pencil-linearity";
    case Axiom::LoopFilling: return "loop-filling";
  }
  return "?";
}

bool AxiomReport::axiom_ok(Axiom a) const {
  for (const auto& w : failures)
    if (w.axiom == a) return false;
  return true;
}

namespace {

std::string fname(const Ofs& s, FaceId f) { return s.names[f.level][f.index]; }

// γ applied elementwise to a delta (γ(1_u) = u).
ExtSet gamma_of_delta(const Ofs& s, int k, int i) {
  const Delta& d = s.delta[k][i];
  ExtSet out;
  if (d.empty_dom) {
    out.push_back(real_ext(d.base));
  } else {
    for (int f : d.faces) ext_insert(out, real_ext(s.gamma[k - 1][f]));
  }
  return out;
}

// δ applied elementwise to a delta (δ(1_u) = u).
ExtSet delta_of_delta(const Ofs& s, int k, int i) {
  const Delta& d = s.delta[k][i];
  ExtSet out;
  if (d.empty_dom) {
    out.push_back(real_ext(d.base));
  } else {
    for (int f : d.faces)
      for (Ext e : delta_ext(s, k - 1, f)) ext_insert(out, e);
  }
  return out;
}

ExtSet delta_of_set(const Ofs& s, int k, const std::vector<int>& faces) {
  ExtSet out;
  for (int f : faces)
    for (Ext e : delta_ext(s, k, f)) ext_insert(out, e);
  return out;
}

ExtSet gamma_of_set(const Ofs& s, int k, const std::vector<int>& faces) {
  ExtSet out;
  for (int f : faces) ext_insert(out, real_ext(s.gamma[k][f]));
  return out;
}

// Clause predicates.  Each returns true when the clause holds for the
// given faces; validate() scans all instances, recheck() re-runs one.

bool glob_gamma(const Ofs& s, int k, int a) {
  // {γγ(a)} = γδ(a) − δ δ̇^{-λ}(a)
  ExtSet lhs{real_ext(s.gamma[k - 1][s.gamma[k][a]])};
  ExtSet rhs = ext_minus(gamma_of_delta(s, k, a),
                         delta_of_set(s, k - 1, dot_delta_nonloop(s, k, a)));
  return lhs == rhs;
}

bool glob_delta(const Ofs& s, int k, int a) {
  // δγ(a) ≡₁ δδ(a) − γ δ̇^{-λ}(a)
  ExtSet lhs = delta_ext(s, k - 1, s.gamma[k][a]);
  ExtSet rhs = ext_minus(delta_of_delta(s, k, a),
                         gamma_of_set(s, k - 1, dot_delta_nonloop(s, k, a)));
  return one_equal(s, k - 2, lhs, rhs);
}

bool local_discrete(const Ofs& s, const DerivedRelations& r, int k, int a,
                    int x, int y) {
  (void)s;
  (void)a;
  return !r.perp_plus(k - 1, x, y);
}

bool tilde_transitive(const Ofs& s, int k, int a, int b, int c) {
  return !(s.tilde_has(k, a, b) && s.tilde_has(k, b, c)) || s.tilde_has(k, a, c);
}

bool dim0_linear(const Ofs& s, const DerivedRelations& r, Dim0Linearity mode,
                 int a, int b) {
  if (r.perp_plus(0, a, b)) return true;
  if (mode == Dim0Linearity::Strict) return false;
  // Combined: a and b must be comparable in the transitive closure of the
  // union of the plus order and tilde on 0-faces.
  int n = s.count(0);
  std::vector<char> rel(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.plus(0, i, j) || s.tilde_has(0, i, j)) rel[i * n + j] = 1;
  auto cl = transitive_closure_dfs(rel, n);
  return cl[a * n + b] || cl[b * n + a];
}

bool disjoint_orders(const Ofs& s, const DerivedRelations& r, int k, int a, int b) {
  bool perp_tilde = s.tilde_has(k, a, b) || s.tilde_has(k, b, a);
  return !(perp_tilde && r.perp_plus(k, a, b));
}

bool tilde_implies_minus(const Ofs& s, const DerivedRelations& r, int k, int a,
                         int b) {
  return !s.tilde_has(k, a, b) || r.minus(k, a, b);
}

bool theta_disjoint_tilde(const Ofs& s, const DerivedRelations& r, int k, int a,
                          int b) {
  if (!ext_intersect(theta(s, k, a), theta(s, k, b)).empty()) return true;
  return s.tilde_has(k, a, b) == r.minus(k, a, b);
}

bool pencil_theta(const Ofs& s, const DerivedRelations& r, int k, int a, int b) {
  std::vector<int> ta = dot_theta(s, k, a), tb = dot_theta(s, k, b);
  std::vector<int> common;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                        std::back_inserter(common));
  if (common.empty()) return true;
  return s.tilde_has(k, a, b) || s.tilde_has(k, b, a) || r.perp_plus(k, a, b);
}

bool pencil_empty(const Ofs& s, const DerivedRelations& r, int k, int a, int b) {
  if (!s.delta[k][a].empty_dom) return true;
  int gg = s.gamma[k - 1][s.gamma[k][a]];
  std::vector<int> in = iota(s, k, b);
  if (!std::binary_search(in.begin(), in.end(), gg)) return true;
  return s.tilde_has(k, a, b) || r.plus(k, a, b);
}

bool loop_filled(const Ofs& s, int k, int a) {
  if (!is_loop(s, k, a)) return true;
  if (s.relaxed_top && k == s.dim()) return true;
  for (int up = 0; up < s.count(k + 1); ++up)
    if (!is_loop(s, k + 1, up) && s.gamma[k + 1][up] == a) return true;
  return false;
}

void fail(AxiomReport& rep, const Ofs& s, Axiom ax, std::string clause,
          std::vector<FaceId> faces, const std::string& what) {
  std::string names;
  for (FaceId f : faces) {
    if (!names.empty()) names += ", ";
    names += fname(s, f);
  }
  rep.failures.push_back(
      {ax, std::move(clause), std::move(faces), what + " [" + names + "]"});
}

}  // namespace

namespace detail {
bool clause_glob_gamma(const Ofs& s, int k, int a) {
  return glob_gamma(s, k, a);
}
bool clause_glob_delta(const Ofs& s, int k, int a) {
  return glob_delta(s, k, a);
}
bool clause_loop_filled(const Ofs& s, int k, int a) {
  return loop_filled(s, k, a);
}
bool clause_local_discrete(const Ofs& s, const DerivedRelations& r, int k,
                           int a, int x, int y) {
  return local_discrete(s, r, k, a, x, y);
}
bool clause_dim0_linear(const Ofs& s, const DerivedRelations& r,
                        Dim0Linearity mode, int a, int b) {
  return dim0_linear(s, r, mode, a, b);
}
}  // namespace detail

AxiomReport validate(const Ofs& s, Dim0Linearity mode) {
  AxiomReport rep;
  DerivedRelations r = derive(s);
  int d = s.dim();

  for (int k = 2; k <= d; ++k)
    for (int a = 0; a < s.count(k); ++a) {
      if (!glob_gamma(s, k, a))
        fail(rep, s, Axiom::Globularity, "gamma-gamma", {{k, a}},
             "codomain of codomain mismatch");
      if (!glob_delta(s, k, a))
        fail(rep, s, Axiom::Globularity, "delta-gamma", {{k, a}},
             "domain of codomain mismatch");
    }

  for (int k = 2; k <= d; ++k)
    for (int a = 0; a < s.count(k); ++a) {
      const auto dd = dot_delta(s, k, a);
      for (size_t i = 0; i < dd.size(); ++i)
        for (size_t j = i + 1; j < dd.size(); ++j)
          if (!local_discrete(s, r, k, a, dd[i], dd[j]))
            fail(rep, s, Axiom::LocalDiscreteness, "domain-pair",
                 {{k, a}, {k - 1, dd[i]}, {k - 1, dd[j]}},
                 "domain faces comparable under the plus order");
    }

  for (int k = 0; k <= d; ++k) {
    int n = s.count(k);
    for (int a = 0; a < n; ++a) {
      if (r.plus(k, a, a))
        fail(rep, s, Axiom::Strictness, "plus-irreflexive", {{k, a}},
             "face below itself in the plus order");
      if (s.tilde_has(k, a, a))
        fail(rep, s, Axiom::Strictness, "tilde-irreflexive", {{k, a}},
             "face below itself in tilde");
    }
    for (const auto& [a, b] : s.tilde[k])
      for (int c = 0; c < n; ++c)
        if (!tilde_transitive(s, k, a, b, c))
          fail(rep, s, Axiom::Strictness, "tilde-transitive",
               {{k, a}, {k, b}, {k, c}}, "tilde not transitively closed");
  }
  for (int a = 0; a < s.count(0); ++a)
    for (int b = a + 1; b < s.count(0); ++b)
      if (!dim0_linear(s, r, mode, a, b))
        fail(rep, s, Axiom::Strictness, "dim0-linear", {{0, a}, {0, b}},
             "incomparable 0-faces");

  for (int k = 0; k <= d; ++k) {
    int n = s.count(k);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        if (a < b && !disjoint_orders(s, r, k, a, b))
          fail(rep, s, Axiom::Disjointness, "orders-disjoint", {{k, a}, {k, b}},
               "pair comparable in both tilde and the plus order");
        if (k >= 1) {
          if (!tilde_implies_minus(s, r, k, a, b))
            fail(rep, s, Axiom::Disjointness, "tilde-implies-minus",
                 {{k, a}, {k, b}}, "tilde without the minus order");
          if (a < b && !theta_disjoint_tilde(s, r, k, a, b))
            fail(rep, s, Axiom::Disjointness, "theta-disjoint",
                 {{k, a}, {k, b}},
                 "disjoint boundaries but tilde and minus disagree");
          if (a < b && !theta_disjoint_tilde(s, r, k, b, a))
            fail(rep, s, Axiom::Disjointness, "theta-disjoint",
                 {{k, b}, {k, a}},
                 "disjoint boundaries but tilde and minus disagree");
        }
      }
  }

  for (int k = 1; k <= d; ++k) {
    int n = s.count(k);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        if (a < b && !pencil_theta(s, r, k, a, b))
          fail(rep, s, Axiom::PencilLinearity, "boundary-pencil",
               {{k, a}, {k, b}}, "shared boundary face but incomparable pair");
        if (k >= 2 && !pencil_empty(s, r, k, a, b))
          fail(rep, s, Axiom::PencilLinearity, "empty-domain",
               {{k, a}, {k, b}},
               "empty-domain face sits inside another but is not below it");
      }
  }

  for (int k = 0; k <= d; ++k)
    for (int a = 0; a < s.count(k); ++a)
      if (!loop_filled(s, k, a))
        fail(rep, s, Axiom::LoopFilling, "unfilled-loop", {{k, a}},
             "loop is not the codomain of any non-loop face");

  return rep;
}

bool recheck(const Ofs& s, const AxiomWitness& w, Dim0Linearity mode) {
  DerivedRelations r = derive(s);
  const auto& f = w.faces;
  auto lvl = [&](size_t i) { return f[i].level; };
  auto idx = [&](size_t i) { return f[i].index; };
  if (w.clause == "gamma-gamma") return glob_gamma(s, lvl(0), idx(0));
  if (w.clause == "delta-gamma") return glob_delta(s, lvl(0), idx(0));
  if (w.clause == "domain-pair")
    return local_discrete(s, r, lvl(0), idx(0), idx(1), idx(2));
  if (w.clause == "plus-irreflexive") return !r.plus(lvl(0), idx(0), idx(0));
  if (w.clause == "tilde-irreflexive")
    return !s.tilde_has(lvl(0), idx(0), idx(0));
  if (w.clause == "tilde-transitive")
    return tilde_transitive(s, lvl(0), idx(0), idx(1), idx(2));
  if (w.clause == "dim0-linear") return dim0_linear(s, r, mode, idx(0), idx(1));
  if (w.clause == "orders-disjoint")
    return disjoint_orders(s, r, lvl(0), idx(0), idx(1));
  if (w.clause == "tilde-implies-minus")
    return tilde_implies_minus(s, r, lvl(0), idx(0), idx(1));
  if (w.clause == "theta-disjoint")
    return theta_disjoint_tilde(s, r, lvl(0), idx(0), idx(1));
  if (w.clause == "boundary-pencil")
    return pencil_theta(s, r, lvl(0), idx(0), idx(1));
  if (w.clause == "empty-domain")
    return pencil_empty(s, r, lvl(0), idx(0), idx(1));
  if (w.clause == "unfilled-loop") return loop_filled(s, lvl(0), idx(0));
  throw OfsError("UnknownClause", w.clause);
}

}  // namespace ofs
