#include "ofs/morphism.hpp"

#include <algorithm>
#include <set>

namespace ofs {

namespace {

std::string face_name(const Ofs& s, int k, int i) { return s.names[k][i]; }

bool delta_compatible(const Ofs& s, const Ofs& t, const Morphism& f, int k,
                      int a) {
  const Delta& ds = s.delta[k][a];
  const Delta& dt = t.delta[k][f.map[k][a]];
  if (ds.empty_dom != dt.empty_dom) return false;
  if (ds.empty_dom)
    return k < 2 || dt.base == f.map[k - 2][ds.base];
  // the restriction of f to delta(a) must biject onto delta(f(a))
  std::set<int> image;
  for (int x : ds.faces) image.insert(f.map[k - 1][x]);
  if (image.size() != ds.faces.size()) return false;
  return std::vector<int>(image.begin(), image.end()) == dt.faces;
}

bool local_fiber_ok(const Ofs& s, const Ofs& t, const Morphism& f, int k,
                    int a) {
  // order-isomorphism (dot_delta(a), tilde) -> (dot_delta(f(a)), tilde)
  const auto& ds = s.delta[k][a];
  if (ds.empty_dom) return true;
  for (int x : ds.faces)
    for (int y : ds.faces) {
      if (x == y) continue;
      if (s.tilde_has(k - 1, x, y) !=
          t.tilde_has(k - 1, f.map[k - 1][x], f.map[k - 1][y]))
        return false;
    }
  return true;
}

}  // namespace

Morphism identity(const Ofs& s) {
  Morphism f{s, s, {}};
  f.map.resize(s.dim() + 1);
  for (int k = 0; k <= s.dim(); ++k) {
    f.map[k].resize(s.count(k));
    for (int i = 0; i < s.count(k); ++i) f.map[k][i] = i;
  }
  return f;
}

MorphCheck check_morphism(const Morphism& f, MorphKind kind) {
  const Ofs& s = f.source;
  const Ofs& t = f.target;
  if (s.dim() > t.dim())
    return {false, "source dimension exceeds target dimension"};
  if (static_cast<int>(f.map.size()) != s.dim() + 1)
    return {false, "assignment missing levels"};
  for (int k = 0; k <= s.dim(); ++k) {
    if (static_cast<int>(f.map[k].size()) != s.count(k))
      return {false, "assignment not total at level " + std::to_string(k)};
    for (int i = 0; i < s.count(k); ++i)
      if (f.map[k][i] < 0 || f.map[k][i] >= t.count(k))
        return {false, "image out of range for " + face_name(s, k, i)};
  }
  for (int k = 1; k <= s.dim(); ++k)
    for (int a = 0; a < s.count(k); ++a) {
      if (t.gamma[k][f.map[k][a]] != f.map[k - 1][s.gamma[k][a]])
        return {false, "gamma not preserved at " + face_name(s, k, a)};
      if (!delta_compatible(s, t, f, k, a))
        return {false, "delta not preserved at " + face_name(s, k, a)};
    }
  if (kind == MorphKind::Monotone || kind == MorphKind::Iso) {
    for (int k = 0; k <= s.dim(); ++k)
      for (auto [a, b] : s.tilde[k])
        if (!t.tilde_has(k, f.map[k][a], f.map[k][b]))
          return {false, "tilde not preserved at (" + face_name(s, k, a) +
                             ", " + face_name(s, k, b) + ")"};
  }
  if (kind == MorphKind::Local || kind == MorphKind::Iso) {
    for (int k = 2; k <= s.dim(); ++k)
      for (int a = 0; a < s.count(k); ++a)
        if (!local_fiber_ok(s, t, f, k, a))
          return {false, "domain fiber order not preserved at " +
                             face_name(s, k, a)};
  }
  if (kind == MorphKind::Iso) {
    if (s.dim() != t.dim()) return {false, "iso must preserve dimension"};
    for (int k = 0; k <= s.dim(); ++k) {
      if (s.count(k) != t.count(k))
        return {false, "iso requires equal face counts"};
      std::set<int> image(f.map[k].begin(), f.map[k].end());
      if (static_cast<int>(image.size()) != s.count(k))
        return {false, "iso must be level-wise bijective"};
      // tilde must also be reflected, so the inverse is monotone too
      for (int a = 0; a < s.count(k); ++a)
        for (int b = 0; b < s.count(k); ++b)
          if (t.tilde_has(k, f.map[k][a], f.map[k][b]) &&
              !s.tilde_has(k, a, b))
            return {false, "tilde not reflected"};
    }
  }
  return {true, ""};
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!(f.target == g.source))
    throw OfsError("NotComposable", "target of first differs from source of second");
  Morphism h{f.source, g.target, {}};
  h.map.resize(f.map.size());
  for (size_t k = 0; k < f.map.size(); ++k) {
    h.map[k].resize(f.map[k].size());
    for (size_t i = 0; i < f.map[k].size(); ++i)
      h.map[k][i] = g.map[k][f.map[k][i]];
  }
  return h;
}

namespace {

struct HomSearch {
  const Ofs& s;
  const Ofs& t;
  MorphKind kind;
  Morphism f;
  std::vector<Morphism>* out;

  bool admissible(int k, int a) const {
    if (k == 0) return true;
    if (t.gamma[k][f.map[k][a]] != f.map[k - 1][s.gamma[k][a]]) return false;
    if (!delta_compatible(s, t, f, k, a)) return false;
    if ((kind == MorphKind::Local || kind == MorphKind::Iso) && k >= 2 &&
        !local_fiber_ok(s, t, f, k, a))
      return false;
    return true;
  }

  void rec(int k, int i) {
    if (k > s.dim()) {
      if (check_morphism(f, kind).ok) out->push_back(f);
      return;
    }
    if (i == s.count(k)) {
      rec(k + 1, 0);
      return;
    }
    for (int img = 0; img < t.count(k); ++img) {
      f.map[k][i] = img;
      if (admissible(k, i)) rec(k, i + 1);
    }
    f.map[k][i] = -1;
  }
};

}  // namespace

std::vector<Morphism> enumerate_homs(const Ofs& s, const Ofs& t,
                                     MorphKind kind) {
  std::vector<Morphism> out;
  if (s.dim() > t.dim()) return out;
  Morphism f{s, t, {}};
  f.map.resize(s.dim() + 1);
  for (int k = 0; k <= s.dim(); ++k) f.map[k].assign(s.count(k), -1);
  HomSearch search{s, t, kind, f, &out};
  search.rec(0, 0);
  return out;
}

PrincipalCover principal_cover(const Ofs& s, FaceId a) {
  int d = a.level;
  // downward closure of a under gamma, delta members and empty-face bases
  std::vector<std::set<int>> keep(d + 1);
  keep[d].insert(a.index);
  for (int k = d; k >= 1; --k)
    for (int i : keep[k]) {
      keep[k - 1].insert(s.gamma[k][i]);
      const Delta& dl = s.delta[k][i];
      if (dl.empty_dom) {
        if (k >= 2) keep[k - 2].insert(dl.base);
      } else {
        for (int f : dl.faces) keep[k - 1].insert(f);
      }
    }

  std::vector<std::vector<int>> to_new(d + 1);
  Ofs p;
  p.names.resize(d + 1);
  p.gamma.resize(d + 1);
  p.delta.resize(d + 1);
  p.tilde.resize(d + 1);
  Morphism inc;
  inc.map.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    to_new[k].assign(s.count(k), -1);
    for (int i : keep[k]) {
      to_new[k][i] = static_cast<int>(p.names[k].size());
      p.names[k].push_back(s.names[k][i]);
      inc.map[k].push_back(i);
    }
  }
  for (int k = 1; k <= d; ++k) {
    p.gamma[k].resize(p.names[k].size());
    p.delta[k].resize(p.names[k].size());
    for (int i : keep[k]) {
      int ni = to_new[k][i];
      p.gamma[k][ni] = to_new[k - 1][s.gamma[k][i]];
      const Delta& dl = s.delta[k][i];
      Delta nd;
      nd.empty_dom = dl.empty_dom;
      if (dl.empty_dom) {
        nd.base = k >= 2 ? to_new[k - 2][dl.base] : -1;
      } else {
        for (int f : dl.faces) nd.faces.push_back(to_new[k - 1][f]);
      }
      p.delta[k][ni] = nd;
    }
  }
  for (int k = 0; k <= d; ++k)
    for (auto [x, y] : s.tilde[k])
      if (to_new[k][x] >= 0 && to_new[k][y] >= 0)
        p.tilde[k].emplace_back(to_new[k][x], to_new[k][y]);
  p.normalize();

  inc.source = p;
  inc.target = s;
  return {p, FaceId{d, to_new[d][a.index]}, inc};
}

std::vector<PrincipalCover> principal_cocone(const Ofs& s) {
  std::vector<PrincipalCover> out;
  for (int k = 0; k <= s.dim(); ++k)
    for (int i = 0; i < s.count(k); ++i)
      out.push_back(principal_cover(s, {k, i}));
  return out;
}

}  // namespace ofs
