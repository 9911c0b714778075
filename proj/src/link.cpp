// SPDX-License-Identifier: Apache-2.0
#include "germ/link.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "json.hpp"

namespace germ {

IVec ivec_cross(const IVec& a, const IVec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

Int ivec_dot(const IVec& a, const IVec& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

IVec ivec_neg(const IVec& a) { return {-a.x, -a.y, -a.z}; }

bool ivec_zero(const IVec& a) {
  return sgn(a.x) == 0 && sgn(a.y) == 0 && sgn(a.z) == 0;
}

IVec ivec_primitive(const IVec& a) {
  Int g = gcd(gcd(abs(a.x), abs(a.y)), abs(a.z));
  if (sgn(g) == 0) throw Error(ErrorKind::Internal, "zero direction vector");
  return {a.x / g, a.y / g, a.z / g};
}

namespace {

IVec ivec_add(const IVec& a, const IVec& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

IVec ivec_scale(const IVec& a, const Int& k) {
  return {a.x * k, a.y * k, a.z * k};
}

// Integer direction of a rational point.
IVec to_ivec(const RatVec& p) {
  Int d = lcm(lcm(p.x.get_den(), p.y.get_den()), p.z.get_den());
  IVec v{p.x.get_num() * (d / p.x.get_den()),
         p.y.get_num() * (d / p.y.get_den()),
         p.z.get_num() * (d / p.z.get_den())};
  if (ivec_zero(v)) throw Error(ErrorKind::Input, "zero vector in link file");
  return ivec_primitive(v);
}

RatVec to_ratvec(const IVec& v) {
  return {Rat(v.x), Rat(v.y), Rat(v.z)};
}

Rat json_rat(const nlohmann::json& j) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number_integer())
    s = std::to_string(j.get<long long>());
  else
    throw Error(ErrorKind::Input, "coordinate must be an integer or \"p/q\"");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw Error(ErrorKind::Input, "malformed rational '" + s + "'");
  if (sgn(Int(q.get_den())) == 0)
    throw Error(ErrorKind::Input, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

struct BaseArc {
  IVec a, b, n;  // (a x b) . n > 0, n primitive
  int circle;
};

// Closed membership of a nonzero direction p on the minor arc.
bool on_base_arc(const IVec& p, const BaseArc& arc) {
  if (sgn(ivec_dot(p, arc.n)) != 0) return false;
  return sgn(ivec_dot(ivec_cross(arc.a, p), arc.n)) >= 0 &&
         sgn(ivec_dot(ivec_cross(p, arc.b), arc.n)) >= 0;
}

bool strictly_inside(const IVec& p, const BaseArc& arc) {
  return on_base_arc(p, arc) && !(p == arc.a) && !(p == arc.b);
}

// Common points of two minor arcs; throws on a shared sub-arc.
std::vector<IVec> arc_intersection(const BaseArc& s, const BaseArc& t) {
  std::vector<IVec> out;
  if (ivec_zero(ivec_cross(s.n, t.n))) {
    // Same great circle: any overlap beyond shared endpoints is non-finite.
    if (strictly_inside(t.a, s) || strictly_inside(t.b, s) ||
        strictly_inside(s.a, t) || strictly_inside(s.b, t))
      throw Error(ErrorKind::Input, "non-finite intersection");
    bool same_pts = (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
    if (same_pts) throw Error(ErrorKind::Input, "non-finite intersection");
    for (const IVec& p : {t.a, t.b})
      if (on_base_arc(p, s)) out.push_back(p);
  } else {
    IVec x = ivec_primitive(ivec_cross(s.n, t.n));
    for (const IVec& p : {x, ivec_neg(x)})
      if (on_base_arc(p, s) && on_base_arc(p, t)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SphereLink load_link(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Input, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("circles") || !j["circles"].is_array())
    throw Error(ErrorKind::Input, "link file needs a 'circles' array");
  SphereLink link;
  for (const auto& jc : j["circles"]) {
    if (!jc.is_array())
      throw Error(ErrorKind::Input, "each circle must be a vertex array");
    std::vector<RatVec> circle;
    for (const auto& jv : jc) {
      if (!jv.is_array() || jv.size() != 3)
        throw Error(ErrorKind::Input, "each vertex must be a coordinate triple");
      RatVec p{json_rat(jv[0]), json_rat(jv[1]), json_rat(jv[2])};
      if (p.x * p.x + p.y * p.y + p.z * p.z != 1)
        throw Error(ErrorKind::Input, "vertex is not on the unit sphere");
      circle.push_back(p);
    }
    link.circles.push_back(std::move(circle));
  }
  if (link.circles.empty())
    throw Error(ErrorKind::Input, "link has no circles");
  return link;
}

IVec Arrangement::htangent(int h) const {
  const Edge& e = edges_[h >> 1];
  if ((h & 1) == 0) return ivec_cross(e.n, verts_[e.u]);
  return ivec_neg(ivec_cross(e.n, verts_[e.v]));
}

int Arrangement::next_halfedge(int h) const {
  int v = head(h);
  int back = h ^ 1;
  const std::vector<int>& ring = vedges_[v];
  int idx = rotpos_[back];
  int n = (int)ring.size();
  return ring[(idx + n - 1) % n];
}

int Arrangement::face_side(int e, int sign) const {
  int h = sign > 0 ? 2 * e : 2 * e + 1;
  return face_of_orbit_[orbit_[h]];
}

Arrangement Arrangement::build(const SphereLink& link) {
  Arrangement A;
  A.ncircles_ = (int)link.circles.size();
  if (link.circles.empty())
    throw Error(ErrorKind::Input, "link has no circles");

  // Base arcs with validated endpoints.
  std::vector<BaseArc> arcs;
  std::vector<std::pair<int, int>> arc_pos;  // (circle, index in circle)
  std::vector<int> circle_arc_count;
  for (int c = 0; c < (int)link.circles.size(); ++c) {
    const auto& poly = link.circles[c];
    if (poly.size() < 3)
      throw Error(ErrorKind::Input, "circle needs at least 3 vertices");
    int n = (int)poly.size();
    for (int i = 0; i < n; ++i) {
      IVec a = to_ivec(poly[i]);
      IVec b = to_ivec(poly[(i + 1) % n]);
      IVec x = ivec_cross(a, b);
      if (ivec_zero(x)) {
        if (sgn(ivec_dot(a, b)) > 0)
          throw Error(ErrorKind::Input, "repeated consecutive vertex");
        throw Error(ErrorKind::Input,
                    "ill-posed arc: antipodal consecutive vertices");
      }
      arcs.push_back({a, b, ivec_primitive(x), c});
      arc_pos.emplace_back(c, i);
    }
    circle_arc_count.push_back(n);
  }

  // Pairwise exact intersections; simplicity validation within a circle.
  std::vector<std::vector<IVec>> cuts(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      std::vector<IVec> pts = arc_intersection(arcs[i], arcs[j]);
      if (arc_pos[i].first == arc_pos[j].first) {
        int c = arc_pos[i].first;
        int n = circle_arc_count[c];
        int ai = arc_pos[i].second, aj = arc_pos[j].second;
        IVec shared;
        bool adjacent = false;
        if ((ai + 1) % n == aj) {
          adjacent = true;
          shared = arcs[i].b;
        } else if ((aj + 1) % n == ai) {
          adjacent = true;
          shared = arcs[j].b;
        }
        if (adjacent) {
          if (pts.size() != 1 || !(pts[0] == shared))
            throw Error(ErrorKind::Input, "circle is not simple");
          continue;  // polyline joints are already vertices
        }
        if (!pts.empty())
          throw Error(ErrorKind::Input, "circle is not simple");
        continue;
      }
      for (const IVec& p : pts) {
        cuts[i].push_back(p);
        cuts[j].push_back(p);
      }
    }

  // Vertex table.
  std::map<IVec, int> vid;
  auto vertex_id = [&](const IVec& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = (int)A.verts_.size();
    A.verts_.push_back(p);
    vid.emplace(p, id);
    return id;
  };

  // Subdivide each base arc at its cut points, ordered from the start.
  for (size_t i = 0; i < arcs.size(); ++i) {
    const BaseArc& arc = arcs[i];
    std::vector<IVec> pts = cuts[i];
    pts.push_back(arc.a);
    pts.push_back(arc.b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::sort(pts.begin(), pts.end(), [&](const IVec& p, const IVec& q) {
      return sgn(ivec_dot(ivec_cross(p, q), arc.n)) > 0;
    });
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
      Edge e;
      e.u = vertex_id(pts[k]);
      e.v = vertex_id(pts[k + 1]);
      e.n = arc.n;
      e.circle = arc.circle;
      A.edges_.push_back(e);
    }
  }

  // Rotation system: outgoing halfedges CCW around the outward normal.
  A.vedges_.assign(A.verts_.size(), {});
  for (int e = 0; e < (int)A.edges_.size(); ++e) {
    A.vedges_[A.edges_[e].u].push_back(2 * e);
    A.vedges_[A.edges_[e].v].push_back(2 * e + 1);
  }
  A.rotpos_.assign(2 * A.edges_.size(), -1);
  for (int v = 0; v < (int)A.verts_.size(); ++v) {
    auto& ring = A.vedges_[v];
    if (ring.empty()) throw Error(ErrorKind::Internal, "isolated vertex");
    const IVec V = A.verts_[v];
    const IVec R = A.htangent(ring[0]);
    auto sector = [&](const IVec& t) {
      int s1 = sgn(ivec_dot(ivec_cross(R, t), V));
      if (s1 > 0) return 1;
      if (s1 < 0) return 3;
      return sgn(ivec_dot(R, t)) > 0 ? 0 : 2;
    };
    std::sort(ring.begin(), ring.end(), [&](int h1, int h2) {
      IVec t1 = A.htangent(h1), t2 = A.htangent(h2);
      int s1 = sector(t1), s2 = sector(t2);
      if (s1 != s2) return s1 < s2;
      int c = sgn(ivec_dot(ivec_cross(t1, t2), V));
      if (c != 0) return c > 0;
      if (h1 == h2) return false;
      throw Error(ErrorKind::Internal, "coincident edge directions");
    });
    for (int i = 0; i < (int)ring.size(); ++i) A.rotpos_[ring[i]] = i;
  }

  // Connected components.
  std::vector<int> parent(A.verts_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : A.edges_) parent[find(e.u)] = find(e.v);
  std::map<int, int> comp_id;
  for (int e = 0; e < (int)A.edges_.size(); ++e) {
    int root = find(A.edges_[e].u);
    auto [it, fresh] = comp_id.emplace(root, (int)comp_id.size());
    A.edges_[e].comp = it->second;
    if (fresh) A.comp_edges_.emplace_back();
    A.comp_edges_[it->second].push_back(e);
  }

  A.compute_faces();
  A.compute_reps();

  // Spherical Euler relation with one extra unit per extra component.
  long long V = A.num_vertices(), E = A.num_edges(), F = A.num_faces();
  long long C = (long long)A.comp_edges_.size();
  if (V - E + F != 1 + C)
    throw Error(ErrorKind::Internal, "spherical Euler check failed");
  return A;
}

void Arrangement::compute_faces() {
  // Face orbits: next = clockwise successor of the twin, faces on the left.
  orbit_.assign(2 * edges_.size(), -1);
  orbit_rep_halfedge_.clear();
  for (int h = 0; h < (int)orbit_.size(); ++h) {
    if (orbit_[h] >= 0) continue;
    int o = norbits_++;
    orbit_rep_halfedge_.push_back(h);
    int cur = h;
    do {
      orbit_[cur] = o;
      cur = next_halfedge(cur);
    } while (cur != h);
  }

  // Representative interior points per orbit, validated against the orbit's
  // own component.
  std::vector<IVec> orbit_rep(norbits_);
  std::vector<int> orbit_comp(norbits_);
  for (int o = 0; o < norbits_; ++o) {
    int h = orbit_rep_halfedge_[o];
    const Edge& e = edges_[h >> 1];
    orbit_comp[o] = e.comp;
    IVec side = (h & 1) ? ivec_neg(e.n) : e.n;
    IVec mid = ivec_add(verts_[e.u], verts_[e.v]);
    bool found = false;
    Int k = 2;
    for (int it = 0; it < 40 && !found; ++it, k *= 4) {
      IVec r = ivec_primitive(ivec_add(ivec_scale(mid, k), side));
      bool on_link = false;
      for (const Edge& ed : edges_)
        if (on_base_arc(r, {verts_[ed.u], verts_[ed.v], ed.n, ed.circle})) {
          on_link = true;
          break;
        }
      if (on_link) continue;
      if (locate_among(r, comp_edges_[e.comp], nullptr) == o) {
        orbit_rep[o] = r;
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorKind::Internal, "no interior point for a face");
  }

  // A spherical face is the intersection of one orbit region per component,
  // so orbits bound a common face exactly when their representatives carry
  // identical tuples of containing orbits across all components.
  int ncomp = (int)comp_edges_.size();
  std::map<std::vector<int>, int> face_id;
  face_of_orbit_.assign(norbits_, -1);
  for (int o = 0; o < norbits_; ++o) {
    std::vector<int> tuple(ncomp, -1);
    tuple[orbit_comp[o]] = o;
    for (int d = 0; d < ncomp; ++d)
      if (d != orbit_comp[o])
        tuple[d] = locate_among(orbit_rep[o], comp_edges_[d], nullptr);
    auto [it, fresh] = face_id.emplace(tuple, (int)face_id.size());
    face_of_orbit_[o] = it->second;
  }
  nfaces_ = (int)face_id.size();

  face_rep_.assign(nfaces_, IVec{});
  for (int o = 0; o < norbits_; ++o)
    face_rep_[face_of_orbit_[o]] = orbit_rep[o];
}

void Arrangement::compute_reps() {
  // Validate that each face representative locates back to its face.
  for (int f = 0; f < nfaces_; ++f)
    if (locate(face_rep_[f]) != f)
      throw Error(ErrorKind::Internal, "face representative misplaced");
}

// First-crossing point location among the given edges; returns the orbit
// bounding p's region. p must be primitive and off the given arcs.
int Arrangement::locate_among(const IVec& p, const std::vector<int>& edge_ids,
                              const std::vector<int>*) const {
  // Candidate great circles through p: through interior chords of the arcs.
  std::vector<IVec> cands;
  for (int e : edge_ids) {
    IVec m = ivec_add(verts_[edges_[e].u], verts_[edges_[e].v]);
    cands.push_back(m);
    cands.push_back(ivec_add(m, verts_[edges_[e].u]));
    cands.push_back(ivec_add(m, verts_[edges_[e].v]));
    if (cands.size() > 600) break;
  }
  for (const IVec& W : cands) {
    IVec ngr = ivec_cross(p, W);
    if (ivec_zero(ngr)) continue;
    IVec ng = ivec_primitive(ngr);
    bool bad = false;
    bool have = false;
    IVec bx;
    int be = -1;
    // Angle order around ng starting just after p.
    auto sector = [&](const IVec& x) {
      int s1 = sgn(ivec_dot(ivec_cross(p, x), ng));
      if (s1 > 0) return 0;
      if (s1 < 0) return 2;
      return 1;  // x antipodal to p (x == p impossible: p is off the link)
    };
    auto earlier = [&](const IVec& x, const IVec& y) {
      int sx = sector(x), sy = sector(y);
      if (sx != sy) return sx < sy;
      return sgn(ivec_dot(ivec_cross(x, y), ng)) > 0;
    };
    for (int e : edge_ids) {
      const Edge& ed = edges_[e];
      if (ivec_zero(ivec_cross(ng, ed.n))) {
        bad = true;  // probe circle coincides with the arc's circle
        break;
      }
      IVec x0 = ivec_primitive(ivec_cross(ng, ed.n));
      for (const IVec& x : {x0, ivec_neg(x0)}) {
        BaseArc ba{verts_[ed.u], verts_[ed.v], ed.n, ed.circle};
        if (!on_base_arc(x, ba)) continue;
        if (x == verts_[ed.u] || x == verts_[ed.v]) {
          bad = true;  // probe passes through an arrangement vertex
          break;
        }
        if (!have || earlier(x, bx)) {
          have = true;
          bx = x;
          be = e;
        }
      }
      if (bad) break;
    }
    if (bad || !have) continue;
    // Side of approach just before the crossing.
    int s = -sgn(ivec_dot(ivec_cross(ng, bx), edges_[be].n));
    if (s == 0) continue;  // grazing contact, try another probe
    return orbit_[s > 0 ? 2 * be : 2 * be + 1];
  }
  throw Error(ErrorKind::Internal, "point location failed");
}

int Arrangement::locate(const IVec& dir) const {
  if (ivec_zero(dir))
    throw Error(ErrorKind::Input, "zero direction is not a point");
  IVec p = ivec_primitive(dir);
  std::vector<int> all(edges_.size());
  std::iota(all.begin(), all.end(), 0);
  for (const Edge& e : edges_)
    if (on_base_arc(p, {verts_[e.u], verts_[e.v], e.n, e.circle}))
      throw Error(ErrorKind::Precondition, "not a generic point");
  return face_of_orbit_[locate_among(p, all, nullptr)];
}

int Arrangement::locate(const RatVec& p) const { return locate(to_ivec(p)); }

bool Arrangement::is_euler_cycle() const {
  for (const auto& ring : vedges_)
    if (ring.size() % 2 != 0) return false;
  return true;
}

int Arrangement::crossing_distance(int fa, int fb) const {
  if (fa < 0 || fb < 0 || fa >= nfaces_ || fb >= nfaces_)
    throw Error(ErrorKind::Precondition, "face id out of range");
  if (fa == fb) return 0;
  std::vector<std::vector<int>> adj(nfaces_);
  for (int e = 0; e < (int)edges_.size(); ++e) {
    int f1 = face_side(e, 1), f2 = face_side(e, -1);
    if (f1 != f2) {
      adj[f1].push_back(f2);
      adj[f2].push_back(f1);
    }
  }
  std::vector<int> dist(nfaces_, -1);
  std::queue<int> q;
  dist[fa] = 0;
  q.push(fa);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    if (f == fb) return dist[f];
    for (int g : adj[f])
      if (dist[g] < 0) {
        dist[g] = dist[f] + 1;
        q.push(g);
      }
  }
  throw Error(ErrorKind::Internal, "disconnected face graph");
}

int Arrangement::crossing_distance(const RatVec& a, const RatVec& b) const {
  return crossing_distance(locate(a), locate(b));
}

int Arrangement::diameter() const {
  int best = 0;
  for (int f = 0; f < nfaces_; ++f)
    for (int g = f + 1; g < nfaces_; ++g)
      best = std::max(best, crossing_distance(f, g));
  return best;
}

int Arrangement::antipodal_parity(const RatVec& lambda) const {
  IVec p = ivec_primitive(to_ivec(lambda));
  int f1 = locate(p);
  int f2 = locate(ivec_neg(p));
  int d = crossing_distance(f1, f2);

  // Direct meridian count over deterministic azimuths as a cross-check.
  std::vector<IVec> ws;
  for (Int i = -2; i <= 2; ++i)
    for (Int j = -2; j <= 2; ++j)
      for (Int k : {Int(1), Int(3)}) ws.push_back({i, j, k});
  unsigned long long seed = 0x9e3779b97f4a7c15ull;
  for (int t = 0; t < 14; ++t) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    ws.push_back({Int((long)(seed % 37) - 18), Int((long)((seed >> 8) % 37) - 18),
                  Int((long)((seed >> 16) % 37) - 18)});
  }
  int tried = 0;
  for (const IVec& w : ws) {
    if (tried >= 64) break;
    IVec nmr = ivec_cross(p, w);
    if (ivec_zero(nmr)) continue;
    ++tried;
    IVec nm = ivec_primitive(nmr);
    IVec half = ivec_cross(nm, p);  // points toward the chosen azimuth side
    bool bad = false;
    int count = 0;
    for (const Edge& e : edges_) {
      if (ivec_zero(ivec_cross(nm, e.n))) {
        bad = true;
        break;
      }
      IVec x0 = ivec_primitive(ivec_cross(nm, e.n));
      for (const IVec& x : {x0, ivec_neg(x0)}) {
        BaseArc ba{verts_[e.u], verts_[e.v], e.n, e.circle};
        if (!on_base_arc(x, ba)) continue;
        if (x == verts_[e.u] || x == verts_[e.v]) {
          bad = true;
          break;
        }
        int hs = sgn(ivec_dot(x, half));
        if (hs == 0) {
          bad = true;  // crossing exactly at +-lambda cannot happen generically
          break;
        }
        if (hs > 0) ++count;
      }
      if (bad) break;
    }
    if (bad) continue;
    if ((count - d) % 2 != 0)
      throw Error(ErrorKind::Internal, "meridian parity cross-check failed");
    return d & 1;
  }
  throw Error(ErrorKind::Precondition, "regenerate with a different point");
}

int Arrangement::edge_antipode(int e) const {
  // -(u) x -(v) = u x v, so the image edge carries the same primitive normal.
  if (eanti_.empty()) {
    std::map<std::tuple<int, int, IVec>, int> table;
    for (int i = 0; i < (int)edges_.size(); ++i) {
      int a = std::min(edges_[i].u, edges_[i].v);
      int b = std::max(edges_[i].u, edges_[i].v);
      table.emplace(std::make_tuple(a, b, edges_[i].n), i);
    }
    std::map<IVec, int> vid;
    for (int v = 0; v < (int)verts_.size(); ++v) vid.emplace(verts_[v], v);
    eanti_.assign(edges_.size(), -1);
    for (int i = 0; i < (int)edges_.size(); ++i) {
      auto iu = vid.find(ivec_neg(verts_[edges_[i].u]));
      auto iv = vid.find(ivec_neg(verts_[edges_[i].v]));
      if (iu == vid.end() || iv == vid.end()) continue;
      auto it = table.find(std::make_tuple(std::min(iu->second, iv->second),
                                           std::max(iu->second, iv->second),
                                           edges_[i].n));
      if (it != table.end()) eanti_[i] = it->second;
    }
  }
  return eanti_[e];
}

Arrangement::Antipodal Arrangement::antipodal_check() const {
  Antipodal out;
  out.invariant = true;
  std::vector<std::set<int>> circle_edges(ncircles_);
  for (int e = 0; e < (int)edges_.size(); ++e)
    circle_edges[edges_[e].circle].insert(e);
  std::vector<std::set<int>> image_edges(ncircles_);
  std::vector<int> image_circle(ncircles_, -2);
  for (int e = 0; e < (int)edges_.size(); ++e) {
    int ea = edge_antipode(e);
    if (ea < 0) {
      out.invariant = false;
      image_circle[edges_[e].circle] = -1;
      continue;
    }
    int c = edges_[e].circle;
    image_edges[c].insert(ea);
    int tc = edges_[ea].circle;
    if (image_circle[c] == -2)
      image_circle[c] = tc;
    else if (image_circle[c] != tc)
      image_circle[c] = -1;
  }
  out.circle_image.assign(ncircles_, -1);
  for (int c = 0; c < ncircles_; ++c) {
    int j = image_circle[c];
    if (j >= 0 && image_edges[c] == circle_edges[j])
      out.circle_image[c] = j;
    else if (j != -2)
      out.invariant = false;
  }
  return out;
}

int Arrangement::face_antipode(int face) const {
  int result = -1;
  std::map<IVec, int> vid;
  for (int v = 0; v < (int)verts_.size(); ++v) vid.emplace(verts_[v], v);
  for (int h = 0; h < 2 * (int)edges_.size(); ++h) {
    if (face_of_orbit_[orbit_[h]] != face) continue;
    int e = h >> 1;
    int ea = edge_antipode(e);
    if (ea < 0)
      throw Error(ErrorKind::Precondition,
                  "link is not antipodally invariant");
    // a maps the face left of u->v to the face left of (-v)->(-u).
    int nu = vid.at(ivec_neg(verts_[tail(h)]));
    int nv = vid.at(ivec_neg(verts_[head(h)]));
    int himg = (edges_[ea].u == nv && edges_[ea].v == nu) ? 2 * ea
               : (edges_[ea].u == nu && edges_[ea].v == nv)
                   ? 2 * ea + 1
                   : -1;
    if (himg < 0) throw Error(ErrorKind::Internal, "antipodal edge mismatch");
    // himg as computed starts at -head(h); the image face is on its left.
    int f = face_of_orbit_[orbit_[himg]];
    if (result < 0)
      result = f;
    else if (result != f)
      throw Error(ErrorKind::Internal, "inconsistent face antipode");
  }
  if (result < 0) throw Error(ErrorKind::Internal, "face without boundary");
  return result;
}

int Arrangement::antipodal_parity_face(int face) const {
  return crossing_distance(face, face_antipode(face)) & 1;
}

namespace {

using Mask = std::vector<uint64_t>;

bool mask_disjoint(const Mask& a, const Mask& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

Mask mask_or(const Mask& a, const Mask& b) {
  Mask r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] | b[i];
  return r;
}

}  // namespace

Arrangement::NacResult Arrangement::nac(int cycle_cap) const {
  auto ac = antipodal_check();
  if (!ac.invariant)
    throw Error(ErrorKind::Precondition, "link is not antipodally invariant");
  if (cycle_cap < 1) cycle_cap = 1;

  int V = num_vertices(), E = num_edges();
  std::vector<std::vector<std::pair<int, int>>> adj(V);  // (edge, other end)
  for (int e = 0; e < E; ++e) {
    adj[edges_[e].u].emplace_back(e, edges_[e].v);
    adj[edges_[e].v].emplace_back(e, edges_[e].u);
  }

  // Simple cycles = PL circles contained in the link: closed, vertex-simple.
  struct Cyc {
    std::vector<int> edges;  // sorted ids
    std::vector<int> vseq;
    Mask mask;
  };
  std::vector<Cyc> cycles;
  std::set<std::vector<int>> seen;
  bool capped = false;
  size_t words = (E + 63) / 64;
  std::vector<char> onpath(V, 0), eused(E, 0);
  std::vector<int> vseq, eseq;
  std::function<void(int, int)> dfs = [&](int s, int v) {
    if (capped) return;
    for (auto [e, w] : adj[v]) {
      if (capped) return;
      if (eused[e]) continue;
      if (w == s && eseq.size() >= 1) {
        std::vector<int> es = eseq;
        es.push_back(e);
        std::sort(es.begin(), es.end());
        if (seen.insert(es).second) {
          Cyc c;
          c.edges = es;
          c.vseq = vseq;
          c.mask.assign(words, 0);
          for (int id : es) c.mask[id / 64] |= 1ull << (id % 64);
          cycles.push_back(std::move(c));
          if ((int)cycles.size() > cycle_cap) {
            capped = true;
            cycles.pop_back();
            return;
          }
        }
      } else if (w > s && !onpath[w]) {
        onpath[w] = 1;
        eused[e] = 1;
        vseq.push_back(w);
        eseq.push_back(e);
        dfs(s, w);
        eseq.pop_back();
        vseq.pop_back();
        eused[e] = 0;
        onpath[w] = 0;
      }
    }
  };
  for (int s = 0; s < V && !capped; ++s) {
    onpath[s] = 1;
    vseq = {s};
    eseq.clear();
    dfs(s, s);
    onpath[s] = 0;
  }

  // Group cycles into orbits under a; the family must be a-closed and its
  // members pairwise edge-disjoint.
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < (int)cycles.size(); ++i) index[cycles[i].edges] = i;
  struct Item {
    Mask mask;
    int weight;
    std::vector<int> members;
  };
  std::vector<Item> items;
  std::vector<char> used(cycles.size(), 0);
  for (int i = 0; i < (int)cycles.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> img;
    for (int e : cycles[i].edges) img.push_back(edge_antipode(e));
    std::sort(img.begin(), img.end());
    auto it = index.find(img);
    if (it == index.end()) {
      used[i] = 1;  // partner missing: only possible under the cap
      continue;
    }
    int j = it->second;
    used[i] = used[j] = 1;
    if (i == j) {
      items.push_back({cycles[i].mask, 1, {i}});
    } else if (mask_disjoint(cycles[i].mask, cycles[j].mask)) {
      items.push_back({mask_or(cycles[i].mask, cycles[j].mask), 2, {i, j}});
    }
  }

  // Exact maximum packing by branch and bound over orbit items.
  int n = (int)items.size();
  std::vector<int> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + items[i].weight;
  int best = 0;
  std::vector<int> chosen, best_chosen;
  Mask usedm(words, 0);
  std::function<void(int, int)> bnb = [&](int i, int cur) {
    if (cur > best) {
      best = cur;
      best_chosen = chosen;
    }
    if (i >= n || cur + suffix[i] <= best) return;
    if (mask_disjoint(usedm, items[i].mask)) {
      Mask saved = usedm;
      usedm = mask_or(usedm, items[i].mask);
      chosen.push_back(i);
      bnb(i + 1, cur + items[i].weight);
      chosen.pop_back();
      usedm = saved;
    }
    bnb(i + 1, cur);
  };
  bnb(0, 0);

  NacResult res;
  res.nac = best;
  res.capped = capped;
  Mask verify(words, 0);
  for (int i : best_chosen)
    for (int ci : items[i].members) {
      if (!mask_disjoint(verify, cycles[ci].mask))
        throw Error(ErrorKind::Internal, "nac witness is not edge-disjoint");
      verify = mask_or(verify, cycles[ci].mask);
      res.witness.push_back(cycles[ci].vseq);
    }
  return res;
}

}  // namespace germ
