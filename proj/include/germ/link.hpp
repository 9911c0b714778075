// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

struct IVec {
  Int x, y, z;
  bool operator==(const IVec& o) const = default;
  bool operator<(const IVec& o) const {
    if (int c = cmp(x, o.x)) return c < 0;
    if (int c = cmp(y, o.y)) return c < 0;
    return cmp(z, o.z) < 0;
  }
};

IVec ivec_cross(const IVec& a, const IVec& b);
Int ivec_dot(const IVec& a, const IVec& b);
IVec ivec_neg(const IVec& a);
IVec ivec_primitive(const IVec& a);  // divides by the gcd, keeps direction
bool ivec_zero(const IVec& a);

struct RatVec {
  Rat x, y, z;
};

// PL circles on S^2 with exact rational unit vertices.
struct SphereLink {
  std::vector<std::vector<RatVec>> circles;
};

// Loader for {"circles": [[["p/q","p/q","p/q"], ...], ...]}; entries may be
// strings or integers. Verifies exact unit norm.
SphereLink load_link(const std::string& json_text);

class Arrangement {
public:
  static Arrangement build(const SphereLink& link);

  int num_vertices() const { return (int)verts_.size(); }
  int num_edges() const { return (int)edges_.size(); }
  int num_faces() const { return nfaces_; }
  int num_circles() const { return ncircles_; }

  bool is_euler_cycle() const;

  // Face id of a generic point; throws "not a generic point" if p is on the
  // link.
  int locate(const RatVec& p) const;
  int locate(const IVec& dir) const;

  int crossing_distance(int fa, int fb) const;
  int crossing_distance(const RatVec& a, const RatVec& b) const;
  int diameter() const;

  // d(lambda, -lambda) mod 2, cross-checked against a direct meridian count.
  int antipodal_parity(const RatVec& lambda) const;
  int antipodal_parity_face(int face) const;

  struct Antipodal {
    bool invariant = false;
    // circle_image[i] = j when a maps circle i onto circle j; -1 otherwise.
    std::vector<int> circle_image;
  };
  Antipodal antipodal_check() const;

  int face_antipode(int face) const;  // requires an a-invariant link

  struct NacResult {
    int nac = 0;
    bool capped = false;  // cycle cap hit: nac is a lower bound only
    std::vector<std::vector<int>> witness;  // cycles as vertex id sequences
  };
  NacResult nac(int cycle_cap = 10000) const;

  // Representative interior point (integer direction) of each face.
  const std::vector<IVec>& face_points() const { return face_rep_; }
  IVec vertex(int id) const { return verts_[id]; }
  struct EdgeView {
    int u, v, circle;
  };
  EdgeView edge(int id) const { return {edges_[id].u, edges_[id].v, edges_[id].circle}; }

private:
  Arrangement() = default;

  struct Edge {
    int u, v;   // oriented so that (u x v) . n > 0
    IVec n;     // primitive great-circle normal
    int circle;
    int comp = 0;
  };

  int head(int h) const { return (h & 1) ? edges_[h >> 1].u : edges_[h >> 1].v; }
  int tail(int h) const { return (h & 1) ? edges_[h >> 1].v : edges_[h >> 1].u; }
  IVec htangent(int h) const;  // tangent at tail(h)
  int next_halfedge(int h) const;
  int face_side(int edge, int sign) const;  // face label on the sign*n side

  int locate_among(const IVec& p, const std::vector<int>& edge_ids,
                   const std::vector<int>* orbit_of) const;
  void compute_faces();
  void compute_reps();
  int edge_antipode(int e) const;

  std::vector<IVec> verts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> vedges_;  // outgoing halfedges, CCW
  std::vector<int> rotpos_;               // position of halfedge in its ring
  std::vector<int> orbit_;                // halfedge -> orbit
  std::vector<int> face_of_orbit_;        // orbit -> merged face
  std::vector<int> orbit_rep_halfedge_;
  std::vector<IVec> face_rep_;
  std::vector<std::vector<int>> comp_edges_;
  mutable std::vector<int> eanti_;  // lazily filled antipodal edge table
  int norbits_ = 0;
  int nfaces_ = 0;
  int ncircles_ = 0;
};

}  // namespace germ
