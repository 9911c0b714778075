// SPDX-License-Identifier: Apache-2.0
#include "germ/report.hpp"

#include "json.hpp"

namespace germ {

namespace {

using J = nlohmann::ordered_json;

J alg_json(const RealAlgebraic& a) {
  J j;
  if (a.is_rational()) {
    j["rational"] = rat_str(a.rational_value());
  } else {
    j["minpoly"] = a.minpoly().str();
    j["interval"] = {rat_str(a.lo()), rat_str(a.hi())};
  }
  j["approx"] = a.approx();
  return j;
}

J dir_json(const Direction& d) {
  J coords = J::array();
  J approx = J::array();
  for (const auto& c : d.coords()) {
    coords.push_back(alg_json(c));
    approx.push_back(c.approx());
  }
  J j;
  j["coords"] = coords;
  j["approx"] = approx;
  return j;
}

J branch_json(const RealBranch& b) {
  J j;
  j["chart"] = b.chart == Chart::X_PARAM ? "x" : "y";
  j["sigma"] = b.sigma;
  j["ramification"] = b.e;
  j["k"] = b.k;
  if (b.truncation < 0)
    j["truncation"] = nullptr;  // series is exact
  else
    j["truncation"] = b.truncation;
  J terms = J::array();
  for (const auto& t : b.terms) {
    J tj;
    tj["exponent"] = t.exponent;
    tj["coeff"] = alg_json(t.coeff);
    terms.push_back(tj);
  }
  j["series"] = terms;
  if (b.parametric) {
    J comps = J::array();
    for (const auto& c : b.components) comps.push_back(c.str());
    j["components"] = comps;
  }
  j["u"] = dir_json(b.u);
  j["v"] = dir_json(b.v);
  j["summary"] = branch_str(b);
  return j;
}

J analysis_obj(const GermAnalysis& a, const OracleResult* oracle,
               const std::vector<SampledDirection>* samples) {
  J j;
  j["input_kind"] = a.parametric ? "parametric" : "polynomial";
  J branches = J::array();
  for (const auto& b : a.branches) branches.push_back(branch_json(b));
  j["branches"] = branches;
  J km = J::array();
  for (const auto& e : a.km.entries) {
    J ej;
    ej["direction"] = dir_json(e.dir);
    ej["k"] = e.k;
    km.push_back(ej);
  }
  j["k_map"] = km;
  J odd = J::array();
  for (const auto& d : a.odd.directions) odd.push_back(dir_json(d));
  j["odd_part"] = odd;
  J mult;
  if (a.m)
    mult["m"] = *a.m;
  else
    mult["m"] = nullptr;  // parametric input: parity only
  mult["parity"] = a.parity;
  j["multiplicity"] = mult;
  J rows = J::array();
  for (const auto& r : a.inv.rows)
    rows.push_back(J::array({r.r_minus, r.r_zero, r.r_plus}));
  j["invariant"] = J{{"rows", rows}};
  j["tree"] = a.tree.text();
  j["tree_dot"] = a.tree.dot();
  if (oracle) {
    J oj;
    oj["parity"] = oracle->parity;
    J trials = J::array();
    for (const auto& t : oracle->trials) {
      J tj;
      tj["s"] = rat_str(t.s);
      tj["stabilized_at"] = t.j;
      tj["count"] = t.count;
      tj["parity"] = t.parity;
      trials.push_back(tj);
    }
    oj["trials"] = trials;
    oj["agrees_with_exact"] = oracle->parity == a.parity;
    j["oracle"] = oj;
  }
  if (samples) {
    J sj = J::array();
    for (const auto& s : *samples) sj.push_back(J::array({s.x, s.y}));
    j["sampled_directions"] = sj;
  }
  return j;
}

J ratvec_json(const RatVec& p) {
  return J::array({rat_str(p.x), rat_str(p.y), rat_str(p.z)});
}

Rat rat_from_string(const std::string& s) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw Error(ErrorKind::Input, "malformed rational '" + s + "'");
  if (sgn(Int(q.get_den())) == 0)
    throw Error(ErrorKind::Input, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

RatVec ratvec_from_json(const J& j) {
  if (!j.is_array() || j.size() != 3)
    throw Error(ErrorKind::Input, "point must be a coordinate triple");
  RatVec p;
  Rat* coords[3] = {&p.x, &p.y, &p.z};
  for (int i = 0; i < 3; ++i) {
    if (j[i].is_string())
      *coords[i] = rat_from_string(j[i].get<std::string>());
    else if (j[i].is_number_integer())
      *coords[i] = Rat((long)j[i].get<long long>());
    else
      throw Error(ErrorKind::Input, "coordinate must be an integer or \"p/q\"");
  }
  return p;
}

}  // namespace

std::string analysis_json(const GermAnalysis& a, const OracleResult* oracle,
                          const std::vector<SampledDirection>* samples) {
  J j;
  j["schema"] = "germlab-analysis-1";
  j["analysis"] = analysis_obj(a, oracle, samples);
  return j.dump(2) + "\n";
}

std::string compare_json(const GermAnalysis& a, const GermAnalysis& b,
                         const Verdict& v) {
  J j;
  j["schema"] = "germlab-compare-1";
  j["left"] = analysis_obj(a, nullptr, nullptr);
  j["right"] = analysis_obj(b, nullptr, nullptr);
  j["bs_equivalent"] = v.bs_equivalent;
  j["branch_by_branch"] = v.branch_by_branch;
  J m = J::array();
  for (const auto& [i, k] : v.matching) m.push_back(J::array({i, k}));
  j["matching"] = m;
  return j.dump(2) + "\n";
}

std::string realize_json(const CurveInvariant& A, const BiPoly& f,
                         std::optional<bool> verified) {
  J j;
  j["schema"] = "germlab-realize-1";
  J rows = J::array();
  for (const auto& r : A.rows)
    rows.push_back(J::array({r.r_minus, r.r_zero, r.r_plus}));
  j["invariant"] = J{{"rows", rows}};
  j["polynomial"] = f.str();
  if (verified)
    j["verified"] = *verified;
  else
    j["verified"] = nullptr;
  return j.dump(2) + "\n";
}

std::string link_json(const Arrangement& arr, const LinkRequest& req) {
  J j;
  j["schema"] = "germlab-link-1";
  if (req.counts) {
    j["vertices"] = arr.num_vertices();
    j["edges"] = arr.num_edges();
    j["faces"] = arr.num_faces();
    j["circles"] = arr.num_circles();
  }
  if (req.euler) j["euler_cycle"] = arr.is_euler_cycle();
  if (req.diameter) j["diameter"] = arr.diameter();
  if (req.parity) {
    j["parity_point"] = ratvec_json(req.parity_point);
    j["antipodal_parity"] = arr.antipodal_parity(req.parity_point);
  }
  if (req.antipodal) {
    auto ac = arr.antipodal_check();
    J aj;
    aj["invariant"] = ac.invariant;
    aj["circle_image"] = ac.circle_image;
    j["antipodal"] = aj;
  }
  if (req.nac) {
    auto nr = arr.nac(req.cycle_cap > 0 ? req.cycle_cap : 10000);
    J nj;
    nj["value"] = nr.nac;
    nj["capped"] = nr.capped;
    if (nr.capped) nj["note"] = "nac lower bound only";
    J wit = J::array();
    for (const auto& cyc : nr.witness) {
      J cj = J::array();
      for (int v : cyc) {
        IVec p = arr.vertex(v);
        cj.push_back(J::array({p.x.get_str(), p.y.get_str(), p.z.get_str()}));
      }
      wit.push_back(cj);
    }
    nj["witness"] = wit;
    j["nac"] = nj;
  }
  if (!req.distances.empty()) {
    J dj = J::array();
    for (const auto& [p, q] : req.distances) {
      J e;
      e["from"] = ratvec_json(p);
      e["to"] = ratvec_json(q);
      e["distance"] = arr.crossing_distance(p, q);
      dj.push_back(e);
    }
    j["distances"] = dj;
  }
  return j.dump(2) + "\n";
}

CurveInvariant parse_invariant_json(const std::string& text) {
  J j;
  try {
    j = J::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Input, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw Error(ErrorKind::Input, "invariant file needs a 'rows' array");
  CurveInvariant A;
  for (const auto& jr : j["rows"]) {
    if (!jr.is_array() || jr.size() != 3 || !jr[0].is_number_integer() ||
        !jr[1].is_number_integer() || !jr[2].is_number_integer())
      throw Error(ErrorKind::Input,
                  "each row must be [r_minus, r_zero, r_plus] integers");
    InvRow r;
    r.r_minus = jr[0].get<int>();
    r.r_zero = jr[1].get<int>();
    r.r_plus = jr[2].get<int>();
    A.rows.push_back(r);
  }
  return A;
}

LinkRequest parse_link_request_json(const std::string& text) {
  J j;
  try {
    j = J::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Input, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw Error(ErrorKind::Input, "link request must be an object");
  LinkRequest req;
  req.counts = j.value("counts", true);
  req.euler = j.value("euler", false);
  req.diameter = j.value("diameter", false);
  req.parity = j.value("parity", false);
  req.antipodal = j.value("antipodal", false);
  req.nac = j.value("nac", false);
  req.cycle_cap = 0;  // unset: the caller supplies a default
  if (j.contains("cycle_cap")) {
    if (!j["cycle_cap"].is_number_integer() || j["cycle_cap"].get<int>() < 1)
      throw Error(ErrorKind::Input, "cycle_cap must be a positive integer");
    req.cycle_cap = j["cycle_cap"].get<int>();
  }
  if (j.contains("parity_point"))
    req.parity_point = ratvec_from_json(j["parity_point"]);
  if (j.contains("distances")) {
    if (!j["distances"].is_array())
      throw Error(ErrorKind::Input, "distances must be a list of point pairs");
    for (const auto& jp : j["distances"]) {
      if (!jp.is_array() || jp.size() != 2)
        throw Error(ErrorKind::Input, "each distance entry is a point pair");
      req.distances.emplace_back(ratvec_from_json(jp[0]),
                                 ratvec_from_json(jp[1]));
    }
  }
  return req;
}

}  // namespace germ
