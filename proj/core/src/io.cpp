#include "hjelm/io.hpp"

#include <sstream>

#include <json.hpp>

namespace hjelm {

namespace {

using json = nlohmann::ordered_json;

json counts_json(const RingCounts& c) {
  return json{{"total", c.total}, {"zero_divisors", c.zero_divisors}, {"units", c.units}};
}

json ring_body(const Ring& ring) {
  return json{{"p", ring.p()},
              {"r", ring.r()},
              {"q", ring.q()},
              {"kind", to_string(ring.kind())},
              {"name", ring.name()},
              {"modulus_coeffs", ring.modulus()},
              {"counts", counts_json(ring.counts())}};
}

json triple_json(const Ring& ring, const Triple& t) {
  json out = json::array();
  for (int i = 0; i < 3; ++i) out.push_back(ring.coeffs_of(t[i]));
  return out;
}

json classes_json(const std::vector<NeighbourClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(c.members);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string ring_json(const Ring& ring) {
  json j{{"schema", "hjelm.ring"}, {"version", 1}};
  j.update(ring_body(ring));
  return dump(j);
}

std::string plane_json(const Plane& plane) {
  const Ring& R = *plane.ring();
  json j{{"schema", "hjelm.plane"}, {"version", 1}};
  j["ring"] = ring_body(R);
  j["point_count"] = plane.point_count();
  j["line_count"] = plane.line_count();
  json pts = json::array(), lns = json::array();
  for (int i = 0; i < plane.point_count(); ++i) pts.push_back(triple_json(R, plane.point(i)));
  for (int i = 0; i < plane.line_count(); ++i) lns.push_back(triple_json(R, plane.line(i)));
  j["points"] = std::move(pts);
  j["lines"] = std::move(lns);
  j["neighbour_classes"] = classes_json(plane.point_classes());
  j["line_neighbour_classes"] = classes_json(plane.line_classes());
  return dump(j);
}

std::string incidence_csv(const Plane& plane) {
  std::ostringstream os;
  for (int p = 0; p < plane.point_count(); ++p) {
    for (int l = 0; l < plane.line_count(); ++l) {
      if (l) os << ',';
      os << (plane.incident(l, p) ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

std::string neighbour_graph_dot(const Plane& plane) {
  std::ostringstream os;
  os << "graph neighbours {\n";
  os << "  // " << plane.ring()->name() << ": " << plane.point_count()
     << " points in " << plane.point_classes().size() << " neighbour classes\n";
  int ci = 0;
  for (const auto& cls : plane.point_classes()) {
    os << "  subgraph cluster_" << ci << " {\n";
    os << "    label=\"class " << ci << "\";\n";
    for (int p : cls.members) os << "    p" << p << ";\n";
    for (size_t i = 0; i < cls.members.size(); ++i)
      for (size_t j = i + 1; j < cls.members.size(); ++j)
        os << "    p" << cls.members[i] << " -- p" << cls.members[j] << ";\n";
    os << "  }\n";
    ++ci;
  }
  os << "}\n";
  return os.str();
}

namespace {

json conic_body(const Conic& conic, const Plane& plane) {
  const Ring& R = *conic.ring;
  json j;
  j["label"] = conic.label;
  json coeffs = json::array();
  for (int c : conic.coeffs) coeffs.push_back(R.coeffs_of(c));
  j["coeffs"] = std::move(coeffs);
  j["coeff_order"] = json::array({"c11", "c22", "c33", "c12", "c13", "c23"});
  j["points"] = conic_points(conic, plane);
  return j;
}

} // namespace

std::string conic_report_json(const Conic& conic, const Plane& plane) {
  json j{{"schema", "hjelm.conic"}, {"version", 1}};
  j["ring"] = ring_body(*conic.ring);
  j.update(conic_body(conic, plane));
  j["proper_verdict"] = to_string(is_proper(conic, plane));
  try {
    auto decomp = conic_neighbour_classes(conic, plane);
    j["classes"] = classes_json(decomp.classes);
    j["classical_image"] = decomp.classical_image;
  } catch (const Error& e) {
    if (e.code() != Errc::NotAProperConic) throw;
    j["classes"] = nullptr;
    j["classical_image"] = nullptr;
  }
  return dump(j);
}

std::string intersection_report_json(const ConicIntersections& report,
                                     const Plane& plane) {
  json j{{"schema", "hjelm.conic_intersections"}, {"version", 1}};
  j["ring"] = ring_body(*plane.ring());
  json conics = json::array();
  for (size_t i = 0; i < report.conics.size(); ++i) {
    json c = conic_body(report.conics[i], plane);
    c["proper_verdict"] = to_string(report.verdicts[i]);
    conics.push_back(std::move(c));
  }
  j["conics"] = std::move(conics);
  json pairs = json::array();
  for (const auto& pr : report.pairs) {
    json coords = json::array();
    for (int p : pr.common) coords.push_back(triple_json(*plane.ring(), plane.point(p)));
    pairs.push_back(json{{"a", pr.a},
                         {"b", pr.b},
                         {"common_points", pr.common},
                         {"common_coords", std::move(coords)}});
  }
  j["pairs"] = std::move(pairs);
  return dump(j);
}

std::string arc_result_json(const ArcSearchResult& result, const Plane& plane) {
  json j{{"schema", "hjelm.arc_search"}, {"version", 1}};
  j["ring"] = ring_body(*plane.ring());
  j["max_size"] = result.max_size;
  j["witness"] = result.witness;
  json coords = json::array();
  for (int p : result.witness) coords.push_back(triple_json(*plane.ring(), plane.point(p)));
  j["witness_coords"] = std::move(coords);
  j["census"] = result.census;
  j["exhausted"] = result.exhausted;
  j["nodes_visited"] = result.nodes_visited;
  return dump(j);
}

std::string mub_json(const MubSet& set) {
  json j{{"schema", "hjelm.mub"}, {"version", 1}};
  j["q"] = set.q;
  j["p"] = set.p;
  j["r"] = set.r;
  j["construction"] = (set.p == 2) ? "galois-ring GR(4,r) phases"
                                   : "quadratic GF(q) phases";
  json bases = json::array();
  for (const auto& b : set.bases) {
    json vecs = json::array();
    for (const auto& v : b.vectors) {
      json vec = json::array();
      for (const auto& z : v) vec.push_back(json::array({z.real(), z.imag()}));
      vecs.push_back(std::move(vec));
    }
    bases.push_back(json{{"label", b.label}, {"vectors", std::move(vecs)}});
  }
  j["bases"] = std::move(bases);
  j["report"] = json{{"deviation", set.deviation},
                     {"unbiased_tol", set.unbiased_tol},
                     {"orthonormal_tol", set.orthonormal_tol},
                     {"all_pass", set.all_pass},
                     {"exact_verified", set.exact_verified}};
  return dump(j);
}

std::string certificate_json(const CorrespondenceCertificate& cert,
                             const MubSet& mubs, const Conic& conic) {
  json j{{"schema", "hjelm.correspondence"}, {"version", 1}};
  j["q"] = cert.q;
  j["ring"] = ring_body(*conic.ring);
  json coeffs = json::array();
  for (int c : conic.coeffs) coeffs.push_back(conic.ring->coeffs_of(c));
  j["conic_coeffs"] = std::move(coeffs);
  j["conic_label"] = conic.label;
  j["mub_construction"] = (mubs.p == 2) ? "galois-ring GR(4,r) phases"
                                        : "quadratic GF(q) phases";
  j["bijections"] = json{{"basis_to_class", cert.basis_to_class},
                         {"vector_to_point", cert.vector_to_point}};
  json checks = json::array();
  for (const auto& c : cert.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["all_pass"] = cert.all_pass;
  return dump(j);
}

} // namespace hjelm
