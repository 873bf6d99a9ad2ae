#pragma once

#include <string>

#include "hjelm/arc.hpp"
#include "hjelm/conic.hpp"
#include "hjelm/correspondence.hpp"
#include "hjelm/mub.hpp"
#include "hjelm/plane.hpp"

namespace hjelm {

// Serialized artifacts. Every JSON document carries {"schema", "version"}
// and is rendered deterministically (fixed key order, 2-space indent,
// trailing newline) so repeated runs are byte-identical.

std::string ring_json(const Ring& ring);
std::string plane_json(const Plane& plane);
/// rows = points, cols = lines, cells 0/1, no header.
std::string incidence_csv(const Plane& plane);
/// Neighbour graph: one cluster per class, edges between neighbour pairs.
std::string neighbour_graph_dot(const Plane& plane);
std::string conic_report_json(const Conic& conic, const Plane& plane);
std::string intersection_report_json(const ConicIntersections& report,
                                     const Plane& plane);
std::string arc_result_json(const ArcSearchResult& result, const Plane& plane);
std::string mub_json(const MubSet& set);
std::string certificate_json(const CorrespondenceCertificate& cert,
                             const MubSet& mubs, const Conic& conic);

} // namespace hjelm
