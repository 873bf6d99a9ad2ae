#include "hjelm/correspondence.hpp"

#include <algorithm>
#include <sstream>

#include "hjelm/classical.hpp"

namespace hjelm {

namespace {

std::string count_detail(size_t got, int want, const char* what) {
  std::ostringstream os;
  os << got << " " << what << " vs " << want << " expected";
  return os.str();
}

} // namespace

CorrespondenceCertificate evaluate_correspondence(const MubSet& mubs,
                                                  const Conic& conic,
                                                  const Plane& plane) {
  if (static_cast<int>(mubs.bases.size()) != mubs.q + 1)
    fail(Errc::IncompleteMubSet, "need q+1 bases, have " +
                                     std::to_string(mubs.bases.size()));
  for (const Basis& b : mubs.bases)
    if (static_cast<int>(b.vectors.size()) != mubs.q)
      fail(Errc::IncompleteMubSet, "basis " + std::to_string(b.label) +
                                       " does not hold q vectors");
  if (is_proper(conic, plane) == Properness::Improper)
    fail(Errc::ImproperConic, "conic is improper");
  ConicClassDecomposition decomp;
  try {
    decomp = conic_neighbour_classes(conic, plane);
  } catch (const Error& e) {
    if (e.code() == Errc::NotAProperConic)
      fail(Errc::ImproperConic, e.what());
    throw;
  }

  CorrespondenceCertificate cert;
  cert.q = mubs.q;
  for (size_t k = 0; k < decomp.classes.size(); ++k)
    cert.basis_to_class.push_back(static_cast<int>(k));
  for (const auto& cls : decomp.classes) cert.vector_to_point.push_back(cls.members);

  const int q = mubs.q;
  const Ring& R = *plane.ring();

  // (a) q+1 bases against q+1 neighbour classes.
  {
    CheckResult c{"basis_count_matches_class_count", false, ""};
    c.pass = mubs.bases.size() == decomp.classes.size() &&
             static_cast<int>(decomp.classes.size()) == R.q() + 1 && q == R.q();
    c.detail = count_detail(decomp.classes.size(), q + 1, "classes");
    cert.checks.push_back(std::move(c));
  }

  // (b) q vectors per basis against q points per class.
  {
    CheckResult c{"vector_count_matches_class_size", true, ""};
    for (const auto& cls : decomp.classes)
      if (static_cast<int>(cls.members.size()) != q) c.pass = false;
    if (!cert.checks.back().pass) c.pass = false; // sizes meaningless on count mismatch
    c.detail = count_detail(decomp.classes.empty() ? 0 : decomp.classes[0].members.size(),
                            q, "points per class");
    cert.checks.push_back(std::move(c));
  }

  // (c) orthogonality within a basis <-> neighbourhood within its class.
  {
    CheckResult c{"orthogonal_maps_to_neighbour", true, ""};
    for (size_t k = 0; k < mubs.bases.size() && c.pass; ++k) {
      if (!verify_orthonormal(mubs.bases[k], mubs.orthonormal_tol).pass) {
        c.pass = false;
        c.detail = "basis " + std::to_string(k) + " is not orthonormal";
        break;
      }
      if (k >= decomp.classes.size()) break;
      const auto& members = decomp.classes[k].members;
      for (size_t i = 0; i < members.size() && c.pass; ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          if (!plane.neighbour_points(members[i], members[j])) {
            c.pass = false;
            c.detail = "class " + std::to_string(k) + " holds remote points";
            break;
          }
    }
    if (c.pass) c.detail = "all intra-basis pairs orthogonal, all intra-class pairs neighbour";
    cert.checks.push_back(std::move(c));
  }

  // (d) unbiasedness across bases <-> remoteness across classes.
  {
    CheckResult c{"unbiased_maps_to_remote", true, ""};
    for (size_t k = 0; k < mubs.bases.size() && c.pass; ++k)
      for (size_t l = k + 1; l < mubs.bases.size() && c.pass; ++l) {
        if (!verify_unbiased(mubs.bases[k], mubs.bases[l], mubs.unbiased_tol).pass) {
          c.pass = false;
          c.detail = "bases " + std::to_string(k) + "," + std::to_string(l) +
                     " are not unbiased";
          break;
        }
        if (l >= decomp.classes.size() || k >= decomp.classes.size()) continue;
        for (int pa : decomp.classes[k].members)
          for (int pb : decomp.classes[l].members)
            if (plane.neighbour_points(pa, pb)) {
              c.pass = false;
              c.detail = "classes " + std::to_string(k) + "," + std::to_string(l) +
                         " touch";
              break;
            }
      }
    if (c.pass) c.detail = "all cross-basis pairs unbiased, all cross-class pairs remote";
    cert.checks.push_back(std::move(c));
  }

  // (e) collapsing classes modulo p reproduces one point per basis on a
  // nondegenerate classical conic image.
  {
    CheckResult c{"modulo_p_collapse", false, ""};
    std::vector<int> images = decomp.classical_image;
    std::sort(images.begin(), images.end());
    const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    c.pass = distinct &&
             static_cast<int>(images.size()) == q + 1 &&
             is_nondegenerate_conic_image(*plane.residue_plane(), images);
    c.detail = distinct ? "q+1 distinct classical points, no three collinear"
                        : "classical images collide";
    cert.checks.push_back(std::move(c));
  }

  cert.all_pass = true;
  for (const auto& c : cert.checks) cert.all_pass = cert.all_pass && c.pass;
  return cert;
}

CorrespondenceCertificate certify(const MubSet& mubs, const Conic& conic,
                                  const Plane& plane) {
  CorrespondenceCertificate cert = evaluate_correspondence(mubs, conic, plane);
  if (!cert.all_pass)
    for (const auto& c : cert.checks)
      if (!c.pass)
        fail(Errc::StructuralMismatch, c.name + ": " + c.detail);
  return cert;
}

} // namespace hjelm
