#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hjelm/ring.hpp"

namespace hjelm {

/// Orthonormal basis of C^q. Vectors whose components are roots of unity
/// over sqrt(q) additionally carry their exact exponent matrix, enabling
/// integer-exact verification (the computational basis is exact by fiat).
struct Basis {
  enum class ExactForm { None, Identity, RootPowers };

  int label = 0;
  std::vector<std::vector<std::complex<double>>> vectors;
  ExactForm exact = ExactForm::None;
  int root_order = 0;                      // components are zeta_n^k / sqrt(q)
  std::vector<std::vector<int>> powers;    // [vector][component] exponent
};

struct PairVerdict {
  bool pass = false;
  double max_deviation = 0.0;
};

/// Max |<u,v>| deviation from 1/sqrt(q) over all cross pairs.
PairVerdict verify_unbiased(const Basis& a, const Basis& b, double tol);
/// Max |Gram - I| entry deviation.
PairVerdict verify_orthonormal(const Basis& a, double tol);

/// Integer-exact counterparts for bases carrying exact forms; cross inner
/// products are cyclotomic integers, compared symbolically (zero tolerance).
bool exact_unbiased(const Basis& a, const Basis& b);
bool exact_orthonormal(const Basis& a);

struct MubSet {
  int q = 0;
  int p = 0, r = 0;
  RingPtr ring;                 // GF(q) for odd p, GR(4,r) for p = 2
  std::vector<Basis> bases;     // q+1: computational + q quadratic-phase bases
  // (q+1) x (q+1) deviation matrix: off-diagonal entries are unbiasedness
  // deviations, the diagonal carries each basis' orthonormality deviation.
  std::vector<std::vector<double>> deviation;
  double unbiased_tol = 0.0;
  double orthonormal_tol = 0.0;
  bool all_pass = false;
  bool exact_verified = false;  // symbolic verification succeeded for all pairs
};

/// Builds the complete set of q+1 mutually unbiased bases of C^q, q = p^r.
/// Odd p: components exp(2*pi*i*tr(b x^2 + m x)/p)/sqrt(q) over GF(q).
/// p = 2: components i^{tr((b + 2m) x)}/sqrt(q) over the Teichmueller set
/// of GR(4,r). Both are verified numerically and symbolically on return.
MubSet build_mub_set(int p, int r, double unbiased_tol = 1e-9,
                     double orthonormal_tol = 1e-12);

/// Field trace GF(q) -> GF(p) as an exponent in [0,p); sums of Frobenius
/// powers. Galois-ring trace GR(4,r) -> Z_4 likewise.
int field_trace(const Ring& field, const Elem& x);
int galois_trace(const Ring& gr, const Elem& x);

} // namespace hjelm
