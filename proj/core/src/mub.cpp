#include "hjelm/mub.hpp"

#include <cmath>
#include <numbers>

namespace hjelm {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::complex<double> root_of_unity(int n, int k) {
  const double angle = 2.0 * std::numbers::pi * k / n;
  return {std::cos(angle), std::sin(angle)};
}

// z(x) * conj(z)(x) in Z[x]/(x^n - 1), as an integer coefficient vector.
std::vector<long> norm_in_group_ring(const std::vector<long>& z, int n) {
  std::vector<long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[(i - j % n + n) % n] += z[i] * z[j];
  return out;
}

// Is the cyclotomic integer (coefficients mod Phi_n, n prime or n = 4)
// equal to the rational constant c?
bool cyclotomic_equals_constant(const std::vector<long>& a, int n, long c) {
  if (n == 4) {
    return a[0] - a[2] == c && a[1] == a[3];
  }
  // n odd prime: a == c mod Phi_n iff a1 = ... = a_{n-1} and a0 - a1 = c.
  for (int i = 2; i < n; ++i)
    if (a[i] != a[1]) return false;
  return a[0] - a[1] == c;
}

// Unnormalized inner product <u,v> = sum_x zeta^{pv[x] - pu[x]} as a group
// ring vector.
std::vector<long> exact_inner(const std::vector<int>& pu, const std::vector<int>& pv,
                              int n) {
  std::vector<long> z(n, 0);
  for (size_t x = 0; x < pu.size(); ++x) ++z[((pv[x] - pu[x]) % n + n) % n];
  return z;
}

bool exact_inner_is_zero(const std::vector<int>& pu, const std::vector<int>& pv, int n) {
  auto z = exact_inner(pu, pv, n);
  return cyclotomic_equals_constant(z, n, 0);
}

// |<u,v>|^2 * q^2 == q, both vectors scaled by 1/sqrt(q).
bool exact_inner_is_unbiased(const std::vector<int>& pu, const std::vector<int>& pv,
                             int n, int q) {
  auto z = exact_inner(pu, pv, n);
  auto norm = norm_in_group_ring(z, n);
  return cyclotomic_equals_constant(norm, n, q);
}

} // namespace

PairVerdict verify_unbiased(const Basis& a, const Basis& b, double tol) {
  if (a.vectors.size() != b.vectors.size() ||
      (a.vectors.empty() ? 0 : a.vectors[0].size()) !=
          (b.vectors.empty() ? 0 : b.vectors[0].size()))
    fail(Errc::DimensionMismatch, "bases of different dimension");
  const double target = 1.0 / std::sqrt(static_cast<double>(a.vectors.size()));
  PairVerdict v;
  for (const auto& u : a.vectors)
    for (const auto& w : b.vectors) {
      std::complex<double> ip{0.0, 0.0};
      for (size_t i = 0; i < u.size(); ++i) ip += std::conj(u[i]) * w[i];
      v.max_deviation = std::max(v.max_deviation, std::abs(std::abs(ip) - target));
    }
  v.pass = v.max_deviation <= tol;
  return v;
}

PairVerdict verify_orthonormal(const Basis& a, double tol) {
  PairVerdict v;
  for (size_t i = 0; i < a.vectors.size(); ++i)
    for (size_t j = 0; j < a.vectors.size(); ++j) {
      std::complex<double> ip{0.0, 0.0};
      for (size_t t = 0; t < a.vectors[i].size(); ++t)
        ip += std::conj(a.vectors[i][t]) * a.vectors[j][t];
      const double want = (i == j) ? 1.0 : 0.0;
      v.max_deviation = std::max(v.max_deviation, std::abs(ip - want));
    }
  v.pass = v.max_deviation <= tol;
  return v;
}

bool exact_orthonormal(const Basis& a) {
  if (a.exact == Basis::ExactForm::Identity) return true;
  if (a.exact != Basis::ExactForm::RootPowers) return false;
  const int q = static_cast<int>(a.powers.size());
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (!exact_inner_is_zero(a.powers[i], a.powers[j], a.root_order)) return false;
  // Norms: each component has modulus 1/sqrt(q), q components -> norm 1.
  return true;
}

bool exact_unbiased(const Basis& a, const Basis& b) {
  if (a.exact == Basis::ExactForm::None || b.exact == Basis::ExactForm::None)
    return false;
  const bool a_id = a.exact == Basis::ExactForm::Identity;
  const bool b_id = b.exact == Basis::ExactForm::Identity;
  if (a_id && b_id) return false; // |<e_i,e_j>| is 0 or 1, never 1/sqrt(q)
  // <e_j, v> = v[j]: a root of unity over sqrt(q), exactly unbiased.
  if (a_id || b_id) return true;
  if (a.root_order != b.root_order) return false;
  const int q = static_cast<int>(a.powers.size());
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (!exact_inner_is_unbiased(a.powers[i], b.powers[j], a.root_order, q))
        return false;
  return true;
}

int field_trace(const Ring& field, const Elem& x) {
  if (field.kind() != RingKind::Field)
    fail(Errc::WrongRingKind, "field trace requires GF(q)");
  Elem acc = x;
  Elem sum = x;
  for (int i = 1; i < field.r(); ++i) {
    acc = field.frobenius(acc);
    sum = sum + acc;
  }
  auto c = sum.coeffs();
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) throw std::logic_error("field trace landed outside GF(p)");
  return c[0];
}

int galois_trace(const Ring& gr, const Elem& x) {
  if (gr.kind() != RingKind::GaloisRing)
    fail(Errc::WrongRingKind, "Galois-ring trace requires GR(p^2,r)");
  Elem acc = x;
  Elem sum = x;
  for (int i = 1; i < gr.r(); ++i) {
    acc = gr.frobenius(acc);
    sum = sum + acc;
  }
  auto c = sum.coeffs();
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) throw std::logic_error("Galois-ring trace landed outside Z_{p^2}");
  return c[0];
}

MubSet build_mub_set(int p, int r, double unbiased_tol, double orthonormal_tol) {
  if (!is_prime(p))
    fail(Errc::UnsupportedDimension, "q must be a prime power; p = " +
                                         std::to_string(p) + " is not prime");
  if (r < 1) fail(Errc::UnsupportedDimension, "r must be >= 1");

  MubSet set;
  set.p = p;
  set.r = r;
  set.unbiased_tol = unbiased_tol;
  set.orthonormal_tol = orthonormal_tol;

  RingOptions ropt;
  try {
    set.ring = (p == 2) ? Ring::galois(2, r, ropt) : Ring::field(p, r, ropt);
  } catch (const Error& e) {
    if (e.code() == Errc::RingTooLarge)
      fail(Errc::UnsupportedDimension, "dimension exceeds the supported cap");
    throw;
  }
  const Ring& R = *set.ring;
  const int q = R.q();
  set.q = q;
  const int n = (p == 2) ? 4 : p; // root-of-unity order of the phases
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));

  Basis computational;
  computational.label = 0;
  computational.exact = Basis::ExactForm::Identity;
  computational.vectors.assign(q, std::vector<std::complex<double>>(q, {0.0, 0.0}));
  for (int i = 0; i < q; ++i) computational.vectors[i][i] = {1.0, 0.0};
  set.bases.push_back(std::move(computational));

  // Index points: GF(q) elements for odd p, Teichmueller elements for p = 2.
  std::vector<Elem> domain;
  if (p == 2) {
    domain = R.teichmueller().elements;
  } else {
    for (int i = 0; i < q; ++i) domain.push_back(R.element(i));
  }

  for (int bi = 0; bi < q; ++bi) {
    Basis basis;
    basis.label = bi + 1;
    basis.exact = Basis::ExactForm::RootPowers;
    basis.root_order = n;
    for (int mi = 0; mi < q; ++mi) {
      std::vector<int> pow_row(q, 0);
      for (int xi = 0; xi < q; ++xi) {
        const Elem& b = domain[bi];
        const Elem& m = domain[mi];
        const Elem& x = domain[xi];
        int e;
        if (p == 2) {
          // i^{tr((b + 2m) x)}
          const Elem two = R.from_int(2);
          e = galois_trace(R, (b + two * m) * x);
        } else {
          // w_p^{tr(b x^2 + m x)}
          e = field_trace(R, b * x * x + m * x);
        }
        pow_row[xi] = e;
      }
      basis.powers.push_back(std::move(pow_row));
    }
    basis.vectors.assign(q, std::vector<std::complex<double>>(q));
    for (int v = 0; v < q; ++v)
      for (int x = 0; x < q; ++x)
        basis.vectors[v][x] = root_of_unity(n, basis.powers[v][x]) * scale;
    set.bases.push_back(std::move(basis));
  }

  // Pairwise report: diagonal = orthonormality, off-diagonal = unbiasedness.
  const int nb = q + 1;
  set.deviation.assign(nb, std::vector<double>(nb, 0.0));
  set.all_pass = true;
  set.exact_verified = true;
  for (int i = 0; i < nb; ++i) {
    auto ortho = verify_orthonormal(set.bases[i], orthonormal_tol);
    set.deviation[i][i] = ortho.max_deviation;
    set.all_pass = set.all_pass && ortho.pass;
    set.exact_verified = set.exact_verified && exact_orthonormal(set.bases[i]);
    for (int j = i + 1; j < nb; ++j) {
      auto ub = verify_unbiased(set.bases[i], set.bases[j], unbiased_tol);
      set.deviation[i][j] = set.deviation[j][i] = ub.max_deviation;
      set.all_pass = set.all_pass && ub.pass;
      set.exact_verified = set.exact_verified && exact_unbiased(set.bases[i], set.bases[j]);
    }
  }
  return set;
}

} // namespace hjelm
