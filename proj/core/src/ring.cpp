#include "hjelm/ring.hpp"

#include <algorithm>
#include <sstream>

namespace hjelm {

const char* to_string(RingKind kind) {
  switch (kind) {
    case RingKind::Field: return "field";
    case RingKind::GaloisRing: return "galois";
    case RingKind::DualNumbers: return "dual";
  }
  return "?";
}

const char* to_string(Errc code) {
  switch (code) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::PolynomialNotDividingCyclotomic: return "PolynomialNotDividingCyclotomic";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::MixedRings: return "MixedRings";
    case Errc::WrongRingKind: return "WrongRingKind";
    case Errc::RingTooLarge: return "RingTooLarge";
    case Errc::LineNotInPlane: return "LineNotInPlane";
    case Errc::PointsNotInPlane: return "PointsNotInPlane";
    case Errc::AllCoefficientsNonUnit: return "AllCoefficientsNonUnit";
    case Errc::NotAProperConic: return "NotAProperConic";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IncompleteMubSet: return "IncompleteMubSet";
    case Errc::ImproperConic: return "ImproperConic";
    case Errc::StructuralMismatch: return "StructuralMismatch";
    case Errc::ConfigParse: return "ConfigParse";
  }
  return "?";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over Z_m, coefficients constant-first.
// Vectors are kept trimmed: no trailing zeros, zero polynomial is {}.
// ---------------------------------------------------------------------------
namespace {

using Poly = std::vector<int>;

int mod(long v, int m) {
  long x = v % m;
  return static_cast<int>(x < 0 ? x + m : x);
}

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_add(const Poly& a, const Poly& b, int m) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    out[i] = mod(v, m);
  }
  return trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b, int m) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    out[i] = mod(v, m);
  }
  return trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b, int m) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = mod(out[i + j] + static_cast<long>(a[i]) * b[j], m);
  return trim(std::move(out));
}

// Remainder of a by monic f.
Poly poly_rem(Poly a, const Poly& f, int m) {
  const int df = static_cast<int>(f.size()) - 1;
  a = trim(std::move(a));
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const long lead = a.back();
    for (int i = 0; i <= df; ++i)
      a[shift + i] = mod(a[shift + i] - lead * f[i], m);
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_powmod(Poly base, long e, const Poly& f, int m) {
  Poly result{1};
  base = poly_rem(std::move(base), f, m);
  while (e > 0) {
    if (e & 1) result = poly_rem(poly_mul(result, base, m), f, m);
    base = poly_rem(poly_mul(base, base, m), f, m);
    e >>= 1;
  }
  return result;
}

bool poly_divides(const Poly& f, const Poly& g, int m) {
  return poly_rem(g, f, m).empty();
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long ipow(int base, int exp) {
  long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

// Multiplicative order of the class of x modulo (f, p); 0 when not a unit
// (f(0) == 0) or when x^{q-1} != 1.
long order_of_x(const Poly& f, int p) {
  const int r = static_cast<int>(f.size()) - 1;
  const long q = ipow(p, r);
  if (f[0] == 0) return 0;
  Poly acc{0, 1};
  acc = poly_rem(acc, f, p);
  for (long k = 1; k <= q - 1; ++k) {
    if (acc == Poly{1}) return k;
    acc = poly_rem(poly_mul(acc, Poly{0, 1}, p), f, p);
  }
  return 0;
}

Poly x_power_minus_one(long e) {
  Poly g(e + 1, 0);
  g[0] = -1; // caller reduces mod m
  g[e] = 1;
  return g;
}

} // namespace

bool polynomial_irreducible(const std::vector<int>& f, int p) {
  Poly g = trim(f);
  const int deg = static_cast<int>(g.size()) - 1;
  if (deg < 1) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    const long count = ipow(p, d);
    for (long code = 0; code < count; ++code) {
      Poly cand(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(c % p);
        c /= p;
      }
      cand[d] = 1;
      if (poly_divides(cand, g, p)) return false;
    }
  }
  return true;
}

std::vector<int> Ring::default_field_modulus(int p, int r) {
  // Lexicographic scan over coefficient vectors (c0, ..., c_{r-1}).
  std::vector<int> digits(r, 0);
  while (true) {
    Poly f(digits.begin(), digits.end());
    f.push_back(1);
    if (polynomial_irreducible(f, p) && order_of_x(f, p) == ipow(p, r) - 1)
      return f;
    int i = r - 1;
    while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  throw std::logic_error("no primitive polynomial found"); // unreachable
}

std::vector<int> Ring::lift_modulus(int p, const std::vector<int>& fbar) {
  const int r = static_cast<int>(trim(fbar).size()) - 1;
  const int m2 = p * p;
  const long q = ipow(p, r);
  if (!polynomial_irreducible(fbar, p))
    fail(Errc::ReduciblePolynomial, "modulus reduction is not irreducible over GF(p)");

  // Work in the scratch ring Z_{p^2}[x]/(naive lift of fbar). The class of x
  // maps to the Teichmueller representative zeta = x^q; the wanted modulus is
  // the minimal polynomial of zeta, i.e. prod_i (X - zeta^{p^i}).
  Poly f0(fbar.begin(), fbar.end());
  Poly zeta = poly_powmod(Poly{0, 1}, q, f0, m2);
  if (zeta.empty())
    fail(Errc::PolynomialNotDividingCyclotomic,
         "no unit Teichmueller lift exists for this modulus");

  std::vector<Poly> conj(r);
  conj[0] = zeta;
  for (int i = 1; i < r; ++i) conj[i] = poly_powmod(conj[i - 1], p, f0, m2);

  // Multiply out prod (X - conj[i]); coefficients are scratch-ring elements.
  std::vector<Poly> fc{Poly{1}};
  for (int i = 0; i < r; ++i) {
    std::vector<Poly> next(fc.size() + 1);
    for (size_t k = 0; k < fc.size(); ++k) {
      next[k + 1] = poly_add(next[k + 1], fc[k], m2);
      next[k] = poly_sub(next[k], poly_rem(poly_mul(conj[i], fc[k], m2), f0, m2), m2);
    }
    fc = std::move(next);
  }

  std::vector<int> lifted(r + 1, 0);
  for (int k = 0; k <= r; ++k) {
    if (fc[k].size() > 1)
      throw std::logic_error("lifted modulus coefficient not in Z_{p^2}");
    lifted[k] = fc[k].empty() ? 0 : fc[k][0];
  }
  if (lifted[r] != 1) throw std::logic_error("lifted modulus not monic");
  for (int k = 0; k <= r; ++k)
    if (mod(lifted[k], p) != mod(fbar[k], p))
      throw std::logic_error("lifted modulus does not reduce to fbar");
  Poly cyc = x_power_minus_one(q - 1);
  for (auto& c : cyc) c = mod(c, m2);
  if (!poly_divides(lifted, cyc, m2))
    fail(Errc::PolynomialNotDividingCyclotomic, "lift does not divide x^{q-1}-1");
  return lifted;
}

// ---------------------------------------------------------------------------
// Ring construction
// ---------------------------------------------------------------------------

RingPtr Ring::field(int p, int r, const RingOptions& options) {
  return make(p, r, RingKind::Field, {}, options);
}
RingPtr Ring::galois(int p, int r, const RingOptions& options) {
  return make(p, r, RingKind::GaloisRing, {}, options);
}
RingPtr Ring::dual_numbers(int p, int r, const RingOptions& options) {
  return make(p, r, RingKind::DualNumbers, {}, options);
}

RingPtr Ring::make(int p, int r, RingKind kind,
                   const std::optional<std::vector<int>>& modulus,
                   const RingOptions& options) {
  if (!is_prime(p)) fail(Errc::CompositeP, "p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  long q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > options.max_q)
      fail(Errc::RingTooLarge, "q = p^r exceeds cap " + std::to_string(options.max_q));
  }

  const int field_mod = p;
  const int ring_mod = (kind == RingKind::GaloisRing) ? p * p : p;

  std::vector<int> stored;
  if (modulus) {
    std::vector<int> f = *modulus;
    if (static_cast<int>(f.size()) != r + 1)
      throw std::invalid_argument("modulus must list r+1 coefficients, constant first");
    for (auto& c : f) c = mod(c, ring_mod);
    if (f[r] != 1) throw std::invalid_argument("modulus must be monic");
    std::vector<int> fbar(f.begin(), f.end());
    for (auto& c : fbar) c = mod(c, field_mod);
    if (!polynomial_irreducible(fbar, p))
      fail(Errc::ReduciblePolynomial, "modulus is not irreducible modulo p");
    if (kind == RingKind::GaloisRing) {
      Poly cyc = x_power_minus_one(q - 1);
      for (auto& c : cyc) c = mod(c, ring_mod);
      stored = poly_divides(f, cyc, ring_mod) ? f : lift_modulus(p, fbar);
    } else {
      stored = fbar;
    }
  } else {
    std::vector<int> fbar = default_field_modulus(p, r);
    stored = (kind == RingKind::GaloisRing) ? lift_modulus(p, fbar) : fbar;
  }

  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = kind;
  ring->p_ = p;
  ring->r_ = r;
  ring->q_ = static_cast<int>(q);
  ring->modulus_ = stored;
  ring->m_ = (kind == RingKind::GaloisRing) ? p * p : p;
  ring->k_ = (kind == RingKind::DualNumbers) ? 2 * r : r;
  long n = 1;
  for (int i = 0; i < ring->k_; ++i) n *= ring->m_;
  ring->n_ = static_cast<int>(n);

  if (kind != RingKind::Field) {
    std::vector<int> fbar(stored.begin(), stored.end());
    for (auto& c : fbar) c = mod(c, p);
    ring->residue_ = Ring::make(p, r, RingKind::Field, fbar, options);
  }

  ring->build_tables();
  ring->set_and_verify_counts();
  if (kind == RingKind::GaloisRing) ring->build_teichmueller();
  return ring;
}

int Ring::one_index() const {
  // Coefficient vector (1, 0, ..., 0): the constant slot is most significant.
  long v = 1;
  for (int i = 1; i < k_; ++i) v *= m_;
  return static_cast<int>(v);
}

std::vector<int> Ring::coeffs_of(int index) const {
  std::vector<int> c(k_, 0);
  for (int i = k_ - 1; i >= 0; --i) {
    c[i] = index % m_;
    index /= m_;
  }
  return c;
}

namespace {
int index_of(const std::vector<int>& coeffs, int m) {
  long idx = 0;
  for (int c : coeffs) idx = idx * m + c;
  return static_cast<int>(idx);
}
} // namespace

void Ring::build_tables() {
  const long n = n_;
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);
  neg_.assign(n, 0);
  reduce_.assign(n, 0);
  unit_.assign(n, 0);

  if (kind_ == RingKind::DualNumbers) {
    // Element index = a_index * q + b_index over the component field GF(q).
    const Ring& f = *residue_;
    for (int i = 0; i < n_; ++i) {
      const int a1 = i / q_, b1 = i % q_;
      neg_[i] = f.neg(a1) * q_ + f.neg(b1);
      reduce_[i] = a1;
      unit_[i] = a1 != 0;
      for (int j = 0; j < n_; ++j) {
        const int a2 = j / q_, b2 = j % q_;
        add_[i * n_ + j] = f.add(a1, a2) * q_ + f.add(b1, b2);
        // (a1 + e b1)(a2 + e b2) = a1 a2 + e (a1 b2 + a2 b1)
        mul_[i * n_ + j] =
            f.mul(a1, a2) * q_ + f.add(f.mul(a1, b2), f.mul(a2, b1));
      }
    }
  } else {
    std::vector<Poly> polys(n);
    for (int i = 0; i < n_; ++i) {
      auto c = coeffs_of(i);
      polys[i] = trim(Poly(c.begin(), c.end()));
    }
    for (int i = 0; i < n_; ++i) {
      std::vector<int> negc = coeffs_of(i);
      for (auto& c : negc) c = mod(-c, m_);
      neg_[i] = index_of(negc, m_);
      std::vector<int> redc = coeffs_of(i);
      for (auto& c : redc) c = mod(c, p_);
      reduce_[i] = (kind_ == RingKind::Field) ? i : index_of(redc, p_);
      for (int j = 0; j <= i; ++j) {
        Poly s = poly_add(polys[i], polys[j], m_);
        Poly prod = poly_rem(poly_mul(polys[i], polys[j], m_), modulus_, m_);
        std::vector<int> sc(k_, 0), pc(k_, 0);
        for (size_t t = 0; t < s.size(); ++t) sc[t] = s[t];
        for (size_t t = 0; t < prod.size(); ++t) pc[t] = prod[t];
        add_[i * n_ + j] = add_[j * n_ + i] = index_of(sc, m_);
        mul_[i * n_ + j] = mul_[j * n_ + i] = index_of(pc, m_);
      }
      unit_[i] = reduce_[i] != 0;
    }
    if (kind_ == RingKind::Field)
      for (int i = 0; i < n_; ++i) unit_[i] = i != 0;
  }

  // Inverses by exhaustive scan; doubles as the unit-classification check.
  inv_.assign(n, -1);
  const int one = one_index();
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j)
      if (mul_[i * n_ + j] == one) {
        inv_[i] = j;
        break;
      }
    if ((inv_[i] >= 0) != static_cast<bool>(unit_[i]))
      throw std::logic_error("unit classification disagrees with invertibility");
    if (unit_[i])
      units_.push_back(i);
    else
      zero_divs_.push_back(i);
  }
}

void Ring::set_and_verify_counts() {
  counts_.total = n_;
  counts_.units = static_cast<long>(units_.size());
  counts_.zero_divisors = static_cast<long>(zero_divs_.size());
  const long q = q_;
  long expect_total = (kind_ == RingKind::Field) ? q : q * q;
  long expect_zd = (kind_ == RingKind::Field) ? 1 : q;
  if (counts_.total != expect_total || counts_.zero_divisors != expect_zd ||
      counts_.units != expect_total - expect_zd)
    throw std::logic_error("element counts disagree with closed forms");
}

void Ring::build_teichmueller() {
  // Fixed points of t -> t^q.
  std::vector<int> fixed;
  for (int i = 0; i < n_; ++i)
    if (pow(i, q_) == i) fixed.push_back(i);
  if (static_cast<int>(fixed.size()) != q_)
    throw std::logic_error("Teichmueller set has wrong cardinality");

  // Prefer the class of x as zeta (the default modulus guarantees it has
  // full order q-1); otherwise take the first full-order representative.
  Poly xrep = poly_rem(Poly{0, 1}, modulus_, m_);
  std::vector<int> xc(k_, 0);
  for (size_t t = 0; t < xrep.size(); ++t) xc[t] = xrep[t];
  int zeta = index_of(xc, m_);
  auto order_ok = [&](int g) {
    if (!unit_[g]) return false;
    int acc = g;
    for (int e = 1; e < q_ - 1; ++e) {
      if (acc == one().index()) return false;
      acc = mul(acc, g);
    }
    return acc == one().index();
  };
  if (!order_ok(zeta)) {
    zeta = -1;
    for (int i : fixed)
      if (order_ok(i)) {
        zeta = i;
        break;
      }
    if (zeta < 0) throw std::logic_error("no generator in the Teichmueller set");
  }

  Teichmueller t;
  t.zeta = element(zeta);
  t.elements.push_back(zero());
  int acc = one().index();
  for (int e = 0; e <= q_ - 2; ++e) {
    t.elements.push_back(element(acc));
    acc = mul(acc, zeta);
  }
  // Distinct residues enumerating GF(q).
  std::vector<char> seen(q_, 0);
  for (const Elem& e : t.elements) {
    int img = reduce_[e.index()];
    if (seen[img]) throw std::logic_error("Teichmueller residues collide");
    seen[img] = 1;
  }
  teich_ = std::move(t);
}

Elem Ring::element(int index) const {
  if (index < 0 || index >= n_) throw std::out_of_range("element index");
  return Elem(this, index);
}

Elem Ring::one() const { return Elem(this, one_index()); }

Elem Ring::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != k_)
    throw std::invalid_argument("expected " + std::to_string(k_) + " coefficients");
  std::vector<int> c(coeffs);
  for (auto& v : c) v = mod(v, m_);
  return Elem(this, index_of(c, m_));
}

Elem Ring::from_int(long value) const {
  std::vector<int> c(k_, 0);
  c[0] = mod(value, m_);
  return Elem(this, index_of(c, m_));
}

int Ring::inverse(int a) const {
  if (!unit_[a]) fail(Errc::NotAUnit, "zero divisor has no inverse");
  return inv_[a];
}

int Ring::pow(int base, long exponent) const {
  int result = one().index();
  int acc = base;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, acc);
    acc = mul(acc, acc);
    exponent >>= 1;
  }
  return result;
}

RingPtr Ring::residue_field() const {
  if (kind_ == RingKind::Field)
    return std::static_pointer_cast<const Ring>(shared_from_this());
  return residue_;
}

Elem Ring::reduce(const Elem& g) const {
  if (!same_ring(g.ring(), *this)) fail(Errc::MixedRings, "reduce of foreign element");
  const Ring* target = (kind_ == RingKind::Field) ? this : residue_.get();
  return Elem(target, reduce_[g.index()]);
}

Elem Ring::frobenius(const Elem& g) const {
  if (!same_ring(g.ring(), *this)) fail(Errc::MixedRings, "frobenius of foreign element");
  if (kind_ == RingKind::Field) return Elem(this, pow(g.index(), p_));
  if (kind_ == RingKind::GaloisRing) {
    auto [a, b] = decompose(g);
    int ap = pow(a.index(), p_);
    int bp = pow(b.index(), p_);
    return Elem(this, add(ap, mul(from_int(p_).index(), bp)));
  }
  fail(Errc::WrongRingKind, "frobenius requires a field or Galois ring");
}

const Teichmueller& Ring::teichmueller() const {
  if (kind_ != RingKind::GaloisRing)
    fail(Errc::WrongRingKind, "Teichmueller set requires a Galois ring");
  return *teich_;
}

std::pair<Elem, Elem> Ring::decompose(const Elem& g) const {
  if (kind_ != RingKind::GaloisRing)
    fail(Errc::WrongRingKind, "decompose requires a Galois ring");
  if (!same_ring(g.ring(), *this)) fail(Errc::MixedRings, "decompose of foreign element");
  // a = g^q; the difference g - a lies in pR, divide it by p coefficientwise
  // and project back into the Teichmueller set.
  const int a = pow(g.index(), q_);
  const int diff = sub(g.index(), a);
  std::vector<int> dc = coeffs_of(diff);
  for (auto& c : dc) {
    if (c % p_ != 0) throw std::logic_error("g - g^q not divisible by p");
    c /= p_;
  }
  const int h = index_of(dc, m_);
  const int b = pow(h, q_);
  if (add(a, mul(from_int(p_).index(), b)) != g.index())
    throw std::logic_error("Teichmueller decomposition failed to recompose");
  return {Elem(this, a), Elem(this, b)};
}

long Ring::multiplicative_order(const Elem& g) const {
  if (!unit_[g.index()]) fail(Errc::NotAUnit, "order of a zero divisor");
  long ord = 1;
  int acc = g.index();
  while (acc != one().index()) {
    acc = mul(acc, g.index());
    ++ord;
  }
  return ord;
}

std::string Ring::name() const {
  std::ostringstream os;
  switch (kind_) {
    case RingKind::Field: os << "GF(" << q_ << ")"; break;
    case RingKind::GaloisRing: os << "GR(" << p_ * p_ << "," << r_ << ")"; break;
    case RingKind::DualNumbers: os << "GF(" << q_ << ")+eGF(" << q_ << ")"; break;
  }
  return os.str();
}

bool same_ring(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  return a.kind() == b.kind() && a.p() == b.p() && a.r() == b.r() &&
         a.modulus() == b.modulus();
}

// ---------------------------------------------------------------------------
// Elem operators
// ---------------------------------------------------------------------------

namespace {
const Ring& common_ring(const Elem& a, const Elem& b) {
  if (!same_ring(a.ring(), b.ring()))
    fail(Errc::MixedRings, "operands belong to different rings");
  return a.ring();
}
} // namespace

std::vector<int> Elem::coeffs() const { return ring_->coeffs_of(index_); }
bool Elem::is_zero() const { return index_ == 0; }
bool Elem::is_one() const { return index_ == ring_->one().index(); }
bool Elem::is_unit() const { return ring_->unit(index_); }

Elem Elem::operator+(const Elem& other) const {
  const Ring& r = common_ring(*this, other);
  return Elem(&r, r.add(index_, other.index_));
}
Elem Elem::operator-(const Elem& other) const {
  const Ring& r = common_ring(*this, other);
  return Elem(&r, r.sub(index_, other.index_));
}
Elem Elem::operator*(const Elem& other) const {
  const Ring& r = common_ring(*this, other);
  return Elem(&r, r.mul(index_, other.index_));
}
Elem Elem::operator-() const { return Elem(ring_, ring_->neg(index_)); }
Elem Elem::inverse() const { return Elem(ring_, ring_->inverse(index_)); }
Elem Elem::pow(long exponent) const { return Elem(ring_, ring_->pow(index_, exponent)); }

} // namespace hjelm
