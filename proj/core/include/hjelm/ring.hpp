#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hjelm {

// The three finite local rings the library works over:
//   Field       GF(q), q = p^r            (maximal ideal {0})
//   GaloisRing  GR(p^2,r) = Z_{p^2}[x]/(f), characteristic p^2
//   DualNumbers GF(q) + eGF(q) = GF(q)[x]/(x^2), e^2 = 0
enum class RingKind { Field, GaloisRing, DualNumbers };

const char* to_string(RingKind kind);

enum class Errc {
  CompositeP,
  ReduciblePolynomial,
  PolynomialNotDividingCyclotomic,
  NotAUnit,
  MixedRings,
  WrongRingKind,
  RingTooLarge,
  LineNotInPlane,
  PointsNotInPlane,
  AllCoefficientsNonUnit,
  NotAProperConic,
  UnsupportedOrder,
  UnsupportedDimension,
  DimensionMismatch,
  IncompleteMubSet,
  ImproperConic,
  StructuralMismatch,
  ConfigParse,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Element of a finite local ring. A lightweight value: the owning ring plus
/// the rank of the element's coefficient vector in lexicographic order.
/// Elements are totally ordered by that rank; all enumerations use it.
class Elem {
public:
  Elem() = default;
  Elem(const Ring* ring, int index) : ring_(ring), index_(index) {}

  int index() const { return index_; }
  const Ring& ring() const { return *ring_; }
  bool valid() const { return ring_ != nullptr; }

  std::vector<int> coeffs() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  bool is_zero_divisor() const { return !is_unit(); }

  Elem operator+(const Elem& other) const;
  Elem operator-(const Elem& other) const;
  Elem operator*(const Elem& other) const;
  Elem operator-() const;
  Elem inverse() const;          // throws NotAUnit on zero divisors
  Elem pow(long exponent) const; // exponent >= 0

  friend bool operator==(const Elem& a, const Elem& b) {
    return a.index_ == b.index_;
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  friend bool operator<(const Elem& a, const Elem& b) {
    return a.index_ < b.index_;
  }

private:
  const Ring* ring_ = nullptr;
  int index_ = 0;
};

struct RingCounts {
  long total = 0;
  long zero_divisors = 0;
  long units = 0;
};

/// The multiplicative representatives {0, 1, zeta, ..., zeta^{q-2}}:
/// the fixed points of t -> t^q, with zeta of multiplicative order q-1.
struct Teichmueller {
  Elem zeta;
  std::vector<Elem> elements;
};

struct RingOptions {
  int max_q = 16; // residue field size cap; everything here is exhaustive
};

/// Immutable descriptor + arithmetic tables for one finite local ring.
/// Elements are indexed 0..size()-1 in lexicographic coefficient order, so
/// all operations are table lookups. Construction verifies the unit /
/// zero-divisor partition against the closed-form counts by exhaustively
/// searching for inverses.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  /// Builds a ring. When `modulus` is omitted a default is selected: the
  /// lexicographically smallest (constant coefficient first) monic degree-r
  /// polynomial over GF(p) that is both irreducible and primitive, Hensel-
  /// lifted to Z_{p^2}[x] for GaloisRing so that the lift divides x^{q-1}-1.
  /// A user-supplied GaloisRing modulus is kept verbatim when it already
  /// divides x^{q-1}-1; otherwise its mod-p reduction is re-lifted.
  static RingPtr make(int p, int r, RingKind kind,
                      const std::optional<std::vector<int>>& modulus = {},
                      const RingOptions& options = {});
  static RingPtr field(int p, int r, const RingOptions& options = {});
  static RingPtr galois(int p, int r, const RingOptions& options = {});
  static RingPtr dual_numbers(int p, int r, const RingOptions& options = {});

  RingKind kind() const { return kind_; }
  int p() const { return p_; }
  int r() const { return r_; }
  int q() const { return q_; }
  /// Stored monic modulus, constant coefficient first, leading 1 included.
  /// Coefficients live in Z_{p^2} for GaloisRing, GF(p) otherwise.
  const std::vector<int>& modulus() const { return modulus_; }
  const RingCounts& counts() const { return counts_; }
  int size() const { return n_; }
  /// Residues per coefficient slot: p^2 for GaloisRing, p otherwise.
  int coeff_modulus() const { return m_; }
  /// Coefficient slots per element: r, or 2r for DualNumbers (a || b).
  int coeff_count() const { return k_; }
  std::string name() const;

  Elem element(int index) const;
  Elem zero() const { return element(0); }
  Elem one() const;
  Elem from_coeffs(const std::vector<int>& coeffs) const;
  Elem from_int(long value) const; // value * 1, reduced

  std::vector<int> coeffs_of(int index) const;
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inverse(int a) const;
  bool unit(int a) const { return unit_[a]; }
  int pow(int base, long exponent) const;

  /// Ascending element indices of the maximal ideal / the unit group.
  const std::vector<int>& zero_divisor_indices() const { return zero_divs_; }
  const std::vector<int>& unit_indices() const { return units_; }

  /// Reduction modulo the maximal ideal, onto residue_field().
  RingPtr residue_field() const;
  Elem reduce(const Elem& g) const;
  int reduce_index(int index) const { return reduce_[index]; }

  /// Frobenius: g -> g^p on Field; a + pb -> a^p + p b^p on GaloisRing.
  Elem frobenius(const Elem& g) const;

  const Teichmueller& teichmueller() const; // GaloisRing only
  /// Unique decomposition g = a + p*b with a, b Teichmueller (GaloisRing).
  std::pair<Elem, Elem> decompose(const Elem& g) const;
  long multiplicative_order(const Elem& g) const; // throws NotAUnit on zero divisors

  /// Lex-smallest monic primitive irreducible of degree r over GF(p),
  /// constant coefficient first, leading 1 included.
  static std::vector<int> default_field_modulus(int p, int r);
  /// Characteristic-p^2 lift of an irreducible fbar over GF(p): monic,
  /// congruent to fbar mod p, divides x^{q-1}-1 in Z_{p^2}[x].
  static std::vector<int> lift_modulus(int p, const std::vector<int>& fbar);

private:
  Ring() = default;
  void build_tables();
  void set_and_verify_counts();
  void build_teichmueller();
  int one_index() const;

  RingKind kind_ = RingKind::Field;
  int p_ = 0, r_ = 0, q_ = 0;
  int n_ = 0; // #_t
  int m_ = 0; // coeff modulus
  int k_ = 0; // coeff slots
  std::vector<int> modulus_;
  RingCounts counts_;
  std::vector<int> add_, mul_, neg_, inv_, reduce_;
  std::vector<char> unit_;
  std::vector<int> zero_divs_, units_;
  RingPtr residue_; // null for Field (the ring is its own residue field)
  std::optional<Teichmueller> teich_;
};

/// Structural identity: same kind, parameters and stored modulus. Elements
/// of structurally identical rings share tables and may be mixed.
bool same_ring(const Ring& a, const Ring& b);

/// Irreducibility over GF(p) by trial division; f monic, constant first.
bool polynomial_irreducible(const std::vector<int>& f, int p);

} // namespace hjelm
