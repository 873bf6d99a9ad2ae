#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hjelm/ring.hpp"

using namespace hjelm;

namespace {

// Independent classification oracle: an element is a unit iff some partner
// multiplies with it to 1. No residue shortcut.
long count_units_brute_force(const Ring& R) {
  long units = 0;
  for (int i = 0; i < R.size(); ++i)
    for (int j = 0; j < R.size(); ++j)
      if (R.mul(i, j) == R.one().index()) {
        ++units;
        break;
      }
  return units;
}

void check_ring_axioms(const Ring& R) {
  const int n = R.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CHECK(R.add(a, b) == R.add(b, a));
      CHECK(R.mul(a, b) == R.mul(b, a));
      CHECK(R.add(a, R.neg(a)) == 0);
      for (int c = 0; c < n; ++c) {
        CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
        CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
      }
    }
  CHECK(R.mul(R.one().index(), 1 % n) == 1 % n);
}

} // namespace

TEST_CASE("Z4 descriptor: 4 elements, 2 zero divisors, 2 units") {
  auto R = Ring::galois(2, 1);
  CHECK(R->name() == "GR(4,1)");
  CHECK(R->counts().total == 4);
  CHECK(R->counts().zero_divisors == 2);
  CHECK(R->counts().units == 2);
  CHECK(R->q() == 2);
}

TEST_CASE("GF(2) descriptor") {
  auto F = Ring::field(2, 1);
  CHECK(F->counts().total == 2);
  CHECK(F->counts().zero_divisors == 1);
  CHECK(F->counts().units == 1);
}

TEST_CASE("GR(9,2) counts match exhaustive classification") {
  auto R = Ring::galois(3, 2);
  CHECK(R->size() == 81);
  CHECK(R->counts().zero_divisors == 9);
  CHECK(R->counts().units == 72);
  CHECK(count_units_brute_force(*R) == 72);
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(Ring::galois(4, 1), Error);     // CompositeP
  CHECK_THROWS_AS(Ring::galois(1, 1), Error);
  try {
    Ring::galois(6, 1);
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CompositeP);
  }
  // x^2 + 1 is reducible over GF(2)
  try {
    Ring::make(2, 2, RingKind::GaloisRing, std::vector<int>{1, 0, 1});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReduciblePolynomial);
  }
  // fbar = x is irreducible but has no unit Teichmueller lift
  try {
    Ring::make(3, 1, RingKind::GaloisRing, std::vector<int>{0, 1});
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PolynomialNotDividingCyclotomic);
  }
  try {
    Ring::galois(2, 5); // q = 32 over the default cap
    FAIL("unreachable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RingTooLarge);
  }
}

TEST_CASE("basic arithmetic values") {
  auto Z4 = Ring::galois(2, 1);
  CHECK(Z4->mul(3, 3) == 1);
  CHECK(Z4->mul(2, 2) == 0);

  auto D = Ring::dual_numbers(2, 1);
  // e = (a,b) = (0,1): index 1
  Elem e = D->element(1);
  CHECK((e * e).is_zero());
  CHECK(e.is_zero_divisor());
  Elem one_plus_e = D->element(3);
  CHECK(one_plus_e.is_unit());

  // mixing rings is rejected
  CHECK_THROWS_AS((void)(Z4->element(1) * e), Error);
}

TEST_CASE("inversion") {
  auto Z4 = Ring::galois(2, 1);
  CHECK(Z4->element(3).inverse() == Z4->element(3));
  CHECK_THROWS_AS(Z4->element(2).inverse(), Error);
  try {
    Z4->element(2).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAUnit);
  }

  auto GR = Ring::galois(2, 2);
  Elem zeta = GR->teichmueller().zeta;
  CHECK(zeta.inverse() == zeta.pow(GR->q() - 2)); // order q-1 = 3
  // a * a^{-1} = 1 for every unit of several small rings
  for (auto R : {Ring::galois(2, 2), Ring::dual_numbers(3, 1), Ring::field(2, 2)})
    for (int u : R->unit_indices()) CHECK(R->mul(u, R->inverse(u)) == R->one().index());
}

TEST_CASE("unit / zero-divisor partition") {
  auto Z4 = Ring::galois(2, 1);
  CHECK(Z4->element(1).is_unit());
  CHECK(Z4->element(3).is_unit());
  CHECK(Z4->element(0).is_zero_divisor());
  CHECK(Z4->element(2).is_zero_divisor());

  auto GR = Ring::galois(2, 2);
  CHECK(static_cast<int>(GR->unit_indices().size()) == 12);
  CHECK(count_units_brute_force(*GR) == 12);

  // exactly one of the two predicates holds, sizes match the descriptor
  for (auto R : {Ring::galois(3, 1), Ring::dual_numbers(2, 2), Ring::field(5, 1)}) {
    long units = 0, zds = 0;
    for (int i = 0; i < R->size(); ++i) {
      Elem g = R->element(i);
      CHECK(g.is_unit() != g.is_zero_divisor());
      (g.is_unit() ? units : zds)++;
    }
    CHECK(units == R->counts().units);
    CHECK(zds == R->counts().zero_divisors);
  }
}

TEST_CASE("Teichmueller sets") {
  auto Z4 = Ring::galois(2, 1);
  auto& t4 = Z4->teichmueller();
  CHECK(t4.elements.size() == 2);
  CHECK(t4.elements[0].index() == 0);
  CHECK(t4.elements[1].index() == 1);

  auto Z9 = Ring::galois(3, 1);
  // Oracle: the cube-map fixed points of Z_9 are exactly {0, 1, 8}.
  std::set<int> fixed;
  for (int i = 0; i < 9; ++i)
    if (Z9->pow(i, 3) == i) fixed.insert(i);
  CHECK(fixed == std::set<int>{0, 1, 8});
  std::set<int> got;
  for (const Elem& e : Z9->teichmueller().elements) got.insert(e.index());
  CHECK(got == fixed);
  CHECK(Z9->teichmueller().zeta.index() == 8);

  auto GR = Ring::galois(2, 2);
  auto& t16 = GR->teichmueller();
  CHECK(t16.elements.size() == 4);
  std::set<int> residues;
  for (const Elem& e : t16.elements) residues.insert(GR->reduce(e).index());
  CHECK(residues.size() == 4); // pairwise distinct mod 2

  // t -> t^q is the identity on the set
  for (auto R : {Z4, Z9, GR})
    for (const Elem& t : R->teichmueller().elements)
      CHECK(t.pow(R->q()) == t);

  CHECK_THROWS_AS(Ring::field(2, 2)->teichmueller(), Error);
  try {
    Ring::dual_numbers(2, 1)->teichmueller();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongRingKind);
  }
}

TEST_CASE("Teichmueller decomposition g = a + p b") {
  auto Z4 = Ring::galois(2, 1);
  auto [a3, b3] = Z4->decompose(Z4->element(3));
  CHECK(a3.index() == 1);
  CHECK(b3.index() == 1);
  auto [a2, b2] = Z4->decompose(Z4->element(2));
  CHECK(a2.index() == 0);
  CHECK(b2.index() == 1);

  // Brute-force oracle over T x T fixes the expected pair for 5 in Z_9.
  auto Z9 = Ring::galois(3, 1);
  const auto& T = Z9->teichmueller().elements;
  Elem three = Z9->from_int(3);
  int hits = 0;
  std::pair<int, int> expected{-1, -1};
  for (const Elem& a : T)
    for (const Elem& b : T)
      if (a + three * b == Z9->element(5)) {
        expected = {a.index(), b.index()};
        ++hits;
      }
  CHECK(hits == 1); // uniqueness
  CHECK(expected == std::pair<int, int>{8, 8});
  auto [a5, b5] = Z9->decompose(Z9->element(5));
  CHECK(a5.index() == expected.first);
  CHECK(b5.index() == expected.second);

  // decompose inverts (a,b) -> a + p b on all of T x T
  for (auto R : {Z4, Z9, Ring::galois(2, 2)}) {
    Elem p = R->from_int(R->p());
    for (const Elem& a : R->teichmueller().elements)
      for (const Elem& b : R->teichmueller().elements) {
        auto [aa, bb] = R->decompose(a + p * b);
        CHECK(aa == a);
        CHECK(bb == b);
      }
  }
}

TEST_CASE("reduction modulo the maximal ideal") {
  auto Z4 = Ring::galois(2, 1);
  CHECK(Z4->reduce(Z4->element(3)).index() == 1);

  auto D = Ring::dual_numbers(2, 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(D->reduce(D->element(a * 2 + b)).index() == a);

  auto GR = Ring::galois(2, 2);
  Elem zbar = GR->reduce(GR->teichmueller().zeta);
  CHECK(GR->residue_field()->multiplicative_order(zbar) == 3); // primitive in GF(4)

  // surjective homomorphism with kernel of size q
  for (auto R : {Z4, Ring::galois(3, 2), Ring::dual_numbers(2, 2)}) {
    auto F = R->residue_field();
    std::set<int> image;
    long kernel = 0;
    for (int i = 0; i < R->size(); ++i) {
      const int img = R->reduce_index(i);
      image.insert(img);
      if (img == 0) ++kernel;
    }
    CHECK(static_cast<int>(image.size()) == F->size());
    CHECK(kernel == R->q());
    for (int i = 0; i < R->size(); ++i)
      for (int j = 0; j < R->size(); ++j) {
        CHECK(R->reduce_index(R->add(i, j)) == F->add(R->reduce_index(i), R->reduce_index(j)));
        CHECK(R->reduce_index(R->mul(i, j)) == F->mul(R->reduce_index(i), R->reduce_index(j)));
      }
  }
}

TEST_CASE("ring axioms hold exhaustively on the small rings") {
  check_ring_axioms(*Ring::galois(2, 1));
  check_ring_axioms(*Ring::galois(3, 1));
  check_ring_axioms(*Ring::galois(2, 2));
  check_ring_axioms(*Ring::dual_numbers(2, 1));
}

TEST_CASE("element order is lexicographic on coefficient vectors") {
  for (auto R : {Ring::galois(2, 2), Ring::dual_numbers(2, 2), Ring::field(3, 2)})
    for (int i = 0; i + 1 < R->size(); ++i)
      CHECK(R->coeffs_of(i) < R->coeffs_of(i + 1));
}

TEST_CASE("frobenius") {
  auto F = Ring::field(2, 2);
  for (int i = 0; i < F->size(); ++i) {
    Elem x = F->element(i);
    CHECK(F->frobenius(F->frobenius(x)) == x); // order r
  }
  auto GR = Ring::galois(2, 2);
  Elem zeta = GR->teichmueller().zeta;
  CHECK(GR->frobenius(zeta) == zeta * zeta);
  // additive and multiplicative on all pairs
  for (int i = 0; i < GR->size(); ++i)
    for (int j = 0; j < GR->size(); ++j) {
      Elem a = GR->element(i), b = GR->element(j);
      CHECK(GR->frobenius(a + b) == GR->frobenius(a) + GR->frobenius(b));
      CHECK(GR->frobenius(a * b) == GR->frobenius(a) * GR->frobenius(b));
    }
  CHECK_THROWS_AS(Ring::dual_numbers(2, 1)->frobenius(Ring::dual_numbers(2, 1)->one()),
                  Error);
}

TEST_CASE("Galois rings from different valid moduli are isomorphic") {
  // The Teichmueller-indexed bijection (a = zeta_A^i, b = zeta_A^j) ->
  // (zeta_B^i, zeta_B^j) must transport both operation tables.
  auto pairs = std::vector<std::pair<RingPtr, RingPtr>>{
      {Ring::galois(2, 1), Ring::make(2, 1, RingKind::GaloisRing, std::vector<int>{1, 1})},
      {Ring::galois(2, 2), Ring::make(2, 2, RingKind::GaloisRing, std::vector<int>{3, 1, 1})},
      {Ring::galois(3, 1), Ring::make(3, 1, RingKind::GaloisRing, std::vector<int>{8, 1})},
  };
  for (auto& [A, B] : pairs) {
    REQUIRE(A->size() == B->size());
    // forward maps indexed by Teichmueller pairs
    std::vector<int> phi(A->size(), -1);
    const auto& TA = A->teichmueller().elements;
    const auto& TB = B->teichmueller().elements;
    Elem pA = A->from_int(A->p()), pB = B->from_int(B->p());
    for (size_t i = 0; i < TA.size(); ++i)
      for (size_t j = 0; j < TA.size(); ++j) {
        Elem ga = TA[i] + pA * TA[j];
        Elem gb = TB[i] + pB * TB[j];
        phi[ga.index()] = gb.index();
      }
    for (int v : phi) CHECK(v >= 0); // bijection
    for (int x = 0; x < A->size(); ++x)
      for (int y = 0; y < A->size(); ++y) {
        CHECK(phi[A->add(x, y)] == B->add(phi[x], phi[y]));
        CHECK(phi[A->mul(x, y)] == B->mul(phi[x], phi[y]));
      }
  }
}

TEST_CASE("stored Galois modulus divides x^{q-1}-1 and reduces to fbar") {
  for (auto R : {Ring::galois(2, 1), Ring::galois(2, 2), Ring::galois(3, 2),
                 Ring::galois(2, 3)}) {
    const auto& f = R->modulus();
    REQUIRE(static_cast<int>(f.size()) == R->r() + 1);
    CHECK(f.back() == 1);
    // zeta = class of x has full order q-1 under the default modulus
    CHECK(R->multiplicative_order(R->teichmueller().zeta) == R->q() - 1);
    // remainder of x^{q-1} - 1 by f over Z_{p^2}, computed longhand
    const int m2 = R->p() * R->p();
    std::vector<long> a(R->q(), 0);
    a[0] = m2 - 1;
    a[R->q() - 1] += 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= R->r(); --d) {
      const long lead = a[d] % m2;
      for (int i = 0; i <= R->r(); ++i) {
        long& slot = a[d - R->r() + i];
        slot = ((slot - lead * f[i]) % m2 + m2) % m2;
      }
    }
    for (int i = 0; i < R->r(); ++i) CHECK(a[i] % m2 == 0);
  }
}

TEST_CASE("default moduli are deterministic") {
  CHECK(Ring::galois(2, 1)->modulus() == std::vector<int>{3, 1});
  CHECK(Ring::galois(2, 2)->modulus() == std::vector<int>{1, 1, 1});
  CHECK(Ring::galois(3, 1)->modulus() == std::vector<int>{1, 1});
  CHECK(Ring::field(2, 3)->modulus() == std::vector<int>{1, 0, 1, 1});
  CHECK(Ring::galois(2, 2)->modulus() == Ring::galois(2, 2)->modulus());
}
