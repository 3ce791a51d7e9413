#include <doctest.h>

#include "placefn/relations.hpp"

using namespace placefn;

namespace {

MultiSemigroup z2add() {
  OpTable x{0, 1, 1, 0};
  return MultiSemigroup(make_carrier(2), {x, x});
}

MultiSemigroup left_zero() {
  OpTable t{0, 0, 1, 1};
  return MultiSemigroup(make_carrier({"a", "b"}), {t, t});
}

MultiSemigroup right_zero() {
  OpTable t{0, 1, 0, 1};
  return MultiSemigroup(make_carrier({"a", "b"}), {t, t});
}

MultiSemigroup one_element() {
  OpTable t{0};
  return MultiSemigroup(make_carrier({"a"}), {t, t});
}

BinaryRelation rel(const MultiSemigroup& alg, std::set<std::pair<Elem, Elem>> pairs) {
  return BinaryRelation(alg.carrier(), std::move(pairs));
}

}  // namespace

TEST_CASE("relation basics") {
  auto alg = left_zero();
  auto full = BinaryRelation::full(alg.carrier());
  auto diag = BinaryRelation::diagonal(alg.carrier());
  CHECK(full.size() == 4);
  CHECK(diag.size() == 2);
  CHECK(full.is_quasi_order());
  CHECK(diag.is_quasi_order());
  CHECK(!rel(alg, {{0, 1}}).reflexive());
  CHECK(rel(alg, {{0, 1}}).transitive());
  CHECK(!rel(alg, {{0, 1}, {1, 0}}).transitive());
  CHECK(full.intersect(diag) == diag);
}

TEST_CASE("whole carrier is an l-ideal") {
  auto alg = left_zero();
  CHECK(is_l_ideal({0, 1}, alg).holds);
}

TEST_CASE("left-zero rejects a singleton l-ideal") {
  auto alg = left_zero();
  LIdealCheck c = is_l_ideal({0}, alg);
  REQUIRE(!c.holds);
  // Result stays at the seed while a residual sits inside W.
  CHECK(c.witness->g == 1);
  CHECK(c.witness->result == 1);

  // The one-element algebra with W = G is vacuously fine.
  CHECK(is_l_ideal({0}, one_element()).holds);

  CHECK_THROWS_AS(is_l_ideal({}, alg), Error);
}

TEST_CASE("full relation is v-regular") {
  CHECK(is_v_regular(BinaryRelation::full(left_zero().carrier()), left_zero()).holds);
  CHECK(is_v_regular(BinaryRelation::full(z2add().carrier()), z2add()).holds);
}

TEST_CASE("diagonal v-regularity is the closed condition") {
  CHECK(is_v_regular(BinaryRelation::diagonal(left_zero().carrier()), left_zero()).holds);
  CHECK(is_v_regular(BinaryRelation::diagonal(right_zero().carrier()), right_zero()).holds);

  VRegularCheck c = is_v_regular(BinaryRelation::diagonal(z2add().carrier()), z2add());
  REQUIRE(!c.holds);
  CHECK(c.witness->state_u == c.witness->state_v);
  CHECK(c.witness->left != c.witness->right);
}

TEST_CASE("one-directional pair fails v-regularity on left-zero") {
  auto alg = left_zero();
  VRegularCheck c = is_v_regular(rel(alg, {{0, 1}}), alg);
  REQUIRE(!c.holds);
  // Premise met by states with residuals a and b, conclusion (g, g) missing.
  CHECK(c.witness->left == c.witness->right);
}

TEST_CASE("l-regularity by direct scan") {
  auto alg = z2add();
  CHECK(is_l_regular(BinaryRelation::diagonal(alg.carrier()), alg).holds);
  CHECK(is_l_regular(BinaryRelation::full(alg.carrier()), alg).holds);

  LRegularCheck c = is_l_regular(rel(alg, {{0, 1}}), alg);
  REQUIRE(!c.holds);
  // (0 o 1, 1 o 1) = (1, 0) escapes the relation.
  CHECK(c.witness->x == 0);
  CHECK(c.witness->y == 1);
  CHECK(c.witness->left == 1);
  CHECK(c.witness->right == 0);
}

TEST_CASE("v-negativity") {
  auto lz = left_zero();
  CHECK(is_v_negative(BinaryRelation::full(lz.carrier()), lz).holds);

  VNegativeCheck c = is_v_negative(BinaryRelation::diagonal(lz.carrier()), lz);
  REQUIRE(!c.holds);
  // Result is the seed, residual the operand; they differ somewhere.
  CHECK(c.witness->result != c.witness->residual);

  // Right-zero: every composite equals the last operand, which is also every
  // residual, so even the diagonal passes.
  auto rz = right_zero();
  CHECK(is_v_negative(BinaryRelation::diagonal(rz.carrier()), rz).holds);

  // Dropping one pair from the full relation is caught by the state scan.
  std::set<std::pair<Elem, Elem>> almost;
  for (Elem x : {0, 1})
    for (Elem y : {0, 1}) almost.emplace(x, y);
  almost.erase({0, 1});
  CHECK(!is_v_negative(rel(lz, std::move(almost)), lz).holds);
}

TEST_CASE("carrier mismatches are rejected") {
  auto lz = left_zero();
  auto other = BinaryRelation::full(make_carrier(3));
  CHECK_THROWS_AS(is_v_regular(other, lz), Error);
  CHECK_THROWS_AS(is_l_regular(other, lz), Error);
  CHECK_THROWS_AS(is_v_negative(other, lz), Error);
}
