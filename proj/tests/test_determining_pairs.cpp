#include <doctest.h>

#include <algorithm>

#include "placefn/determining_pair.hpp"

using namespace placefn;

namespace {

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

// Hand-built extension of left-zero on {a, b, e1, e2}: x o_i y = x except
// that e_i is neutral on the left at its own slot.
UnitaryExtension left_zero_extension() {
  const std::size_t k = 4;
  std::vector<OpTable> tables;
  for (Elem sel : {Elem{2}, Elem{3}}) {
    OpTable t(k * k);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y)
        t[x * k + y] = (x == sel) ? static_cast<Elem>(y) : static_cast<Elem>(x);
    tables.push_back(std::move(t));
  }
  return UnitaryExtension{MultiSemigroup(make_carrier({"a", "b", "e1", "e2"}), std::move(tables)),
                          {2, 3},
                          {0, 1}};
}

PartialEquivalence singletons(const CarrierPtr& over) {
  std::vector<std::vector<Elem>> classes;
  for (std::size_t x = 0; x < over->size(); ++x) classes.push_back({static_cast<Elem>(x)});
  return PartialEquivalence(over, std::move(classes));
}

}  // namespace

TEST_CASE("partial equivalences are disjoint nonempty classes") {
  auto c = make_carrier(3);
  PartialEquivalence pe(c, {{0, 1}, {2}});
  CHECK(pe.related(0, 1));
  CHECK(!pe.related(0, 2));
  CHECK(pe.in_domain(2));
  CHECK(pe.class_of(1) == std::size_t{0});

  CHECK_THROWS_AS(PartialEquivalence(c, {{0}, {0}}), Error);
  CHECK_THROWS_AS(PartialEquivalence(c, {{}}), Error);

  PartialEquivalence partial(c, {{0}});
  CHECK(!partial.in_domain(1));
  CHECK(!partial.related(1, 1));
}

TEST_CASE("unitary extension validation") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  CHECK_NOTHROW(check_unitary_extension(base, ext));

  // Selector inside the base image.
  UnitaryExtension bad1 = ext;
  bad1.embedding = {0, 2};
  CHECK_THROWS_AS(check_unitary_extension(base, bad1), Error);

  // Broken selector law: claim the selectors in swapped order, so the
  // element named e2 must be neutral at slot 1 and is not.
  UnitaryExtension bad2 = ext;
  bad2.selectors = {3, 2};
  CHECK_THROWS_AS(check_unitary_extension(base, bad2), Error);

  // Non-generating carrier: add an unreachable element.
  {
    const std::size_t k = 5;
    std::vector<OpTable> tables;
    for (Elem sel : {Elem{2}, Elem{3}}) {
      OpTable t(k * k);
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
          t[x * k + y] = (x == sel) ? static_cast<Elem>(y) : static_cast<Elem>(x);
      tables.push_back(std::move(t));
    }
    UnitaryExtension bad3{MultiSemigroup(make_carrier({"a", "b", "e1", "e2", "z"}), tables),
                          {2, 3},
                          {0, 1}};
    CHECK_THROWS_AS(check_unitary_extension(base, bad3), Error);
  }
}

TEST_CASE("singleton classes with empty W validate") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  DeterminingPair dp{ext, singletons(ext.algebra.carrier()), {}};
  DeterminingPairReport report = validate_determining_pair(base, dp);
  CHECK(report.all_pass());
  CHECK(report.note == std::string(kSelectorSlotReading));
}

TEST_CASE("a selector in W breaks the second axiom") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  DeterminingPair dp{ext, singletons(ext.algebra.carrier()), {2}};
  DeterminingPairReport report = validate_determining_pair(base, dp);
  CHECK(!report.axiom[1].holds);
}

TEST_CASE("W must be one relation class") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  // {a, b} is not a class of the all-singleton relation.
  DeterminingPair dp{ext, singletons(ext.algebra.carrier()), {0, 1}};
  DeterminingPairReport report = validate_determining_pair(base, dp);
  CHECK(!report.axiom[4].holds);
}

TEST_CASE("W's base part must be an l-ideal") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  // {a} is a class, meets the base, but left-zero rejects singleton ideals.
  DeterminingPair dp{ext, singletons(ext.algebra.carrier()), {0}};
  DeterminingPairReport report = validate_determining_pair(base, dp);
  CHECK(report.axiom[1].holds);
  CHECK(!report.axiom[4].holds);
}

TEST_CASE("missing domain elements break the first axiom") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  DeterminingPair dp{ext, PartialEquivalence(ext.algebra.carrier(), {{0}, {2}, {3}}), {}};
  DeterminingPairReport report = validate_determining_pair(base, dp);
  CHECK(!report.axiom[0].holds);
}

TEST_CASE("decompose splits the left-zero faithful realization exactly") {
  auto base = left_zero();
  Representation rep = faithful_representation(base);
  DecomposeResult d = decompose(rep);

  CHECK(d.union_matches);
  CHECK(!d.mismatch);
  CHECK(d.family.size() == 16);  // one pair per point tuple
  for (const PointDecomposition& p : d.family) CHECK(p.contained);
  for (std::size_t g = 0; g < base.size(); ++g)
    CHECK(d.union_assignment[g] == rep.of(static_cast<Elem>(g)));

  // Every emitted pair is a valid determining pair of the base algebra.
  for (const PointDecomposition& p : d.family)
    CHECK(validate_determining_pair(base, p.pair).all_pass());

  // Each member realization satisfies the homomorphism law on its own.
  for (const PointDecomposition& p : d.family) CHECK(verify_representation(p.simplest).ok);

  // The value equivalence at each point is v-regular on the extension.
  const MultiSemigroup& ea = d.extension.algebra;
  for (const Tuple& pt : {Tuple{0, 0}, Tuple{1, 2}}) {
    std::map<Elem, std::vector<Elem>> by_value;
    for (std::size_t i = 0; i < d.extension_functions.size(); ++i)
      by_value[*d.extension_functions[i].at(pt)].push_back(static_cast<Elem>(i));
    std::set<std::pair<Elem, Elem>> pairs;
    for (const auto& [v, members] : by_value)
      for (Elem x : members)
        for (Elem y : members) pairs.emplace(x, y);
    CHECK(is_v_regular(BinaryRelation(ea.carrier(), std::move(pairs)), ea).holds);
  }
}

TEST_CASE("decompose splits the right-zero faithful realization exactly") {
  auto base = right_zero();
  Representation rep = faithful_representation(base);
  DecomposeResult d = decompose(rep);
  CHECK(d.union_matches);
  for (const PointDecomposition& p : d.family)
    CHECK(validate_determining_pair(base, p.pair).all_pass());
}

TEST_CASE("decompose of a total realization never marks exceptions on base points") {
  auto base = left_zero();
  Representation rep = totalize(faithful_representation(base));
  DecomposeResult d = decompose(rep);
  CHECK(d.union_matches);
  // At point tuples over the original carrier every member is defined, so W
  // only collects composites that pass through the added sentinel.
  for (const PointDecomposition& p : d.family) {
    bool base_in_w = false;
    for (Elem w : p.pair.exceptional)
      if (std::find(p.pair.extension.embedding.begin(), p.pair.extension.embedding.end(), w) !=
          p.pair.extension.embedding.end())
        base_in_w = true;
    CHECK(!base_in_w);
  }
}

TEST_CASE("decompose of the one-element algebra is immediate") {
  auto base = one_element();
  Representation rep = faithful_representation(base);
  DecomposeResult d = decompose(rep);
  CHECK(d.union_matches);
  for (const PointDecomposition& p : d.family)
    CHECK(validate_determining_pair(base, p.pair).all_pass());
}

TEST_CASE("splitting a produced class is rejected") {
  auto base = right_zero();
  Representation rep = faithful_representation(base);
  DecomposeResult d = decompose(rep);

  // Where both embedded elements share one value class, pulling one of them
  // out breaks the chain axioms: a chain ending in b reaches the class of
  // the slot selector while the seeds' results now straddle the split.
  bool found_reject = false;
  for (const PointDecomposition& p : d.family) {
    const auto emb = p.pair.extension.embedding;
    auto ca = p.pair.classes.class_of(emb[0]);
    auto cb = p.pair.classes.class_of(emb[1]);
    if (!ca || !cb || *ca != *cb) continue;
    std::vector<std::vector<Elem>> split{{emb[0]}};
    for (std::size_t c = 0; c < p.pair.classes.class_count(); ++c) {
      std::vector<Elem> members;
      for (Elem m : p.pair.classes.class_members(c))
        if (m != emb[0]) members.push_back(m);
      if (!members.empty()) split.push_back(std::move(members));
    }
    DeterminingPair tampered{p.pair.extension,
                             PartialEquivalence(p.pair.extension.algebra.carrier(), split),
                             p.pair.exceptional};
    if (!validate_determining_pair(base, tampered).all_pass()) found_reject = true;
  }
  CHECK(found_reject);
}

TEST_CASE("singleton classes expose a closed-condition failure") {
  // Extension of the mod-2 addition pair with adjoined selectors:
  //   x o_i y = x + y on the base, e_i neutral at slot i, e_k (k != i)
  //   absorbing on the left and dominating on the right.
  const std::size_t k = 4;  // 0, 1, e1, e2
  std::vector<OpTable> tables;
  for (Elem sel : {Elem{2}, Elem{3}}) {
    OpTable t(k * k);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        Elem r;
        if (x == sel) r = static_cast<Elem>(y);
        else if (x >= 2) r = static_cast<Elem>(x);        // other selector on the left
        else if (y == sel) r = static_cast<Elem>(x);      // own selector on the right
        else if (y >= 2) r = static_cast<Elem>(y);        // other selector dominates
        else r = static_cast<Elem>((x + y) % 2);
        t[x * k + y] = r;
      }
    tables.push_back(std::move(t));
  }
  OpTable z2{0, 1, 1, 0};
  MultiSemigroup base(make_carrier(2), {z2, z2});
  UnitaryExtension ext{MultiSemigroup(make_carrier({"0", "1", "e1", "e2"}), std::move(tables)),
                       {2, 3},
                       {0, 1}};
  CHECK_NOTHROW(check_unitary_extension(base, ext));

  DeterminingPair dp{ext, singletons(ext.algebra.carrier()), {}};
  DeterminingPairReport report = validate_determining_pair(base, dp);
  CHECK(report.axiom[0].holds);
  CHECK(report.axiom[1].holds);
  CHECK(report.axiom[2].holds);
  CHECK(!report.axiom[3].holds);  // two equal-residual chains, different sums
  CHECK(report.axiom[4].holds);
}

TEST_CASE("default indexing and the induced realization") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  DeterminingPair dp{ext, singletons(ext.algebra.carrier()), {}};
  ClassIndexing idx = default_indexing(base, dp);
  CHECK(idx.points->size() == 4);  // a, b, e1, e2 all indexable

  Representation r = simplest_representation(base, dp, idx);
  CHECK(verify_representation(r).ok);

  // One-element algebra, trivial pair: a single-point realization.
  auto one = one_element();
  const std::size_t k = 3;
  std::vector<OpTable> tables;
  for (Elem sel : {Elem{1}, Elem{2}}) {
    OpTable t(k * k);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y)
        t[x * k + y] = (x == sel) ? static_cast<Elem>(y) : static_cast<Elem>(x);
    tables.push_back(std::move(t));
  }
  UnitaryExtension oext{MultiSemigroup(make_carrier({"a", "e1", "e2"}), std::move(tables)),
                        {1, 2},
                        {0}};
  DeterminingPair odp{oext, singletons(oext.algebra.carrier()), {}};
  ClassIndexing oidx = default_indexing(one, odp);
  Representation orep = simplest_representation(one, odp, oidx);
  CHECK(verify_representation(orep).ok);
}

TEST_CASE("broken indexings are rejected") {
  auto base = left_zero();
  UnitaryExtension ext = left_zero_extension();
  DeterminingPair dp{ext, singletons(ext.algebra.carrier()), {}};

  // Two points on one class.
  ClassIndexing dup{make_carrier({"p", "q"}), {std::size_t{0}, std::size_t{0}}};
  CHECK_THROWS_AS(simplest_representation(base, dp, dup), Error);

  // Indexing W.
  DeterminingPair with_w{ext, singletons(ext.algebra.carrier()), {0}};
  ClassIndexing windex{make_carrier({"p"}), {std::size_t{0}}};
  CHECK_THROWS_AS(simplest_representation(base, with_w, windex), Error);
}

TEST_CASE("decompose rejects non-homomorphic input") {
  auto base = left_zero();
  auto pts = make_carrier(2);
  // x o y = x demands P(a) o P(b) = P(a); pick functions violating it.
  std::map<Tuple, Elem> m0{{Tuple{0, 0}, 1}};
  std::map<Tuple, Elem> m1{{Tuple{0, 0}, 0}};
  std::vector<PlaceFunction> fns{PlaceFunction(2, pts, m0), PlaceFunction(2, pts, m1)};
  Representation bad(base, pts, std::move(fns));
  REQUIRE(!verify_representation(bad).ok);
  CHECK_THROWS_AS(decompose(bad), Error);
}
