#include <doctest.h>

#include "placefn/census.hpp"
#include "placefn/io.hpp"

using namespace placefn;

TEST_CASE("associative table enumeration") {
  CHECK(associative_tables(1).size() == 1);
  CHECK(associative_tables(2).size() == 8);
  CHECK(associative_tables(3).size() == 113);
  CHECK_THROWS_AS(associative_tables(3, 50), Error);
}

TEST_CASE("canonical form is permutation invariant") {
  // (constant 0, meet) relabeled by the swap is (constant 1, join).
  std::vector<OpTable> a{{0, 0, 0, 0}, {0, 0, 0, 1}};
  std::vector<OpTable> b{{1, 1, 1, 1}, {0, 1, 1, 1}};
  CHECK(canonical_form(2, a) == canonical_form(2, b));
  CHECK(algebra_id(2, a) == algebra_id(2, b));

  std::vector<OpTable> lz{{0, 0, 1, 1}, {0, 0, 1, 1}};
  std::vector<OpTable> rz{{0, 1, 0, 1}, {0, 1, 0, 1}};
  CHECK(canonical_form(2, lz) != canonical_form(2, rz));
}

TEST_CASE("order-2 census against the chain oracle") {
  CensusOptions opts;
  opts.oracle = true;
  auto records = census(2, 2, opts);
  REQUIRE(records.size() == 64);

  std::size_t representable = 0;
  for (const CensusRecord& r : records) {
    REQUIRE(r.oracle_agrees.has_value());
    CHECK(*r.oracle_agrees);
    if (r.representable) {
      ++representable;
      CHECK(r.state_count > 0);
    } else {
      REQUIRE(r.violation.has_value());
    }
  }
  CHECK(representable == 46);

  // The mod-2 addition pair shows up as non-representable.
  const auto tables = associative_tables(2);
  std::size_t xor_idx = tables.size();
  for (std::size_t i = 0; i < tables.size(); ++i)
    if (tables[i] == OpTable{0, 1, 1, 0}) xor_idx = i;
  REQUIRE(xor_idx < tables.size());
  bool found = false;
  for (const CensusRecord& r : records)
    if (r.table_indices == std::vector<std::size_t>{xor_idx, xor_idx}) {
      found = true;
      CHECK(!r.representable);
    }
  CHECK(found);
}

TEST_CASE("census dedup keeps canonical representatives") {
  CensusOptions opts;
  opts.dedup = true;
  auto records = census(2, 2, opts);
  CHECK(records.size() == 34);
  std::size_t representable = 0;
  for (const CensusRecord& r : records) representable += r.representable;
  CHECK(representable == 25);
}

TEST_CASE("census trivial and refused sizes") {
  auto one = census(2, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].representable);

  CensusOptions tight;
  tight.max_candidates = 10;
  CHECK_THROWS_AS(census(2, 2, tight), Error);
}

TEST_CASE("algebra files") {
  const std::string text = R"({
    "schema": 1, "n": 2, "elements": ["a", "b"],
    "tables": [[[0,0],[1,1]], [[0,0],[1,1]]]
  })";
  LoadedAlgebra la = parse_algebra(text);
  REQUIRE(la.algebra.has_value());
  CHECK(la.algebra->op_count() == 2);
  CHECK(la.algebra->apply(1, 0, 1) == 0);

  // Round trip.
  LoadedAlgebra back = parse_algebra(algebra_to_json(*la.algebra));
  REQUIRE(back.algebra.has_value());
  CHECK(*back.algebra == *la.algebra);

  // Non-associative tables load into a failure report.
  const std::string bad = R"({"n": 1, "elements": ["a","b"],
                              "tables": [[[1,0],[0,0]]]})";
  LoadedAlgebra lb = parse_algebra(bad);
  CHECK(!lb.algebra.has_value());
  REQUIRE(lb.failure.has_value());

  CHECK_THROWS_AS(parse_algebra("{"), Error);
  CHECK_THROWS_AS(parse_algebra(R"({"n": 2, "elements": ["a"]})"), Error);
  CHECK_THROWS_AS(parse_algebra(R"({"n": 2, "elements": ["a"], "tables": [[[9]],[[0]]]})"), Error);
}

TEST_CASE("function-set files") {
  const std::string text = R"({
    "arity": 2, "carrier": ["0", "1"],
    "functions": {
      "f": [[["0","0"], "1"]],
      "g": [[["0","0"], "1"], [["1","1"], "0"]]
    }
  })";
  FunctionSet fs = parse_function_set(text);
  CHECK(fs.arity == 2);
  REQUIRE(fs.functions.size() == 2);
  CHECK(fs.functions[0].name == "f");
  CHECK(fs.functions[0].fn.at(Tuple{0, 0}) == Elem{1});

  FunctionSet back = parse_function_set(function_set_to_json(fs));
  CHECK(back.functions.size() == 2);
  CHECK(back.functions[1].fn == fs.functions[1].fn);

  // Duplicate argument tuples are a load error.
  const std::string dup = R"({
    "arity": 2, "carrier": ["0", "1"],
    "functions": { "f": [[["0","0"], "1"], [["0","0"], "0"]] }
  })";
  CHECK_THROWS_AS(parse_function_set(dup), Error);
}

TEST_CASE("representation files round trip") {
  OpTable lzt{0, 0, 1, 1};
  MultiSemigroup lz(make_carrier({"a", "b"}), {lzt, lzt});
  Representation rep = faithful_representation(lz);

  Representation back = parse_representation(representation_to_json(rep));
  CHECK(back.algebra() == rep.algebra());
  CHECK(*back.points() == *rep.points());
  for (Elem g = 0; g < 2; ++g) CHECK(back.of(g) == rep.of(g));
  CHECK(verify_representation(back).ok);
}

TEST_CASE("relation files") {
  auto c = make_carrier({"a", "b"});
  BinaryRelation rel = parse_relation(R"({"pairs": [["a","b"], ["a","a"]]})", c);
  CHECK(rel.size() == 2);
  CHECK(rel.contains(0, 1));
  BinaryRelation back = parse_relation(relation_to_json(rel), c);
  CHECK(back == rel);
  CHECK_THROWS_AS(parse_relation(R"({"pairs": [["a","z"]]})", c), Error);
}

TEST_CASE("determining pair files round trip") {
  OpTable lzt{0, 0, 1, 1};
  MultiSemigroup lz(make_carrier({"a", "b"}), {lzt, lzt});
  DecomposeResult d = decompose(faithful_representation(lz));
  const DeterminingPair& dp = d.family.front().pair;

  DeterminingPair back = parse_determining_pair(determining_pair_to_json(dp, lz), lz);
  CHECK(back.extension.algebra == dp.extension.algebra);
  CHECK(back.extension.selectors == dp.extension.selectors);
  CHECK(back.extension.embedding == dp.extension.embedding);
  CHECK(back.classes.classes() == dp.classes.classes());
  CHECK(back.exceptional == dp.exceptional);
  CHECK(validate_determining_pair(lz, back).all_pass());
}
