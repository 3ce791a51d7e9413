#include <doctest.h>

#include "placefn/mann.hpp"
#include "placefn/place_function.hpp"

using namespace placefn;

namespace {

PlaceFunction fn(std::size_t arity, CarrierPtr c, std::initializer_list<std::pair<Tuple, Elem>> es) {
  std::map<Tuple, Elem> m;
  for (const auto& [t, v] : es) m.emplace(t, v);
  return PlaceFunction(arity, std::move(c), std::move(m));
}

// Every partial 2-place function on a 2-element carrier, by definedness mask
// and value choice.
std::vector<PlaceFunction> all_partial_2x2(const CarrierPtr& c) {
  std::vector<Tuple> pts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::vector<PlaceFunction> out;
  for (int code = 0; code < 81; ++code) {
    int rest = code;
    std::map<Tuple, Elem> m;
    for (const Tuple& t : pts) {
      int digit = rest % 3;
      rest /= 3;
      if (digit) m.emplace(t, static_cast<Elem>(digit - 1));
    }
    out.emplace_back(2, c, std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("carrier interning and validation") {
  Carrier c({"a", "b", "c"});
  CHECK(c.size() == 3);
  CHECK(c.require("b") == 1);
  CHECK(c.name(2) == "c");
  CHECK(!c.find("d"));
  CHECK_THROWS_AS(c.require("d"), Error);
  CHECK_THROWS_AS(Carrier({}), Error);
  CHECK_THROWS_AS(Carrier({"a", "a"}), Error);
}

TEST_CASE("tuple packing and enumeration") {
  Tuple t{1, 0, 2};
  CHECK(t.size() == 3);
  CHECK(t[2] == 2);
  CHECK(t.with(1, 3)[1] == 3);
  CHECK(t.with(1, 3)[0] == 1);

  std::size_t count = 0;
  Tuple last;
  for_each_tuple(3, 2, [&](const Tuple& u) {
    ++count;
    last = u;
  });
  CHECK(count == 9);
  CHECK(last == Tuple{2, 2});
}

TEST_CASE("domain reads off the key set") {
  auto c = make_carrier(2);
  auto f = fn(2, c, {{Tuple{0, 0}, 1}});
  CHECK(domain(f) == std::set<Tuple>{Tuple{0, 0}});

  CHECK(domain(projector(2, 1, c)).size() == 4);
  CHECK(domain(fn(2, c, {})).empty());
}

TEST_CASE("includes is subset-and-agree") {
  auto c = make_carrier(2);
  auto f = fn(2, c, {{Tuple{0, 0}, 1}});
  auto g = fn(2, c, {{Tuple{0, 0}, 1}, {Tuple{1, 1}, 0}});
  auto h = fn(2, c, {{Tuple{0, 0}, 0}, {Tuple{1, 1}, 0}});
  CHECK(includes(f, g));
  CHECK(!includes(g, f));
  CHECK(!includes(f, h));
  CHECK(includes(f, f));

  auto c3 = make_carrier(3);
  CHECK_THROWS_AS(includes(f, fn(2, c3, {})), Error);
  CHECK_THROWS_AS(includes(f, fn(1, c, {})), Error);
}

TEST_CASE("restrict_to keeps listed keys only") {
  auto c = make_carrier(2);
  auto f = fn(2, c, {{Tuple{0, 0}, 1}, {Tuple{1, 0}, 0}});
  auto r = restrict_to(f, {Tuple{0, 0}});
  CHECK(r.size() == 1);
  CHECK(r.at(Tuple{0, 0}) == 1);
  CHECK(restrict_to(f, domain(f)) == f);
  CHECK(restrict_to(f, {}).empty());
  CHECK_THROWS_AS(restrict_to(f, {Tuple{0}}), Error);
}

TEST_CASE("value_set is empty or singleton") {
  auto c = make_carrier(2);
  auto f = fn(2, c, {{Tuple{0, 0}, 1}});
  CHECK(value_set(f, Tuple{0, 0}) == Elem{1});
  CHECK(!value_set(f, Tuple{1, 0}));
  CHECK_THROWS_AS(value_set(f, Tuple{0, 0, 0}), Error);
}

TEST_CASE("totality") {
  auto c = make_carrier(2);
  std::map<Tuple, Elem> m;
  for_each_tuple(2, 2, [&](const Tuple& t) { m.emplace(t, t[0]); });
  PlaceFunction total(2, c, std::move(m));
  CHECK(totality(total).is_total);
  CHECK(!totality(fn(2, c, {{Tuple{0, 0}, 1}})).is_total);
}

TEST_CASE("inclusion is a partial order on all partial functions (|A|=2, n=2)") {
  auto c = make_carrier(2);
  auto fns = all_partial_2x2(c);
  REQUIRE(fns.size() == 81);

  for (const auto& f : fns) CHECK(includes(f, f));

  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = 0; j < fns.size(); ++j) {
      if (includes(fns[i], fns[j]) && includes(fns[j], fns[i])) CHECK(fns[i] == fns[j]);
    }

  // Transitivity via the inclusion matrix.
  std::vector<std::vector<bool>> le(fns.size(), std::vector<bool>(fns.size()));
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = 0; j < fns.size(); ++j) le[i][j] = includes(fns[i], fns[j]);
  for (std::size_t i = 0; i < fns.size(); ++i)
    for (std::size_t j = 0; j < fns.size(); ++j) {
      if (!le[i][j]) continue;
      for (std::size_t k = 0; k < fns.size(); ++k)
        if (le[j][k]) CHECK(le[i][k]);
    }

  // Definedness of value_set matches the domain everywhere.
  for (const auto& f : fns)
    for_each_tuple(2, 2, [&](const Tuple& t) {
      CHECK(value_set(f, t).has_value() == f.defined(t));
    });

  // restrict_to always yields an included function.
  for (const auto& f : fns) {
    CHECK(includes(restrict_to(f, {Tuple{0, 1}, Tuple{1, 1}}), f));
    CHECK(includes(restrict_to(f, {}), f));
  }
}
