#include <symweb/web.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace symweb;

TEST_CASE("objects") {
  const WebObject o = WebObject::of({2, 1, 3});
  CHECK(o.size() == 3);
  CHECK(o.total() == 6);
  CHECK(o.dimension() == 3 * 2 * 4);
  CHECK(o.str() == "(2,1,3)");
  CHECK(WebObject::empty().is_empty());
  CHECK(WebObject::empty().dimension() == 1);
  CHECK(WebObject::zero_object().is_zero());
  CHECK(WebObject::zero_object().dimension() == 0);
  CHECK(o.tensored(WebObject::zero_object()).is_zero());
  CHECK(o.tensored(WebObject::of({5})) == WebObject::of({2, 1, 3, 5}));
  CHECK_THROWS_AS(WebObject::of({1, 0}), std::invalid_argument);
}

TEST_CASE("generators know their boundaries") {
  CHECK(Generator::merge(2, 3).domain() == WebObject::of({2, 3}));
  CHECK(Generator::merge(2, 3).codomain() == WebObject::of({5}));
  CHECK(Generator::split(2, 3).domain() == WebObject::of({5}));
  CHECK(Generator::split(2, 3).codomain() == WebObject::of({2, 3}));
  CHECK(Generator::cap(2).domain() == WebObject::of({2, 2}));
  CHECK(Generator::cap(2).codomain().is_empty());
  CHECK(Generator::cup(2).domain().is_empty());
  CHECK(Generator::cup(2).codomain() == WebObject::of({2, 2}));
  CHECK(Generator::split(1, 2).str() == "s(1,2)");
  CHECK_THROWS_AS(Generator::merge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Generator::cap(0), std::invalid_argument);
}

TEST_CASE("words track boundaries slice by slice") {
  WebWord w = WebWord::identity(WebObject::of({2}));
  w.append(0, Generator::split(1, 1));
  CHECK(w.cod == WebObject::of({1, 1}));
  w.append(1, Generator::cup(3));
  CHECK(w.cod == WebObject::of({1, 3, 3, 1}));
  w.append(0, Generator::merge(1, 3));
  CHECK(w.cod == WebObject::of({4, 3, 1}));
  CHECK(w.slices.size() == 3);
  CHECK_THROWS_AS(w.append(0, Generator::cap(1)), std::invalid_argument);
  CHECK_THROWS_AS(w.append(5, Generator::cup(1)), std::invalid_argument);
}

TEST_CASE("stacking and tensoring words") {
  WebWord lower = WebWord::identity(WebObject::of({2}));
  lower.append(0, Generator::split(1, 1));
  WebWord upper = WebWord::identity(WebObject::of({1, 1}));
  upper.append(0, Generator::merge(1, 1));
  const WebWord both = stack_words(upper, lower);
  CHECK(both.dom == WebObject::of({2}));
  CHECK(both.cod == WebObject::of({2}));
  CHECK(both.slices.size() == 2);
  CHECK_THROWS_AS(stack_words(lower, lower), std::invalid_argument);

  const WebWord t = tensor_words(lower, upper);
  CHECK(t.dom == WebObject::of({2, 1, 1}));
  CHECK(t.cod == WebObject::of({1, 1, 2}));
  REQUIRE(t.slices.size() == 2);
  CHECK(t.slices[0].pos == 0);
  CHECK(t.slices[1].pos == 2);
}

TEST_CASE("morphism sums respect boundaries") {
  const WebMorphism a = WebMorphism::identity(WebObject::of({1, 1}));
  const WebMorphism b = WebMorphism::of_generator(Generator::merge(1, 1));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  WebMorphism two = a + a;
  REQUIRE(two.term_count() == 1);
  CHECK(two.terms().begin()->second == LaurentFrac(2));
  CHECK((a - a).is_zero());
  // Zero morphisms are boundary-flexible in sums.
  CHECK(a + WebMorphism::zero(WebObject::of({7}), WebObject::zero_object()) == a);
}

TEST_CASE("composition mismatch gives the zero morphism") {
  const WebMorphism cap = WebMorphism::of_generator(Generator::cap(1));
  const WebMorphism merge = WebMorphism::of_generator(Generator::merge(1, 1));
  const WebMorphism bad = compose(cap, merge);  // (1,1) -> (2) then cap (1,1)?
  CHECK(bad.is_zero());
  CHECK(bad.domain() == WebObject::of({1, 1}));
  CHECK(bad.codomain().is_empty());
  const WebMorphism good = compose(merge, WebMorphism::identity(WebObject::of({1, 1})));
  CHECK(good == merge);
}

TEST_CASE("tensor of morphisms is bilinear") {
  const WebMorphism id1 = WebMorphism::identity(WebObject::of({1}));
  const WebMorphism cup = WebMorphism::of_generator(Generator::cup(2));
  const WebMorphism t = tensor(id1, cup + cup);
  CHECK(t.domain() == WebObject::of({1}));
  CHECK(t.codomain() == WebObject::of({1, 2, 2}));
  REQUIRE(t.term_count() == 1);
  CHECK(t.terms().begin()->second == LaurentFrac(2));
}

TEST_CASE("ladders against their defining shapes") {
  // A full split-off: the one-column down ladder from (k+l, 0) is s(k, l).
  const WebMorphism f = f_ladder(2, 1, 2, {5, 0});
  REQUIRE(f.term_count() == 1);
  const WebWord& fw = f.terms().begin()->first;
  REQUIRE(fw.slices.size() == 1);
  CHECK(fw.slices[0].gen == Generator::split(3, 2));
  CHECK(fw.dom == WebObject::of({5}));
  CHECK(fw.cod == WebObject::of({3, 2}));

  // The full up ladder from (k, l) with j = l is m(k, l).
  const WebMorphism e = e_ladder(2, 1, 3, {2, 3});
  REQUIRE(e.term_count() == 1);
  const WebWord& ew = e.terms().begin()->first;
  REQUIRE(ew.slices.size() == 1);
  CHECK(ew.slices[0].gen == Generator::merge(2, 3));
  CHECK(ew.cod == WebObject::of({5}));

  // Generic ladder: split then merge.
  const WebMorphism g = f_ladder(2, 1, 1, {2, 2});
  REQUIRE(g.term_count() == 1);
  const WebWord& gw = g.terms().begin()->first;
  REQUIRE(gw.slices.size() == 2);
  CHECK(gw.slices[0].gen == Generator::split(1, 1));
  CHECK(gw.slices[1].gen == Generator::merge(1, 2));
  CHECK(gw.cod == WebObject::of({1, 3}));

  // j = 0 is the identity; overdrawing gives zero.
  CHECK(f_ladder(2, 1, 0, {2, 2}) == WebMorphism::identity(WebObject::of({2, 2})));
  CHECK(f_ladder(2, 1, 3, {2, 2}).is_zero());
  CHECK(e_ladder(2, 1, 3, {2, 2}).is_zero());
  CHECK_THROWS_AS(f_ladder(2, 2, 1, {2, 2}), std::invalid_argument);
}

TEST_CASE("ladders skip zero-labelled strands") {
  // Weight (0, 2): the object is just (2); moving 1 up out of strand 2.
  const WebMorphism e = e_ladder(2, 1, 1, {0, 2});
  REQUIRE(e.term_count() == 1);
  const WebWord& w = e.terms().begin()->first;
  CHECK(w.dom == WebObject::of({2}));
  CHECK(w.cod == WebObject::of({1, 1}));
  REQUIRE(w.slices.size() == 1);
  CHECK(w.slices[0].gen == Generator::split(1, 1));

  // Moving everything down out of strand 1 of (2, 0).
  const WebMorphism f = f_ladder(2, 1, 2, {2, 0});
  REQUIRE(f.term_count() == 1);
  CHECK(f.terms().begin()->first.cod == WebObject::of({2}));
  CHECK(f.terms().begin()->first.slices.empty());
}

TEST_CASE("explode and assemble cascades") {
  const WebMorphism ex = explode(4);
  REQUIRE(ex.term_count() == 1);
  const WebWord& xw = ex.terms().begin()->first;
  CHECK(xw.dom == WebObject::of({4}));
  CHECK(xw.cod == WebObject::of({1, 1, 1, 1}));
  REQUIRE(xw.slices.size() == 3);
  CHECK(xw.slices[0].gen == Generator::split(1, 3));
  CHECK(xw.slices[1].gen == Generator::split(1, 2));
  CHECK(xw.slices[2].gen == Generator::split(1, 1));

  const WebMorphism as = assemble(4);
  const WebWord& aw = as.terms().begin()->first;
  CHECK(aw.dom == WebObject::of({1, 1, 1, 1}));
  CHECK(aw.cod == WebObject::of({4}));
  REQUIRE(aw.slices.size() == 3);
  CHECK(aw.slices[0].gen == Generator::merge(1, 1));
  CHECK(aw.slices[0].pos == 2);
  CHECK(aw.slices[2].gen == Generator::merge(1, 3));
  CHECK(aw.slices[2].pos == 0);

  CHECK(explode(1) == WebMorphism::identity(WebObject::of({1})));
}
