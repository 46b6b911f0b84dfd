#include <symweb/jw.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace symweb;

TEST_CASE("diagram validity") {
  CHECK(TLDiagram::identity(3).valid());
  CHECK(TLDiagram::hook(4, 2).valid());
  CHECK_THROWS_AS(TLDiagram::hook(3, 3), std::invalid_argument);

  TLDiagram crossing;
  crossing.bottom = crossing.top = 2;
  crossing.mate = {3, 2, 1, 0};
  CHECK(!crossing.valid());

  TLDiagram fixed_point = TLDiagram::identity(2);
  fixed_point.mate[0] = 0;
  CHECK(!fixed_point.valid());
}

TEST_CASE("diagram composition") {
  const TLDiagram e1 = TLDiagram::hook(3, 1);
  const TLDiagram e2 = TLDiagram::hook(3, 2);

  auto [square, square_loops] = tl_compose(e1, e1);
  CHECK(square == e1);
  CHECK(square_loops == 1);

  auto [mid, l1] = tl_compose(e2, e1);
  auto [back, l2] = tl_compose(e1, mid);
  CHECK(back == e1);
  CHECK(l1 + l2 == 0);

  CHECK_THROWS_AS(tl_compose(TLDiagram::identity(2), TLDiagram::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("linear combinations compose with loop value -[2]") {
  const TLLinear e1 = TLLinear::of(TLDiagram::hook(2, 1));
  const TLLinear sq = tl_compose(e1, e1);
  REQUIRE(sq.terms.size() == 1);
  CHECK(sq.terms.begin()->second == LaurentFrac(-qint(2)));
}

TEST_CASE("random planar diagrams are valid and compose validly") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const TLDiagram a = random_tl(3, 3, rng);
    const TLDiagram b = random_tl(5, 3, rng);
    CHECK(a.valid());
    CHECK(b.valid());
    CHECK(tl_compose(a, b).first.valid());
  }
}

TEST_CASE("embedding turns hooks into cap-cup words") {
  const WebMorphism embedded = tl_embed(TLDiagram::hook(2, 1));
  CHECK(embedded == thin_hook(2, 1));
  CHECK(tl_embed(TLDiagram::identity(3)) ==
        WebMorphism::identity(WebObject::of({1, 1, 1})));
}

TEST_CASE("embedding respects composition on random diagrams") {
  std::mt19937 rng(11);
  const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> shapes{
      {{4, 2}, {2, 4}}, {{3, 3}, {3, 3}}, {{3, 1}, {3, 3}}, {{2, 2}, {0, 2}}};
  for (int trial = 0; trial < 8; ++trial) {
    for (const auto& [ashape, bshape] : shapes) {
      const TLDiagram a = random_tl(ashape.first, ashape.second, rng);
      const TLDiagram b = random_tl(bshape.first, bshape.second, rng);
      const TLLinear both = tl_compose(TLLinear::of(a), TLLinear::of(b));
      CHECK(eval(tl_embed(both)) == eval(tl_embed(a)) * eval(tl_embed(b)));
    }
  }
}

TEST_CASE("projector word matches the recursion") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(eval(jw_recursive(k)) == jw_matrix(k));
  }
}

TEST_CASE("projector verification") {
  for (int k = 1; k <= 4; ++k) {
    const JwReport rep = verify_jw(k);
    INFO("k = " << k);
    CHECK(rep.idempotent);
    CHECK(rep.cap_kill);
    CHECK(rep.recursion_match);
    CHECK(rep.ok());
  }
}

TEST_CASE("projector matrix trace equals its rank") {
  CHECK(jw_matrix(2).trace() == LaurentFrac(3));
  CHECK(jw_matrix(3).trace() == LaurentFrac(4));
  CHECK(jw_matrix(4).trace() == LaurentFrac(5));
}

TEST_CASE("projector is independent of the vertex tree shape") {
  // Peel strands off the right instead of the left.
  WebWord alt = WebWord::identity(WebObject::of(std::vector<int>(3, 1)));
  alt.append(0, Generator::merge(1, 1));
  alt.append(0, Generator::merge(2, 1));
  alt.append(0, Generator::split(2, 1));
  alt.append(0, Generator::split(1, 1));
  const WebMorphism alt_jw =
      WebMorphism::of_word(std::move(alt)).scaled(LaurentFrac::inverse_of(qfact(3)));
  CHECK(eval(alt_jw) == jw_matrix(3));
}

TEST_CASE("two-strand projector equals the embedded diagram combination") {
  const TLLinear jw2 =
      TLLinear::identity(2) +
      TLLinear::of(TLDiagram::hook(2, 1), LaurentFrac::inverse_of(qint(2)));
  CHECK(eval(tl_embed(jw2)) == jw_matrix(2));
}
