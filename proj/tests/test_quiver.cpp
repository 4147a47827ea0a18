#include <numeric>

#include "doctest.h"
#include "qwc/quiver.hpp"

using namespace qwc;

TEST_CASE("builtin quivers validate cleanly") {
  CHECK(validate(nakajima_graph("a1", {1})).empty());
  CHECK(validate(nakajima_graph("a2", {1, 2})).empty());
  CHECK(validate(nakajima_graph("jordan", {2})).empty());
  CHECK(validate(chainsaw_quiver(2, {1, 1})).empty());
  CHECK(validate(blowup_quiver(2)).empty());
  CHECK(validate(flag_quiver(3, 2)).empty());
  CHECK(validate(single_vertex_quiver(3)).empty());
}

TEST_CASE("validate flags broken quivers") {
  FramedQuiver q = flag_quiver(2, 1);
  SUBCASE("arrow to unknown vertex") {
    q.arrows.push_back({"bad", "1", "ghost", WeightForm()});
    CHECK(validate(q).size() == 1);
  }
  SUBCASE("relation ending at the framing vertex") {
    // path c1 then a framing arrow: composable but ends at infinity
    q.arrows.push_back({"x", "2", "inf", WeightForm()});
    Relation rel{"r", {{Rat(1), {"c1", "x"}}}};
    q.relations.push_back(rel);
    auto bad = validate(q);
    CHECK(bad.size() == 1);
    CHECK(bad.front().find("framing") != std::string::npos);
  }
  SUBCASE("non-composable relation path") {
    Relation rel{"r", {{Rat(1), {"b:1", "c1"}}}};
    q.relations.push_back(rel);
    CHECK(!validate(q).empty());
  }
}

TEST_CASE("zeta_infinity") {
  CHECK(zeta_infinity({Rat(-1), Rat(-2)}, {2, 3}) == Rat(8));
  CHECK(zeta_infinity({Rat(0), Rat(0)}, {5, 7}) == Rat(0));
  CHECK(zeta_infinity({Rat(1), Rat(-1)}, {4, 4}) == Rat(0));
}

TEST_CASE("beta_bar_infinity") {
  // Nakajima quivers pair each z with a w, so the count cancels for any r.
  for (long r : {1L, 2L, 3L}) {
    CHECK(beta_bar_infinity(nakajima_graph("a2", {r, r}), {1, 1}) == 0);
    CHECK(beta_bar_infinity(nakajima_graph("jordan", {r}), {2}) == 0);
  }
  CHECK(beta_bar_infinity(nakajima_graph("a2", {1, 3}), {2, 5}) == 0);

  // one-arrow quiver: the single z contributes beta_0
  CHECK(beta_bar_infinity(single_vertex_quiver(1), {4}) == 4);

  // blow-up with framing multiplicity r: r arrows into 0 and r out of 1
  for (long r : {1L, 2L, 3L}) {
    CHECK(beta_bar_infinity(blowup_quiver(r), {3, 1}) == r * (3 - 1));
    CHECK(beta_bar_infinity(blowup_quiver(r), {1, 1}) == 0);
  }
}

TEST_CASE("enumerate_walls") {
  CHECK(enumerate_walls({3}) == std::vector<Wall>{{1}});
  auto walls = enumerate_walls({1, 1});
  CHECK(walls == std::vector<Wall>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(enumerate_walls({0, 0}).empty());

  // exhaustive cross-check: every nonzero primitive vector below alpha
  // appears exactly once
  DimVector alpha{2, 3};
  auto ws = enumerate_walls(alpha);
  long count = 0;
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 3; ++b) {
      long g = std::gcd(a, b);
      if (g == 1) ++count;
    }
  CHECK(static_cast<long>(ws.size()) == count);
}

TEST_CASE("classify_parameter") {
  DimVector alpha{1, 1};
  auto on = classify_parameter({Rat(1), Rat(-1)}, alpha);
  CHECK(on.kind == ParamKind::OnWall);
  CHECK(*on.wall == Wall{1, 1});

  auto gen = classify_parameter({Rat(-1), Rat(-2)}, alpha);
  CHECK(gen.kind == ParamKind::Generic);
  for (int s : gen.signs) CHECK(s == -1);  // inside C for every wall

  auto deg = classify_parameter({Rat(0), Rat(0)}, alpha);
  CHECK(deg.kind == ParamKind::Degenerate);
  CHECK(deg.vanishing.size() == enumerate_walls(alpha).size());

  // generic classification is stable under small rational perturbations
  StabilityVector zeta{Rat(-1), Rat(-2)};
  for (int k = 1; k <= 4; ++k) {
    StabilityVector nudged(zeta);
    nudged[0] += Rat(1, 1000 + k);
    auto cls = classify_parameter(nudged, alpha);
    CHECK(cls.kind == ParamKind::Generic);
    CHECK(cls.signs == gen.signs);
  }
}

TEST_CASE("enhanced quiver") {
  FramedQuiver q = flag_quiver(2, 2);
  FramedQuiver e = enhanced_quiver(q, "1", 3, 1);
  CHECK(validate(e).empty());
  CHECK(e.vertices.size() == q.vertices.size() + 3);
  CHECK(e.arrows.size() == q.arrows.size() + 3);
  CHECK(e.relations.size() == q.relations.size());

  FramedQuiver same = enhanced_quiver(q, "1", 0, 0);
  CHECK(same.vertices.size() == q.vertices.size());
  CHECK(same.arrows.size() == q.arrows.size());

  CHECK_THROWS_AS(enhanced_quiver(q, "1", 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(enhanced_quiver(q, "inf", 1), std::invalid_argument);
}

TEST_CASE("sharp quiver") {
  FramedQuiver q = single_vertex_quiver(2);
  FramedQuiver s = sharp_quiver(q, "0");
  CHECK(validate(s).empty());
  CHECK(s.framing == "inf'");
  // r + 1 arrows into vertex 0
  long into0 = 0;
  for (const auto& a : s.arrows)
    if (a.to == "0") ++into0;
  CHECK(into0 == 3);
  // old framing vertex is now ordinary
  CHECK(s.internal_index("inf") >= 0);

  FramedQuiver f = flag_quiver(2, 1);
  FramedQuiver fs = sharp_quiver(f, "1");
  CHECK(fs.arrows.size() == f.arrows.size() + 1);
  CHECK(validate(fs).empty());

  FramedQuiver ss = sharp_quiver(s, "0");
  CHECK(ss.vertices.size() == s.vertices.size() + 1);  // not idempotent
  CHECK(validate(ss).empty());
}

TEST_CASE("enhanced and sharp preserve validity for builtins") {
  for (const FramedQuiver& q :
       {nakajima_graph("a2", {1, 1}), chainsaw_quiver(2, {1, 0}), blowup_quiver(1)}) {
    std::string zero = q.internal_vertices().front();
    CHECK(validate(enhanced_quiver(q, zero, 4, 2)).empty());
    CHECK(validate(sharp_quiver(q, zero)).empty());
  }
}

TEST_CASE("quiver json round trip") {
  for (const FramedQuiver& q : {nakajima_graph("a1", {2}), blowup_quiver(1), flag_quiver(2, 2)}) {
    FramedQuiver back = quiver_from_json(quiver_to_json(q));
    CHECK(back.vertices == q.vertices);
    CHECK(back.framing == q.framing);
    CHECK(back.arrows.size() == q.arrows.size());
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
      CHECK(back.arrows[i].id == q.arrows[i].id);
      CHECK(back.arrows[i].weight == q.arrows[i].weight);
    }
    CHECK(back.relations.size() == q.relations.size());
    CHECK(validate(back).empty());
    CHECK(quiver_to_json(back) == quiver_to_json(q));
  }
}

TEST_CASE("nakajima relation endpoints and weights") {
  FramedQuiver q = nakajima_graph("a1", {1});
  REQUIRE(q.relations.size() == 1);
  const Relation& rel = q.relations.front();
  CHECK(q.relation_out(rel) == "1");
  CHECK(q.relation_in(rel) == "1");
  WeightForm q1q2 = WeightForm::of(var("q1")) + WeightForm::of(var("q2"));
  CHECK(q.relation_weight(rel) == q1q2);
}
