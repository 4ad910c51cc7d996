#include <gtest/gtest.h>

#include <regex>

#include "oracles.hpp"
#include "quanthelly/error.hpp"
#include "quanthelly/experiment.hpp"
#include "quanthelly/generators.hpp"
#include "quanthelly/json_io.hpp"
#include "quanthelly/svg.hpp"

using namespace quanthelly;

namespace {

Point P(const Scalar& x, const Scalar& y) { return Point{x, y}; }

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Generators, EveryKindIsDeterministicAndRoundTrips) {
  for (const char* name : {"random-polygons", "clustered-volume", "clustered-lattice", "doignon-witness",
                           "bkp-counterexample", "halfplane-bundle", "point-cloud", "planted-fractional",
                           "planted-lattice-helly"}) {
    GeneratorSpec spec;
    spec.kind = parse_generator(name);
    spec.seed = 7;
    spec.planted = 3;
    EXPECT_EQ(generator_name(spec.kind), name);
    const auto a = family_to_json(generate(spec));
    const auto b = family_to_json(generate(spec));
    EXPECT_EQ(a, b) << name;
    EXPECT_EQ(family_to_json(family_from_json(a)), a) << name;
  }
  EXPECT_THROW(parse_generator("nope"), InvalidArgument);
}

TEST(Generators, DoignonWitnessStructure) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::DoignonWitness;
  const auto f = generate(spec);
  ASSERT_EQ(f.size(), 4u);
  const auto z2 = Measure::integer_lattice(2);
  std::vector<std::vector<Point>> all;
  for (const auto& m : f.members) all.push_back(m.vertex_list());
  const auto full = oracle::grid_scan(-1, 2, [&](const Point& p) {
    for (const auto& poly : all) {
      if (!oracle::in_hull(poly, p)) return false;
    }
    return true;
  });
  EXPECT_TRUE(full.empty());
  EXPECT_EQ(intersect(f.members).vertex_list(), (std::vector<Point>{P(Scalar(1, 2), Scalar(1, 2))}));
  for (const auto& s : oracle::subsets(4, 3)) {
    const auto pts = oracle::grid_scan(-1, 2, [&](const Point& p) {
      for (std::size_t i : s) {
        if (!oracle::in_hull(all[i], p)) return false;
      }
      return true;
    });
    EXPECT_EQ(pts.size(), 1u);
  }
}

TEST(Generators, BkpCounterexampleVolumes) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::BkpCounterexample;
  const auto f = generate(spec);
  EXPECT_EQ(evaluate(Measure::volume(), intersect(f.members)), MeasureValue::exact(Scalar(1, 100)));
  for (const auto& s : oracle::subsets(4, 3)) {
    std::vector<ConvexBody> three;
    for (std::size_t i : s) three.push_back(f[i]);
    EXPECT_TRUE(evaluate(Measure::volume(), intersect(three)).is_infinite());
  }
}

TEST(Generators, RandomPolygonsSeedSeven) {
  GeneratorSpec spec;
  spec.count = 6;
  spec.seed = 7;
  const auto f = generate(spec);
  EXPECT_EQ(f.size(), 6u);
  spec.seed = 8;
  EXPECT_NE(family_to_json(generate(spec)), family_to_json(f));
}

TEST(JsonIo, BodiesMeasuresAndErrors) {
  const auto half = ConvexBody::from_halfspaces(2, {Halfspace(Vector{Scalar(1), Scalar(2)}, Scalar(3, 7))});
  EXPECT_EQ(body_from_json(body_to_json(half)), half);
  EXPECT_EQ(body_from_json(R"({"dim":2,"box":{"lo":["0","0"],"hi":[1,"1/2"]}})"), ConvexBody::box(P(0, 0), P(1, Scalar(1, 2))));
  EXPECT_TRUE(body_from_json(body_to_json(ConvexBody::empty(2))).is_empty());
  for (const auto& m : {Measure::volume(), Measure::nonempty(), Measure::perimeter(Scalar(1, 1024)),
                        Measure::integer_lattice(2, {{Vector{Scalar(2), Scalar(0)}, Vector{Scalar(0), Scalar(3)}}})}) {
    EXPECT_EQ(measure_to_json(measure_from_json(measure_to_json(m))), measure_to_json(m));
  }
  EXPECT_THROW(family_from_json("{"), InvalidArgument);
  EXPECT_THROW(family_from_json(R"({"schema":"other/1","members":[]})"), InvalidArgument);
  EXPECT_THROW(body_from_json(R"({"dim":2,"vertices":[[0.5,1]]})"), InvalidArgument);
}

TEST(Svg, UnitSquareAndNesting) {
  const auto sq = ConvexBody::box(P(0, 0), P(1, 1));
  const auto one = render_svg({{sq, {}}});
  EXPECT_EQ(count_of(one, "<polygon"), 1u);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(one, m, std::regex("points=\"([^\"]*)\"")));
  EXPECT_EQ(count_of(m[1].str(), ","), 4u);
  const auto inner = ConvexBody::box(P(Scalar(1, 4), Scalar(1, 4)), P(Scalar(3, 4), Scalar(3, 4)));
  const auto two = render_svg({{sq, {}}, {inner, {}}});
  EXPECT_EQ(count_of(two, "<polygon"), 2u);
  EXPECT_EQ(two, render_svg({{sq, {}}, {inner, {}}}));
  const auto empty = render_svg({});
  EXPECT_NE(empty.find("<svg"), std::string::npos);
  EXPECT_NE(empty.find("</svg>"), std::string::npos);
  EXPECT_THROW(render_svg({{ConvexBody::point(Point{Scalar(0), Scalar(0), Scalar(0)}), {}}}), DimensionError);
}

TEST(Experiment, EmptyTrialList) {
  const auto r = run_experiment(R"({"schema":"quanthelly.experiment/1","trials":[]})");
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.aggregates.empty());
  EXPECT_TRUE(r.audit());
}

TEST(Experiment, SweepAndCampaignAudit) {
  const auto r = run_experiment(R"({"schema":"quanthelly.experiment/1","seed":9,"trials":[
    {"kind":"floating-body-sweep","eps":["1/4","1/16","1/64"],"directions":{"farey":3}},
    {"kind":"helly-check","repeat":20,"measure":"lattice","h":4,
     "generator":{"kind":"planted-lattice-helly","count":5,"extent":4,"vertices":2,"denominator":3}},
    {"kind":"pq","repeat":2,"generator":{"kind":"nope"}}]})");
  ASSERT_EQ(r.records.size(), 25u);
  EXPECT_EQ(r.aggregates.at("group0.monotone"), "1");
  EXPECT_EQ(r.aggregates.at("group1.hypothesis_true"), "20");
  EXPECT_EQ(r.aggregates.at("group1.conclusion_failures"), "0");
  EXPECT_EQ(r.aggregates.at("group2.errors"), "2");
  EXPECT_FALSE(r.records.back().ok);
  EXPECT_TRUE(r.audit());
  auto forged = r;
  forged.aggregates["group1.conclusion_failures"] = "3";
  std::string why;
  EXPECT_FALSE(forged.audit(&why));
  EXPECT_NE(why.find("conclusion_failures"), std::string::npos);
  EXPECT_EQ(count_of(r.to_csv(), "\n"), 26u);
}

TEST(Experiment, Reproducible) {
  const char* cfg = R"({"schema":"quanthelly.experiment/1","seed":3,"threads":4,"trials":[
    {"kind":"fractional-helly","repeat":3,"lambda":"2","eps":"1/4",
     "generator":{"kind":"planted-fractional","count":8,"planted":5}}]})";
  EXPECT_EQ(run_experiment(cfg).to_json(), run_experiment(cfg).to_json());
}
