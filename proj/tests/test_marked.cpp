#include <gtest/gtest.h>

#include <array>
#include <set>

#include "cayley/algebra/ring.hpp"
#include "cayley/marked/ball.hpp"
#include "cayley/marked/iso.hpp"
#include "cayley/marked/marked_group.hpp"

using namespace cayley;

namespace {

MarkedGroup cyclic_marked(std::uint64_t n) {
  auto g = cyclic_group(n);
  return {g, {cyclic_elem(*g, 1)}, "Z/" + std::to_string(n)};
}

MarkedGroup integers_marked() { return {integers_group(), {z_elem(1)}, "Z"}; }

MarkedGroup selberg_marked(std::uint32_t p) {
  auto f = make_field(p, 1);
  auto g = matrix_group(2, f.field);
  auto a = matrix_elem(*g, {1, 2 % p, 0, 1});
  auto b = matrix_elem(*g, {1, 0, 2 % p, 1});
  return {g, {a, b}, "selberg" + std::to_string(p)};
}

}  // namespace

TEST(Ball, LineSegment) {
  CayleyBall b = ball(integers_marked(), 3);
  EXPECT_EQ(b.size(), 7u);
  EXPECT_EQ(b.edges[0].size(), 6u);
  EXPECT_EQ(b.distance[0], 0u);
  // vertex order: distance, then first-reaching word in (color, orientation) order
  EXPECT_EQ(z_value(b.vertices[1]), 1);
  EXPECT_EQ(z_value(b.vertices[2]), -1);
  EXPECT_EQ(z_value(b.vertices[3]), 2);
}

TEST(Ball, WholeCycle) {
  CayleyBall b = ball(cyclic_marked(5), 2);
  EXPECT_EQ(b.size(), 5u);
  EXPECT_EQ(b.edges[0].size(), 5u);  // induced subdiagram keeps the closing edge
}

// Exhaustive word-evaluation oracle for the Selberg R=2 ball: plain integer
// 2x2 matrices mod 3, no library code.
TEST(Ball, SelbergRadius2Oracle) {
  using M = std::array<int, 4>;
  auto mul = [](const M& a, const M& b) {
    return M{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
             (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
  };
  M id{1, 0, 0, 1};
  M a{1, 2, 0, 1}, ai{1, 1, 0, 1}, b{1, 0, 2, 1}, bi{1, 0, 1, 1};
  std::vector<M> gens{a, ai, b, bi};
  std::set<M> dist0{id}, dist1, dist2;
  for (auto& g : gens) dist1.insert(g);
  dist1.erase(id);
  for (auto& g : dist1)
    for (auto& h : gens) {
      M p = mul(h, g);
      if (!dist0.count(p) && !dist1.count(p)) dist2.insert(p);
    }
  std::size_t expected = dist0.size() + dist1.size() + dist2.size();

  CayleyBall ball2 = ball(selberg_marked(3), 2);
  EXPECT_EQ(ball2.size(), expected);
  EXPECT_EQ(expected, 13u);  // frozen from the oracle
}

TEST(Ball, OverflowCap) {
  BallOptions opts;
  opts.max_vertices = 10;
  EXPECT_THROW(ball(selberg_marked(13), 5, opts), Error);
}

TEST(Ball, ExportFormats) {
  CayleyBall b = ball(cyclic_marked(4), 1);
  auto dot = b.to_dot();
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  auto js = b.to_json();
  EXPECT_NE(js.find("\"radius\":1"), std::string::npos);
  EXPECT_NE(js.find("\"edges\""), std::string::npos);
}

TEST(DiagramIso, Reflexive) {
  CayleyBall b = ball(selberg_marked(3), 2);
  auto iso = diagram_iso(b, b);
  ASSERT_TRUE(iso.has_value());
  for (std::uint32_t u = 0; u < b.size(); ++u) EXPECT_EQ(iso->map[u], u);
}

TEST(DiagramIso, CycleVersusLine) {
  // the cyclic-family radius law: R=3 <= floor((7-1)/2) works for m=7
  EXPECT_TRUE(diagram_iso(ball(cyclic_marked(7), 3), ball(integers_marked(), 3)).has_value());
  // 2*3+1 > 6 forces a collision absent in Z
  EXPECT_FALSE(diagram_iso(ball(cyclic_marked(6), 3), ball(integers_marked(), 3)).has_value());
}

TEST(DiagramIso, EquivalenceOnSampledTriples) {
  std::vector<CayleyBall> balls = {ball(cyclic_marked(9), 3), ball(cyclic_marked(11), 3),
                                   ball(integers_marked(), 3), ball(cyclic_marked(12), 3)};
  for (auto& x : balls) EXPECT_TRUE(diagram_iso(x, x).has_value());  // reflexive
  for (auto& x : balls)
    for (auto& y : balls) {
      auto xy = diagram_iso(x, y), yx = diagram_iso(y, x);
      EXPECT_EQ(xy.has_value(), yx.has_value());  // symmetric
      for (auto& z : balls) {
        if (xy && diagram_iso(y, z)) EXPECT_TRUE(diagram_iso(x, z).has_value());  // transitive
      }
    }
}

TEST(DiagramIso, MonotoneUnderShrinking) {
  CayleyBall b1 = ball(cyclic_marked(13), 5), b2 = ball(integers_marked(), 5);
  ASSERT_TRUE(diagram_iso(b1, b2).has_value());
  for (std::uint32_t r = 0; r <= 5; ++r)
    EXPECT_TRUE(diagram_iso(b1.restrict(r), b2.restrict(r)).has_value());
}

TEST(ConvergenceRadius, CyclicLaw) {
  EXPECT_EQ(convergence_radius(cyclic_marked(9), integers_marked(), 10), 4);
  // identical marked groups saturate Rmax
  auto mg = selberg_marked(3);
  EXPECT_EQ(convergence_radius(mg, mg, 5), 5);
}

TEST(ConvergenceRadius, SLRankComparison) {
  auto f3 = make_field(3, 1);
  auto build = [&](std::uint32_t m) {
    auto g = matrix_group(m, f3.field);
    std::vector<std::uint64_t> sigma(m * m, 0), upsilon(m * m, 0), tau(m * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) sigma[i * m + i] = upsilon[i * m + i] = 1;
    sigma[0 * m + 1] = 1;
    upsilon[0 * m + 1] = f3.primitive;
    tau[0 * m + (m - 1)] = 1;
    for (std::uint32_t i = 1; i < m; ++i) tau[i * m + (i - 1)] = 1;
    return MarkedGroup{g,
                       {matrix_elem(*g, sigma), matrix_elem(*g, upsilon), matrix_elem(*g, tau)},
                       "sl" + std::to_string(m)};
  };
  // tau has order 3 in SL(3) and order 5 in SL(5): tau^2 = tau^-1 is a
  // boundary collision at R=1 and becomes visible at R=2
  int r = convergence_radius(build(3), build(5), 3);
  EXPECT_EQ(r, 1);
}

TEST(PartialGroupIso, WordCollisionConsistency) {
  // diagram iso at 2R+1 implies identical collisions of length<=R products:
  // m=11 has convergence radius 5 = 2*2+1, so the group-level partial iso
  // holds at R=2
  auto iso = partial_group_iso(cyclic_marked(11), integers_marked(), 2);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(iso->witness, PartialIso::Witness::WordCollision);
  // ...but fails at the diagram radius itself where wraps collide
  EXPECT_FALSE(partial_group_iso(cyclic_marked(11), integers_marked(), 5).has_value());
}

TEST(RootedGraphIso, Basics) {
  auto self = forget_structure(ball(selberg_marked(3), 2));
  EXPECT_TRUE(rooted_graph_iso(self, self));

  // 3-cycle vs 3-path rooted at an end: degree sequences differ
  RootedGraph tri{1, {{1, 2}, {0, 2}, {0, 1}}, {0, 1, 1}};
  RootedGraph path{1, {{1}, {0, 2}, {1}}, {0, 1, 2}};
  EXPECT_FALSE(rooted_graph_iso(tri, path));

  // after forgetting colors, Z/8Z and Z have isomorphic radius-3 balls
  auto g1 = forget_structure(ball(cyclic_marked(8), 3));
  auto g2 = forget_structure(ball(integers_marked(), 3));
  EXPECT_TRUE(rooted_graph_iso(g1, g2));
}

TEST(RootedGraphIso, DetectsSubtleDifference) {
  // same degree profile at the root but different structure
  auto g1 = forget_structure(ball(cyclic_marked(6), 3));   // 6-cycle
  auto g2 = forget_structure(ball(integers_marked(), 3));  // 7-path
  EXPECT_FALSE(rooted_graph_iso(g1, g2));
}

TEST(BoundaryScan, ConstantSequence) {
  std::vector<MarkedGroup> seq(5, cyclic_marked(7));
  auto scan = boundary_scan(seq, 2);
  EXPECT_EQ(scan.classes.size(), 1u);
  EXPECT_TRUE(scan.boundary_candidate[0]);
}

TEST(BoundaryScan, InterleavedFamilies) {
  // identity-padded cyclic marking vs the torus marking: distinct local
  // diagrams from R=1 on (identity colors give loops; markings may contain
  // identity generators)
  std::vector<MarkedGroup> seq;
  for (int m = 6; m <= 12; m += 2) {
    auto cm = cyclic_group(m);
    seq.push_back({cm, {cyclic_elem(*cm, 1), cyclic_elem(*cm, 0)}, "pad"});
    auto pr = product_group({cyclic_group(m), cyclic_group(2)});
    auto c2 = cyclic_group(2);
    auto cmg = cyclic_group(m);
    seq.push_back({pr,
                   {product_elem(*pr, {cyclic_elem(*cmg, 1), cyclic_elem(*c2, 0)}),
                    product_elem(*pr, {cyclic_elem(*cmg, 0), cyclic_elem(*c2, 1)})},
                   "prod"});
  }
  auto scan = boundary_scan(seq, 1);
  EXPECT_EQ(scan.classes.size(), 2u);
  EXPECT_TRUE(scan.boundary_candidate[0]);
  EXPECT_TRUE(scan.boundary_candidate[1]);
  for (std::size_t i = 0; i < seq.size(); ++i) EXPECT_EQ(scan.class_of[i], static_cast<int>(i % 2));
}

TEST(Marked, GeneratesAndDiameterBall) {
  auto mg = selberg_marked(3);
  EXPECT_TRUE(generates(mg));
  auto wm = word_metric(mg);
  CayleyBall full = ball(mg, wm.diameter);
  EXPECT_EQ(full.size(), 24u);  // exactly |G| vertices at the diameter radius
}

TEST(Marked, WordEval) {
  auto mg = selberg_marked(5);
  // a * b * a^-1
  Elem v = mg.eval_word({1, 2, -1});
  Elem expect = mg.group->mul(mg.group->mul(mg.generators[0], mg.generators[1]),
                              mg.group->inv(mg.generators[0]));
  EXPECT_EQ(v, expect);
}

TEST(Marked, VertexTransitivityProfile) {
  // BFS profile from e equals the profile from any vertex (Cayley graphs are
  // vertex transitive): check distance histograms coincide for shifted
  // markings of a nonabelian example
  auto mg = selberg_marked(5);
  auto wm = word_metric(mg);
  std::vector<int> hist(wm.diameter + 1, 0);
  for (auto& [e, d] : wm.dist) ++hist[d];
  // profile from another root g0: distances d(x, g0) = |x g0^-1|
  auto elems = enumerate_elements(mg);
  const Elem& g0 = elems[7];
  std::vector<int> hist2(wm.diameter + 1, 0);
  for (auto& x : elems) ++hist2[wm(mg, x, g0)];
  EXPECT_EQ(hist, hist2);
}
