#include <gtest/gtest.h>

#include <cmath>

#include "cayley/fibred/fibred.hpp"
#include "cayley/fibred/fragmentary.hpp"
#include "cayley/fibred/stages.hpp"

using namespace cayley;

namespace {

MarkedGroup cyclic_marked(std::uint64_t n) {
  auto g = cyclic_group(n);
  return {g, {cyclic_elem(*g, 1)}, "Z/" + std::to_string(n)};
}

MarkedGroup integers_marked() { return {integers_group(), {z_elem(1)}, "Z"}; }

/// Translation action of Z on the real line: alpha(k) = shift by k.
EquivariantEmbedding translation_embedding() {
  EquivariantEmbedding ee;
  ee.mg = integers_marked();
  ee.space = MetricSpace::euclidean(1, 2.0);
  ee.y = Point::real(0.0);
  ee.action = [](const Elem& e) -> std::optional<Isometry> {
    return Isometry(RigidMotion::translation1(static_cast<double>(z_value(e))));
  };
  ee.cp = ControlPair::identity();
  return ee;
}

std::vector<MarkedGroup> cyclic_window(std::uint32_t from, std::uint32_t to) {
  std::vector<MarkedGroup> seq;
  for (std::uint32_t m = from; m <= to; ++m) seq.push_back(cyclic_marked(m));
  return seq;
}

}  // namespace

TEST(RigidMotion, ComposeAndInvert) {
  RigidMotion a = RigidMotion::translation1(2.5);
  RigidMotion b;
  b.perm = {0};
  b.sign = {-1.0};
  b.shift = Eigen::VectorXd::Zero(1);
  Eigen::VectorXd z(1);
  z[0] = 1.0;
  // z -> -(z + 2.5)
  EXPECT_DOUBLE_EQ(a.then(b).apply(z)[0], -3.5);
  EXPECT_DOUBLE_EQ(a.then(a.inverse()).apply(z)[0], 1.0);
  EXPECT_TRUE(a.then(a.inverse()).approx_equal(RigidMotion::identity(1), 0.0));

  Eigen::MatrixXd rot(2, 2);
  double c = std::cos(0.3), s = std::sin(0.3);
  rot << c, -s, s, c;
  auto r = RigidMotion::orthogonal_motion(rot, Eigen::VectorXd::Zero(2));
  EXPECT_TRUE(r.then(r.inverse()).approx_equal(RigidMotion::identity(2).then(r).then(r.inverse()), 1e-15));
  auto space2 = MetricSpace::euclidean(2, 2.0);
  Eigen::VectorXd p(2), q(2);
  p << 1, 2;
  q << -3, 0.5;
  std::vector<std::pair<Point, Point>> samples{{Point::euclidean(p), Point::euclidean(q)}};
  EXPECT_LE(isometry_defect(space2, Isometry(r), samples), 1e-12);
}

TEST(GenuineToFibred, IsometricGraphEmbedding) {
  // the 4-cycle lifted isometrically into the graph-metric of itself is a
  // coarse embedding with rho = omega = id in the degenerate fibred form:
  // here embed the 5-path (Z/5 ball) into R by vertex position
  auto mg = cyclic_marked(5);
  auto comp = make_component(mg);
  std::vector<Point> images;
  for (auto& e : comp.elements) {
    std::int64_t v = cyclic_value(e);
    images.push_back(Point::real(v <= 2 ? double(v) : double(v) - 5.0));
  }
  auto fe = genuine_to_fibred({mg}, {images}, MetricSpace::euclidean(1, 2.0), Point::real(0));
  // the cycle wraps: the identity pair fails at wrap pairs (cycle distance 1,
  // image distance 4) and the verifier names one
  auto rep = verify_fibred(fe, ControlPair::identity());
  EXPECT_TRUE(rep.isometries_ok);
  EXPECT_TRUE(rep.transitions_ok);
  EXPECT_FALSE(rep.sandwich_ok);
  ASSERT_FALSE(rep.violations.empty());
  EXPECT_EQ(rep.violations.front().what, "sandwich-upper");
  bool found_wrap = false;
  for (auto& v : rep.violations)
    if (v.value > 3.5) found_wrap = true;
  EXPECT_TRUE(found_wrap);

  // with a control pair honest about the wrap, it passes
  ControlPair loose{PiecewiseLinear({{0, 0}, {1, 0}}, 0.01), PiecewiseLinear::affine(4.0, 0.0)};
  EXPECT_TRUE(verify_fibred(fe, loose).pass());
}

TEST(BuildFromAction, CyclicTranslationRoundTrip) {
  auto seq = cyclic_window(5, 12);
  auto fe = build_from_action(seq, translation_embedding(), 40);
  ASSERT_EQ(fe.components.size(), seq.size());
  for (std::size_t m = 0; m < seq.size(); ++m)
    EXPECT_EQ(fe.Rp[m], ((5 + m - 1) / 2) / 2u);  // floor(R_m/2), R_m = floor((n-1)/2)
  auto rep = verify_fibred(fe, ControlPair::identity(), 1e-12);
  EXPECT_TRUE(rep.pass());
  EXPECT_TRUE(rep.radii_nondecreasing);
  EXPECT_TRUE(rep.radii_growing);
  EXPECT_TRUE(rep.transitions_bit_stable);  // integer translations compose exactly
  EXPECT_EQ(rep.max_isometry_defect, 0.0);
}

TEST(BuildFromAction, ConstantSequenceSaturatesRmax) {
  std::vector<MarkedGroup> seq(3, cyclic_marked(7));
  EquivariantEmbedding ee;
  ee.mg = cyclic_marked(7);
  ee.space = MetricSpace::euclidean(2, 2.0);
  ee.y = Point::euclidean(Eigen::Vector2d(1.0, 0.0));
  ee.action = [](const Elem& e) -> std::optional<Isometry> {
    double angle = 2.0 * M_PI * double(cyclic_value(e)) / 7.0;
    Eigen::MatrixXd rot(2, 2);
    rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return Isometry(RigidMotion::orthogonal_motion(rot, Eigen::VectorXd::Zero(2)));
  };
  // chord-length control pair for the regular 7-gon orbit
  auto chord = [](double d) { return 2.0 * std::sin(M_PI * d / 7.0); };
  ee.cp = ControlPair{PiecewiseLinear({{0, 0}, {1, chord(1)}, {2, chord(2)}, {3, chord(3)}}, 0.01),
                      PiecewiseLinear({{0, 0}, {1, chord(1)}, {2, chord(2)}, {3, chord(3)}}, 1.0)};
  const std::uint32_t Rmax = 6;
  auto fe = build_from_action(seq, ee, Rmax);
  for (auto r : fe.Rp) EXPECT_EQ(r, Rmax / 2);
  auto rep = verify_fibred(fe, ee.cp, 1e-9);
  EXPECT_TRUE(rep.pass());
}

TEST(BuildFromAction, PerturbationsAreDetected) {
  auto seq = cyclic_window(9, 9);
  auto fe = build_from_action(seq, translation_embedding(), 40);
  ASSERT_TRUE(verify_fibred(fe, ControlPair::identity()).pass());

  // perturbing one section value by 2*omega(1) breaks the sandwich at an
  // adjacent pair
  auto broken = fe;
  broken.section[0][3] = Point::real(2.0);
  auto rep1 = verify_fibred(broken, ControlPair::identity());
  EXPECT_FALSE(rep1.sandwich_ok);

  // replacing one trivialization by a reflection breaks the transition
  // consistency on that overlap
  auto broken2 = fe;
  RigidMotion reflect;
  reflect.perm = {0};
  reflect.sign = {-1.0};
  reflect.shift = Eigen::VectorXd::Zero(1);
  auto& chart = broken2.triv[0][2];
  chart[chart.begin()->first] = Isometry(reflect);
  auto rep2 = verify_fibred(broken2, ControlPair::identity());
  EXPECT_FALSE(rep2.transitions_ok);
}

TEST(BuildFromAction, TwoLimitCover) {
  // interleave the cyclic family (limit Z acting on R by translation) with
  // the constant 5-cycle (limit itself acting on R^2 by rotation)
  std::vector<MarkedGroup> seq;
  for (std::uint32_t m : {11, 5, 13, 5, 15, 5}) seq.push_back(cyclic_marked(m));

  EquivariantEmbedding pentagon;
  pentagon.mg = cyclic_marked(5);
  pentagon.space = MetricSpace::euclidean(2, 2.0);
  pentagon.y = Point::euclidean(Eigen::Vector2d(1.0, 0.0));
  pentagon.action = [](const Elem& e) -> std::optional<Isometry> {
    double angle = 2.0 * M_PI * double(cyclic_value(e)) / 5.0;
    Eigen::MatrixXd rot(2, 2);
    rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return Isometry(RigidMotion::orthogonal_motion(rot, Eigen::VectorXd::Zero(2)));
  };
  auto chord = [](double d) { return 2.0 * std::sin(M_PI * d / 5.0); };
  pentagon.cp = ControlPair{PiecewiseLinear({{0, 0}, {1, chord(1)}, {2, chord(2)}}, 0.01),
                            PiecewiseLinear({{0, 0}, {1, chord(1)}, {2, chord(2)}}, 1.0)};

  auto limits = std::vector<EquivariantEmbedding>{translation_embedding(), pentagon};
  auto assign = cover_assignment(seq, limits, 8);
  EXPECT_EQ(assign, (std::vector<std::size_t>{0, 1, 0, 1, 0, 1}));

  auto fe = build_from_action_cover(seq, limits, 2.0, 8);
  // combined pair: coordinatewise minimum/maximum of the two limit pairs
  ControlPair combined{
      PiecewiseLinear({{0, 0}, {1, std::min(1.0, chord(1))}, {2, std::min(2.0, chord(2))}}, 0.01),
      PiecewiseLinear({{0, 0}, {1, std::max(1.0, chord(1))}, {2, std::max(2.0, chord(2))}}, 1.0)};
  auto rep = verify_fibred(fe, combined, 1e-9);
  EXPECT_TRUE(rep.pass());
}

TEST(RecoverFinite, RoundTripExactness) {
  auto seq = cyclic_window(8, 14);
  auto fe = build_from_action(seq, translation_embedding(), 40);
  for (std::size_t m = 0; m < seq.size(); ++m) {
    auto fa = recover_fragmentary_finite(fe, m, 2.0);
    EXPECT_DOUBLE_EQ(fa.eps, 0.0);
    auto rep = verify_fragmentary(fa, 1e-9);
    EXPECT_TRUE(rep.pass) << "m=" << m;
    EXPECT_LE(rep.max_defect, 1e-9);
    // the orbit map reproduces the control pair exactly on ball pairs
    auto ctrl = fragmentary_orbit_control(fa, ControlPair::identity(), 1e-9);
    EXPECT_TRUE(ctrl.pass) << "m=" << m;
    // distances match cycle distances exactly
    for (auto& [dx, mm] : ctrl.envelope) {
      EXPECT_NEAR(mm.first, dx, 1e-12);
      EXPECT_NEAR(mm.second, dx, 1e-12);
    }
    EXPECT_EQ(fragmentary_isometry_defect(fa), 0.0);
  }
}

TEST(RecoverFolner, WholeGroupReducesToFinite) {
  auto seq = cyclic_window(9, 9);
  auto fe = build_from_action(seq, translation_embedding(), 40);
  auto elems = enumerate_elements(seq[0]);
  FolnerSet whole = folner_from_set(seq[0], elems, 0.0, fe.Rp[0]);
  EXPECT_TRUE(whole.whole_group);
  EXPECT_DOUBLE_EQ(whole.ratio, 0.0);

  auto fol = recover_fragmentary_folner(fe, 0, 2.0, whole, ControlPair::identity());
  auto fin = recover_fragmentary_finite(fe, 0, 2.0);
  // delta = 0: identical declared eps and identical defect behavior on the
  // shared domain
  EXPECT_DOUBLE_EQ(fol.eps, 0.0);
  auto rep = verify_fragmentary(fol, 1e-9);
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(rep.max_defect, 1e-12);
  auto repf = verify_fragmentary(fin, 1e-9);
  EXPECT_LE(repf.max_defect, 1e-12);
}

TEST(RecoverFolner, QuantitativeEnvelope) {
  // 100-cycle with the radius-20 ball: delta = 0.2, q = 2
  auto seq = cyclic_window(100, 100);
  auto fe = build_from_action(seq, translation_embedding(), 60);
  const double delta = 0.2;
  auto F = folner_search(seq[0], delta, fe.Rp[0]);
  EXPECT_FALSE(F.whole_group);

  auto fa = recover_fragmentary_folner(fe, 0, 2.0, F, ControlPair::identity());
  double delta_prime = std::sqrt(delta) * double(fe.Rp[0]);
  EXPECT_NEAR(fa.eps, 3.0 * delta_prime, 1e-12);

  auto rep = verify_fragmentary(fa, 1e-9);
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(rep.max_defect, fa.eps + 1e-9);

  auto envelope = folner_envelope(ControlPair::identity(), delta, 2.0, fe.Rp[0]);
  auto ctrl = fragmentary_orbit_control(fa, envelope, 1e-9);
  EXPECT_TRUE(ctrl.pass);
}

TEST(RecoverFolner, EnvelopeHoldsForBothExponents) {
  // the ClaimAmenable-style degradation envelope holds for q = 1 and q = 2
  auto seq = cyclic_window(60, 60);
  auto fe = build_from_action(seq, translation_embedding(), 60);
  for (double q : {1.0, 2.0}) {
    for (double delta : {0.2, 0.35}) {
      auto F = folner_search(seq[0], delta, fe.Rp[0]);
      auto fa = recover_fragmentary_folner(fe, 0, q, F, ControlPair::identity());
      double dp = std::pow(delta, 1.0 / q) * double(fe.Rp[0]);
      EXPECT_NEAR(fa.eps, 3.0 * dp, 1e-12);
      auto rep = verify_fragmentary(fa, 1e-9);
      EXPECT_TRUE(rep.pass) << "q=" << q << " delta=" << delta;
      auto env = folner_envelope(ControlPair::identity(), delta, q, fe.Rp[0]);
      auto ctrl = fragmentary_orbit_control(fa, env, 1e-9);
      EXPECT_TRUE(ctrl.pass) << "q=" << q << " delta=" << delta;
    }
  }
}

TEST(FiniteStage, StabilizationThresholds) {
  // y(g)_m from the cycle-lift construction: f_m = signed representative in
  // [-R_m, R_m] of Z/mZ; g tracked in the limit Z
  std::vector<std::uint32_t> ms;
  for (std::uint32_t m = 3; m <= 31; ++m) ms.push_back(m);
  StageInput in;
  in.cp = ControlPair::identity();
  auto line = MetricSpace::euclidean(1, 2.0);
  for (auto m : ms) {
    in.spaces.push_back(line);
    in.basepoints.push_back(Point::real(0.0));
  }
  std::vector<std::int64_t> tracked{0, 1, -2, 3};
  for (auto g : tracked) {
    in.labels.push_back(std::to_string(g));
    in.dist_to_e.push_back(double(std::abs(g)));
    std::vector<Point> pts;
    for (auto m : ms) {
      std::int64_t Rm = (m - 1) / 2;
      pts.push_back(Point::real(std::abs(g) <= Rm ? double(g) : 0.0));
    }
    in.points.push_back(std::move(pts));
  }
  in.pairs = {{0, 1, 1.0}, {1, 3, 2.0}, {2, 3, 5.0}};
  auto rep = finite_stage_limit_check(in);
  EXPECT_TRUE(rep.all_bounded);
  EXPECT_TRUE(rep.all_stable);
  // pair (g=-2, g=3): stable once R_m >= 3, i.e. m >= 7, index 4
  EXPECT_EQ(rep.stable_from[2], 4);

  // constant stages are stable from the start
  StageInput cst = in;
  for (auto& pts : cst.points)
    for (auto& p : pts) p = Point::real(0.0);
  for (auto& [i, j, d] : cst.pairs) d = 0.0;
  auto rep2 = finite_stage_limit_check(cst);
  EXPECT_TRUE(rep2.all_stable);
  for (int s : rep2.stable_from) EXPECT_EQ(s, 0);

  // injected drift in one coordinate is flagged as non-stabilizing
  StageInput drift = in;
  drift.points[1].back() = Point::real(99.0);
  auto rep3 = finite_stage_limit_check(drift);
  EXPECT_FALSE(rep3.all_stable);
  EXPECT_FALSE(rep3.all_bounded);
}

TEST(Serialization, FibredEmbeddingJson) {
  auto seq = cyclic_window(7, 8);
  auto fe = build_from_action(seq, translation_embedding(), 40);
  auto js = fe.to_json();
  EXPECT_NE(js.find("\"components\""), std::string::npos);
  EXPECT_NE(js.find("\"trivializations\""), std::string::npos);
  EXPECT_NE(js.find("\"section\""), std::string::npos);
}
