#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tensorcomplex/ballpair.hpp"
#include "tensorcomplex/diffops.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"

using namespace tensorcomplex;

namespace {

const Poly3 x1 = Poly3::var(0), x2 = Poly3::var(1), x3 = Poly3::var(2);
Poly3 P(long n) { return Poly3(Rational(n)); }

struct GaussLegendre {
  std::vector<double> nodes, weights;
};

// Nodes and weights on [-1, 1] by Newton iteration on the Legendre polynomial.
GaussLegendre gauss_legendre(int n) {
  GaussLegendre g;
  for (int i = 1; i <= n; ++i) {
    double x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    g.nodes.push_back(x);
    g.weights.push_back(2 / ((1 - x * x) * dp * dp));
  }
  return g;
}

double eval(const Poly3& p, double a, double b, double c) {
  double s = 0;
  for (const auto& [m, coef] : p.terms())
    s += coef.to_double() * std::pow(a, m.e[0]) * std::pow(b, m.e[1]) * std::pow(c, m.e[2]);
  return s;
}

// Spherical coordinates: Gauss in r and cos(theta), trapezoid in phi. Exact up to
// rounding for polynomials of moderate degree.
double quadrature_ball(const Poly3& p) {
  static const GaussLegendre g = gauss_legendre(16);
  const int nphi = 40;
  double total = 0;
  for (std::size_t ir = 0; ir < g.nodes.size(); ++ir) {
    double r = 0.5 * (g.nodes[ir] + 1), wr = 0.5 * g.weights[ir];
    for (std::size_t iu = 0; iu < g.nodes.size(); ++iu) {
      double u = g.nodes[iu], s = std::sqrt(1 - u * u);
      for (int k = 0; k < nphi; ++k) {
        double phi = 2 * std::numbers::pi * k / nphi;
        total += wr * g.weights[iu] * (2 * std::numbers::pi / nphi) * r * r *
                 eval(p, r * s * std::cos(phi), r * s * std::sin(phi), r * u);
      }
    }
  }
  return total;
}

double as_double(const PiScalar& v) { return v.coefficient().to_double() * std::numbers::pi; }

TypedField bumped(unsigned k, const TypedField& f) { return bump(k) * f; }

}  // namespace

TEST(Integrate, Examples) {
  EXPECT_EQ(integrate_ball(P(1)), PiScalar(Rational(4, 3)));
  EXPECT_EQ(integrate_ball(x1 * x1), PiScalar(Rational(4, 15)));
  EXPECT_TRUE(integrate_ball(x1 * x2).is_zero());
  EXPECT_EQ(integrate_ball(P(1)).str(), "4/3*pi");
}

TEST(Integrate, MonomialsAgreeWithQuadrature) {
  for (const Monomial& m : monomials_up_to(8)) {
    Poly3 p = Poly3::monomial(m);
    double exact = as_double(integrate_ball(p));
    EXPECT_NEAR(exact, quadrature_ball(p), 1e-11) << p.str();
    bool odd = (m.e[0] % 2) || (m.e[1] % 2) || (m.e[2] % 2);
    if (odd) {
      EXPECT_TRUE(integrate_ball(p).is_zero()) << p.str();
    }
  }
}

TEST(Integrate, Linear) {
  FieldSampler s(4);
  for (int t = 0; t < 10; ++t) {
    Poly3 p = s.poly(4), q = s.poly(4);
    EXPECT_EQ(integrate_ball(Rational(3, 7) * p + q),
              Rational(3, 7) * integrate_ball(p) + integrate_ball(q));
  }
}

TEST(L2Pair, Examples) {
  EXPECT_EQ(l2_pair(TypedField::scalar(P(1)), TypedField::scalar(P(1))), PiScalar(Rational(4, 3)));
  TypedField tau = FieldSampler(2).field(FieldKind::Matrix, 3);
  EXPECT_TRUE(l2_pair(TypedField::identity(), dev(tau)).is_zero());
  EXPECT_EQ(l2_pair(TypedField::position(), TypedField::position()), PiScalar(Rational(4, 5)));
}

TEST(Bump, VanishesOnTheSphere) {
  EXPECT_EQ(bump(0), P(1));
  std::array<Rational, 3> on_sphere{Rational(2, 3), Rational(-2, 3), Rational(1, 3)};
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_TRUE(bump(k).evaluate(on_sphere).is_zero());
    if (k >= 2) {
      for (int i = 0; i < 3; ++i) EXPECT_TRUE(bump(k).partial(i).evaluate(on_sphere).is_zero());
    }
  }
  EXPECT_FALSE(bump(1).partial(0).evaluate(on_sphere).is_zero());
}

TEST(Moments, Dimensions) {
  EXPECT_EQ(moment_basis(MomentSpace::P1, FieldKind::Scalar).size(), 4u);
  EXPECT_EQ(moment_basis(MomentSpace::RT, FieldKind::Vector).size(), 4u);
  EXPECT_EQ(moment_basis(MomentSpace::ND, FieldKind::Vector).size(), 6u);
  EXPECT_EQ(moment_basis(MomentSpace::Constants, FieldKind::Scalar).size(), 1u);
  EXPECT_EQ(moment_basis(MomentSpace::Constants, FieldKind::Vector).size(), 3u);
  EXPECT_THROW(moment_basis(MomentSpace::RT, FieldKind::Scalar), KindError);
}

TEST(Moments, Examples) {
  EXPECT_TRUE(moment_orthogonal(TypedField::scalar(x1), MomentSpace::Constants).orthogonal);
  MomentCheck c = moment_orthogonal(TypedField::scalar(P(1)), MomentSpace::P1);
  EXPECT_FALSE(c.orthogonal);
  ASSERT_TRUE(c.offending);
  EXPECT_EQ(*c.offending, TypedField::scalar(P(1)));
  EXPECT_EQ(c.value, PiScalar(Rational(4, 3)));
  TypedField tau = FieldSampler(6).field(FieldKind::TraceFree, 2);
  EXPECT_TRUE(moment_orthogonal(div(bumped(1, tau)), MomentSpace::RT).orthogonal);
}

TEST(Moments, OrthogonalizeProjects) {
  FieldSampler s(8);
  for (MomentSpace m : {MomentSpace::RT, MomentSpace::ND}) {
    TypedField v = s.field(FieldKind::Vector, 3);
    EXPECT_FALSE(moment_orthogonal(v, m).orthogonal);
    EXPECT_TRUE(moment_orthogonal(orthogonalize(v, m, bump(1)), m).orthogonal);
    EXPECT_TRUE(moment_orthogonal(orthogonalize(v, m, P(1)), m).orthogonal);
  }
}

TEST(Pairings, AllHoldWithBumpOrderTwo) {
  ASSERT_EQ(all_pairings().size(), 8u);
  for (PairingId id : all_pairings()) {
    CheckOutcome o = verify_ibp(id, 10, 3, 2, 7);
    EXPECT_TRUE(o.passed()) << pairing_name(id) << ": " << o.message;
    EXPECT_EQ(o.evaluations, 10u);
    EXPECT_EQ(parse_pairing(pairing_name(id)), id);
  }
}

TEST(Pairings, MinimumBumpOrderEnforced) {
  for (PairingId id : all_pairings()) {
    unsigned k = min_bump_order(id);
    EXPECT_THROW(verify_ibp(id, 1, 1, k - 1, 0), std::invalid_argument);
    EXPECT_TRUE(verify_ibp(id, 3, 2, k, 1).passed()) << pairing_name(id);
  }
  EXPECT_EQ(min_bump_order(PairingId::QGrad), 1u);
  EXPECT_EQ(min_bump_order(PairingId::SigmaHess), 2u);
  EXPECT_EQ(min_bump_order(PairingId::GInc), 2u);
  EXPECT_EQ(min_bump_order(PairingId::TauCurlDeff), 2u);
}

TEST(Pairings, BumpOrderOneIsInsufficientForSecondOrder) {
  for (PairingId id : {PairingId::SigmaHess, PairingId::GInc, PairingId::TauCurlDeff}) {
    FieldKind fk = id == PairingId::TauCurlDeff ? FieldKind::TraceFree : FieldKind::SymMatrix;
    FieldKind tk = id == PairingId::SigmaHess ? FieldKind::Scalar
                   : id == PairingId::GInc    ? FieldKind::SymMatrix
                                              : FieldKind::Vector;
    bool differs = false;
    for (int t = 0; t < 10 && !differs; ++t) {
      FieldSampler s(t, "order-one", static_cast<int>(id));
      auto [lhs, rhs] = pairing_sides(id, s.field(fk, 2), bumped(1, s.field(tk, 2)));
      differs = lhs != rhs;
    }
    EXPECT_TRUE(differs) << pairing_name(id);
  }
  auto [lhs, rhs] = pairing_sides(PairingId::SigmaHess, TypedField::identity(), TypedField::scalar(bump(1)));
  EXPECT_EQ(lhs, PiScalar(Rational(-8)));
  EXPECT_TRUE(rhs.is_zero());
}

TEST(Pairings, Examples) {
  auto [a, b] = pairing_sides(PairingId::QGrad, TypedField::unit_vector(0), TypedField::scalar(bump(1) * x1));
  EXPECT_TRUE(a.is_zero());
  EXPECT_TRUE(b.is_zero());
  auto [c, d] = pairing_sides(PairingId::SigmaHess, TypedField::identity(), TypedField::scalar(bump(2)));
  EXPECT_TRUE(c.is_zero());
  EXPECT_TRUE(d.is_zero());
  TypedField tau = dev(TypedField::matrix({P(1), P(2), P(0), P(0), P(3), P(-1), P(4), P(0), P(5)}));
  auto [e, f] = pairing_sides(PairingId::TauCurlDeff, tau, bumped(2, FieldSampler(1).field(FieldKind::Vector, 2)));
  EXPECT_TRUE(e.is_zero());
  EXPECT_TRUE(f.is_zero());
}

TEST(Pairings, CurlDeffPairingNeedsTransposeAndNegativeHalf) {
  // (tau, curl deff u) = -1/2 (curl div tau^T, u); the form +1/2 (curl div tau, u) fails.
  bool untransposed_fails = false;
  for (int t = 0; t < 10; ++t) {
    FieldSampler s(t, "curl-deff-form", 0);
    TypedField tau = s.field(FieldKind::TraceFree, 3);
    TypedField u = bumped(2, s.field(FieldKind::Vector, 2));
    PiScalar lhs = l2_pair(tau, curl_deff(u));
    EXPECT_EQ(lhs, Rational(-1, 2) * l2_pair(curl_div_t(tau), u));
    untransposed_fails |= lhs != Rational(1, 2) * l2_pair(curl_div(tau), u);
  }
  EXPECT_TRUE(untransposed_fails);
}

TEST(MasterIbp, HoldsAndNeedsTheBump) {
  EXPECT_TRUE(verify_master_ibp(10, 3, 1, 7).passed());
  EXPECT_TRUE(verify_master_ibp(10, 3, 2, 7).passed());
  EXPECT_THROW(verify_master_ibp(1, 1, 0, 7), std::invalid_argument);
  EXPECT_FALSE(integrate_ball(x1.partial(0)).is_zero());
}

TEST(Membership, StepsHoldAndControlDetects) {
  auto steps = verify_membership_steps(10, 3, 7);
  EXPECT_EQ(steps.size(), 6u);
  for (const auto& s : steps) EXPECT_TRUE(s.outcome.passed()) << s.name << ": " << s.outcome.message;
}

TEST(Membership, Examples) {
  FieldSampler s(13);
  TypedField t = bumped(1, dev(s.field(FieldKind::Matrix, 3)));
  EXPECT_TRUE(l2_pair(div(t), TypedField::position()).is_zero());
  TypedField sig = bumped(1, sym(s.field(FieldKind::Matrix, 3)));
  EXPECT_TRUE(l2_pair(div(sig), cross(TypedField::unit_vector(0), TypedField::position())).is_zero());
}
