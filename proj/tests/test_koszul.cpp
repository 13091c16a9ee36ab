#include <gtest/gtest.h>

#include "tensorcomplex/ballpair.hpp"
#include "tensorcomplex/koszul.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"
#include "tensorcomplex/rat_matrix.hpp"
#include "tensorcomplex/right_inverse.hpp"

using namespace tensorcomplex;

namespace {

const Poly3 x1 = Poly3::var(0), x2 = Poly3::var(1), x3 = Poly3::var(2);
Poly3 P(long n) { return Poly3(Rational(n)); }
TypedField scalar(const Poly3& p) { return TypedField::scalar(p); }

bool homogeneous_of_degree(const TypedField& f, int k) {
  for (const auto& c : f.components())
    for (const auto& [m, coef] : c.terms())
      if (static_cast<int>(m.degree()) != k) return false;
  return true;
}

TypedField homogeneous_sample(FieldKind kind, int k, std::uint64_t seed) {
  TypedField f = FieldSampler(seed, "homogeneous", k).field(kind, k);
  std::vector<Poly3> comps;
  for (const auto& c : f.components()) comps.push_back(c.homogeneous_part(k));
  return TypedField(kind, comps);
}

// Independent dimension count: rank of the stacked operator on all monomial fields of a kind,
// using the free-component parametrization of each kind.
std::size_t oracle_kernel_dim(OpName op, FieldKind kind, int degree) {
  std::vector<TypedField> columns;
  auto monos = monomials_up_to(degree);
  std::vector<std::array<Poly3, 9>> shapes;
  if (kind == FieldKind::Vector) {
    for (int i = 0; i < 3; ++i)
      for (const auto& m : monos) {
        std::array<Poly3, 3> v;
        v[i] = Poly3::monomial(m);
        columns.push_back(TypedField::vector(v[0], v[1], v[2]));
      }
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        for (const auto& m : monos) {
          std::array<Poly3, 9> e;
          e[3 * i + j] = Poly3::monomial(m);
          e[3 * j + i] = Poly3::monomial(m);
          columns.push_back(TypedField::matrix(e, FieldKind::SymMatrix));
        }
  }
  std::vector<std::vector<Rational>> images;
  std::vector<Monomial> out_monos = monomials_up_to(degree);
  for (const auto& c : columns) {
    TypedField img = apply(op, c);
    std::vector<Rational> col;
    for (const auto& comp : img.components())
      for (const auto& m : out_monos) col.push_back(comp.coefficient(m));
    images.push_back(col);
  }
  RatMatrix a(images[0].size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < images[0].size(); ++i) a.at(i, j) = images[j][i];
  return columns.size() - rank(a);
}

}  // namespace

TEST(Koszul, Examples) {
  EXPECT_EQ(Tg(grad(scalar(x1 * x1))), scalar(x1 * x1));
  TypedField q = Tc(TypedField::unit_vector(2));
  EXPECT_EQ(q, TypedField::vector(Rational(-1, 2) * x2, Rational(1, 2) * x1, P(0)));
  EXPECT_EQ(curl(q), TypedField::unit_vector(2));
  TypedField u = Td(scalar(P(1)));
  EXPECT_EQ(u, Rational(1, 3) * TypedField::position());
  EXPECT_EQ(div(u), scalar(P(1)));
  EXPECT_EQ(koszul_apply(KoszulOp::Tc, TypedField::unit_vector(2)), q);
  EXPECT_THROW(Tg(scalar(x1)), KindError);
}

TEST(Koszul, DegreeShift) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_TRUE(homogeneous_of_degree(Tg(homogeneous_sample(FieldKind::Vector, k, 1)), k + 1));
    EXPECT_TRUE(homogeneous_of_degree(Tc(homogeneous_sample(FieldKind::Vector, k, 2)), k + 1));
    EXPECT_TRUE(homogeneous_of_degree(Td(homogeneous_sample(FieldKind::Scalar, k, 3)), k + 1));
    EXPECT_TRUE(homogeneous_of_degree(Td(homogeneous_sample(FieldKind::Vector, k, 4)), k + 1));
    EXPECT_TRUE(homogeneous_of_degree(Tc(homogeneous_sample(FieldKind::Matrix, k, 5)), k + 1));
  }
}

TEST(Homotopy, Examples) {
  EXPECT_TRUE(Tg(grad(scalar(P(5)))).is_zero());
  TypedField v = TypedField::vector(x2, P(0), P(0));
  EXPECT_EQ(Tg(v), scalar(Rational(1, 2) * x1 * x2));
  EXPECT_EQ(curl(v), -TypedField::unit_vector(2));
  EXPECT_EQ(grad(Tg(v)) + Tc(curl(v)), v);
  TypedField q = FieldSampler(3).field(FieldKind::Vector, 3);
  EXPECT_EQ(curl(Tc(q)) + Td(div(q)), q);
}

TEST(Homotopy, AllFourAtDegreeFour) {
  auto outcomes = homotopy_check(10, 4, 7);
  ASSERT_EQ(outcomes.size(), 4u);
  for (const auto& o : outcomes) EXPECT_TRUE(o.outcome.passed()) << o.name << ": " << o.outcome.message;
}

TEST(Homotopy, GradientDefectIsTheConstant) {
  FieldSampler s(19);
  for (int t = 0; t < 10; ++t) {
    Poly3 w = s.poly(4);
    EXPECT_EQ(Tg(grad(scalar(w))), scalar(w - Poly3(w.constant_term())));
  }
}

TEST(ConstantCurlCorrection, Examples) {
  TypedField rot = Rational(1, 2) * cross(TypedField::unit_vector(2), TypedField::position());
  EXPECT_TRUE(constant_curl_correction(rot).is_zero());
  TypedField g = grad(scalar(x1 * x2 * x3 + x1 * x1));
  EXPECT_EQ(constant_curl_correction(g), g);
  TypedField gx = grad(scalar(x1 * x2));
  TypedField u = gx + Rational(1, 2) * cross(TypedField::unit_vector(0), TypedField::position());
  TypedField out = constant_curl_correction(u);
  EXPECT_EQ(out, gx);
  EXPECT_TRUE(curl(out).is_zero());
  EXPECT_TRUE(deff(out).same_values(deff(u)));
  EXPECT_THROW(constant_curl_correction(TypedField::vector(P(0), x1 * x1, P(0))), std::invalid_argument);
}

TEST(SampleKernel, Examples) {
  TypedField v = sample_kernel(OperatorId{OpName::Curl}, FieldKind::Vector, 2, 3);
  EXPECT_EQ(v.kind(), FieldKind::Vector);
  EXPECT_TRUE(curl(v).is_zero());
  EXPECT_FALSE(v.is_zero());
  EXPECT_LE(v.degree(), 2);
  TypedField s = sample_kernel(OperatorId{OpName::DivDiv}, FieldKind::SymMatrix, 2, 5);
  EXPECT_TRUE(div_div(s).is_zero());
  EXPECT_FALSE(s.is_zero());
  TypedField c = sample_kernel(OperatorId{OpName::Div}, FieldKind::Vector, 0, 1);
  EXPECT_EQ(c.degree(), 0);
}

TEST(SampleKernel, DimensionMatchesRankNullity) {
  struct Case {
    OpName op;
    FieldKind kind;
  };
  for (Case c : {Case{OpName::Curl, FieldKind::Vector}, Case{OpName::Div, FieldKind::Vector},
                 Case{OpName::Inc, FieldKind::SymMatrix}, Case{OpName::DivDiv, FieldKind::SymMatrix},
                 Case{OpName::Curl, FieldKind::SymMatrix}}) {
    for (int degree = 0; degree <= 3; ++degree) {
      auto basis = kernel_basis({c.op}, c.kind, degree);
      EXPECT_EQ(basis->size(), oracle_kernel_dim(c.op, c.kind, degree)) << op_name(c.op) << " " << degree;
      for (const auto& b : *basis) EXPECT_TRUE(apply(c.op, b).is_zero());
    }
  }
}

TEST(SampleKernel, OutputsPassThePredicate) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TypedField t = sample_kernel(std::vector<OpName>{OpName::Div, OpName::SymCurlT}, FieldKind::TraceFree, 3, seed);
    EXPECT_EQ(t.kind(), FieldKind::TraceFree);
    EXPECT_TRUE(div(t).is_zero());
    EXPECT_TRUE(sym_curl_t(t).is_zero());
  }
}

TEST(RightInverse, CatalogAndCases) {
  EXPECT_EQ(right_inverse_catalog().size(), 19u);
  EXPECT_EQ(right_inverse_cases().size(), 17u);
  for (const auto& info : right_inverse_catalog()) EXPECT_EQ(parse_right_inverse(info.name), info.id);
  EXPECT_FALSE(parse_right_inverse("Rzz"));
}

TEST(RightInverse, EveryCaseAtEveryDegree) {
  for (const auto& c : right_inverse_cases())
    for (int degree = 0; degree <= 3; ++degree) {
      CheckOutcome o = check_right_inverse_case(c, 10, degree, 7);
      EXPECT_TRUE(o.passed()) << c.name << " degree " << degree << ": " << o.message;
    }
}

TEST(RightInverse, EveryCaseUnderStrictMoments) {
  for (const auto& c : right_inverse_cases()) {
    CheckOutcome o = check_right_inverse_case(c, 5, 3, 11, RightInverseOptions{true});
    EXPECT_TRUE(o.passed()) << c.name << ": " << o.message;
  }
}

TEST(RightInverse, OutputKinds) {
  for (const auto& info : right_inverse_catalog()) {
    TypedField in = sample_right_inverse_input(info.id, 3, 5);
    EXPECT_EQ(right_inverse(info.id, in).kind(), info.output) << info.name;
  }
}

TEST(RightInverse, DddOfOne) {
  TypedField out = right_inverse(RightInverseId::Ddd, scalar(P(1)));
  std::array<Poly3, 9> xx;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) xx[3 * i + j] = Rational(1, 12) * Poly3::var(i) * Poly3::var(j);
  EXPECT_EQ(out, TypedField::matrix(xx, FieldKind::SymMatrix));
  EXPECT_EQ(div_div(out), scalar(P(1)));
}

TEST(RightInverse, DggRecoversPotential) {
  Poly3 w = x1 * x1 * x2;
  TypedField out = right_inverse(RightInverseId::Dgg, hess(scalar(w)));
  EXPECT_EQ(hess(out), hess(scalar(w)));
  // Homogeneous of degree 3: the Koszul chain reproduces it exactly.
  EXPECT_EQ(out, scalar(w));
}

TEST(RightInverse, DccOnKernelSample) {
  TypedField s = sample_kernel(OperatorId{OpName::Div}, FieldKind::SymMatrix, 2, 4);
  TypedField g = right_inverse(RightInverseId::Dcc, s);
  EXPECT_EQ(g.kind(), FieldKind::SymMatrix);
  EXPECT_TRUE(inc(g).same_values(s));
}

TEST(RightInverse, DChainsRaiseDegreeByTwo) {
  using R = RightInverseId;
  for (R id : {R::Dcc, R::Dgg, R::Ddd, R::Dcd}) {
    for (int k = 0; k <= 3; ++k) {
      TypedField in = sample_right_inverse_input(id, k, 100 + k);
      std::vector<Poly3> top;
      for (const auto& c : in.components()) top.push_back(c.homogeneous_part(k));
      TypedField hom(in.kind(), top);
      if (hom.is_zero()) continue;
      TypedField out = right_inverse(id, hom);
      EXPECT_TRUE(homogeneous_of_degree(out, k + 2)) << right_inverse_info(id).name << " " << k;
    }
  }
}

TEST(RightInverse, PreconditionViolationNamesConstraint) {
  TypedField s = TypedField::matrix({x1, P(0), P(0), P(0), P(0), P(0), P(0), P(0), P(0)}, FieldKind::SymMatrix);
  try {
    right_inverse(RightInverseId::Dcc, s);
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.constraint(), "div of the input must vanish");
    EXPECT_EQ(e.witness(), TypedField::unit_vector(0));
  }
  EXPECT_THROW(right_inverse(RightInverseId::Dcc, TypedField::position()), KindError);
}

TEST(RightInverse, StrictMomentsRejectNonOrthogonalInput) {
  TypedField one = scalar(P(1));
  EXPECT_NO_THROW(right_inverse(RightInverseId::Ddd, one));
  EXPECT_THROW(right_inverse(RightInverseId::Ddd, one, RightInverseOptions{true}), PreconditionError);
  TypedField e1 = TypedField::unit_vector(0);
  EXPECT_THROW(right_inverse(RightInverseId::Rgd, e1, RightInverseOptions{true}), PreconditionError);
  TypedField orth = orthogonalize(TypedField::vector(x1 * x1, x2, P(3)), MomentSpace::RT, P(1));
  TypedField out = right_inverse(RightInverseId::Rgd, orth, RightInverseOptions{true});
  EXPECT_TRUE(defining_residual(RightInverseId::Rgd, orth, out).is_zero());
}

TEST(RightInverse, CaseReportsPreconditionErrorWithWitness) {
  // A case whose sampled inputs are valid; an invalid input goes straight through right_inverse.
  TypedField v = TypedField::vector(x1, P(0), P(0));
  try {
    right_inverse(RightInverseId::Dcd, v);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness(), scalar(P(1)));
  }
}

TEST(RightInverse, SideConditionsHold) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TypedField s = sample_right_inverse_input(RightInverseId::Dcc, 3, seed);
    EXPECT_TRUE(div(S(Tc(s))).is_zero());
    TypedField t = sample_right_inverse_input(RightInverseId::RgcTilde, 3, seed);
    EXPECT_TRUE(div(vskw(Tc(t))).is_zero());
    TypedField r = sample_right_inverse_input(RightInverseId::RgcT, 3, seed);
    TypedField w = Tg(tensorcomplex::div_t(r));
    TypedField q = Rational(2) * Tg(r + Rational(1, 2) * scalar_identity(w));
    EXPECT_TRUE(div(q).same_values(Rational(3) * w));
  }
}

TEST(RightInverse, HalvedFactorsFail) {
  // The factor 2 in the Rgg_tilde and Rcc_tilde chains is needed; 1/2 breaks the identities.
  TypedField g = sample_right_inverse_input(RightInverseId::RggTilde, 3, 1);
  TypedField u = Rational(1, 2) * Tc(Tg(t_curl(g)));
  EXPECT_FALSE(curl_deff(u).same_values(curl(g)));
  TypedField s = sample_right_inverse_input(RightInverseId::RccTilde, 3, 1);
  TypedField r = transpose(dev(Td(Rational(1, 2) * Tc(div(s)))));
  EXPECT_FALSE(div(sym_curl(r)).same_values(div(s)));
  TypedField t = sample_right_inverse_input(RightInverseId::RgcTilde, 3, 1);
  TypedField gamma = Tc(t);
  TypedField wrong = sym(gamma) + deff(Rational(-1, 2) * Tc(vskw(gamma)));
  EXPECT_FALSE(curl(wrong).same_values(t));
}
