#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tensorcomplex/decompose.hpp"
#include "tensorcomplex/pointwise.hpp"
#include "tensorcomplex/random_field.hpp"
#include "tensorcomplex/right_inverse.hpp"

using namespace tensorcomplex;

namespace {

const Poly3 x1 = Poly3::var(0), x2 = Poly3::var(1), x3 = Poly3::var(2);
Poly3 P(long n) { return Poly3(Rational(n)); }

// Re-sums the parts with independently chosen operators.
TypedField resum(const Decomposition& d) {
  TypedField sum = d.parts[0].potential;
  for (std::size_t i = 1; i < d.parts.size(); ++i) sum = sum + d.parts[i].contribution();
  return sum;
}

bool all_parts_after_first_zero(const Decomposition& d) {
  for (std::size_t i = 1; i < d.parts.size(); ++i)
    if (!d.parts[i].potential.is_zero()) return false;
  return true;
}

std::vector<FieldKind> part_kinds(const Decomposition& d) {
  std::vector<FieldKind> k;
  for (const auto& p : d.parts) k.push_back(p.potential.kind());
  return k;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TypedField xx_over_12() {
  std::array<Poly3, 9> xx;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) xx[3 * i + j] = Rational(1, 12) * Poly3::var(i) * Poly3::var(j);
  return TypedField::matrix(xx, FieldKind::SymMatrix);
}

}  // namespace

TEST(RegdecCc, HessianInput) {
  TypedField g = hess(TypedField::scalar(x1 * x2 * x3));
  Decomposition d = regdec_cc(g);
  EXPECT_TRUE(d.parts[0].potential.is_zero());
  EXPECT_TRUE(deff(d.parts[1].potential).is_zero());
  EXPECT_TRUE(hess(d.parts[2].potential).same_values(g));
  EXPECT_TRUE(d.exact());
}

TEST(RegdecCc, ZeroAndRandom) {
  Decomposition z = regdec_cc(TypedField::zero(FieldKind::SymMatrix));
  for (const auto& p : z.parts) EXPECT_TRUE(p.potential.is_zero());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TypedField g = FieldSampler(seed, "test/cc", 0).field(FieldKind::SymMatrix, 3);
    Decomposition d = regdec_cc(g);
    EXPECT_TRUE(resum(d).same_values(g));
    EXPECT_TRUE((d.parts[0].potential + deff(d.parts[1].potential) + hess(d.parts[2].potential)).same_values(g));
    EXPECT_EQ(part_kinds(d), (std::vector{FieldKind::SymMatrix, FieldKind::Vector, FieldKind::Scalar}));
  }
  EXPECT_THROW(regdec_cc(FieldSampler(1).field(FieldKind::TraceFree, 2)), KindError);
}

TEST(RegdecDd, DddWitness) {
  Decomposition d = regdec_dd(xx_over_12());
  EXPECT_EQ(d.parts[0].potential, right_inverse(RightInverseId::Ddd, TypedField::scalar(P(1))));
  EXPECT_TRUE(all_parts_after_first_zero(d));
}

TEST(RegdecDd, IncInputHasNoLeadingPart) {
  TypedField s = inc(FieldSampler(2).field(FieldKind::SymMatrix, 3));
  Decomposition d = regdec_dd(s);
  EXPECT_TRUE(d.parts[0].potential.is_zero());
  EXPECT_TRUE(d.exact());
}

TEST(RegdecDd, ZeroAndRandom) {
  Decomposition z = regdec_dd(TypedField::zero(FieldKind::SymMatrix));
  for (const auto& p : z.parts) EXPECT_TRUE(p.potential.is_zero());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TypedField s = FieldSampler(seed, "test/dd", 0).field(FieldKind::SymMatrix, 3);
    Decomposition d = regdec_dd(s);
    EXPECT_TRUE((d.parts[0].potential + sym_curl(d.parts[1].potential) + inc(d.parts[2].potential)).same_values(s));
    EXPECT_EQ(part_kinds(d), (std::vector{FieldKind::SymMatrix, FieldKind::TraceFree, FieldKind::SymMatrix}));
  }
}

TEST(RegdecDd, LeadingProjectorIsIdempotent) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TypedField s = FieldSampler(seed, "test/dd-idem", 0).field(FieldKind::SymMatrix, 3);
    TypedField s0 = regdec_dd(s).parts[0].potential;
    ASSERT_TRUE(div_div(s0).same_values(div_div(s)));
    Decomposition again = regdec_dd(s0);
    EXPECT_EQ(again.parts[0].potential, s0);
    EXPECT_TRUE(all_parts_after_first_zero(again));
  }
}

TEST(RegdecCd, TransposedDevGradInputHasNoLeadingPart) {
  TypedField u = FieldSampler(3).field(FieldKind::Vector, 3);
  // curl div vanishes on (dev grad u)^T but not on dev grad u itself.
  EXPECT_FALSE(curl_div(dev_grad(u)).is_zero());
  TypedField t = t_dev_grad(u);
  Decomposition d = regdec_cd(t);
  EXPECT_TRUE(d.parts[0].potential.is_zero());
  EXPECT_TRUE(d.exact());
}

TEST(RegdecCd, ZeroAndRandom) {
  Decomposition z = regdec_cd(TypedField::zero(FieldKind::TraceFree));
  for (const auto& p : z.parts) EXPECT_TRUE(p.potential.is_zero());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TypedField t = FieldSampler(seed, "test/cd", 0).field(FieldKind::TraceFree, 3);
    Decomposition d = regdec_cd(t);
    TypedField sum = d.parts[0].potential + curl(d.parts[1].potential) + t_dev_grad(d.parts[2].potential) +
                     curl_deff(d.parts[3].potential);
    EXPECT_TRUE(sum.same_values(t));
    EXPECT_EQ(part_kinds(d),
              (std::vector{FieldKind::TraceFree, FieldKind::SymMatrix, FieldKind::Vector, FieldKind::Vector}));
  }
}

TEST(RegdecShort, Variants) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TypedField g = FieldSampler(seed, "test/short-cc", 0).field(FieldKind::SymMatrix, 3);
    Decomposition cc = regdec_short(g, DecompositionKind::Cc);
    ASSERT_EQ(cc.parts.size(), 2u);
    EXPECT_TRUE((cc.parts[0].potential + deff(cc.parts[1].potential)).same_values(g));

    Decomposition dd = regdec_short(g, DecompositionKind::Dd);
    ASSERT_EQ(dd.parts.size(), 2u);
    EXPECT_EQ(dd.parts[1].potential.kind(), FieldKind::TraceFree);
    EXPECT_TRUE((dd.parts[0].potential + sym_curl(dd.parts[1].potential)).same_values(g));

    TypedField t = FieldSampler(seed, "test/short-cd", 0).field(FieldKind::TraceFree, 3);
    Decomposition cd = regdec_short(t, DecompositionKind::Cd);
    ASSERT_EQ(cd.parts.size(), 3u);
    EXPECT_TRUE((cd.parts[0].potential + curl(cd.parts[1].potential) + t_dev_grad(cd.parts[2].potential))
                    .same_values(t));
  }
}

TEST(RegdecShort, Examples) {
  TypedField u = FieldSampler(4).field(FieldKind::Vector, 3);
  Decomposition cc = regdec_short(deff(u), DecompositionKind::Cc);
  EXPECT_TRUE(cc.parts[0].potential.is_zero());
  // Recovered up to a rigid motion.
  TypedField diff = cc.parts[1].potential - u;
  EXPECT_TRUE(deff(diff).is_zero());
  Decomposition dd = regdec_short(sym_curl(FieldSampler(5).field(FieldKind::TraceFree, 3)), DecompositionKind::Dd);
  EXPECT_TRUE(dd.parts[0].potential.is_zero());
  Decomposition cd = regdec_short(TypedField::zero(FieldKind::TraceFree), DecompositionKind::Cd);
  for (const auto& p : cd.parts) EXPECT_TRUE(p.potential.is_zero());
}

TEST(Regdec, PartsGrowByAtMostTwoDegrees) {
  for (const auto& c : decomposition_cases())
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      FieldKind k = c.kind == DecompositionKind::Cd ? FieldKind::TraceFree : FieldKind::SymMatrix;
      TypedField f = FieldSampler(seed, "test/growth", 0).field(k, 3);
      for (const auto& p : decompose(f, c.kind, c.short_variant).parts) EXPECT_LE(p.potential.degree(), 5) << c.name;
    }
}

TEST(Regdec, Deterministic) {
  TypedField t = FieldSampler(6).field(FieldKind::TraceFree, 3);
  EXPECT_EQ(decomposition_to_text(regdec_cd(t)), decomposition_to_text(regdec_cd(t)));
}

TEST(Regdec, AllCasesPass) {
  ASSERT_EQ(decomposition_cases().size(), 6u);
  for (const auto& c : decomposition_cases()) {
    CheckOutcome o = check_decomposition_case(c, 10, 3, 7);
    EXPECT_TRUE(o.passed()) << c.name << ": " << o.message;
    EXPECT_EQ(o.evaluations, 10u);
  }
}

TEST(Regdec, GoldenText) {
  EXPECT_EQ(decomposition_to_text(regdec_dd(xx_over_12())), read(TC_GOLDEN_DIR "/regdec_dd_xx.txt"));
  TypedField t = TypedField::matrix({P(0), x3, P(0), P(0), P(0), x1, x2, P(0), P(0)}, FieldKind::TraceFree);
  EXPECT_EQ(decomposition_to_text(regdec_cd(t)), read(TC_GOLDEN_DIR "/regdec_cd_sample.txt"));
}
