#include "tensorcomplex/pointwise.hpp"

namespace tensorcomplex {

namespace {

void require_matrix(const TypedField& m, const char* what) {
  if (!is_matrix_kind(m.kind())) throw KindError(std::string(what) + " needs a matrix field");
}

void require(const TypedField& f, FieldKind k, const char* what) {
  if (f.kind() != k) throw KindError(std::string(what) + " needs a " + std::string(kind_name(k)) + " field");
}

}  // namespace

int epsilon(int i, int j, int k) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 2) return 0;
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

TypedField transpose(const TypedField& m) {
  require_matrix(m, "transpose");
  std::array<Poly3, 9> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[3 * i + j] = m.at(j, i);
  return TypedField::matrix(std::move(e), m.kind());
}

TypedField sym(const TypedField& m) {
  require_matrix(m, "sym");
  std::array<Poly3, 9> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[3 * i + j] = Rational(1, 2) * (m.at(i, j) + m.at(j, i));
  return TypedField::matrix(std::move(e), FieldKind::SymMatrix);
}

TypedField skw(const TypedField& m) {
  require_matrix(m, "skw");
  std::array<Poly3, 9> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[3 * i + j] = Rational(1, 2) * (m.at(i, j) - m.at(j, i));
  return TypedField::matrix(std::move(e), FieldKind::Skew);
}

TypedField tr(const TypedField& m) {
  require_matrix(m, "tr");
  return TypedField::scalar(m.at(0, 0) + m.at(1, 1) + m.at(2, 2));
}

TypedField scalar_identity(const TypedField& w) {
  require(w, FieldKind::Scalar, "scalar_identity");
  return w[0] * TypedField::identity();
}

TypedField dev(const TypedField& m) {
  require_matrix(m, "dev");
  TypedField d = m - Rational(1, 3) * scalar_identity(tr(m));
  return d.with_kind(FieldKind::TraceFree);
}

TypedField S(const TypedField& m) {
  require_matrix(m, "S");
  TypedField out = transpose(m) - scalar_identity(tr(m));
  return out.with_kind(m.kind());
}

TypedField S_inv(const TypedField& m) {
  require_matrix(m, "S_inv");
  TypedField out = transpose(m) - Rational(1, 2) * scalar_identity(tr(m));
  return out.with_kind(m.kind());
}

TypedField mskw(const TypedField& v) {
  require(v, FieldKind::Vector, "mskw");
  std::array<Poly3, 9> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (int s = epsilon(i, j, k); s != 0) e[3 * i + j] -= Rational(s) * v.at(k);
  return TypedField::matrix(std::move(e), FieldKind::Skew);
}

TypedField vskw(const TypedField& m) {
  require_matrix(m, "vskw");
  // mskw(v)_{ij} = -eps_ijk v_k, so v_k = -1/2 eps_kij skw(m)_{ij}.
  TypedField s = skw(m);
  std::array<Poly3, 3> v;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (int e = epsilon(k, i, j); e != 0) v[k] -= Rational(e, 2) * s.at(i, j);
  return TypedField::vector(v[0], v[1], v[2]);
}

TypedField dot(const TypedField& a, const TypedField& b) {
  require(a, FieldKind::Vector, "dot");
  require(b, FieldKind::Vector, "dot");
  return TypedField::scalar(a.at(0) * b.at(0) + a.at(1) * b.at(1) + a.at(2) * b.at(2));
}

TypedField cross(const TypedField& a, const TypedField& b) {
  require(a, FieldKind::Vector, "cross");
  require(b, FieldKind::Vector, "cross");
  std::array<Poly3, 3> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (int s = epsilon(i, j, k); s != 0) c[i] += Rational(s) * (a.at(j) * b.at(k));
  return TypedField::vector(c[0], c[1], c[2]);
}

TypedField frobenius(const TypedField& a, const TypedField& b) {
  require_matrix(a, "frobenius");
  require_matrix(b, "frobenius");
  Poly3 s;
  for (std::size_t k = 0; k < 9; ++k) s += a[k] * b[k];
  return TypedField::scalar(std::move(s));
}

TypedField matvec(const TypedField& m, const TypedField& v) {
  require_matrix(m, "matvec");
  require(v, FieldKind::Vector, "matvec");
  std::array<Poly3, 3> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i] += m.at(i, j) * v.at(j);
  return TypedField::vector(c[0], c[1], c[2]);
}

TypedField matmul(const TypedField& a, const TypedField& b) {
  require_matrix(a, "matmul");
  require_matrix(b, "matmul");
  std::array<Poly3, 9> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) e[3 * i + j] += a.at(i, k) * b.at(k, j);
  return TypedField::matrix(std::move(e));
}

TypedField pointwise_linear(const TypedField& m, PointwiseOp op) {
  switch (op) {
    case PointwiseOp::Transpose: return transpose(m);
    case PointwiseOp::Sym: return sym(m);
    case PointwiseOp::Skw: return skw(m);
    case PointwiseOp::Dev: return dev(m);
    case PointwiseOp::Tr: return tr(m);
    case PointwiseOp::S: return S(m);
    case PointwiseOp::SInv: return S_inv(m);
  }
  throw std::invalid_argument("unknown pointwise op");
}

TypedField products(const TypedField& a, const TypedField& b, ProductOp op) {
  switch (op) {
    case ProductOp::Dot: return dot(a, b);
    case ProductOp::Cross: return cross(a, b);
    case ProductOp::Frobenius: return frobenius(a, b);
    case ProductOp::Matvec: return matvec(a, b);
    case ProductOp::Matmul: return matmul(a, b);
  }
  throw std::invalid_argument("unknown product op");
}

TypedField row(const TypedField& m, int i) {
  require_matrix(m, "row");
  return TypedField::vector(m.at(i, 0), m.at(i, 1), m.at(i, 2));
}

TypedField from_rows(const TypedField& r0, const TypedField& r1, const TypedField& r2) {
  std::array<Poly3, 9> e;
  const TypedField* rows[3] = {&r0, &r1, &r2};
  for (int i = 0; i < 3; ++i) {
    require(*rows[i], FieldKind::Vector, "from_rows");
    for (int j = 0; j < 3; ++j) e[3 * i + j] = rows[i]->at(j);
  }
  return TypedField::matrix(std::move(e));
}

}  // namespace tensorcomplex
