#pragma once

#include "tensorcomplex/typed_field.hpp"

namespace tensorcomplex {

/// Levi-Civita symbol on 0-based indices; 0 unless (i,j,k) is a permutation of (0,1,2).
int epsilon(int i, int j, int k);

TypedField transpose(const TypedField& m);
TypedField sym(const TypedField& m);
TypedField skw(const TypedField& m);
TypedField dev(const TypedField& m);
TypedField tr(const TypedField& m);
/// m^T - tr(m) id
TypedField S(const TypedField& m);
/// m^T - tr(m)/2 id
TypedField S_inv(const TypedField& m);

/// w id for a scalar field w.
TypedField scalar_identity(const TypedField& w);
/// Skew matrix with mskw(v) w = v x w.
TypedField mskw(const TypedField& v);
/// mskw^{-1} o skw.
TypedField vskw(const TypedField& m);

TypedField dot(const TypedField& a, const TypedField& b);
TypedField cross(const TypedField& a, const TypedField& b);
TypedField frobenius(const TypedField& a, const TypedField& b);
TypedField matvec(const TypedField& m, const TypedField& v);
TypedField matmul(const TypedField& a, const TypedField& b);

enum class PointwiseOp { Transpose, Sym, Skw, Dev, Tr, S, SInv };
TypedField pointwise_linear(const TypedField& m, PointwiseOp op);

enum class ProductOp { Dot, Cross, Frobenius, Matvec, Matmul };
TypedField products(const TypedField& a, const TypedField& b, ProductOp op);

/// Row i of a matrix field as a vector field.
TypedField row(const TypedField& m, int i);
/// Matrix field whose rows are the given vector fields.
TypedField from_rows(const TypedField& r0, const TypedField& r1, const TypedField& r2);

}  // namespace tensorcomplex
