#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tensorcomplex/typed_field.hpp"

namespace tensorcomplex {

// Matrix conventions: (grad u)_{ij} = d_j u_i; curl and div act on rows.
// Names read right to left, so t_curl(g) = (curl g)^T and div_t(t) = div(t^T).

TypedField grad(const TypedField& f);
TypedField curl(const TypedField& f);
TypedField div(const TypedField& f);

TypedField deff(const TypedField& u);
TypedField dev_grad(const TypedField& u);
TypedField t_dev_grad(const TypedField& u);
TypedField sym_curl(const TypedField& t);
TypedField sym_curl_t(const TypedField& t);
TypedField t_curl(const TypedField& t);
TypedField div_t(const TypedField& t);

TypedField hess(const TypedField& w);
/// curl((curl g)^T) on symmetric g.
TypedField inc(const TypedField& g);
TypedField grad_div(const TypedField& u);
TypedField curl_div(const TypedField& t);
TypedField curl_div_t(const TypedField& t);
TypedField div_div(const TypedField& s);
TypedField curl_deff(const TypedField& u);
TypedField t_curl_deff(const TypedField& u);

enum class OpName {
  Grad,
  Curl,
  Div,
  Deff,
  DevGrad,
  TDevGrad,
  SymCurl,
  SymCurlT,
  TCurl,
  DivT,
  Hess,
  Inc,
  GradDiv,
  CurlDiv,
  CurlDivT,
  DivDiv,
  CurlDeff,
  TCurlDeff,
};

const std::vector<OpName>& all_op_names();
std::string_view op_name(OpName op);
std::optional<OpName> parse_op_name(std::string_view name);
/// 1 or 2.
int op_order(OpName op);
/// Output kind for an accepted input kind, or nullopt if the input kind is rejected.
std::optional<FieldKind> op_output_kind(OpName op, FieldKind input);

/// A differential operator together with a constant factor.
struct OperatorId {
  OpName name;
  Rational scale = 1;

  friend bool operator==(const OperatorId&, const OperatorId&) = default;
};

/// scale * op(f). Throws KindError if f's kind is outside the operator's signature.
TypedField apply(const OperatorId& op, const TypedField& f);
TypedField apply(OpName op, const TypedField& f);

}  // namespace tensorcomplex
