#include "tensorcomplex/diffops.hpp"

#include <string>

#include "tensorcomplex/pointwise.hpp"

namespace tensorcomplex {

namespace {

[[noreturn]] void reject(const char* op, const TypedField& f) {
  throw KindError(std::string(op) + " does not accept a " + std::string(kind_name(f.kind())) + " field");
}

TypedField vector_curl(const TypedField& v) {
  std::array<Poly3, 3> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (int s = epsilon(i, j, k); s != 0) c[i] += Rational(s) * v.at(k).partial(j);
  return TypedField::vector(c[0], c[1], c[2]);
}

}  // namespace

TypedField grad(const TypedField& f) {
  if (f.kind() == FieldKind::Scalar) return TypedField::vector(f[0].partial(0), f[0].partial(1), f[0].partial(2));
  if (f.kind() == FieldKind::Vector) {
    std::array<Poly3, 9> e;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) e[3 * i + j] = f.at(i).partial(j);
    return TypedField::matrix(std::move(e));
  }
  reject("grad", f);
}

TypedField curl(const TypedField& f) {
  if (f.kind() == FieldKind::Vector) return vector_curl(f);
  if (!is_matrix_kind(f.kind())) reject("curl", f);
  TypedField m = from_rows(vector_curl(row(f, 0)), vector_curl(row(f, 1)), vector_curl(row(f, 2)));
  // tr curl g = -2 div vskw g vanishes for symmetric g.
  return f.kind() == FieldKind::SymMatrix ? m.with_kind(FieldKind::TraceFree) : m;
}

TypedField div(const TypedField& f) {
  if (f.kind() == FieldKind::Vector) return TypedField::scalar(f.at(0).partial(0) + f.at(1).partial(1) + f.at(2).partial(2));
  if (!is_matrix_kind(f.kind())) reject("div", f);
  std::array<Poly3, 3> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i] += f.at(i, j).partial(j);
  return TypedField::vector(c[0], c[1], c[2]);
}

TypedField deff(const TypedField& u) {
  if (u.kind() != FieldKind::Vector) reject("deff", u);
  return sym(grad(u));
}

TypedField dev_grad(const TypedField& u) {
  if (u.kind() != FieldKind::Vector) reject("dev_grad", u);
  return dev(grad(u));
}

TypedField t_dev_grad(const TypedField& u) { return transpose(dev_grad(u)); }

TypedField sym_curl(const TypedField& t) {
  if (!is_matrix_kind(t.kind())) reject("sym_curl", t);
  return sym(curl(t));
}

TypedField sym_curl_t(const TypedField& t) {
  if (!is_matrix_kind(t.kind())) reject("sym_curl_T", t);
  return sym(curl(transpose(t)));
}

TypedField t_curl(const TypedField& t) {
  if (!is_matrix_kind(t.kind())) reject("T_curl", t);
  return transpose(curl(t));
}

TypedField div_t(const TypedField& t) {
  if (!is_matrix_kind(t.kind())) reject("div_T", t);
  return div(transpose(t));
}

TypedField hess(const TypedField& w) {
  if (w.kind() != FieldKind::Scalar) reject("hess", w);
  return deff(grad(w));
}

TypedField inc(const TypedField& g) {
  if (g.kind() != FieldKind::SymMatrix) reject("inc", g);
  return curl(t_curl(g)).with_kind(FieldKind::SymMatrix);
}

TypedField grad_div(const TypedField& u) {
  if (u.kind() != FieldKind::Vector) reject("grad_div", u);
  return grad(div(u));
}

TypedField curl_div(const TypedField& t) {
  if (!is_matrix_kind(t.kind())) reject("curl_div", t);
  return curl(div(t));
}

TypedField curl_div_t(const TypedField& t) {
  if (!is_matrix_kind(t.kind())) reject("curl_div_T", t);
  return curl(div_t(t));
}

TypedField div_div(const TypedField& s) {
  if (s.kind() != FieldKind::SymMatrix) reject("div_div", s);
  return div(div(s));
}

TypedField curl_deff(const TypedField& u) {
  if (u.kind() != FieldKind::Vector) reject("curl_deff", u);
  return curl(deff(u));
}

TypedField t_curl_deff(const TypedField& u) {
  if (u.kind() != FieldKind::Vector) reject("T_curl_deff", u);
  return t_curl(deff(u));
}

const std::vector<OpName>& all_op_names() {
  static const std::vector<OpName> names = {
      OpName::Grad,    OpName::Curl,    OpName::Div,      OpName::Deff,    OpName::DevGrad,  OpName::TDevGrad,
      OpName::SymCurl, OpName::SymCurlT, OpName::TCurl,   OpName::DivT,    OpName::Hess,     OpName::Inc,
      OpName::GradDiv, OpName::CurlDiv, OpName::CurlDivT, OpName::DivDiv,  OpName::CurlDeff, OpName::TCurlDeff};
  return names;
}

std::string_view op_name(OpName op) {
  switch (op) {
    case OpName::Grad: return "grad";
    case OpName::Curl: return "curl";
    case OpName::Div: return "div";
    case OpName::Deff: return "deff";
    case OpName::DevGrad: return "dev_grad";
    case OpName::TDevGrad: return "T_dev_grad";
    case OpName::SymCurl: return "sym_curl";
    case OpName::SymCurlT: return "sym_curl_T";
    case OpName::TCurl: return "T_curl";
    case OpName::DivT: return "div_T";
    case OpName::Hess: return "hess";
    case OpName::Inc: return "inc";
    case OpName::GradDiv: return "grad_div";
    case OpName::CurlDiv: return "curl_div";
    case OpName::CurlDivT: return "curl_div_T";
    case OpName::DivDiv: return "div_div";
    case OpName::CurlDeff: return "curl_deff";
    case OpName::TCurlDeff: return "T_curl_deff";
  }
  return "?";
}

std::optional<OpName> parse_op_name(std::string_view name) {
  for (auto op : all_op_names())
    if (op_name(op) == name) return op;
  return std::nullopt;
}

int op_order(OpName op) {
  switch (op) {
    case OpName::Hess:
    case OpName::Inc:
    case OpName::GradDiv:
    case OpName::CurlDiv:
    case OpName::CurlDivT:
    case OpName::DivDiv:
    case OpName::CurlDeff:
    case OpName::TCurlDeff: return 2;
    default: return 1;
  }
}

std::optional<FieldKind> op_output_kind(OpName op, FieldKind in) {
  const bool scalar = in == FieldKind::Scalar;
  const bool vector = in == FieldKind::Vector;
  const bool matrix = is_matrix_kind(in);
  switch (op) {
    case OpName::Grad:
      if (scalar) return FieldKind::Vector;
      if (vector) return FieldKind::Matrix;
      return std::nullopt;
    case OpName::Curl:
    case OpName::TCurl:
      if (vector && op == OpName::Curl) return FieldKind::Vector;
      if (!matrix) return std::nullopt;
      return in == FieldKind::SymMatrix ? FieldKind::TraceFree : FieldKind::Matrix;
    case OpName::Div:
      if (vector) return FieldKind::Scalar;
      if (matrix) return FieldKind::Vector;
      return std::nullopt;
    case OpName::Deff:
      return vector ? std::optional(FieldKind::SymMatrix) : std::nullopt;
    case OpName::DevGrad:
    case OpName::TDevGrad:
    case OpName::CurlDeff:
    case OpName::TCurlDeff:
      return vector ? std::optional(FieldKind::TraceFree) : std::nullopt;
    case OpName::SymCurl:
    case OpName::SymCurlT:
      return matrix ? std::optional(FieldKind::SymMatrix) : std::nullopt;
    case OpName::DivT:
    case OpName::CurlDiv:
    case OpName::CurlDivT:
      return matrix ? std::optional(FieldKind::Vector) : std::nullopt;
    case OpName::Hess:
      return scalar ? std::optional(FieldKind::SymMatrix) : std::nullopt;
    case OpName::Inc:
      return in == FieldKind::SymMatrix ? std::optional(FieldKind::SymMatrix) : std::nullopt;
    case OpName::GradDiv:
      return vector ? std::optional(FieldKind::Vector) : std::nullopt;
    case OpName::DivDiv:
      return in == FieldKind::SymMatrix ? std::optional(FieldKind::Scalar) : std::nullopt;
  }
  return std::nullopt;
}

TypedField apply(OpName op, const TypedField& f) {
  switch (op) {
    case OpName::Grad: return grad(f);
    case OpName::Curl: return curl(f);
    case OpName::Div: return div(f);
    case OpName::Deff: return deff(f);
    case OpName::DevGrad: return dev_grad(f);
    case OpName::TDevGrad: return t_dev_grad(f);
    case OpName::SymCurl: return sym_curl(f);
    case OpName::SymCurlT: return sym_curl_t(f);
    case OpName::TCurl: return t_curl(f);
    case OpName::DivT: return div_t(f);
    case OpName::Hess: return hess(f);
    case OpName::Inc: return inc(f);
    case OpName::GradDiv: return grad_div(f);
    case OpName::CurlDiv: return curl_div(f);
    case OpName::CurlDivT: return curl_div_t(f);
    case OpName::DivDiv: return div_div(f);
    case OpName::CurlDeff: return curl_deff(f);
    case OpName::TCurlDeff: return t_curl_deff(f);
  }
  throw std::invalid_argument("unknown operator");
}

TypedField apply(const OperatorId& op, const TypedField& f) {
  TypedField out = apply(op.name, f);
  return op.scale == Rational(1) ? out : op.scale * out;
}

}  // namespace tensorcomplex
