#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tensorcomplex/check.hpp"
#include "tensorcomplex/diffops.hpp"

namespace tensorcomplex {

enum class KoszulOp { Tg, Tc, Td };

/// Homogeneous Koszul operators, applied per homogeneous degree k:
///   Tg v = (v . x)/(k+1),  Tc q = (q x x)/(k+2),  Td u = x u/(k+3).
/// Tg and Tc act on the rows of matrix fields; Td maps a vector field to the
/// matrix whose row i is Td(u_i).
TypedField koszul_apply(KoszulOp which, const TypedField& f);
TypedField Tg(const TypedField& f);
TypedField Tc(const TypedField& f);
TypedField Td(const TypedField& f);

/// Checks Tg grad w = w - w(0), grad Tg v + Tc curl v = v,
/// curl Tc q + Td div q = q and div Td u = u on random fields.
std::vector<NamedOutcome> homotopy_check(std::size_t samples, int degree, std::uint64_t seed);

/// u - 1/2 b x x where b = curl u; throws std::invalid_argument unless curl u is constant.
TypedField constant_curl_correction(const TypedField& u);

/// Basis of ker(ops) among fields of `kind` with degree <= degree, from the exact
/// nullspace of the stacked coefficient matrix. Cached per (ops, kind, degree).
std::shared_ptr<const std::vector<TypedField>> kernel_basis(const std::vector<OpName>& ops, FieldKind kind,
                                                             int degree);

/// Random integer combination of kernel_basis; never zero.
/// Throws std::runtime_error("kernel is trivial at this degree") for an empty kernel.
TypedField sample_kernel(const std::vector<OpName>& ops, FieldKind kind, int degree, std::uint64_t seed);
TypedField sample_kernel(const OperatorId& op, FieldKind kind, int degree, std::uint64_t seed);

}  // namespace tensorcomplex
