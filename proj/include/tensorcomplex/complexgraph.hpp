#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tensorcomplex/check.hpp"
#include "tensorcomplex/diffops.hpp"

namespace tensorcomplex {

enum class Flavor { WithBc, NoBc };
enum class Orientation { Right, Down, Diagonal };

std::string_view flavor_name(Flavor f);
std::optional<Flavor> parse_flavor(std::string_view name);
std::string_view orientation_name(Orientation o);

/// 1-based grid position.
struct NodePos {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const NodePos&, const NodePos&) = default;
};

std::string to_string(const NodePos& p);

struct SpaceNode {
  NodePos pos;
  FieldKind kind;
  std::string label;
};

struct EdgeOp {
  NodePos from;
  NodePos to;
  OperatorId op;
  Orientation orientation;
};

/// Display form such as "1/2 T_dev_grad".
std::string describe(const OperatorId& op);

/// The 4x4 grid of spaces with its 12 right, 12 down and 9 diagonal edges.
class DiagramGraph {
 public:
  DiagramGraph(Flavor flavor, std::vector<SpaceNode> nodes, std::vector<EdgeOp> edges);

  Flavor flavor() const { return flavor_; }
  const std::vector<SpaceNode>& nodes() const { return nodes_; }
  const std::vector<EdgeOp>& edges() const { return edges_; }
  const SpaceNode& node(NodePos p) const;
  /// The edge between two positions, if any.
  const EdgeOp* edge(NodePos from, NodePos to) const;
  std::vector<EdgeOp> first_order_edges() const;
  std::vector<EdgeOp> diagonal_edges() const;
  /// Top-left corners of the 9 interior cells, row-major.
  std::vector<NodePos> cells() const;

 private:
  Flavor flavor_;
  std::vector<SpaceNode> nodes_;
  std::vector<EdgeOp> edges_;
};

DiagramGraph build_diagram(Flavor flavor);

/// A nonempty chain of consecutive first-order edges.
class Path {
 public:
  /// Throws std::invalid_argument if empty or not chained.
  explicit Path(std::vector<EdgeOp> edges);

  const std::vector<EdgeOp>& edges() const { return edges_; }
  NodePos start() const { return edges_.front().from; }
  NodePos end() const { return edges_.back().to; }
  /// e.g. "(1,1) grad -> (2,1) curl -> (3,1) div -> (4,1)".
  std::string str() const;

 private:
  std::vector<EdgeOp> edges_;
};

/// All monotone paths with exactly `length` first-order edges, ordered by start
/// node (row-major) and then right-before-down at every step. length >= 1.
std::vector<Path> enumerate_paths(const DiagramGraph& g, int length);

/// Applies the scaled edge operators in order, checking kinds against every node.
TypedField apply_path(const DiagramGraph& g, const Path& p, const TypedField& f);

/// The operator obtained by transposing matrix-valued inputs and outputs, i.e. the
/// label of the edge mirrored across the diagonal.
OpName mirrored_op(OpName op, FieldKind input);

/// True if every edge (r,c)->(r',c') has a partner (c,r)->(c',r') carrying the
/// mirrored operator with the same scale.
bool is_diagonally_symmetric(const DiagramGraph& g);

/// down o right == right o down on the cell with top-left corner `cell`.
CheckOutcome check_cell(const DiagramGraph& g, NodePos cell, std::size_t samples, int degree, std::uint64_t seed);

/// A diagonal edge equals both two-step factorizations around its cell.
CheckOutcome check_diagonal(const DiagramGraph& g, const EdgeOp& diagonal, std::size_t samples, int degree,
                            std::uint64_t seed);

/// Composite of a length-3 path vanishes.
CheckOutcome check_path_vanishes(const DiagramGraph& g, const Path& p, std::size_t samples, int degree,
                                 std::uint64_t seed);

struct PathOutcome {
  Path path;
  CheckOutcome outcome;
};

std::vector<PathOutcome> check_two_complex(const DiagramGraph& g, std::size_t samples, int degree, std::uint64_t seed);

/// "hessian", "elasticity" or "divdiv".
const std::vector<std::string>& derived_complex_names();
CheckOutcome check_derived_complex(std::string_view name, std::size_t samples, int degree, std::uint64_t seed);

nlohmann::ordered_json diagram_to_json(const DiagramGraph& g);
std::string diagram_to_markdown(const DiagramGraph& g);

}  // namespace tensorcomplex
