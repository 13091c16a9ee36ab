#include "tensorcomplex/complexgraph.hpp"

#include <functional>
#include <stdexcept>

#include "tensorcomplex/parallel.hpp"
#include "tensorcomplex/random_field.hpp"

namespace tensorcomplex {

std::string_view flavor_name(Flavor f) { return f == Flavor::WithBc ? "with-bc" : "no-bc"; }

std::optional<Flavor> parse_flavor(std::string_view name) {
  if (name == "with-bc") return Flavor::WithBc;
  if (name == "no-bc") return Flavor::NoBc;
  return std::nullopt;
}

std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Right: return "right";
    case Orientation::Down: return "down";
    case Orientation::Diagonal: return "diagonal";
  }
  return "?";
}

std::string to_string(const NodePos& p) { return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")"; }

std::string describe(const OperatorId& op) {
  std::string name(op_name(op.name));
  return op.scale == Rational(1) ? name : op.scale.str() + " " + name;
}

DiagramGraph::DiagramGraph(Flavor flavor, std::vector<SpaceNode> nodes, std::vector<EdgeOp> edges)
    : flavor_(flavor), nodes_(std::move(nodes)), edges_(std::move(edges)) {}

const SpaceNode& DiagramGraph::node(NodePos p) const {
  if (p.row < 1 || p.row > 4 || p.col < 1 || p.col > 4) throw std::out_of_range("node " + to_string(p) + " is off the grid");
  return nodes_[static_cast<std::size_t>(4 * (p.row - 1) + (p.col - 1))];
}

const EdgeOp* DiagramGraph::edge(NodePos from, NodePos to) const {
  for (const auto& e : edges_)
    if (e.from == from && e.to == to) return &e;
  return nullptr;
}

std::vector<EdgeOp> DiagramGraph::first_order_edges() const {
  std::vector<EdgeOp> out;
  for (const auto& e : edges_)
    if (e.orientation != Orientation::Diagonal) out.push_back(e);
  return out;
}

std::vector<EdgeOp> DiagramGraph::diagonal_edges() const {
  std::vector<EdgeOp> out;
  for (const auto& e : edges_)
    if (e.orientation == Orientation::Diagonal) out.push_back(e);
  return out;
}

std::vector<NodePos> DiagramGraph::cells() const {
  std::vector<NodePos> out;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) out.push_back({r, c});
  return out;
}

DiagramGraph build_diagram(Flavor flavor) {
  using K = FieldKind;
  const K kinds[4][4] = {{K::Scalar, K::Vector, K::Vector, K::Scalar},
                         {K::Vector, K::SymMatrix, K::TraceFree, K::Vector},
                         {K::Vector, K::TraceFree, K::SymMatrix, K::Vector},
                         {K::Scalar, K::Vector, K::Vector, K::Scalar}};
  const char* with_bc[4][4] = {{"H̊(grad)", "H̊(curl)", "H̊(div)", "L₂,ℝ"},
                               {"H̊(curl)", "H̊_cc", "H̊_cd", "H̃⁻¹_RT(curl)"},
                               {"H̊(div)", "H̊_cdᵀ", "H̊_dd", "H̃⁻¹_ND(div)"},
                               {"L₂,ℝ", "H̃⁻¹_RT(curl)", "H̃⁻¹_ND(div)", "H̃⁻¹_P1"}};
  const char* no_bc[4][4] = {{"H¹", "H(curl)", "H(div)", "L₂"},
                             {"H(curl)", "H_cc", "H_cd", "H⁻¹(curl)"},
                             {"H(div)", "H_cdᵀ", "H_dd", "H⁻¹(div)"},
                             {"L₂", "H⁻¹(curl)", "H⁻¹(div)", "H⁻¹"}};
  std::vector<SpaceNode> nodes;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      nodes.push_back({{r + 1, c + 1}, kinds[r][c], flavor == Flavor::WithBc ? with_bc[r][c] : no_bc[r][c]});

  using O = OpName;
  const Rational one(1), half(1, 2), third(1, 3);
  // right[r][c]: edge (r,c) -> (r,c+1); down[r][c]: edge (r,c) -> (r+1,c).
  const OperatorId right[4][3] = {{{O::Grad, one}, {O::Curl, one}, {O::Div, one}},
                                  {{O::Deff, one}, {O::Curl, one}, {O::Div, one}},
                                  {{O::DevGrad, half}, {O::SymCurl, one}, {O::Div, one}},
                                  {{O::Grad, third}, {O::Curl, half}, {O::Div, one}}};
  const OperatorId down[3][4] = {{{O::Grad, one}, {O::Deff, one}, {O::TDevGrad, half}, {O::Grad, third}},
                                 {{O::Curl, one}, {O::TCurl, one}, {O::SymCurlT, one}, {O::Curl, half}},
                                 {{O::Div, one}, {O::DivT, one}, {O::Div, one}, {O::Div, one}}};
  const OperatorId diagonal[3][3] = {{{O::Hess, one}, {O::CurlDeff, one}, {O::GradDiv, third}},
                                     {{O::TCurlDeff, one}, {O::Inc, one}, {O::CurlDiv, half}},
                                     {{O::GradDiv, third}, {O::CurlDivT, half}, {O::DivDiv, one}}};
  std::vector<EdgeOp> edges;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) edges.push_back({{r + 1, c + 1}, {r + 1, c + 2}, right[r][c], Orientation::Right});
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) edges.push_back({{r + 1, c + 1}, {r + 2, c + 1}, down[r][c], Orientation::Down});
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) edges.push_back({{r + 1, c + 1}, {r + 2, c + 2}, diagonal[r][c], Orientation::Diagonal});
  return DiagramGraph(flavor, std::move(nodes), std::move(edges));
}

Path::Path(std::vector<EdgeOp> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw std::invalid_argument("a path needs at least one edge");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].orientation == Orientation::Diagonal) throw std::invalid_argument("paths use first-order edges only");
    if (i > 0 && !(edges_[i - 1].to == edges_[i].from)) throw std::invalid_argument("path edges are not consecutive");
  }
}

std::string Path::str() const {
  std::string out;
  for (const auto& e : edges_) out += to_string(e.from) + " " + describe(e.op) + " -> ";
  return out + to_string(end());
}

std::vector<Path> enumerate_paths(const DiagramGraph& g, int length) {
  if (length < 1) throw std::invalid_argument("path length must be at least 1");
  std::vector<Path> out;
  std::vector<EdgeOp> stack;
  std::function<void(NodePos)> extend = [&](NodePos at) {
    if (static_cast<int>(stack.size()) == length) {
      out.emplace_back(stack);
      return;
    }
    for (NodePos next : {NodePos{at.row, at.col + 1}, NodePos{at.row + 1, at.col}}) {
      const EdgeOp* e = g.edge(at, next);
      if (!e) continue;
      stack.push_back(*e);
      extend(next);
      stack.pop_back();
    }
  };
  for (const auto& n : g.nodes()) extend(n.pos);
  return out;
}

TypedField apply_path(const DiagramGraph& g, const Path& p, const TypedField& f) {
  TypedField current = f;
  for (const auto& e : p.edges()) {
    const SpaceNode& from = g.node(e.from);
    if (!kind_accepts(from.kind, current.kind()))
      throw KindError("field of kind " + std::string(kind_name(current.kind())) + " does not match node " +
                      to_string(e.from) + " of kind " + std::string(kind_name(from.kind)));
    current = apply(e.op, current);
  }
  const SpaceNode& last = g.node(p.end());
  if (!kind_accepts(last.kind, current.kind()))
    throw KindError("path output of kind " + std::string(kind_name(current.kind())) + " does not match node " +
                    to_string(p.end()));
  return current;
}

OpName mirrored_op(OpName op, FieldKind input) {
  const bool matrix_in = is_matrix_kind(input);
  // Operators that transpose their input are unchanged on symmetric inputs.
  if (input == FieldKind::SymMatrix &&
      (op == OpName::Div || op == OpName::DivT || op == OpName::SymCurl || op == OpName::SymCurlT ||
       op == OpName::CurlDiv || op == OpName::CurlDivT))
    return op;
  switch (op) {
    case OpName::Curl: return matrix_in ? OpName::TCurl : OpName::Curl;
    case OpName::TCurl: return OpName::Curl;
    case OpName::Div: return matrix_in ? OpName::DivT : OpName::Div;
    case OpName::DivT: return OpName::Div;
    case OpName::DevGrad: return OpName::TDevGrad;
    case OpName::TDevGrad: return OpName::DevGrad;
    case OpName::SymCurl: return OpName::SymCurlT;
    case OpName::SymCurlT: return OpName::SymCurl;
    case OpName::CurlDiv: return OpName::CurlDivT;
    case OpName::CurlDivT: return OpName::CurlDiv;
    case OpName::CurlDeff: return OpName::TCurlDeff;
    case OpName::TCurlDeff: return OpName::CurlDeff;
    case OpName::Grad:
      if (matrix_in || input == FieldKind::Vector) throw std::invalid_argument("grad of a vector has no mirrored edge");
      return OpName::Grad;
    default: return op;
  }
}

bool is_diagonally_symmetric(const DiagramGraph& g) {
  for (const auto& e : g.edges()) {
    const EdgeOp* m = g.edge({e.from.col, e.from.row}, {e.to.col, e.to.row});
    if (!m) return false;
    if (m->op.scale != e.op.scale) return false;
    if (m->op.name != mirrored_op(e.op.name, g.node(e.from).kind)) return false;
    if (g.node(m->from).kind != g.node(e.from).kind) return false;
  }
  return true;
}

namespace {

template <class Check>
CheckOutcome run_samples(const std::string& stream, std::size_t samples, std::uint64_t seed, Check check) {
  auto results = parallel_map(samples, [&](std::size_t i) {
    CheckOutcome o;
    FieldSampler sampler(seed, stream, i);
    check(sampler, o);
    return o;
  });
  CheckOutcome total;
  for (const auto& r : results) total.merge(r);
  return total;
}

const EdgeOp& require_edge(const DiagramGraph& g, NodePos a, NodePos b) {
  const EdgeOp* e = g.edge(a, b);
  if (!e) throw std::invalid_argument("no edge " + to_string(a) + " -> " + to_string(b));
  return *e;
}

}  // namespace

CheckOutcome check_cell(const DiagramGraph& g, NodePos cell, std::size_t samples, int degree, std::uint64_t seed) {
  if (cell.row < 1 || cell.row > 3 || cell.col < 1 || cell.col > 3)
    throw std::invalid_argument("cell " + to_string(cell) + " is not an interior cell");
  NodePos tr{cell.row, cell.col + 1}, bl{cell.row + 1, cell.col}, br{cell.row + 1, cell.col + 1};
  Path right_down({require_edge(g, cell, tr), require_edge(g, tr, br)});
  Path down_right({require_edge(g, cell, bl), require_edge(g, bl, br)});
  FieldKind kind = g.node(cell).kind;
  auto out = run_samples("cell" + to_string(cell), samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
    TypedField f = s.field(kind, degree);
    if (apply_path(g, right_down, f).same_values(apply_path(g, down_right, f)))
      o.record_pass();
    else
      o.record_failure("cell " + to_string(cell) + " does not commute", f);
  });
  if (out.passed()) out.message = right_down.str() + " == " + down_right.str();
  return out;
}

CheckOutcome check_diagonal(const DiagramGraph& g, const EdgeOp& d, std::size_t samples, int degree,
                            std::uint64_t seed) {
  if (d.orientation != Orientation::Diagonal) throw std::invalid_argument("not a diagonal edge");
  NodePos tr{d.from.row, d.from.col + 1}, bl{d.from.row + 1, d.from.col};
  Path right_down({require_edge(g, d.from, tr), require_edge(g, tr, d.to)});
  Path down_right({require_edge(g, d.from, bl), require_edge(g, bl, d.to)});
  FieldKind kind = g.node(d.from).kind;
  return run_samples("diagonal" + to_string(d.from), samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
    TypedField f = s.field(kind, degree);
    TypedField direct = apply(d.op, f);
    if (direct.same_values(apply_path(g, right_down, f)) && direct.same_values(apply_path(g, down_right, f)))
      o.record_pass();
    else
      o.record_failure(describe(d.op) + " differs from its factorizations", f);
  });
}

CheckOutcome check_path_vanishes(const DiagramGraph& g, const Path& p, std::size_t samples, int degree,
                                 std::uint64_t seed) {
  FieldKind kind = g.node(p.start()).kind;
  auto out = run_samples("path" + p.str(), samples, seed, [&](FieldSampler& s, CheckOutcome& o) {
    TypedField f = s.field(kind, degree);
    if (apply_path(g, p, f).is_zero())
      o.record_pass();
    else
      o.record_failure("composite along " + p.str() + " is nonzero", f);
  });
  if (out.passed()) out.message = p.str();
  return out;
}

std::vector<PathOutcome> check_two_complex(const DiagramGraph& g, std::size_t samples, int degree, std::uint64_t seed) {
  std::vector<PathOutcome> out;
  for (auto& p : enumerate_paths(g, 3)) {
    CheckOutcome o = check_path_vanishes(g, p, samples, degree, seed);
    out.push_back({std::move(p), std::move(o)});
  }
  return out;
}

namespace {

struct ComplexStep {
  FieldKind input;
  std::function<TypedField(const TypedField&)> composite;
  std::string statement;
};

std::vector<ComplexStep> complex_steps(std::string_view name) {
  const Rational half(1, 2);
  if (name == "hessian")
    return {{FieldKind::Scalar, [](const TypedField& w) { return curl(hess(w)); }, "curl hess = 0"},
            {FieldKind::SymMatrix, [](const TypedField& g) { return div(curl(g)); }, "div curl = 0 on sym"}};
  if (name == "elasticity")
    return {{FieldKind::Vector, [](const TypedField& u) { return inc(deff(u)); }, "inc deff = 0"},
            {FieldKind::SymMatrix, [](const TypedField& g) { return div(inc(g)); }, "div inc = 0"}};
  if (name == "divdiv")
    return {{FieldKind::Vector, [half](const TypedField& u) { return sym_curl(half * dev_grad(u)); },
             "sym curl 1/2 dev grad = 0"},
            {FieldKind::TraceFree, [](const TypedField& t) { return div_div(sym_curl(t)); }, "div div sym curl = 0"}};
  throw std::invalid_argument("unknown derived complex '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& derived_complex_names() {
  static const std::vector<std::string> names = {"hessian", "elasticity", "divdiv"};
  return names;
}

CheckOutcome check_derived_complex(std::string_view name, std::size_t samples, int degree, std::uint64_t seed) {
  CheckOutcome total;
  std::string statements;
  int index = 0;
  for (const auto& step : complex_steps(name)) {
    total.merge(run_samples("complex/" + std::string(name) + "/" + std::to_string(index++), samples, seed,
                            [&](FieldSampler& s, CheckOutcome& o) {
                              TypedField f = s.field(step.input, degree);
                              if (step.composite(f).is_zero())
                                o.record_pass();
                              else
                                o.record_failure(step.statement + " fails", f);
                            }));
    statements += (statements.empty() ? "" : "; ") + step.statement;
  }
  if (total.passed()) total.message = statements;
  return total;
}

nlohmann::ordered_json diagram_to_json(const DiagramGraph& g) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["flavor"] = std::string(flavor_name(g.flavor()));
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : g.nodes())
    j["nodes"].push_back({{"row", n.pos.row}, {"col", n.pos.col}, {"kind", kind_name(n.kind)}, {"label", n.label}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"from", {e.from.row, e.from.col}},
                          {"to", {e.to.row, e.to.col}},
                          {"op", op_name(e.op.name)},
                          {"scale", e.op.scale.str()},
                          {"orientation", orientation_name(e.orientation)}});
  return j;
}

std::string diagram_to_markdown(const DiagramGraph& g) {
  std::string out = "# Diagram (" + std::string(flavor_name(g.flavor())) + ")\n\n";
  out += "| node | kind | space |\n|---|---|---|\n";
  for (const auto& n : g.nodes())
    out += "| " + to_string(n.pos) + " | " + std::string(kind_name(n.kind)) + " | " + n.label + " |\n";
  out += "\n| from | to | operator | orientation |\n|---|---|---|---|\n";
  for (const auto& e : g.edges())
    out += "| " + to_string(e.from) + " | " + to_string(e.to) + " | " + describe(e.op) + " | " +
           std::string(orientation_name(e.orientation)) + " |\n";
  return out;
}

}  // namespace tensorcomplex
