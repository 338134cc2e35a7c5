#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "treeopt/counting.hpp"
#include "treeopt/cycle_completion.hpp"
#include "treeopt/flownet.hpp"
#include "treeopt/partitioning.hpp"
#include "treeopt/spanning.hpp"
#include "treeopt/tree_core.hpp"
#include "treeopt/treebuild.hpp"

namespace treeopt {

using Json = nlohmann::json;

// Parses a document and checks the top-level shape; parse failures carry the
// byte offset from the JSON reader.
Json load_instance(std::istream& in);

std::string instance_kind(const Json& doc);

// kind: "tree". Fields: n, root (default 1), edges [[u,v] or [u,v,w]],
// optional vertex_weights [n], extra_edges [[u,v,w]], Q, k, sz, cv, ce.
RootedTree tree_from_json(const Json& doc, bool need_vertex_weights = false);
std::vector<ExtraEdge> extras_from_json(const Json& doc);
ConnectedPartSpec connected_spec_from_json(const Json& doc, int n);

// kind: "bounded-dag". vertices: [{lbv,ubv,cv,source,dest}]; edges:
// [{u,v,lbe,ube,ce}].
BoundedDigraph dag_from_json(const Json& doc);

// kind: "weighted-graph". Fields: n, edges [[u,v,w]], optional r, k.
WeightedGraph graph_from_json(const Json& doc);

// kind: "leaf-seq". Field: h.
LeafSeq leafseq_from_json(const Json& doc);

// kind: "count-spec". Fields: n, S, mode ("degree"|"sons").
ConstraintSet constraints_from_json(const Json& doc);

Json tree_to_json(const RootedTree& t);
Json dag_to_json(const BoundedDigraph& g);
Json graph_to_json(const WeightedGraph& g);
Json leafseq_to_json(const LeafSeq& seq);

}  // namespace treeopt
