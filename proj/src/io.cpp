#include "treeopt/io.hpp"

#include <istream>

namespace treeopt {

namespace {

int require_int(const Json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_number_integer())
    throw InputError("missing or non-integer field '" + field + "'");
  return doc[field].get<int>();
}

long long opt_ll(const Json& j, const std::string& field, long long dflt) {
  if (!j.contains(field)) return dflt;
  if (!j[field].is_number_integer())
    throw InputError("field '" + field + "' must be an integer");
  return j[field].get<long long>();
}

}  // namespace

Json load_instance(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("document parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw InputError("document must be an object with a string 'kind'");
  return doc;
}

std::string instance_kind(const Json& doc) {
  return doc["kind"].get<std::string>();
}

RootedTree tree_from_json(const Json& doc, bool need_vertex_weights) {
  if (instance_kind(doc) != "tree") throw InputError("expected kind 'tree'");
  int n = require_int(doc, "n");
  int root = doc.contains("root") ? require_int(doc, "root") : 1;
  std::vector<TreeEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("edges must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw InputError("each edge must be [u, v] or [u, v, w]");
      TreeEdge te;
      te.u = e[0].get<int>();
      te.v = e[1].get<int>();
      te.w = e.size() == 3 ? e[2].get<long long>() : 1;
      edges.push_back(te);
    }
  }
  RootedTree t = root_at(n, edges, root, false);
  if (doc.contains("vertex_weights")) {
    const auto& w = doc["vertex_weights"];
    if (!w.is_array() || static_cast<int>(w.size()) != n)
      throw InputError("vertex_weights must list n values");
    t.vertex_weight.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
      t.vertex_weight[i + 1] = w[i].get<long long>();
  } else if (need_vertex_weights) {
    throw InputError("this operation requires vertex_weights");
  }
  return t;
}

std::vector<ExtraEdge> extras_from_json(const Json& doc) {
  std::vector<ExtraEdge> extras;
  if (!doc.contains("extra_edges")) return extras;
  if (!doc["extra_edges"].is_array())
    throw InputError("extra_edges must be an array");
  for (const auto& e : doc["extra_edges"]) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw InputError("each extra edge must be [u, v] or [u, v, w]");
    ExtraEdge x;
    x.u = e[0].get<int>();
    x.v = e[1].get<int>();
    x.w = e.size() == 3 ? e[2].get<long long>() : 1;
    extras.push_back(x);
  }
  return extras;
}

ConnectedPartSpec connected_spec_from_json(const Json& doc, int n) {
  ConnectedPartSpec spec;
  spec.k = require_int(doc, "k");
  if (!doc.contains("sz") || !doc["sz"].is_array())
    throw InputError("field 'sz' must be an array of part sizes");
  spec.sz.assign(1, 0);
  for (const auto& x : doc["sz"]) spec.sz.push_back(x.get<int>());
  auto costs = [&](const std::string& field) {
    std::vector<long long> v(1, 0);
    if (!doc.contains(field)) {
      v.assign(n + 1, 0);
      return v;
    }
    if (!doc[field].is_array() || static_cast<int>(doc[field].size()) != n)
      throw InputError("field '" + field + "' must list n values");
    for (const auto& x : doc[field]) v.push_back(x.get<long long>());
    return v;
  };
  spec.cv = costs("cv");
  spec.ce = costs("ce");
  return spec;
}

BoundedDigraph dag_from_json(const Json& doc) {
  if (instance_kind(doc) != "bounded-dag")
    throw InputError("expected kind 'bounded-dag'");
  BoundedDigraph g;
  g.n = require_int(doc, "n");
  g.vertex.assign(g.n + 1, {});
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array() ||
        static_cast<int>(doc["vertices"].size()) != g.n)
      throw InputError("vertices must list n entries");
    for (int i = 0; i < g.n; ++i) {
      const auto& v = doc["vertices"][i];
      BoundedVertex& b = g.vertex[i + 1];
      b.lbv = opt_ll(v, "lbv", 0);
      b.ubv = opt_ll(v, "ubv", 0);
      b.cv = opt_ll(v, "cv", 0);
      b.is_source = v.value("source", false);
      b.is_dest = v.value("dest", false);
    }
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("edges must be an array");
    for (const auto& e : doc["edges"]) {
      BoundedEdge b;
      b.u = require_int(e, "u");
      b.v = require_int(e, "v");
      b.lbe = opt_ll(e, "lbe", 0);
      b.ube = opt_ll(e, "ube", 0);
      b.ce = opt_ll(e, "ce", 0);
      g.edges.push_back(b);
    }
  }
  return g;
}

WeightedGraph graph_from_json(const Json& doc) {
  if (instance_kind(doc) != "weighted-graph")
    throw InputError("expected kind 'weighted-graph'");
  WeightedGraph g;
  g.n = require_int(doc, "n");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw InputError("edges must be an array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw InputError("each edge must be [u, v, w]");
    g.edges.push_back(
        {e[0].get<int>(), e[1].get<int>(), e[2].get<long long>()});
  }
  return g;
}

LeafSeq leafseq_from_json(const Json& doc) {
  if (instance_kind(doc) != "leaf-seq")
    throw InputError("expected kind 'leaf-seq'");
  if (!doc.contains("h") || !doc["h"].is_array())
    throw InputError("field 'h' must be an array of heights");
  LeafSeq seq;
  for (const auto& x : doc["h"]) seq.h.push_back(x.get<long long>());
  return seq;
}

ConstraintSet constraints_from_json(const Json& doc) {
  if (instance_kind(doc) != "count-spec")
    throw InputError("expected kind 'count-spec'");
  if (!doc.contains("S") || !doc["S"].is_array())
    throw InputError("field 'S' must be an array");
  ConstraintSet cs;
  for (const auto& x : doc["S"]) cs.s.insert(x.get<int>());
  std::string mode = doc.value("mode", "sons");
  if (mode == "sons") cs.mode = ConstraintMode::kSons;
  else if (mode == "degree") cs.mode = ConstraintMode::kDegree;
  else throw InputError("mode must be 'degree' or 'sons'");
  return cs;
}

Json tree_to_json(const RootedTree& t) {
  Json doc;
  doc["kind"] = "tree";
  doc["n"] = t.n;
  doc["root"] = t.root;
  Json edges = Json::array();
  for (int v = 1; v <= t.n; ++v)
    if (v != t.root) edges.push_back({t.parent[v], v});
  doc["edges"] = edges;
  return doc;
}

Json dag_to_json(const BoundedDigraph& g) {
  Json doc;
  doc["kind"] = "bounded-dag";
  doc["n"] = g.n;
  Json verts = Json::array();
  for (int u = 1; u <= g.n; ++u) {
    const BoundedVertex& v = g.vertex[u];
    verts.push_back({{"lbv", v.lbv},
                     {"ubv", v.ubv},
                     {"cv", v.cv},
                     {"source", v.is_source},
                     {"dest", v.is_dest}});
  }
  doc["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"lbe", e.lbe},
                     {"ube", e.ube},
                     {"ce", e.ce}});
  doc["edges"] = edges;
  return doc;
}

Json graph_to_json(const WeightedGraph& g) {
  Json doc;
  doc["kind"] = "weighted-graph";
  doc["n"] = g.n;
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.w});
  doc["edges"] = edges;
  return doc;
}

Json leafseq_to_json(const LeafSeq& seq) {
  Json doc;
  doc["kind"] = "leaf-seq";
  doc["h"] = seq.h;
  return doc;
}

}  // namespace treeopt
