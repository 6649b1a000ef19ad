#include "gcorr/io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "gcorr/errors.hpp"

namespace gcorr::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { input_error(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

long integer_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long>();
}

double real_at(const Json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) bad(where, "expected a finite number");
  return x;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(string_at(j[k], where + "/" + std::to_string(k)));
  return out;
}

}  // namespace

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a matrix (array of rows)");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return CMatrix(0, 0);
  if (!j[0].is_array()) bad(where + "/0", "expected a row array");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::string rpath = where + "/" + std::to_string(i);
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      bad(rpath, "expected a row of " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const std::string epath = rpath + "/" + std::to_string(k);
      const Json& z = row[static_cast<std::size_t>(k)];
      if (!z.is_array() || z.size() != 2) bad(epath, "expected a complex number [re, im]");
      m(i, k) = Complex(real_at(z[0], epath + "/0"), real_at(z[1], epath + "/1"));
    }
  }
  return m;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

GraphPtr graph_from_json(const Json& j, const std::string& where) {
  auto vertices = string_list(member(j, "vertices", where), where + "/vertices");
  const Json& ej = member(j, "edges", where);
  if (!ej.is_array()) bad(where + "/edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < ej.size(); ++k) {
    const std::string p = where + "/edges/" + std::to_string(k);
    edges.push_back({string_at(member(ej[k], "id", p), p + "/id"), string_at(member(ej[k], "src", p), p + "/src"),
                     string_at(member(ej[k], "dst", p), p + "/dst")});
  }
  try {
    return make_graph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

Json to_json(const DimVector& d, const std::vector<std::string>& order) {
  Json out = Json::object();
  for (const auto& v : order) out[v] = d.at(v);
  return out;
}

DimVector dims_from_json(const Json& j, const std::string& where, std::vector<std::string>* order) {
  if (!j.is_object()) bad(where, "expected an object of vertex dimensions");
  std::map<std::string, int> dims;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const long d = integer_at(it.value(), where + "/" + it.key());
    if (d < 1 || d > 1 << 16) bad(where + "/" + it.key(), "dimension must be a positive integer");
    dims[it.key()] = static_cast<int>(d);
    if (order) order->push_back(it.key());
  }
  return DimVector(std::move(dims));
}

Json to_json(const ToeplitzRep& rep) {
  Json edges = Json::object();
  for (const auto& e : rep.graph().edges()) edges[e.id] = to_json(rep.edge_block(e.id));
  return {{"graph", to_json(rep.graph())},
          {"vertex_order", rep.layout().vertex_order()},
          {"dims", to_json(rep.layout().dims(), rep.layout().vertex_order())},
          {"edges", std::move(edges)}};
}

ToeplitzRep rep_from_json(const Json& j, const std::string& where) {
  GraphPtr g = graph_from_json(member(j, "graph", where), where + "/graph");
  auto order = string_list(member(j, "vertex_order", where), where + "/vertex_order");
  DimVector dims = dims_from_json(member(j, "dims", where), where + "/dims");
  const Json& ej = member(j, "edges", where);
  if (!ej.is_object()) bad(where + "/edges", "expected an object keyed by edge id");
  std::map<std::string, CMatrix> blocks;
  for (auto it = ej.begin(); it != ej.end(); ++it) {
    blocks.emplace(it.key(), matrix_from_json(it.value(), where + "/edges/" + it.key()));
  }
  try {
    return ToeplitzRep(g, BlockLayout(std::move(order), std::move(dims)), std::move(blocks));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

Json to_json(const Endo& a) {
  const BlockLayout& layout = a.layout();
  Json images = Json::array();
  for (const auto& u : matrix_units(layout)) {
    Json value = Json::object();
    for (const auto& v : layout.vertex_order()) value[v] = to_json(a.image(u).block(v));
    images.push_back({{"block", u.vertex}, {"p", u.p}, {"q", u.q}, {"value", std::move(value)}});
  }
  return {{"vertex_order", layout.vertex_order()},
          {"dims", to_json(layout.dims(), layout.vertex_order())},
          {"images", std::move(images)}};
}

Endo endo_from_json(const Json& j, const std::string& where) {
  auto order = string_list(member(j, "vertex_order", where), where + "/vertex_order");
  DimVector dims = dims_from_json(member(j, "dims", where), where + "/dims");
  BlockLayout layout = [&] {
    try {
      return BlockLayout(order, dims);
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }();
  const Json& ij = member(j, "images", where);
  if (!ij.is_array()) bad(where + "/images", "expected an array");
  std::vector<std::optional<BlockOperator>> slots(layout.unit_count());
  for (std::size_t k = 0; k < ij.size(); ++k) {
    const std::string p = where + "/images/" + std::to_string(k);
    const std::string block = string_at(member(ij[k], "block", p), p + "/block");
    const long pp = integer_at(member(ij[k], "p", p), p + "/p");
    const long qq = integer_at(member(ij[k], "q", p), p + "/q");
    if (!layout.contains(block)) bad(p + "/block", "unknown vertex '" + block + "'");
    if (pp < 0 || qq < 0 || pp >= layout.dim(block) || qq >= layout.dim(block)) bad(p, "matrix unit index out of range");
    const Json& vj = member(ij[k], "value", p);
    if (!vj.is_object()) bad(p + "/value", "expected an object keyed by vertex");
    std::map<std::string, CMatrix> blocks;
    for (auto it = vj.begin(); it != vj.end(); ++it) {
      blocks.emplace(it.key(), matrix_from_json(it.value(), p + "/value/" + it.key()));
    }
    const std::size_t slot = layout.unit_index(block, pp, qq);
    if (slots[slot]) bad(p, "duplicate image for matrix unit (" + block + "," + std::to_string(pp) + "," + std::to_string(qq) + ")");
    try {
      slots[slot].emplace(layout, std::move(blocks));
    } catch (const Error& e) {
      bad(p + "/value", e.what());
    }
  }
  std::vector<BlockOperator> images;
  const auto units = matrix_units(layout);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) bad(where + "/images", "missing image for matrix unit " + describe(units[k]));
    images.push_back(std::move(*slots[k]));
  }
  return Endo(std::move(layout), std::move(images));
}

Json to_json(const Cue& c) {
  Json b = Json::object();
  for (const auto& v : c.source->vertices()) b[v] = c.vertex_bijection.at(v);
  return {{"source_graph", to_json(*c.source)}, {"target_graph", to_json(*c.target)}, {"vertex_bijection", std::move(b)},
          {"U", to_json(c.u)}};
}

Cue cue_from_json(const Json& j, const std::string& where) {
  Cue c;
  c.source = graph_from_json(member(j, "source_graph", where), where + "/source_graph");
  c.target = graph_from_json(member(j, "target_graph", where), where + "/target_graph");
  const Json& bj = member(j, "vertex_bijection", where);
  if (!bj.is_object()) bad(where + "/vertex_bijection", "expected an object");
  for (auto it = bj.begin(); it != bj.end(); ++it) {
    c.vertex_bijection[it.key()] = string_at(it.value(), where + "/vertex_bijection/" + it.key());
  }
  c.u = matrix_from_json(member(j, "U", where), where + "/U");
  const auto rows = static_cast<Eigen::Index>(c.target->edge_count());
  const auto cols = static_cast<Eigen::Index>(c.source->edge_count());
  if (c.u.size() == 0 && (rows == 0 || cols == 0)) c.u.resize(rows, cols);
  if (c.u.rows() != rows || c.u.cols() != cols) {
    bad(where + "/U", "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
  return c;
}

Json to_json(const GraphIso& iso) {
  Json v = Json::object(), e = Json::object();
  for (const auto& [a, b] : iso.vertex_map) v[a] = b;
  for (const auto& [a, b] : iso.edge_map) e[a] = b;
  return {{"vertex_map", std::move(v)}, {"edge_map", std::move(e)}};
}

Json to_json(const ConjugacyWitness& w) { return {{"V", to_json(w.v)}, {"cue", to_json(w.cue)}, {"residual", w.residual}}; }

Json report_json(const FactorizationResult& r) {
  Json mult = Json::object();
  const auto& order = r.rep.layout().vertex_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    Json row = Json::object();
    for (std::size_t k = 0; k < order.size(); ++k) {
      row[order[k]] = r.multiplicities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    }
    mult[order[i]] = std::move(row);
  }
  Json cois = Json::object();
  for (const auto& v : order) cois[v] = r.coisometric.at_vertex.at(v);
  return {{"multiplicities", std::move(mult)}, {"residual", r.residual}, {"unital", r.unital}, {"coisometric", std::move(cois)}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    input_error(path + ": invalid JSON (" + e.what() + ")");
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) input_error(path + ": cannot write file");
  out << j.dump(2) << '\n';
  if (!out) input_error(path + ": write failed");
}

std::string schemas() {
  return R"(complex scalar : [re, im]                      (IEEE-754 doubles)
matrix         : [[z, z, ...], ...]             (array of rows of complex scalars)
graph.json     : {"vertices": [name, ...],
                  "edges": [{"id": name, "src": vertex, "dst": vertex}, ...]}
                 src is the source s(e), dst is the range r(e).
dims.json      : {vertex: positive int, ...}   (key order is the block order)
rep.json       : {"graph": graph, "vertex_order": [vertex, ...], "dims": dims,
                  "edges": {edge_id: d_dst x d_src matrix, ...}}
endo.json      : {"vertex_order": [...], "dims": dims,
                  "images": [{"block": vertex, "p": int, "q": int,
                              "value": {vertex: d_v x d_v matrix, ...}}, ...]}
                 one image per matrix unit E^(block)_pq, 0-based p, q.
cue.json       : {"source_graph": graph, "target_graph": graph,
                  "vertex_bijection": {source vertex: target vertex, ...},
                  "U": |target edges| x |source edges| matrix}
witness.json   : {"V": n x n matrix, "cue": cue, "residual": number}
report.json    : {"multiplicities": {i: {j: n_ij}}, "residual": number,
                  "unital": bool, "coisometric": {vertex: bool}}
)";
}

}  // namespace gcorr::io
