#pragma once

// Workspace files: one JSON document holding a quiver, named
// representations and optionally named morphisms.
//
//   {
//     "quiver": {
//       "vertices": ["v0", "v1"],
//       "arrows": [{"name": "a1", "source": "v1", "target": "v0"}]
//     },
//     "representations": {
//       "M": {"dims": [2, 1], "maps": {"a1": [["1"], ["-1/2"]]}}
//     },
//     "morphisms": {
//       "f": {"source": "U", "target": "M", "components": {"v0": [["1"], ["0"]], "v1": []}}
//     }
//   }
//
// dims follow the vertex order. The matrix of a: s -> t has dims[t] rows and
// dims[s] columns, row-major; entries are strings "p" or "p/q" (JSON integers
// are accepted too). Matrices with no rows are written []; an arrow whose
// matrix is empty may be omitted.

#include <quiverrep/star.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace quiverrep {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Cyclic, Shape, Schema };
  ParseError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class NameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Field F>
struct Workspace {
  QuiverPtr quiver;
  std::vector<std::pair<std::string, RepPtr<F>>> reps;
  std::vector<std::pair<std::string, RepMorphism<F>>> morphisms;

  const RepPtr<F>& rep(const std::string& name) const {
    for (const auto& [n, r] : reps) {
      if (n == name) return r;
    }
    throw NameError("unknown representation '" + name + "'");
  }

  const RepMorphism<F>& morphism(const std::string& name) const {
    for (const auto& [n, h] : morphisms) {
      if (n == name) return h;
    }
    throw NameError("unknown morphism '" + name + "'");
  }

  std::string name_of(const RepPtr<F>& r) const {
    for (const auto& [n, x] : reps) {
      if (x == r) return n;
    }
    return {};
  }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void schema_error(const std::string& msg) {
  throw ParseError(ParseError::Kind::Schema, msg);
}

inline const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where + ": expected a string");
  return j.get<std::string>();
}

template <Field F>
F parse_entry(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return scalar_traits<F>::parse(j.get<std::string>());
    if (j.is_number_integer()) return scalar_traits<F>::parse(j.dump());
  } catch (const std::invalid_argument& e) {
    schema_error(where + ": " + e.what());
  }
  schema_error(where + ": matrix entries must be rational strings or integers");
}

/// Reads a matrix whose expected shape is known; shape_label names the
/// offending arrow or vertex in the error.
template <Field F>
Matrix<F> parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& shape_label) {
  if (!j.is_array()) schema_error(shape_label + ": matrix must be an array of rows");
  auto mismatch = [&](const std::string& got) {
    throw ParseError(ParseError::Kind::Shape, "shape mismatch at " + shape_label + ": expected " +
                                                  std::to_string(rows) + "x" + std::to_string(cols) +
                                                  ", got " + got);
  };
  if (j.size() != rows) mismatch(std::to_string(j.size()) + " rows");
  Matrix<F> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array()) schema_error(shape_label + ": row " + std::to_string(r) + " is not an array");
    if (row.size() != cols) mismatch(std::to_string(row.size()) + " entries in row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_entry<F>(row[c], shape_label);
  }
  return m;
}

template <Field F>
Json emit_matrix(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_traits<F>::to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline QuiverPtr parse_quiver(const Json& j) {
  const Json& vs = member(j, "vertices", "quiver");
  const Json& as = member(j, "arrows", "quiver");
  if (!vs.is_array() || !as.is_array()) schema_error("quiver: vertices and arrows must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(as_string(v, "quiver.vertices"));
  auto index = [&](const std::string& name, const std::string& where) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == name) return i;
    }
    schema_error(where + ": unknown vertex '" + name + "'");
  };
  std::vector<Arrow> arrows;
  for (const auto& a : as) {
    const std::string name = as_string(member(a, "name", "arrow"), "arrow.name");
    const std::string where = "arrow " + name;
    arrows.push_back({name, index(as_string(member(a, "source", where), where), where),
                      index(as_string(member(a, "target", where), where), where)});
  }
  try {
    return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
  } catch (const QuiverError& e) {
    const std::string msg = e.what();
    if (msg.find("acyclic") != std::string::npos) throw ParseError(ParseError::Kind::Cyclic, msg);
    schema_error(msg);
  }
}

}  // namespace detail

template <Field F>
Workspace<F> parse_workspace(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte);
    std::string what = e.what();
    auto pos = what.find("; ");
    throw ParseError(ParseError::Kind::Syntax, "syntax error at line " + std::to_string(line) +
                                                   ", column " + std::to_string(col) +
                                                   (pos == std::string::npos ? "" : ": " + what.substr(pos + 2)));
  }
  if (!doc.is_object()) detail::schema_error("workspace must be a JSON object");
  if (doc.contains("relations")) {
    detail::schema_error("relations are not supported: only path algebras of acyclic quivers");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "quiver" && key != "representations" && key != "morphisms") {
      detail::schema_error("unknown top-level key \"" + key + "\"");
    }
  }
  Workspace<F> ws;
  ws.quiver = detail::parse_quiver(detail::member(doc, "quiver", "workspace"));
  const Quiver& q = *ws.quiver;

  if (doc.contains("representations")) {
    const Json& reps = doc.at("representations");
    if (!reps.is_object()) detail::schema_error("representations must be an object");
    for (const auto& [name, r] : reps.items()) {
      const std::string where = "representation " + name;
      const Json& dj = detail::member(r, "dims", where);
      if (!dj.is_array() || dj.size() != q.vertex_count()) {
        detail::schema_error(where + ": dims needs one entry per vertex");
      }
      DimVector dims;
      for (const auto& d : dj) {
        if (!d.is_number_unsigned()) detail::schema_error(where + ": dims must be nonnegative integers");
        dims.push_back(d.get<std::size_t>());
      }
      const Json empty = Json::object();
      const Json& mj = r.contains("maps") ? r.at("maps") : empty;
      if (!mj.is_object()) detail::schema_error(where + ": maps must be an object");
      for (const auto& [arrow, unused] : mj.items()) {
        if (!q.arrow_index(arrow)) detail::schema_error(where + ": unknown arrow '" + arrow + "'");
      }
      std::vector<Matrix<F>> maps;
      for (const auto& a : q.arrows()) {
        const std::size_t rows = dims[a.target], cols = dims[a.source];
        if (!mj.contains(a.name)) {
          if (rows * cols != 0) detail::schema_error(where + ": missing matrix for arrow " + a.name);
          maps.emplace_back(rows, cols);
          continue;
        }
        maps.push_back(detail::parse_matrix<F>(mj.at(a.name), rows, cols, "arrow " + a.name));
      }
      ws.reps.emplace_back(name, share(Rep<F>(ws.quiver, std::move(dims), std::move(maps))));
    }
  }

  if (doc.contains("morphisms")) {
    const Json& ms = doc.at("morphisms");
    if (!ms.is_object()) detail::schema_error("morphisms must be an object");
    for (const auto& [name, h] : ms.items()) {
      const std::string where = "morphism " + name;
      RepPtr<F> src, dst;
      try {
        src = ws.rep(detail::as_string(detail::member(h, "source", where), where));
        dst = ws.rep(detail::as_string(detail::member(h, "target", where), where));
      } catch (const NameError& e) {
        detail::schema_error(where + ": " + e.what());
      }
      const Json& cj = detail::member(h, "components", where);
      if (!cj.is_object()) detail::schema_error(where + ": components must be an object");
      std::vector<Matrix<F>> comps;
      for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        const std::size_t rows = dst->dim(v), cols = src->dim(v);
        const std::string& vn = q.vertices()[v];
        if (!cj.contains(vn)) {
          if (rows * cols != 0) detail::schema_error(where + ": missing component at vertex " + vn);
          comps.emplace_back(rows, cols);
          continue;
        }
        comps.push_back(detail::parse_matrix<F>(cj.at(vn), rows, cols, "vertex " + vn + " of " + name));
      }
      try {
        ws.morphisms.emplace_back(name, RepMorphism<F>(src, dst, std::move(comps)));
      } catch (const std::invalid_argument& e) {
        detail::schema_error(where + ": " + e.what());
      }
    }
  }
  return ws;
}

template <Field F>
Json workspace_json(const Workspace<F>& ws) {
  const Quiver& q = *ws.quiver;
  Json doc;
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"name", a.name}, {"source", q.vertices()[a.source]}, {"target", q.vertices()[a.target]}});
  }
  doc["quiver"] = {{"vertices", q.vertices()}, {"arrows", arrows}};
  Json reps = Json::object();
  for (const auto& [name, r] : ws.reps) {
    Json maps = Json::object();
    for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrow(a).name] = detail::emit_matrix(r->map(a));
    reps[name] = {{"dims", r->dims()}, {"maps", maps}};
  }
  doc["representations"] = reps;
  if (!ws.morphisms.empty()) {
    Json ms = Json::object();
    for (const auto& [name, h] : ws.morphisms) {
      Json comps = Json::object();
      for (std::size_t v = 0; v < q.vertex_count(); ++v) comps[q.vertices()[v]] = detail::emit_matrix(h.at(v));
      ms[name] = {{"source", ws.name_of(h.source_ptr())},
                  {"target", ws.name_of(h.target_ptr())},
                  {"components", comps}};
    }
    doc["morphisms"] = ms;
  }
  return doc;
}

template <Field F>
std::string emit_workspace(const Workspace<F>& ws) {
  return workspace_json(ws).dump(2) + "\n";
}

template <Field F>
Workspace<F> star_workspace(const StarFamily<F>& s) {
  Workspace<F> ws;
  ws.quiver = s.quiver;
  ws.reps = {{"U", s.u}, {"V", s.v}, {"M", s.m}, {"N", s.n}};
  return ws;
}

}  // namespace quiverrep
