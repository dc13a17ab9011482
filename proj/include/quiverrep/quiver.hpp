#pragma once

// Finite acyclic quivers, their representations and morphisms, and the
// Hom-space solver.

#include <quiverrep/matrix.hpp>
#include <quiverrep/sparse.hpp>

#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace quiverrep {

class QuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  /// Validates unique names, arrow endpoints and acyclicity.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) throw QuiverError("duplicate vertex name");
    std::set<std::string> arrow_names;
    for (const auto& a : arrows_) {
      if (!arrow_names.insert(a.name).second) throw QuiverError("duplicate arrow name " + a.name);
      if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
        throw QuiverError("arrow " + a.name + " has an endpoint outside the vertex list");
      }
    }
    if (!acyclic()) throw QuiverError("quiver must be acyclic");
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> vertex_index(std::string_view name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> arrow_index(std::string_view name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      if (arrows_[i].name == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  bool acyclic() const {
    std::vector<std::size_t> indegree(vertices_.size(), 0);
    for (const auto& a : arrows_) ++indegree[a.target];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
      std::size_t v = ready.back();
      ready.pop_back();
      ++visited;
      for (const auto& a : arrows_) {
        if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
      }
    }
    return visited == vertices_.size();
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;
using DimVector = std::vector<std::size_t>;

inline bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// <d, e> = sum_v d_v e_v - sum_{a: s -> t} d_s e_t.
inline long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count()) {
    throw DimensionError("euler_form: dimension vectors do not match the quiver");
  }
  long long value = 0;
  for (std::size_t v = 0; v < d.size(); ++v) value += static_cast<long long>(d[v] * e[v]);
  for (const auto& a : q.arrows()) value -= static_cast<long long>(d[a.source] * e[a.target]);
  return value;
}

inline DimVector operator+(DimVector a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionError("dimension vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline DimVector operator*(std::size_t k, DimVector a) {
  for (auto& x : a) x *= k;
  return a;
}

inline std::size_t total_dim(const DimVector& d) {
  return std::accumulate(d.begin(), d.end(), std::size_t{0});
}

/// A representation: one vector space k^{dims[v]} per vertex and, for each
/// arrow a: s -> t, a matrix of shape dims[t] x dims[s] acting on columns.
template <Field F>
class Rep {
 public:
  Rep(QuiverPtr quiver, DimVector dims, std::vector<Matrix<F>> maps)
      : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!quiver_) throw QuiverError("representation without a quiver");
    if (dims_.size() != quiver_->vertex_count()) {
      throw DimensionError("dimension vector has " + std::to_string(dims_.size()) +
                           " entries, quiver has " + std::to_string(quiver_->vertex_count()) +
                           " vertices");
    }
    if (maps_.size() != quiver_->arrow_count()) {
      throw DimensionError("representation needs one matrix per arrow");
    }
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      const auto& arr = quiver_->arrow(a);
      if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source]) {
        throw DimensionError("shape mismatch at arrow " + arr.name + ": expected " +
                             std::to_string(dims_[arr.target]) + "x" +
                             std::to_string(dims_[arr.source]) + ", got " + maps_[a].shape());
      }
    }
  }

  static Rep zero(QuiverPtr quiver) {
    DimVector d(quiver->vertex_count(), 0);
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < quiver->arrow_count(); ++a) maps.emplace_back(0, 0);
    return Rep(std::move(quiver), std::move(d), std::move(maps));
  }

  /// The simple representation concentrated at vertex v.
  static Rep simple(QuiverPtr quiver, std::size_t v) {
    DimVector d(quiver->vertex_count(), 0);
    d.at(v) = 1;
    std::vector<Matrix<F>> maps;
    for (const auto& a : quiver->arrows()) maps.emplace_back(d[a.target], d[a.source]);
    return Rep(std::move(quiver), std::move(d), std::move(maps));
  }

  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const { return quiverrep::total_dim(dims_); }
  const std::vector<Matrix<F>>& maps() const { return maps_; }
  const Matrix<F>& map(std::size_t a) const { return maps_.at(a); }

  friend bool operator==(const Rep& a, const Rep& b) {
    return same_quiver(a.quiver_, b.quiver_) && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  QuiverPtr quiver_;
  DimVector dims_;
  std::vector<Matrix<F>> maps_;
};

template <Field F>
using RepPtr = std::shared_ptr<const Rep<F>>;

template <Field F>
RepPtr<F> share(Rep<F> r) {
  return std::make_shared<const Rep<F>>(std::move(r));
}

inline void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b, const char* where) {
  if (!same_quiver(a, b)) throw QuiverError(std::string(where) + ": quiver mismatch");
}

/// Per-vertex matrices h_v : source_v -> target_v.
template <Field F>
class RepMorphism {
 public:
  /// Checks shapes and the intertwining relations exactly.
  RepMorphism(RepPtr<F> source, RepPtr<F> target, std::vector<Matrix<F>> components)
      : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
    require_same_quiver(source_->quiver_ptr(), target_->quiver_ptr(), "RepMorphism");
    const Quiver& q = source_->quiver();
    if (comps_.size() != q.vertex_count()) throw DimensionError("morphism needs one matrix per vertex");
    for (std::size_t v = 0; v < comps_.size(); ++v) {
      if (comps_[v].rows() != target_->dim(v) || comps_[v].cols() != source_->dim(v)) {
        throw DimensionError("morphism component at vertex " + q.vertices()[v] + " has shape " +
                             comps_[v].shape());
      }
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arr = q.arrow(a);
      if (!(comps_[arr.target] * source_->map(a) == target_->map(a) * comps_[arr.source])) {
        throw QuiverError("morphism does not intertwine arrow " + arr.name);
      }
    }
  }

  static RepMorphism zero(RepPtr<F> source, RepPtr<F> target) {
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < source->quiver().vertex_count(); ++v) {
      c.emplace_back(target->dim(v), source->dim(v));
    }
    return RepMorphism(std::move(source), std::move(target), std::move(c));
  }

  static RepMorphism identity(RepPtr<F> r) {
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < r->quiver().vertex_count(); ++v) {
      c.push_back(Matrix<F>::identity(r->dim(v)));
    }
    return RepMorphism(r, r, std::move(c));
  }

  const Rep<F>& source() const { return *source_; }
  const Rep<F>& target() const { return *target_; }
  const RepPtr<F>& source_ptr() const { return source_; }
  const RepPtr<F>& target_ptr() const { return target_; }
  const std::vector<Matrix<F>>& components() const { return comps_; }
  const Matrix<F>& at(std::size_t v) const { return comps_.at(v); }

  bool is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Matrix<F>& m) { return m.is_zero(); });
  }

  /// Entries of all components, vertex by vertex, row-major.
  std::vector<F> flatten() const {
    std::vector<F> out;
    for (const auto& m : comps_) out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
  }

  /// this o other
  RepMorphism compose(const RepMorphism& other) const {
    if (!(other.target() == source())) throw QuiverError("compose: morphisms are not composable");
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < comps_.size(); ++v) c.push_back(comps_[v] * other.comps_[v]);
    return RepMorphism(other.source_, target_, std::move(c));
  }

  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
    a.require_parallel(b);
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < a.comps_.size(); ++v) c.push_back(a.comps_[v] + b.comps_[v]);
    return RepMorphism(a.source_, a.target_, std::move(c));
  }

  friend RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) {
    a.require_parallel(b);
    std::vector<Matrix<F>> c;
    for (std::size_t v = 0; v < a.comps_.size(); ++v) c.push_back(a.comps_[v] - b.comps_[v]);
    return RepMorphism(a.source_, a.target_, std::move(c));
  }

  friend RepMorphism operator*(const F& s, const RepMorphism& a) {
    std::vector<Matrix<F>> c;
    for (const auto& m : a.comps_) c.push_back(s * m);
    return RepMorphism(a.source_, a.target_, std::move(c));
  }

  friend bool operator==(const RepMorphism& a, const RepMorphism& b) {
    return a.source() == b.source() && a.target() == b.target() && a.comps_ == b.comps_;
  }

 private:
  void require_parallel(const RepMorphism& b) const {
    if (!(source() == b.source() && target() == b.target())) {
      throw QuiverError("morphisms are not parallel");
    }
  }

  RepPtr<F> source_;
  RepPtr<F> target_;
  std::vector<Matrix<F>> comps_;
};

namespace detail {

/// Offsets of the per-vertex blocks of a family (h_v : X_v -> Y_v) flattened
/// vertex by vertex, row-major.
inline std::vector<std::size_t> block_offsets(const DimVector& rows, const DimVector& cols) {
  std::vector<std::size_t> off(rows.size() + 1, 0);
  for (std::size_t v = 0; v < rows.size(); ++v) off[v + 1] = off[v] + rows[v] * cols[v];
  return off;
}

/// Row space of the intertwining equations Y_a h_s - h_t X_a = 0.
template <Field F>
SparseEchelon<F> intertwining_system(const Rep<F>& x, const Rep<F>& y) {
  const Quiver& q = x.quiver();
  auto off = block_offsets(y.dims(), x.dims());
  SparseEchelon<F> system(off.back());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const std::size_t s = arr.source;
    const std::size_t t = arr.target;
    const Matrix<F>& xa = x.map(a);
    const Matrix<F>& ya = y.map(a);
    // equation (r, c): sum_k Y_a(r,k) h_s(k,c) - sum_k h_t(r,k) X_a(k,c)
    for (std::size_t r = 0; r < y.dim(t); ++r) {
      for (std::size_t c = 0; c < x.dim(s); ++c) {
        SparseRow<F> row;
        for (std::size_t k = 0; k < y.dim(s); ++k) {
          if (!is_zero(ya(r, k))) row.emplace_back(off[s] + k * x.dim(s) + c, ya(r, k));
        }
        for (std::size_t k = 0; k < x.dim(t); ++k) {
          if (!is_zero(xa(k, c))) row.emplace_back(off[t] + r * x.dim(t) + k, F(-xa(k, c)));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& l, const auto& rr) { return l.first < rr.first; });
        // s != t for acyclic quivers, so no index appears twice.
        if (!row.empty()) system.add(std::move(row));
      }
    }
  }
  return system;
}

template <Field F>
RepMorphism<F> unflatten(const RepPtr<F>& x, const RepPtr<F>& y, const std::vector<F>& v) {
  std::vector<Matrix<F>> comps;
  std::size_t pos = 0;
  for (std::size_t vert = 0; vert < x->quiver().vertex_count(); ++vert) {
    const std::size_t n = y->dim(vert) * x->dim(vert);
    comps.emplace_back(y->dim(vert), x->dim(vert),
                       std::vector<F>(v.begin() + static_cast<long>(pos),
                                      v.begin() + static_cast<long>(pos + n)));
    pos += n;
  }
  return RepMorphism<F>(x, y, std::move(comps));
}

}  // namespace detail

/// Basis of Hom(X, Y) as a list of morphisms.
template <Field F>
std::vector<RepMorphism<F>> hom_basis(const RepPtr<F>& x, const RepPtr<F>& y) {
  require_same_quiver(x->quiver_ptr(), y->quiver_ptr(), "hom_basis");
  auto system = detail::intertwining_system(*x, *y);
  Matrix<F> k = system.kernel();
  std::vector<RepMorphism<F>> basis;
  basis.reserve(k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    basis.push_back(detail::unflatten(x, y, k.col(j).entries()));
  }
  return basis;
}

template <Field F>
std::vector<RepMorphism<F>> hom_basis(const Rep<F>& x, const Rep<F>& y) {
  return hom_basis(share(x), share(y));
}

/// [X, Y] = dim Hom(X, Y).
template <Field F>
std::size_t hom_dim(const Rep<F>& x, const Rep<F>& y) {
  require_same_quiver(x.quiver_ptr(), y.quiver_ptr(), "hom_dim");
  auto system = detail::intertwining_system(x, y);
  return system.width() - system.rank();
}

/// Coordinates of a morphism with respect to a basis produced by hom_basis.
template <Field F>
std::vector<F> hom_coordinates(const std::vector<RepMorphism<F>>& basis, const RepMorphism<F>& h) {
  if (basis.empty()) {
    if (!h.is_zero()) throw QuiverError("hom_coordinates: nonzero morphism in a zero hom space");
    return {};
  }
  auto flat0 = basis.front().flatten();
  Matrix<F> b(flat0.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto col = basis[j].flatten();
    for (std::size_t i = 0; i < col.size(); ++i) b(i, j) = col[i];
  }
  auto x = solve(b, Matrix<F>::column(h.flatten()));
  if (!x) throw QuiverError("hom_coordinates: morphism is not in the span of the basis");
  return x->col(0).entries();
}

template <Field F>
RepMorphism<F> combine(const std::vector<RepMorphism<F>>& basis, const std::vector<F>& coeffs,
                       const RepPtr<F>& x, const RepPtr<F>& y) {
  auto h = RepMorphism<F>::zero(x, y);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!is_zero(coeffs[k])) h = h + coeffs[k] * basis[k];
  }
  return h;
}

template <Field F>
struct DirectSum {
  RepPtr<F> sum;
  RepMorphism<F> inject_first;
  RepMorphism<F> inject_second;
  RepMorphism<F> project_first;
  RepMorphism<F> project_second;
};

/// X (+) Y with block-diagonal arrow maps, X occupying the leading coordinates.
template <Field F>
DirectSum<F> direct_sum(const RepPtr<F>& x, const RepPtr<F>& y) {
  require_same_quiver(x->quiver_ptr(), y->quiver_ptr(), "direct_sum");
  const Quiver& q = x->quiver();
  std::vector<Matrix<F>> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps.push_back(block_diag(x->map(a), y->map(a)));
  auto sum = share(Rep<F>(x->quiver_ptr(), x->dims() + y->dims(), std::move(maps)));
  std::vector<Matrix<F>> i1, i2, p1, p2;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::size_t dx = x->dim(v), dy = y->dim(v);
    i1.push_back(vstack(Matrix<F>::identity(dx), Matrix<F>(dy, dx)));
    i2.push_back(vstack(Matrix<F>(dx, dy), Matrix<F>::identity(dy)));
    p1.push_back(hstack(Matrix<F>::identity(dx), Matrix<F>(dx, dy)));
    p2.push_back(hstack(Matrix<F>(dy, dx), Matrix<F>::identity(dy)));
  }
  return {sum,
          RepMorphism<F>(x, sum, std::move(i1)),
          RepMorphism<F>(y, sum, std::move(i2)),
          RepMorphism<F>(sum, x, std::move(p1)),
          RepMorphism<F>(sum, y, std::move(p2))};
}

template <Field F>
Rep<F> direct_sum(const Rep<F>& x, const Rep<F>& y) {
  return *direct_sum(share(x), share(y)).sum;
}

/// X^k
template <Field F>
Rep<F> power(const Rep<F>& x, std::size_t k) {
  Rep<F> r = Rep<F>::zero(x.quiver_ptr());
  for (std::size_t i = 0; i < k; ++i) r = direct_sum(r, x);
  return r;
}

/// h (+) k : X (+) X' -> Y (+) Y'
template <Field F>
RepMorphism<F> direct_sum(const RepMorphism<F>& h, const RepMorphism<F>& k) {
  auto src = direct_sum(h.source_ptr(), k.source_ptr()).sum;
  auto dst = direct_sum(h.target_ptr(), k.target_ptr()).sum;
  std::vector<Matrix<F>> c;
  for (std::size_t v = 0; v < h.components().size(); ++v) c.push_back(block_diag(h.at(v), k.at(v)));
  return RepMorphism<F>(src, dst, std::move(c));
}

template <Field F>
struct SubRep {
  RepPtr<F> rep;
  RepMorphism<F> inclusion;
};

template <Field F>
struct QuotientRep {
  RepPtr<F> rep;
  RepMorphism<F> projection;
};

/// Vertex-wise kernel of h with induced arrow maps.
template <Field F>
SubRep<F> kernel_rep(const RepMorphism<F>& h) {
  const Quiver& q = h.source().quiver();
  std::vector<Matrix<F>> incl;
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    incl.push_back(kernel_basis(h.at(v)));
    dims.push_back(incl.back().cols());
  }
  std::vector<Matrix<F>> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix<F> image = h.source().map(a) * incl[arr.source];
    if (dims[arr.target] == 0) {
      maps.emplace_back(0, dims[arr.source]);
    } else {
      maps.push_back(retraction(incl[arr.target]) * image);
    }
  }
  auto k = share(Rep<F>(h.source().quiver_ptr(), std::move(dims), std::move(maps)));
  return {k, RepMorphism<F>(k, h.source_ptr(), std::move(incl))};
}

/// Vertex-wise cokernel of h. The quotient map at v is the transpose of the
/// kernel basis of h_v^T, so the quotient coordinates are the rref-free
/// coordinates of the target.
template <Field F>
QuotientRep<F> cokernel_rep(const RepMorphism<F>& h) {
  const Quiver& q = h.source().quiver();
  std::vector<Matrix<F>> proj;
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    proj.push_back(kernel_basis(h.at(v).transpose()).transpose());
    dims.push_back(proj.back().rows());
  }
  std::vector<Matrix<F>> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (dims[arr.source] == 0) {
      maps.emplace_back(dims[arr.target], 0);
    } else {
      maps.push_back(proj[arr.target] * h.target().map(a) * section(proj[arr.source]));
    }
  }
  auto c = share(Rep<F>(h.source().quiver_ptr(), std::move(dims), std::move(maps)));
  return {c, RepMorphism<F>(h.target_ptr(), c, std::move(proj))};
}

template <Field F>
bool is_vertexwise_invertible(const RepMorphism<F>& h) {
  return std::all_of(h.components().begin(), h.components().end(),
                     [](const Matrix<F>& m) { return is_invertible(m); });
}

/// Inverse of a vertex-wise invertible morphism.
template <Field F>
RepMorphism<F> inverse(const RepMorphism<F>& h) {
  std::vector<Matrix<F>> c;
  for (const auto& m : h.components()) {
    auto inv = inverse(m);
    if (!inv) throw QuiverError("morphism is not invertible");
    c.push_back(std::move(*inv));
  }
  return RepMorphism<F>(h.target_ptr(), h.source_ptr(), std::move(c));
}

/// Coefficient ranges tried, in order, when sampling random combinations of
/// a hom basis: {0..1}, {-2..2}, {-8..8}.
struct SamplingSchedule {
  std::vector<std::pair<long long, long long>> ranges{{0, 1}, {-2, 2}, {-8, 8}};
  std::size_t attempts_per_range = 8;
  /// Range of the final certification stage.
  long long certification_range = 1LL << 20;
};

template <Field F>
std::vector<F> random_coefficients(std::size_t n, std::pair<long long, long long> range,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(range.first, range.second);
  std::vector<F> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(from_int<F>(dist(rng)));
  return c;
}

template <Field F>
struct IsoSearch {
  bool isomorphic = false;
  std::optional<RepMorphism<F>> witness;  // an isomorphism X -> Y when found
  std::string reason;
};

/// Decides X ~= Y.
///
/// Cheap disproofs first: dimension vectors, then the equalities
/// [X,X] = [X,Y] = [Y,X] = [Y,Y] that any isomorphism forces. Otherwise a
/// random combination of a basis of Hom(X,Y) is tested for vertex-wise
/// invertibility under the escalating coefficient schedule.
///
/// The determinant of a generic combination is a polynomial P of degree
/// D = total dimension in the basis coefficients; X ~= Y over the algebraic
/// closure iff P != 0, and a nonzero P over Q has rational non-roots, so the
/// answer is the same over Q. If the schedule fails, P is restricted to a
/// random line c0 + t c1 (large coefficients) and evaluated at D + 1 values
/// of t; all zero certifies that the restriction vanishes identically, and
/// by Schwartz-Zippel a nonzero P survives that test with probability at
/// most D / certification_range.
template <Field F>
IsoSearch<F> find_isomorphism(const RepPtr<F>& x, const RepPtr<F>& y, std::uint64_t seed,
                              const SamplingSchedule& schedule = {}) {
  require_same_quiver(x->quiver_ptr(), y->quiver_ptr(), "is_isomorphic");
  if (x->dims() != y->dims()) return {false, std::nullopt, "dimension vectors differ"};
  const std::size_t xy = hom_dim(*x, *y);
  const std::size_t xx = hom_dim(*x, *x);
  if (xy != xx) return {false, std::nullopt, "[X,Y] != [X,X]"};
  const std::size_t yx = hom_dim(*y, *x);
  const std::size_t yy = hom_dim(*y, *y);
  if (yx != yy || xx != yy) return {false, std::nullopt, "[Y,X], [Y,Y], [X,X] disagree"};

  auto basis = hom_basis(x, y);
  if (x->total_dim() == 0) return {true, RepMorphism<F>::zero(x, y), "zero representations"};
  std::mt19937_64 rng(seed);
  for (const auto& range : schedule.ranges) {
    for (std::size_t attempt = 0; attempt < schedule.attempts_per_range; ++attempt) {
      auto h = combine(basis, random_coefficients<F>(basis.size(), range, rng), x, y);
      if (is_vertexwise_invertible(h)) return {true, h, "invertible combination found"};
    }
  }
  const std::pair<long long, long long> big{-schedule.certification_range,
                                            schedule.certification_range};
  auto c0 = random_coefficients<F>(basis.size(), big, rng);
  auto c1 = random_coefficients<F>(basis.size(), big, rng);
  const std::size_t degree = x->total_dim();
  for (std::size_t t = 0; t <= degree; ++t) {
    std::vector<F> c(basis.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = c0[k] + from_int<F>(static_cast<long long>(t)) * c1[k];
    auto h = combine(basis, c, x, y);
    if (is_vertexwise_invertible(h)) return {true, h, "invertible combination found"};
  }
  return {false, std::nullopt, "determinant vanishes on a random line at degree+1 points"};
}

template <Field F>
bool is_isomorphic(const RepPtr<F>& x, const RepPtr<F>& y, std::uint64_t seed = 0) {
  return find_isomorphism(x, y, seed).isomorphic;
}

template <Field F>
bool is_isomorphic(const Rep<F>& x, const Rep<F>& y, std::uint64_t seed = 0) {
  return is_isomorphic(share(x), share(y), seed);
}

/// Transports Y's structure along vertex-wise invertible matrices P_v:
/// the returned representation has arrow maps P_t Y_a P_s^{-1}, together with
/// the isomorphism Y -> returned.
template <Field F>
std::pair<RepPtr<F>, RepMorphism<F>> change_basis(const RepPtr<F>& y,
                                                  const std::vector<Matrix<F>>& p) {
  const Quiver& q = y->quiver();
  std::vector<Matrix<F>> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    auto inv = inverse(p.at(arr.source));
    if (!inv) throw QuiverError("change_basis: matrix at vertex is not invertible");
    maps.push_back(p[arr.target] * y->map(a) * *inv);
  }
  auto z = share(Rep<F>(y->quiver_ptr(), y->dims(), std::move(maps)));
  return {z, RepMorphism<F>(y, z, p)};
}

}  // namespace quiverrep
