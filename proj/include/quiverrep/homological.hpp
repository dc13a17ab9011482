#pragma once

// Short exact sequences, Ext^1 through cocycles modulo coboundaries, the
// delta invariants and pushouts.
//
// For the path algebra of an acyclic quiver a cocycle is determined by its
// values on arrows and every arrow family is a cocycle, so
//   Ext^1(V, U) = coker( (+)_v Hom_k(V_v, U_v) -> (+)_a Hom_k(V_s(a), U_t(a)) ),
//   (h_v) |-> (U_a h_s(a) - h_t(a) V_a).
// A class is stored as its canonical representative: the unique cocycle in
// the coset that vanishes at the pivot coordinates of the coboundary space.

#include <quiverrep/quiver.hpp>

#include <memory>
#include <string>
#include <vector>

namespace quiverrep {

class SequenceError : public std::invalid_argument {
 public:
  SequenceError(std::vector<std::string> problems)  // NOLINT(google-explicit-constructor)
      : std::invalid_argument(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& p) {
    std::string s;
    for (const auto& x : p) s += (s.empty() ? "" : "; ") + x;
    return s;
  }
  std::vector<std::string> problems_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 0 -> U --f--> M --g--> V -> 0, validated at construction.
template <Field F>
class ShortExactSeq {
 public:
  ShortExactSeq(RepMorphism<F> f, RepMorphism<F> g) : f_(std::move(f)), g_(std::move(g)) {
    std::vector<std::string> problems;
    if (!(f_.target() == g_.source())) {
      throw SequenceError({"target of f is not the source of g"});
    }
    const Quiver& q = f_.source().quiver();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      const auto& name = q.vertices()[v];
      const std::size_t rf = rank(f_.at(v));
      const std::size_t rg = rank(g_.at(v));
      if (rf != f_.source().dim(v)) problems.push_back("not injective at vertex " + name);
      if (rg != g_.target().dim(v)) problems.push_back("not surjective at vertex " + name);
      if (!(g_.at(v) * f_.at(v)).is_zero() || rf + rg != f_.target().dim(v)) {
        problems.push_back("not exact at vertex " + name);
      }
    }
    if (!problems.empty()) throw SequenceError(std::move(problems));
  }

  const RepMorphism<F>& f() const { return f_; }
  const RepMorphism<F>& g() const { return g_; }
  const Rep<F>& left() const { return f_.source(); }
  const Rep<F>& middle() const { return f_.target(); }
  const Rep<F>& right() const { return g_.target(); }
  const RepPtr<F>& left_ptr() const { return f_.source_ptr(); }
  const RepPtr<F>& middle_ptr() const { return f_.target_ptr(); }
  const RepPtr<F>& right_ptr() const { return g_.target_ptr(); }

 private:
  RepMorphism<F> f_;
  RepMorphism<F> g_;
};

template <Field F>
ShortExactSeq<F> make_ses(RepMorphism<F> f, RepMorphism<F> g) {
  return ShortExactSeq<F>(std::move(f), std::move(g));
}

/// Cocycle/coboundary data of Ext^1(V, U).
template <Field F>
class ExtSpace {
 public:
  ExtSpace(RepPtr<F> v, RepPtr<F> u) : v_(std::move(v)), u_(std::move(u)), coboundaries_(0) {
    require_same_quiver(v_->quiver_ptr(), u_->quiver_ptr(), "Ext^1");
    const Quiver& q = v_->quiver();
    offsets_.assign(q.arrow_count() + 1, 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arr = q.arrow(a);
      offsets_[a + 1] = offsets_[a] + u_->dim(arr.target) * v_->dim(arr.source);
    }
    coboundaries_ = SparseEchelon<F>(offsets_.back());
    // image of the elementary map E_ij : V_x -> U_x at each vertex x
    for (std::size_t x = 0; x < q.vertex_count(); ++x) {
      for (std::size_t i = 0; i < u_->dim(x); ++i) {
        for (std::size_t j = 0; j < v_->dim(x); ++j) {
          SparseRow<F> row;
          for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const auto& arr = q.arrow(a);
            const std::size_t cols = v_->dim(arr.source);
            if (arr.source == x) {  // U_a E_ij: entry (r, j) = U_a(r, i)
              for (std::size_t r = 0; r < u_->dim(arr.target); ++r) {
                const F& val = u_->map(a)(r, i);
                if (!is_zero(val)) row.emplace_back(offsets_[a] + r * cols + j, val);
              }
            }
            if (arr.target == x) {  // -E_ij V_a: entry (i, c) = -V_a(j, c)
              for (std::size_t c = 0; c < cols; ++c) {
                const F& val = v_->map(a)(j, c);
                if (!is_zero(val)) row.emplace_back(offsets_[a] + i * cols + c, F(-val));
              }
            }
          }
          std::sort(row.begin(), row.end(),
                    [](const auto& l, const auto& r) { return l.first < r.first; });
          if (!row.empty()) coboundaries_.add(std::move(row));
        }
      }
    }
    coboundaries_.finalize();
    free_ = coboundaries_.free_columns();
  }

  const Rep<F>& v() const { return *v_; }
  const Rep<F>& u() const { return *u_; }
  const RepPtr<F>& v_ptr() const { return v_; }
  const RepPtr<F>& u_ptr() const { return u_; }

  std::size_t cocycle_dim() const { return offsets_.back(); }
  std::size_t coboundary_rank() const { return coboundaries_.rank(); }
  std::size_t dim() const { return free_.size(); }
  /// Coordinates of the canonical representatives that may be nonzero.
  const std::vector<std::size_t>& free_coordinates() const { return free_; }

  std::vector<F> canonical(std::vector<F> cocycle) const {
    return coboundaries_.reduce(std::move(cocycle));
  }

  /// Flattens per-arrow matrices Z_a (shape dim U_t x dim V_s).
  std::vector<F> flatten(const std::vector<Matrix<F>>& z) const {
    const Quiver& q = v_->quiver();
    if (z.size() != q.arrow_count()) throw DimensionError("cocycle needs one matrix per arrow");
    std::vector<F> out;
    out.reserve(cocycle_dim());
    for (std::size_t a = 0; a < z.size(); ++a) {
      const auto& arr = q.arrow(a);
      if (z[a].rows() != u_->dim(arr.target) || z[a].cols() != v_->dim(arr.source)) {
        throw DimensionError("cocycle component at arrow " + arr.name + " has shape " + z[a].shape());
      }
      out.insert(out.end(), z[a].entries().begin(), z[a].entries().end());
    }
    return out;
  }

  Matrix<F> component(const std::vector<F>& cocycle, std::size_t a) const {
    const auto& arr = v_->quiver().arrow(a);
    return Matrix<F>(u_->dim(arr.target), v_->dim(arr.source),
                     std::vector<F>(cocycle.begin() + static_cast<long>(offsets_[a]),
                                    cocycle.begin() + static_cast<long>(offsets_[a + 1])));
  }

 private:
  RepPtr<F> v_;
  RepPtr<F> u_;
  std::vector<std::size_t> offsets_;
  SparseEchelon<F> coboundaries_;
  std::vector<std::size_t> free_;
};

template <Field F>
using ExtSpacePtr = std::shared_ptr<const ExtSpace<F>>;

template <Field F>
ExtSpacePtr<F> ext_space(const RepPtr<F>& v, const RepPtr<F>& u) {
  return std::make_shared<const ExtSpace<F>>(v, u);
}

/// Element of Ext^1(V, U).
template <Field F>
class ExtClass {
 public:
  ExtClass(ExtSpacePtr<F> space, const std::vector<Matrix<F>>& cocycle)
      : space_(std::move(space)), rep_(space_->canonical(space_->flatten(cocycle))) {}

  static ExtClass from_flat(ExtSpacePtr<F> space, std::vector<F> flat) {
    return ExtClass(std::move(space), std::move(flat), 0);
  }

  static ExtClass zero(ExtSpacePtr<F> space) {
    std::vector<F> flat(space->cocycle_dim());
    return ExtClass(std::move(space), std::move(flat), 0);
  }

  const ExtSpace<F>& space() const { return *space_; }
  const ExtSpacePtr<F>& space_ptr() const { return space_; }
  /// Canonical cocycle, flattened arrow by arrow.
  const std::vector<F>& representative() const { return rep_; }
  Matrix<F> cocycle(std::size_t a) const { return space_->component(rep_, a); }

  /// Coordinates in the basis returned by ext1_basis.
  std::vector<F> coordinates() const {
    std::vector<F> c;
    for (auto j : space_->free_coordinates()) c.push_back(rep_[j]);
    return c;
  }

  bool is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](const F& x) { return quiverrep::is_zero(x); });
  }

  friend bool operator==(const ExtClass& a, const ExtClass& b) {
    return a.space().v() == b.space().v() && a.space().u() == b.space().u() && a.rep_ == b.rep_;
  }

  friend ExtClass operator+(const ExtClass& a, const ExtClass& b) {
    std::vector<F> s = a.rep_;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.rep_.at(i);
    return ExtClass(a.space_, std::move(s), 0);
  }

  friend ExtClass operator*(const F& c, const ExtClass& a) {
    std::vector<F> s = a.rep_;
    for (auto& x : s) x *= c;
    return ExtClass(a.space_, std::move(s), 0);
  }

 private:
  ExtClass(ExtSpacePtr<F> space, std::vector<F> flat, int)
      : space_(std::move(space)), rep_(space_->canonical(std::move(flat))) {}

  ExtSpacePtr<F> space_;
  std::vector<F> rep_;
};

template <Field F>
struct ExtBasis {
  std::vector<ExtClass<F>> classes;
  std::size_t dim = 0;
  ExtSpacePtr<F> space;
};

/// Basis of Ext^1(V, U): the elementary cocycles at the non-pivot coordinates
/// of the coboundary space.
template <Field F>
ExtBasis<F> ext1_basis(const RepPtr<F>& v, const RepPtr<F>& u) {
  auto space = ext_space(v, u);
  ExtBasis<F> out{{}, space->dim(), space};
  for (auto j : space->free_coordinates()) {
    std::vector<F> e(space->cocycle_dim());
    e[j] = from_int<F>(1);
    out.classes.push_back(ExtClass<F>::from_flat(space, std::move(e)));
  }
  return out;
}

template <Field F>
std::size_t ext1_dim(const Rep<F>& v, const Rep<F>& u) {
  return ExtSpace<F>(share(v), share(u)).dim();
}

/// Middle term in block form [[U_a, Z_a], [0, V_a]] with the canonical
/// inclusion of U and projection onto V.
template <Field F>
ShortExactSeq<F> ses_from_ext(const ExtClass<F>& e) {
  const auto& space = e.space();
  const Rep<F>& u = space.u();
  const Rep<F>& v = space.v();
  const Quiver& q = u.quiver();
  std::vector<Matrix<F>> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix<F> m(u.dim(arr.target) + v.dim(arr.target), u.dim(arr.source) + v.dim(arr.source));
    m.set_block(0, 0, u.map(a));
    m.set_block(0, u.dim(arr.source), e.cocycle(a));
    m.set_block(u.dim(arr.target), u.dim(arr.source), v.map(a));
    maps.push_back(std::move(m));
  }
  auto mid = share(Rep<F>(u.quiver_ptr(), u.dims() + v.dims(), std::move(maps)));
  std::vector<Matrix<F>> fc, gc;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    fc.push_back(vstack(Matrix<F>::identity(u.dim(x)), Matrix<F>(v.dim(x), u.dim(x))));
    gc.push_back(hstack(Matrix<F>(v.dim(x), u.dim(x)), Matrix<F>::identity(v.dim(x))));
  }
  return make_ses(RepMorphism<F>(space.u_ptr(), mid, std::move(fc)),
                  RepMorphism<F>(mid, space.v_ptr(), std::move(gc)));
}

/// Class of a sequence: with s a vertex-wise section of g and r a retraction
/// of f, Z_a = r_t (M_a s_s - s_t V_a).
template <Field F>
ExtClass<F> ext_from_ses(const ShortExactSeq<F>& sigma, ExtSpacePtr<F> space = nullptr) {
  if (!space) space = ext_space(sigma.right_ptr(), sigma.left_ptr());
  const Quiver& q = sigma.left().quiver();
  std::vector<Matrix<F>> s, r;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    s.push_back(section(sigma.g().at(x)));
    r.push_back(retraction(sigma.f().at(x)));
  }
  std::vector<Matrix<F>> z;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    z.push_back(r[arr.target] * (sigma.middle().map(a) * s[arr.source] -
                                 s[arr.target] * sigma.right().map(a)));
  }
  return ExtClass<F>(std::move(space), z);
}

/// delta_sigma(X) = [U (+) V, X] - [M, X]
template <Field F>
std::size_t delta(const ShortExactSeq<F>& sigma, const Rep<F>& x) {
  const std::size_t ends = hom_dim(sigma.left(), x) + hom_dim(sigma.right(), x);
  const std::size_t mid = hom_dim(sigma.middle(), x);
  if (mid > ends) throw std::logic_error("delta: negative value, hom computation is inconsistent");
  return ends - mid;
}

/// delta'_sigma(X) = [X, U (+) V] - [X, M]
template <Field F>
std::size_t delta_prime(const ShortExactSeq<F>& sigma, const Rep<F>& x) {
  const std::size_t ends = hom_dim(x, sigma.left()) + hom_dim(x, sigma.right());
  const std::size_t mid = hom_dim(x, sigma.middle());
  if (mid > ends) throw std::logic_error("delta': negative value, hom computation is inconsistent");
  return ends - mid;
}

/// sigma splits iff delta_sigma(U) = 0 iff delta'_sigma(V) = 0; both are
/// evaluated and must agree.
template <Field F>
bool is_split(const ShortExactSeq<F>& sigma) {
  const bool by_delta = delta(sigma, sigma.left()) == 0;
  const bool by_delta_prime = delta_prime(sigma, sigma.right()) == 0;
  if (by_delta != by_delta_prime) {
    throw std::logic_error("is_split: delta(U) and delta'(V) criteria disagree");
  }
  return by_delta;
}

template <Field F>
struct Pushout {
  ShortExactSeq<F> pushed;       // sigma': 0 -> X -> W -> V -> 0
  RepMorphism<F> middle_map;     // j : M -> W
  ShortExactSeq<F> tau;          // 0 -> U -> M (+) X -> W -> 0
};

/// Pushout of sigma along h : U -> X. W is the cokernel of
/// u |-> (f(u), -h(u)) in M (+) X.
template <Field F>
Pushout<F> pushout(const ShortExactSeq<F>& sigma, const RepMorphism<F>& h) {
  if (!(h.source() == sigma.left())) {
    throw DimensionError("pushout: morphism does not start at the left term of the sequence");
  }
  const Quiver& q = sigma.left().quiver();
  auto mx = direct_sum(sigma.middle_ptr(), h.target_ptr());
  std::vector<Matrix<F>> glue, into_sum;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    glue.push_back(vstack(sigma.f().at(x), Matrix<F>(-h.at(x))));
    into_sum.push_back(vstack(sigma.f().at(x), h.at(x)));
  }
  RepMorphism<F> glue_map(sigma.left_ptr(), mx.sum, std::move(glue));
  auto [w, quot] = cokernel_rep(glue_map);

  RepMorphism<F> j = quot.compose(mx.inject_first);
  RepMorphism<F> f_new = quot.compose(mx.inject_second);
  std::vector<Matrix<F>> g_new, out_of_sum;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const Matrix<F> g_on_sum =
        hstack(sigma.g().at(x), Matrix<F>(sigma.right().dim(x), h.target().dim(x)));
    g_new.push_back(g_on_sum * section(quot.at(x)));
    const Matrix<F> sign = block_diag(Matrix<F>::identity(sigma.middle().dim(x)),
                                      Matrix<F>(-Matrix<F>::identity(h.target().dim(x))));
    out_of_sum.push_back(quot.at(x) * sign);
  }
  RepMorphism<F> g_map(w, sigma.right_ptr(), std::move(g_new));
  return {make_ses(std::move(f_new), std::move(g_map)), std::move(j),
          make_ses(RepMorphism<F>(sigma.left_ptr(), mx.sum, std::move(into_sum)),
                   RepMorphism<F>(mx.sum, w, std::move(out_of_sum)))};
}

/// Ext^1(V, h): Z_a |-> h_t Z_a.
template <Field F>
ExtClass<F> ext_pushforward(const ExtClass<F>& e, const RepMorphism<F>& h,
                            ExtSpacePtr<F> target_space = nullptr) {
  if (!(h.source() == e.space().u())) {
    throw DimensionError("ext_pushforward: morphism does not start at U");
  }
  if (!target_space) target_space = ext_space(e.space().v_ptr(), h.target_ptr());
  const Quiver& q = h.source().quiver();
  std::vector<Matrix<F>> z;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    z.push_back(h.at(q.arrow(a).target) * e.cocycle(a));
  }
  return ExtClass<F>(std::move(target_space), z);
}

namespace detail {

/// Inclusion of the blocks `keep` (block 0 = U, blocks 1..i = copies of Y)
/// of U (+) Y^i, as per-vertex 0/1 matrices.
template <Field F>
std::vector<Matrix<F>> block_inclusion(const Rep<F>& u, const Rep<F>& y, std::size_t copies,
                                       const std::vector<std::size_t>& keep) {
  std::vector<Matrix<F>> out;
  for (std::size_t x = 0; x < u.quiver().vertex_count(); ++x) {
    auto start = [&](std::size_t b) { return b == 0 ? 0 : u.dim(x) + (b - 1) * y.dim(x); };
    auto size = [&](std::size_t b) { return b == 0 ? u.dim(x) : y.dim(x); };
    std::size_t cols = 0;
    for (auto b : keep) cols += size(b);
    Matrix<F> m(u.dim(x) + copies * y.dim(x), cols);
    std::size_t c = 0;
    for (auto b : keep) {
      for (std::size_t k = 0; k < size(b); ++k) m(start(b) + k, c++) = from_int<F>(1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Splits one copy of Y off a sequence 0 -> U (+) Y^i -> W -> V -> 0 with
/// delta_sigma(Y) < i. The left term must be presented with U in the leading
/// coordinates followed by i literal copies of Y. Returns
/// 0 -> U (+) Y^(i-1) -> W' -> V -> 0 with W ~= W' (+) Y and the same delta
/// profile.
template <Field F>
ShortExactSeq<F> cancel_summand(const ShortExactSeq<F>& sigma, const RepPtr<F>& y, std::size_t i) {
  if (i == 0) throw PreconditionError("cancel_summand: i must be positive");
  const Rep<F>& left = sigma.left();
  const Quiver& q = left.quiver();
  DimVector u_dims;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    if (left.dim(x) < i * y->dim(x)) {
      throw PreconditionError("cancel_summand: left term is too small to contain Y^i");
    }
    u_dims.push_back(left.dim(x) - i * y->dim(x));
  }
  std::vector<Matrix<F>> u_maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix<F> expected(left.dim(arr.target), left.dim(arr.source));
    Matrix<F> ua = left.map(a).block(0, 0, u_dims[arr.target], u_dims[arr.source]);
    expected.set_block(0, 0, ua);
    for (std::size_t b = 0; b < i; ++b) {
      expected.set_block(u_dims[arr.target] + b * y->dim(arr.target),
                         u_dims[arr.source] + b * y->dim(arr.source), y->map(a));
    }
    if (!(expected == left.map(a))) {
      throw PreconditionError("cancel_summand: left term is not presented as U (+) Y^i");
    }
    u_maps.push_back(std::move(ua));
  }
  auto u = share(Rep<F>(left.quiver_ptr(), u_dims, std::move(u_maps)));
  if (delta(sigma, *y) >= i) {
    throw PreconditionError("cancel_summand: requires delta_sigma(Y) < i");
  }

  // Find phi : W -> Y and lambda != 0 with phi o f = sum_l lambda_l pi_l.
  auto hom_wy = hom_basis(sigma.middle_ptr(), y);
  std::vector<std::vector<F>> columns;
  for (const auto& phi : hom_wy) columns.push_back(phi.compose(sigma.f()).flatten());
  for (std::size_t l = 1; l <= i; ++l) {
    auto proj = detail::block_inclusion(*u, *y, i, {l});
    std::vector<Matrix<F>> comps;
    for (auto& m : proj) comps.push_back(-m.transpose());
    std::vector<F> flat;
    for (auto& m : comps) flat.insert(flat.end(), m.entries().begin(), m.entries().end());
    columns.push_back(std::move(flat));
  }
  const std::size_t len = columns.front().size();
  Matrix<F> system(len, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < len; ++r) system(r, c) = columns[c][r];
  Matrix<F> ker = kernel_basis(system);
  const std::size_t m = hom_wy.size();
  std::optional<std::size_t> chosen;
  std::size_t j = 0;
  for (std::size_t k = 0; k < ker.cols() && !chosen; ++k) {
    for (std::size_t l = 0; l < i; ++l) {
      if (!is_zero(ker(m + l, k))) {
        chosen = k;
        j = l;
        break;
      }
    }
  }
  if (!chosen) throw std::logic_error("cancel_summand: no projection factors through f");
  const F lambda = ker(m + j, *chosen);
  auto rho = RepMorphism<F>::zero(sigma.middle_ptr(), y);
  for (std::size_t k = 0; k < m; ++k) {
    if (!is_zero(ker(k, *chosen))) rho = rho + F(ker(k, *chosen) / lambda) * hom_wy[k];
  }
  // f_j = f o iota_j is a section of rho.
  RepMorphism<F> iota_j(y, sigma.left_ptr(), detail::block_inclusion(*u, *y, i, {j + 1}));
  RepMorphism<F> f_j = sigma.f().compose(iota_j);

  auto [w_prime, kappa] = kernel_rep(rho);
  std::vector<Matrix<F>> p_comps;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    Matrix<F> p = Matrix<F>::identity(sigma.middle().dim(x)) - f_j.at(x) * rho.at(x);
    if (kappa.at(x).cols() == 0) {
      p_comps.emplace_back(0, sigma.middle().dim(x));
    } else {
      p_comps.push_back(retraction(kappa.at(x)) * p);
    }
  }
  RepMorphism<F> p_prime(sigma.middle_ptr(), w_prime, std::move(p_comps));

  std::vector<std::size_t> keep{0};
  for (std::size_t l = 1; l <= i; ++l) {
    if (l != j + 1) keep.push_back(l);
  }
  auto new_left = share(direct_sum(*u, power(*y, i - 1)));
  RepMorphism<F> iota_rest(new_left, sigma.left_ptr(), detail::block_inclusion(*u, *y, i, keep));
  return make_ses(p_prime.compose(sigma.f()).compose(iota_rest), sigma.g().compose(kappa));
}

}  // namespace quiverrep
