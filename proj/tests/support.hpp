#pragma once

#include <quiverrep/rnc_chain.hpp>
#include <quiverrep/star.hpp>

#include <random>

namespace qt {

using namespace quiverrep;
using Q = Rational;
using RepQ = Rep<Q>;
using RepPtrQ = RepPtr<Q>;
using MorQ = RepMorphism<Q>;

inline Matrix<Q> mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix<Q> m(rows.size(), cols);
  std::size_t i = 0;
  for (auto r : rows) {
    std::size_t j = 0;
    for (long long x : r) m(i, j++) = Q(static_cast<long>(x));
    ++i;
  }
  return m;
}

// Kronecker quiver 1 => 2 with arrows a, b.
inline QuiverPtr kronecker() {
  return std::make_shared<const Quiver>(std::vector<std::string>{"1", "2"},
                                        std::vector<Arrow>{{"a", 0, 1}, {"b", 0, 1}});
}

// R(x,y): k at both vertices, a = [x], b = [y].
inline RepPtrQ kron_r(const QuiverPtr& q, long long x, long long y) {
  return share(RepQ(q, {1, 1}, {mat({{x}}), mat({{y}})}));
}

// 0 -> S2 -> R(1,0) -> S1 -> 0.
inline ShortExactSeq<Q> kron_sequence(const QuiverPtr& q) {
  auto s1 = share(RepQ::simple(q, 0));
  auto s2 = share(RepQ::simple(q, 1));
  auto r = kron_r(q, 1, 0);
  MorQ f(s2, r, {Matrix<Q>(1, 0), mat({{1}})});
  MorQ g(r, s1, {mat({{1}}), Matrix<Q>(0, 1)});
  return make_ses(f, g);
}

// 0 -> U -> M -> V -> 0 on the star, f given by the center column (a, b).
inline ShortExactSeq<Q> star_sequence(const StarFamily<Q>& s, long long a, long long b) {
  const std::size_t n = s.quiver->vertex_count();
  std::vector<Matrix<Q>> fc{mat({{a}, {b}})};
  for (std::size_t v = 1; v < n; ++v) fc.emplace_back(s.m->dim(v), 0);
  MorQ f(s.u, s.m, fc);
  auto [c, proj] = cokernel_rep(f);
  auto iso = find_isomorphism(c, s.v, 0);
  if (!iso.isomorphic) throw std::logic_error("star_sequence: cokernel is not V");
  return make_ses(f, iso.witness->compose(proj));
}

inline ShortExactSeq<Q> split_sequence(const RepPtrQ& u, const RepPtrQ& v) {
  auto ds = direct_sum(u, v);
  return make_ses(ds.inject_first, ds.project_second);
}

// Random acyclic quiver: arrows only go from lower to higher index.
inline QuiverPtr random_quiver(std::mt19937_64& rng, std::size_t max_vertices = 5, std::size_t max_arrows = 6) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Arrow> arrows;
  if (n > 1) {
    std::uniform_int_distribution<std::size_t> na(1, max_arrows);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t count = na(rng);
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t s = pick(rng), t = pick(rng);
      if (s == t) continue;
      if (s > t) std::swap(s, t);
      arrows.push_back({"a" + std::to_string(arrows.size()), s, t});
    }
  }
  return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
}

inline DimVector random_dims(std::mt19937_64& rng, const Quiver& q, std::size_t max_dim = 2) {
  std::uniform_int_distribution<std::size_t> d(0, max_dim);
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(d(rng));
  return dims;
}

inline RepPtrQ random_rep(std::mt19937_64& rng, const QuiverPtr& q, const DimVector& dims) {
  std::uniform_int_distribution<int> e(-3, 3);
  std::vector<Matrix<Q>> maps;
  for (const auto& a : q->arrows()) {
    Matrix<Q> m(dims[a.target], dims[a.source]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Q(e(rng));
    maps.push_back(std::move(m));
  }
  return share(RepQ(q, dims, std::move(maps)));
}

inline RepPtrQ random_rep(std::mt19937_64& rng, const QuiverPtr& q, std::size_t max_dim = 2) {
  return random_rep(rng, q, random_dims(rng, *q, max_dim));
}

// Random class of Ext^1(V, U) with entries in {-3..3} on the basis.
inline ExtClass<Q> random_class(std::mt19937_64& rng, const RepPtrQ& v, const RepPtrQ& u) {
  auto basis = ext1_basis(v, u);
  std::uniform_int_distribution<int> e(-3, 3);
  auto c = ExtClass<Q>::zero(basis.space);
  for (const auto& b : basis.classes) c = c + Q(e(rng)) * b;
  return c;
}

// Random morphism X -> Y from the hom basis.
inline MorQ random_morphism(std::mt19937_64& rng, const RepPtrQ& x, const RepPtrQ& y) {
  auto basis = hom_basis(x, y);
  return combine(basis, random_coefficients<Q>(basis.size(), {-3, 3}, rng), x, y);
}

// Simples plus the terms of sigma: the default delta-profile test set.
inline std::vector<RepPtrQ> profile_set(const ShortExactSeq<Q>& s) {
  std::vector<RepPtrQ> out{s.left_ptr(), s.middle_ptr(), s.right_ptr()};
  const auto& q = s.left().quiver_ptr();
  for (std::size_t v = 0; v < q->vertex_count(); ++v) out.push_back(share(RepQ::simple(q, v)));
  return out;
}

// Oracle for hom_dim: dense nullity of the full intertwining matrix, built
// independently of the sparse solver.
inline std::size_t hom_dim_dense(const RepQ& x, const RepQ& y) {
  const Quiver& q = x.quiver();
  std::vector<std::size_t> off{0};
  for (std::size_t v = 0; v < q.vertex_count(); ++v) off.push_back(off.back() + y.dim(v) * x.dim(v));
  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += y.dim(a.target) * x.dim(a.source);
  Matrix<Q> sys(eqs, off.back());
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& xa = x.map(ai);
    const auto& ya = y.map(ai);
    // (Y_a h_s - h_t X_a)(i, j)
    for (std::size_t i = 0; i < y.dim(a.target); ++i) {
      for (std::size_t j = 0; j < x.dim(a.source); ++j, ++row) {
        for (std::size_t k = 0; k < y.dim(a.source); ++k) {
          sys(row, off[a.source] + k * x.dim(a.source) + j) += ya(i, k);
        }
        for (std::size_t k = 0; k < x.dim(a.target); ++k) {
          sys(row, off[a.target] + i * x.dim(a.target) + k) -= xa(k, j);
        }
      }
    }
  }
  return off.back() - rank(sys);
}

}  // namespace qt
