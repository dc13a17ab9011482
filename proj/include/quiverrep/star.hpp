#pragma once

// Star quiver with arms v1..vn pointing at a central sink v0, and the
// representations
//   U = simple at v0,
//   V = k at every vertex, every arrow the identity 1x1 matrix,
//   M = k at the arms, k^2 at v0, arm i mapping to (a_i, b_i)^T,
//   N = U (+) V.
// With pairwise distinct points (a_i : b_i) of P^1 this is a codimension-two
// degeneration M <= N whose singularity is a cone over a rational normal
// curve of degree n - 2.

#include <quiverrep/quiver.hpp>

#include <string>
#include <utility>
#include <vector>

namespace quiverrep {

template <Field F>
struct StarFamily {
  QuiverPtr quiver;
  RepPtr<F> u, v, m, n;
};

/// (1,0), (0,1), (1,1), (1,2), ..., (1,n-2).
inline std::vector<std::pair<long long, long long>> default_star_points(std::size_t n) {
  std::vector<std::pair<long long, long long>> pts{{1, 0}, {0, 1}};
  for (std::size_t i = 2; i < n; ++i) pts.emplace_back(1, static_cast<long long>(i) - 1);
  pts.resize(n);
  return pts;
}

inline QuiverPtr star_quiver(std::size_t n) {
  std::vector<std::string> vertices{"v0"};
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= n; ++i) {
    vertices.push_back("v" + std::to_string(i));
    arrows.push_back({"a" + std::to_string(i), i, 0});
  }
  return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
}

template <Field F>
StarFamily<F> gen_star(std::size_t n, const std::vector<std::pair<F, F>>& points) {
  if (n < 3) throw std::invalid_argument("gen star: need at least 3 arms");
  if (points.size() != n) {
    throw std::invalid_argument("gen star: expected " + std::to_string(n) + " points, got " +
                                std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(points[i].first) && is_zero(points[i].second)) {
      throw std::invalid_argument("gen star: point " + std::to_string(i + 1) + " is (0,0)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const F det = points[i].first * points[j].second - points[i].second * points[j].first;
      if (is_zero(det)) {
        throw std::invalid_argument("gen star: points " + std::to_string(j + 1) + " and " +
                                    std::to_string(i + 1) + " coincide in P^1");
      }
    }
  }
  auto q = star_quiver(n);

  auto u = share(Rep<F>::simple(q, 0));

  DimVector dv(n + 1, 1);
  std::vector<Matrix<F>> vm;
  for (std::size_t i = 0; i < n; ++i) vm.push_back(Matrix<F>::identity(1));
  auto v = share(Rep<F>(q, dv, std::move(vm)));

  DimVector dm(n + 1, 1);
  dm[0] = 2;
  std::vector<Matrix<F>> mm;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<F> col(2, 1);
    col(0, 0) = points[i].first;
    col(1, 0) = points[i].second;
    mm.push_back(std::move(col));
  }
  auto m = share(Rep<F>(q, dm, std::move(mm)));
  auto nn = direct_sum(u, v).sum;
  return {q, u, v, m, nn};
}

template <Field F>
StarFamily<F> gen_star(std::size_t n) {
  std::vector<std::pair<F, F>> pts;
  for (auto [a, b] : default_star_points(n)) pts.emplace_back(from_int<F>(a), from_int<F>(b));
  return gen_star<F>(n, pts);
}

}  // namespace quiverrep
