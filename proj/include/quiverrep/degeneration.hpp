#pragma once

// Degeneration-order utilities. Nothing here decides whether N degenerates
// from M: hom_order_check gives necessary conditions ([M,Y] <= [N,Y] and
// [Y,M] <= [Y,N] for every Y) and DegenerationPair carries a sufficient
// certificate, an exact sequence 0 -> Z -> Z (+) M -> N -> 0.

#include <quiverrep/homological.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quiverrep {

/// [N,N] - [M,M], which is dim O_M - dim O_N.
template <Field F>
long long codim(const Rep<F>& m, const Rep<F>& n) {
  if (m.dims() != n.dims()) throw DimensionError("codim: dimension vectors differ");
  return static_cast<long long>(hom_dim(n, n)) - static_cast<long long>(hom_dim(m, m));
}

struct ProbeResult {
  std::string name;
  std::size_t hom_m_y = 0;  // [M, Y]
  std::size_t hom_n_y = 0;  // [N, Y]
  std::size_t hom_y_m = 0;  // [Y, M]
  std::size_t hom_y_n = 0;  // [Y, N]
  bool left_holds() const { return hom_m_y <= hom_n_y; }
  bool right_holds() const { return hom_y_m <= hom_y_n; }
  bool holds() const { return left_holds() && right_holds(); }
};

struct HomOrderReport {
  std::vector<ProbeResult> probes;
  bool holds() const {
    return std::all_of(probes.begin(), probes.end(), [](const ProbeResult& p) { return p.holds(); });
  }
  /// First probe violating an inequality; it certifies that N is not a
  /// degeneration of M.
  std::optional<ProbeResult> violation() const {
    for (const auto& p : probes) {
      if (!p.holds()) return p;
    }
    return std::nullopt;
  }
};

template <Field F>
struct NamedRep {
  std::string name;
  RepPtr<F> rep;
};

/// All simples, then M and N (labelled m_label, n_label), then the extra representations (for instance
/// the known direct summands of the inputs), skipping literal duplicates.
template <Field F>
std::vector<NamedRep<F>> default_probes(const RepPtr<F>& m, const RepPtr<F>& n,
                                        const std::vector<NamedRep<F>>& extra = {},
                                        const std::string& m_label = "M", const std::string& n_label = "N") {
  std::vector<NamedRep<F>> probes;
  const Quiver& q = m->quiver();
  auto add = [&](NamedRep<F> p) {
    for (const auto& existing : probes) {
      if (*existing.rep == *p.rep) return;
    }
    probes.push_back(std::move(p));
  };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    add({"S(" + q.vertices()[v] + ")", share(Rep<F>::simple(m->quiver_ptr(), v))});
  }
  add({m_label, m});
  add({n_label, n});
  for (const auto& e : extra) add(e);
  return probes;
}

template <Field F>
HomOrderReport hom_order_check(const Rep<F>& m, const Rep<F>& n, const std::vector<NamedRep<F>>& probes) {
  if (m.dims() != n.dims()) throw DimensionError("hom_order_check: dimension vectors differ");
  HomOrderReport report;
  for (const auto& p : probes) {
    report.probes.push_back({p.name, hom_dim(m, *p.rep), hom_dim(n, *p.rep), hom_dim(*p.rep, m),
                             hom_dim(*p.rep, n)});
  }
  return report;
}

template <Field F>
struct DegenerationWitness {
  RepPtr<F> z;
  ShortExactSeq<F> sequence;  // 0 -> Z -> Z (+) M -> N -> 0
};

template <Field F>
struct DegenerationPair {
  RepPtr<F> m;
  RepPtr<F> n;
  std::optional<DegenerationWitness<F>> witness;
};

/// For sigma: 0 -> U -> M -> V -> 0 returns (M, U (+) V) witnessed by the sum
/// of sigma with 0 -> 0 -> U -> U -> 0, arranged as
/// 0 -> U -> U (+) M -> U (+) V -> 0 with u |-> (0, f(u)).
template <Field F>
DegenerationPair<F> degeneration_from_ses(const ShortExactSeq<F>& sigma) {
  const auto& u = sigma.left_ptr();
  const auto& m = sigma.middle_ptr();
  const auto& v = sigma.right_ptr();
  auto zm = direct_sum(u, m);
  auto n = direct_sum(u, v);
  const Quiver& q = u->quiver();
  std::vector<Matrix<F>> fc, gc;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    fc.push_back(vstack(Matrix<F>(u->dim(x), u->dim(x)), sigma.f().at(x)));
    gc.push_back(block_diag(Matrix<F>::identity(u->dim(x)), sigma.g().at(x)));
  }
  auto seq = make_ses(RepMorphism<F>(u, zm.sum, std::move(fc)),
                      RepMorphism<F>(zm.sum, n.sum, std::move(gc)));
  return {m, n.sum, DegenerationWitness<F>{u, std::move(seq)}};
}

struct WitnessCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-validates a witness: exactness, left term Z, middle term ~= Z (+) M,
/// right term ~= N.
template <Field F>
WitnessCheck verify_witness(const DegenerationPair<F>& pair, std::uint64_t seed = 0) {
  WitnessCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };
  if (!pair.witness) {
    fail("no witness");
    return check;
  }
  const auto& w = *pair.witness;
  std::optional<ShortExactSeq<F>> seq;
  try {
    seq = make_ses(w.sequence.f(), w.sequence.g());
  } catch (const SequenceError& e) {
    fail(std::string("sequence not exact: ") + e.what());
    return check;
  }
  if (!is_isomorphic(seq->left_ptr(), w.z, seed)) fail("left term mismatch");
  if (!is_isomorphic(seq->middle_ptr(), direct_sum(w.z, pair.m).sum, seed)) {
    fail("middle term mismatch");
  }
  if (!is_isomorphic(seq->right_ptr(), pair.n, seed)) fail("right term mismatch");
  return check;
}

}  // namespace quiverrep
