#pragma once

// Singularity type of a codimension-two degeneration N = U (+) V of M.
//
// Given a non-split 0 -> U -> M -> V -> 0 with delta(M) = 1, delta(V) = 0
// and delta'(V) = 1, choose g_1 : U -> M outside the image of
// Hom(f_1, M) and push out repeatedly along the induced middle maps:
//
//   sigma_1 : 0 -> U_0 -> U_1 -> V -> 0
//   sigma_2 : 0 -> U_1 -> U_2 -> V -> 0      (pushout of sigma_1 along g_1)
//   ...                                      (g_{i+1} = induced U_i -> U_{i+1})
//
// If sigma_{n+2} is the first split sequence, the closure of the set of
// classes with middle term M is the cone over a rational normal curve of
// degree n, and that is the singularity type of the orbit closure at N.

#include <quiverrep/degeneration.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace quiverrep {

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SingularityType {
  enum class Kind { Reg, ConeOverRNC };
  Kind kind = Kind::Reg;
  std::size_t degree = 1;

  static SingularityType reg() { return {Kind::Reg, 1}; }
  static SingularityType cone(std::size_t r) { return {Kind::ConeOverRNC, r}; }

  /// The cone over the degree-1 curve is a plane, so Reg compares equal to it.
  std::size_t effective_degree() const { return kind == Kind::Reg ? 1 : degree; }
  bool is_regular() const { return effective_degree() == 1; }

  friend bool operator==(const SingularityType& a, const SingularityType& b) {
    return a.effective_degree() == b.effective_degree();
  }

  std::string to_string() const {
    if (kind == Kind::Reg) return "Reg";
    return "ConeOverRNC(degree=" + std::to_string(degree) + ")";
  }
};

struct HypothesisReport {
  std::size_t hom_u_m = 0, hom_u_n = 0;  // [U,M], [U,N]
  std::size_t hom_m_v = 0, hom_n_v = 0;  // [M,V], [N,V]
  long long codim = 0;                   // [N,N] - [M,M]
  bool hom_left() const { return hom_u_m == hom_u_n; }
  bool hom_right() const { return hom_m_v == hom_n_v; }
  bool codim_two() const { return codim == 2; }
  bool holds() const { return hom_left() && hom_right() && codim_two(); }
};

/// With N = U (+) V: [U,M] = [U,N], [M,V] = [N,V] and [N,N] - [M,M] = 2.
template <Field F>
HypothesisReport check_hypotheses(const Rep<F>& m, const Rep<F>& u, const Rep<F>& v) {
  if (m.dims() != u.dims() + v.dims()) {
    throw DimensionError("check_hypotheses: dim M != dim U + dim V");
  }
  const Rep<F> n = direct_sum(u, v);
  HypothesisReport r;
  r.hom_u_m = hom_dim(u, m);
  r.hom_u_n = hom_dim(u, n);
  r.hom_m_v = hom_dim(m, v);
  r.hom_n_v = hom_dim(n, v);
  r.codim = codim(m, n);
  return r;
}

struct SearchOptions {
  SamplingSchedule schedule{};
};

template <Field F>
struct StartSearch {
  ShortExactSeq<F> sequence;
  std::size_t attempts;
};

/// Samples f in Hom(U, M) until f is injective with cokernel ~= V and returns
/// 0 -> U -f-> M -g-> V -> 0 whose middle term is M itself (g is the
/// cokernel projection followed by an isomorphism onto V). Monomorphisms
/// with cokernel V form an open subset of Hom(U, M), so when one exists a
/// random combination works with high probability.
template <Field F>
StartSearch<F> find_start_sequence_counted(const RepPtr<F>& u, const RepPtr<F>& m,
                                           const RepPtr<F>& v, std::uint64_t seed,
                                           const SearchOptions& opts = {}) {
  if (m->dims() != u->dims() + v->dims()) {
    throw PreconditionError("find_start_sequence: dim M != dim U + dim V");
  }
  auto basis = hom_basis(u, m);
  std::mt19937_64 rng(seed);
  auto ranges = opts.schedule.ranges;
  ranges.emplace_back(-opts.schedule.certification_range, opts.schedule.certification_range);
  std::size_t attempts = 0;
  for (const auto& range : ranges) {
    for (std::size_t k = 0; k < opts.schedule.attempts_per_range; ++k) {
      auto coeffs = random_coefficients<F>(basis.size(), range, rng);
      const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const F& c) { return is_zero(c); });
      if (all_zero && u->total_dim() > 0) continue;
      ++attempts;
      auto f = combine(basis, coeffs, u, m);
      bool injective = true;
      for (std::size_t x = 0; x < f.components().size() && injective; ++x) {
        injective = rank(f.at(x)) == u->dim(x);
      }
      if (!injective) continue;
      auto [c, proj] = cokernel_rep(f);
      auto iso = find_isomorphism(c, v, rng(), opts.schedule);
      if (!iso.isomorphic) continue;
      return {make_ses(std::move(f), iso.witness->compose(proj)), attempts};
    }
  }
  throw PreconditionError("no monomorphism with cokernel V found");
}

template <Field F>
ShortExactSeq<F> find_start_sequence(const RepPtr<F>& u, const RepPtr<F>& m, const RepPtr<F>& v,
                                     std::uint64_t seed, const SearchOptions& opts = {}) {
  return find_start_sequence_counted(u, m, v, seed, opts).sequence;
}

/// First hom-basis element of Hom(U_0, U_1) outside the image of
/// h |-> h o f_1 (End(U_1) -> Hom(U_0, U_1)).
template <Field F>
RepMorphism<F> choose_g(const ShortExactSeq<F>& sigma1) {
  auto basis = hom_basis(sigma1.left_ptr(), sigma1.middle_ptr());
  auto endo = hom_basis(sigma1.middle_ptr(), sigma1.middle_ptr());
  Matrix<F> image(basis.size(), endo.size());
  for (std::size_t k = 0; k < endo.size(); ++k) {
    auto c = hom_coordinates(basis, endo[k].compose(sigma1.f()));
    for (std::size_t i = 0; i < c.size(); ++i) image(i, k) = c[i];
  }
  Matrix<F> complement = complement_basis(column_space_basis(image), basis.size());
  if (complement.cols() == 0) {
    throw PreconditionError("choose_g: every map U_0 -> U_1 factors through f_1 (delta(U_1) = 0)");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!is_zero(complement(i, 0))) return basis[i];
  }
  throw std::logic_error("choose_g: empty complement vector");
}

/// Two-dimensional span of f_i and g_i in Hom(U_{i-1}, U_i).
template <Field F>
struct HSpace {
  RepMorphism<F> f;
  RepMorphism<F> g;

  HSpace(RepMorphism<F> f_, RepMorphism<F> g_) : f(std::move(f_)), g(std::move(g_)) {
    auto a = f.flatten();
    auto b = g.flatten();
    Matrix<F> m(2, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m(0, i) = a[i];
      m(1, i) = b[i];
    }
    if (rank(m) != 2) throw ChainError("H-space: f_i and g_i are linearly dependent");
  }
};

struct ChainStep {
  std::size_t index = 0;         // i
  std::size_t delta_v = 0;       // delta_{sigma_i}(V)
  std::size_t delta_prime_v = 0; // delta'_{sigma_i}(V)
  std::size_t delta_left = 0;    // delta_{sigma_i}(U_{i-1})
  bool split = false;
  DimVector middle_dims;         // dim U_i
};

template <Field F>
struct ChainReport {
  std::vector<ShortExactSeq<F>> sequences;  // sigma_1 .. sigma_{n+2}
  std::vector<RepMorphism<F>> links;        // g_1 .. g_{n+1}
  std::vector<HSpace<F>> h_spaces;          // H_1 .. H_n
  std::size_t split_index = 0;              // n + 2
  std::size_t degree = 0;                   // n
  std::size_t cap = 0;
  std::vector<ChainStep> delta_log;
  std::uint64_t seed = 0;
};

/// Pushes sigma_1 out along g_1, then along each induced middle map, until a
/// split sequence appears. Splitting is decided by delta_{sigma_i}(U_{i-1}) = 0
/// and cross-checked against delta'_{sigma_i}(V) = 0. cap bounds the index
/// of the last sequence examined (default dim Ext^1(V, U_0) + 2).
template <Field F>
ChainReport<F> run_chain(const ShortExactSeq<F>& sigma1, const RepMorphism<F>& g1,
                         std::optional<std::size_t> cap = std::nullopt, std::uint64_t seed = 0) {
  const Rep<F>& v = sigma1.right();
  if (delta(sigma1, sigma1.middle()) != 1 || delta(sigma1, v) != 0 || delta_prime(sigma1, v) != 1) {
    throw PreconditionError("run_chain: requires delta(U_1) = 1, delta(V) = 0, delta'(V) = 1");
  }
  ChainReport<F> report;
  report.seed = seed;
  report.cap = cap.value_or(ext1_dim(v, sigma1.left()) + 2);
  report.sequences.push_back(sigma1);
  report.links.push_back(g1);

  for (std::size_t i = 1;; ++i) {
    const ShortExactSeq<F>& sigma = report.sequences.back();
    ChainStep step;
    step.index = i;
    step.delta_v = delta(sigma, v);
    step.delta_prime_v = delta_prime(sigma, v);
    step.delta_left = delta(sigma, sigma.left());
    step.split = step.delta_left == 0;
    step.middle_dims = sigma.middle().dims();
    if (step.split != (step.delta_prime_v == 0)) {
      throw std::logic_error("run_chain: split criteria disagree at sigma_" + std::to_string(i));
    }
    report.delta_log.push_back(step);
    if (step.split) {
      report.split_index = i;
      break;
    }
    if (i >= report.cap) {
      throw ChainError("run_chain: no split sequence up to the cap " + std::to_string(report.cap));
    }
    auto po = pushout(sigma, report.links.back());
    report.sequences.push_back(std::move(po.pushed));
    report.links.push_back(std::move(po.middle_map));
  }
  const std::size_t s = report.split_index;
  if (s == 1) throw PreconditionError("run_chain: sigma_1 splits");
  if (s == 2) throw ChainError("run_chain: sigma_2 splits, so g_1 factors through f_1");
  report.degree = s - 2;
  report.links.erase(report.links.begin() + static_cast<std::ptrdiff_t>(s - 1), report.links.end());

  const DimVector& base = sigma1.left().dims();
  for (const auto& step : report.delta_log) {
    const bool before_split = step.index < s;
    if (before_split && (step.delta_v != 0 || step.delta_prime_v != 1)) {
      throw ChainError("run_chain: delta log deviates at sigma_" + std::to_string(step.index));
    }
    if (!before_split && step.delta_prime_v != 0) {
      throw ChainError("run_chain: delta'(V) nonzero at the split index");
    }
    if (step.middle_dims != base + step.index * v.dims()) {
      throw ChainError("run_chain: dim U_i != dim U_0 + i dim V at i = " + std::to_string(step.index));
    }
  }
  for (std::size_t i = 1; i <= report.degree; ++i) {
    report.h_spaces.emplace_back(report.sequences[i - 1].f(), report.links[i - 1]);
  }
  return report;
}

template <Field F>
struct SingularityResult {
  SingularityType type;
  HypothesisReport hypotheses;
  std::size_t delta_m = 0;        // delta_sigma(M)
  std::size_t delta_prime_v = 0;  // delta'_sigma(V)
  std::optional<ShortExactSeq<F>> start;
  std::optional<ChainReport<F>> chain;
};

struct SingularityOptions {
  std::optional<std::size_t> cap;
  SearchOptions search{};
};

/// Since 2 = [N,N] - [M,M] = delta_sigma(M) + delta'_sigma(V) and delta'(V) >= 1
/// for a non-split sigma, either delta(M) = 0 (regular) or both are 1 and the
/// chain applies.
template <Field F>
SingularityResult<F> singularity_type(const RepPtr<F>& m, const RepPtr<F>& u, const RepPtr<F>& v,
                                      std::uint64_t seed, const SingularityOptions& opts = {}) {
  SingularityResult<F> result;
  result.hypotheses = check_hypotheses(*m, *u, *v);
  if (!result.hypotheses.holds()) {
    throw PreconditionError("singularity_type: the hypotheses [U,M]=[U,N], [M,V]=[N,V], codim 2 fail");
  }
  auto sigma = find_start_sequence(u, m, v, seed, opts.search);
  result.delta_m = delta(sigma, *m);
  result.delta_prime_v = delta_prime(sigma, *v);
  result.start = sigma;
  if (result.delta_m == 0) {
    result.type = SingularityType::reg();
    return result;
  }
  if (result.delta_m != 1 || result.delta_prime_v != 1) {
    throw std::logic_error("singularity_type: delta(M) + delta'(V) != 2");
  }
  auto g1 = choose_g(sigma);
  result.chain = run_chain(sigma, g1, opts.cap, seed);
  result.type = SingularityType::cone(result.chain->degree);
  return result;
}

struct SampleCheck {
  bool ok = true;
  std::vector<std::size_t> values;  // rank per sample, or running span dims
  std::size_t expected = 0;
  std::string failure;
};

namespace detail {

/// Classes of E_M(V, U_0), M = U_1, from independent start sequences.
/// Draws skip the small ranges: those reach only a handful of directions in
/// Hom(U_0, M) and would undercount the span.
template <Field F>
std::vector<ExtClass<F>> sample_classes(const ChainReport<F>& report, std::size_t samples,
                                        std::uint64_t seed) {
  const auto& s1 = report.sequences.front();
  auto space = ext_space(s1.right_ptr(), s1.left_ptr());
  std::mt19937_64 rng(seed);
  SearchOptions wide;
  wide.schedule.ranges.clear();
  std::vector<ExtClass<F>> out;
  for (std::size_t k = 0; k < samples; ++k) {
    auto sigma = find_start_sequence(s1.left_ptr(), s1.middle_ptr(), s1.right_ptr(), rng(), wide);
    auto e = ext_from_ses(sigma, space);
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

template <Field F>
std::size_t rank_of(const std::vector<std::vector<F>>& rows) {
  if (rows.empty()) return 0;
  Matrix<F> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return rank(m);
}

}  // namespace detail

/// For sampled nonzero e in E_M(V, U_0): the map H_1 -> Ext^1(V, U_1),
/// h |-> Ext^1(V, h)(e) has rank exactly 1.
template <Field F>
SampleCheck verify_rank_one(const ChainReport<F>& report, std::size_t samples, std::uint64_t seed) {
  if (report.degree < 1 || report.h_spaces.empty()) {
    throw PreconditionError("verify_rank_one: needs a chain report of degree >= 1");
  }
  if (samples == 0) throw PreconditionError("verify_rank_one: insufficient samples");
  const auto& h = report.h_spaces.front();
  const auto& s1 = report.sequences.front();
  auto target = ext_space(s1.right_ptr(), s1.middle_ptr());
  SampleCheck check;
  check.expected = 1;
  for (const auto& e : detail::sample_classes(report, samples, seed)) {
    auto a = ext_pushforward(e, h.f, target);
    auto b = ext_pushforward(e, h.g, target);
    const std::size_t r = detail::rank_of<F>({a.representative(), b.representative()});
    check.values.push_back(r);
    if (r != 1 && check.ok) {
      check.ok = false;
      std::string coords;
      for (const auto& c : e.coordinates()) coords += (coords.empty() ? "" : ",") + scalar_traits<F>::to_string(c);
      check.failure = "rank " + std::to_string(r) + " at class (" + coords + ")";
    }
  }
  if (check.values.empty()) {
    check.ok = false;
    check.failure = "no nonzero class sampled";
  }
  return check;
}

/// The sampled classes of E_M(V, U_0) span a space of dimension degree + 1.
template <Field F>
SampleCheck verify_span(const ChainReport<F>& report, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw PreconditionError("verify_span: insufficient samples");
  SampleCheck check;
  check.expected = report.degree + 1;
  std::vector<std::vector<F>> rows;
  for (const auto& e : detail::sample_classes(report, samples, seed)) {
    rows.push_back(e.representative());
    check.values.push_back(detail::rank_of(rows));
  }
  const std::size_t span = check.values.empty() ? 0 : check.values.back();
  if (span != check.expected) {
    check.ok = false;
    check.failure = "span dimension " + std::to_string(span) + " != degree + 1 = " +
                    std::to_string(check.expected);
  }
  return check;
}

}  // namespace quiverrep
