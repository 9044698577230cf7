#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdl/moments.hpp"
#include "tdl/scalar.hpp"

namespace tdl {

template <typename R>
struct WeightedPoint {
  std::vector<R> coords;
  R weight;
};

// Finite weighted point set in R^n. R is mpq_class (exact backend) or double
// (float backend with absolute tolerance eps).
template <typename R>
class WeightedPointSet {
 public:
  explicit WeightedPointSet(unsigned dimension, double eps = kDefaultTolerance)
      : dim_(dimension), eps_(eps) {
    if (dimension == 0) throw std::invalid_argument("dimension must be positive");
  }

  unsigned dimension() const { return dim_; }
  double tolerance() const { return eps_; }
  size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<WeightedPoint<R>>& points() const { return pts_; }
  const WeightedPoint<R>& operator[](size_t i) const { return pts_[i]; }

  void add(std::vector<R> coords, R weight) {
    if (coords.size() != dim_) throw std::invalid_argument("point arity mismatch");
    if (!(weight > R(0))) throw std::invalid_argument("weights must be positive");
    for (const auto& p : pts_)
      if (coords_equal(p.coords, coords)) throw std::invalid_argument("duplicate point");
    pts_.push_back({std::move(coords), std::move(weight)});
  }

  R radius_sq(size_t i) const {
    R acc(0);
    for (const R& c : pts_[i].coords) acc += c * c;
    return acc;
  }

  bool coords_equal(const std::vector<R>& a, const std::vector<R>& b) const {
    for (size_t i = 0; i < a.size(); ++i)
      if (!scalar_eq(a[i], b[i], eps_)) return false;
    return true;
  }

 private:
  unsigned dim_;
  double eps_;
  std::vector<WeightedPoint<R>> pts_;
};

template <typename R>
struct Shell {
  R radius_sq;
  std::vector<size_t> members;
  R weight_sum;        // w(X_i)
  R min_weight;
  R max_weight;

  size_t count() const { return members.size(); }
  bool constant_weight(double eps) const { return scalar_eq(min_weight, max_weight, eps); }
};

// Grouping of a point set by squared radius, radii strictly increasing.
// Points at the origin are carried as a flag, not as a radius-0 shell.
template <typename R>
struct ShellPartition {
  std::vector<Shell<R>> shells;
  std::vector<size_t> origin_members;
  size_t p() const { return shells.size(); }
  bool has_origin() const { return !origin_members.empty(); }

  std::vector<ShellMeasure<R>> measures() const {
    std::vector<ShellMeasure<R>> ms;
    ms.reserve(shells.size());
    for (const auto& s : shells) ms.push_back({s.radius_sq, s.weight_sum});
    return ms;
  }
};

template <typename R>
ShellPartition<R> partition_shells(const WeightedPointSet<R>& cfg) {
  ShellPartition<R> part;
  const double eps = cfg.tolerance();
  std::vector<std::pair<R, size_t>> rs;
  rs.reserve(cfg.size());
  for (size_t i = 0; i < cfg.size(); ++i) {
    R r2 = cfg.radius_sq(i);
    if (scalar_is_zero(r2, eps)) {
      part.origin_members.push_back(i);
    } else {
      rs.emplace_back(std::move(r2), i);
    }
  }
  std::sort(rs.begin(), rs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [r2, idx] : rs) {
    const R& w = cfg[idx].weight;
    if (part.shells.empty() || !scalar_eq(part.shells.back().radius_sq, r2, eps)) {
      part.shells.push_back({r2, {idx}, w, w, w});
    } else {
      Shell<R>& s = part.shells.back();
      s.members.push_back(idx);
      s.weight_sum += w;
      s.min_weight = std::min(s.min_weight, w);
      s.max_weight = std::max(s.max_weight, w);
    }
  }
  return part;
}

// A deduplicated set of normalized inner products sharing one normalization.
// Exact backend, within a shell: `values` hold dot/r^2 exactly and
// `scale_sq` = 1. Exact backend, across shells: `values` hold the raw dots
// and `scale_sq` = r_i^2 r_j^2, so the normalized value is dot/sqrt(scale_sq)
// and its square dot^2/scale_sq stays rational. Float backend: normalized
// values directly, `scale_sq` = 1.
template <typename R>
struct InnerProductSet {
  R scale_sq = R(1);
  std::vector<R> values;  // ascending, deduplicated

  size_t size() const { return values.size(); }

  double normalized(size_t k) const {
    double s = to_double(scale_sq);
    return to_double(values[k]) / std::sqrt(s);
  }
  std::vector<double> normalized_all() const {
    std::vector<double> out(values.size());
    for (size_t k = 0; k < values.size(); ++k) out[k] = normalized(k);
    return out;
  }
  // Exact square of the normalized value (rational backend).
  R normalized_sq(size_t k) const { return values[k] * values[k] / scale_sq; }
  int normalized_sign(size_t k) const {
    if constexpr (kExactBackend<R>)
      return sgn(values[k]);
    else
      return values[k] > 0 ? 1 : (values[k] < 0 ? -1 : 0);
  }
};

template <typename R>
struct InnerProductProfile {
  std::vector<InnerProductSet<R>> within;                       // A(X_i), indexed by shell
  std::map<std::pair<size_t, size_t>, InnerProductSet<R>> cross;  // A(X_i, X_j), i < j

  const InnerProductSet<R>& cross_set(size_t i, size_t j) const {
    auto it = cross.find({std::min(i, j), std::max(i, j)});
    if (it == cross.end()) throw std::out_of_range("no such shell pair");
    return it->second;
  }
};

namespace detail {

// Sorted single-linkage clustering: split where the gap between consecutive
// values exceeds `gap`; representative is the cluster mean.
inline std::vector<double> cluster_sorted(std::vector<double> vals, double gap) {
  std::sort(vals.begin(), vals.end());
  std::vector<double> reps;
  size_t start = 0;
  for (size_t i = 1; i <= vals.size(); ++i) {
    if (i == vals.size() || vals[i] - vals[i - 1] > gap) {
      double sum = 0;
      for (size_t j = start; j < i; ++j) sum += vals[j];
      reps.push_back(sum / double(i - start));
      start = i;
    }
  }
  return reps;
}

inline std::vector<mpq_class> dedup_sorted(std::vector<mpq_class> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

template <typename R>
R dot_product(const std::vector<R>& a, const std::vector<R>& b) {
  R acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace detail

// Deduplication under the float backend uses single-linkage clustering with a
// gap threshold of 10*eps on the normalized values.
template <typename R>
InnerProductProfile<R> inner_product_profile(const WeightedPointSet<R>& cfg,
                                             const ShellPartition<R>& part) {
  InnerProductProfile<R> prof;
  const double gap = 10 * cfg.tolerance();

  for (size_t si = 0; si < part.shells.size(); ++si) {
    const Shell<R>& s = part.shells[si];
    InnerProductSet<R> set;
    if constexpr (kExactBackend<R>) {
      std::vector<mpq_class> vals;
      for (size_t a = 0; a < s.members.size(); ++a)
        for (size_t b = a + 1; b < s.members.size(); ++b)
          vals.push_back(detail::dot_product(cfg[s.members[a]].coords, cfg[s.members[b]].coords) /
                         s.radius_sq);
      set.values = detail::dedup_sorted(std::move(vals));
    } else {
      std::vector<double> vals;
      for (size_t a = 0; a < s.members.size(); ++a)
        for (size_t b = a + 1; b < s.members.size(); ++b)
          vals.push_back(detail::dot_product(cfg[s.members[a]].coords, cfg[s.members[b]].coords) /
                         s.radius_sq);
      set.values = detail::cluster_sorted(std::move(vals), gap);
    }
    prof.within.push_back(std::move(set));
  }

  for (size_t si = 0; si < part.shells.size(); ++si) {
    for (size_t sj = si + 1; sj < part.shells.size(); ++sj) {
      const Shell<R>& a = part.shells[si];
      const Shell<R>& b = part.shells[sj];
      InnerProductSet<R> set;
      if constexpr (kExactBackend<R>) {
        set.scale_sq = a.radius_sq * b.radius_sq;
        std::vector<mpq_class> vals;
        for (size_t ia : a.members)
          for (size_t ib : b.members)
            vals.push_back(detail::dot_product(cfg[ia].coords, cfg[ib].coords));
        set.values = detail::dedup_sorted(std::move(vals));
      } else {
        const double norm = std::sqrt(a.radius_sq * b.radius_sq);
        std::vector<double> vals;
        for (size_t ia : a.members)
          for (size_t ib : b.members)
            vals.push_back(detail::dot_product(cfg[ia].coords, cfg[ib].coords) / norm);
        set.values = detail::cluster_sorted(std::move(vals), gap);
      }
      prof.cross.emplace(std::make_pair(si, sj), std::move(set));
    }
  }
  return prof;
}

template <typename R>
InnerProductProfile<R> inner_product_profile(const WeightedPointSet<R>& cfg) {
  return inner_product_profile(cfg, partition_shells(cfg));
}

// True iff for every x in X, -x is in X with the same weight. Returns the
// pairing involution (pairing[i] = index of -x_i) when antipodal.
template <typename R>
std::optional<std::vector<size_t>> is_antipodal(const WeightedPointSet<R>& cfg) {
  const size_t n = cfg.size();
  std::vector<size_t> pairing(n, n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<R> neg = cfg[i].coords;
    for (R& c : neg) c = -c;
    bool found = false;
    for (size_t j = 0; j < n; ++j) {
      if (cfg.coords_equal(cfg[j].coords, neg) &&
          scalar_eq(cfg[j].weight, cfg[i].weight, cfg.tolerance())) {
        pairing[i] = j;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return pairing;
}

namespace detail {

template <typename R>
bool lex_positive(const std::vector<R>& coords) {
  for (const R& c : coords) {
    if (c > R(0)) return true;
    if (c < R(0)) return false;
  }
  return false;  // the origin; caller rejects it
}

template <typename R>
WeightedPointSet<R> half_by_choice(const WeightedPointSet<R>& cfg,
                                   const std::function<bool(size_t, size_t)>& take_first) {
  auto pairing = is_antipodal(cfg);
  if (!pairing) throw std::invalid_argument("antipodal_half requires an antipodal set");
  WeightedPointSet<R> half(cfg.dimension(), cfg.tolerance());
  std::vector<bool> done(cfg.size(), false);
  for (size_t i = 0; i < cfg.size(); ++i) {
    if (done[i]) continue;
    size_t j = (*pairing)[i];
    if (j == i) throw std::invalid_argument("antipodal_half is undefined for origin points");
    done[i] = done[j] = true;
    size_t pick = take_first(i, j) ? i : j;
    half.add(cfg[pick].coords, cfg[pick].weight);
  }
  return half;
}

}  // namespace detail

// Deterministic half: keeps the lexicographically positive representative of
// each antipodal pair.
template <typename R>
WeightedPointSet<R> antipodal_half(const WeightedPointSet<R>& cfg) {
  return detail::half_by_choice<R>(
      cfg, [&](size_t i, size_t) { return detail::lex_positive(cfg[i].coords); });
}

// Random half, one coin flip per pair. Used by the identity property tests.
template <typename R>
WeightedPointSet<R> antipodal_half(const WeightedPointSet<R>& cfg, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  return detail::half_by_choice<R>(cfg, [&](size_t, size_t) { return coin(rng); });
}

}  // namespace tdl
