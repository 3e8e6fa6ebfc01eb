#include "hkdyn/metric.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <map>

#include "hkdyn/error.hpp"

namespace hkdyn {

namespace {

std::string label_or_index(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : std::to_string(i);
}

Certificate certified() { return {Verdict::kCertified, "", std::nullopt}; }

Certificate premise_fails(std::string reason,
                          std::optional<std::pair<std::size_t, std::size_t>> witness = {}) {
  return {Verdict::kPremiseFails, std::move(reason), witness};
}

Certificate violated(std::string reason,
                     std::optional<std::pair<std::size_t, std::size_t>> witness = {}) {
  return {Verdict::kTheoremViolated, std::move(reason), witness};
}

// First pair (a, b) of domain points whose image distance exceeds the source
// distance, if any.
std::optional<std::pair<std::size_t, std::size_t>> lipschitz_failure(
    const PointMap& f, const FinitePseudometricSpace& src, const FinitePseudometricSpace& dst) {
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    for (std::size_t j = i + 1; j < f.domain.size(); ++j) {
      if (dst.distance(f.assign[i], f.assign[j]) > src.distance(f.domain[i], f.domain[j])) {
        return std::make_pair(f.domain[i], f.domain[j]);
      }
    }
  }
  return std::nullopt;
}

bool covers(const std::vector<std::size_t>& values, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  std::size_t count = 0;
  for (std::size_t v : values) {
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  }
  return count == target_size;
}

std::optional<std::pair<std::size_t, std::size_t>> distance_change(
    const PointMap& f, const FinitePseudometricSpace& src, const FinitePseudometricSpace& dst) {
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    for (std::size_t j = i + 1; j < f.domain.size(); ++j) {
      if (dst.distance(f.assign[i], f.assign[j]) != src.distance(f.domain[i], f.domain[j])) {
        return std::make_pair(f.domain[i], f.domain[j]);
      }
    }
  }
  return std::nullopt;
}

bool is_total(const PointMap& f, std::size_t n) {
  if (f.domain.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t d : f.domain) seen[d] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

std::vector<SpaceViolation> validate_space(const std::vector<std::string>& labels,
                                           const RatMatrix& dist) {
  using Kind = SpaceViolation::Kind;
  std::vector<SpaceViolation> out;
  const std::size_t n = labels.size();
  if (dist.rows() != n || dist.cols() != n) {
    out.push_back({Kind::kShape, 0, 0, 0,
                   "distance matrix must be " + std::to_string(n) + "x" + std::to_string(n)});
    return out;
  }
  auto name = [&](std::size_t i) { return label_or_index(labels, i); };
  for (std::size_t i = 0; i < n; ++i) {
    if (dist(i, i) != 0) {
      out.push_back({Kind::kDiagonal, i, i, 0, "dist(" + name(i) + "," + name(i) + ") must be 0"});
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (dist(i, j) < 0) {
        out.push_back({Kind::kNegative, i, j, 0,
                       "dist(" + name(i) + "," + name(j) + ") is negative"});
      }
      if (i < j && dist(i, j) != dist(j, i)) {
        out.push_back({Kind::kSymmetry, i, j, 0,
                       "symmetry fails: dist(" + name(i) + "," + name(j) + ") != dist(" +
                           name(j) + "," + name(i) + ")"});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (dist(i, k) > dist(i, j) + dist(j, k)) {
          out.push_back({Kind::kTriangle, i, j, k,
                         "triangle inequality fails for (" + name(i) + "," + name(j) + "," +
                             name(k) + ")"});
        }
      }
    }
  }
  return out;
}

FinitePseudometricSpace::FinitePseudometricSpace(std::vector<std::string> labels, RatMatrix dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  // GMP compares rationals correctly only in lowest terms.
  for (std::size_t i = 0; i < dist_.rows(); ++i)
    for (std::size_t j = 0; j < dist_.cols(); ++j) dist_(i, j).canonicalize();
  const auto violations = validate_space(labels_, dist_);
  if (!violations.empty()) throw Error(ErrorKind::kInvalidSpace, violations.front().message);
  for (std::size_t i = 0; i < size() && metric_; ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (dist_(i, j) == 0) {
        metric_ = false;
        break;
      }
}

Rational FinitePseudometricSpace::diameter() const {
  Rational best = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (dist_(i, j) > best) best = dist_(i, j);
  return best;
}

FinitePseudometricSpace QuotientSpace::as_space() const {
  return FinitePseudometricSpace(labels, qdist);
}

QuotientSpace kobayashi_quotient(const FinitePseudometricSpace& space) {
  const std::size_t n = space.size();
  boost::disjoint_sets_with_storage<> sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (space.distance(i, j) == 0) sets.union_set(i, j);

  QuotientSpace q;
  q.projection.assign(n, 0);
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find_set(i);
    auto [it, inserted] = class_of_root.try_emplace(root, q.classes.size());
    if (inserted) q.classes.emplace_back();
    q.classes[it->second].push_back(i);
    q.projection[i] = it->second;
  }

  const std::size_t c = q.classes.size();
  q.qdist = RatMatrix(c, c);
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) {
      const Rational& value = space.distance(q.classes[a].front(), q.classes[b].front());
      for (std::size_t x : q.classes[a]) {
        for (std::size_t y : q.classes[b]) {
          if (space.distance(x, y) != value) {
            throw Error(ErrorKind::kTheoremViolated,
                        "quotient distance depends on the representatives");
          }
        }
      }
      q.qdist(a, b) = value;
    }
  }

  for (const auto& members : q.classes) {
    std::string label;
    if (members.size() == 1) {
      label = space.labels()[members.front()];
    } else {
      label = "{";
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) label += ",";
        label += space.labels()[members[i]];
      }
      label += "}";
    }
    q.labels.push_back(std::move(label));
  }
  return q;
}

PointMap PointMap::total(std::vector<std::size_t> assign) {
  PointMap f;
  f.domain.resize(assign.size());
  for (std::size_t i = 0; i < assign.size(); ++i) f.domain[i] = i;
  f.assign = std::move(assign);
  return f;
}

PointMap PointMap::identity(std::size_t n) {
  std::vector<std::size_t> assign(n);
  for (std::size_t i = 0; i < n; ++i) assign[i] = i;
  return total(std::move(assign));
}

void check_point_map(const PointMap& f, std::size_t source_size, std::size_t target_size) {
  if (f.domain.size() != f.assign.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "map domain and assignment differ in length");
  }
  std::vector<bool> seen(source_size, false);
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    if (f.domain[i] >= source_size) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "domain index " + std::to_string(f.domain[i]) + " out of range");
    }
    if (seen[f.domain[i]]) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "domain index " + std::to_string(f.domain[i]) + " repeated");
    }
    seen[f.domain[i]] = true;
    if (f.assign[i] >= target_size) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "target index " + std::to_string(f.assign[i]) + " out of range");
    }
  }
}

std::optional<Rational> lipschitz_constant(const PointMap& f, const FinitePseudometricSpace& src,
                                           const FinitePseudometricSpace& dst) {
  check_point_map(f, src.size(), dst.size());
  Rational best = 0;
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    for (std::size_t j = i + 1; j < f.domain.size(); ++j) {
      const Rational& s = src.distance(f.domain[i], f.domain[j]);
      const Rational& t = dst.distance(f.assign[i], f.assign[j]);
      if (s == 0) {
        if (t != 0) return std::nullopt;
        continue;
      }
      const Rational ratio = t / s;
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

Certificate check_subset_isometry(const FinitePseudometricSpace& m,
                                  const std::vector<std::size_t>& subset, const PointMap& f) {
  check_point_map(f, m.size(), m.size());
  if (!m.is_metric()) return premise_fails("not a metric space");
  std::vector<std::size_t> c = subset;
  std::vector<std::size_t> d = f.domain;
  std::sort(c.begin(), c.end());
  std::sort(d.begin(), d.end());
  if (c != d) return premise_fails("map domain differs from the subset");
  if (!covers(f.assign, m.size())) return premise_fails("not surjective");
  if (auto bad = lipschitz_failure(f, m, m)) return premise_fails("not 1-Lipschitz", bad);
  if (c.size() != m.size()) return violated("subset is proper");
  if (auto bad = distance_change(f, m, m)) return violated("distance not preserved", bad);
  return certified();
}

Certificate check_embedding_bijective(const FinitePseudometricSpace& m, const PointMap& f) {
  check_point_map(f, m.size(), m.size());
  if (!m.is_metric()) return premise_fails("not a metric space");
  if (!is_total(f, m.size())) return premise_fails("not total");
  if (auto bad = distance_change(f, m, m)) return premise_fails("not isometric", bad);
  if (!covers(f.assign, m.size())) return violated("isometric embedding is not surjective");
  return certified();
}

Certificate check_lipschitz_surjective_isometry(const FinitePseudometricSpace& m,
                                                const PointMap& f) {
  check_point_map(f, m.size(), m.size());
  if (!m.is_metric()) return premise_fails("not a metric space");
  if (!is_total(f, m.size())) return premise_fails("not total");
  if (!covers(f.assign, m.size())) return premise_fails("not surjective");
  if (auto bad = lipschitz_failure(f, m, m)) return premise_fails("not 1-Lipschitz", bad);
  if (auto bad = distance_change(f, m, m)) {
    return violated("1-Lipschitz surjection shrinks a distance", bad);
  }
  return certified();
}

std::vector<std::vector<Rational>> witness_functions(const FinitePseudometricSpace& m) {
  const std::size_t n = m.size();
  const Rational diameter = m.diameter();
  std::vector<std::vector<Rational>> family(n, std::vector<Rational>(n));
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x) family[z][x] = m.distance(x, z);
    for (std::size_t x = 0; x < n; ++x) {
      if (family[z][x] < 0 || family[z][x] > diameter) {
        throw Error(ErrorKind::kTheoremViolated, "distance function leaves [0, diameter]");
      }
      for (std::size_t y = x + 1; y < n; ++y) {
        if (abs(family[z][x] - family[z][y]) > m.distance(x, y)) {
          throw Error(ErrorKind::kTheoremViolated, "distance function is not 1-Lipschitz");
        }
      }
    }
  }
  return family;
}

namespace {

// Quotient map induced by f; -1 marks classes outside the induced domain.
std::vector<long> descend(const PointMap& f, const QuotientSpace& src, const QuotientSpace& dst) {
  std::vector<long> induced(src.classes.size(), -1);
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    induced[src.projection[f.domain[i]]] = static_cast<long>(dst.projection[f.assign[i]]);
  }
  return induced;
}

bool induced_surjective(const std::vector<long>& induced, std::size_t target_size) {
  std::vector<std::size_t> values;
  for (long v : induced)
    if (v >= 0) values.push_back(static_cast<std::size_t>(v));
  return covers(values, target_size);
}

}  // namespace

QuotientIsometry certify_quotient_isometry(const FinitePseudometricSpace& x,
                                           const FinitePseudometricSpace& y, const PointMap& g,
                                           const PointMap& h) {
  check_point_map(g, x.size(), y.size());
  check_point_map(h, y.size(), x.size());
  QuotientIsometry out{certified(), kobayashi_quotient(x), kobayashi_quotient(y), {}};

  if (auto bad = lipschitz_failure(g, x, y)) {
    out.certificate = premise_fails("g not 1-Lipschitz", bad);
    return out;
  }
  if (auto bad = lipschitz_failure(h, y, x)) {
    out.certificate = premise_fails("h not 1-Lipschitz", bad);
    return out;
  }
  // 1-Lipschitz maps send zero-distance pairs to zero-distance pairs, so both
  // descend to well-defined maps of quotients.
  const std::vector<long> g_bar = descend(g, out.x_quotient, out.y_quotient);
  const std::vector<long> h_bar = descend(h, out.y_quotient, out.x_quotient);
  if (!induced_surjective(g_bar, out.y_quotient.classes.size())) {
    out.certificate = premise_fails("g not surjective");
    return out;
  }
  if (!induced_surjective(h_bar, out.x_quotient.classes.size())) {
    out.certificate = premise_fails("h not surjective");
    return out;
  }

  PointMap composite;
  for (std::size_t c = 0; c < g_bar.size(); ++c) {
    if (g_bar[c] < 0) continue;
    const long image = h_bar[static_cast<std::size_t>(g_bar[c])];
    if (image < 0) continue;
    composite.domain.push_back(c);
    composite.assign.push_back(static_cast<std::size_t>(image));
  }
  const FinitePseudometricSpace xk = out.x_quotient.as_space();
  const FinitePseudometricSpace yk = out.y_quotient.as_space();
  const Certificate composed = check_subset_isometry(xk, composite.domain, composite);
  if (composed.verdict == Verdict::kTheoremViolated) {
    out.certificate = composed;
    return out;
  }
  if (composed.verdict == Verdict::kPremiseFails) {
    out.certificate = violated("composition h∘g lost a premise: " + composed.reason);
    return out;
  }

  PointMap forward;
  for (std::size_t c = 0; c < g_bar.size(); ++c) {
    if (g_bar[c] < 0) {
      out.certificate = violated("g is not defined on every class");
      return out;
    }
    forward.domain.push_back(c);
    forward.assign.push_back(static_cast<std::size_t>(g_bar[c]));
  }
  if (xk.size() != yk.size() || !covers(forward.assign, yk.size())) {
    out.certificate = violated("induced map is not a bijection");
    return out;
  }
  if (auto bad = distance_change(forward, xk, yk)) {
    out.certificate = violated("induced map changes a distance", bad);
    return out;
  }
  out.forward = forward.assign;
  return out;
}

}  // namespace hkdyn
