#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkdyn/matrix.hpp"
#include "hkdyn/numeric.hpp"

namespace hkdyn {

struct SpaceViolation {
  enum class Kind { kShape, kNegative, kDiagonal, kSymmetry, kTriangle };
  Kind kind = Kind::kShape;
  // Offending indices; for kTriangle, dist(i,k) > dist(i,j) + dist(j,k).
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

// Checks the pseudometric axioms exhaustively. Triangle violations are
// reported once per unordered outer pair (i < k).
std::vector<SpaceViolation> validate_space(const std::vector<std::string>& labels,
                                           const RatMatrix& dist);

// Finite set with a rational pseudometric. Construction validates every axiom
// and throws kInvalidSpace on the first violation.
class FinitePseudometricSpace {
 public:
  FinitePseudometricSpace(std::vector<std::string> labels, RatMatrix dist);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RatMatrix& dist() const { return dist_; }
  const Rational& distance(std::size_t i, std::size_t j) const { return dist_(i, j); }
  // All off-diagonal distances are positive.
  bool is_metric() const { return metric_; }
  Rational diameter() const;

 private:
  std::vector<std::string> labels_;
  RatMatrix dist_;
  bool metric_ = true;
};

// Kobayashi quotient: classes of the zero-distance relation with the induced
// metric. Classes are ordered by their smallest member, members ascending.
struct QuotientSpace {
  std::vector<std::vector<std::size_t>> classes;
  RatMatrix qdist;
  std::vector<std::size_t> projection;
  std::vector<std::string> labels;

  FinitePseudometricSpace as_space() const;
};

QuotientSpace kobayashi_quotient(const FinitePseudometricSpace& space);

// Partial map: domain[i] -> assign[i].
struct PointMap {
  std::vector<std::size_t> domain;
  std::vector<std::size_t> assign;

  static PointMap total(std::vector<std::size_t> assign);
  static PointMap identity(std::size_t n);
};

// Throws kIndexOutOfRange for out-of-range or repeated domain indices and
// kDimensionMismatch when the two lists differ in length.
void check_point_map(const PointMap& f, std::size_t source_size, std::size_t target_size);

// max dst(f x, f y) / src(x, y) over domain pairs, with 0/0 -> 0; nullopt
// stands for an infinite constant (positive/0).
std::optional<Rational> lipschitz_constant(const PointMap& f, const FinitePseudometricSpace& src,
                                           const FinitePseudometricSpace& dst);

enum class Verdict { kCertified, kPremiseFails, kTheoremViolated };

struct Certificate {
  Verdict verdict = Verdict::kCertified;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Surjective 1-Lipschitz f : C -> M on a metric space forces C = M and f an
// isometry.
Certificate check_subset_isometry(const FinitePseudometricSpace& m,
                                  const std::vector<std::size_t>& subset, const PointMap& f);

// An isometric self-embedding is bijective.
Certificate check_embedding_bijective(const FinitePseudometricSpace& m, const PointMap& f);

// A 1-Lipschitz surjective self-map is an isometry. On failure the witness is
// a pair (z, x) whose distance shrank.
Certificate check_lipschitz_surjective_isometry(const FinitePseudometricSpace& m,
                                                const PointMap& f);

// d_z(x) = dist(x, z) for every z; each is checked 1-Lipschitz with values in
// [0, diameter]. Row z holds d_z.
std::vector<std::vector<Rational>> witness_functions(const FinitePseudometricSpace& m);

struct QuotientIsometry {
  Certificate certificate;
  QuotientSpace x_quotient;
  QuotientSpace y_quotient;
  // x-class index -> y-class index; filled only when certified.
  std::vector<std::size_t> forward;
};

// g maps points of x to points of y and h maps points of y to points of x.
// When both are 1-Lipschitz and surjective on quotients, h∘g is checked with
// check_subset_isometry and g descends to a distance-preserving bijection.
QuotientIsometry certify_quotient_isometry(const FinitePseudometricSpace& x,
                                           const FinitePseudometricSpace& y, const PointMap& g,
                                           const PointMap& h);

}  // namespace hkdyn
