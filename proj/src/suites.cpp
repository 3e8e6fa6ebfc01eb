#include "hkdyn/suites.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <variant>

#include "hkdyn/error.hpp"
#include "hkdyn/isometry.hpp"

namespace hkdyn {

namespace {

std::string describe(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

std::string describe(const FinitePseudometricSpace& s) {
  std::ostringstream out;
  out << s.size() << " points {";
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      out << (i + j > 1 ? " " : "") << i << j << ":" << s.distance(i, j).get_str();
  out << "}";
  return out.str();
}

std::string describe(const PointMap& f) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    out << (i ? "," : "") << f.domain[i] << "->" << f.assign[i];
  }
  out << "}";
  return out.str();
}

// Random unimodular matrix and its inverse, as products of elementary moves.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix p_inv = IntMatrix::identity(n);
  if (n < 2) return {p, p_inv};
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<int> shift(-2, 2);
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = index(rng);
    std::size_t j = index(rng);
    if (i == j) j = (j + 1) % n;
    const int t = shift(rng);
    IntMatrix e = IntMatrix::identity(n);
    IntMatrix e_inv = IntMatrix::identity(n);
    e(i, j) = t;
    e_inv(i, j) = -t;
    p = p * e;
    p_inv = e_inv * p_inv;
  }
  return {p, p_inv};
}

bool same_class(const IsometryClass& a, const IsometryClass& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ea = std::get_if<Elliptic>(&a)) return ea->order == std::get<Elliptic>(b).order;
  if (const auto* ha = std::get_if<Hyperbolic>(&a)) {
    const auto& hb = std::get<Hyperbolic>(b);
    return ha->root_sign == hb.root_sign && ha->alpha.minpoly() == hb.alpha.minpoly() &&
           ha->alpha.compare(hb.alpha.upper()) <= 0 && ha->alpha.compare(hb.alpha.lower()) > 0;
  }
  return true;
}

}  // namespace

IntMatrix random_reflection(const GramLattice& lattice, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-3, 3);
  const std::size_t n = lattice.rank();
  // Dense vectors on small lattices; on large ones a dense vector almost never
  // has an integral reflection, so draw at most kSparseSupport coordinates.
  constexpr std::size_t kSparseSupport = 4;
  std::uniform_int_distribution<std::size_t> support(1, std::min(n, kSparseSupport));
  std::vector<std::size_t> coords(n);
  std::iota(coords.begin(), coords.end(), 0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    IntVector v(n, Integer(0));
    if (n <= kSparseSupport) {
      for (auto& x : v) x = entry(rng);
    } else {
      const std::size_t s = support(rng);
      for (std::size_t i = 0; i < s; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(coords[i], coords[pick(rng)]);
        v[coords[i]] = entry(rng);
      }
    }
    const Integer vv = lattice.norm(v);
    if (vv == 0) continue;
    const IntVector gv = multiply(lattice.gram(), v);
    bool integral = true;
    for (const auto& c : gv) {
      const Integer twice = 2 * c;
      if (!mpz_divisible_p(twice.get_mpz_t(), vv.get_mpz_t())) {
        integral = false;
        break;
      }
    }
    if (integral) return reflection(v, lattice);
  }
  throw Error(ErrorKind::kPrecondition, "no integral reflection found by random search");
}

IntMatrix random_reflection_product(const GramLattice& lattice, std::mt19937_64& rng,
                                    unsigned max_reflections) {
  std::uniform_int_distribution<unsigned> length(0, max_reflections);
  IntMatrix product = IntMatrix::identity(lattice.rank());
  const unsigned count = length(rng);
  for (unsigned i = 0; i < count; ++i) product = product * random_reflection(lattice, rng);
  return product;
}

ReflectionSuiteReport run_reflection_suite(const GramLattice& lattice, std::size_t samples,
                                           unsigned max_reflections, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ReflectionSuiteReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const IntMatrix m = random_reflection_product(lattice, rng, max_reflections);
    ++report.samples;
    const std::string tag = "sample " + std::to_string(s) + " " + describe(m) + ": ";
    if (!is_isometry(m, lattice)) {
      report.failures.push_back(tag + "not an isometry");
      continue;
    }
    const Integer det = determinant(m);
    if (det != 1 && det != -1) report.failures.push_back(tag + "determinant " + det.get_str());
    const IntegralIsometry iso(m, lattice);
    const IntPoly p = char_poly(iso);
    if (!is_reciprocal_closed(p)) {
      report.failures.push_back(tag + "spectrum not closed under inversion: " + p.to_string());
    }
    try {
      const ExpandingCount ec = expanding_count(iso);
      report.max_expanding = std::max(report.max_expanding, static_cast<std::size_t>(ec.count));
      if (ec.count > 1 || !ec.all_real) report.failures.push_back(tag + "expanding count");
      const IsometryClass cls = classify(iso);
      if (std::holds_alternative<Elliptic>(cls)) ++report.elliptic;
      if (std::holds_alternative<Parabolic>(cls)) ++report.parabolic;
      if (std::holds_alternative<Hyperbolic>(cls)) ++report.hyperbolic;
      if (std::holds_alternative<Hyperbolic>(cls) != (ec.count == 1)) {
        report.failures.push_back(tag + "classification disagrees with expanding count");
      }
      const auto [q, q_inv] = random_unimodular(lattice.rank(), rng);
      const GramLattice moved(q.transposed() * lattice.gram() * q);
      if (signature(moved) != signature(lattice)) {
        report.failures.push_back(tag + "signature changed under congruence");
      }
      const IntegralIsometry conjugate(q_inv * m * q, moved);
      if (!same_class(cls, classify(conjugate))) {
        report.failures.push_back(tag + "classification not conjugation invariant");
      }
    } catch (const Error& e) {
      report.failures.push_back(tag + std::string(error_name(e.kind())) + ": " + e.what());
    }
  }
  return report;
}

std::vector<FinitePseudometricSpace> enumerate_metric_spaces(unsigned points,
                                                             const std::vector<Rational>& alphabet,
                                                             bool up_to_isomorphism) {
  std::vector<FinitePseudometricSpace> out;
  if (points == 0 || alphabet.empty()) return out;
  const std::size_t n = points;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pair_index[i][j] = pair_index[j][i] = pairs.size();
      pairs.emplace_back(i, j);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::size_t> code(pairs.size(), 0);
  std::vector<std::size_t> permuted(pairs.size());
  auto value = [&](std::size_t i, std::size_t j) -> const Rational& {
    return alphabet[code[pair_index[i][j]]];
  };
  while (true) {
    bool triangle = true;
    for (std::size_t i = 0; i < n && triangle; ++i)
      for (std::size_t k = i + 1; k < n && triangle; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || j == k) continue;
          if (value(i, k) > value(i, j) + value(j, k)) {
            triangle = false;
            break;
          }
        }
    bool canonical = triangle;
    if (canonical && up_to_isomorphism) {
      for (const auto& p : perms) {
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          permuted[e] = code[pair_index[p[pairs[e].first]][p[pairs[e].second]]];
        }
        if (std::lexicographical_compare(permuted.begin(), permuted.end(), code.begin(),
                                         code.end())) {
          canonical = false;
          break;
        }
      }
    }
    if (canonical) {
      RatMatrix dist(n, n);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        dist(pairs[e].first, pairs[e].second) = alphabet[code[e]];
        dist(pairs[e].second, pairs[e].first) = alphabet[code[e]];
      }
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
      out.emplace_back(std::move(labels), std::move(dist));
    }
    // Odometer step.
    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == alphabet.size()) code[pos++] = 0;
    if (pos == code.size()) break;
  }
  return out;
}

RigiditySuiteReport run_rigidity_suite(unsigned max_points, const std::vector<Rational>& alphabet) {
  RigiditySuiteReport report;
  for (unsigned points = 1; points <= max_points; ++points) {
    const std::size_t n = points;
    for (const auto& space : enumerate_metric_spaces(points, alphabet, true)) {
      ++report.spaces;
      std::vector<std::size_t> assign(n, 0);
      while (true) {
        const PointMap f = PointMap::total(assign);
        ++report.self_maps;
        const Certificate lip = check_lipschitz_surjective_isometry(space, f);
        if (lip.verdict == Verdict::kCertified) ++report.lipschitz_surjections;
        if (lip.verdict == Verdict::kTheoremViolated) {
          report.failures.push_back("1-Lipschitz surjection " + describe(f) + " on " +
                                    describe(space) + ": " + lip.reason);
        }
        const Certificate emb = check_embedding_bijective(space, f);
        if (emb.verdict == Verdict::kCertified) ++report.isometric_embeddings;
        if (emb.verdict == Verdict::kTheoremViolated) {
          report.failures.push_back("isometric embedding " + describe(f) + " on " +
                                    describe(space) + ": " + emb.reason);
        }
        std::size_t pos = 0;
        while (pos < n && ++assign[pos] == n) assign[pos++] = 0;
        if (pos == n) break;
      }

      for (unsigned mask = 1; mask < (1U << n); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1U << i)) subset.push_back(i);
        std::vector<std::size_t> image(subset.size(), 0);
        while (true) {
          PointMap f{subset, image};
          ++report.subset_maps;
          const Certificate sub = check_subset_isometry(space, subset, f);
          if (sub.verdict == Verdict::kCertified) ++report.subset_surjections;
          if (sub.verdict == Verdict::kTheoremViolated) {
            report.failures.push_back("subset map " + describe(f) + " on " + describe(space) +
                                      ": " + sub.reason);
          }
          std::size_t pos = 0;
          while (pos < image.size() && ++image[pos] == n) image[pos++] = 0;
          if (pos == image.size()) break;
        }
      }
    }
  }
  return report;
}

FinitePseudometricSpace random_pseudometric_space(std::mt19937_64& rng, unsigned max_points) {
  std::uniform_int_distribution<unsigned> size_dist(1, max_points);
  const std::size_t n = size_dist(rng);
  std::uniform_int_distribution<std::size_t> cluster_count_dist(1, n);
  const std::size_t clusters = cluster_count_dist(rng);
  std::uniform_int_distribution<std::size_t> cluster_dist(0, clusters - 1);
  std::uniform_int_distribution<long> weight_dist(1, 12);
  std::bernoulli_distribution merge(0.1);

  // Complete graph on clusters with half-integer weights, a few set to zero.
  RatMatrix w(clusters, clusters);
  for (std::size_t a = 0; a < clusters; ++a)
    for (std::size_t b = a + 1; b < clusters; ++b) {
      Rational weight = merge(rng) ? Rational(0) : Rational(weight_dist(rng), 2);
      weight.canonicalize();
      w(a, b) = w(b, a) = weight;
    }
  for (std::size_t k = 0; k < clusters; ++k)
    for (std::size_t a = 0; a < clusters; ++a)
      for (std::size_t b = 0; b < clusters; ++b)
        if (w(a, k) + w(k, b) < w(a, b)) w(a, b) = w(a, k) + w(k, b);

  std::vector<std::size_t> cluster_of(n);
  for (auto& c : cluster_of) c = cluster_dist(rng);
  RatMatrix dist(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist(i, j) = w(cluster_of[i], cluster_of[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return FinitePseudometricSpace(std::move(labels), std::move(dist));
}

QuotientSuiteReport run_quotient_suite(std::size_t samples, unsigned max_points,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QuotientSuiteReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const FinitePseudometricSpace space = random_pseudometric_space(rng, max_points);
    ++report.samples;
    report.points += space.size();
    const std::string tag = "sample " + std::to_string(s) + " " + describe(space) + ": ";
    try {
      const QuotientSpace q = kobayashi_quotient(space);
      report.classes += q.classes.size();
      const FinitePseudometricSpace qs = q.as_space();
      if (!qs.is_metric()) report.failures.push_back(tag + "quotient is not a metric");
      for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j)
          if (space.distance(i, j) != q.qdist(q.projection[i], q.projection[j])) {
            report.failures.push_back(tag + "factorization fails at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
          }
      for (const auto& members : q.classes)
        for (std::size_t a : members)
          for (std::size_t b : members)
            if (space.distance(a, b) != 0) {
              report.failures.push_back(tag + "zero component is not a clique");
            }
      const QuotientSpace again = kobayashi_quotient(qs);
      if (again.classes.size() != q.classes.size() || !(again.qdist == q.qdist)) {
        report.failures.push_back(tag + "quotient is not idempotent");
      }
      const auto lip = lipschitz_constant(PointMap::total(q.projection), space, qs);
      if (!lip || *lip > 1) report.failures.push_back(tag + "projection is not 1-Lipschitz");
      witness_functions(qs);
    } catch (const Error& e) {
      report.failures.push_back(tag + std::string(error_name(e.kind())) + ": " + e.what());
    }
  }
  return report;
}

}  // namespace hkdyn
