#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hkdyn/lattice.hpp"
#include "hkdyn/metric.hpp"

namespace hkdyn {

// Batch checks shared by the CLI and the acceptance suite. Every report lists
// its failures as text; an empty list means zero violations.

struct ReflectionSuiteReport {
  std::size_t samples = 0;
  std::size_t elliptic = 0;
  std::size_t parabolic = 0;
  std::size_t hyperbolic = 0;
  std::size_t max_expanding = 0;
  std::vector<std::string> failures;
};

// Reflection in a random vector with an integral reflection; entries lie in
// [-3, 3], with at most 4 nonzero coordinates above rank 4. Gives up with
// kPrecondition after many rejected draws.
IntMatrix random_reflection(const GramLattice& lattice, std::mt19937_64& rng);

// Product of 0..max_reflections random reflections.
IntMatrix random_reflection_product(const GramLattice& lattice, std::mt19937_64& rng,
                                    unsigned max_reflections);

// For each sample: isometry and det = +-1, expanding_count <= 1 and real,
// reciprocal-closed characteristic polynomial, and classification stable
// under conjugation by a unimodular matrix.
ReflectionSuiteReport run_reflection_suite(const GramLattice& lattice, std::size_t samples,
                                           unsigned max_reflections, std::uint64_t seed);

// All metric spaces on `points` points with distances from `alphabet`,
// optionally one representative per isomorphism class.
std::vector<FinitePseudometricSpace> enumerate_metric_spaces(unsigned points,
                                                             const std::vector<Rational>& alphabet,
                                                             bool up_to_isomorphism);

struct RigiditySuiteReport {
  std::size_t spaces = 0;
  std::size_t self_maps = 0;
  std::size_t subset_maps = 0;
  std::size_t lipschitz_surjections = 0;  // premises held, conclusion certified
  std::size_t isometric_embeddings = 0;
  std::size_t subset_surjections = 0;
  std::vector<std::string> failures;
};

// Exhaustive check over every metric space with 1..max_points points (up to
// isomorphism) and every self-map and every map from a nonempty subset.
RigiditySuiteReport run_rigidity_suite(unsigned max_points, const std::vector<Rational>& alphabet);

// Shortest-path pseudometric of a random graph with some zero-weight edges.
FinitePseudometricSpace random_pseudometric_space(std::mt19937_64& rng, unsigned max_points);

struct QuotientSuiteReport {
  std::size_t samples = 0;
  std::size_t points = 0;
  std::size_t classes = 0;
  std::vector<std::string> failures;
};

// Quotient is a strict metric, dist = qdist o projection pairwise, the
// quotient is idempotent, zero-components are cliques, witness functions hold.
QuotientSuiteReport run_quotient_suite(std::size_t samples, unsigned max_points,
                                       std::uint64_t seed);

}  // namespace hkdyn
