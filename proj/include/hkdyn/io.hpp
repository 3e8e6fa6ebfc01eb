#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hkdyn/algebraic.hpp"
#include "hkdyn/isometry.hpp"
#include "hkdyn/lattice.hpp"
#include "hkdyn/metric.hpp"
#include "hkdyn/spectrum.hpp"

namespace hkdyn {

using Json = nlohmann::ordered_json;

// Parses text as JSON; kParse on malformed input.
Json parse_json(const std::string& text, const std::string& source);

// Bundled data directory. Resolution order: explicit path, HKDYN_PRESET_DIR,
// the directory compiled into the build.
class PresetStore {
 public:
  explicit PresetStore(std::filesystem::path root) : root_(std::move(root)) {}
  static PresetStore resolve(const std::optional<std::string>& override_dir);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path lattice_path(const std::string& name) const;
  std::filesystem::path diamond_path(const std::string& name) const;
  std::vector<std::string> lattice_names() const;
  std::vector<std::string> diamond_names() const;

 private:
  std::vector<std::string> names_in(const std::string& sub) const;
  std::filesystem::path existing(const std::string& sub, const std::string& name) const;

  std::filesystem::path root_;
};

std::string read_file(const std::filesystem::path& path);

// Schema {"rank": int, "gram": [[int,...],...]}; "rank" is optional.
GramLattice lattice_from_json(const Json& j);
Json lattice_to_json(const GramLattice& lattice);

IntMatrix int_matrix_from_json(const Json& j);
Json int_matrix_to_json(const IntMatrix& m);

// Schema {"lattice": <lattice schema or preset name>, "matrix": [[int,...],...]}.
IntegralIsometry isometry_from_json(const Json& j, const PresetStore& presets);

// Polynomials are listed highest degree first.
IntPoly poly_from_json(const Json& j);
Json poly_to_json(const IntPoly& p);

// {"minpoly": [...], "interval": ["p/q", "p/q"], "approx": float}.
AlgebraicNumber algebraic_from_json(const Json& j);
Json algebraic_to_json(const AlgebraicNumber& a);

// {"class": ..., "order"?: int, "alpha"?: {...}, "sign"?: int}.
Json classification_to_json(const IsometryClass& c);

// {"n": int, "h": [[int,...],...]} with row p, column q.
HodgeDiamond diamond_from_json(const Json& j);
Json diamond_to_json(const HodgeDiamond& hd);

// {"degree": m, "entries": [{"k": int, "mult": int}, ...]}.
Json degree_spectrum_to_json(unsigned degree, const DegreeSpectrum& spectrum);

// {"labels": [str,...], "dist": [["p/q",...],...]}; plain integers are
// accepted for distances on input.
FinitePseudometricSpace space_from_json(const Json& j);
Json space_to_json(const FinitePseudometricSpace& s);

// {"domain": [int,...], "assign": [int,...]}.
PointMap map_from_json(const Json& j);
Json map_to_json(const PointMap& f);

// Space schema of the quotient plus "partition" (member labels per class)
// and "projection".
Json quotient_to_json(const QuotientSpace& q, const FinitePseudometricSpace& source);

Json certificate_to_json(const Certificate& c);
std::string verdict_name(Verdict v);

}  // namespace hkdyn
