#include "hkdyn/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hkdyn/error.hpp"

#ifndef HKDYN_DEFAULT_PRESET_DIR
#define HKDYN_DEFAULT_PRESET_DIR "data/presets"
#endif

namespace hkdyn {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::kSchema, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw Error(ErrorKind::kSchema, "expected an integer, got a fraction");
    return r.get_num();
  }
  throw Error(ErrorKind::kSchema, "expected an integer");
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::kSchema, "expected a rational as \"p/q\" or an integer");
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw Error(ErrorKind::kSchema, "expected a nonnegative integer index");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::kSchema, std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, source + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PresetStore PresetStore::resolve(const std::optional<std::string>& override_dir) {
  if (override_dir) return PresetStore(*override_dir);
  if (const char* env = std::getenv("HKDYN_PRESET_DIR"); env != nullptr && *env != '\0') {
    return PresetStore(env);
  }
  return PresetStore(HKDYN_DEFAULT_PRESET_DIR);
}

std::vector<std::string> PresetStore::names_in(const std::string& sub) const {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(root_ / sub, ec)) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::filesystem::path PresetStore::existing(const std::string& sub, const std::string& name) const {
  const auto path = root_ / sub / (name + ".json");
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::kUnknownPreset, "no " + sub + " preset named '" + name + "' in " +
                                               (root_ / sub).string());
  }
  return path;
}

std::filesystem::path PresetStore::lattice_path(const std::string& name) const {
  return existing("lattices", name);
}

std::filesystem::path PresetStore::diamond_path(const std::string& name) const {
  return existing("diamonds", name);
}

std::vector<std::string> PresetStore::lattice_names() const { return names_in("lattices"); }

std::vector<std::string> PresetStore::diamond_names() const { return names_in("diamonds"); }

IntMatrix int_matrix_from_json(const Json& j) {
  require_array(j, "matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : require_array(j.at(0), "matrix row").size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = require_array(j.at(i), "matrix row");
    if (row.size() != cols) throw Error(ErrorKind::kSchema, "ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(row.at(k));
  }
  return m;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

GramLattice lattice_from_json(const Json& j) {
  IntMatrix gram = int_matrix_from_json(require(j, "gram"));
  if (j.contains("rank")) {
    if (index_from_json(j.at("rank")) != gram.rows()) {
      throw Error(ErrorKind::kSchema, "rank does not match the Gram matrix");
    }
  }
  if (!gram.square()) throw Error(ErrorKind::kSchema, "Gram matrix must be square");
  return GramLattice(std::move(gram));
}

Json lattice_to_json(const GramLattice& lattice) {
  Json out;
  out["rank"] = lattice.rank();
  out["gram"] = int_matrix_to_json(lattice.gram());
  return out;
}

IntegralIsometry isometry_from_json(const Json& j, const PresetStore& presets) {
  const Json& lattice_json = require(j, "lattice");
  GramLattice lattice = [&] {
    if (lattice_json.is_string()) {
      const auto path = presets.lattice_path(lattice_json.get<std::string>());
      return lattice_from_json(parse_json(read_file(path), path.string()));
    }
    return lattice_from_json(lattice_json);
  }();
  return IntegralIsometry(int_matrix_from_json(require(j, "matrix")), std::move(lattice));
}

IntPoly poly_from_json(const Json& j) {
  require_array(j, "polynomial");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPoly::from_descending(coeffs);
}

Json poly_to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.descending()) out.push_back(integer_to_json(c));
  return out;
}

AlgebraicNumber algebraic_from_json(const Json& j) {
  const Json& interval = require_array(require(j, "interval"), "interval");
  if (interval.size() != 2) throw Error(ErrorKind::kSchema, "interval needs two endpoints");
  return AlgebraicNumber(poly_from_json(require(j, "minpoly")), rational_from_json(interval.at(0)),
                         rational_from_json(interval.at(1)));
}

Json algebraic_to_json(const AlgebraicNumber& a) {
  Json out;
  out["minpoly"] = poly_to_json(a.minpoly());
  out["interval"] = Json::array({to_string(a.lower()), to_string(a.upper())});
  out["approx"] = a.approx();
  return out;
}

Json classification_to_json(const IsometryClass& c) {
  Json out;
  if (const auto* e = std::get_if<Elliptic>(&c)) {
    out["class"] = "elliptic";
    out["order"] = e->order;
  } else if (std::holds_alternative<Parabolic>(c)) {
    out["class"] = "parabolic";
  } else {
    const auto& h = std::get<Hyperbolic>(c);
    out["class"] = "hyperbolic";
    out["alpha"] = algebraic_to_json(h.alpha);
    out["sign"] = h.root_sign;
  }
  return out;
}

HodgeDiamond diamond_from_json(const Json& j) {
  HodgeDiamond hd;
  const Json& n = require(j, "n");
  if (!n.is_number_integer() || n.get<long long>() <= 0) {
    throw Error(ErrorKind::kSchema, "n must be a positive integer");
  }
  hd.n = static_cast<unsigned>(n.get<long long>());
  for (const auto& row : require_array(require(j, "h"), "h")) {
    std::vector<std::int64_t> r;
    for (const auto& v : require_array(row, "h row")) {
      if (!v.is_number_integer()) throw Error(ErrorKind::kSchema, "Hodge numbers must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    hd.h.push_back(std::move(r));
  }
  return hd;
}

Json diamond_to_json(const HodgeDiamond& hd) {
  Json out;
  out["n"] = hd.n;
  out["h"] = hd.h;
  return out;
}

Json degree_spectrum_to_json(unsigned degree, const DegreeSpectrum& spectrum) {
  Json entries = Json::array();
  for (const auto& e : spectrum) entries.push_back(Json{{"k", e.k}, {"mult", e.mult}});
  return Json{{"degree", degree}, {"entries", std::move(entries)}};
}

FinitePseudometricSpace space_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& l : require_array(require(j, "labels"), "labels")) {
    if (!l.is_string()) throw Error(ErrorKind::kSchema, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const Json& dist = require_array(require(j, "dist"), "dist");
  const std::size_t n = labels.size();
  if (dist.size() != n) throw Error(ErrorKind::kSchema, "dist must have one row per label");
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = require_array(dist.at(i), "dist row");
    if (row.size() != n) throw Error(ErrorKind::kSchema, "dist must be square");
    for (std::size_t k = 0; k < n; ++k) d(i, k) = rational_from_json(row.at(k));
  }
  return FinitePseudometricSpace(std::move(labels), std::move(d));
}

Json space_to_json(const FinitePseudometricSpace& s) {
  Json dist = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < s.size(); ++k) row.push_back(to_string(s.distance(i, k)));
    dist.push_back(std::move(row));
  }
  return Json{{"labels", s.labels()}, {"dist", std::move(dist)}};
}

PointMap map_from_json(const Json& j) {
  PointMap f;
  for (const auto& v : require_array(require(j, "domain"), "domain")) {
    f.domain.push_back(index_from_json(v));
  }
  for (const auto& v : require_array(require(j, "assign"), "assign")) {
    f.assign.push_back(index_from_json(v));
  }
  if (f.domain.size() != f.assign.size()) {
    throw Error(ErrorKind::kSchema, "domain and assign must have equal length");
  }
  return f;
}

Json map_to_json(const PointMap& f) {
  return Json{{"domain", f.domain}, {"assign", f.assign}};
}

Json quotient_to_json(const QuotientSpace& q, const FinitePseudometricSpace& source) {
  Json out = space_to_json(q.as_space());
  Json partition = Json::array();
  for (const auto& members : q.classes) {
    Json names = Json::array();
    for (std::size_t m : members) names.push_back(source.labels()[m]);
    partition.push_back(std::move(names));
  }
  out["partition"] = std::move(partition);
  out["projection"] = q.projection;
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCertified: return "certified";
    case Verdict::kPremiseFails: return "premise_fails";
    case Verdict::kTheoremViolated: return "theorem_violated";
  }
  return "unknown";
}

Json certificate_to_json(const Certificate& c) {
  Json out{{"verdict", verdict_name(c.verdict)}, {"reason", c.reason}};
  if (c.witness) {
    out["witness"] = Json::array({c.witness->first, c.witness->second});
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace hkdyn
