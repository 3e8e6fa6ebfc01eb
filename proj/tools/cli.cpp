#include "cli.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "hkdyn/error.hpp"
#include "hkdyn/io.hpp"
#include "hkdyn/isometry.hpp"
#include "hkdyn/lattice.hpp"
#include "hkdyn/metric.hpp"
#include "hkdyn/spectrum.hpp"
#include "hkdyn/suites.hpp"

namespace hkdyn::cli {

namespace {

constexpr unsigned kMaxReflections = 6;
constexpr std::size_t kReflectionSamples = 1000;
constexpr std::size_t kQuotientSamples = 500;
constexpr unsigned kQuotientPoints = 12;

// Outcome of a command: the JSON result, its table rendering, and the exit
// status it implies (non-zero for certificates that did not certify).
struct Report {
  Json result;
  std::string table;
  int status = 0;
};

// Every file a command reads, in read order, for the input digest.
class Inputs {
 public:
  explicit Inputs(const RunConfig& cfg) : presets_(PresetStore::resolve(cfg.preset_dir)) {}

  Json load(const std::filesystem::path& path) {
    std::string text = read_file(path);
    Json j = parse_json(text, path.string());
    bytes_ += text;
    return j;
  }

  const PresetStore& presets() const { return presets_; }

  std::string digest() const {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes_.data(), bytes_.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    hex << "sha256:";
    for (unsigned i = 0; i < len; ++i) {
      hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return hex.str();
  }

 private:
  PresetStore presets_;
  std::string bytes_;
};

const std::string& need_input(const RunConfig& cfg) {
  if (!cfg.input) throw Error(ErrorKind::kParse, cfg.command + " needs --input");
  return *cfg.input;
}

std::string fixed(double v, int digits = 10) {
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

std::string poly_list(const IntPoly& p) {
  std::string s = "[";
  const auto c = p.descending();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
  return s + "]";
}

std::string class_line(const IsometryClass& cls) {
  if (const auto* e = std::get_if<Elliptic>(&cls)) {
    return "elliptic, order " + std::to_string(e->order);
  }
  if (std::holds_alternative<Parabolic>(cls)) return "parabolic";
  const auto& h = std::get<Hyperbolic>(cls);
  return std::string("hyperbolic, alpha ≈ ") + fixed(h.alpha.approx()) + ", minpoly " +
         poly_list(h.alpha.minpoly()) + (h.root_sign < 0 ? ", expanding root -alpha" : "");
}

GramLattice load_lattice(const RunConfig& cfg, Inputs& in) {
  if (cfg.input) return lattice_from_json(in.load(*cfg.input));
  if (cfg.preset) return lattice_from_json(in.load(in.presets().lattice_path(*cfg.preset)));
  throw Error(ErrorKind::kParse, cfg.command + " needs --input or --preset");
}

HodgeDiamond load_diamond(const RunConfig& cfg, Inputs& in) {
  if (cfg.preset) return diamond_from_json(in.load(in.presets().diamond_path(*cfg.preset)));
  if (cfg.input) return diamond_from_json(in.load(*cfg.input));
  throw Error(ErrorKind::kParse, cfg.command + " needs --preset or --input");
}

// --alpha-from names either an isometry file, whose expanding eigenvalue is
// used, or an algebraic-number file.
AlgebraicNumber load_alpha(const RunConfig& cfg, Inputs& in) {
  if (!cfg.alpha_from) throw Error(ErrorKind::kParse, cfg.command + " needs --alpha-from");
  const Json j = in.load(*cfg.alpha_from);
  if (j.is_object() && j.contains("matrix")) {
    const IsometryClass cls = classify(isometry_from_json(j, in.presets()));
    const auto* h = std::get_if<Hyperbolic>(&cls);
    if (h == nullptr) {
      throw Error(ErrorKind::kNotHyperbolic, "--alpha-from isometry is " + class_line(cls));
    }
    return h->alpha;
  }
  return algebraic_from_json(j);
}

void check_diamond(const HodgeDiamond& hd) {
  const auto violations = validate_diamond(hd);
  if (!violations.empty()) throw Error(ErrorKind::kInvalidDiamond, violations.front());
}

Report lattice_check(const RunConfig& cfg, Inputs& in) {
  const GramLattice lattice = load_lattice(cfg, in);
  const Signature sig = signature(lattice);
  Report r;
  r.result = {{"rank", lattice.rank()},
              {"determinant", to_string(lattice.determinant())},
              {"signature", Json::array({sig.plus, sig.minus})},
              {"even", lattice.even()}};
  std::ostringstream t;
  t << "rank        " << lattice.rank() << "\n"
    << "determinant " << lattice.determinant().get_str() << "\n"
    << "signature   (" << sig.plus << "," << sig.minus << ")\n"
    << "parity      " << (lattice.even() ? "even" : "odd") << "\n";
  r.table = t.str();
  return r;
}

Report classify_command(const RunConfig& cfg, Inputs& in) {
  const IntegralIsometry iso = isometry_from_json(in.load(need_input(cfg)), in.presets());
  const IsometryClass cls = classify(iso);
  const IntPoly p = char_poly(iso);
  const Signature sig = signature(iso.lattice());
  Report r;
  r.result["signature"] = Json::array({sig.plus, sig.minus});
  r.result["char_poly"] = poly_to_json(p);
  r.result["classification"] = classification_to_json(cls);
  std::ostringstream t;
  t << "signature   (" << sig.plus << "," << sig.minus << ")\n"
    << "char poly   " << p.to_string() << "\n"
    << "class       " << class_line(cls) << "\n";
  if (std::holds_alternative<Hyperbolic>(cls)) {
    Json profile = Json::array();
    t << "moduli     ";
    for (const auto& m : modulus_profile(iso)) {
      profile.push_back({{"alpha_power", m.alpha_power}, {"mult", m.multiplicity}});
      t << " alpha^" << m.alpha_power << " x" << m.multiplicity;
    }
    t << "\n";
    r.result["modulus_profile"] = std::move(profile);
  }
  r.table = t.str();
  return r;
}

Report spectrum_command(const RunConfig& cfg, Inputs& in) {
  const HodgeDiamond hd = load_diamond(cfg, in);
  check_diamond(hd);
  std::optional<AlgebraicNumber> alpha;
  if (cfg.alpha_from) alpha = load_alpha(cfg, in);

  std::vector<unsigned> degrees;
  if (cfg.degree) {
    degrees.push_back(*cfg.degree);
  } else {
    for (unsigned m = 0; m <= hd.top_degree(); ++m) degrees.push_back(m);
  }
  Report r;
  Json spectra = Json::array();
  std::ostringstream t;
  t << "degree  k    mult" << (alpha ? "  modulus" : "") << "\n";
  for (unsigned m : degrees) {
    const DegreeSpectrum s = degree_spectrum(hd, m);
    Json entry = degree_spectrum_to_json(m, s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      t << std::left << std::setw(8) << m << std::setw(5) << s[i].k << std::setw(6) << s[i].mult;
      if (alpha) {
        const double modulus = alpha_power(*alpha, s[i].k).midpoint_double();
        entry["entries"][i]["modulus_approx"] = modulus;
        t << fixed(modulus);
      }
      t << "\n";
    }
    spectra.push_back(std::move(entry));
  }
  r.result["n"] = hd.n;
  if (alpha) r.result["alpha"] = algebraic_to_json(*alpha);
  r.result["spectra"] = std::move(spectra);
  r.table = t.str();
  return r;
}

Report trace_growth(const RunConfig& cfg, Inputs& in) {
  const HodgeDiamond hd = load_diamond(cfg, in);
  check_diamond(hd);
  const AlgebraicNumber alpha = load_alpha(cfg, in);
  const TraceValue tv = trace_majorant(hd, alpha, cfg.N);
  const GrowthExponent g = growth_exponent(hd, alpha);
  const Rational value = tv.exact ? *tv.exact : tv.enclosure.midpoint();
  const double rate = log_of(value) / cfg.N;
  Report r;
  r.result = {{"N", cfg.N},
              {"trace", tv.exact ? Json(to_string(*tv.exact)) : Json(nullptr)},
              {"trace_approx", value.get_d()},
              {"log_trace_over_N", rate},
              {"growth_exponent", g.value},
              {"dominant", {{"p", g.dominant_p}, {"q", g.dominant_q}, {"mult", g.multiplicity}}}};
  std::ostringstream t;
  t << "N                 " << cfg.N << "\n"
    << "T(N)              " << (tv.exact ? to_string(*tv.exact) : "≈ " + fixed(value.get_d()))
    << "\n"
    << "log T(N) / N      " << fixed(rate) << "\n"
    << "n log alpha       " << fixed(g.value) << "\n";
  r.table = t.str();
  return r;
}

Report periodic_points(const RunConfig& cfg, Inputs& in) {
  const HodgeDiamond hd = load_diamond(cfg, in);
  check_diamond(hd);
  const AlgebraicNumber alpha = load_alpha(cfg, in);
  const PeriodicPointEstimate est = periodic_point_estimate(hd, alpha, cfg.k);
  const TraceValue& tv = est.majorant;
  Report r;
  r.result = {{"k", cfg.k},
              {"asymptotic_approx", est.asymptotic_approx},
              {"majorant", tv.exact ? Json(to_string(*tv.exact)) : Json(nullptr)},
              {"majorant_approx", tv.enclosure.midpoint_double()}};
  std::ostringstream t;
  t << "k                 " << cfg.k << "\n"
    << "alpha^(n k)       " << fixed(est.asymptotic_approx) << "\n"
    << "trace majorant    "
    << (tv.exact ? to_string(*tv.exact) : "≈ " + fixed(tv.enclosure.midpoint_double())) << "\n";
  r.table = t.str();
  return r;
}

Report quotient_command(const RunConfig& cfg, Inputs& in) {
  const FinitePseudometricSpace space = space_from_json(in.load(need_input(cfg)));
  const QuotientSpace q = kobayashi_quotient(space);
  Report r;
  r.result = quotient_to_json(q, space);
  r.result["classes"] = q.classes.size();
  std::ostringstream t;
  t << q.classes.size() << " class" << (q.classes.size() == 1 ? "" : "es") << "\n";
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    t << "  " << q.labels[c] << "  size " << q.classes[c].size() << "\n";
  }
  r.table = t.str();
  return r;
}

Json failures_json(const std::vector<std::string>& failures) {
  Json out = Json::array();
  for (const auto& f : failures) out.push_back(f);
  return out;
}

Report rigidity_suite(const RunConfig& cfg, Inputs& in) {
  const std::string& s = cfg.suite;
  if (s != "all" && s != "metric" && s != "quotient" && s != "reflection") {
    throw Error(ErrorKind::kParse, "unknown suite '" + s + "'");
  }
  Report r;
  std::ostringstream t;
  std::size_t failures = 0;
  if (s == "all" || s == "metric") {
    const auto rep = run_rigidity_suite(cfg.points, {Rational(1), Rational(2), Rational(3)});
    failures += rep.failures.size();
    r.result["metric"] = {{"max_points", cfg.points},
                          {"alphabet", Json::array({"1", "2", "3"})},
                          {"spaces", rep.spaces},
                          {"self_maps", rep.self_maps},
                          {"subset_maps", rep.subset_maps},
                          {"lipschitz_surjections", rep.lipschitz_surjections},
                          {"isometric_embeddings", rep.isometric_embeddings},
                          {"subset_surjections", rep.subset_surjections},
                          {"failures", failures_json(rep.failures)}};
    t << "metric      " << rep.spaces << " spaces, " << rep.self_maps << " self-maps, "
      << rep.subset_maps << " subset maps, " << rep.failures.size() << " failures\n";
  }
  if (s == "all" || s == "quotient") {
    const std::size_t samples = cfg.samples.value_or(kQuotientSamples);
    const auto rep = run_quotient_suite(samples, kQuotientPoints, cfg.seed);
    failures += rep.failures.size();
    r.result["quotient"] = {{"samples", rep.samples},
                            {"max_points", kQuotientPoints},
                            {"points", rep.points},
                            {"classes", rep.classes},
                            {"failures", failures_json(rep.failures)}};
    t << "quotient    " << rep.samples << " spaces, " << rep.points << " points, "
      << rep.classes << " classes, " << rep.failures.size() << " failures\n";
  }
  if (s == "all" || s == "reflection") {
    const GramLattice lattice = (cfg.input || cfg.preset)
                                    ? load_lattice(cfg, in)
                                    : lattice_from_json(in.load(in.presets().lattice_path("u_m2")));
    const std::size_t samples = cfg.samples.value_or(kReflectionSamples);
    const auto rep = run_reflection_suite(lattice, samples, kMaxReflections, cfg.seed);
    failures += rep.failures.size();
    r.result["reflection"] = {{"samples", rep.samples},
                              {"max_reflections", kMaxReflections},
                              {"elliptic", rep.elliptic},
                              {"parabolic", rep.parabolic},
                              {"hyperbolic", rep.hyperbolic},
                              {"max_expanding", rep.max_expanding},
                              {"failures", failures_json(rep.failures)}};
    t << "reflection  " << rep.samples << " products (" << rep.elliptic << " elliptic, "
      << rep.parabolic << " parabolic, " << rep.hyperbolic << " hyperbolic), max expanding "
      << rep.max_expanding << ", " << rep.failures.size() << " failures\n";
  }
  r.result["failures"] = failures;
  if (failures > 0) r.status = exit_code(ErrorKind::kTheoremViolated);
  r.table = t.str();
  return r;
}

Report certify_isometry(const RunConfig& cfg, Inputs& in) {
  const Json j = in.load(need_input(cfg));
  auto field = [&](const char* key) -> const Json& {
    if (!j.is_object() || !j.contains(key)) {
      throw Error(ErrorKind::kSchema, std::string("missing field '") + key + "'");
    }
    return j.at(key);
  };
  const FinitePseudometricSpace x = space_from_json(field("x"));
  const FinitePseudometricSpace y = space_from_json(field("y"));
  const QuotientIsometry qi =
      certify_quotient_isometry(x, y, map_from_json(field("g")), map_from_json(field("h")));
  Report r;
  r.result = certificate_to_json(qi.certificate);
  r.result["x_quotient"] = quotient_to_json(qi.x_quotient, x);
  r.result["y_quotient"] = quotient_to_json(qi.y_quotient, y);
  r.result["forward"] = qi.forward;
  std::ostringstream t;
  t << "verdict     " << verdict_name(qi.certificate.verdict) << "\n";
  if (!qi.certificate.reason.empty()) t << "reason      " << qi.certificate.reason << "\n";
  for (std::size_t c = 0; c < qi.forward.size(); ++c) {
    t << "  " << qi.x_quotient.labels[c] << " -> " << qi.y_quotient.labels[qi.forward[c]] << "\n";
  }
  r.table = t.str();
  switch (qi.certificate.verdict) {
    case Verdict::kCertified: break;
    case Verdict::kPremiseFails: r.status = exit_code(ErrorKind::kPrecondition); break;
    case Verdict::kTheoremViolated: r.status = exit_code(ErrorKind::kTheoremViolated); break;
  }
  return r;
}

Json parameters(const RunConfig& cfg) {
  Json p = Json::object();
  if (cfg.preset) p["preset"] = *cfg.preset;
  p["seed"] = cfg.seed;
  const std::string& c = cfg.command;
  if (c == "spectrum" && cfg.degree) p["degree"] = *cfg.degree;
  if (c == "trace-growth") p["N"] = cfg.N;
  if (c == "periodic-points") p["k"] = cfg.k;
  if (c == "rigidity-suite") {
    p["suite"] = cfg.suite;
    p["points"] = cfg.points;
    if (cfg.samples) p["samples"] = *cfg.samples;
  }
  return p;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "lattice-check", "classify",       "spectrum",       "trace-growth",
      "periodic-points", "quotient",     "rigidity-suite", "certify-isometry"};
  return names;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Inputs in(cfg);
    Report r;
    const std::string& c = cfg.command;
    if (c == "lattice-check") {
      r = lattice_check(cfg, in);
    } else if (c == "classify") {
      r = classify_command(cfg, in);
    } else if (c == "spectrum") {
      r = spectrum_command(cfg, in);
    } else if (c == "trace-growth") {
      r = trace_growth(cfg, in);
    } else if (c == "periodic-points") {
      r = periodic_points(cfg, in);
    } else if (c == "quotient") {
      r = quotient_command(cfg, in);
    } else if (c == "rigidity-suite") {
      r = rigidity_suite(cfg, in);
    } else if (c == "certify-isometry") {
      r = certify_isometry(cfg, in);
    } else {
      throw Error(ErrorKind::kParse, "unknown command '" + c + "'");
    }

    if (cfg.format == Format::kJson) {
      Json envelope;
      envelope["tool"] = "hkdyn";
      envelope["version"] = kVersion;
      envelope["command"] = c;
      envelope["input_digest"] = in.digest();
      envelope["parameters"] = parameters(cfg);
      envelope["result"] = std::move(r.result);
      out << envelope.dump(2) << "\n";
    } else {
      out << "hkdyn " << kVersion << "  " << c << "  " << in.digest() << "\n" << r.table;
    }
    return r.status;
  } catch (const Error& e) {
    err << "hkdyn: " << error_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dynamics on lattices, Hodge spectra and finite metric quotients", "hkdyn"};
  app.set_version_flag("--version", kVersion);
  RunConfig cfg;
  std::string format = "table";
  app.add_option("command", cfg.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--input", cfg.input, "Input JSON file");
  app.add_option("--preset", cfg.preset, "Bundled lattice or diamond preset");
  app.add_option("--preset-dir", cfg.preset_dir, "Preset directory (overrides HKDYN_PRESET_DIR)");
  app.add_option("--alpha-from", cfg.alpha_from, "Isometry or algebraic-number JSON for alpha");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Sample count for randomized suites");
  app.add_option("--degree", cfg.degree, "Cohomological degree");
  app.add_option("--N", cfg.N, "Iterate for trace growth")->capture_default_str();
  app.add_option("--k", cfg.k, "Period for periodic points")->capture_default_str();
  app.add_option("--suite", cfg.suite, "all|metric|quotient|reflection")->capture_default_str();
  app.add_option("--points", cfg.points, "Largest space size for the metric suite")
      ->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hkdyn: " << error_name(ErrorKind::kParse) << ": " << e.what() << "\n";
    return exit_code(ErrorKind::kParse);
  }
  cfg.format = format == "json" ? Format::kJson : Format::kTable;
  return run(cfg, out, err);
}

}  // namespace hkdyn::cli
