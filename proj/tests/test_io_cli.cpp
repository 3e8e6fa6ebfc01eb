#include <sstream>
#include <variant>

#include "cli.hpp"
#include "doctest.h"
#include "hkdyn/error.hpp"
#include "hkdyn/io.hpp"
#include "hkdyn/suites.hpp"

using namespace hkdyn;

namespace {

const std::string kSamples = HKDYN_TEST_SAMPLE_DIR;
const std::string kPresets = HKDYN_TEST_PRESET_DIR;

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(cli::RunConfig cfg) {
  cfg.preset_dir = kPresets;
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(cfg, out, err);
  return {status, out.str(), err.str()};
}

Json run_json(cli::RunConfig cfg) {
  cfg.format = cli::Format::kJson;
  const Outcome o = run_cli(cfg);
  REQUIRE(o.err.empty());
  return Json::parse(o.out);
}

cli::RunConfig command(const std::string& name) {
  cli::RunConfig cfg;
  cfg.command = name;
  return cfg;
}

Json load(const std::string& file) { return parse_json(read_file(kSamples + "/" + file), file); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("lattice schema") {
  const GramLattice l = lattice_from_json(Json::parse(R"({"rank": 2, "gram": [[1, 0], [0, -2]]})"));
  CHECK(l.determinant() == -2);
  CHECK(lattice_to_json(l).dump() == R"({"rank":2,"gram":[[1,0],[0,-2]]})");
  CHECK(kind_of([] { lattice_from_json(Json::parse(R"({"rank": 3, "gram": [[1]]})")); }) ==
        ErrorKind::kSchema);
  CHECK(kind_of([] { lattice_from_json(Json::parse(R"({"gram": [[1, 0], [0]]})")); }) ==
        ErrorKind::kSchema);
  CHECK(kind_of([] { lattice_from_json(Json::parse(R"({"gram": [[1, 2], [3, 4]]})")); }) ==
        ErrorKind::kNotSymmetric);
  CHECK(kind_of([] { lattice_from_json(Json::parse(R"({"matrix": []})")); }) == ErrorKind::kSchema);
  CHECK(kind_of([] { parse_json("{oops", "inline"); }) == ErrorKind::kParse);
}

TEST_CASE("big integers round-trip as strings") {
  const Json j = Json::parse(R"([["123456789012345678901234567890"]])");
  const IntMatrix m = int_matrix_from_json(j);
  CHECK(m(0, 0) == Integer("123456789012345678901234567890"));
  CHECK(int_matrix_to_json(m) == j);
}

TEST_CASE("presets resolve by name") {
  const PresetStore store(kPresets);
  CHECK(store.lattice_names() == std::vector<std::string>{"diag_1_m2", "k3", "u", "u_m2"});
  CHECK(store.diamond_names() == std::vector<std::string>{"k3", "k3n2", "kum2"});
  CHECK(kind_of([&] { store.lattice_path("missing"); }) == ErrorKind::kUnknownPreset);
  const IntegralIsometry iso = isometry_from_json(load("pell_preset.json"), store);
  CHECK(iso.lattice().gram() == IntMatrix{{1, 0}, {0, -2}});
  CHECK(PresetStore::resolve(std::string("/elsewhere")).root() == "/elsewhere");
}

TEST_CASE("algebraic number schema") {
  const AlgebraicNumber a =
      algebraic_from_json(Json::parse(R"({"minpoly": [1, -6, 1], "interval": ["5", "6"]})"));
  const Json j = algebraic_to_json(a);
  CHECK(j["minpoly"] == Json::parse("[1, -6, 1]"));
  CHECK(j["interval"] == Json::parse(R"(["5", "6"])"));
  const AlgebraicNumber back = algebraic_from_json(j);
  CHECK(back.minpoly() == a.minpoly());
  CHECK(kind_of([] {
          algebraic_from_json(Json::parse(R"({"minpoly": [1, -6, 1], "interval": ["0", "6"]})"));
        }) == ErrorKind::kInvalidAlgebraicNumber);
  CHECK(kind_of([] {
          algebraic_from_json(Json::parse(R"({"minpoly": [1, -6, 1], "interval": ["1/0", "6"]})"));
        }) == ErrorKind::kParse);
}

TEST_CASE("space and map schema") {
  const FinitePseudometricSpace s = space_from_json(
      Json::parse(R"({"labels": ["a", "b"], "dist": [["0", "3/2"], ["6/4", 0]]})"));
  CHECK(s.distance(0, 1) == Rational(3, 2));
  CHECK(space_to_json(s).dump() == R"({"labels":["a","b"],"dist":[["0","3/2"],["3/2","0"]]})");
  const PointMap f = map_from_json(Json::parse(R"({"domain": [0, 1], "assign": [1, 1]})"));
  CHECK(map_to_json(f).dump() == R"({"domain":[0,1],"assign":[1,1]})");
  CHECK(kind_of([] { map_from_json(Json::parse(R"({"domain": [0], "assign": [1, 1]})")); }) ==
        ErrorKind::kSchema);
  CHECK(kind_of([] { map_from_json(Json::parse(R"({"domain": [-1], "assign": [1]})")); }) ==
        ErrorKind::kSchema);
  CHECK(kind_of([] {
          space_from_json(Json::parse(R"({"labels": ["a", "b"], "dist": [["0", "1"], ["2", "0"]]})"));
        }) == ErrorKind::kInvalidSpace);
}

TEST_CASE("diamond schema") {
  const HodgeDiamond hd = diamond_from_json(Json::parse(R"({"n": 1, "h": [[1,0,1],[0,20,0],[1,0,1]]})"));
  CHECK(hd.betti(2) == 22);
  CHECK(diamond_to_json(hd).dump() == R"({"n":1,"h":[[1,0,1],[0,20,0],[1,0,1]]})");
  CHECK(kind_of([] { diamond_from_json(Json::parse(R"({"n": 0, "h": []})")); }) == ErrorKind::kSchema);
}

TEST_CASE("cli classify matches the library") {
  cli::RunConfig cfg = command("classify");
  cfg.input = kSamples + "/pell.json";
  const Json out = run_json(cfg);
  const IntegralIsometry iso = isometry_from_json(load("pell.json"), PresetStore(kPresets));
  CHECK(out["tool"] == "hkdyn");
  CHECK(out["version"] == cli::kVersion);
  CHECK(out["command"] == "classify");
  CHECK(out["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);
  CHECK(out["result"]["classification"] == classification_to_json(classify(iso)));
  CHECK(out["result"]["char_poly"] == poly_to_json(char_poly(iso)));

  const Outcome table = run_cli(cfg);
  CHECK(table.status == 0);
  CHECK(table.out.find("hyperbolic, alpha ≈ 5.828427125, minpoly [1,-6,1]") != std::string::npos);
}

TEST_CASE("cli spectrum matches the library") {
  cli::RunConfig cfg = command("spectrum");
  cfg.preset = "k3";
  cfg.alpha_from = kSamples + "/pell.json";
  cfg.degree = 2;
  const Json out = run_json(cfg);
  const HodgeDiamond hd = diamond_from_json(
      parse_json(read_file(PresetStore(kPresets).diamond_path("k3")), "k3"));
  const Json entries = out["result"]["spectra"][0]["entries"];
  const Json expected = degree_spectrum_to_json(2, degree_spectrum(hd, 2))["entries"];
  REQUIRE(entries.size() == expected.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(entries[i]["k"] == expected[i]["k"]);
    CHECK(entries[i]["mult"] == expected[i]["mult"]);
  }
  CHECK(entries[0]["k"] == 2);
  CHECK(entries[1]["mult"] == 20);

  cfg.degree.reset();
  CHECK(run_json(cfg)["result"]["spectra"].size() == 5);
}

TEST_CASE("cli trace-growth and periodic-points") {
  cli::RunConfig cfg = command("trace-growth");
  cfg.preset = "k3";
  cfg.alpha_from = kSamples + "/pell.json";
  cfg.N = 2;
  CHECK(run_json(cfg)["result"]["trace"] == "56");
  cfg.N = 1;
  CHECK(run_json(cfg)["result"]["trace"] == "28");

  cli::RunConfig pp = command("periodic-points");
  pp.preset = "k3";
  pp.alpha_from = kSamples + "/pell.json";
  pp.k = 2;
  CHECK(run_json(pp)["result"]["asymptotic_approx"].get<double>() ==
        doctest::Approx(33.970562748));
}

TEST_CASE("cli quotient and certify-isometry") {
  cli::RunConfig q = command("quotient");
  q.input = kSamples + "/allzero4.json";
  const Json out = run_json(q);
  CHECK(out["result"]["classes"] == 1);
  CHECK(out["result"]["partition"] == Json::parse(R"([["a", "b", "c", "d"]])"));

  cli::RunConfig c = command("certify-isometry");
  c.input = kSamples + "/certify.json";
  const Json cert = run_json(c);
  CHECK(cert["result"]["verdict"] == "certified");
  CHECK(cert["result"]["forward"].size() == 4);

  c.input = kSamples + "/certify_g_nonsurjective.json";
  const Outcome g = run_cli(c);
  CHECK(g.status == 3);
  CHECK(g.out.find("g not surjective") != std::string::npos);
  c.input = kSamples + "/certify_h_nonsurjective.json";
  CHECK(run_cli(c).status == 3);
}

TEST_CASE("cli rigidity-suite matches the library") {
  cli::RunConfig cfg = command("rigidity-suite");
  cfg.suite = "reflection";
  cfg.samples = 50;
  cfg.seed = 3;
  const Json out = run_json(cfg);
  const auto rep = run_reflection_suite(
      GramLattice(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}), 50, 6, 3);
  CHECK(out["result"]["reflection"]["hyperbolic"] == rep.hyperbolic);
  CHECK(out["result"]["reflection"]["elliptic"] == rep.elliptic);
  CHECK(out["result"]["failures"] == 0);

  cfg.suite = "metric";
  cfg.points = 3;
  CHECK(run_json(cfg)["result"]["metric"]["failures"].empty());

  cfg.suite = "nonsense";
  CHECK(run_cli(cfg).status == 2);
}

TEST_CASE("cli lattice-check") {
  cli::RunConfig cfg = command("lattice-check");
  cfg.preset = "k3";
  const Json out = run_json(cfg);
  CHECK(out["result"]["signature"] == Json::parse("[3, 19]"));
  CHECK(out["result"]["determinant"] == "-1");
  CHECK(out["result"]["even"] == true);
}

TEST_CASE("cli errors carry names and exit codes") {
  cli::RunConfig missing = command("classify");
  missing.input = kSamples + "/does_not_exist.json";
  const Outcome a = run_cli(missing);
  CHECK(a.status == 2);
  CHECK(a.err.rfind("hkdyn: ParseError: ", 0) == 0);

  cli::RunConfig preset = command("spectrum");
  preset.preset = "nope";
  const Outcome b = run_cli(preset);
  CHECK(b.status == 2);
  CHECK(b.err.rfind("hkdyn: UnknownPreset: ", 0) == 0);

  cli::RunConfig elliptic = command("trace-growth");
  elliptic.preset = "k3";
  elliptic.alpha_from = kSamples + "/swap_u.json";
  const Outcome c = run_cli(elliptic);
  CHECK(c.status == 3);
  CHECK(c.err.rfind("hkdyn: NotHyperbolic: ", 0) == 0);

  cli::RunConfig no_input = command("quotient");
  CHECK(run_cli(no_input).status == 2);
}

TEST_CASE("cli argument parsing") {
  std::ostringstream out;
  std::ostringstream err;
  const std::string input = kSamples + "/allzero4.json";
  std::vector<std::string> args = {"hkdyn", "quotient", "--input", input, "--format", "json",
                                   "--preset-dir", kPresets};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  CHECK(cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err) == 0);
  CHECK(Json::parse(out.str())["result"]["classes"] == 1);

  std::vector<std::string> bad = {"hkdyn", "frobnicate"};
  std::vector<char*> bad_argv;
  for (auto& a : bad) bad_argv.push_back(a.data());
  std::ostringstream out2;
  std::ostringstream err2;
  CHECK(cli::main_entry(2, bad_argv.data(), out2, err2) == 2);
  CHECK(err2.str().rfind("hkdyn: ParseError: ", 0) == 0);
}

TEST_CASE("cli output is deterministic") {
  cli::RunConfig cfg = command("rigidity-suite");
  cfg.suite = "quotient";
  cfg.samples = 40;
  cfg.seed = 77;
  cfg.format = cli::Format::kJson;
  CHECK(run_cli(cfg).out == run_cli(cfg).out);
  cli::RunConfig other = cfg;
  other.suite = "reflection";
  CHECK(run_cli(other).out == run_cli(other).out);
}
