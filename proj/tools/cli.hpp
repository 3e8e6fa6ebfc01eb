#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hkdyn::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { kTable, kJson };

struct RunConfig {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> preset;
  std::optional<std::string> preset_dir;
  std::optional<std::string> alpha_from;
  Format format = Format::kTable;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::optional<unsigned> degree;
  unsigned N = 1;
  unsigned k = 1;
  std::string suite = "all";
  unsigned points = 5;
};

const std::vector<std::string>& commands();

// Runs one command. The report goes to `out`, a one-line diagnostic of the
// form "hkdyn: <ErrorName>: <message>" goes to `err`. Returns the exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to run().
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hkdyn::cli
