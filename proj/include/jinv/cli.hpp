#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jinv/weyl.hpp"

namespace jinv::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class OutputFormat { json, tsv, pretty };

// Bad flags, config files or scenario data; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ScenarioConfig {
  std::string command;
  std::optional<std::string> type;
  std::string lattice = "adjoint";
  std::int64_t prime = 3;
  std::optional<std::map<std::size_t, std::int64_t>> ind_map;  // element label -> index
  std::optional<std::int64_t> uniform_index;
  OutputFormat format = OutputFormat::pretty;
  std::optional<int> degree;
  std::optional<int> max_degree;
  std::optional<std::string> kac_data;

  bool count_by_length = false;
  bool basis = false;
  bool products = false;
  std::string verify;
  int max_i = 0;
  std::size_t guard = kDefaultWeylGuard;
  bool no_banner = false;
};

// Keys: type, lattice, prime, brauer.ind, format, degree, max_degree, kac_data.
ScenarioConfig load_config(const std::filesystem::path& path);
void apply_config_json(const std::string& text, const std::string& source, ScenarioConfig& cfg);
void validate_config(const ScenarioConfig& cfg);

OutputFormat parse_format(const std::string& s);

// Runs a validated config; returns the exit code.
int run(const ScenarioConfig& cfg, std::ostream& out);

// Full front end: argument parsing, banner, error reporting.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jinv::cli
