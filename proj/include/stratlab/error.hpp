#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stratlab {

// Error with a stable machine-readable code. The CLI maps codes to exit
// statuses; tests match on `code`.
class LabError : public std::runtime_error {
 public:
  LabError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* parse_error = "PARSE_ERROR";
inline constexpr const char* invalid_world = "INVALID_WORLD";
inline constexpr const char* invalid_dataset = "INVALID_DATASET";
inline constexpr const char* dimension_mismatch = "DIMENSION_MISMATCH";
inline constexpr const char* index_error = "INDEX_ERROR";
inline constexpr const char* empty_dataset = "EMPTY_DATASET";
inline constexpr const char* grid_too_large = "GRID_TOO_LARGE";
inline constexpr const char* invalid_delta = "INVALID_DELTA";
inline constexpr const char* config_error = "CONFIG_ERROR";
inline constexpr const char* no_coords = "NO_COORDS";
inline constexpr const char* io_error = "IO_ERROR";
inline constexpr const char* exact_sigma_limit = "EXACT_SIGMA_LIMIT";
}  // namespace errc

}  // namespace stratlab
