#ifndef EDG_ERRORS_HPP
#define EDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edg {

/// A rate function returned a negative or non-finite value.
struct InvalidKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested cluster mass exceeds the normalization target.
struct NormalizationExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// The right-hand side produced NaN or infinity during a step.
struct NonFiniteRHS : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Trajectory too sparsely sampled for the requested quadrature.
struct InsufficientSampling : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation requested for a kernel outside its admissible regime.
struct WrongRegime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Snapshot grids of two trajectories do not line up.
struct GridMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Total event rate overflowed the floating-point range.
struct RateOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace edg

#endif
