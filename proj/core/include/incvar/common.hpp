#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace incvar {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Invalid configuration, dimension mismatch, or malformed input file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Factorization failures, non-SPD matrices, and similar numerical trouble.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Model state left the admissible range during integration.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long step)
      : std::runtime_error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Derives an independent sub-stream seed from (seed, salt). splitmix64 mix.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

// Standard-normal draws in a fixed column-major order, so that results are
// reproducible for a given engine state regardless of downstream threading.
Matrix draw_standard_normal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);
Vector draw_standard_normal(Eigen::Index size, std::mt19937_64& rng);

}  // namespace incvar
