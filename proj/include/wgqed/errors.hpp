#pragma once

#include <stdexcept>
#include <string>

namespace wgqed {

// Thrown when a rate sum is requested at (or numerically indistinguishable
// from) a mode cutoff, where the 1/k0 summand diverges.
class DivergentSumError : public std::runtime_error {
  public:
    DivergentSumError(int n_x, int n_y, double distance)
        : std::runtime_error("divergent mode sum: mode (" + std::to_string(n_x) + ","
                             + std::to_string(n_y) + ") is within " + std::to_string(distance)
                             + " of cutoff"),
          n_x_(n_x),
          n_y_(n_y),
          distance_(distance)
    {
    }

    int n_x() const noexcept { return n_x_; }
    int n_y() const noexcept { return n_y_; }
    double distance() const noexcept { return distance_; }

  private:
    int n_x_;
    int n_y_;
    double distance_;
};

// Config-file parse failure carrying the offending location.
class ConfigError : public std::invalid_argument {
  public:
    ConfigError(const std::string& source, int line, const std::string& message)
        : std::invalid_argument(source + ":" + std::to_string(line) + ": " + message), line_(line)
    {
    }

    int line() const noexcept { return line_; }

  private:
    int line_;
};

}  // namespace wgqed
