#pragma once

#include <stdexcept>
#include <string>

namespace shocklab {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state or parameter violated a precondition (nonpositive density,
/// nonpositive pressure, negative internal energy, invalid group element).
class domain_error : public error {
public:
    using error::error;
};

/// gamma*t + delta vanished at the evaluation time; the map is undefined
/// at the excluded instant t = -delta/gamma.
class singular_time_error : public error {
public:
    singular_time_error(double excluded_time, const std::string& what)
        : error(what), excluded_(excluded_time) {}
    double excluded_time() const { return excluded_; }

private:
    double excluded_;
};

/// A requested preimage point lies outside the source field.  Carries the
/// source window that would have been required.
class coverage_error : public error {
public:
    coverage_error(double t_lo, double t_hi, double x_lo, double x_hi,
                   const std::string& what)
        : error(what), t_lo_(t_lo), t_hi_(t_hi), x_lo_(x_lo), x_hi_(x_hi) {}
    double required_t_lo() const { return t_lo_; }
    double required_t_hi() const { return t_hi_; }
    double required_x_lo() const { return x_lo_; }
    double required_x_hi() const { return x_hi_; }

private:
    double t_lo_, t_hi_, x_lo_, x_hi_;
};

/// The Riemann data would open a vacuum region; no solution is returned.
class vacuum_error : public error {
public:
    using error::error;
};

/// Scenario configuration could not be parsed or validated.
class config_error : public error {
public:
    config_error(int line, const std::string& what)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    explicit config_error(const std::string& what) : config_error(0, what) {}
    int line() const { return line_; }

private:
    int line_;
};

/// The time integration produced an invalid state and was aborted.
class numerical_abort : public error {
public:
    using error::error;
};

} // namespace shocklab
