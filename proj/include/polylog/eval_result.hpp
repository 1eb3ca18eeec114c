#pragma once

#include <cstdint>
#include <string_view>

#include "polylog/complex.hpp"

namespace polylog {

/// Outermost code path that produced a value.
enum class Method { series, reflection, landen, inversion, integral, closed_form };

std::string_view to_string(Method m) noexcept;

struct EvalResult {
  Complex value{};
  double err_estimate = 0.0;       ///< absolute
  std::int64_t terms_or_evals = 0; ///< series terms or integrand evaluations
  Method method = Method::series;
};

/// A series or integrator gave up before reaching its tolerance; `best()`
/// carries the last estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, EvalResult best)
      : Error(what), best_(best) {}
  const EvalResult& best() const noexcept { return best_; }

 private:
  EvalResult best_;
};

}  // namespace polylog
