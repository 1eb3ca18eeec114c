#pragma once

// Closed-form polylogarithm constants and the network of dilogarithm values
// tied to d2 = Li2(-1/2).

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "polylog/complex.hpp"
#include "polylog/eval_result.hpp"

namespace polylog {

struct ConstantEntry {
  std::string name;
  Complex value;            ///< from the closed form
  std::string closed_form;  ///< display string
  std::string anchor;       ///< how the closed form is obtained
  std::function<EvalResult()> evaluate;  ///< the library's own evaluation path
};

/// The twelve constants: Li2(1), Li2(-1), Li3(-1), Li2(1/2), Li3(1/2), three
/// harmonic Euler sums, Li2(2), Li3(2), Im Li2(+-i) = +-G and Li3(i).
const std::vector<ConstantEntry>& constant_catalog();

/// Catalog entry by name. Throws DomainError if absent.
const ConstantEntry& constant_by_name(std::string_view name);

/// d2 = Li2(-1/2) from the series.
EvalResult d2_constant();

/// Li2(target) = alpha * d2 + beta + i * gamma.
struct D2Relation {
  Complex target;
  double alpha;
  double beta;
  double gamma;
  std::string label;   ///< e.g. "Li2(1/4)"
  std::string derivation;

  Complex predicted(double d2) const { return {alpha * d2 + beta, gamma}; }
};

/// The six relations for Li2 at 1/4, -2, 2/3, 4, 4/3 and 1/3.
const std::vector<D2Relation>& d2_ledger();

}  // namespace polylog
