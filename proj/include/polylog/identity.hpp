#pragma once

// Declarative identity records and the residual harness that checks them.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polylog/complex.hpp"

namespace polylog {

/// A test point: the argument and, where the identity is a family, the
/// integer index (order, p, table entry).
struct SamplePoint {
  Complex z{};
  int order = 0;
};

using Evaluator = std::function<Complex(const SamplePoint&)>;
/// Returns up to n points; fixed-set samplers may ignore n.
using Sampler = std::function<std::vector<SamplePoint>(int n, std::mt19937_64& rng)>;

struct IdentityRecord {
  std::string id;
  Evaluator lhs;
  Evaluator rhs;
  Sampler sampler;
  double tol = 1e-10;
  bool expected_fail = false;
  std::string notes;
};

struct ReportRow {
  std::string identity_id;
  int n_points = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool expected_fail = false;
  std::string notes;
};

/// Evaluates |lhs - rhs| on the sampled points. The generator is seeded
/// from `seed` and the record id, so rows do not depend on execution order.
/// An evaluator error makes the row fail with an infinite residual and the
/// message in notes.
ReportRow verify_identity(const IdentityRecord& record, int n_points, std::uint64_t seed = 0,
                          std::optional<double> tol_override = std::nullopt);

/// Runs records concurrently; rows come back sorted by identity_id.
std::vector<ReportRow> verify_all(const std::vector<IdentityRecord>& records, int n_points,
                                  std::uint64_t seed = 0,
                                  std::optional<double> tol_override = std::nullopt);

/// True when every row not marked expected-fail passes.
bool report_ok(const std::vector<ReportRow>& rows);

// Sampler helpers.

/// n evenly spaced interior points of (a, b): a + (b - a) (k + 1/2) / n.
Sampler real_grid(double a, double b);
/// n uniform points in the disk |z| <= r.
Sampler disk(double r);
/// n uniform points in the box [re0, re1] x [im0, im1].
Sampler box(double re0, double re1, double im0, double im1);
/// The given points, ignoring n.
Sampler fixed(std::vector<SamplePoint> points);

}  // namespace polylog
