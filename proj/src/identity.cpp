#include "polylog/identity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <numbers>

namespace polylog {
namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

ReportRow verify_identity(const IdentityRecord& record, int n_points, std::uint64_t seed,
                          std::optional<double> tol_override) {
  if (n_points < 1) throw DomainError("verify_identity: n_points must be >= 1");
  ReportRow row;
  row.identity_id = record.id;
  row.tol = tol_override.value_or(record.tol);
  row.expected_fail = record.expected_fail;
  row.notes = record.notes;

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv1a(record.id)),
                    static_cast<std::uint32_t>(fnv1a(record.id) >> 32)};
  std::mt19937_64 rng(seq);

  try {
    const std::vector<SamplePoint> points = record.sampler(n_points, rng);
    row.n_points = static_cast<int>(points.size());
    for (const SamplePoint& pt : points) {
      const double r = std::abs(record.lhs(pt) - record.rhs(pt));
      if (!(r <= row.max_residual)) row.max_residual = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
    }
    row.pass = row.max_residual <= row.tol;
  } catch (const std::exception& e) {
    row.max_residual = std::numeric_limits<double>::infinity();
    row.pass = false;
    row.notes += row.notes.empty() ? "" : "; ";
    row.notes += std::string("error: ") + e.what();
  }
  return row;
}

std::vector<ReportRow> verify_all(const std::vector<IdentityRecord>& records, int n_points,
                                  std::uint64_t seed, std::optional<double> tol_override) {
  if (n_points < 1) throw DomainError("verify_all: n_points must be >= 1");
  std::vector<std::future<ReportRow>> jobs;
  jobs.reserve(records.size());
  for (const IdentityRecord& r : records) {
    jobs.push_back(std::async(std::launch::async, [&r, n_points, seed, tol_override] {
      return verify_identity(r, n_points, seed, tol_override);
    }));
  }
  std::vector<ReportRow> rows;
  rows.reserve(jobs.size());
  for (auto& j : jobs) rows.push_back(j.get());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.identity_id < b.identity_id; });
  return rows;
}

bool report_ok(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return r.expected_fail || r.pass; });
}

Sampler real_grid(double a, double b) {
  return [a, b](int n, std::mt19937_64&) {
    std::vector<SamplePoint> pts;
    for (int k = 0; k < n; ++k) pts.push_back({Complex{a + (b - a) * (k + 0.5) / n, 0.0}, 0});
    return pts;
  };
}

Sampler disk(double r) {
  return [r](int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<SamplePoint> pts;
    for (int k = 0; k < n; ++k) {
      const double rad = r * std::sqrt(u(rng));
      const double th = 2.0 * std::numbers::pi * u(rng);
      pts.push_back({std::polar(rad, th), 0});
    }
    return pts;
  };
}

Sampler box(double re0, double re1, double im0, double im1) {
  return [=](int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ur(re0, re1), ui(im0, im1);
    std::vector<SamplePoint> pts;
    for (int k = 0; k < n; ++k) {
      const double re = ur(rng);
      pts.push_back({Complex{re, ui(rng)}, 0});
    }
    return pts;
  };
}

Sampler fixed(std::vector<SamplePoint> points) {
  return [points = std::move(points)](int, std::mt19937_64&) { return points; };
}

}  // namespace polylog
