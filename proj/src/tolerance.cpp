#include "trilin/tolerance.hpp"

#include <atomic>
#include <cmath>

#include "trilin/error.hpp"

namespace trilin {
namespace {

std::atomic<double> g_tolerance{kDefaultTolerance};

}  // namespace

double tolerance() noexcept { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw Error(Errc::InvalidArgument, "tolerance must be finite and non-negative");
  }
  g_tolerance.store(tau, std::memory_order_relaxed);
}

ScopedTolerance::ScopedTolerance(double tau) : saved_(tolerance()) { set_tolerance(tau); }

ScopedTolerance::~ScopedTolerance() { g_tolerance.store(saved_, std::memory_order_relaxed); }

bool is_zero(double v, double scale) noexcept { return std::abs(v) <= tolerance() * std::abs(scale); }

int sign(double v, double scale) noexcept {
  if (is_zero(v, scale)) return 0;
  return v > 0.0 ? 1 : -1;
}

}  // namespace trilin
