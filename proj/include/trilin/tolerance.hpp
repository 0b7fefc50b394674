#pragma once

// Sign and boundary predicates. A value v counts as zero when
// |v| <= tau * scale, where scale is the largest magnitude of the terms that
// produced v. tau is process-wide and defaults to 1e-9.

namespace trilin {

inline constexpr double kDefaultTolerance = 1e-9;

double tolerance() noexcept;
void set_tolerance(double tau);

/// Restores the previous tolerance on destruction.
class ScopedTolerance {
 public:
  explicit ScopedTolerance(double tau);
  ~ScopedTolerance();
  ScopedTolerance(const ScopedTolerance&) = delete;
  ScopedTolerance& operator=(const ScopedTolerance&) = delete;

 private:
  double saved_;
};

bool is_zero(double v, double scale) noexcept;

/// -1, 0 or +1 under the tolerance policy.
int sign(double v, double scale) noexcept;

}  // namespace trilin
