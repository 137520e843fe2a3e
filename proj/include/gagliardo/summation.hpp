#pragma once

namespace gagliardo {

/// Kahan compensated accumulator. Fixed-order accumulation keeps every sum in
/// the library reproducible run to run.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace gagliardo
