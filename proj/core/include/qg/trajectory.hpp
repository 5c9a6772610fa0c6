#pragma once

#include <vector>

#include "qg/field.hpp"

namespace qg {

/// A field sampled on a strictly increasing time grid. All fields share one
/// spatial grid. `gamma` records how the nodes cluster at t = 0 (1 = uniform).
class Trajectory {
 public:
  Trajectory() = default;
  explicit Trajectory(double gamma) : gamma_(gamma) {}

  /// Throws std::invalid_argument if t does not exceed the last node or the
  /// grid differs from earlier fields.
  void append(double t, RealField field);

  bool empty() const { return times_.empty(); }
  std::size_t size() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<RealField>& fields() const { return fields_; }
  const RealField& field(std::size_t m) const { return fields_.at(m); }
  double time(std::size_t m) const { return times_.at(m); }
  const RealField& back() const { return fields_.back(); }
  const Grid2D& grid() const;
  double gamma() const { return gamma_; }

 private:
  std::vector<double> times_;
  std::vector<RealField> fields_;
  double gamma_ = 1.0;
};

/// Time-sampled pair of fields, e.g. the flux theta_1 R_perp(theta_2).
class VectorTrajectory {
 public:
  void append(double t, RealField first, RealField second);

  bool empty() const { return times_.empty(); }
  std::size_t size() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const RealField& first(std::size_t m) const { return first_.at(m); }
  const RealField& second(std::size_t m) const { return second_.at(m); }
  const Grid2D& grid() const;

 private:
  std::vector<double> times_;
  std::vector<RealField> first_;
  std::vector<RealField> second_;
};

/// Node-wise a - b; the time grids must match exactly.
Trajectory difference(const Trajectory& a, const Trajectory& b);
/// Node-wise factor * a.
Trajectory scaled(const Trajectory& a, double factor);

}  // namespace qg
