#include "qg/trajectory.hpp"

#include <stdexcept>

namespace qg {

void Trajectory::append(double t, RealField field) {
  if (!times_.empty()) {
    if (!(t > times_.back())) {
      throw std::invalid_argument("Trajectory: times must be strictly increasing");
    }
    require_same_grid(fields_.front().grid(), field.grid(), "Trajectory::append");
  }
  times_.push_back(t);
  fields_.push_back(std::move(field));
}

const Grid2D& Trajectory::grid() const {
  if (fields_.empty()) throw std::logic_error("Trajectory: empty");
  return fields_.front().grid();
}

void VectorTrajectory::append(double t, RealField first, RealField second) {
  require_same_grid(first.grid(), second.grid(), "VectorTrajectory::append");
  if (!times_.empty()) {
    if (!(t > times_.back())) {
      throw std::invalid_argument("VectorTrajectory: times must be strictly increasing");
    }
    require_same_grid(first_.front().grid(), first.grid(), "VectorTrajectory::append");
  }
  times_.push_back(t);
  first_.push_back(std::move(first));
  second_.push_back(std::move(second));
}

const Grid2D& VectorTrajectory::grid() const {
  if (first_.empty()) throw std::logic_error("VectorTrajectory: empty");
  return first_.front().grid();
}

Trajectory difference(const Trajectory& a, const Trajectory& b) {
  if (a.times() != b.times()) {
    throw std::invalid_argument("difference: trajectories use different time grids");
  }
  Trajectory out(a.gamma());
  for (std::size_t m = 0; m < a.size(); ++m) out.append(a.time(m), a.field(m) - b.field(m));
  return out;
}

Trajectory scaled(const Trajectory& a, double factor) {
  Trajectory out(a.gamma());
  for (std::size_t m = 0; m < a.size(); ++m) out.append(a.time(m), factor * a.field(m));
  return out;
}

}  // namespace qg
