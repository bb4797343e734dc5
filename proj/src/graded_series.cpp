#include "wpvol/graded_series.hpp"

#include <stdexcept>
#include <string>

namespace wpvol {

namespace {

void require_same_cap(const GradedSeries& a, const GradedSeries& b) {
  if (a.grade_cap() != b.grade_cap())
    throw std::invalid_argument("graded series caps differ: " + std::to_string(a.grade_cap()) + " vs " +
                                std::to_string(b.grade_cap()));
}

}  // namespace

GradedSeries::GradedSeries(Polynomial body, int grade_cap)
    : body_(truncate_grade(body, grade_cap)), grade_cap_(grade_cap) {
  if (grade_cap < 0) throw std::invalid_argument("negative grade cap");
}

Polynomial GradedSeries::grade_part(int grade) const { return wpvol::grade_part(body_, grade); }

GradedSeries GradedSeries::truncated(int cap) const {
  if (cap > grade_cap_) throw std::invalid_argument("cannot raise the grade cap of a truncated series");
  return GradedSeries(body_, cap);
}

GradedSeries GradedSeries::pow(unsigned exponent) const {
  GradedSeries result(Polynomial(1), grade_cap_);
  GradedSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  require_same_cap(a, b);
  return GradedSeries(a.body_ + b.body_, a.grade_cap_);
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
  require_same_cap(a, b);
  return GradedSeries(a.body_ - b.body_, a.grade_cap_);
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  require_same_cap(a, b);
  return GradedSeries(multiply_truncated(a.body_, b.body_, a.grade_cap_), a.grade_cap_);
}

GradedSeries operator*(const GradedSeries& a, const Polynomial& scalar_poly) {
  return GradedSeries(multiply_truncated(a.body_, scalar_poly, a.grade_cap_), a.grade_cap_);
}

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) { return a + b; }
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) { return a * b; }
GradedSeries series_truncate(const GradedSeries& a, int cap) { return a.truncated(cap); }

}  // namespace wpvol
