#pragma once

#include "wpvol/polynomial.hpp"

namespace wpvol {

// Polynomial truncated in the moment grading: only terms with at most
// grade_cap moment factors are kept.
class GradedSeries {
 public:
  GradedSeries(Polynomial body, int grade_cap);

  const Polynomial& body() const { return body_; }
  int grade_cap() const { return grade_cap_; }

  Polynomial grade_part(int grade) const;
  GradedSeries truncated(int cap) const;
  GradedSeries pow(unsigned exponent) const;

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const Polynomial& scalar_poly);
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  Polynomial body_;
  int grade_cap_;
};

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_truncate(const GradedSeries& a, int cap);

}  // namespace wpvol
