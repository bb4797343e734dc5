#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace wpvol {

// Declaration order is the canonical atom order used for serialization:
// pi2 < L1^2 < ... < Ln^2 < m0 < m1 < ... < r, followed by the auxiliary
// atoms used by the integration and f-polynomial machinery.
enum class AtomKind : std::uint8_t {
  PiSquared,
  LengthSquared,    // index = boundary label, 1-based
  Moment,           // m_k = int dmu(L) L^{2k}
  AuxSeries,        // the series variable r of Z(r)
  Integration,      // dummy variable u = l^2 of the l-integration
  THat,             // \hat t_k, k >= 0
  GammaHat,         // \hat gamma_k, k >= 2
  GammaOneInverse,  // 1 / \hat gamma_1
};

struct Atom {
  AtomKind kind = AtomKind::PiSquared;
  int index = 0;

  constexpr auto operator<=>(const Atom&) const = default;

  static constexpr Atom pi_squared() { return {AtomKind::PiSquared, 0}; }
  static constexpr Atom length(int label) { return {AtomKind::LengthSquared, label}; }
  static constexpr Atom moment(int k) { return {AtomKind::Moment, k}; }
  static constexpr Atom series_var() { return {AtomKind::AuxSeries, 0}; }
  static constexpr Atom integration() { return {AtomKind::Integration, 0}; }
  static constexpr Atom t_hat(int k) { return {AtomKind::THat, k}; }
  static constexpr Atom gamma_hat(int k) { return {AtomKind::GammaHat, k}; }
  static constexpr Atom gamma_one_inverse() { return {AtomKind::GammaOneInverse, 1}; }
};

std::string to_string(Atom a);

}  // namespace wpvol
