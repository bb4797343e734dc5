#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wpvol/polynomial.hpp"
#include "wpvol/weights.hpp"

namespace wpvol::volume {

struct ConditionedPolynomial {
  Polynomial value;
  std::vector<SideCondition> conditions;
};

// Half-tight cylinder volume H_n as a sum over combinatorial trees on
// boundary labels 2..n. Valid under L1 < L2, which is attached to the result.
ConditionedPolynomial htc_volume(int n);

// V_{0,n} summed over the graph family with the l-integration already done.
Polynomial v0n_graph_sum(int n);

// V_{0,n} summed over the two-three family only.
Polynomial v0n_reduced(int n);

// V_{0,n} = H_n + (1/16) * sum over full double trees, with the l-integral
// computed by actual integration.
Polynomial full_decomposition_v0n(int n);

enum class EllMode {
  ClosedForm,  // 2 sum_m (-1)^m t_{a+1+m}(L1) t_{b-m}(L2)
  Integrate,   // int_0^inf l dl t~_a(L1,l) t~_b(L2,l), a = -1 via the delta convention
};

// int_0^inf l dl \tilde t_a(L1, l) \tilde t_b(L2, l) assuming L1 < L2.
Polynomial ell_integral(int a, int b, Atom length1, Atom length2, EllMode mode);

}  // namespace wpvol::volume
