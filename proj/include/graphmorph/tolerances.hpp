/*
graphmorph
Copyright 2026 graphmorph contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

namespace graphmorph
{

/// Barycentric-system residual bound, relative to the drawing diameter.
inline constexpr double kResidualTol = 1e-9;

/// Column-sum bound for morphable weights, relative to the largest weight.
inline constexpr double kMorphableTol = 1e-9;

/// Residual above which a weight vector counts as unrealizable. Two orders
/// above kResidualTol so the two classifications cannot flap.
inline constexpr double kRealizabilitySeparation = 1e-6;

/// Relative pivot threshold for rank-revealing factorizations.
inline constexpr double kRankThreshold = 1e-8;

/// Relative tolerance on the single-edge tweak condition
/// delta * alpha_tail = eps * alpha_head.
inline constexpr double kTweakConditionTol = 1e-12;

/// Parallel-displacement deviation bound (cross product of the unit edge
/// direction with a vertex displacement, relative to the diameter).
inline constexpr double kParallelTol = 1e-9;

}  // namespace graphmorph
