// Copyright 2026 The cospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seed data of the worked examples.

#pragma once

#include <array>
#include <cstddef>

#include "cospec/matrix.hpp"

namespace cospec::fixtures {

inline IntMatrix swap2() { return {{0, 1}, {1, 0}}; }

// Reflexive unfolding, m = 1, V = j_2^T, A = D = K_2.
inline IntMatrix reflexive_v() { return {{1, 1}}; }
inline IntMatrix reflexive_b() { return {{1, 0}, {1, 0}}; }

// Semi-reflexive, U = J_2, X = J_2 - I_2.
inline IntMatrix complete_u() { return IntMatrix::ones(2, 2); }
inline IntMatrix complete_x() { return swap2(); }

// Semi-reflexive, U = j_3^T, X with a single edge.
inline IntMatrix star_u() { return IntMatrix::ones(1, 3); }
inline IntMatrix star_x() { return {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}; }

// The non-PET seed shared by the semi-reflexive and tripartite examples.
inline IntMatrix row_pair_b() { return {{1, 1}, {0, 0}}; }

inline constexpr std::array<std::array<std::size_t, 3>, 5> kTripartiteTuples{
    {{1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}, {1, 3, 3}}};

}  // namespace cospec::fixtures
