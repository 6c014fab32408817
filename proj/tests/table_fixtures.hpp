/*
   Copyright 2026 The k3nine authors

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

// In-code copies of the two classification tables, for tests that must not
// depend on the data files. The dataset test cross-checks the bundled JSON
// against these same values.

#include <vector>

#include "k3nine/classifier.hpp"

inline std::vector<k3nine::classifier::TauCase> fixture_table2() {
    using k3nine::classifier::TauCase;
    return {
        {"A", 1, {3}, 9, "U(3)+A2", false},
        {"B", 1, {4, 0}, 9, "U+A2", true},
        {"C", 4, {0}, 6, "U(3)+A2^4", false},
        {"D", 4, {1, 0}, 6, "U+A2^4", false},
        {"E", 4, {2, 0, 0}, 6, "U+E6+A2", true},
        {"F", 4, {3, 0, 0, 0}, 6, "U+E8", true},
        {"G", 7, {0, 0, 0, 0}, 3, "U+E6^2+A2", false},
        {"H", 7, {1, 0, 0, 0, 0}, 3, "U+E6+E8", false},
    };
}

inline std::vector<k3nine::classifier::ReferenceRow> fixture_table1() {
    using k3nine::classifier::ReferenceRow;
    const std::optional<int> none;
    return {
        {"A1", "A", 6, 0, none, {0, 1, 4, 1}, 0, 4, 0},
        {"A2", "A", 3, 0, none, {1, 1, 1, 0}, 0, 2, 1},
        {"B", "B", 6, 0, none, {0, 1, 4, 1}, 0, 4, 0},
        {"C", "C", 3, 0, none, {1, 1, 1, 0}, 0, 4, 3},
        {"D1", "D", 7, 1, 0, {4, 3, 0, 0}, 1, 8, 1},
        {"D2", "D", 3, 1, 1, {1, 1, 1, 0}, 0, 4, 3},
        {"D3", "D", 6, 0, none, {0, 1, 4, 1}, 0, 6, 2},
        {"D4", "D", 3, 0, none, {1, 1, 1, 0}, 0, 4, 3},
        {"E", "E", 10, 1, 0, {3, 3, 3, 1}, 1, 10, 0},
        {"F", "F", 10, 1, 0, {3, 3, 3, 1}, 1, 10, 0},
        {"G1", "G", 10, 1, 0, {3, 3, 3, 1}, 1, 12, 2},
        {"G2", "G", 3, 0, none, {1, 1, 1, 0}, 0, 6, 5},
        {"H", "H", 14, 2, 0, {6, 5, 2, 1}, 2, 16, 0},
    };
}
