#pragma once

// Shared hand-checked fixtures: an order-6 ASM together with its height
// matrix, symmetrized height matrix, complete monotone triangle and dual.

#include <vector>

namespace fixtures {

inline const std::vector<std::vector<int>> asm6 = {
    {0, 0, 1, 0, 0, 0},  //
    {0, 1, -1, 0, 1, 0},  //
    {1, -1, 0, 1, 0, 0},  //
    {0, 1, 0, 0, -1, 1},  //
    {0, 0, 1, 0, 0, 0},  //
    {0, 0, 0, 0, 1, 0},
};

inline const std::vector<std::vector<int>> height6 = {
    {0, 0, 0, 0, 0, 0, 0},  //
    {0, 0, 0, 1, 1, 1, 1},  //
    {0, 0, 1, 1, 1, 2, 2},  //
    {0, 1, 1, 1, 2, 3, 3},  //
    {0, 1, 2, 2, 3, 3, 4},  //
    {0, 1, 2, 3, 4, 4, 5},  //
    {0, 1, 2, 3, 4, 5, 6},
};

inline const std::vector<std::vector<int>> sym_height6 = {
    {0, 1, 2, 3, 4, 5, 6},  //
    {1, 2, 3, 2, 3, 4, 5},  //
    {2, 3, 2, 3, 4, 3, 4},  //
    {3, 2, 3, 4, 3, 2, 3},  //
    {4, 3, 2, 3, 2, 3, 2},  //
    {5, 4, 3, 2, 1, 2, 1},  //
    {6, 5, 4, 3, 2, 1, 0},
};

inline const std::vector<std::vector<int>> triangle6 = {
    {3}, {2, 5}, {1, 4, 5}, {1, 2, 4, 6}, {1, 2, 3, 4, 6}, {1, 2, 3, 4, 5, 6},
};

inline const std::vector<std::vector<int>> triangle6_dual = {
    {5}, {3, 5}, {2, 3, 6}, {1, 3, 4, 6}, {1, 2, 4, 5, 6}, {1, 2, 3, 4, 5, 6},
};

}  // namespace fixtures
