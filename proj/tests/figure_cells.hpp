#pragma once

#include <utility>
#include <vector>

// Dark cells of the published shading diagram of 25173486 in Av(251364), as
// (column, row) from the bottom-left corner. Cell (x, y) is slot (x+1, y+1).
inline const std::vector<std::pair<int, int>> kFigureCells = {
    {0, 3}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 6}, {2, 7}, {3, 2},
    {3, 3}, {4, 0}, {4, 1}, {5, 0}, {5, 1}, {5, 5}, {5, 6}, {5, 7},
    {5, 8}, {6, 5}, {7, 3}, {7, 4}, {8, 3}, {8, 4}};
