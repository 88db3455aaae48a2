#pragma once

namespace modcat {

/// Known-good values of C(k,n) for k = 1..8 and n = 0..14, with the Catalan
/// numbers as the final row. Used by the verify command and the acceptance
/// suite to pin the count table.
inline constexpr int kReferenceKMax = 8;
inline constexpr int kReferenceNMax = 14;

inline constexpr long long kReferenceTable[9][15] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192},
    {1, 1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046, 17303, 49721, 143365, 414584},
    {1, 1, 2, 5, 14, 41, 124, 384, 1210, 3865, 12482, 40677, 133572, 441468, 1467296},
    {1, 1, 2, 5, 14, 42, 131, 420, 1375, 4576, 15431, 52603, 180957, 627340, 2189430},
    {1, 1, 2, 5, 14, 42, 132, 428, 1420, 4796, 16432, 56966, 199444, 704146, 2504000},
    {1, 1, 2, 5, 14, 42, 132, 429, 1429, 4851, 16718, 58331, 205632, 731272, 2620176},
    {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4861, 16784, 58695, 207452, 739840, 2658936},
    {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440},
};

}  // namespace modcat
