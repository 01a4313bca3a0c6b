#pragma once

// Reference classification tables as element literals.
// zeta3 is a primitive cube root of unity, zeta8 a primitive 8th root.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace reference {

struct GroupRow {
  std::string subgroup;
  std::size_t dim_I, index;
  std::vector<std::string> orbit;  // representative first
};

inline const std::vector<GroupRow> kS3 = {
    {"{1}", 1, 6, {"1"}},
    {"{1,a}", 1, 3, {"(1 + a)/2", "(1 - a)/2"}},
    {"{1,sa}", 1, 3, {"(1 + sa)/2", "(1 - sa)/2"}},
    {"{1,s2a}", 1, 3, {"(1 + s2a)/2", "(1 - s2a)/2"}},
    {"{1,s,s2}", 1, 2, {"(1 + s + s2)/3", "(1 + zeta3*s + zeta3^2*s2)/3", "(1 + zeta3^2*s + zeta3*s2)/3"}},
    {"{1,s,s2}", 2, 2, {"(2 - s - s2)/3", "(2 - zeta3*s - zeta3^2*s2)/3", "(2 - zeta3^2*s - zeta3*s2)/3"}},
    {"{1,s,s2,a,sa,s2a}", 1, 1, {"(1 + s + s2 + a + sa + s2a)/6", "(1 + s + s2 - a - sa - s2a)/6"}},
    {"{1,s,s2,a,sa,s2a}", 5, 1, {"(5 - s - s2 - a - sa - s2a)/6", "(5 - s - s2 + a + sa + s2a)/6"}},
};

struct KacRow {
  std::string algebra;
  std::string idempotent;
  std::size_t dim_Ae;
  std::map<std::size_t, std::size_t> simples;  // dim -> count
};

// The S2 dimension-2 entry is the literal analogous to S1; it is not idempotent.
inline const std::vector<KacRow> kKac = {
    {"<1>", "1", 1, {{1, 4}, {2, 1}}},
    {"<1,x>", "(1 + x)/2", 1, {{1, 4}}},
    {"<1,y>", "(1 + y)/2", 1, {{1, 4}}},
    {"<1,xy>", "(1 + xy)/2", 1, {{1, 4}}},
    {"<1,x,y,xy>", "(1 + x + y + xy)/4", 1, {{1, 2}}},
    {"<1,x,y,xy>", "(3 - x - y - xy)/4", 3, {{3, 2}}},
    {"S1", "(1 + xy + s + xy*s)/4", 1, {{1, 2}}},
    {"S1", "(2 + (1 + zeta8)*s + (1 - zeta8)*xy*s)/4", 2, {{2, 2}}},
    {"S1", "(3 - xy - s - xy*s)/4", 3, {{3, 2}}},
    {"S2", "(1 + xy + sbar + xy*sbar)/4", 1, {{1, 2}}},
    {"S2", "(2 + (1 - zeta8)*sbar + (1 + zeta8)*xy*sbar)/4", 2, {{2, 2}}},
    {"S2", "(3 - xy - sbar - xy*sbar)/4", 3, {{3, 2}}},
    {"A", "(1 + x + y + xy + z + xz + yz + xyz)/8", 1, {{1, 1}}},
    {"A", "(3 - x - y + 3*xy + z + xz + yz + xyz)/8", 3, {{3, 1}}},
    {"A", "(5 + x + y - 3*xy + z + xz + yz + xyz)/8", 5, {{5, 1}}},
    {"A", "(7 - x - y - xy - z - xz - yz - xyz)/8", 7, {{7, 1}}},
};
inline constexpr std::size_t kKacNonIdempotentRow = 10;

inline const std::map<std::size_t, std::size_t> kS3Blocks = {{1, 18}, {2, 2}, {5, 1}};
inline const std::map<std::size_t, std::size_t> kD8Blocks = {{1, 35}, {2, 2}, {3, 7}, {5, 1}, {7, 1}};
inline const std::map<std::size_t, std::size_t> kQ8Blocks = {{1, 19}, {2, 6}, {3, 7}, {5, 1}, {7, 1}};
inline const std::map<std::size_t, std::size_t> kKacBlocks = {{1, 23}, {2, 5}, {3, 7}, {5, 1}, {7, 1}};

}  // namespace reference
