#pragma once

#include <array>

// Frozen expected values for the regression suite. Everything here was
// produced by an independent exhaustive scan and cross-checked against the
// recurrence engine before freezing; tests compare against these literals.
namespace fixtures {

struct Seq7 {
    long k;
    std::array<long, 7> t, xi, Tt, Txi;
};

inline constexpr std::array<Seq7, 6> seq7 = {{
    {2,
     {0, 2, 14, 84, 492, 2870, 16730},
     {0, 3, 20, 119, 696, 4059, 23660},
     {0, 3, 105, 3570, 121278, 4119885, 139954815},
     {0, 6, 210, 7140, 242556, 8239770, 279909630}},
    {3,
     {0, 1, 5, 20, 76, 285, 1065},
     {0, 2, 9, 35, 132, 494, 1845},
     {0, 1, 15, 210, 2926, 40755, 567645},
     {0, 3, 45, 630, 8778, 122265, 1702935}},
    {5,
     {0, 2, 6, 44, 116, 798, 2090},
     {0, 5, 14, 99, 260, 1785, 4674},
     {0, 3, 21, 990, 6786, 318801, 2185095},
     {0, 15, 105, 4950, 33930, 1594005, 10925475}},
    {6,
     {0, 1, 3, 14, 34, 143, 341},
     {0, 3, 8, 35, 84, 351, 836},
     {0, 1, 6, 105, 595, 10296, 58311},
     {0, 6, 36, 630, 3570, 61776, 349866}},
    {7,
     {0, 2, 5, 39, 87, 629, 1394},
     {0, 6, 14, 104, 231, 1665, 3689},
     {0, 3, 15, 780, 3828, 198135, 972315},
     {0, 21, 105, 5460, 26796, 1386945, 6806205}},
    {8,
     {0, 5, 11, 186, 390, 6335, 13265},
     {0, 15, 32, 527, 1104, 17919, 37520},
     {0, 15, 66, 17391, 76245, 20069280, 87986745},
     {0, 120, 528, 139128, 609960, 160554240, 703893960}},
}};

struct RankRowFx {
    long k, r, t_rm1, t_r, kappa;
};

inline constexpr std::array<RankRowFx, 92> rank_rows = {{
    {2, 1, 0, 2, 2}, {3, 1, 0, 1, 1}, {5, 2, 2, 6, 8},
    {6, 2, 1, 3, 4}, {7, 2, 2, 5, 7}, {8, 2, 5, 11, 16},
    {10, 3, 6, 12, 18}, {11, 2, 3, 6, 9}, {12, 2, 2, 4, 6},
    {13, 4, 234, 414, 648}, {14, 2, 5, 9, 14}, {15, 2, 1, 2, 3},
    {17, 2, 12, 20, 32}, {18, 2, 6, 10, 16}, {19, 3, 65, 104, 169},
    {20, 2, 3, 5, 8}, {21, 4, 21, 33, 54}, {22, 4, 77, 119, 196},
    {23, 2, 9, 14, 23}, {24, 2, 19, 29, 48}, {26, 3, 20, 30, 50},
    {27, 2, 10, 15, 25}, {28, 4, 51, 75, 126}, {29, 4, 3990, 5810, 9800},
    {30, 2, 4, 6, 10}, {31, 4, 623, 896, 1519}, {32, 2, 237, 339, 576},
    {33, 2, 9, 13, 22}, {34, 2, 14, 20, 34}, {35, 2, 2, 3, 5},
    {37, 2, 30, 42, 72}, {38, 2, 15, 21, 36}, {39, 2, 10, 14, 24},
    {40, 4, 303, 417, 720}, {41, 4, 864, 1184, 2048}, {42, 2, 5, 7, 12},
    {43, 4, 1475, 2006, 3481}, {44, 2, 84, 114, 198}, {45, 4, 68, 92, 160},
    {46, 6, 10373, 13961, 24334}, {47, 2, 20, 27, 47}, {48, 2, 41, 55, 96},
    {50, 3, 42, 56, 98}, {51, 3, 21, 28, 49}, {52, 4, 279, 369, 648},
    {53, 4, 28574, 37674, 66248}, {54, 2, 209, 275, 484}, {55, 4, 38, 50, 88},
    {56, 2, 6, 8, 14}, {57, 4, 65, 85, 150}, {58, 4, 8514, 11088, 19602},
    {59, 2, 230, 299, 529}, {60, 2, 13, 17, 30}, {61, 8, 770082534, 996236514, 1766319048},
    {62, 2, 27, 35, 62}, {63, 2, 3, 4, 7}, {65, 2, 56, 72, 128},
    {66, 4, 28, 36, 64}, {67, 4, 21437, 27404, 48841}, {68, 2, 14, 18, 32},
    {69, 4, 3419, 4355, 7774}, {70, 4, 110, 140, 250}, {71, 4, 1533, 1946, 3479},
    {72, 2, 7, 9, 16}, {73, 6, 1007124, 1274124, 2281248}, {74, 2, 1634, 2064, 3698},
    {75, 2, 11, 14, 25}, {76, 6, 25584, 32214, 57798}, {77, 4, 155, 195, 350},
    {78, 4, 23, 29, 52}, {79, 2, 35, 44, 79}, {80, 2, 71, 89, 160},
    {82, 3, 72, 90, 162}, {83, 2, 36, 45, 81}, {84, 2, 24, 30, 54},
    {85, 8, 127386, 158382, 285768}, {86, 4, 4641, 5763, 10404}, {87, 2, 12, 15, 27},
    {88, 4, 34671, 42945, 77616}, {89, 4, 223500, 276500, 500000}, {90, 2, 8, 10, 18},
    {91, 6, 704, 869, 1573}, {92, 4, 515, 635, 1150}, {93, 4, 5445, 6705, 12150},
    {94, 4, 961115, 1182179, 2143294}, {95, 2, 17, 21, 38}, {96, 4, 2155, 2645, 4800},
    {97, 4, 28216140, 34593492, 62809632}, {98, 2, 44, 54, 98}, {99, 2, 4, 5, 9},
    {101, 2, 90, 110, 200}, {102, 2, 45, 55, 100},
}};

struct FamilyFx {
    long t;
    std::array<long, 5> k_n, xi_n;
};

inline constexpr std::array<FamilyFx, 6> families = {{
    {1, {1, 36, 1225, 41616, 1413721}, {1, 8, 49, 288, 1681}},
    {2, {1, 100, 9801, 960400, 94109401}, {2, 24, 242, 2400, 23762}},
    {3, {1, 196, 38025, 7376656, 1431033241}, {3, 48, 675, 9408, 131043}},
    {4, {1, 324, 104329, 33593616, 10817040025}, {4, 80, 1444, 25920, 465124}},
    {5, {1, 484, 233289, 112444816, 54198168025}, {5, 120, 2645, 58080, 1275125}},
    {6, {1, 676, 455625, 307090576, 206978592601}, {6, 168, 4374, 113568, 2948406}},
}};

struct ScanRowFx {
    long lambda_, k, t, xi;
};

inline constexpr std::array<ScanRowFx, 26> scan_rows = {{
    {6, 36, 1, 8}, {10, 100, 2, 24}, {14, 196, 3, 48},
    {18, 324, 4, 80}, {22, 484, 5, 120}, {26, 676, 6, 168},
    {30, 900, 7, 224}, {34, 1156, 8, 288}, {35, 1225, 1, 49},
    {38, 1444, 9, 360}, {42, 1764, 10, 440}, {46, 2116, 11, 528},
    {50, 2500, 12, 624}, {54, 2916, 13, 728}, {58, 3364, 14, 840},
    {62, 3844, 15, 960}, {66, 4356, 16, 1088}, {70, 4900, 17, 1224},
    {74, 5476, 18, 1368}, {78, 6084, 19, 1520}, {82, 6724, 20, 1680},
    {86, 7396, 21, 1848}, {90, 8100, 22, 2024}, {94, 8836, 23, 2208},
    {98, 9604, 24, 2400}, {99, 9801, 2, 242},
}};

struct OeisFx {
    long k;
    const char* ids[4];  // t, xi, Tt, Txi
};

inline constexpr std::array<OeisFx, 6> oeis_ids = {{
    {2, {"A053141", "A001652", "A075528", "A029549"}},
    {3, {"A061278", "A001571", "A076139", "A076140"}},
    {5, {"A077259", "A077262", "A077260", "A077261"}},
    {6, {"A077288", "A077291", "A077289", "A077290"}},
    {7, {"A077398", "A077401", "A077399", "A077400"}},
    {8, {"A336623", "A336625", "A336624", "A336626"}},
}};

}  // namespace fixtures
