#pragma once

// Published reference values frozen for the acceptance suite.

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace reference_tables {

struct RawRow {
    long long count;
    std::vector<std::pair<int, long long>> type;
};

// Condensed cycle-index tables, n = 3..9.
inline const std::map<int, std::vector<RawRow>> kPrintedCycleIndex{
    {3,
     {
         {12ll, {{4, 2}}},
         {8ll, {{2, 1}, {6, 1}}},
         {13ll, {{2, 4}}},
         {8ll, {{1, 2}, {3, 2}}},
         {6ll, {{1, 4}, {2, 2}}},
         {1ll, {{1, 8}}},
     }},
    {4,
     {
         {48ll, {{8, 2}}},
         {84ll, {{4, 4}}},
         {96ll, {{2, 2}, {6, 2}}},
         {51ll, {{2, 8}}},
         {48ll, {{1, 2}, {2, 1}, {4, 3}}},
         {32ll, {{1, 4}, {3, 4}}},
         {12ll, {{1, 4}, {2, 6}}},
         {12ll, {{1, 8}, {2, 4}}},
         {1ll, {{1, 16}}},
     }},
    {5,
     {
         {480ll, {{8, 4}}},
         {320ll, {{4, 2}, {12, 2}}},
         {520ll, {{4, 8}}},
         {384ll, {{2, 1}, {10, 3}}},
         {720ll, {{2, 4}, {6, 4}}},
         {240ll, {{2, 4}, {4, 6}}},
         {231ll, {{2, 16}}},
         {384ll, {{1, 2}, {5, 6}}},
         {240ll, {{1, 4}, {2, 2}, {4, 6}}},
         {160ll, {{1, 4}, {2, 2}, {3, 4}, {6, 2}}},
         {80ll, {{1, 8}, {3, 8}}},
         {60ll, {{1, 8}, {2, 12}}},
         {20ll, {{1, 16}, {2, 8}}},
         {1ll, {{1, 32}}},
     }},
    {6,
     {
         {5760ll, {{8, 8}}},
         {3840ll, {{4, 1}, {12, 5}}},
         {3840ll, {{4, 4}, {12, 4}}},
         {4920ll, {{4, 16}}},
         {6912ll, {{2, 2}, {10, 6}}},
         {1920ll, {{2, 2}, {6, 10}}},
         {5280ll, {{2, 8}, {6, 8}}},
         {2160ll, {{2, 8}, {4, 12}}},
         {1053ll, {{2, 32}}},
         {3840ll, {{1, 2}, {2, 1}, {3, 2}, {6, 9}}},
         {2304ll, {{1, 4}, {5, 12}}},
         {640ll, {{1, 4}, {3, 20}}},
         {1440ll, {{1, 4}, {2, 6}, {4, 12}}},
         {720ll, {{1, 8}, {2, 4}, {4, 12}}},
         {960ll, {{1, 8}, {2, 4}, {3, 8}, {6, 4}}},
         {120ll, {{1, 8}, {2, 28}}},
         {160ll, {{1, 16}, {3, 16}}},
         {180ll, {{1, 16}, {2, 24}}},
         {30ll, {{1, 32}, {2, 16}}},
         {1ll, {{1, 64}}},
     }},
    {7,
     {
         {26880ll, {{8, 4}, {24, 4}}},
         {53760ll, {{8, 16}}},
         {32256ll, {{4, 2}, {20, 6}}},
         {53760ll, {{4, 2}, {12, 10}}},
         {47040ll, {{4, 8}, {12, 8}}},
         {43344ll, {{4, 32}}},
         {46080ll, {{2, 1}, {14, 9}}},
         {72576ll, {{2, 4}, {10, 12}}},
         {58240ll, {{2, 4}, {6, 20}}},
         {13440ll, {{2, 4}, {4, 6}, {6, 4}, {12, 6}}},
         {35560ll, {{2, 16}, {6, 16}}},
         {21840ll, {{2, 16}, {4, 24}}},
         {5209ll, {{2, 64}}},
         {46080ll, {{1, 2}, {7, 18}}},
         {16128ll, {{1, 4}, {2, 2}, {5, 12}, {10, 6}}},
         {26880ll, {{1, 4}, {2, 2}, {3, 4}, {6, 18}}},
         {13440ll, {{1, 4}, {2, 2}, {3, 4}, {4, 6}, {6, 2}, {12, 6}}},
         {8064ll, {{1, 8}, {5, 24}}},
         {4480ll, {{1, 8}, {3, 40}}},
         {10080ll, {{1, 8}, {2, 12}, {4, 24}}},
         {3360ll, {{1, 8}, {2, 12}, {3, 8}, {6, 12}}},
         {1680ll, {{1, 16}, {2, 8}, {4, 24}}},
         {3360ll, {{1, 16}, {2, 8}, {3, 16}, {6, 8}}},
         {840ll, {{1, 16}, {2, 56}}},
         {280ll, {{1, 32}, {3, 32}}},
         {420ll, {{1, 32}, {2, 48}}},
         {42ll, {{1, 64}, {2, 32}}},
         {1ll, {{1, 128}}},
     }},
    {8,
     {
         {645120ll, {{16, 16}}},
         {430080ll, {{8, 8}, {24, 8}}},
         {779520ll, {{8, 32}}},
         {516096ll, {{4, 4}, {20, 12}}},
         {1218560ll, {{4, 4}, {12, 20}}},
         {465920ll, {{4, 16}, {12, 16}}},
         {445424ll, {{4, 64}}},
         {1105920ll, {{2, 2}, {14, 18}}},
         {516096ll, {{2, 2}, {6, 2}, {10, 6}, {30, 6}}},
         {709632ll, {{2, 8}, {10, 24}}},
         {698880ll, {{2, 8}, {6, 40}}},
         {322560ll, {{2, 8}, {4, 12}, {6, 8}, {12, 12}}},
         {243264ll, {{2, 32}, {6, 32}}},
         {171360ll, {{2, 32}, {4, 48}}},
         {26463ll, {{2, 128}}},
         {645120ll, {{1, 2}, {2, 1}, {4, 3}, {8, 30}}},
         {368640ll, {{1, 4}, {7, 36}}},
         {172032ll, {{1, 4}, {3, 4}, {5, 12}, {15, 12}}},
         {80640ll, {{1, 4}, {2, 6}, {4, 60}}},
         {215040ll, {{1, 4}, {2, 6}, {3, 4}, {6, 38}}},
         {129024ll, {{1, 8}, {2, 4}, {5, 24}, {10, 12}}},
         {107520ll, {{1, 8}, {2, 4}, {3, 8}, {6, 36}}},
         {107520ll, {{1, 8}, {2, 4}, {3, 8}, {4, 12}, {6, 4}, {12, 12}}},
         {35840ll, {{1, 8}, {2, 4}, {3, 40}, {6, 20}}},
         {40320ll, {{1, 8}, {2, 28}, {4, 48}}},
         {21504ll, {{1, 16}, {5, 48}}},
         {17920ll, {{1, 16}, {3, 80}}},
         {40320ll, {{1, 16}, {2, 24}, {4, 48}}},
         {26880ll, {{1, 16}, {2, 24}, {3, 16}, {6, 24}}},
         {1680ll, {{1, 16}, {2, 120}}},
         {3360ll, {{1, 32}, {2, 16}, {4, 48}}},
         {8960ll, {{1, 32}, {2, 16}, {3, 32}, {6, 16}}},
         {3360ll, {{1, 32}, {2, 112}}},
         {448ll, {{1, 64}, {3, 64}}},
         {840ll, {{1, 64}, {2, 96}}},
         {56ll, {{1, 128}, {2, 64}}},
         {1ll, {{1, 256}}},
     }},
    {9,
     {
         {11612160ll, {{16, 32}}},
         {4644864ll, {{8, 4}, {40, 12}}},
         {7741440ll, {{8, 16}, {24, 16}}},
         {9386496ll, {{8, 64}}},
         {6635520ll, {{4, 2}, {28, 18}}},
         {5160960ll, {{4, 2}, {12, 42}}},
         {8128512ll, {{4, 8}, {20, 24}}},
         {16773120ll, {{4, 8}, {12, 40}}},
         {6612480ll, {{4, 32}, {12, 32}}},
         {4317408ll, {{4, 128}}},
         {10321920ll, {{2, 1}, {6, 1}, {18, 28}}},
         {14929920ll, {{2, 4}, {14, 36}}},
         {10838016ll, {{2, 4}, {6, 4}, {10, 12}, {30, 12}}},
         {3584000ll, {{2, 4}, {6, 84}}},
         {2322432ll, {{2, 4}, {4, 6}, {10, 12}, {20, 18}}},
         {5806080ll, {{2, 4}, {4, 6}, {8, 60}}},
         {6144768ll, {{2, 16}, {10, 48}}},
         {8117760ll, {{2, 16}, {6, 80}}},
         {4354560ll, {{2, 16}, {4, 24}, {6, 16}, {12, 24}}},
         {725760ll, {{2, 16}, {4, 120}}},
         {1637664ll, {{2, 64}, {6, 64}}},
         {1397088ll, {{2, 64}, {4, 96}}},
         {142207ll, {{2, 256}}},
         {10321920ll, {{1, 2}, {3, 2}, {9, 56}}},
         {3317760ll, {{1, 4}, {2, 2}, {7, 36}, {14, 18}}},
         {5806080ll, {{1, 4}, {2, 2}, {4, 6}, {8, 60}}},
         {2322432ll, {{1, 4}, {2, 2}, {4, 6}, {5, 12}, {10, 6}, {20, 18}}},
         {2580480ll, {{1, 4}, {2, 2}, {3, 20}, {6, 74}}},
         {1658880ll, {{1, 8}, {7, 72}}},
         {1548288ll, {{1, 8}, {3, 8}, {5, 24}, {15, 24}}},
         {143360ll, {{1, 8}, {3, 168}}},
         {580608ll, {{1, 8}, {2, 12}, {5, 24}, {10, 36}}},
         {725760ll, {{1, 8}, {2, 12}, {4, 120}}},
         {1935360ll, {{1, 8}, {2, 12}, {3, 8}, {6, 76}}},
         {967680ll, {{1, 8}, {2, 12}, {3, 8}, {4, 24}, {6, 12}, {12, 24}}},
         {580608ll, {{1, 16}, {2, 8}, {5, 48}, {10, 24}}},
         {322560ll, {{1, 16}, {2, 8}, {3, 16}, {6, 72}}},
         {483840ll, {{1, 16}, {2, 8}, {3, 16}, {4, 24}, {6, 8}, {12, 24}}},
         {322560ll, {{1, 16}, {2, 8}, {3, 80}, {6, 40}}},
         {362880ll, {{1, 16}, {2, 56}, {4, 96}}},
         {80640ll, {{1, 16}, {2, 56}, {3, 16}, {6, 56}}},
         {48384ll, {{1, 32}, {5, 96}}},
         {53760ll, {{1, 32}, {3, 160}}},
         {120960ll, {{1, 32}, {2, 48}, {4, 96}}},
         {120960ll, {{1, 32}, {2, 48}, {3, 32}, {6, 48}}},
         {15120ll, {{1, 32}, {2, 240}}},
         {6048ll, {{1, 64}, {2, 32}, {4, 96}}},
         {20160ll, {{1, 64}, {2, 32}, {3, 64}, {6, 32}}},
         {10080ll, {{1, 64}, {2, 224}}},
         {672ll, {{1, 128}, {3, 128}}},
         {1512ll, {{1, 128}, {2, 192}}},
         {72ll, {{1, 256}, {2, 128}}},
         {1ll, {{1, 512}}},
     }},
};

// Classes of k-vertex subsets, k = 1..n+1, n = 1..8.
inline const std::vector<std::vector<std::string>> kSimplexCounts{
    {"1", "1"},
    {"1", "2", "1"},
    {"1", "3", "3", "6"},
    {"1", "4", "6", "19", "27"},
    {"1", "5", "10", "47", "131", "472"},
    {"1", "6", "16", "103", "497", "3253", "19735"},
    {"1", "7", "23", "203", "1606", "18435", "221778", "2773763"},
    {"1", "8", "32", "373", "4647", "91028", "2074059", "51107344", "1245930065"},
};

// Full polytope-count rows for n = 1..4 and the half row for n = 5
// (k = 0..16; the remaining values follow by complementation symmetry).
inline const std::vector<std::vector<std::string>> kPolytopeCounts{
    {"1", "1", "1"},
    {"1", "1", "2", "1", "1"},
    {"1", "1", "3", "3", "6", "3", "3", "1", "1"},
    {"1", "1", "4", "6", "19", "27", "50", "56", "74", "56", "50", "27", "19", "6", "4", "1", "1"},
    {"1", "1", "5", "10", "47", "131", "472", "1326", "3779", "9013", "19963", "38073", "65664",
     "98804", "133576", "158658", "169112"},
};

// p(n) and Delta(n) for n = 0..13.
inline const std::vector<long long> kPartitionCounts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101};
inline const std::vector<long long> kDoublePartitionCounts{1,   2,   5,   10,  20,  36,  65,
                                                           110, 185, 300, 481, 752, 1165, 1770};

// Right / acute / all triangle classes for n = 2..17.
inline const std::vector<std::array<long long, 3>> kTriangleCounts{
    {1, 0, 1},   {2, 1, 3},   {4, 2, 6},    {6, 4, 10},   {9, 7, 16},   {12, 11, 23},
    {16, 16, 32}, {20, 23, 43}, {25, 31, 56}, {30, 41, 71}, {36, 53, 89}, {42, 67, 109},
    {49, 83, 132}, {56, 102, 158}, {64, 123, 187}, {72, 147, 219},
};

// Acute census sizes a(n) and total simplex classes s(n), n = 1..11
// (s(9..11) only to the printed precision).
inline const std::vector<long long> kAcuteCensus{1, 0, 1, 1, 2, 6, 13, 29, 67, 162, 392};
inline const std::vector<std::string> kTotalSimplexCounts{"1",      "1",       "6",
                                                          "27",     "472",     "19735",
                                                          "2773763", "1245930065"};
inline const std::vector<double> kTotalSimplexApprox{1.8e12, 8.7e15, 1.3e20};  // n = 9, 10, 11

// Distinct absolute determinants of the census, n = 3..9.
inline const std::map<int, std::set<long long>> kDeterminantSets{
    {3, {2}},
    {4, {3}},
    {5, {4, 5}},
    {6, {5, 7, 8, 9}},
    {7, {6, 9, 10, 11, 12, 13, 14, 24, 32}},
    {8, {7, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 40, 44, 56}},
    {9, {8,  13, 16, 17, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28,
         29, 30, 31, 32, 34, 35, 45, 56, 64, 68, 72, 80, 88, 96}},
};

// Maximal absolute determinants over the census, n = 3..9.
inline const std::map<int, long long> kMaxDeterminants{{3, 2},  {4, 3},  {5, 5}, {6, 9},
                                                       {7, 32}, {8, 56}, {9, 96}};

// Circled numerator+denominator sums in the fraction tree, levels 0..3,
// left-to-right.
inline const std::vector<std::vector<long long>> kFractionTreeSums{
    {3},
    {4, 5},
    {5, 7, 7, 8},
    {6, 9, 10, 11, 9, 12, 11, 13},
};

}  // namespace reference_tables
