// Reference table of (d, A(d), i(d)) for the Fibonacci word, d = 1..234,
// as published. 14 of the published first positions are internally
// inconsistent (an earlier progression exists and is certified by three
// independent generators); those rows are listed again in kCorrectedRows
// with the certified first positions. A(d) agrees on every row.
#ifndef FIBMAP_TESTS_REFERENCE_TABLE_HPP
#define FIBMAP_TESTS_REFERENCE_TABLE_HPP

#include <cstdint>

namespace testdata {

struct RefRow {
    std::uint64_t d, a, i;
};

inline constexpr RefRow kReferenceTable[] = {
    {1, 2, 2}, {2, 3, 3}, {3, 5, 20}, {4, 6, 16}, {5, 7, 11}, {6, 3, 20},
    {7, 2, 0}, {8, 12, 143}, {9, 4, 2}, {10, 4, 11}, {11, 4, 54}, {12, 4, 8},
    {13, 18, 32}, {14, 2, 2}, {15, 3, 11}, {16, 6, 7}, {17, 20, 70}, {18, 5, 3},
    {19, 3, 7}, {20, 2, 0}, {21, 30, 986}, {22, 4, 10}, {23, 3, 3}, {24, 4, 7},
    {25, 4, 16}, {26, 9, 11}, {27, 2, 2}, {28, 3, 87}, {29, 9, 376}, {30, 4, 2},
    {31, 4, 3}, {32, 3, 2}, {33, 4, 21}, {34, 47, 87}, {35, 2, 2}, {36, 3, 3},
    {37, 5, 7}, {38, 10, 16}, {39, 6, 3}, {40, 3, 7}, {41, 2, 0}, {42, 15, 20},
    {43, 4, 23}, {44, 4, 11}, {45, 4, 20}, {46, 4, 8}, {47, 13, 11}, {48, 2, 2},
    {49, 3, 11}, {50, 7, 20}, {51, 8, 36}, {52, 5, 11}, {53, 3, 7}, {54, 2, 0},
    {55, 77, 6764}, {56, 4, 31}, {57, 3, 3}, {58, 5, 376}, {59, 6, 84}, {60, 8, 11},
    {61, 3, 54}, {62, 2, 0}, {63, 10, 20}, {64, 4, 2}, {65, 4, 3}, {66, 3, 2},
    {67, 4, 42}, {68, 24, 87}, {69, 2, 2}, {70, 3, 3}, {71, 6, 54}, {72, 78, 304},
    {73, 6, 11}, {74, 3, 7}, {75, 2, 0}, {76, 22, 2583}, {77, 4, 11}, {78, 3, 3},
    {79, 4, 7}, {80, 4, 16}, {81, 11, 87}, {82, 2, 2}, {83, 3, 32}, {84, 8, 20},
    {85, 6, 2}, {86, 5, 32}, {87, 3, 2}, {88, 4, 55}, {89, 123, 231}, {90, 2, 2},
    {91, 3, 3}, {92, 5, 20}, {93, 8, 50}, {94, 7, 11}, {95, 3, 20}, {96, 2, 0},
    {97, 13, 54}, {98, 4, 2}, {99, 4, 11}, {100, 4, 20}, {101, 4, 8}, {102, 16, 32},
    {103, 2, 2}, {104, 3, 11}, {105, 6, 7}, {106, 12, 70}, {107, 5, 3}, {108, 3, 7},
    {109, 2, 0}, {110, 39, 10945}, {111, 4, 65}, {112, 3, 3}, {113, 4, 7}, {114, 4, 3},
    {115, 9, 32}, {116, 3, 609}, {117, 2, 0}, {118, 9, 20}, {119, 4, 2}, {120, 4, 3},
    {121, 3, 2}, {122, 4, 21}, {123, 34, 32}, {124, 2, 2}, {125, 3, 3}, {126, 5, 7},
    {127, 14, 16}, {128, 6, 11}, {129, 3, 7}, {130, 2, 0}, {131, 17, 88}, {132, 4, 23},
    {133, 4, 32}, {134, 4, 7}, {135, 4, 8}, {136, 12, 11}, {137, 2, 2}, {138, 3, 11},
    {139, 7, 7}, {140, 6, 15}, {141, 5, 11}, {142, 3, 7}, {143, 2, 0}, {144, 200, 75024},
    {145, 4, 86}, {146, 3, 3}, {147, 5, 20}, {148, 6, 16}, {149, 8, 87}, {150, 3, 20},
    {151, 2, 0}, {152, 11, 20}, {153, 4, 2}, {154, 4, 11}, {155, 4, 143}, {156, 4, 13},
    {157, 20, 32}, {158, 2, 2}, {159, 3, 11}, {160, 6, 20}, {161, 36, 70}, {162, 6, 87},
    {163, 3, 7}, {164, 2, 0}, {165, 26, 88}, {166, 4, 10}, {167, 3, 3}, {168, 4, 7},
    {169, 4, 16}, {170, 10, 32}, {171, 2, 2}, {172, 3, 32}, {173, 8, 7}, {174, 6, 91},
    {175, 4, 3}, {176, 3, 2}, {177, 4, 110}, {178, 62, 231}, {179, 2, 2}, {180, 3, 3},
    {181, 5, 7}, {182, 8, 16}, {183, 7, 32}, {184, 3, 20}, {185, 2, 0}, {186, 14, 20},
    {187, 4, 2}, {188, 4, 11}, {189, 4, 20}, {190, 4, 8}, {191, 14, 11}, {192, 2, 2},
    {193, 3, 11}, {194, 7, 88}, {195, 10, 413}, {196, 5, 11}, {197, 3, 7}, {198, 2, 0},
    {199, 56, 28656}, {200, 4, 31}, {201, 3, 3}, {202, 4, 2}, {203, 6, 783}, {204, 8, 11},
    {205, 3, 54}, {206, 2, 0}, {207, 10, 54}, {208, 4, 2}, {209, 4, 3}, {210, 3, 2},
    {211, 4, 42}, {212, 27, 32}, {213, 2, 2}, {214, 3, 3}, {215, 6, 232}, {216, 28, 160},
    {217, 6, 11}, {218, 3, 7}, {219, 2, 0}, {220, 20, 10945}, {221, 4, 10}, {222, 4, 87},
    {223, 4, 7}, {224, 4, 16}, {225, 11, 11}, {226, 2, 2}, {227, 3, 32}, {228, 8, 4180},
    {229, 6, 2}, {230, 5, 32}, {231, 3, 2}, {232, 4, 233}, {233, 322, 608}, {234, 2, 2},
};

inline constexpr RefRow kCorrectedRows[] = {
    {77, 4, 10}, {110, 39, 6764}, {116, 3, 376}, {131, 17, 54},
    {144, 200, 46367}, {156, 4, 8}, {165, 26, 54}, {174, 6, 57},
    {194, 7, 54}, {199, 56, 17710}, {215, 6, 143}, {220, 20, 6764},
    {228, 8, 2583}, {232, 4, 144},
};

}  // namespace testdata

#endif
