#include "s4bell/reference.hpp"

namespace s4bell {

namespace {

using CC = ConjugacyClass;

constexpr ReferenceSpectrumRow kTable2[24] = {
    {"(1342)", 5, 0, CC::I, 4.63, 1.35, 0.38, 5.30, 5.30},
    {"(1423)", 6, 0, CC::I, 4.63, 1.35, 0.38, 5.30, 5.30},
    {"(2314)", 1, 1, CC::I, 1.98, 4.00, 3.03, 0.00, 4.00},
    {"(2431)", 6, 1, CC::I, 2.37, 3.60, 2.64, 0.79, 3.60},
    {"(3124)", 1, 2, CC::I, 1.98, 4.00, 3.03, 0.00, 4.00},
    {"(3241)", 5, 2, CC::I, 2.98, 3.00, 2.04, 1.99, 3.00},
    {"(4132)", 8, 0, CC::I, 2.37, 3.60, 2.64, 0.79, 3.60},
    {"(4213)", 8, 1, CC::I, 2.98, 3.00, 2.04, 1.99, 3.00},
    {"(1243)", 7, 2, CC::II, 3.95, 0.30, 1.92, 7.40, 7.40},
    {"(1324)", 2, 2, CC::II, 4.60, 0.68, 0.77, 6.63, 6.63},
    {"(1432)", 4, 0, CC::II, 4.76, 1.71, 0.00, 4.57, 4.76},
    {"(2134)", 2, 0, CC::II, 0.69, 3.56, 5.18, 0.89, 5.18},
    {"(3214)", 2, 1, CC::II, 2.71, 3.76, 2.05, 0.48, 3.76},
    {"(4231)", 3, 0, CC::II, 3.33, 1.94, 2.03, 4.12, 4.12},
    {"(2341)", 7, 0, CC::III, 2.74, 3.74, 2.02, 0.52, 3.74},
    {"(2413)", 4, 1, CC::III, 1.31, 3.96, 4.05, 0.07, 4.05},
    {"(3421)", 4, 2, CC::III, 1.93, 2.32, 3.95, 3.30, 3.95},
    {"(3142)", 7, 1, CC::III, 1.31, 3.96, 4.05, 0.07, 4.05},
    {"(4312)", 3, 1, CC::III, 1.92, 2.32, 3.95, 3.36, 3.95},
    {"(4123)", 3, 2, CC::III, 2.74, 3.74, 2.02, 0.52, 3.74},
    {"(2143)", 5, 1, CC::IV, 0.40, 3.65, 5.58, 0.70, 5.58},
    {"(3412)", 6, 2, CC::IV, 0.99, 3.05, 4.98, 1.90, 4.98},
    {"(4321)", 8, 2, CC::IV, 2.65, 1.39, 3.33, 5.21, 5.21},
    {"(1234)", 1, 0, CC::V, 4.05, 0.00, 1.93, 8.00, 8.00},
};

constexpr ReferenceBoundPair kPairBounds[] = {
    // B = 8
    {{4, 2}, {7, 0}, 8},
    {{3, 2}, {4, 1}, 8},
    {{3, 1}, {7, 1}, 8},
    {{5, 0}, {8, 0}, 8},
    {{6, 0}, {8, 1}, 8},
    {{4, 1}, {7, 2}, 8},
    {{3, 2}, {7, 2}, 8},
    {{4, 0}, {7, 1}, 8},
    {{3, 0}, {4, 2}, 8},
    // B = 12
    {{4, 0}, {7, 2}, 12},
    {{3, 0}, {7, 2}, 12},
    {{3, 0}, {4, 0}, 12},
    {{4, 1}, {7, 0}, 12},
    {{3, 1}, {7, 0}, 12},
    {{3, 1}, {4, 1}, 12},
    {{4, 2}, {7, 1}, 12},
    {{3, 2}, {7, 1}, 12},
    {{3, 2}, {4, 2}, 12},
    {{5, 2}, {8, 1}, 12},
    // B = 14
    {{2, 2}, {7, 2}, 14},
    {{2, 1}, {7, 2}, 14},
    {{2, 2}, {4, 0}, 14},
    {{2, 0}, {4, 0}, 14},
    {{2, 0}, {3, 0}, 14},
    {{2, 1}, {3, 0}, 14},
    {{2, 1}, {4, 2}, 14},
    {{2, 2}, {3, 2}, 14},
    {{2, 0}, {4, 1}, 14},
    {{2, 1}, {3, 1}, 14},
    {{2, 0}, {3, 2}, 14},
    {{3, 1}, {5, 0}, 14},
    // B = 16
    {{6, 2}, {8, 2}, 16},
};

constexpr ReferenceCycleExample kCycleExamples[4] = {
    {{4, 2}, {7, 0}, 8, 6},   // B = 8
    {{4, 0}, {7, 2}, 8, 6},   // B = 12
    {{2, 0}, {3, 2}, 8, 6},   // B = 14
    {{6, 2}, {8, 2}, 12, 4},  // B = 16
};

}  // namespace

std::span<const ReferenceSpectrumRow, 24> reference_table2() { return kTable2; }

std::span<const ReferenceBoundPair> reference_pair_bounds() { return kPairBounds; }

std::span<const ReferenceCycleExample, 4> reference_cycle_examples() { return kCycleExamples; }

}  // namespace s4bell
