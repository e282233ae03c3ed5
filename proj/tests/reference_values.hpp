// Published reference values used by the acceptance binary.
#ifndef GLD_TESTS_REFERENCE_VALUES_HPP
#define GLD_TESTS_REFERENCE_VALUES_HPP

#include <array>
#include <vector>

namespace ref {

// one column of a convergence table; slope[0] is unused (first row)
struct Column {
    std::vector<double> E;
    std::vector<double> slope;
};

// 1D model, linear interpolation, dt = sqrt(h)/50, N = 10..320; cases i, ii, iii
inline const std::array<Column, 3> linear_1d{{
    {{1.54e-2, 8.07e-3, 4.15e-3, 2.10e-3, 1.06e-3, 5.31e-4}, {0, 1.86, 1.92, 1.96, 1.98, 1.99}},
    {{3.45e-2, 1.83e-2, 9.38e-3, 4.75e-3, 2.39e-3, 1.13e-3}, {0, 1.87, 1.92, 1.96, 1.98, 2.16}},
    {{2.11e-2, 1.11e-2, 5.69e-3, 2.88e-3, 1.45e-3, 7.27e-4}, {0, 1.86, 1.92, 1.96, 1.98, 1.99}},
}};

// 1D model, quadratic interpolation, dt = h
inline const std::array<Column, 3> quadratic_1d{{
    {{4.65e-3, 1.11e-3, 2.68e-4, 6.59e-5, 1.63e-5, 4.06e-6}, {0, 2.07, 2.04, 2.03, 2.01, 2.01}},
    {{8.05e-2, 2.19e-2, 5.63e-3, 1.42e-3, 3.58e-4, 8.96e-5}, {0, 1.88, 1.96, 1.98, 1.99, 2.00}},
    {{1.65e-2, 5.45e-3, 1.53e-3, 4.02e-4, 1.03e-4, 2.61e-5}, {0, 1.60, 1.84, 1.93, 1.97, 1.98}},
}};

// 2D model, E11 only, N = 10..80
inline const std::array<Column, 3> linear_2d{{
    {{3.87e-2, 1.98e-2, 9.99e-3, 5.03e-3}, {0, 1.94, 1.97, 1.98}},
    {{3.84e-2, 1.96e-2, 9.94e-3, 5.01e-3}, {0, 1.94, 1.97, 1.98}},
    {{3.87e-2, 1.98e-2, 9.99e-3, 5.03e-3}, {0, 1.94, 1.97, 1.98}},
}};

inline const std::array<Column, 3> quadratic_2d{{
    {{2.07e-4, 5.10e-5, 1.27e-5, 3.17e-6}, {0, 2.02, 2.00, 2.00}},
    {{2.18e-3, 5.35e-4, 1.32e-4, 3.27e-5}, {0, 2.02, 2.02, 2.01}},
    {{9.79e-4, 2.53e-4, 6.39e-5, 1.61e-5}, {0, 1.95, 1.98, 1.99}},
}};

// Oldroyd-B, Wi = 0.025, linear interpolation; components 11, 12, 22
inline const std::array<Column, 3> oldroyd_linear{{
    {{2.03e-3, 1.02e-3, 5.11e-4, 2.56e-4}, {0, 1.99, 1.99, 1.99}},
    {{2.03e-3, 1.02e-3, 5.11e-4, 2.56e-4}, {0, 1.99, 1.99, 1.99}},
    {{2.03e-3, 1.02e-3, 5.11e-4, 2.56e-4}, {0, 1.99, 1.99, 1.99}},
}};

struct WiBlock {
    double Wi;
    std::array<Column, 3> c;
};

// Oldroyd-B, quadratic interpolation, dt = h/5
inline const std::array<WiBlock, 5> oldroyd_sweep{{
    {1.0,
     {{{{1.55e-3, 4.23e-4, 1.09e-4, 2.77e-5}, {0, 1.88, 1.95, 1.98}},
       {{1.06e-3, 2.93e-4, 7.65e-5, 1.95e-5}, {0, 1.85, 1.94, 1.98}},
       {{5.54e-4, 1.48e-4, 3.79e-5, 9.58e-6}, {0, 1.91, 1.96, 1.99}}}}},
    {5.0,
     {{{{1.97e-3, 5.36e-4, 1.39e-4, 3.51e-5}, {0, 1.87, 1.95, 1.98}},
       {{1.37e-3, 3.80e-4, 9.90e-5, 2.52e-5}, {0, 1.85, 1.94, 1.98}},
       {{7.13e-4, 1.97e-4, 5.14e-5, 1.31e-5}, {0, 1.86, 1.94, 1.97}}}}},
    {10.0,
     {{{{2.03e-3, 5.54e-4, 1.43e-4, 3.63e-5}, {0, 1.87, 1.94, 1.98}},
       {{1.42e-3, 3.93e-4, 1.03e-4, 2.61e-5}, {0, 1.85, 1.94, 1.98}},
       {{7.38e-4, 2.04e-4, 5.35e-5, 1.36e-5}, {0, 1.85, 1.93, 1.97}}}}},
    {50.0,
     {{{{2.08e-3, 5.69e-4, 1.47e-4, 3.72e-5}, {0, 1.87, 1.95, 1.98}},
       {{1.46e-3, 4.05e-4, 1.06e-4, 2.68e-5}, {0, 1.85, 1.94, 1.98}},
       {{7.59e-4, 2.11e-4, 5.53e-5, 1.41e-5}, {0, 1.85, 1.93, 1.97}}}}},
    {100.0,
     {{{{2.09e-3, 5.71e-4, 1.48e-4, 3.74e-5}, {0, 1.87, 1.95, 1.98}},
       {{1.46e-3, 4.06e-4, 1.06e-4, 2.69e-5}, {0, 1.85, 1.94, 1.98}},
       {{7.62e-4, 2.12e-4, 5.55e-5, 1.42e-5}, {0, 1.85, 1.93, 1.97}}}}},
}};

// decaying cellular flow, Wi = 0.25, beta = 0.75, dt = h/10
inline const std::array<Column, 3> cellular{{
    {{4.10e-3, 1.02e-3, 2.82e-4, 7.47e-5}, {0, 2.01, 1.86, 1.91}},
    {{7.64e-2, 2.11e-3, 5.83e-4, 1.54e-4}, {0, 1.86, 1.85, 1.92}},
    {{1.98e-2, 5.19e-3, 1.32e-3, 3.30e-4}, {0, 1.93, 1.97, 2.00}},
}};

// step halving on a fixed mesh, k = 0..6
inline const std::array<double, 7> halving_linear_h40{1.18375e-2, 1.08387e-2, 1.03445e-2, 1.01025e-2,
                                                      9.98198e-3, 9.92182e-3, 9.89128e-3};
inline const std::array<double, 7> halving_linear_h320{1.94633e-3, 1.57935e-3, 1.39709e-3, 1.30627e-3,
                                                       1.26087e-3, 1.23823e-3, 1.22691e-3};
inline const std::array<double, 7> halving_quadratic_h40{5.63e-3, 1.50e-3, 4.30e-4, 1.58e-4,
                                                         8.97e-5, 7.27e-5, 6.84e-5};
inline const std::array<double, 7> halving_quadratic_h320{8.96e-5, 2.34e-5, 6.64e-6, 2.41e-6,
                                                          1.36e-6, 1.10e-6, 1.03e-6};

}  // namespace ref

#endif  // GLD_TESTS_REFERENCE_VALUES_HPP
