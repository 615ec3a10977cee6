// Generated by tests/oracle/generate_fixtures.py -- do not edit by hand.
#pragma once

namespace osb::fixtures {

inline constexpr double kX0[] = {4.2000000000000002, 1, 1.5};
inline constexpr double kFixedPoint[] = {4.2467922333931778, 2.4822640777977263, 1.682264077797726};
inline constexpr double kF0[] = {-1.1506098468080803, 1.4249999999999998, -0.19999999999999996};
inline constexpr double kH1[] = {4.2000000000000002, 2.4249999999999998, 1.5};
inline constexpr double kF1[] = {-0.008605320553410678, 0, 0.15625};
inline constexpr double kEstimator0[] = {3.0493901531919199, 2.4249999999999998, 1.3};
inline constexpr double kEstimator1[] = {4.1913946794465895, 2.4249999999999998, 1.65625};
inline constexpr double kGsOneSweep[] = {3.0493901531919199, 2.1373475382979801, 1.296684422872475};
inline constexpr double kIncrementY[] = {1.1420045262546699, 0, 0.35625000000000001};

// osb greedy / jacobi / gauss-seidel distance of the estimator to the
// fixed point at whole normalized iterations 0..10, from x0 above
inline constexpr double kOsbGreedyDistance[] = {1.1974020802012579, 0.029796352139985771, 0.018226889987598582, 0.012109634882390807, 0.0067561198573189429, 0.004027395185881133, 0.0019715619091886794, 0.0011752141129273141, 0.0007412138596203377, 0.0004530745689734772, 0.00030082216013571639};
inline constexpr double kJacobiDistance[] = {1.4822640777977263, 1.1974020802012579, 0.52745938846771612, 0.46047921114209123, 0.3138010488125702, 0.23295306355421452, 0.16779049523955969, 0.12212254295817448, 0.088562542348865847, 0.064305008428506838, 0.04667138394423187};
inline constexpr double kGaussSeidelDistance[] = {1.4822640777977263, 1.1974020802012579, 0.69383188563317955, 0.44311442728658079, 0.28178464402025893, 0.17910766442478732, 0.11380274575633997, 0.072292799393434137, 0.045917397309816366, 0.029162299956370319, 0.018520065088925008};

inline constexpr double kRatioAt10 = 155.14609669439247;
inline constexpr double kZeroStartRatioAt10 = 11.136193926594609;

// distance to the fixed point at normalized iteration 30, from (0,0,0)
inline constexpr double kZeroStartOsbAt30 = 3.9621579084325731e-07;
inline constexpr double kZeroStartJacobiAt30 = 0.0002898587281183751;
inline constexpr double kZeroStartGaussSeidelAt30 = 6.5571951051168753e-06;

// max |closed-form - brute-force| trajectory gap over 50 iterations
inline constexpr double kPathDeviation = 7.9936057773011271e-15;

}  // namespace osb::fixtures
