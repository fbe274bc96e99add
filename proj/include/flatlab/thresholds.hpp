#ifndef FLATLAB_THRESHOLDS_HPP
#define FLATLAB_THRESHOLDS_HPP

// Calibrated thresholds for the finite-scale checks. Every value here is an
// implementation choice backed by an oracle run, not a published constant;
// published constants (sqrt 2, 5, 1/6, 19/18, 4/3, 5/3, 6/5, 18, 2/pi) live
// next to the checks that use them.
//
// Oracle: tests/oracle/calibrate.py (numpy, 64x oversampled grids and
// direct integer autocorrelations). Version 1.

namespace flatlab::thresholds {

inline constexpr int kVersion = 1;

// min over n in [4,16] of || |X_n| - 1 ||_1 observed 0.2664 (n = 4).
inline constexpr double kNonflatL1Floor = 0.1;
// min over n in [4,16] of || |X_n| - 1 ||_2 observed 0.3114 (n = 4).
inline constexpr double kNonflatL2Floor = 0.1;
// min over n in [4,16] of |M(X_n) - 1| observed 0.1071 (n = 4).
inline constexpr double kNonflatMahlerFloor = 0.05;

// max of ||R_N / sqrt(N+1)||_1 over N in {2^8..2^14} and 3*2^k observed
// 0.9431, so 1 - delta with delta = 0.02 leaves a 0.037 margin.
inline constexpr double kTruncatedL1Delta = 0.02;

// Finite-N slack below 19/18 for the normalized L4^4 of R_N; observed
// minimum 1.3325 over the default N list.
inline constexpr double kL4Slack1918 = 0.01;

// |normalized L4^4 of Q_p - 5/3| at p = 20011 observed 2.4e-5.
inline constexpr double kHoholdtJensenDeviation = 0.05;

// Cap on the Littlewood ratio; it equals 3(p-2)/p for Fekete polynomials.
inline constexpr double kLittlewoodRatioCap = 4.0;

// Grid-quadrature slack for inequalities between grid-computed quantities.
inline constexpr double kCharacterizationSlack = 1e-6;

inline constexpr double kParallelogramTolerance = 1e-10;
inline constexpr double kSupSlack = 1e-9;
inline constexpr double kGaussRelativeTolerance = 1e-8;
inline constexpr double kGaussZeroTolerance = 1e-9;

}  // namespace flatlab::thresholds

#endif  // FLATLAB_THRESHOLDS_HPP
