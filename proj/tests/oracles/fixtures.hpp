#pragma once

// Reference values computed with mpmath at 30 significant digits by generate_fixtures.py.
// Frozen here; do not edit by hand.

#include <complex>

namespace fixtures {

using Complex = std::complex<double>;

// 2 K_0(2)
inline constexpr double two_k0_of_2 = 0.22778774549906687131;
inline constexpr double psi_of_1 = 0.043217405606654007288;
inline constexpr double theta_of_1 = 1.0864348112133080146;
inline constexpr double psi_of_0_01 = 4.5;
inline const Complex gamma_half_plus_14_13i{-1.5258284441817803e-10, -5.5452733644374921976e-10};
inline const Complex log_gamma_quarter_plus_7_0665i{-10.669778090342743694, 6.3598643886080109116};
// 1 + 2 sum q^{n^2} cos(2 pi n z) at z = 1/2, q = e^{-pi}
inline constexpr double theta3_half_e_minus_pi = 0.91357913815611682141;
inline constexpr double xi_half = 0.99424155637662821983;
inline constexpr double zeta_half = -1.4603545088095868129;
inline const Complex zeta_0_3_plus_7i{1.0171314988950936842, 0.43944400689634059433};
inline const Complex zeta_half_plus_30i{-0.12064228759004369991, -0.58369121476370628876};
inline const Complex zeta_half_plus_100i{2.6926198856813240905, -0.020386029602598161771};
inline constexpr double zeta_1_1 = 10.584448464950809826;
inline constexpr double zero_1 = 14.13472514173469379;
inline constexpr double zero_2 = 21.022039638771554993;
inline constexpr double zero_3 = 25.010857580145688763;
inline constexpr double zero_4 = 30.42487612585951321;
inline constexpr double zero_5 = 32.935061587739189691;
inline constexpr double zero_6 = 37.586178158825671257;

// completed exp-symmetric values by direct quadrature
inline constexpr double completed_exp_s05_l03 = 0.18056308859016354784;
inline constexpr double completed_exp_sm1_l05 = 0.18515863970910153462;
inline constexpr double completed_exp_s2_l1 = 0.011492123034747452919;
inline const Complex completed_exp_s05p7i_l05{-0.0080248984243133731521, 0.00077454091905318910935};
inline constexpr double completed_exp_alpha_s025_l1_a2 = 0.0063264467452262236818;
inline constexpr double completed_two_param_s1_a1_r1 = 0.076090173346406161897;
inline const Complex completed_two_param_s06_c{0.021730506072985928981, -0.011905261645839905476};

// bare zeta(2, lambda) - pi^2/6 for the exponential cut-off
inline constexpr double zeta2_deviation_1em2 = -0.45043529742397569436;
inline constexpr double zeta2_deviation_1em3 = -0.16184474785556544136;
inline constexpr double zeta2_deviation_1em4 = -0.053897640038618199781;
inline constexpr double zeta2_deviation_1em6 = -0.0055432380123103992999;

// completed(1-s) - completed(s) at alpha = 1/4, s = 0.3, lambda = 0.8
inline constexpr double quarter_alpha_difference_s03_l08 = -0.391229267483467643;
// ((1-2s)/lambda) K_{1-2s}(2 lambda)
inline constexpr double quarter_alpha_k_term_s03_l08 = 0.097807316870866910749;

inline constexpr double smooth_F_s15_l04 = 0.28693171393887529844;
inline constexpr double completed_smooth_F_s15_l04 = 0.14900469178912760131;

// Omega(0.4, lambda) for the small-lambda law
inline constexpr double omega_s04_1em2 = -0.90868064484894516251;
inline constexpr double omega_s04_1em3 = -2.0250582459715555737;
inline constexpr double omega_s04_1em4 = -4.0855237024124123732;

// zeta in the left half-plane
inline const Complex zeta_m5_5_plus_14i{14.391910483479464957, -143.16301591627470671};
inline const Complex zeta_m3_plus_7i{0.06601679273240738073, 1.682617849356735211};
inline const Complex zeta_m8_5_minus_20i{40963.641370822577291, 17825.985194792677173};
inline constexpr double zeta_m2_5 = 0.0085169287778503305424;

inline constexpr double laplace_h3_a0_r1 = 0.024910556524700641418;

} // namespace fixtures
