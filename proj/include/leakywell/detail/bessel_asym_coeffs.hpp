// Generated by scripts/gen_reference_values.py -- do not edit by hand.
//
// Chebyshev tables (first kind, argument u in [-1,1]) for the Hankel
// asymptotic amplitude/phase functions of J0 and J1 on x in [9,18]:
//   J_nu(x) = sqrt(2/(pi x)) [ P_nu(x) cos(chi) - Q_nu(x) sin(chi) ],
//   chi = x - (2 nu + 1) pi/4,   u = (2 (9/x)^2 - 5/4) / (3/4).
// The leading coefficient is already halved (Clenshaw-ready).
// Fitted with mpmath at 30 significant digits; max fit error < 1e-17.
#pragma once

namespace leakywell::detail {

inline constexpr double j0_asym_p[11] = {
    0.9994649781033995,
    -0.0003179693512933281,
    1.0797601670565249e-06,
    -1.074047298893632e-08,
    1.9981778367851817e-10,
    -5.661544103455593e-12,
    2.1749437069995514e-13,
    -1.0528645747580598e-14,
    6.113263078024675e-16,
    -4.1114106468166865e-17,
    3.1217940385584877e-18,
};

inline constexpr double j0_asym_q[29] = {
    -0.01065650689008777,
    -0.0033808537620357397,
    0.000284253215043271,
    -4.671516565607948e-05,
    9.671166218004166e-06,
    -2.248160409633333e-06,
    5.606061629222093e-07,
    -1.4655093501958227e-07,
    3.9633936204046745e-08,
    -1.0996899121465072e-08,
    3.1129042795447884e-09,
    -8.954508546826006e-10,
    2.6100397692548327e-10,
    -7.692008157768795e-11,
    2.2881913132224697e-11,
    -6.861700659577599e-12,
    2.072040859960915e-12,
    -6.29531662375058e-13,
    1.9230058057829429e-13,
    -5.902410749861169e-14,
    1.8194767453180044e-14,
    -5.630495669369599e-15,
    1.7485208760933952e-15,
    -5.447303876131704e-16,
    1.7019977902142027e-16,
    -5.332059200745527e-17,
    1.6744226396393623e-17,
    -5.265836274926203e-18,
    1.6459588863461315e-18,
};

inline constexpr double j1_asym_p[11] = {
    1.0008945288356685,
    0.0005327801550051679,
    -1.4001006802949401e-06,
    1.2834641567151439e-08,
    -2.2945596046615776e-10,
    6.350653213305175e-12,
    -2.402357356738812e-13,
    1.1503370788548175e-14,
    -6.625090817715439e-16,
    4.427581095830654e-17,
    -3.344905582540129e-18,
};

inline constexpr double j1_asym_q[30] = {
    0.03205179226236206,
    0.01021018767537377,
    -0.0008478844123974423,
    0.00013982598992708952,
    -2.8975794865753326e-05,
    6.738405079081137e-06,
    -1.680659563873415e-06,
    4.394075662546058e-07,
    -1.1884611237053529e-07,
    3.29773807307275e-08,
    -9.335401738065534e-09,
    2.6855034771747345e-09,
    -7.827886916556018e-10,
    2.3070032942423593e-10,
    -6.86293779627381e-11,
    2.0580567709164082e-11,
    -6.214849918169936e-12,
    1.888233804694761e-12,
    -5.767982356110815e-13,
    1.770424033712443e-13,
    -5.457558728808412e-14,
    1.6888930835178045e-14,
    -5.2448082056379704e-15,
    1.6339672427341603e-15,
    -5.105325323164645e-16,
    1.599417513649649e-16,
    -5.0226651166047756e-17,
    1.579568818092232e-17,
    -4.937328711704779e-18,
    1.4180609423335338e-18,
};

// First twenty roots of J0, to full double precision.
inline constexpr double j0_zero_table[20] = {
    2.404825557695773,
    5.520078110286311,
    8.653727912911013,
    11.791534439014281,
    14.930917708487787,
    18.071063967910924,
    21.21163662987926,
    24.352471530749302,
    27.493479132040253,
    30.634606468431976,
    33.77582021357357,
    36.917098353664045,
    40.05842576462824,
    43.19979171317673,
    46.341188371661815,
    49.482609897397815,
    52.624051841115,
    55.76551075501998,
    58.90698392608094,
    62.048469190227166,
};

}  // namespace leakywell::detail
