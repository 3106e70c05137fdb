// Generated by tools/gen_oracle.py (mpmath, 50 digits). Do not edit by hand.
// BERN2K_OVER_FACT[k] = B_{2k} / (2k)!
[
    1.000000000000000000000, // k = 0
    0.08333333333333333333333, // k = 1
    -0.001388888888888888888889, // k = 2
    0.00003306878306878306878307, // k = 3
    -8.267195767195767195767e-7, // k = 4
    2.087675698786809897921e-8, // k = 5
    -5.284190138687493184848e-10, // k = 6
    1.338253653068467883283e-11, // k = 7
    -3.389680296322582866830e-13, // k = 8
    8.586062056277844564136e-15, // k = 9
    -2.174868698558061873042e-16, // k = 10
    5.509002828360229515203e-18, // k = 11
    -1.395446468581252334071e-19, // k = 12
    3.534707039629467471693e-21, // k = 13
    -8.953517427037546850403e-23, // k = 14
    2.267952452337683060311e-24, // k = 15
    -5.744790668872202445264e-26, // k = 16
    1.455172475614864901866e-27, // k = 17
    -3.685994940665310178182e-29, // k = 18
    9.336734257095044672033e-31, // k = 19
    -2.365022415700629934560e-32, // k = 20
    5.990671762482134304660e-34, // k = 21
    -1.517454884468290261711e-35, // k = 22
    3.843758125454188232229e-37, // k = 23
    -9.736353072646691035268e-39, // k = 24
    2.466247044200680957106e-40, // k = 25
    -6.247076741820743693149e-42, // k = 26
    1.582403024464491429751e-43, // k = 27
    -4.008273685948935968530e-45, // k = 28
    1.015307585556955631163e-46, // k = 29
    -2.571804158241871749925e-48, // k = 30
]
