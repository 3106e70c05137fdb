// Generated by tools/gen_rs_coeffs.py (mpmath, 80 digits). Do not edit by hand.
// Chebyshev coefficients (argument 2p-1) of the Riemann-Siegel
// correction terms C_0..C_4 on p in [0, 1].
(
    // C_0
    &[
        0.6426672862397683775492,
        8.202351966916786930842e-27,
        0.2719729999978550670846,
        -1.917110475047225707507e-27,
        0.01073860581934028415440,
        6.001647755599258104010e-28,
        -0.001374381529633661443846,
        -1.768538067141145256574e-28,
        -0.0001246822188032067722768,
        4.399136016323990425634e-29,
        -5.764599706783048036533e-7,
        -8.001835248297176447156e-30,
        2.728067429580452225639e-7,
        6.387333217472690092745e-31,
        8.077953059500470624065e-9,
        1.100235953904472935964e-31,
        -2.088460806886965447395e-10,
        -3.503948409583481698590e-32,
        -1.311556185473952705143e-11,
        2.040723205098744673468e-33,
        -1.420798722808718516528e-14,
        3.480474053050502339150e-34,
        1.027170135793116157821e-14,
        -3.230292565216390860834e-35,
        1.397459881951837443439e-16,
        -2.070057898304948295281e-36,
        -4.484118733952288325653e-18,
        1.638396749542434328283e-37,
        -1.183059957384528900067e-19,
    ],
    // C_1
    &[
        2.973411568174502496187e-25,
        0.01069791392100300077063,
        2.285036456076491909189e-25,
        0.01717065124337788382067,
        1.582676258680634934720e-26,
        0.002793211149788471090231,
        -7.637820614375275613716e-27,
        -0.00003637565371927504239749,
        1.604045582766283074124e-28,
        -0.00002710895523115088701231,
        6.009142699852130083923e-28,
        -0.000001048374986675277337614,
        -2.678255507135496087506e-28,
        5.886467166527571845037e-8,
        5.700031934703550266929e-29,
        4.322967268502779052731e-9,
        -4.546777143060456263470e-30,
        -1.136959158827371165705e-11,
        -5.697238358666198458082e-31,
        -6.699833910355327486067e-12,
        1.345020640041016010340e-31,
        -1.007999765280847499679e-13,
        -1.162640017441989126442e-33,
        5.152488009222116380552e-15,
        -1.096310339955333955597e-33,
        1.521695447183697151617e-16,
        2.188536498082470237122e-35,
        -1.861946483368710516118e-18,
        4.514300887406993449303e-36,
        -1.130184618424626738346e-19,
    ],
    // C_2
    &[
        0.003146115853988912259813,
        2.102679916287757526189e-20,
        -0.002308783884530750123100,
        -4.915465314357943448456e-21,
        0.00005769820766689844020024,
        1.538645720125858706549e-21,
        0.0003523886202366590066396,
        -4.533898947749243141272e-22,
        0.00002524666745868443445147,
        1.127802563662423394119e-22,
        -0.000003442821197193135883048,
        -2.051511719469653879439e-23,
        -3.535074556622458873450e-7,
        1.637930879663504612352e-24,
        3.730830183792625336903e-9,
        2.819714179039544038298e-25,
        1.277695186411663534373e-9,
        -8.982182298404034779716e-26,
        2.187461620414705828667e-11,
        5.232639926778036423783e-27,
        -1.914141096461037170129e-12,
        8.920491405289659390304e-28,
        -6.562883102168522495705e-14,
        -8.281132346287206288751e-29,
        1.258600918241172591185e-15,
        -5.305080841471377386643e-30,
        8.140076623881459998509e-17,
    ],
    // C_3
    &[
        1.386692648484497895172e-19,
        0.00007123256221202731192273,
        1.066166326958346277896e-19,
        0.0002323430529816507547442,
        1.222211033885287968780e-20,
        -0.0001292991204547255836666,
        -5.312270421201236587610e-21,
        0.00001807449641367168558089,
        4.537991606746219947485e-22,
        0.000006526185187220378247133,
        2.266586572598312898621e-22,
        -1.169636537852087200715e-7,
        -1.249749172380111980261e-22,
        -7.349476126518214832848e-8,
        2.885676455452466896461e-23,
        -1.775091007790860264358e-9,
        -2.673663897079307594624e-24,
        2.555552961327012965534e-10,
        -2.180005154640727959487e-25,
        1.137663660053445701247e-11,
        6.637557921198101571264e-26,
        -3.349863898535121205965e-13,
        -1.502194485165353689473e-27,
        -2.553737935411891556956e-14,
        -4.998890089531566963248e-28,
        6.766500771609953761406e-17,
        1.713390500628448026847e-29,
        2.976888471969163417166e-17,
        1.973642310656887090563e-30,
        2.995220808639609701793e-19,
    ],
    // C_4
    &[
        0.0001676574524669298356262,
        3.630323654255475239254e-15,
        -0.0002272876894341970713798,
        -8.488733377250428998882e-16,
        0.00006477387188445243767367,
        2.656751091689389137396e-16,
        -0.000008492200500123524190593,
        -7.828317966981858159632e-17,
        -0.000002616140724522121109363,
        1.947330454026080178796e-17,
        8.336764968732703427020e-7,
        -3.542438166643926173499e-18,
        6.324704037548327510655e-8,
        2.828980778440527915251e-19,
        -1.005994940300965713790e-8,
        4.866752018604374598597e-20,
        -7.822677204121595582622e-10,
        -1.550728300867524534346e-20,
        3.167658285354864003096e-11,
        9.036353434355748445107e-22,
        3.500694470185902566271e-12,
        1.539803238736530897532e-22,
        -1.431481451080451637254e-14,
        -1.429747644956473201576e-23,
        -7.269402707784637097594e-15,
        -9.156641179978593794988e-25,
        -8.780556595473160041713e-17,
        7.250526129164767068410e-26,
        8.150254474432987823764e-18,
        3.721459053698960440448e-27,
        1.920839706063615366187e-19,
    ],
)
