// Generated by tools/gen_oracle.py (mpmath, 50 digits). Do not edit by hand.
//! Frozen high-precision reference values for the test suite.
#![allow(dead_code, clippy::excessive_precision)]

pub const EULER: f64 = 0.5772156649015328606065;
pub const ONE_MINUS_EULER: f64 = 0.4227843350984671393935;
pub const LN_2PI: f64 = 1.837877066409345483561;
pub const ZETA_HALF: f64 = -1.460354508809586812889;
pub const ZETA_2: f64 = 1.644934066848226436472;
pub const ZETA_3: f64 = 1.202056903159594285400;
pub const ZETA_4: f64 = 1.082323233711138191516;
pub const ZETA_8: f64 = 1.004077356197944339379;
pub const ZETA_4_POW4_OVER_ZETA_8: f64 = 1.366660845936090906377;
pub const ZETA_4_OVER_ZETA_8: f64 = 1.077928136741855194861;

pub const THETA_MIN_T: f64 = 6.289835988836902779665;
pub const THETA_INT_0_TO_10: f64 = -29.56779721063609548368;
pub const THETA_INT_0_TO_30: f64 = 2.730484589444281040103;
pub const FIRST_ZERO: f64 = 14.13472514173469379046;
pub const N_100: usize = 29;
pub const N_1000: usize = 649;
pub const INT_Z2_0_TO_FIRST_ZERO: f64 = 15.67809645478178523301;
pub const J_1000: f64 = 5212.507763337782461189;

/// (sigma, t, Re zeta, Im zeta)
pub const ZETA_POINTS: [(f64, f64, f64, f64); 27] = [
    (1.341245200471626208838, 4.866371568256067092761, 0.7837870319595684200101, 0.1344336392588819592605),
    (0.5611055855796287517023, 5.415336471009646324148, 0.7591912177608431122315, 0.2730135602660382163058),
    (2.006557092679944531710, 96.97992883289043675177, 1.014267050408323818052, 0.2928422297736629144956),
    (0.5517310088370076526232, 10.94016312358351328271, 1.416818992124360017622, -0.4536704768582102667907),
    (2.583050917560179904342, 79.07337400669995020053, 0.9608018496048127002480, 0.1877099638621111387907),
    (1.298324966579244232889, 52.96926244966086017030, 0.9037657847228663173043, 0.1692948679344941099277),
    (2.599758300465524918366, 49.36293899911928662050, 0.8237406473102450013679, -0.001556312823252432200898),
    (1.257620824924235991560, 92.84057640867948180130, 0.8529351243155057457868, -0.3501142119776188727912),
    (1.145225336247767788933, 28.75953128154664639737, 1.346527454228525568270, -0.8039467831854933714122),
    (1.860346377514505933348, 52.48467177468296540610, 1.031847614124712961492, 0.1119875333575409423430),
    (2.446816846619536356400, 96.22826486275761226352, 0.8753558418899238617124, 0.1710679459359290429954),
    (1.111138634775466815796, 26.84938677867385692366, 1.575174821862781544220, 0.6487017837145015556641),
    (2.457408616777773335826, 87.56809141408265872997, 0.8647103037921984067653, 0.05708586192621743894722),
    (1.388080758511683665546, 72.90684772382167011529, 1.395430831807831428173, 0.3352559601323163373409),
    (2.965555163867977128689, 4.399202309379235842357, 0.8937273484537274153611, 0.01832685399983077404476),
    (0.8626470975627246184914, 97.27668974620475239590, 1.652562038231666423844, 0.8838361551573720888532),
    (1.544847921578242022633, 58.42991279557221417917, 0.8302190911276495576088, -0.2635883585245403262141),
    (0.7714112307043745619950, 67.11303098474901673853, 0.3597320502558496180949, 0.04493519983977565379277),
    (2.848650998200644934855, 29.83931897923251952420, 0.9448933483397298596133, -0.1613921971466544462293),
    (1.279775222324512240490, 47.43710651388312271592, 0.6731519375659890345748, -0.6314223247174804626001),
    (2.000000000000000000000, 0.0, 1.644934066848226436472, 0.0),
    (0.5000000000000000000000, 0.0, -1.460354508809586812889, 0.0),
    (3.000000000000000000000, 0.0, 1.202056903159594285400, 0.0),
    (4.000000000000000000000, 0.0, 1.082323233711138191516, 0.0),
    (1.000000000000000000000, 37.00000000000000000000, 0.7948685649154198447928, -0.6115288219996766719604),
    (0.5500000000000000000000, 99.00000000000000000000, 0.2640582342118740866267, 0.5074677526596489693754),
    (0.5000000000000000000000, 1000.000000000000000000, 0.3563343671943960550744, 0.9319978312329936651151),
];

/// (t, theta(t))
pub const THETA_POINTS: [(f64, f64); 16] = [
    (0.001000000000000000000000, -0.002686089015291319588569),
    (0.1000000000000000000000, -0.2659770913495793797241),
    (0.5000000000000000000000, -1.125052715405562861576),
    (1.000000000000000000000, -1.767547952812290388302),
    (2.000000000000000000000, -2.525910918816132690013),
    (5.000000000000000000000, -3.459620375363462533185),
    (6.289836000000000000000, -3.530972829016607432741),
    (10.00000000000000000000, -3.067074396289895291702),
    (14.13472514170000000000, -1.728670246689898336419),
    (30.00000000000000000000, 8.057800136563990199417),
    (50.00000000000000000000, 26.46136607016140964745),
    (100.0000000000000000000, 87.97216523178721962548),
    (500.0000000000000000000, 843.7901005881892295154),
    (1000.000000000000000000, 2034.546428038031608703),
    (10000.00000000000000000, 31861.92383083582087295),
    (100000.0000000000000000, 433752.0272291707814356),
];

/// (t, Z(t))
pub const Z_POINTS: [(f64, f64); 50] = [
    (31.00000000000000000000, -0.6256302747355214770911),
    (35.00000000000000000000, 2.826478611327422480961),
    (40.00000000000000000000, -1.308882393456599159016),
    (47.00000000000000000000, -1.994562251405086962486),
    (55.00000000000000000000, 2.803277512984192505742),
    (65.00000000000000000000, -0.2679092246950877474315),
    (80.00000000000000000000, 1.969872444476292878018),
    (100.0000000000000000000, 2.692697056664463474995),
    (130.0000000000000000000, 0.7901718570195730180440),
    (170.0000000000000000000, -0.1942411365581064642890),
    (220.0000000000000000000, -1.266006635369146080671),
    (280.0000000000000000000, -4.130023733924396482747),
    (350.0000000000000000000, 0.7956553557024887519441),
    (450.0000000000000000000, 0.2918991658692226904842),
    (600.0000000000000000000, 2.671580075819185593032),
    (800.0000000000000000000, 1.945417521186915595000),
    (1000.000000000000000000, 0.9977946375215866139860),
    (1400.000000000000000000, 0.2933951879672703144202),
    (2000.000000000000000000, 0.7907974183098160441793),
    (3000.000000000000000000, 3.559685463016109296317),
    (5000.000000000000000000, -0.8042572363529398495813),
    (8000.000000000000000000, -0.4110316718150523319176),
    (12000.00000000000000000, 0.1163148457016137714506),
    (20000.00000000000000000, 1.344701334789710542339),
    (30000.00000000000000000, 0.9539786847862013296405),
    (93.13697187376432395922, -1.352724195035300145877),
    (2455.474793412743565568, -0.05855509377709476317132),
    (3174.697343062055097107, -0.9316908224129911779683),
    (7061.930559778727911180, -7.134490455937867295459),
    (6006.918383171294408385, -0.5775012681092812426594),
    (4841.718548803954945470, -1.685820669709178666738),
    (6647.552666219321508834, 0.7894343077963717412010),
    (9027.076847398970130598, 0.9046142959859306215478),
    (291.1899932986212320429, -3.403595412665861304749),
    (5023.512922265012093703, 2.163308180428307791797),
    (2720.853458807195238478, 2.523682265035416772703),
    (3336.443240749754750141, 0.8066676223749127985164),
    (8919.352680631933253608, 4.179707043116353609079),
    (1768.210710349101645988, -1.019815135509174628730),
    (1597.974075577211579002, 0.5776954868668899382413),
    (1015.243054015308302951, 3.041953530434712534601),
    (9189.354499176326498855, -1.362782539402175957911),
    (8900.422332301923233899, 1.893980067611133844544),
    (3469.347584807618204650, 0.5700082747174597147950),
    (7996.581368643231144233, -0.3898159797334112046065),
    (7354.035458838358863431, -0.6350955945718833183979),
    (2389.161481272820765298, -1.696242237635289994711),
    (8450.567891593604144873, 1.248148319150765254197),
    (1085.764061866884958363, 0.7381431811420067827428),
    (8342.450395746389403939, -0.4112902889051398897447),
];

pub const ZEROS_FIRST_50: [f64; 50] = [
    14.13472514173469379046,
    21.02203963877155499263,
    25.01085758014568876321,
    30.42487612585951321031,
    32.93506158773918969066,
    37.58617815882567125722,
    40.91871901214749518740,
    43.32707328091499951950,
    48.00515088116715972794,
    49.77383247767230218192,
    52.97032147771446064415,
    56.44624769706339480437,
    59.34704400260235307965,
    60.83177852460980984426,
    65.11254404808160666088,
    67.07981052949417371448,
    69.54640171117397925293,
    72.06715767448190758252,
    75.70469069908393316833,
    77.14484006887480537268,
    79.33737502024936792276,
    82.91038085408603018316,
    84.73549298051705010574,
    87.42527461312522940653,
    88.80911120763446542368,
    92.49189927055848429626,
    94.65134404051988696660,
    95.87063422824530975874,
    98.83119421819369223332,
    101.3178510057313912288,
    103.7255380404783394164,
    105.4466230523260944937,
    107.1686111842764075151,
    111.0295355431696745247,
    111.8746591769926370856,
    114.3202209154527127659,
    116.2266803208575543822,
    118.7907828659762173230,
    121.3701250024206459189,
    122.9468292935525882008,
    124.2568185543457671847,
    127.5166838795964951243,
    129.5787041999560509858,
    131.0876885309326567236,
    133.4977372029975864501,
    134.7565097533738713313,
    138.1160420545334432002,
    139.7362089521213889505,
    141.1237074040211237619,
    143.1118458076206327394,
];

/// (t, S1(t))
pub const S1_POINTS: [(f64, f64); 6] = [
    (10.00000000000000000000, -0.5882778351770211538694),
    (50.00000000000000000000, -1.198763566018617487808),
    (100.0000000000000000000, -0.5240193881656083859358),
    (333.0000000000000000000, -0.7692323722586218973797),
    (500.0000000000000000000, -0.7192832870920517531178),
    (1000.000000000000000000, -0.8771356559381411539183),
];
