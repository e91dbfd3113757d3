// Generated by gen_reference.py (mpmath, 50 significant digits). Do not edit.
#![allow(dead_code, clippy::excessive_precision)]

/// (x, Ci(x), si(x), F(x), G(x))
pub const CI_SI_F_G: &[(f64, f64, f64, f64, f64)] = &[
    (
        0.0010000000000000000000,
        -6.3305398640805937748,
        -1.5697963268504521731,
        1.5634650031433634869,
        -6.3321064948761432511,
    ),
    (
        0.10000000000000000000,
        -1.7278683866572966390,
        -1.4708518656866196691,
        1.2910047283091012115,
        -1.8660764089090893370,
    ),
    (
        0.50000000000000000000,
        -0.17778407880661290134,
        -1.0776889087518299301,
        0.86052676572615856228,
        -0.67269179286854911156,
    ),
    (
        1.0000000000000000000,
        0.33740392290096813466,
        -0.62471325642771360429,
        0.62144962423581335764,
        -0.34337796155642703283,
    ),
    (
        2.0000000000000000000,
        0.42298082877486499570,
        0.034616650007798229345,
        0.39902098859418384689,
        -0.14454530303733242046,
    ),
    (
        3.9000000000000000000,
        -0.12349934920781514267,
        0.20570503365290881949,
        0.23426660213160282794,
        -0.051824793782624181342,
    ),
    (
        4.0000000000000000000,
        -0.14098169788693041164,
        0.18740681215415643887,
        0.22919256802452697974,
        -0.049678155593656750529,
    ),
    (
        4.1000000000000000000,
        -0.15616539182812110957,
        0.16794729969687230655,
        0.22432669529471845854,
        -0.047659824364470538514,
    ),
    (
        5.0000000000000000000,
        -0.19002974965664387862,
        -0.020865081850222481957,
        0.18814277457141822370,
        -0.033896220611621764766,
    ),
    (
        10.000000000000000000,
        -0.045456433004455372635,
        0.087551267423977430100,
        0.098191035010170168733,
        -0.0094885390163548074071,
    ),
    (
        30.000000000000000000,
        -0.033032417282071143779,
        -0.0040397867645455082476,
        0.033260215860585684442,
        -0.0011038611810884164194,
    ),
    (
        100.00000000000000000,
        -0.0051488251426104921444,
        -0.0085708599058403258790,
        0.0099980023928399618249,
        -0.000099940119499589493169,
    ),
    (
        1000.0000000000000000,
        0.00082631551109068228200,
        -0.00056320482612540108336,
        0.00099999800002399928004,
        -9.9999400011999496036e-7,
    ),
];

/// (x, H0(x))
pub const H0: &[(f64, f64)] = &[
    (0.0010000000000000000000, -3.1405926558114761169),
    (0.050000000000000000000, -3.0917096390095516863),
    (0.10000000000000000000, -3.0423146911169292783),
    (1.0000000000000000000, -2.3082055473486674233),
    (10.000000000000000000, -0.56704934933041961226),
    (16.336281798666924000, -0.35884262344863439466),
    (39.000000000000000000, -0.15318264770379141273),
    (41.000000000000000000, -0.14576953565644805135),
    (100.00000000000000000, -0.059960100285979573601),
    (1000.0000000000000000, -0.0059999600010079481644),
];

/// (x, G(x)) for the wall kernel
pub const KERNEL: &[(f64, f64)] = &[
    (0.0010000000000000000000, 0.33333323333333928571),
    (0.010000000000000000000, 0.33332333339285698854),
    (0.30000000000000000000, 0.32438143526685271608),
    (0.49000000000000000000, 0.30966434772499585985),
    (0.50000000000000000000, 0.30870295466413972510),
    (0.51000000000000000000, 0.30772331868659519104),
    (1.0000000000000000000, 0.23913362692838292815),
    (3.1415926535897930000, -0.20264236728467551313),
    (10.000000000000000000, -0.070095499448687290759),
    (100.00000000000000000, -0.0048901799053578316322),
];

/// (re w, im w, re e^w E1(w), im e^w E1(w))
pub const SCALED_E1: &[(f64, f64, f64, f64)] = &[
    (0.50000000000000000000, 0.0, 0.92291063248373046883, 0.0),
    (1.0000000000000000000, 0.0, 0.59634736232319407434, 0.0),
    (2.0000000000000000000, 0.0, 0.36132861688822258470, 0.0),
    (10.000000000000000000, 0.0, 0.091563333939788081876, 0.0),
    (50.000000000000000000, 0.0, 0.019615109930114870365, 0.0),
    (
        1.0000000000000000000,
        -1.0000000000000000000,
        0.41059254346912249477,
        0.26272868271130174057,
    ),
    (
        1.0000000000000000000,
        1.0000000000000000000,
        0.41059254346912249477,
        -0.26272868271130174057,
    ),
    (
        0.29999999999999998890,
        0.20000000000000001110,
        1.0772124580108167996,
        -0.35400812488882860687,
    ),
    (
        -0.50000000000000000000,
        0.50000000000000000000,
        0.11942050735989520865,
        -1.1218206465758091559,
    ),
    (
        -10.000000000000000000,
        1.0000000000000000000,
        -0.11147602721575293721,
        -0.013035448428732498479,
    ),
    (
        -10.000000000000000000,
        0.020000000000000000416,
        -0.11314353870141355382,
        -0.00040553844126476471587,
    ),
    (
        5.0000000000000000000,
        5.0000000000000000000,
        0.097626667160559379043,
        -0.083584834863255354906,
    ),
    (
        -5.0000000000000000000,
        20.000000000000000000,
        -0.0095594789964086989432,
        -0.047972808453436781383,
    ),
    (
        -20.000000000000000000,
        15.000000000000000000,
        -0.032387175629916715962,
        -0.025663407474329194767,
    ),
    (
        -30.000000000000000000,
        5.0000000000000000000,
        -0.033523879233619016256,
        -0.0057949690066980294004,
    ),
    (
        -44.000000000000000000,
        1.0000000000000000000,
        -0.023256430595537001132,
        -0.00054147898589046310090,
    ),
    (
        -44.000000000000000000,
        20.000000000000000000,
        -0.019121969569255495920,
        -0.0089023130557116269177,
    ),
    (
        46.000000000000000000,
        -3.0000000000000000000,
        0.021199300356619034589,
        0.0013542977502540395181,
    ),
    (
        -100.00000000000000000,
        100.00000000000000000,
        -0.0049994847004827536693,
        -0.0050504996845513790274,
    ),
    (
        100.00000000000000000,
        -100.00000000000000000,
        0.0049995147004197549166,
        0.0049504997145511522371,
    ),
    (
        -10.000000000000000000,
        40.000000000000000000,
        -0.0053455288683731807092,
        -0.023783428420398790616,
    ),
    (
        -10.000000000000000000,
        0.59999999999999997780,
        -0.11250296473161483895,
        -0.0079648338970028678784,
    ),
    (
        -30.000000000000000000,
        0.59999999999999997780,
        -0.034512246324425245672,
        -0.00071596349266352885576,
    ),
    (
        -300.00000000000000000,
        1200.0000000000000000,
        -0.00019550102291310029271,
        -0.00078462051336231361493,
    ),
    (
        -10.000000000000000000,
        4.0000000000000000000,
        -0.092955687908645042625,
        -0.042527337189119891018,
    ),
    (
        0.0,
        4.0000000000000000000,
        0.049678155593656750529,
        -0.22919256802452697974,
    ),
    (
        0.0,
        0.50000000000000000000,
        0.67269179286854911156,
        -0.86052676572615856228,
    ),
    (
        0.0,
        40.000000000000000000,
        0.00062268481026555850914,
        -0.024968980126268469874,
    ),
    (
        -0.90000000000000002220,
        0.10000000000000000555,
        -0.54064444454675705951,
        -1.2264964310884166070,
    ),
    (
        -1.1999999999999999556,
        0.29999999999999998890,
        -0.48998320903720279305,
        -0.88312142181999516573,
    ),
    (
        -8.0000000000000000000,
        0.10000000000000000555,
        -0.14759026247682765694,
        -0.0033211885119484204532,
    ),
    (
        -39.000000000000000000,
        0.50000000000000000000,
        -0.026330527721424367904,
        -0.00034697873932592736080,
    ),
    (
        -46.000000000000000000,
        0.50000000000000000000,
        -0.022230986824778651951,
        -0.00024727353930587050397,
    ),
    (
        -3.0000000000000000000,
        8.0000000000000000000,
        -0.028593159685726309232,
        -0.11613517966257540614,
    ),
    (
        2.0000000000000000000,
        30.000000000000000000,
        0.0032875632779481672399,
        -0.032969648190208030342,
    ),
    (
        -2.0000000000000000000,
        44.000000000000000000,
        -0.00051599426385856709905,
        -0.022703842306950740381,
    ),
    (
        -2.0000000000000000000,
        46.000000000000000000,
        -0.00047214229707011069303,
        -0.021718621643194472150,
    ),
    (
        -1.0000000000000000000,
        0.0010000000000000000208,
        -0.69601980749006712732,
        -1.1554239473610006191,
    ),
];

/// (m, re z, im z, re psi^(m)(z), im psi^(m)(z))
pub const POLYGAMMA: &[(u32, f64, f64, f64, f64)] = &[
    (
        0,
        1.0000000000000000000,
        1.0000000000000000000,
        0.094650320622476977272,
        1.0766740474685811741,
    ),
    (
        0,
        0.50000000000000000000,
        2.0000000000000000000,
        0.68218669934942426814,
        1.5707853710239763245,
    ),
    (
        0,
        1.0000000000000000000,
        -20.000000000000000000,
        2.9959406590328251338,
        -1.5457963267948966192,
    ),
    (1, 1.0000000000000000000, 0.0, 1.6449340668482264365, 0.0),
    (
        1,
        0.50000000000000000000,
        2.0000000000000000000,
        0.000068836898817388275605,
        -0.51162115818809963527,
    ),
    (
        2,
        3.0000000000000000000,
        2.0000000000000000000,
        -0.023475645946350473452,
        0.094067475958697004531,
    ),
    (
        3,
        0.0,
        -20.000000000000000000,
        0.000018750000000000000000,
        -0.00024937421613106139789,
    ),
    (
        4,
        0.0,
        -20.000000000000000000,
        -0.000037343475382487940728,
        -3.7500000000000000000e-6,
    ),
    (
        5,
        1.0000000000000000000,
        -2.0000000000000000000,
        0.83020184290818215369,
        0.095325825845969555521,
    ),
    (
        10,
        1.0000000000000000000,
        -2.0000000000000000000,
        -455.81357828770545521,
        168.42893371616626153,
    ),
    (
        20,
        1.0000000000000000000,
        -0.50000000000000000000,
        222384150139243430.94,
        71683379196797817.518,
    ),
    (
        40,
        2.0000000000000000000,
        -10.000000000000000000,
        -2793537.0060322060894,
        44285.745099487905534,
    ),
    (
        2,
        1.0000000000000000000,
        -2.0000000000000000000,
        0.21502435405364952655,
        -0.12456747595869700453,
    ),
    (
        7,
        1.0000000000000000000,
        -0.10000000000000000555,
        3402.3718528716180123,
        3473.2469643571725770,
    ),
    (
        1,
        25.000000000000000000,
        -0.50000000000000000000,
        0.040793684740287697064,
        0.00083229335084659635855,
    ),
    (
        60,
        1.0000000000000000000,
        -1.0000000000000000000,
        3.8747615705942597687e+72,
        3.8747615705902968764e+72,
    ),
    (
        3,
        -2.5000000000000000000,
        0.50000000000000000000,
        -47.202329515387349823,
        -0.031259617249322173449,
    ),
];

/// (x, Q(x))
pub const Q_SERIES: &[(f64, f64)] = &[
    (10.000000000000000000, 0.000053445384303225824434),
    (2.0000000000000000000, 0.025546710893734850860),
    (1.5000000000000000000, 0.067255053412768847271),
    (1.1000000000000000000, 0.17264468480201122514),
];

/// (eta, P(eta))
pub const BOSE_P: &[(f64, f64)] = &[
    (0.010000000000000000000, 156.57963267948966192),
    (0.10000000000000000000, 15.207963267948966192),
    (1.0000000000000000000, 1.0766740474685811741),
    (10.000000000000000000, 0.016342115746508686043),
    (1000.0000000000000000, 1.6449329845260100674e-6),
];

/// (theta, z / lambda_T, V_T in units of hbar c alpha0 / lambda_T^4)
pub const THERMAL: &[(f64, f64, f64)] = &[
    (
        100.00000000000000000,
        0.0010000000000000000000,
        1.3806269837379493263,
    ),
    (
        100.00000000000000000,
        0.010000000000000000000,
        1.3775395376230330183,
    ),
    (
        100.00000000000000000,
        0.050000000000000000000,
        1.3045104669815973900,
    ),
    (
        100.00000000000000000,
        0.50000000000000000000,
        -0.29374364179788450620,
    ),
    (
        100.00000000000000000,
        1.0000000000000000000,
        -0.13081437222498254536,
    ),
    (
        100.00000000000000000,
        2.0000000000000000000,
        -0.023789923102023398508,
    ),
    (
        30.000000000000000000,
        0.10000000000000000000,
        1.1128196511501626991,
    ),
    (
        30.000000000000000000,
        0.70000000000000000000,
        -0.24381070568760132792,
    ),
    (
        300.00000000000000000,
        0.30000000000000000000,
        0.025177556788758423965,
    ),
    (
        300.00000000000000000,
        2.0000000000000000000,
        -0.023789646840605102598,
    ),
    (
        10.000000000000000000,
        0.40000000000000000000,
        -0.28432525856878845566,
    ),
    (
        100.00000000000000000,
        10.000000000000000000,
        -0.00023806339916235040340,
    ),
];
