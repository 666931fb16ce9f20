//! Published reference values used by the table-reproduction command and the
//! acceptance tests: complete integrals for a catalog of (p, φ) pairs, the
//! exact Neumann expansion coefficients for n = 3, 4, 5, and the sine-power
//! limits.

/// (p, φ, Re I(∞), Im I(∞)) for the full catalog of complete integrals.
pub const COMPLETE_INTEGRAL_ROWS: [(&str, &str, f64, f64); 43] = [
    ("1", "x+x^3", 0.41494101283606350, 0.53411593027204143),
    ("x", "x+x^3", -0.02016219157077424, 0.30316529215034456),
    ("1", "x-x^3", 1.11098231192364267, -0.03858690498389667),
    ("x", "x-x^3", 0.59330541726382226, -0.22202080248217837),
    ("1", "x^2+x^3", 0.54028350983057729, 0.40844024533897794),
    ("x", "x^2+x^3", 0.07962821700232091, 0.26244025603540361),
    ("1", "x^2-x^3", 1.25860675774543236, -0.27494486339726367),
    ("x", "x^2-x^3", 0.73476055145142588, -0.44097066691842955),
    ("1", "-x^2+x^3", 1.25860675774543236, 0.27494486339726367),
    ("x", "-x^2+x^3", 0.73476055145142588, 0.44097066691842955),
    ("1", "-x^2-x^3", 0.54028350983057729, -0.40844024533897794),
    ("x", "-x^2-x^3", 0.07962821700232091, -0.26244025603540361),
    ("1", "x+x^4", 0.50249679573307246, 0.52601826686302930),
    ("x", "x+x^4", 0.05824661765885730, 0.32482243282841976),
    ("x^2", "x+x^4", -0.07182498024997954, 0.20623764810943091),
    ("1", "x-x^4", 1.04843033186615915, 0.09812564203676180),
    ("x", "x-x^4", 0.55603788569756914, -0.06487860797927502),
    ("x^2", "x-x^4", 0.37604412360259629, -0.15808966880512279),
    ("1", "x^2+x^4", 0.60419228699943584, 0.38964387635793124),
    ("x^2", "x^2+x^4", -0.00678784821525451, 0.18281575355157232),
    ("1", "x+x^5", 0.56055180704649184, 0.51785573267722635),
    ("x", "x+x^5", 0.11195277049251853, 0.33139696436598476),
    ("x^2", "x+x^5", -0.02225695591532138, 0.22710191687546598),
    ("x^3", "x+x^5", -0.08199028168861113, 0.15444851391776769),
    ("1", "2x+x^3", 0.18186049037842599, 0.46158113697480635),
    ("x", "2x+x^3", -0.10324653677125750, 0.16619667306199227),
    ("1", "x^3+x^4", 0.66346454706590291, 0.32615196348829038),
    ("x", "x^3+x^4", 0.18566011304028281, 0.23801625874900127),
    ("x^2", "x^3+x^4", 0.03767486947451176, 0.17284523624119006),
    ("1", "x^2+x^5", 0.64955004591503774, 0.37714240719158655),
    ("x", "x^2+x^5", 0.17628609937611991, 0.26821665359731032),
    ("x^2", "x^2+x^5", 0.02993102573558424, 0.19494632498226022),
    ("x^3", "x^2+x^5", -0.03639133933981598, 0.13909435860476519),
    ("1", "x+x^6", 0.60171369622318495, 0.51091411953631571),
    ("x", "x+x^6", 0.15052717690553594, 0.33274431831757486),
    ("x^2", "x+x^6", 0.01428216038702631, 0.23635267804532455),
    ("x^3", "x+x^6", -0.04777162399115301, 0.17190364078803073),
    ("x^4", "x+x^6", -0.08125607922853098, 0.12268865661476232),
    ("1", "x+x^2+x^3", 0.31281238144992430, 0.42522475067652506),
    ("x", "x+x^2+x^3", -0.03063713609272196, 0.18754944674648485),
    ("1", "2x+x^4", 0.22758105958079916, 0.50285846929935148),
    ("x", "2x+x^4", -0.08301824875147187, 0.21632137918922486),
    ("x^2", "2x+x^4", -0.12503111830114265, 0.07854722450324651),
];

/// The conjugate pairs inside the catalog: (row, row with negated phase).
pub const CONJUGATE_ROW_PAIRS: [(usize, usize); 4] = [(4, 10), (5, 11), (6, 8), (7, 9)];

/// Exact ξ_{3,s}, s = 0..10 as (numerator, denominator).
pub const NEUMANN_XI_3: [(u64, u64); 11] = [
    (4, 27),
    (136, 729),
    (1120, 6561),
    (31912, 177147),
    (2491372, 14348907),
    (23052640, 129140163),
    (608995904, 3486784401),
    (16739336224, 94143178827),
    (148413541000, 847288609443),
    (12177019210000, 68630377364883),
    (325122763152640, 1853020188851841),
];

/// Exact ξ_{4,s}, s = 0..10.
pub const NEUMANN_XI_4: [(u64, u64); 11] = [
    (1, 8),
    (11, 64),
    (159, 1024),
    (1347, 8192),
    (41531, 262144),
    (341309, 2097152),
    (5350155, 33554432),
    (43506995, 268435456),
    (2747379155, 17179869184),
    (22228087705, 137438953472),
    (352241109985, 2199023255552),
];

/// Exact ξ_{5,s}, s = 0..10.
pub const NEUMANN_XI_5: [(u64, u64); 11] = [
    (2, 25),
    (72, 625),
    (8118, 78125),
    (214544, 1953125),
    (5179592, 48828125),
    (663616816, 6103515625),
    (16287458776, 152587890625),
    (2065603429328, 19073486328125),
    (51039744111764, 476837158203125),
    (1288445436120032, 11920928955078125),
    (159738815063405788, 1490116119384765625),
];

pub fn neumann_xi_reference(n: u32) -> Option<&'static [(u64, u64)]> {
    match n {
        3 => Some(&NEUMANN_XI_3),
        4 => Some(&NEUMANN_XI_4),
        5 => Some(&NEUMANN_XI_5),
        _ => None,
    }
}

/// Expansion prefactors d₃, d₄, d₅.
pub const NEUMANN_D: [(u32, f64); 3] = [
    (3, 5.062876576879227),
    (4, 4.31160109908185588987751),
    (5, 5.27349462002150700879064),
];

/// Im ∫₀^∞ sin(x^n) dx for n = 2, 3, 4.
pub const SIN_POWER_COMPLETE: [(u32, f64); 3] = [
    (2, 0.626657068657750125603941),
    (3, 0.446489755784624605609282),
    (4, 0.346865211023809496042035),
];
