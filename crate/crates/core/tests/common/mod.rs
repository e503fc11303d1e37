//! Published values used as golden fixtures, plus small helpers to turn them
//! into library objects. Everything here is transcribed, never computed.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use qmextremal::{QSeries, Rational, RationalPoly};

pub fn q(s: &str) -> Rational {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => Rational::new(n.trim().parse().unwrap(), d.trim().parse().unwrap()),
        None => Rational::from_integer(s.parse().unwrap()),
    }
}

/// Polynomial from coefficients listed from the top degree down.
pub fn poly_top(cs: &[&str]) -> RationalPoly {
    let mut v: Vec<Rational> = cs.iter().map(|c| q(c)).collect();
    v.reverse();
    RationalPoly::rational(v)
}

/// Series `q^start (c_0 + c_1 q + ...)` truncated after the listed terms.
pub fn series_at(start: usize, cs: &[&str]) -> QSeries {
    let mut v = vec![Rational::zero(); start];
    v.extend(cs.iter().map(|c| q(c)));
    QSeries::from_rationals(v)
}

// ---------------------------------------------------------------------------
// Fourier coefficients a_w(1..5) of G_w^(1) = q^[w/6] (1 + Σ a_w(n) q^n).

pub const INTEGRAL_TABLE: [(i64, [&str; 5]); 22] = [
    (2, ["-24", "-72", "-96", "-168", "-144"]),
    (6, ["18", "84", "292", "630", "1512"]),
    (8, ["66", "732", "4228", "15630", "48312"]),
    (10, ["258", "6564", "66052", "390630", "1693512"]),
    (12, ["56", "1002", "9296", "57708", "269040"]),
    (14, ["128", "4050", "58880", "525300", "3338496"]),
    (16, ["296", "16602", "377456", "4846908", "41943120"]),
    (18, ["99", "3510", "64944", "764874", "6478758"]),
    (20, ["183", "10134", "269832", "4326546", "47862918"]),
    (22, ["339", "29430", "1127904", "24615834", "355679478"]),
    (24, ["144", "7944", "235840", "4451130", "59405952"]),
    (28, ["384", "44664", "2460160", "79196970", "1693028352"]),
    (30, ["190", "14460", "608570", "16463120", "314562708"]),
    (32, ["286", "29988", "1652834", "56608952", "1335336084"]),
    (34, ["430", "62220", "4496090", "195047840", "5680752948"]),
    (38, ["336", "43587", "3065648", "136437750", "4219436160"]),
    (54, ["378", "62532", "6109740", "401161950", "19083824856"]),
    (58, ["618", "155412", "21940620", "2005126350", "128986599096"]),
    (68, ["581", "147042", "21956168", "2203554570", "160242315903"]),
    (80, ["678", "204756", "37135249", "4592036697", "416237464122"]),
    (114, ["855", "341886", "85507600", "15092041050", "2010698806050"]),
    (118, ["1095", "549246", "169413760", "36358101930", "5819797557810"]),
];

pub fn integral_weights() -> Vec<i64> {
    INTEGRAL_TABLE.iter().map(|(w, _)| *w).collect()
}

// ---------------------------------------------------------------------------
// Atkin-like polynomials A_{m,a} and adjoint polynomials B_{m,a}, top degree
// first. B_{0,2} = 0 is the empty list.

pub struct AtkinFixture {
    pub m: u32,
    pub a: u32,
    pub a_poly: &'static [&'static str],
    pub b_poly: &'static [&'static str],
}

pub const ATKIN_TABLE: [AtkinFixture; 15] = [
    AtkinFixture { m: 1, a: 0, a_poly: &["1"], b_poly: &["1", "-1008"] },
    AtkinFixture { m: 2, a: 0, a_poly: &["1", "-824"], b_poly: &["1", "-1832", "497952"] },
    AtkinFixture { m: 0, a: 2, a_poly: &["1"], b_poly: &[] },
    AtkinFixture { m: 1, a: 2, a_poly: &["1", "-720"], b_poly: &["1"] },
    AtkinFixture {
        m: 3,
        a: 2,
        a_poly: &["1", "-12576/5", "1526958", "-107765856"],
        b_poly: &["1", "-8976/5", "627534"],
    },
    AtkinFixture { m: 0, a: 6, a_poly: &["1"], b_poly: &["1"] },
    AtkinFixture { m: 1, a: 6, a_poly: &["1", "-1266"], b_poly: &["1", "-546"] },
    AtkinFixture { m: 2, a: 6, a_poly: &["1", "-2115", "870630"], b_poly: &["1", "-1395", "259350"] },
    AtkinFixture {
        m: 4,
        a: 6,
        a_poly: &["1", "-7671/2", "4871313", "-2260803660", "273189722310"],
        b_poly: &["1", "-6231/2", "3021273", "-948582060", "53723885670"],
    },
    AtkinFixture {
        m: 9,
        a: 6,
        a_poly: &[
            "1",
            "-24454/3",
            "474979296/17",
            "-888804457205/17",
            "58002865348421",
            "-38759471954111394",
            "15135088185868167792",
            "-3173598010686486090312",
            "297473555337690122052390",
            "-7840346480159903987708940",
        ],
        b_poly: &[
            "1",
            "-22294/3",
            "390702816/17",
            "-651013930805/17",
            "37180279576181",
            "-21228003877921074",
            "6835398004395374832",
            "-1114698418843177975752",
            "72322444486635699257190",
            "-919318930586739576036780",
        ],
    },
    AtkinFixture { m: 0, a: 8, a_poly: &["1"], b_poly: &["1"] },
    AtkinFixture { m: 1, a: 8, a_poly: &["1", "-330"], b_poly: &["1", "-1338"] },
    AtkinFixture { m: 2, a: 8, a_poly: &["1", "-1215", "129030"], b_poly: &["1", "-2223", "1021110"] },
    AtkinFixture {
        m: 5,
        a: 8,
        a_poly: &["1", "-19098/5", "25015408/5", "-12959037322/5", "441761976414", "-9018997829292"],
        b_poly: &[
            "1",
            "-24138/5",
            "42602992/5",
            "-33192286666/5",
            "10734540754806/5",
            "-202399435400844",
        ],
    },
    AtkinFixture {
        m: 6,
        a: 8,
        a_poly: &[
            "1",
            "-4685",
            "89349390/11",
            "-6372443376",
            "2195718854056",
            "-261120476348550",
            "3783879543834780",
        ],
        b_poly: &[
            "1",
            "-5693",
            "137637630/11",
            "-146033508816/11",
            "6911247661864",
            "-1568906774156358",
            "105994437115386300",
        ],
    },
];

/// `(m, a, k, factorization of k·N_{m,a})`; `k` is also the clearing constant.
pub type NFixture = (u32, u32, u64, &'static [(u64, u32)]);

pub const N_TABLE: [NFixture; 16] = [
    (0, 0, 1, &[]),
    (1, 0, 1, &[(2, 5), (3, 3), (5, 1), (7, 1), (11, 1)]),
    (2, 0, 1, &[(2, 6), (3, 3), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1)]),
    (0, 2, 1, &[]),
    (1, 2, 1, &[(2, 5), (3, 3), (5, 1), (7, 1), (13, 1)]),
    (
        3,
        2,
        5,
        &[
            (2, 7), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1),
            (31, 1), (37, 1),
        ],
    ),
    (0, 6, 1, &[(2, 4), (3, 2), (5, 1)]),
    (1, 6, 1, &[(2, 6), (3, 3), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1)]),
    (
        2,
        6,
        1,
        &[(2, 6), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1)],
    ),
    (
        4,
        6,
        2,
        &[
            (2, 7), (3, 4), (5, 2), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1),
            (31, 1), (37, 1), (41, 1), (43, 1), (47, 1), (53, 1),
        ],
    ),
    (
        9,
        6,
        51,
        &[
            (2, 8), (3, 5), (5, 2), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1),
            (31, 1), (37, 1), (41, 1), (43, 1), (47, 1), (53, 1), (59, 1), (61, 1), (67, 1), (71, 1),
            (73, 1), (79, 1), (83, 1), (89, 1), (97, 1), (101, 1), (103, 1), (107, 1), (109, 1),
            (113, 1),
        ],
    ),
    (0, 8, 1, &[(2, 4), (3, 2), (7, 1)]),
    (1, 8, 1, &[(2, 6), (3, 3), (5, 1), (7, 1), (11, 1), (13, 1), (19, 1)]),
    (
        2,
        8,
        1,
        &[(2, 6), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (31, 1)],
    ),
    (
        5,
        8,
        5,
        &[
            (2, 8), (3, 4), (5, 2), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1),
            (31, 1), (37, 1), (41, 1), (43, 1), (47, 1), (53, 1), (59, 1), (61, 1), (67, 1),
        ],
    ),
    (
        6,
        8,
        11,
        &[
            (2, 8), (3, 4), (5, 2), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1),
            (31, 1), (37, 1), (41, 1), (43, 1), (47, 1), (53, 1), (59, 1), (61, 1), (67, 1), (71, 1),
            (73, 1), (79, 1),
        ],
    ),
];

pub fn factor_product(f: &[(u64, u32)]) -> BigInt {
    f.iter().fold(BigInt::one(), |acc, (p, e)| acc * BigInt::from(*p).pow(*e))
}

// ---------------------------------------------------------------------------
// Prime-power multipliers: U ≡ u/d · U(t^p), V ≡ v/d · U(t^p), coefficients
// from degree 0 up.

pub struct MultiplierFixture {
    pub p: u64,
    pub s: u32,
    pub u: &'static [i64],
    pub v: &'static [i64],
    pub d: &'static [i64],
}

pub const MULTIPLIERS: [MultiplierFixture; 4] = [
    MultiplierFixture { p: 2, s: 8, u: &[1, 120, 96, 128], v: &[1, 72, 128, 128, 64, 0, 0, 0, 128], d: &[1] },
    MultiplierFixture {
        p: 3,
        s: 5,
        u: &[1, 120, 54, 189, 135, 81, 162, 81, 0, 0, 162],
        v: &[1, 111, 216, 162, 135, 81, 0, 81, 0, 162, 162],
        d: &[1],
    },
    MultiplierFixture { p: 5, s: 2, u: &[1, 20, 10], v: &[1, 15, 5], d: &[1] },
    MultiplierFixture {
        p: 7,
        s: 2,
        u: &[1, 22, 7, 21, 0, 0, 0, 1, 36],
        v: &[1, 7, 42, 7, 0, 0, 0, 43],
        d: &[1, 0, 0, 0, 0, 0, 0, 1],
    },
];

// ---------------------------------------------------------------------------
// Closed forms c_r = poly(r) (6r+a)! / ((3r+b)! r! (r+c)!^2) / den.

pub struct ClosedForm {
    pub name: &'static str,
    /// `P` or `Q`.
    pub kind: char,
    pub n: u32,
    /// The series is `(1-1728t)^{-1/2}` times `P_n` or `Q_n`.
    pub inverse_root: bool,
    /// Numerator polynomial, top degree first.
    pub poly: &'static [&'static str],
    pub den: &'static str,
    pub fact: (u64, u64, u64),
    pub head: [&'static str; 5],
}

pub const CLOSED_FORMS: [ClosedForm; 16] = [
    ClosedForm {
        name: "P0",
        kind: 'P',
        n: 0,
        inverse_root: false,
        poly: &["1"],
        den: "1",
        fact: (0, 0, 0),
        head: ["1", "120", "83160", "81681600", "93699005400"],
    },
    ClosedForm {
        name: "P2",
        kind: 'P',
        n: 2,
        inverse_root: false,
        poly: &["41", "77"],
        den: "2310",
        fact: (6, 3, 2),
        head: ["1", "944", "1054170", "1297994880", "1700941165560"],
    },
    ClosedForm {
        name: "P4",
        kind: 'P',
        n: 4,
        inverse_root: false,
        poly: &["17377", "117219", "193154"],
        den: "223092870",
        fact: (12, 6, 4),
        head: ["1", "1800", "2783760", "4183182720", "6274984354650"],
    },
    ClosedForm {
        name: "P1",
        kind: 'P',
        n: 1,
        inverse_root: true,
        poly: &["1"],
        den: "120",
        fact: (6, 3, 1),
        head: ["1", "1386", "2042040", "3123300180", "4891088081880"],
    },
    ClosedForm {
        name: "P3",
        kind: 'P',
        n: 3,
        inverse_root: true,
        poly: &["77", "221"],
        den: "4084080",
        fact: (12, 6, 3),
        head: ["1", "2235", "4129650", "7217526960", "12344776903800"],
    },
    ClosedForm {
        name: "P5",
        kind: 'P',
        n: 5,
        inverse_root: true,
        poly: &["33649", "294051", "633650"],
        den: "776363187600",
        fact: (18, 9, 5),
        head: ["1", "3094", "6975504", "13953546090", "26319290241530"],
    },
    ClosedForm {
        name: "P9",
        kind: 'P',
        n: 9,
        inverse_root: true,
        poly: &["301163357", "8876894690", "97346883895", "470641033450", "846250112568"],
        den: "1303566339087601789200",
        fact: (30, 15, 9),
        head: ["1", "4818", "14913288", "37889152860", "86182007602320"],
    },
    ClosedForm {
        name: "P19",
        kind: 'P',
        n: 19,
        inverse_root: true,
        poly: &[
            "116055861444395385601913",
            "15530138946748752922984725",
            "920111315629981006299003510",
            "31676880792353832401375777850",
            "698329420677409164956468289249",
            "10222801871323855615909703388405",
            "99369498641304011775924341700640",
            "618440343527755839046417085216700",
            "2236089229125717720580535903583888",
            "3578581860690243122001381266421120",
        ],
        den: "7586413113700225869154849509970478998385924877600",
        fact: (60, 30, 19),
        head: ["1", "9135", "47828730", "188818914000", "625280243661000"],
    },
    ClosedForm {
        name: "Q0",
        kind: 'Q',
        n: 0,
        inverse_root: true,
        poly: &["1"],
        den: "1",
        fact: (1, 0, 0),
        head: ["1", "840", "1081080", "1551950400", "2342475135000"],
    },
    ClosedForm {
        name: "Q2",
        kind: 'Q',
        n: 2,
        inverse_root: true,
        poly: &["7", "13"],
        den: "2730",
        fact: (7, 3, 2),
        head: ["1", "1760", "2877930", "4667789280", "7590443164920"],
    },
    ClosedForm {
        name: "Q6",
        kind: 'Q',
        n: 6,
        inverse_root: true,
        poly: &["1043119", "15220608", "72947639", "114757350"],
        den: "74207381348100",
        fact: (19, 9, 6),
        head: ["1", "3504", "8597259", "18287498240", "36144224452050"],
    },
    ClosedForm {
        name: "Q1",
        kind: 'Q',
        n: 1,
        inverse_root: false,
        poly: &["8", "7"],
        den: "7",
        fact: (1, 0, 1),
        head: ["1", "450", "394680", "429557700", "522037315800"],
    },
    ClosedForm {
        name: "Q3",
        kind: 'Q',
        n: 3,
        inverse_root: false,
        poly: &["1528", "7231", "8151"],
        den: "190190",
        fact: (7, 3, 3),
        head: ["1", "1335", "1757970", "2386445040", "3336565609080"],
    },
    ClosedForm {
        name: "Q5",
        kind: 'Q',
        n: 5,
        inverse_root: false,
        poly: &["1070744", "12418991", "46901365", "57574750"],
        den: "34579394850",
        fact: (13, 6, 5),
        head: ["1", "2206", "3863952", "6319180098", "10079991804410"],
    },
    ClosedForm {
        name: "Q11",
        kind: 'Q',
        n: 11,
        inverse_root: false,
        poly: &[
            "13252649705176",
            "665298552506263",
            "13797873461407945",
            "151287554887490515",
            "924734694751472239",
            "2986992686186751022",
            "3982438425105968520",
        ],
        den: "15716643102160534111758180",
        fact: (31, 15, 11),
        head: ["1", "4805", "14658030", "36441948000", "80761720666320"],
    },
    ClosedForm {
        name: "Q13",
        kind: 'Q',
        n: 13,
        inverse_root: false,
        poly: &[
            "74198322973160504",
            "5124808625350611463",
            "150642927750066254963",
            "2442571823969345600665",
            "23590276457107577780801",
            "135688184492311416306712",
            "430315970858396108150652",
            "580367220881648001413040",
        ],
        den: "32176447673406729078990845541300",
        fact: (37, 18, 13),
        head: ["1", "5670", "19748832", "54741797937", "132878837538099"],
    },
];

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl ClosedForm {
    pub fn coefficient(&self, r: u64) -> Rational {
        let p = poly_top(self.poly).eval(&Rational::from_integer(r.into()));
        let (a, b, c) = self.fact;
        let num = factorial(6 * r + a);
        let den = factorial(3 * r + b) * factorial(r) * factorial(r + c).pow(2);
        p * Rational::new(num, den) / q(self.den)
    }
}

// ---------------------------------------------------------------------------
// Other displayed expansions.

/// `G_12^(1)`, `G_14^(1)`, `G_26^(1)` from their leading term.
pub const G12: (usize, [&str; 4]) = (2, ["1", "56", "1002", "9296"]);
pub const G14: (usize, [&str; 3]) = (2, ["1", "128", "4050"]);
pub const G26: (usize, [&str; 3]) = (4, ["1", "1176/5", "18816"]);

pub const G4_DEPTH2: (usize, [&str; 8]) = (1, ["1", "6", "12", "28", "30", "72", "56", "120"]);
pub const G8_DEPTH2: (usize, [&str; 7]) = (2, ["1", "16", "102", "416", "1308", "3360", "7772"]);
pub const G6_DEPTH3: (usize, [&str; 8]) = (2, ["1", "8", "30", "80", "180", "336", "620", "960"]);
pub const G10_DEPTH5: (usize, [&str; 6]) =
    (4, ["1", "144/11", "936/11", "4160/11", "14490/11", "42432/11"]);
/// `G_6^(3)` as a series in `t = 1/j`.
pub const G6_DEPTH3_T: (usize, [&str; 4]) = (2, ["1", "1496", "2072262", "2893548528"]);

/// `(w, r, coefficients of the monic quadratic from the top)`.
pub const GENERALIZED_ATKIN: [(i64, u32, [&str; 3]); 6] = [
    (26, 1, ["1", "-1640", "269280"]),
    (28, 2, ["1", "5367564/4847", "97748640/4847"]),
    (30, 3, ["1", "-100925285400/6736603", "184720492440000/6736603"]),
    (32, 4, ["1", "13326301537125/303744733", "8760324756150000/303744733"]),
    (
        34,
        5,
        ["1", "-567274769925055704588000/7988288882724700441", "302601299124728270224800000/7988288882724700441"],
    ),
    (
        36,
        6,
        [
            "1",
            "67508245504783855161034500000/433955868750758754759533",
            "-163976620145430859347886034400000/433955868750758754759533",
        ],
    ),
];

/// Coefficients of the sixth-order equation for `G_10^(5)`, as displayed:
/// for each order `j` of `∂_5^j`, a prefactor times `Σ c E4^a E6^b`.
pub const MLDE_G10: [(u32, &str, &[(&str, u32, u32)]); 7] = [
    (6, "1", &[("1", 3, 0), ("-731087/4380623", 0, 2)]),
    (5, "3649536/4380623", &[("1", 2, 1)]),
    (4, "-5/630809712", &[("845736619", 4, 0), ("-170572459", 1, 2)]),
    (3, "-5/946214568", &[("2032753837", 3, 1), ("-164191405", 0, 3)]),
    (2, "1/90836598528", &[("262935868013", 5, 0), ("-746094289517", 2, 2)]),
    (1, "1/45418299264", &[("80592093937", 4, 1), ("-122767956721", 1, 3)]),
    (0, "55/13080470188032", &[("3672965829", 6, 0), ("-7414522789", 3, 2), ("-5174923040", 0, 4)]),
];

/// Change of basis for `QM_18^(1)`: rows express the standard basis through
/// the extremal one.
pub const BASIS_18: [[&str; 4]; 4] =
    [["1", "-720", "0", "0"], ["0", "1", "-1266", "269280"], ["1", "0", "0", "0"], ["0", "1", "-546", "0"]];
