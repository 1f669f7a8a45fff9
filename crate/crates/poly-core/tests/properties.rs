//! Property tests for the exact-arithmetic invariants: squarefree
//! reconstruction, discriminant/gcd agreement, root residuals, rational
//! function canonicalization, and parser round-trips.

use num_complex::Complex64;
use poly_core::{
    discriminant, gcd_monic, parse_expression, parse_polynomial, rf_equal,
    roots_numeric, squarefree_decomposition, GaussianRational, Parsed, Polynomial,
    RationalFunction,
};
use proptest::prelude::*;

fn small_scalar() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| GaussianRational::from_ratio(p, q))
}

fn small_int_scalar() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5).prop_map(GaussianRational::from_int)
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_scalar(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Polynomial assembled from integer roots with multiplicities (degree <= 8).
fn poly_with_root_structure() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, 1usize..=3), 1..=3).prop_map(|spec| {
        let mut seen = std::collections::BTreeSet::new();
        let mut p = Polynomial::one();
        for (root, mult) in spec {
            if !seen.insert(root) {
                continue;
            }
            let lin = Polynomial::new(vec![
                GaussianRational::from_int(-root),
                GaussianRational::one(),
            ]);
            p = &p * &lin.pow(mult.min(3) as u32);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn squarefree_reconstructs_input(p in poly_with_root_structure()) {
        prop_assume!(p.degree().map(|d| d >= 1).unwrap_or(false));
        let factors = squarefree_decomposition(&p).unwrap();
        let mut acc = Polynomial::constant(p.leading().unwrap());
        for (f, m) in &factors {
            prop_assert!(f.is_monic());
            acc = &acc * &f.pow(*m as u32);
        }
        prop_assert_eq!(acc, p.clone());
        // factors pairwise coprime and squarefree
        for (i, (f, _)) in factors.iter().enumerate() {
            prop_assert_eq!(gcd_monic(f, &f.derivative()).unwrap(), Polynomial::one());
            for (g, _) in &factors[i + 1..] {
                prop_assert_eq!(gcd_monic(f, g).unwrap(), Polynomial::one());
            }
        }
    }

    #[test]
    fn discriminant_zero_iff_gcd_nontrivial(
        base in prop::collection::vec(small_int_scalar(), 2..=9),
        square_it in any::<bool>(),
    ) {
        let p0 = Polynomial::new(base);
        prop_assume!(p0.degree().map(|d| d >= 1).unwrap_or(false));
        let p = if square_it { &(&p0 * &p0) * &Polynomial::var() } else { p0 };
        let disc = discriminant(&p).unwrap();
        let g = gcd_monic(&p, &p.derivative()).unwrap();
        let has_multiple = g.degree().unwrap() >= 1;
        prop_assert_eq!(disc.is_zero(), has_multiple);
    }

    #[test]
    fn roots_cover_degree_with_small_residuals(p in poly_with_root_structure()) {
        prop_assume!(p.degree().map(|d| d >= 1).unwrap_or(false));
        let tol = 1e-10;
        let deg = p.degree().unwrap();
        let rs = roots_numeric(&p, tol).unwrap();
        prop_assert_eq!(rs.total_multiplicity(), deg);
        for e in &rs.entries {
            let residual = p.eval_complex(e.location).norm();
            let bound = tol * (1.0 + e.location.norm()).powi(deg as i32)
                * p.max_coeff_magnitude().max(1.0);
            prop_assert!(residual <= bound, "residual {residual:e} > bound {bound:e}");
        }
    }

    #[test]
    fn rational_function_reduction_idempotent(
        n in nonzero_poly(5),
        d in nonzero_poly(5),
    ) {
        let f = RationalFunction::new(n, d).unwrap();
        let again =
            RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(&f, &again);
        prop_assert!(f.denominator().is_monic());
        prop_assert_eq!(
            gcd_monic(f.numerator(), f.denominator()).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn rf_equal_is_an_equivalence(
        n in nonzero_poly(4),
        d in nonzero_poly(4),
        s1 in nonzero_poly(2),
        s2 in nonzero_poly(2),
    ) {
        // f, g, h are the same function presented with different cofactors
        let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let g = RationalFunction::new(&n * &s1, &d * &s1).unwrap();
        let h = RationalFunction::new(&n * &s2, &d * &s2).unwrap();
        prop_assert!(rf_equal(&f, &f));
        prop_assert!(rf_equal(&f, &g) && rf_equal(&g, &f));
        prop_assert!(rf_equal(&g, &h) && rf_equal(&f, &h));
        // and a genuinely different function stays different
        let shifted = &f + &RationalFunction::constant(GaussianRational::one());
        prop_assert!(!rf_equal(&f, &shifted));
    }

    #[test]
    fn parser_round_trip_random(p in poly(6)) {
        let text = p.render('z');
        let back = parse_polynomial(&text, 'z').unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn parser_round_trip_corpus() {
    let corpus: [&str; 50] = [
        "z^3 - z",
        "(1/7)z^7 - (1/2)z^6 + (3/5)z^5 - (1/4)z^4 + 1",
        "z",
        "-z",
        "0",
        "1",
        "-1/2",
        "z^2 + 1",
        "z^2 - 1",
        "2z^2 - 4",
        "(1/2)z + 1/2",
        "z^10 - 55z^9 + 1320z^8",
        "3i",
        "(1/2+3i)z^2 - i",
        "iz",
        "z^4 - 2z^2",
        "10z^6 - 24z^5 + 15z^4 - 3",
        "z^4 - 12z^2 + 16z - 6",
        "7z^4 - 14z^2 + 7",
        "z^7 - (14/5)z^5 + (7/3)z^3 + 1",
        "z^6 + (96/25)z^5 + (96/25)z^4",
        "(t - 1)^4",
        "t^6 - 2",
        "5",
        "-5",
        "z^2 + 2z + 1",
        "z^3 + 2z^2 + 3z + 4",
        "-z^3 + z - 12",
        "(2/3)z^5",
        "z^8",
        "(1/1000000)z^2 - 1000000",
        "4z - 4",
        "(3/2)z^3 - (3/2)",
        "u^2 - u",
        "u + 1",
        "-u",
        "2u^3 - u^2 + u - 1",
        "(1/3)u^6 + (5/6)u^3",
        "9z^9 + 8z^8 + 7z^7 + 6z^6",
        "z^5 - 5z^4 + 10z^3 - 10z^2 + 5z - 1",
        "16z^4 - 8z^2 + 1",
        "(1/2)z^2 + (1/3)z + 1/6",
        "z^2 - 2z + 2",
        "(2+i)z - 3i",
        "(1/2-i)z^3 + (1/2+i)z",
        "z^6 - 1",
        "z^6 + 1",
        "121z^2 - 242z + 121",
        "(7/11)z^7 - (5/13)z^5 + (3/17)z^3",
        "z^2 + z + 1",
    ];
    for text in corpus {
        let first = match parse_expression(text).unwrap() {
            Parsed::Poly(p) => p,
            Parsed::Rational(_) => panic!("corpus entry {text:?} is not a polynomial"),
        };
        let rendered = first.render(pick_var(text));
        let second = parse_polynomial(&rendered, pick_var(text)).unwrap();
        assert_eq!(first, second, "round-trip failed for {text:?}");
    }
}

fn pick_var(text: &str) -> char {
    text.chars()
        .find(|c| c.is_ascii_alphabetic() && *c != 'i')
        .unwrap_or('z')
}

#[test]
fn gcd_binds_known_common_factors() {
    // gcd(p*g, q*g) is divisible by g for a sample of engineered triples
    let g = parse_polynomial("z^2 + z + 1", 'z').unwrap();
    let p = parse_polynomial("z^3 - 2", 'z').unwrap();
    let q = parse_polynomial("z - 5", 'z').unwrap();
    let d = gcd_monic(&(&p * &g), &(&q * &g)).unwrap();
    assert!(d.div_exact(&g).is_some());
    assert_eq!(d, g);
}

#[test]
fn root_locations_match_known_values() {
    // z^2 + 1 has roots +/- i
    let p = parse_polynomial("z^2 + 1", 'z').unwrap();
    let rs = roots_numeric(&p, 1e-12).unwrap();
    let mut ims: Vec<f64> = rs.entries.iter().map(|e| e.location.im).collect();
    ims.sort_by(f64::total_cmp);
    assert!((ims[0] + 1.0).abs() < 1e-12 && (ims[1] - 1.0).abs() < 1e-12);
    assert!(rs
        .entries
        .iter()
        .all(|e| (e.location - Complex64::new(0.0, e.location.im)).norm() < 1e-12));
}
