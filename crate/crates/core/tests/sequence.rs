mod common;

use lecture_hall::lhseq::{check_index, target_monomial};
use lecture_hall::minors::{cal_e, ell_s, SubsetS};
use lecture_hall::polyring::parse_poly;
use lecture_hall::{LaurentPoly, LhSequence};

use common::{read_fixture, seq12};

#[test]
fn golden_entries_one_through_eight() {
    let seq = seq12();
    for i in 1..=8 {
        let text = read_fixture(&format!("ell_{i}.txt"));
        let expected = parse_poly(text.trim()).unwrap();
        let got = seq.ell(i).unwrap();
        assert_eq!(got, &expected, "l_{i}");
        assert_eq!(got.to_string(), text.trim(), "canonical text of l_{i}");
    }
}

#[test]
fn term_counts_frozen_and_increasing() {
    // recorded from the first build
    const COUNTS: [usize; 12] = [1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024];
    let seq = seq12();
    let counts: Vec<usize> = (1..=12).map(|i| seq.ell(i).unwrap().len()).collect();
    assert_eq!(counts, COUNTS);
    assert!(counts[2..].windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn entries_are_bihomogeneous_polynomials() {
    let mut seq = LhSequence::with_len(10).unwrap();
    for i in 1..=10 {
        let r = check_index(&mut seq, i).unwrap();
        assert!(r.all_ok(), "l_{i}: {:?}", r.failed_checks());
        assert_eq!(r.bidegree, Some((i as i64, i as i64 - 1)));
    }
}

#[test]
fn entries_eleven_and_twelve_pass_checks() {
    let seq = seq12();
    for i in 11..=12 {
        let ell = seq.ell(i).unwrap();
        assert!(ell.is_polynomial());
        assert_eq!(
            ell.bidegree().map(|d| (d.d_odd, d.d_even)),
            Some((i as i64, i as i64 - 1))
        );
        assert_eq!(ell.variables().last(), Some(&i));
    }
}

#[test]
fn corner_identity() {
    let seq = seq12();
    for i in 2..=12 {
        let target = LaurentPoly::monomial(target_monomial(i).unwrap());
        let corner = SubsetS::range(i / 2, i - 1).unwrap();
        assert_eq!(cal_e(seq, i).unwrap(), target, "E_{i}");
        assert_eq!(ell_s(seq, &corner).unwrap(), target, "l_S for S = {corner}");
    }
}

#[test]
fn singleton_minors_reproduce_the_sequence() {
    let seq = seq12();
    for i in 2..=12 {
        let s = SubsetS::new(vec![i - 1]).unwrap();
        assert_eq!(&ell_s(seq, &s).unwrap(), seq.ell(i).unwrap(), "S = {s}");
    }
    assert_eq!(&ell_s(seq, &SubsetS::empty()).unwrap(), seq.ell(1).unwrap());
}

#[test]
fn pivots_are_signed_corner_monomials() {
    let seq = seq12();
    for i in 3..=12 {
        let (c, m) = seq.pivot(i).unwrap().as_term().expect("single-term pivot");
        assert_eq!(c.magnitude(), &1u32.into());
        assert_eq!(m, &target_monomial(i - 2).unwrap());
    }
}
