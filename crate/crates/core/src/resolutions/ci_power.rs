//! Powers of codimension-2 complete intersections as standard determinantal
//! ideals.
//!
//! `(f, g)^s` with `deg f = d1 <= deg g = d2` is cut out by the maximal minors
//! of the `s x (s+1)` bidiagonal matrix with `g` on one diagonal and `f` on
//! the other. Sorted into the standard ordering, its degree data are
//! `b_i = (s - i)(d2 - d1)` and `a_j = d1 + (j - 1)(d2 - d1)`.

use crate::error::{Error, Result};
use crate::model::StandardDegreeData;

pub fn ci_power_standard(d1: i64, d2: i64, s: i64) -> Result<StandardDegreeData> {
    let (d1, d2) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
    if d1 < 1 {
        return Err(Error::RangeError(format!(
            "generator degrees must be >= 1, got {d1}"
        )));
    }
    if s < 1 {
        return Err(Error::RangeError(format!("power s = {s} must be >= 1")));
    }
    let step = d2 - d1;
    let b = (1..=s).map(|i| (s - i) * step).collect();
    let a = (1..=s + 1).map(|j| d1 + (j - 1) * step).collect();
    StandardDegreeData::new(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolutions::{en_closed_form, en_table};

    #[test]
    fn square_of_two_linear_forms() {
        let dd = ci_power_standard(1, 1, 2).unwrap();
        assert_eq!((dd.b(), dd.a()), (&[0, 0][..], &[1, 1, 1][..]));
    }

    #[test]
    fn square_of_mixed_degrees() {
        let dd = ci_power_standard(1, 2, 2).unwrap();
        assert_eq!((dd.b(), dd.a()), (&[1, 0][..], &[1, 2, 3][..]));
        let cf = en_closed_form(&dd);
        assert_eq!(
            (cf.m, cf.big_m, cf.total),
            (vec![2, 4], vec![4, 5], vec![3, 2])
        );
        assert_eq!(en_table(&dd).unwrap().multiplicity().unwrap(), 6);
    }

    #[test]
    fn first_power_is_the_complete_intersection() {
        let dd = ci_power_standard(2, 2, 1).unwrap();
        assert_eq!((dd.b(), dd.a()), (&[0][..], &[2, 2][..]));
        let swapped = ci_power_standard(3, 1, 1).unwrap();
        assert_eq!(swapped.a(), &[1, 3]);
    }

    #[test]
    fn generator_degrees_are_monomial_degrees() {
        // (f, g)^s is generated by f^{s-k} g^k
        for (d1, d2, s) in [(1, 2, 3), (2, 5, 4), (1, 3, 5)] {
            let dd = ci_power_standard(d1, d2, s).unwrap();
            let row: Vec<(i64, u64)> = en_table(&dd)
                .unwrap()
                .row(1)
                .iter()
                .map(|(&j, &n)| (j, n))
                .collect();
            let mut expected: Vec<i64> = (0..=s).map(|k| (s - k) * d1 + k * d2).collect();
            expected.sort_unstable();
            let flat: Vec<i64> = row
                .iter()
                .flat_map(|&(j, n)| std::iter::repeat_n(j, n as usize))
                .collect();
            assert_eq!(flat, expected);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            ci_power_standard(0, 2, 2),
            Err(Error::RangeError(_))
        ));
        assert!(matches!(
            ci_power_standard(1, 2, 0),
            Err(Error::RangeError(_))
        ));
    }
}
