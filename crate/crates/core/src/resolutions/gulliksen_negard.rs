//! Length-4 resolution of the submaximal minors of a `t x t` matrix.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::model::SquareDegreeData;
use crate::table::BettiTable;

use super::ClosedForm;

pub fn gn_table(qd: &SquareDegreeData) -> Result<BettiTable> {
    let (a, b, t, s) = (qd.a(), qd.b(), qd.t(), qd.s());
    let mut rows = vec![BTreeMap::from([(0i64, 1u64)])];
    rows.extend((0..4).map(|_| BTreeMap::new()));
    let mut bump = |i: usize, deg: i64, n: u64| *rows[i].entry(deg).or_insert(0u64) += n;
    for i in 0..t {
        for j in 0..t {
            bump(1, s + b[i] - a[j], 1);
            bump(3, s + a[i] - b[j], 1);
            if i != j {
                bump(2, s + a[i] - a[j], 1);
                bump(2, s + b[i] - b[j], 1);
            }
        }
    }
    bump(2, s, 2 * t as u64 - 2);
    bump(4, 2 * s, 1);
    BettiTable::from_rows(rows)
}

pub fn gn_closed_form(qd: &SquareDegreeData) -> ClosedForm {
    let (a, b, t, s) = (qd.a(), qd.b(), qd.t(), qd.s());
    let (a1, at, b1, bt) = (a[0], a[t - 1], b[0], b[t - 1]);
    let t = t as u64;
    ClosedForm {
        m: vec![
            s + b1 - at,
            (s + b1 - bt).min(s + a1 - at),
            s - bt + a1,
            2 * s,
        ],
        big_m: vec![
            s + bt - a1,
            (s + bt - b1).max(s + at - a1),
            s + at - b1,
            2 * s,
        ],
        total: vec![t * t, 2 * t * t - 2, t * t, 1],
    }
}

/// The middle total as printed in the closed-form statement, `t^2 - 2`.
pub fn printed_middle_total(t: usize) -> u64 {
    (t * t) as u64 - 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(b: &[i64], a: &[i64]) -> SquareDegreeData {
        SquareDegreeData::new(b.to_vec(), a.to_vec()).unwrap()
    }

    fn body(t: &BettiTable) -> Vec<(usize, i64, u64)> {
        t.entries().filter(|e| e.0 > 0).collect()
    }

    #[test]
    fn linear_two_by_two_is_koszul() {
        let t = gn_table(&sq(&[0, 0], &[1, 1])).unwrap();
        assert_eq!(body(&t), vec![(1, 1, 4), (2, 2, 6), (3, 3, 4), (4, 4, 1)]);
        let cf = gn_closed_form(&sq(&[0, 0], &[1, 1]));
        assert_eq!(
            (cf.m, cf.big_m, cf.total),
            (vec![1, 2, 3, 4], vec![1, 2, 3, 4], vec![4, 6, 4, 1])
        );
    }

    #[test]
    fn mixed_two_by_two() {
        // row 2: a-differences {2, 4}, b-differences {3, 3}, plus two at s = 3
        let t = gn_table(&sq(&[0, 0], &[1, 2])).unwrap();
        assert_eq!(
            body(&t),
            vec![
                (1, 1, 2),
                (1, 2, 2),
                (2, 2, 1),
                (2, 3, 4),
                (2, 4, 1),
                (3, 4, 2),
                (3, 5, 2),
                (4, 6, 1)
            ]
        );
        let cf = gn_closed_form(&sq(&[0, 0], &[1, 2]));
        assert_eq!(
            (cf.m, cf.big_m, cf.total),
            (vec![1, 2, 4, 6], vec![2, 4, 5, 6], vec![4, 6, 4, 1])
        );
    }

    #[test]
    fn linear_three_by_three() {
        let t = gn_table(&sq(&[0, 0, 0], &[1, 1, 1])).unwrap();
        assert_eq!(body(&t), vec![(1, 2, 9), (2, 3, 16), (3, 4, 9), (4, 6, 1)]);
        let cf = gn_closed_form(&sq(&[0, 0, 0], &[1, 1, 1]));
        assert_eq!(
            (cf.m, cf.big_m, cf.total),
            (vec![2, 3, 4, 6], vec![2, 3, 4, 6], vec![9, 16, 9, 1])
        );
        assert_eq!(printed_middle_total(3), 7);
    }
}
