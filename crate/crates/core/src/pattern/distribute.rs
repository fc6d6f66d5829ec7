use serde::Serialize;

use crate::error::{Error, Result};

/// What to work into one stitch of the previous round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stitch {
    Single,
    /// Two stitches into one.
    Increase,
}

/// Spreads `delta` increases over `n_prev` stitches so that gaps between
/// consecutive increases differ by at most one. `offset` rotates the layout
/// so increases do not stack from round to round.
pub fn distribute_increases(n_prev: u32, delta: u32, offset: u32) -> Result<Vec<Stitch>> {
    if delta > n_prev {
        return Err(Error::InvalidArgument(format!(
            "cannot place {delta} increases on {n_prev} stitches"
        )));
    }
    let mut out = vec![Stitch::Single; n_prev as usize];
    if delta == 0 {
        return Ok(out);
    }
    let n = u64::from(n_prev);
    let d = u64::from(delta);
    for i in 0..d {
        let pos = (i * n / d + u64::from(offset)) % n;
        out[pos as usize] = Stitch::Increase;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn positions(v: &[Stitch]) -> Vec<usize> {
        v.iter()
            .enumerate()
            .filter(|(_, s)| **s == Stitch::Increase)
            .map(|(i, _)| i)
            .collect()
    }

    #[test]
    fn examples() {
        let all = distribute_increases(6, 6, 0).unwrap();
        assert!(all.iter().all(|s| *s == Stitch::Increase));
        assert_eq!(
            positions(&distribute_increases(12, 4, 0).unwrap()),
            vec![0, 3, 6, 9]
        );
        assert_eq!(
            positions(&distribute_increases(12, 4, 1).unwrap()),
            vec![1, 4, 7, 10]
        );
        assert!(distribute_increases(12, 0, 5)
            .unwrap()
            .iter()
            .all(|s| *s == Stitch::Single));
        assert!(distribute_increases(3, 4, 0).is_err());
    }

    proptest! {
        #[test]
        fn gaps_are_even(n in 1u32..400, frac in 0.0f64..=1.0, offset in 0u32..1000) {
            let d = ((f64::from(n) * frac) as u32).min(n);
            let v = distribute_increases(n, d, offset).unwrap();
            prop_assert_eq!(v.len(), n as usize);
            let pos = positions(&v);
            prop_assert_eq!(pos.len(), d as usize);
            if d >= 2 {
                let mut gaps: Vec<usize> = pos.windows(2).map(|w| w[1] - w[0]).collect();
                gaps.push(pos[0] + n as usize - pos[pos.len() - 1]);
                let lo = *gaps.iter().min().unwrap();
                let hi = *gaps.iter().max().unwrap();
                prop_assert!(hi - lo <= 1);
            }
        }
    }
}
