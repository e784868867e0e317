//! Signature ranges used by scans and tests.

use crate::graphmodel::Signature;

/// Ordered compositions with at least two parts and total in `lo..=hi`.
pub fn compositions(lo: usize, hi: usize) -> Vec<Signature> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 1..=rest {
            cur.push(a);
            rec(rest - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for t in lo.max(2)..=hi {
        rec(t, &mut Vec::new(), &mut out);
    }
    out.into_iter().map(|p| Signature::of(&p)).collect()
}

/// Sorted (non-decreasing) signatures with at least two parts and total in `lo..=hi`.
pub fn partitions(lo: usize, hi: usize) -> Vec<Signature> {
    compositions(lo, hi)
        .into_iter()
        .filter(|s| s.parts().windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(compositions(6, 6).len(), 31);
        assert_eq!(compositions(2, 6).len(), 57);
        assert_eq!(partitions(2, 6).len(), 23);
    }
}
