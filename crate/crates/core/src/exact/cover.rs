use super::{RBD_CAP, RXC3_CAP};
use crate::error::{Error, Result};
use crate::reductions::{RbdInstance, Rxc3Instance};

/// A minimum set of red vertices covering all blue ones, the
/// lexicographically first among those of minimum size. `None` when some
/// blue vertex has no red neighbor.
pub fn min_red_blue_cover(inst: &RbdInstance) -> Result<Option<Vec<usize>>> {
    if inst.red() > RBD_CAP {
        return Err(Error::CapExceeded {
            size: inst.red(),
            cap: RBD_CAP,
        });
    }
    let red = inst.red();
    // The blue side is not capped, so masks span several words.
    let words = inst.blue().div_ceil(64).max(1);
    let mut masks = vec![vec![0u64; words]; red];
    for &(r, b) in inst.edges() {
        masks[r][b / 64] |= 1 << (b % 64);
    }
    let mut target = vec![0u64; words];
    for b in 0..inst.blue() {
        target[b / 64] |= 1 << (b % 64);
    }
    let mut all = vec![0u64; words];
    for m in &masks {
        for (a, x) in all.iter_mut().zip(m) {
            *a |= x;
        }
    }
    if all != target {
        return Ok(None);
    }

    fn rec(
        start: usize,
        left: usize,
        acc: &mut Vec<u64>,
        chosen: &mut Vec<usize>,
        masks: &[Vec<u64>],
        target: &[u64],
    ) -> bool {
        if left == 0 {
            return acc.as_slice() == target;
        }
        for r in start..=masks.len() - left {
            let saved = acc.clone();
            for (a, x) in acc.iter_mut().zip(&masks[r]) {
                *a |= x;
            }
            chosen.push(r);
            if rec(r + 1, left - 1, acc, chosen, masks, target) {
                return true;
            }
            chosen.pop();
            *acc = saved;
        }
        false
    }

    for size in 0..=red {
        let mut acc = vec![0u64; words];
        let mut chosen = Vec::new();
        if rec(0, size, &mut acc, &mut chosen, &masks, &target) {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

/// Whether some `S ⊆ R` with `|S| <= k` covers `B`; on success the minimum
/// cover is returned.
pub fn rbd_exact(inst: &RbdInstance, k: usize) -> Result<Option<Vec<usize>>> {
    Ok(min_red_blue_cover(inst)?.filter(|s| s.len() <= k))
}

/// An exact cover (indices into the triples, ascending), if one exists.
pub fn rxc3_exact(inst: &Rxc3Instance) -> Result<Option<Vec<usize>>> {
    let sets = inst.triples().len();
    if sets > RXC3_CAP {
        return Err(Error::CapExceeded {
            size: sets,
            cap: RXC3_CAP,
        });
    }
    let elements = 3 * inst.q();
    let masks: Vec<u64> = inst
        .triples()
        .iter()
        .map(|t| t.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let full = (1u64 << elements) - 1;

    fn rec(covered: u64, full: u64, masks: &[u64], chosen: &mut Vec<usize>) -> bool {
        if covered == full {
            return true;
        }
        let first = (!covered & full).trailing_zeros();
        for (i, &m) in masks.iter().enumerate() {
            if m >> first & 1 == 1 && m & covered == 0 {
                chosen.push(i);
                if rec(covered | m, full, masks, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::new();
    if rec(0, full, &masks, &mut chosen) {
        chosen.sort_unstable();
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest covering subset by scanning all subsets of R.
    fn scan(inst: &RbdInstance) -> Option<usize> {
        (0u32..1 << inst.red())
            .filter(|&mask| {
                let s: Vec<usize> = (0..inst.red()).filter(|&r| mask >> r & 1 == 1).collect();
                inst.covers(&s)
            })
            .map(u32::count_ones)
            .min()
            .map(|c| c as usize)
    }

    #[test]
    fn single_edge() {
        let inst = RbdInstance::new(1, 1, vec![(0, 0)], 1).unwrap();
        assert_eq!(rbd_exact(&inst, 1).unwrap(), Some(vec![0]));
        assert_eq!(rbd_exact(&inst, 0).unwrap(), None);
    }

    #[test]
    fn isolated_blue_is_always_no() {
        let inst = RbdInstance::new(2, 2, vec![(0, 0), (1, 0)], 2).unwrap();
        for k in 0..=2 {
            assert_eq!(rbd_exact(&inst, k).unwrap(), None);
        }
    }

    #[test]
    fn agrees_with_subset_scan() {
        for seed in 0..200 {
            let inst = RbdInstance::random(5, 6, 0.3, 0, seed).unwrap();
            let got = min_red_blue_cover(&inst).unwrap().map(|s| {
                assert!(inst.covers(&s));
                s.len()
            });
            assert_eq!(got, scan(&inst), "seed {seed}");
        }
    }

    #[test]
    fn rxc3_examples() {
        let forced = Rxc3Instance::forced();
        let cover = rxc3_exact(&forced).unwrap().unwrap();
        assert_eq!(cover.len(), 1);

        let ex = Rxc3Instance::example_one();
        let cover = rxc3_exact(&ex).unwrap().unwrap();
        assert!(ex.is_exact_cover(&cover));
        assert_eq!(cover, vec![2, 3]);
    }

    #[test]
    fn rxc3_agrees_with_subset_scan() {
        for seed in 0..60 {
            let inst = Rxc3Instance::random(2 + seed as usize % 3, seed).unwrap();
            let m = inst.triples().len();
            let brute = (0u32..1 << m).any(|mask| {
                let s: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
                inst.is_exact_cover(&s)
            });
            let got = rxc3_exact(&inst).unwrap();
            assert_eq!(got.is_some(), brute, "seed {seed}");
            if let Some(c) = got {
                assert!(inst.is_exact_cover(&c));
                assert_eq!(c.len(), inst.q());
            }
        }
    }
}
