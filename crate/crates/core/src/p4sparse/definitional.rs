use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFINITIONAL_CAP: usize = 40;

/// Whether the four vertices induce a P4: three edges with degrees 1,1,2,2.
fn is_p4(masks: &[u64], quad: [usize; 4]) -> bool {
    let set = quad.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut degrees = quad.map(|v| (masks[v] & set).count_ones());
    degrees.sort_unstable();
    degrees == [1, 1, 2, 2]
}

/// Direct check: every five vertices induce at most one P4.
pub fn is_p4_sparse_definitional(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > DEFINITIONAL_CAP {
        return Err(Error::CapExceeded {
            size: n,
            cap: DEFINITIONAL_CAP,
        });
    }
    if n < 5 {
        return Ok(true);
    }
    let masks = g.masks();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let five = [a, b, c, d, e];
                        let mut count = 0;
                        for skip in 0..5 {
                            let mut quad = [0; 4];
                            let mut k = 0;
                            for (i, &v) in five.iter().enumerate() {
                                if i != skip {
                                    quad[k] = v;
                                    k += 1;
                                }
                            }
                            if is_p4(&masks, quad) {
                                count += 1;
                            }
                        }
                        if count > 1 {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
