//! Exact graphicality decisions.
//!
//! [`erdos_gallai_check`] is the decider every other module defers to.
//! [`havel_hakimi_realize`] is an independent route that also produces a
//! witness graph; the two are required to agree.

use alloc::vec::Vec;
use core::fmt;

use crate::DegreeSequence;

/// Outcome of a graphicality decision together with its certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub graphic: bool,
    pub reason: Reason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    ErdosGallaiPass,
    /// Smallest `k` (1-based) where `lhs = Σ_{i≤k} d_i` exceeds
    /// `rhs = k(k-1) + Σ_{i>k} min(d_i, k)`.
    ErdosGallaiFail {
        k: usize,
        lhs: u64,
        rhs: u64,
    },
    OddSum,
    ValueOutOfRange {
        max: u32,
        n: usize,
    },
    /// Havel–Hakimi could not place a vertex: at step `step` it needed
    /// `required` neighbours with positive residual degree but found only
    /// `available`.
    HavelHakimiStuck {
        step: usize,
        required: u32,
        available: usize,
    },
}

impl Verdict {
    const PASS: Verdict = Verdict {
        graphic: true,
        reason: Reason::ErdosGallaiPass,
    };

    fn reject(reason: Reason) -> Verdict {
        Verdict {
            graphic: false,
            reason,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            Reason::ErdosGallaiPass => f.write_str("graphic"),
            Reason::ErdosGallaiFail { k, lhs, rhs } => {
                write!(f, "non-graphic: Erdős–Gallai fails at k={k} ({lhs} > {rhs})")
            }
            Reason::OddSum => f.write_str("non-graphic: odd sum"),
            Reason::ValueOutOfRange { max, n } => {
                write!(f, "non-graphic: value {max} exceeds n-1 = {}", n - 1)
            }
            Reason::HavelHakimiStuck {
                step,
                required,
                available,
            } => write!(
                f,
                "non-graphic: Havel–Hakimi step {step} needs {required} neighbours, {available} available"
            ),
        }
    }
}

fn precheck(seq: &DegreeSequence) -> Option<Verdict> {
    if !seq.has_even_sum() {
        return Some(Verdict::reject(Reason::OddSum));
    }
    if !seq.fits_simple_graph() {
        return Some(Verdict::reject(Reason::ValueOutOfRange {
            max: seq.max_degree(),
            n: seq.len(),
        }));
    }
    None
}

/// Erdős–Gallai decision, reporting the smallest failing `k`.
///
/// Only `k` up to the largest index with `d_k >= k - 1` are evaluated: past
/// that point the inequalities cannot fail first. Each evaluation is O(1)
/// using prefix sums and a pointer to the last value `>= k`.
pub fn erdos_gallai_check(seq: &DegreeSequence) -> Verdict {
    erdos_gallai_sorted(seq.values())
}

/// [`erdos_gallai_check`] on a raw non-increasing slice, for callers that
/// reuse a buffer instead of building a [`DegreeSequence`].
pub fn erdos_gallai_sorted(d: &[u32]) -> Verdict {
    debug_assert!(d.windows(2).all(|w| w[0] >= w[1]));
    let n = d.len();
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0u64);
    for &x in d {
        prefix.push(prefix.last().unwrap() + x as u64);
    }
    let total = prefix[n];
    if total % 2 != 0 {
        return Verdict::reject(Reason::OddSum);
    }
    if n > 0 && d[0] as usize >= n {
        return Verdict::reject(Reason::ValueOutOfRange { max: d[0], n });
    }

    let cutoff = (1..=n)
        .take_while(|&k| d[k - 1] as usize + 1 >= k)
        .last()
        .unwrap_or(0);

    // `w` = number of values >= k; shrinks as k grows.
    let mut w = n;
    for k in 1..=cutoff {
        while w > 0 && (d[w - 1] as usize) < k {
            w -= 1;
        }
        let ku = k as u64;
        let split = w.max(k);
        let rhs = ku * (ku - 1) + ku * (split - k) as u64 + (total - prefix[split]);
        let lhs = prefix[k];
        if lhs > rhs {
            return Verdict::reject(Reason::ErdosGallaiFail { k, lhs, rhs });
        }
    }
    Verdict::PASS
}

/// Every Erdős–Gallai inequality evaluated directly, O(n²).
///
/// Reference implementation for the optimised deciders.
pub fn erdos_gallai_check_all(seq: &DegreeSequence) -> Verdict {
    if let Some(v) = precheck(seq) {
        return v;
    }
    let d = seq.values();
    let n = d.len();
    let mut lhs = 0u64;
    for k in 1..=n {
        lhs += d[k - 1] as u64;
        let tail: u64 = d[k..].iter().map(|&x| x.min(k as u32) as u64).sum();
        let rhs = (k * (k - 1)) as u64 + tail;
        if lhs > rhs {
            return Verdict::reject(Reason::ErdosGallaiFail { k, lhs, rhs });
        }
    }
    Verdict::PASS
}

/// Graphicality of a run-length encoded sequence.
///
/// `blocks` holds `(value, multiplicity)` with strictly decreasing values and
/// positive multiplicities. Only the inequalities at block boundaries are
/// evaluated, which is enough to decide graphicality, so the cost depends on
/// the number of blocks rather than on `n`.
pub fn is_graphic_blocks(blocks: &[(u32, usize)]) -> bool {
    debug_assert!(blocks.windows(2).all(|w| w[0].0 > w[1].0));
    let n: usize = blocks.iter().map(|b| b.1).sum();
    if n == 0 {
        return true;
    }
    let sum: u64 = blocks.iter().map(|&(v, m)| v as u64 * m as u64).sum();
    if !sum.is_multiple_of(2) || blocks[0].0 as usize >= n {
        return false;
    }
    let mut k = 0usize;
    let mut lhs = 0u64;
    for (j, &(v, m)) in blocks.iter().enumerate() {
        k += m;
        lhs += v as u64 * m as u64;
        let ku = k as u64;
        let tail: u64 = blocks[j + 1..]
            .iter()
            .map(|&(w, mw)| (w as u64).min(ku) * mw as u64)
            .sum();
        if lhs > ku * (ku - 1) + tail {
            return false;
        }
    }
    true
}

/// The single source of truth for graphicality.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    erdos_gallai_check(seq).graphic
}

/// A simple graph on vertices `0..n`, edges stored as `(u, v)` with `u < v`
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Realization {
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = alloc::vec![0u32; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// No loops, no repeated edges, endpoints in range, canonical order.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|&(u, v)| u < v && v < self.n)
            && self.edges.windows(2).all(|w| w[0] < w[1])
    }

    /// Simple, and vertex `i` has degree `seq[i]`.
    pub fn realizes(&self, seq: &DegreeSequence) -> bool {
        self.n == seq.len() && self.is_simple() && self.degrees() == seq.values()
    }
}

/// Havel–Hakimi: repeatedly join the vertex of largest residual degree to the
/// next-largest ones. Vertex `i` of the result carries degree `seq[i]`.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<Realization, Verdict> {
    if let Some(v) = precheck(seq) {
        return Err(v);
    }
    let n = seq.len();
    let mut residual: Vec<u32> = seq.values().to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    let mut edges = Vec::with_capacity((seq.sum() / 2) as usize);
    let mut step = 0;
    while !order.is_empty() {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let head = order.remove(0);
        let need = residual[head];
        if need == 0 {
            break;
        }
        step += 1;
        let available = order.iter().take_while(|&&v| residual[v] > 0).count();
        if (need as usize) > available {
            return Err(Verdict::reject(Reason::HavelHakimiStuck {
                step,
                required: need,
                available,
            }));
        }
        for &v in &order[..need as usize] {
            residual[v] -= 1;
            edges.push((head.min(v), head.max(v)));
        }
        residual[head] = 0;
    }
    edges.sort_unstable();
    Ok(Realization { n, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_sequence;

    fn seq(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn erdos_gallai_examples() {
        let v = erdos_gallai_check(&seq(&[4, 4, 4, 2, 2]));
        assert_eq!(
            v.reason,
            Reason::ErdosGallaiFail {
                k: 3,
                lhs: 12,
                rhs: 10
            }
        );
        assert!(!v.graphic);
        assert!(erdos_gallai_check(&seq(&[3, 3, 3, 3])).graphic);
        assert_eq!(erdos_gallai_check(&seq(&[1, 1, 1])).reason, Reason::OddSum);
        assert_eq!(
            erdos_gallai_check(&seq(&[4, 2, 2, 2])).reason,
            Reason::ValueOutOfRange { max: 4, n: 4 }
        );
    }

    #[test]
    fn is_graphic_examples() {
        assert!(!is_graphic(&seq(&[3, 3, 1, 1])));
        for n in [2usize, 4, 6, 10] {
            assert!(is_graphic(
                &DegreeSequence::regular(n, n as u32 - 1).unwrap()
            ));
        }
        assert!(is_graphic(&seq(&[1, 1])));
        assert!(is_graphic(&seq(&[0])));
    }

    #[test]
    fn family_failure_reports_smallest_k() {
        // k = 5 also fails (40 > 30); k = 3 is the first to do so
        let seq = parse_sequence("8^5,2^5").unwrap();
        let v = erdos_gallai_check(&seq);
        assert_eq!(
            v.reason,
            Reason::ErdosGallaiFail {
                k: 3,
                lhs: 24,
                rhs: 22
            }
        );
        assert_eq!(erdos_gallai_check_all(&seq), v);
        let rhs5 = 5 * 4 + 5 * 2;
        assert!(40 > rhs5);
    }

    #[test]
    fn havel_hakimi_examples() {
        let k4 = havel_hakimi_realize(&seq(&[3, 3, 3, 3])).unwrap();
        assert_eq!(k4.edges, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let path = havel_hakimi_realize(&seq(&[2, 1, 1])).unwrap();
        assert_eq!(path.edges, [(0, 1), (0, 2)]);
        let bad = havel_hakimi_realize(&seq(&[4, 4, 4, 2, 2])).unwrap_err();
        assert!(!bad.graphic);
        assert_eq!(
            havel_hakimi_realize(&seq(&[1, 1, 1])).unwrap_err().reason,
            Reason::OddSum
        );
        let empty = havel_hakimi_realize(&seq(&[0, 0])).unwrap();
        assert!(empty.edges.is_empty() && empty.realizes(&seq(&[0, 0])));
    }

    #[test]
    fn block_path_examples() {
        assert!(!is_graphic_blocks(&[(4, 3), (2, 2)]));
        assert!(is_graphic_blocks(&[(3, 4)]));
        assert!(!is_graphic_blocks(&[(3, 2), (1, 2)]));
        assert!(is_graphic_blocks(&[(7, 5), (3, 5)]));
        assert!(!is_graphic_blocks(&[(1, 3)]));
    }
}
