//! Set partitions of `[n]` in canonical packed-word form, the denesting
//! rewriting, nonnesting partitions, and the bijection with Young
//! diagrams inside the staircase.

use crate::words::{is_packed, PackedWord};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("word is not packed")]
    NotPacked,
    #[error("partition is not nonnesting: {0}")]
    Nesting(String),
    #[error("diagram does not fit in the staircase of [{0}]")]
    NotInStaircase(usize),
    #[error("ambient size mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

/// A set partition of `[n]`, stored as the packed word whose blocks are
/// numbered by increasing minima (first occurrences of 1, 2, 3, ... appear
/// in this order).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    word: PackedWord,
}

impl SetPartition {
    /// Canonicalize any packed word by forgetting the block order.
    pub fn from_word(w: &PackedWord) -> Self {
        let letters = w.letters();
        let mut rank = vec![0u8; w.max_letter() as usize + 1];
        let mut next = 0u8;
        let mut out = Vec::with_capacity(letters.len());
        for &a in letters {
            if rank[a as usize] == 0 {
                next += 1;
                rank[a as usize] = next;
            }
            out.push(rank[a as usize]);
        }
        SetPartition { word: PackedWord::new(out).expect("canonical word is packed") }
    }

    pub fn from_letters(letters: Vec<u8>) -> Result<Self, PartitionError> {
        if !is_packed(&letters) {
            return Err(PartitionError::NotPacked);
        }
        Ok(Self::from_word(&PackedWord::new(letters).unwrap()))
    }

    /// Build from blocks of 1-based elements forming a partition of `[n]`.
    pub fn from_blocks(blocks: &[Vec<usize>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut word = vec![0u8; n];
        let mut order: Vec<usize> = (0..blocks.len()).collect();
        order.sort_by_key(|&b| blocks[b].iter().min().copied().unwrap_or(usize::MAX));
        for (num, &b) in order.iter().enumerate() {
            for &x in &blocks[b] {
                word[x - 1] = (num + 1) as u8;
            }
        }
        SetPartition { word: PackedWord::new(word).expect("blocks partition [n]") }
    }

    pub fn word(&self) -> &PackedWord {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Blocks as sorted lists of 1-based elements, ordered by minima.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let m = self.word.max_letter() as usize;
        let mut blocks = vec![Vec::new(); m];
        for (i, &a) in self.word.letters().iter().enumerate() {
            blocks[(a - 1) as usize].push(i + 1);
        }
        blocks
    }

    /// Arcs: pairs of consecutive elements within each block.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for block in self.blocks() {
            for w in block.windows(2) {
                arcs.push((w[0], w[1]));
            }
        }
        arcs.sort_unstable();
        arcs
    }

    /// Restriction to the interval `[lo, hi]` (1-based, inclusive),
    /// relabeled onto an initial segment.
    pub fn restrict(&self, lo: usize, hi: usize) -> SetPartition {
        let blocks: Vec<Vec<usize>> = self
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().filter(|&x| lo <= x && x <= hi).map(|x| x - lo + 1).collect())
            .filter(|b: &Vec<usize>| !b.is_empty())
            .collect();
        SetPartition::from_blocks(&blocks)
    }

    /// One denesting pass target: the first applicable split in the scan
    /// order (smallest outer right endpoint `l`, then smallest `i`).
    fn find_split(&self) -> Option<(usize, usize)> {
        self.splits().into_iter().min()
    }

    /// All applicable splits, as arcs `(l, i)` keyed for scanning.
    fn splits(&self) -> Vec<(usize, usize)> {
        let blocks = self.blocks();
        let mut found = Vec::new();
        for (b2, outer) in blocks.iter().enumerate() {
            for w in outer.windows(2) {
                let (i, l) = (w[0], w[1]);
                for (b1, inner) in blocks.iter().enumerate() {
                    if b1 == b2 {
                        continue;
                    }
                    let inside = inner.iter().filter(|&&x| i < x && x < l).count();
                    if inside >= 2 {
                        found.push((l, i));
                        break;
                    }
                }
            }
        }
        found
    }

    fn split_at(&self, i: usize, l: usize) -> SetPartition {
        let mut blocks = self.blocks();
        let idx = blocks.iter().position(|b| b.contains(&i) && b.contains(&l)).unwrap();
        let block = blocks.remove(idx);
        let (left, right): (Vec<usize>, Vec<usize>) = block.into_iter().partition(|&x| x <= i);
        blocks.push(left);
        blocks.push(right);
        SetPartition::from_blocks(&blocks)
    }

    /// Iterate the splitting rule to its fixed point: whenever two
    /// elements of one block lie strictly between consecutive elements
    /// `i < l` of another block, split the latter between `i` and `l`.
    pub fn denest(&self) -> SetPartition {
        let mut cur = self.clone();
        while let Some((l, i)) = cur.find_split() {
            cur = cur.split_at(i, l);
        }
        cur
    }

    pub fn is_nonnesting(&self) -> bool {
        self.splits().is_empty()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// All set partitions of `[n]` (restricted growth words), canonical order.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(n: usize, max: u8, word: &mut Vec<u8>, out: &mut Vec<SetPartition>) {
        if word.len() == n {
            out.push(SetPartition { word: PackedWord::new(word.clone()).unwrap() });
            return;
        }
        for a in 1..=max + 1 {
            word.push(a);
            rec(n, max.max(a), word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All nonnesting partitions of `[n]`; there are Catalan(n) of them.
pub fn nonnesting_partitions(n: usize) -> Vec<SetPartition> {
    set_partitions(n).into_iter().filter(|p| p.is_nonnesting()).collect()
}

/// A Young diagram contained in the staircase `(n-1, ..., 2, 1)`,
/// drawn in the cells `(i, j)` with `1 <= i < j <= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StaircaseDiagram {
    parts: Vec<u8>,
    ambient: usize,
}

impl StaircaseDiagram {
    pub fn new(mut parts: Vec<u8>, ambient: usize) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for r in 0..parts.len() {
            if r + 1 > ambient || parts[r] as usize > ambient - r - 1 {
                return Err(PartitionError::NotInStaircase(ambient));
            }
            if r > 0 && parts[r] > parts[r - 1] {
                return Err(PartitionError::NotInStaircase(ambient));
            }
        }
        Ok(StaircaseDiagram { parts, ambient })
    }

    pub fn empty(ambient: usize) -> Self {
        StaircaseDiagram { parts: Vec::new(), ambient }
    }

    pub fn staircase(ambient: usize) -> Self {
        let parts = (1..ambient).rev().map(|k| k as u8).collect();
        StaircaseDiagram { parts, ambient }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Row length for the row of cells `(., j)`; row `r` holds `j = n+1-r`.
    pub fn row_for_j(&self, j: usize) -> usize {
        let r = self.ambient + 1 - j;
        self.parts.get(r - 1).map(|&p| p as usize).unwrap_or(0)
    }

    /// Cells `(i, j)` of the diagram, with `i < j`.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &len) in self.parts.iter().enumerate() {
            let j = self.ambient - r;
            for i in 1..=len as usize {
                out.push((i, j));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i < j && j <= self.ambient && i <= self.row_for_j(j)
    }

    /// Cell-wise containment (same ambient required).
    pub fn contains(&self, other: &StaircaseDiagram) -> Result<bool, PartitionError> {
        if self.ambient != other.ambient {
            return Err(PartitionError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(other
            .parts
            .iter()
            .enumerate()
            .all(|(r, &p)| self.parts.get(r).map(|&q| q >= p).unwrap_or(p == 0)))
    }

    /// Outer corners: cells with no neighbor to the right or below.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &len) in self.parts.iter().enumerate() {
            if len == 0 {
                continue;
            }
            let below = self.parts.get(r + 1).copied().unwrap_or(0);
            if below < len {
                let j = self.ambient - r;
                out.push((len as usize, j));
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for StaircaseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})@{}", parts.join(","), self.ambient)
    }
}

impl fmt::Debug for StaircaseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The bijection sending a nonnesting partition to the diagram whose
/// corners are its arcs.
pub fn eta(pi: &SetPartition) -> Result<StaircaseDiagram, PartitionError> {
    if !pi.is_nonnesting() {
        return Err(PartitionError::Nesting(pi.to_string()));
    }
    let n = pi.n();
    let arcs = pi.arcs();
    let mut parts = Vec::new();
    for j in (2..=n).rev() {
        let len = arcs.iter().filter(|&&(_, b)| b <= j).map(|&(a, _)| a).max().unwrap_or(0);
        parts.push(len as u8);
    }
    StaircaseDiagram::new(parts, n)
}

/// Inverse of [`eta`]: merge the corner cells of the diagram, read as
/// arcs, into blocks.
pub fn eta_inverse(d: &StaircaseDiagram) -> SetPartition {
    let n = d.ambient();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (a, b) in d.corners() {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 1..=n {
        let r = find(&mut parent, x);
        blocks.entry(r).or_default().push(x);
    }
    let blocks: Vec<Vec<usize>> = blocks.into_values().collect();
    SetPartition::from_blocks(&blocks)
}

/// Diagram-containment order on nonnesting partitions.
pub fn nn_leq(a: &SetPartition, b: &SetPartition) -> Result<bool, PartitionError> {
    eta(b)?.contains(&eta(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(digits: &str) -> SetPartition {
        SetPartition::from_letters(digits.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    fn catalan(n: usize) -> usize {
        let mut c = vec![0usize; n + 1];
        c[0] = 1;
        for i in 1..=n {
            c[i] = (0..i).map(|k| c[k] * c[i - 1 - k]).sum();
        }
        c[n]
    }

    #[test]
    fn canonical_form() {
        // {{1,4},{2,5},{3}} is represented by 12312
        let p = SetPartition::from_blocks(&[vec![2, 5], vec![3], vec![1, 4]]);
        assert_eq!(p.to_string(), "12312");
        let q = SetPartition::from_word(&crate::words::pack(&[3, 1, 2, 3, 1]));
        assert_eq!(q.to_string(), "12312");
    }

    #[test]
    fn denest_examples() {
        assert_eq!(sp("1221").denest(), sp("1223"));
        // every partition of size <= 3 is fixed
        for n in 0..=3 {
            for p in set_partitions(n) {
                assert_eq!(p.denest(), p);
            }
        }
        // the unique non-fixed partition of size 4 is 1221
        let moved: Vec<SetPartition> = set_partitions(4)
            .into_iter()
            .filter(|p| p.denest() != *p)
            .collect();
        assert_eq!(moved, vec![sp("1221")]);
    }

    #[test]
    fn denest_larger_examples() {
        // 12341352 = {1,5}{2,8}{3,6}{4}{7}: the pair {3,6} nests inside
        // the arc (2,8), which splits
        assert_eq!(sp("12341352").denest(), sp("12341356"));
        // 12341312 = {1,5,7}{2,8}{3,6}{4}: only the arc (2,8) splits;
        // (5,7) survives since no block has two elements inside it
        assert_eq!(sp("12341312").denest(), sp("12341315"));
    }

    #[test]
    fn denest_is_idempotent_and_fixed_points_are_catalan() {
        for n in 0..=5 {
            let mut fixed = 0;
            for p in set_partitions(n) {
                let d = p.denest();
                assert_eq!(d.denest(), d);
                assert!(d.is_nonnesting());
                if d == p {
                    fixed += 1;
                }
                // the result refines the input: each block of d lies in a block of p
                for block in d.blocks() {
                    let target = p.word().letters()[block[0] - 1];
                    assert!(block.iter().all(|&x| p.word().letters()[x - 1] == target));
                }
            }
            assert_eq!(fixed, catalan(n));
            assert_eq!(nonnesting_partitions(n).len(), catalan(n));
        }
    }

    #[test]
    fn denest_commutes_with_interval_restriction() {
        for n in 0..=6 {
            for p in set_partitions(n) {
                let d = p.denest();
                for lo in 1..=n {
                    for hi in lo..=n {
                        assert_eq!(
                            p.restrict(lo, hi).denest(),
                            d.restrict(lo, hi),
                            "restriction [{},{}] of {}",
                            lo,
                            hi,
                            p
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn denest_is_confluent_across_scan_orders() {
        for n in 0..=6 {
            for p in set_partitions(n) {
                let canonical = p.denest();
                // largest-first scan order
                let mut cur = p.clone();
                while let Some(&(l, i)) = cur.splits().iter().max() {
                    cur = cur.split_at(i, l);
                }
                assert_eq!(cur, canonical);
            }
        }
    }

    #[test]
    fn eta_worked_example() {
        // {{1,3},{2,4},{5}} <-> (2,2,1) in ambient 5
        let p = SetPartition::from_blocks(&[vec![1, 3], vec![2, 4], vec![5]]);
        let d = eta(&p).unwrap();
        assert_eq!(d, StaircaseDiagram::new(vec![2, 2, 1], 5).unwrap());
        assert_eq!(eta_inverse(&d), p);
        assert_eq!(d.corners(), vec![(1, 3), (2, 4)]);
    }

    #[test]
    fn eta_degenerate_cases() {
        let singletons = sp("12345");
        assert_eq!(eta(&singletons).unwrap(), StaircaseDiagram::empty(5));
        assert!(eta(&sp("1221")).is_err());
        // single block = full chain of arcs
        let chain = sp("11111");
        let d = eta(&chain).unwrap();
        assert_eq!(d.corners(), vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn eta_is_a_bijection_up_to_n6() {
        for n in 1..=6 {
            let nn = nonnesting_partitions(n);
            let mut images = std::collections::BTreeSet::new();
            for p in &nn {
                let d = eta(p).unwrap();
                assert_eq!(eta_inverse(&d), *p);
                images.insert(d);
            }
            assert_eq!(images.len(), catalan(n));
        }
    }

    #[test]
    fn nn_order_basics() {
        let pi = sp("12123");
        assert!(nn_leq(&sp("12345"), &pi).unwrap());
        assert!(nn_leq(&pi, &pi).unwrap());
        assert!(!nn_leq(&sp("11111"), &pi).unwrap());
    }

    #[test]
    fn staircase_validation() {
        assert!(StaircaseDiagram::new(vec![4, 1], 5).is_ok());
        assert!(StaircaseDiagram::new(vec![5, 1], 5).is_err());
        assert!(StaircaseDiagram::new(vec![1, 2], 5).is_err());
        assert_eq!(StaircaseDiagram::staircase(4).parts(), &[3, 2, 1]);
    }
}
