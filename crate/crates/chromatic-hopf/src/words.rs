//! Packed words, permutations and compositions, together with packing,
//! standardization, biletter packing, the refinement orders and the
//! destandardization lattice.
//!
//! Letters are positive integers stored as `u8`; a word renders as a digit
//! string (`13132`) while its largest letter is at most 9, and
//! comma-separated otherwise.

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("word is not packed: {0:?}")]
    NotPacked(Vec<u8>),
    #[error("word is not a permutation: {0:?}")]
    NotPermutation(Vec<u8>),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("composition parts must be positive")]
    InvalidComposition,
}

fn render_word(letters: &[u8], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.iter().all(|&a| a <= 9) {
        for &a in letters {
            write!(f, "{}", a)?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = letters.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// True if every value `1..=max(w)` occurs in `w`.
pub fn is_packed(w: &[u8]) -> bool {
    let m = w.iter().copied().max().unwrap_or(0) as usize;
    let mut seen = vec![false; m];
    for &a in w {
        if a == 0 {
            return false;
        }
        seen[(a - 1) as usize] = true;
    }
    seen.into_iter().all(|s| s)
}

/// A word using every letter `1..=m` for some `m >= 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PackedWord(Vec<u8>);

impl PackedWord {
    pub fn new(letters: Vec<u8>) -> Result<Self, WordError> {
        if is_packed(&letters) {
            Ok(PackedWord(letters))
        } else {
            Err(WordError::NotPacked(letters))
        }
    }

    pub fn empty() -> Self {
        PackedWord(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter (0 for the empty word).
    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Mirror image.
    pub fn bar(&self) -> PackedWord {
        let mut v = self.0.clone();
        v.reverse();
        PackedWord(v)
    }

    /// Right action `u . sigma = u_{sigma(1)} ... u_{sigma(n)}`.
    pub fn act(&self, sigma: &Permutation) -> Result<PackedWord, WordError> {
        Ok(PackedWord(right_action(&self.0, sigma)?))
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_word(&self.0, f)
    }
}

impl fmt::Debug for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_word(&self.0, f)
    }
}

impl PartialOrd for PackedWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by length, then lexicographic.
impl Ord for PackedWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// A packed word with distinct letters, i.e. a bijection on `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(letters: Vec<u8>) -> Result<Self, WordError> {
        let n = letters.len();
        let mut seen = vec![false; n];
        for &a in &letters {
            if a == 0 || a as usize > n || seen[(a - 1) as usize] {
                return Err(WordError::NotPermutation(letters));
            }
            seen[(a - 1) as usize] = true;
        }
        Ok(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based position of the value `v`.
    pub fn position_of(&self, v: u8) -> usize {
        self.0.iter().position(|&a| a == v).expect("value in permutation")
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[(a - 1) as usize] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    /// Composition `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, WordError> {
        if self.len() != other.len() {
            return Err(WordError::LengthMismatch(self.len(), other.len()));
        }
        Ok(Permutation(other.0.iter().map(|&a| self.0[(a - 1) as usize]).collect()))
    }

    pub fn bar(&self) -> Permutation {
        let mut v = self.0.clone();
        v.reverse();
        Permutation(v)
    }

    pub fn as_packed(&self) -> PackedWord {
        PackedWord(self.0.clone())
    }

    /// Positions `i` (1-based) with `sigma_i > sigma_{i+1}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.0.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_word(&self.0, f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_word(&self.0, f)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u8>);

impl Composition {
    pub fn new(parts: Vec<u8>) -> Result<Self, WordError> {
        if parts.contains(&0) {
            return Err(WordError::InvalidComposition);
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Proper partial sums `{i_1, i_1+i_2, ...}`, excluding the weight.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut acc = 0usize;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p as usize;
            out.insert(acc);
        }
        out
    }

    pub fn maj(&self) -> usize {
        self.descent_set().into_iter().sum()
    }

    /// Composition of `n` with the given descent set.
    pub fn from_descents(n: usize, descents: &BTreeSet<usize>) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut prev = 0usize;
        for &d in descents.iter().filter(|&&d| d < n) {
            parts.push((d - prev) as u8);
            prev = d;
        }
        parts.push((n - prev) as u8);
        Composition(parts)
    }

    /// Conjugate composition: reverse of the complement.
    pub fn conjugate(&self) -> Composition {
        let n = self.weight();
        if n == 0 {
            return Composition::empty();
        }
        let des = self.descent_set();
        let complement: BTreeSet<usize> = (1..n).filter(|d| !des.contains(d)).collect();
        let mut parts = Composition::from_descents(n, &complement).0;
        parts.reverse();
        Composition(parts)
    }

    /// True if `self` refines `other` (descent set containment).
    pub fn refines(&self, other: &Composition) -> bool {
        self.weight() == other.weight()
            && other.descent_set().is_subset(&self.descent_set())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Order-preserving relabeling of the occurring letters onto `1..=r`.
pub fn pack(w: &[u8]) -> PackedWord {
    let mut present: Vec<u8> = w.to_vec();
    present.sort_unstable();
    present.dedup();
    PackedWord(
        w.iter()
            .map(|a| (present.binary_search(a).unwrap() + 1) as u8)
            .collect(),
    )
}

/// The unique permutation with the same inversions as `w`; equal letters
/// are ranked left to right.
pub fn standardize(w: &[u8]) -> Permutation {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0u8; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = (rank + 1) as u8;
    }
    Permutation(out)
}

/// Multiplicity vector of the letters of `pack(w)`.
pub fn evaluation(w: &[u8]) -> Composition {
    let p = pack(w);
    let m = p.max_letter() as usize;
    let mut counts = vec![0u8; m];
    for &a in p.letters() {
        counts[(a - 1) as usize] += 1;
    }
    Composition(counts)
}

/// Pack of the biletter word `(u_i, v_i)` under lexicographic order with
/// priority to the top letter `u`.
pub fn biletter_pack(u: &[u8], v: &[u8]) -> Result<PackedWord, WordError> {
    if u.len() != v.len() {
        return Err(WordError::LengthMismatch(u.len(), v.len()));
    }
    let mut pairs: Vec<(u8, u8)> = u.iter().copied().zip(v.iter().copied()).collect();
    pairs.sort_unstable();
    pairs.dedup();
    Ok(PackedWord(
        u.iter()
            .zip(v.iter())
            .map(|(&a, &b)| (pairs.binary_search(&(a, b)).unwrap() + 1) as u8)
            .collect(),
    ))
}

/// `w[i] = u[sigma(i)]`.
pub fn right_action(u: &[u8], sigma: &Permutation) -> Result<Vec<u8>, WordError> {
    if u.len() != sigma.len() {
        return Err(WordError::LengthMismatch(u.len(), sigma.len()));
    }
    Ok(sigma.letters().iter().map(|&a| u[(a - 1) as usize]).collect())
}

/// Mirror image of a word.
pub fn bar(w: &[u8]) -> Vec<u8> {
    let mut v = w.to_vec();
    v.reverse();
    v
}

/// True if `v` refines `u` (each block of `u` is a union of consecutive
/// blocks of `v`).
pub fn refines(v: &PackedWord, u: &PackedWord) -> Result<bool, WordError> {
    if v.len() != u.len() {
        return Err(WordError::LengthMismatch(v.len(), u.len()));
    }
    let v = v.letters();
    let u = u.letters();
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if v[i] == v[j] && u[i] != u[j] {
                return Ok(false);
            }
            if v[i] < v[j] && u[i] > u[j] {
                return Ok(false);
            }
            if v[i] > v[j] && u[i] < u[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All `v` with `u` finer than `v`, obtained by merging consecutive value
/// classes of `u`; there are `2^(max(u)-1)` of them.
pub fn coarsenings(u: &PackedWord) -> Vec<PackedWord> {
    let m = u.max_letter() as usize;
    if m == 0 {
        return vec![PackedWord::empty()];
    }
    let mut out = Vec::new();
    for cut in compositions(m) {
        // segment index for each value 1..=m
        let mut target = vec![0u8; m];
        let mut val = 0usize;
        for (seg, &width) in cut.parts().iter().enumerate() {
            for _ in 0..width {
                target[val] = (seg + 1) as u8;
                val += 1;
            }
        }
        out.push(PackedWord(
            u.letters().iter().map(|&a| target[(a - 1) as usize]).collect(),
        ));
    }
    out.sort();
    out
}

/// The set `{i in [1, n-1] : i+1 is to the right of i in sigma}`.
pub fn advances(sigma: &Permutation) -> BTreeSet<u8> {
    let n = sigma.len();
    let mut out = BTreeSet::new();
    for i in 1..n {
        if sigma.position_of(i as u8 + 1) > sigma.position_of(i as u8) {
            out.insert(i as u8);
        }
    }
    out
}

/// The packed word with standardization `sigma` indexed by the subset
/// `s` of `advances(sigma)`: the letter of `i+1` exceeds the letter of
/// `i` exactly when `i` is in `s` or `i` is not an advance.
pub fn dst_word_for_subset(sigma: &Permutation, s: &BTreeSet<u8>) -> PackedWord {
    let n = sigma.len();
    if n == 0 {
        return PackedWord::empty();
    }
    let adv = advances(sigma);
    let mut letter = vec![0u8; n + 1];
    letter[1] = 1;
    for i in 1..n {
        let step = if !adv.contains(&(i as u8)) || s.contains(&(i as u8)) { 1 } else { 0 };
        letter[i + 1] = letter[i] + step;
    }
    PackedWord(sigma.letters().iter().map(|&a| letter[a as usize]).collect())
}

/// Subset of `advances(std(u))` encoding `u` in the destandardization
/// lattice.
pub fn dst_subset(u: &PackedWord) -> BTreeSet<u8> {
    let sigma = standardize(u.letters());
    let adv = advances(&sigma);
    let mut out = BTreeSet::new();
    for &i in &adv {
        let li = u.letters()[sigma.position_of(i)];
        let li1 = u.letters()[sigma.position_of(i + 1)];
        if li1 == li + 1 {
            out.insert(i);
        }
    }
    out
}

fn subsets_of(base: &BTreeSet<u8>) -> Vec<BTreeSet<u8>> {
    let items: Vec<u8> = base.iter().copied().collect();
    let mut out = Vec::with_capacity(1 << items.len());
    for mask in 0u32..(1 << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect(),
        );
    }
    out
}

/// All packed words with standardization `sigma`, in canonical order;
/// there are `2^(#advances)` of them.
pub fn dst_words(sigma: &Permutation) -> Vec<PackedWord> {
    let mut out: Vec<PackedWord> = subsets_of(&advances(sigma))
        .iter()
        .map(|s| dst_word_for_subset(sigma, s))
        .collect();
    out.sort();
    out
}

/// True if `v` and `u` have the same standardized word and `v` refines `u`.
pub fn strongly_finer(v: &PackedWord, u: &PackedWord) -> Result<bool, WordError> {
    if v.len() != u.len() {
        return Err(WordError::LengthMismatch(v.len(), u.len()));
    }
    Ok(standardize(v.letters()) == standardize(u.letters()) && refines(v, u)?)
}

/// All words strongly finer than `u` (supersets in the boolean lattice).
pub fn strong_refinement_set(u: &PackedWord) -> Vec<PackedWord> {
    let sigma = standardize(u.letters());
    let base = dst_subset(u);
    let rest: BTreeSet<u8> =
        advances(&sigma).difference(&base).copied().collect();
    let mut out: Vec<PackedWord> = subsets_of(&rest)
        .into_iter()
        .map(|mut s| {
            s.extend(base.iter().copied());
            dst_word_for_subset(&sigma, &s)
        })
        .collect();
    out.sort();
    out
}

/// All words strongly coarser than `u` (subsets in the boolean lattice).
pub fn strong_coarsening_set(u: &PackedWord) -> Vec<PackedWord> {
    let sigma = standardize(u.letters());
    let base = dst_subset(u);
    let mut out: Vec<PackedWord> = subsets_of(&base)
        .into_iter()
        .map(|s| dst_word_for_subset(&sigma, &s))
        .collect();
    out.sort();
    out
}

/// All packed words of length `n`, in canonical order.
pub fn packed_words(n: usize) -> Vec<PackedWord> {
    // any letter up to n may appear; prune by the number of values
    // below the running maximum that are still missing
    fn rec(n: usize, used: u32, max: u8, word: &mut Vec<u8>, out: &mut Vec<PackedWord>) {
        if word.len() == n {
            out.push(PackedWord(word.clone()));
            return;
        }
        let slots = n - word.len();
        for a in 1..=n as u8 {
            let new_max = max.max(a);
            let new_used = used | 1 << (a - 1);
            let missing = new_max as u32 - new_used.count_ones();
            if missing < slots as u32 {
                word.push(a);
                rec(n, new_used, new_max, word, out);
                word.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    rec(n, 0, 0, &mut word, &mut out);
    out.sort();
    out
}

/// All permutations of `[n]`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut word = Vec::with_capacity(n);
    fn rec(n: usize, used: &mut Vec<bool>, word: &mut Vec<u8>, out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation(word.clone()));
            return;
        }
        for a in 0..n {
            if !used[a] {
                used[a] = true;
                word.push((a + 1) as u8);
                rec(n, used, word, out);
                word.pop();
                used[a] = false;
            }
        }
    }
    rec(n, &mut used, &mut word, &mut out);
    out
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(rest: usize, parts: &mut Vec<u8>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(parts.clone()));
            return;
        }
        for p in 1..=rest {
            parts.push(p as u8);
            rec(rest - p, parts, out);
            parts.pop();
        }
    }
    rec(n, &mut parts, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pw(digits: &str) -> PackedWord {
        PackedWord::new(digits.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    fn perm(digits: &str) -> Permutation {
        Permutation::new(digits.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    #[test]
    fn pack_examples() {
        assert_eq!(pack(&[2, 4, 2, 4, 3]), pw("13132"));
        assert_eq!(pack(&[1, 3, 1, 3, 2]), pw("13132"));
        assert_eq!(pack(&[1, 5, 1, 5, 4]), pw("13132"));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[1, 3, 1, 3, 2]), perm("14253"));
        assert_eq!(standardize(&[3, 2, 1]), perm("321"));
        // golden value from the definition-level oracle below
        assert_eq!(standardize(&[2, 1, 2, 2, 1, 1]), perm("415623"));
    }

    #[test]
    fn standardize_brute_force_oracle() {
        // rank (letter, position) pairs directly
        let w = [2u8, 1, 2, 2, 1, 1];
        let mut pairs: Vec<(u8, usize)> = w.iter().copied().zip(0..).collect();
        pairs.sort();
        let mut expected = vec![0u8; w.len()];
        for (rank, &(_, i)) in pairs.iter().enumerate() {
            expected[i] = rank as u8 + 1;
        }
        assert_eq!(standardize(&w).letters(), &expected[..]);
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(evaluation(&[1, 3, 1, 3, 2]), Composition::new(vec![2, 1, 2]).unwrap());
        assert_eq!(evaluation(&[1, 1, 1]), Composition::new(vec![3]).unwrap());
        assert_eq!(evaluation(&[1, 1, 2, 2, 2]), Composition::new(vec![2, 3]).unwrap());
    }

    #[test]
    fn biletter_pack_examples() {
        assert_eq!(
            biletter_pack(&[1, 2, 1, 2, 1, 1], &[2, 1, 2, 2, 1, 1]).unwrap(),
            pw("232411")
        );
        assert_eq!(
            biletter_pack(&[1, 1, 1, 1, 2, 2], &[2, 1, 1, 2, 1, 2]).unwrap(),
            pw("211234")
        );
        // constant bottom: ties broken by the top word
        assert_eq!(biletter_pack(pw("13132").letters(), &[7, 7, 7, 7, 7]).unwrap(), pw("13132"));
        assert!(biletter_pack(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&pw("312"), &pw("212")).unwrap());
        assert!(refines(&pw("213"), &pw("212")).unwrap());
        assert!(refines(&pw("2143"), &pw("2122")).unwrap());
        assert!(!refines(&pw("231"), &pw("212")).unwrap());
    }

    #[test]
    fn finer_than_212_and_2122() {
        let finer: Vec<PackedWord> = packed_words(3)
            .into_iter()
            .filter(|v| refines(v, &pw("212")).unwrap())
            .collect();
        assert_eq!(finer, vec![pw("212"), pw("213"), pw("312")]);

        let expected: Vec<PackedWord> = [
            "2122", "2123", "2132", "3122", "2133", "3123", "3132", "2134", "2143", "3124",
            "3142", "4123", "4132",
        ]
        .iter()
        .map(|s| pw(s))
        .collect();
        let mut expected = expected;
        expected.sort();
        let finer: Vec<PackedWord> = packed_words(4)
            .into_iter()
            .filter(|v| refines(v, &pw("2122")).unwrap())
            .collect();
        assert_eq!(finer, expected);
        for v in &finer {
            assert!(coarsenings(v).contains(&pw("2122")));
        }
    }

    #[test]
    fn coarsenings_examples() {
        let c = coarsenings(&pw("213"));
        assert_eq!(c.len(), 4);
        assert!(c.contains(&pw("213")) && c.contains(&pw("212")));
        assert_eq!(coarsenings(&pw("1")), vec![pw("1")]);
        // brute-force cross-check against the pairwise definition
        for u in packed_words(4) {
            let by_merge = coarsenings(&u);
            let by_filter: Vec<PackedWord> = packed_words(4)
                .into_iter()
                .filter(|v| refines(&u, v).unwrap())
                .collect();
            assert_eq!(by_merge, by_filter);
            assert_eq!(by_merge.len(), 1 << (u.max_letter() as usize - 1));
        }
    }

    #[test]
    fn strong_refinement_examples() {
        assert_eq!(
            strong_refinement_set(&pw("2122")),
            vec![pw("2122"), pw("2123"), pw("2133"), pw("2134")]
        );
        assert_eq!(strong_refinement_set(&pw("212")), vec![pw("212"), pw("213")]);
        assert!(!strongly_finer(&pw("312"), &pw("212")).unwrap());
        assert!(strongly_finer(&pw("213"), &pw("212")).unwrap());
    }

    #[test]
    fn advances_examples() {
        let a: Vec<u8> = advances(&perm("13425")).into_iter().collect();
        assert_eq!(a, vec![1, 3, 4]);
        assert_eq!(advances(&perm("1234")).len(), 3);
        assert!(advances(&perm("4321")).is_empty());
    }

    #[test]
    fn dst_words_examples() {
        let words = dst_words(&perm("13425"));
        assert_eq!(words.len(), 8);
        assert!(words.contains(&pw("13425")));
        assert!(words.contains(&pw("12212")));
        // golden 8-element lattice, frozen from the brute-force oracle below
        let expected: Vec<PackedWord> = [
            "12212", "12213", "12313", "12314", "13323", "13324", "13424", "13425",
        ]
        .iter()
        .map(|s| pw(s))
        .collect();
        assert_eq!(words, expected);

        assert_eq!(dst_words(&perm("321")), vec![pw("321")]);
        assert_eq!(
            dst_words(&perm("123")),
            vec![pw("111"), pw("112"), pw("122"), pw("123")]
        );
    }

    #[test]
    fn dst_words_brute_force_oracle() {
        for n in 0..=4 {
            let all = packed_words(n);
            for sigma in permutations(n) {
                let by_subsets = dst_words(&sigma);
                let by_filter: Vec<PackedWord> = all
                    .iter()
                    .filter(|u| standardize(u.letters()) == sigma)
                    .cloned()
                    .collect();
                assert_eq!(by_subsets, by_filter);
                assert_eq!(by_subsets.len(), 1 << advances(&sigma).len());
            }
        }
        // spot-check the n = 5 lattice used above
        let by_filter: Vec<PackedWord> = packed_words(5)
            .into_iter()
            .filter(|u| standardize(u.letters()) == perm("13425"))
            .collect();
        assert_eq!(dst_words(&perm("13425")), by_filter);
    }

    #[test]
    fn strong_interval_structure() {
        // strongly coarser words form an interval of the boolean order
        for u in packed_words(4) {
            let coarser = strong_coarsening_set(&u);
            let finer = strong_refinement_set(&u);
            assert!(coarser.contains(&u) && finer.contains(&u));
            let sub = dst_subset(&u);
            assert_eq!(coarser.len(), 1 << sub.len());
            let adv = advances(&standardize(u.letters()));
            assert_eq!(finer.len(), 1 << (adv.len() - sub.len()));
        }
    }

    #[test]
    fn right_action_examples() {
        let tau = perm("451623");
        assert_eq!(right_action(&[1, 1, 1, 1, 2, 2], &tau).unwrap(), vec![1, 2, 1, 2, 1, 1]);
        assert_eq!(right_action(&[2, 1, 1, 2, 3, 4], &tau).unwrap(), vec![2, 3, 2, 4, 1, 1]);
        let u = pw("13132");
        assert_eq!(u.act(&Permutation::identity(5)).unwrap(), u);
        let sigma = perm("35142");
        assert_eq!(u.act(&sigma).unwrap().act(&sigma.inverse()).unwrap(), u);
    }

    #[test]
    fn composition_statistics() {
        let i = Composition::new(vec![2, 1, 2]).unwrap();
        let des: Vec<usize> = i.descent_set().into_iter().collect();
        assert_eq!(des, vec![2, 3]);
        assert_eq!(i.maj(), 5);
        assert_eq!(Composition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
        assert_eq!(Composition::new(vec![2]).unwrap().conjugate().parts(), &[1, 1]);
        assert_eq!(Composition::new(vec![1, 1]).unwrap().conjugate().parts(), &[2]);
    }

    #[test]
    fn packed_word_counts_are_ordered_bell() {
        let counts: Vec<usize> = (1..=5).map(|n| packed_words(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 13, 75, 541]);
        assert_eq!(packed_words(0), vec![PackedWord::empty()]);
    }

    fn arb_word() -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(1u8..=5, 0..7)
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just(n).prop_perturb(move |n, mut rng| {
            let mut v: Vec<u8> = (1..=n as u8).collect();
            for i in (1..v.len()).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                v.swap(i, j);
            }
            Permutation::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn pack_is_idempotent(w in arb_word()) {
            let p = pack(&w);
            prop_assert_eq!(pack(p.letters()), p);
        }

        #[test]
        fn standardize_fixes_exactly_permutations(w in arb_word()) {
            let s = standardize(&w);
            let fixed = s.letters() == &w[..];
            let is_perm = Permutation::new(w.clone()).is_ok();
            prop_assert_eq!(fixed, is_perm);
        }

        #[test]
        fn biletter_pack_commutes_with_action(
            uw in prop::collection::vec(1u8..=4, 6),
            v in prop::collection::vec(1u8..=4, 6),
            tau in arb_perm(6),
        ) {
            // pack((u.tau) over v) = pack(u over (v.tau^-1)).tau
            let u = pack(&uw);
            let lhs = biletter_pack(u.act(&tau).unwrap().letters(), &v).unwrap();
            let v_tau_inv = right_action(&v, &tau.inverse()).unwrap();
            let rhs = biletter_pack(u.letters(), &v_tau_inv).unwrap().act(&tau).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
