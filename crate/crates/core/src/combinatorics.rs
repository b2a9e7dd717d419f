//! Compositions, split-point subsets, run decompositions and the shuffle
//! combinatorics that index every product and coproduct formula in the crate.
//!
//! A composition `α` of `n` corresponds to the subset `set(α) ⊆ [n-1]` of its
//! partial sums. [`SubsetLabel`] carries such a subset together with `n`, so the
//! two representations convert losslessly.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree. Subsets of `[n-1]` therefore hold at most 63
/// split points, and shuffle selectors `A ⊆ [m+n]` stay below bit 128.
pub const MAX_DEGREE: u32 = 64;

/// A finite set of positive integers below 128, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet(u128);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    pub fn from_bits(bits: u128) -> Self {
        BitSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        if hi < lo {
            return BitSet::EMPTY;
        }
        debug_assert!(hi < 128);
        let width = hi - lo + 1;
        let mask = if width >= 128 { u128::MAX } else { (1u128 << width) - 1 };
        BitSet(mask << lo)
    }

    /// `[k] = {1, ..., k}`.
    pub fn range(k: u32) -> Self {
        BitSet::interval(1, k)
    }

    pub fn try_from_elems<I: IntoIterator<Item = u32>>(elems: I) -> Result<Self> {
        let mut bits = 0u128;
        for e in elems {
            if e == 0 || e >= 128 {
                return Err(Error::SubsetBound { element: e, bound: 127 });
            }
            bits |= 1u128 << e;
        }
        Ok(BitSet(bits))
    }

    pub fn contains(self, e: u32) -> bool {
        e < 128 && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: u32) {
        assert!(e > 0 && e < 128, "bit set element {e} out of range");
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: u32) {
        if e < 128 {
            self.0 &= !(1u128 << e);
        }
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        BitSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        BitSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        BitSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside `[k]`.
    pub fn complement_in(self, k: u32) -> Self {
        BitSet::range(k).difference(self)
    }

    /// `{s - k : s ∈ self, s > k}`.
    pub fn shift_down(self, k: u32) -> Self {
        BitSet((self.0 >> k) & !1)
    }

    /// `{s + k : s ∈ self}`.
    pub fn shift_up(self, k: u32) -> Self {
        BitSet(self.0 << k)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros();
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// The `x`-th smallest elements of `self` for `x ∈ positions` (1-based).
    pub fn select(self, positions: BitSet) -> BitSet {
        let sorted: Vec<u32> = self.iter().collect();
        let mut out = BitSet::EMPTY;
        for x in positions.iter() {
            out.insert(sorted[(x - 1) as usize]);
        }
        out
    }

    /// Positions of the elements of `sub` within the ascending listing of
    /// `self`; inverse of [`BitSet::select`].
    pub fn positions_of(self, sub: BitSet) -> BitSet {
        let mut out = BitSet::EMPTY;
        for (i, e) in self.iter().enumerate() {
            if sub.contains(e) {
                out.insert(i as u32 + 1);
            }
        }
        out
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = BitSet> {
        let full = self.0;
        let mut cur = Some(0u128);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some((s.wrapping_sub(full)) & full) };
            Some(BitSet(s))
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// All `A ∈ binom([k], n)`, in increasing bit order.
pub fn subsets_of_size(k: u32, n: u32) -> impl Iterator<Item = BitSet> {
    // Masks are enumerated with element e at bit e - 1 and shifted on output.
    let mut cur: Option<u128> = if n > k {
        None
    } else if n == 0 {
        Some(0)
    } else {
        Some((1u128 << n) - 1)
    };
    let limit: u128 = BitSet::range(k).bits() >> 1;
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 {
            None
        } else {
            // Gosper's hack.
            let c = s & s.wrapping_neg();
            let (r, overflow) = s.overflowing_add(c);
            let next = (((r ^ s) >> 2) / c) | r;
            if overflow || next & !limit != 0 {
                None
            } else {
                Some(next)
            }
        };
        Some(BitSet(s << 1))
    })
}

/// A subset of `[n-1]` tagged with its ambient size `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubsetLabel {
    ambient: u32,
    members: BitSet,
}

impl SubsetLabel {
    pub fn new(ambient: u32, members: BitSet) -> Result<Self> {
        if ambient > MAX_DEGREE {
            return Err(Error::SubsetBound { element: ambient, bound: MAX_DEGREE });
        }
        if !members.is_subset(BitSet::range(ambient.saturating_sub(1))) {
            return Err(Error::NotASubset { subset: members.to_string(), ambient_max: ambient as i64 - 1 });
        }
        Ok(SubsetLabel { ambient, members })
    }

    pub fn from_elems<I: IntoIterator<Item = u32>>(ambient: u32, elems: I) -> Result<Self> {
        SubsetLabel::new(ambient, BitSet::try_from_elems(elems)?)
    }

    pub fn empty(ambient: u32) -> Self {
        SubsetLabel { ambient, members: BitSet::EMPTY }
    }

    pub fn full(ambient: u32) -> Self {
        SubsetLabel { ambient, members: BitSet::range(ambient.saturating_sub(1)) }
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn members(&self) -> BitSet {
        self.members
    }

    pub fn len(&self) -> u32 {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.members.contains(e)
    }

    /// `[n-1] ∖ S`.
    pub fn complement(&self) -> Self {
        SubsetLabel { ambient: self.ambient, members: self.members.complement_in(self.ambient.saturating_sub(1)) }
    }

    /// All subsets of `[n-1]`, in increasing bit order.
    pub fn all(ambient: u32) -> impl Iterator<Item = SubsetLabel> {
        BitSet::range(ambient.saturating_sub(1)).subsets().map(move |members| SubsetLabel { ambient, members })
    }
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidArgument(format!("composition part {p} is not positive")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(n)`, or the empty composition for `n = 0`.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Composition::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: u32) -> Self {
        Composition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Near-concatenation `α ⊙ β`: concatenation with the two boundary parts fused.
    pub fn near_concat(&self, other: &Self) -> Self {
        near_concat(self, other)
    }

    /// `α^c = comp([n-1] ∖ set(α))`.
    pub fn complement(&self) -> Self {
        complement(self)
    }

    /// Parts sorted in weakly decreasing order.
    pub fn sorted_parts(&self) -> Vec<u32> {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// Every composition of `n`, in lexicographic order.
    pub fn all_of(n: u32) -> Vec<Composition> {
        let mut out: Vec<Composition> = SubsetLabel::all(n).map(|s| comp_of_set(&s)).collect();
        out.sort();
        out
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    /// Accepts `(1,3,2)`, `1,3,2`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("`{p}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// `comp(S) = (s_1, s_2 - s_1, ..., n - s_i)`.
pub fn comp_of_set(s: &SubsetLabel) -> Composition {
    let n = s.ambient();
    if n == 0 {
        return Composition::empty();
    }
    let mut parts = Vec::with_capacity(s.len() as usize + 1);
    let mut prev = 0;
    for e in s.members().iter() {
        parts.push(e - prev);
        prev = e;
    }
    parts.push(n - prev);
    Composition(parts)
}

/// `comp(S)` for a raw bit set `S ⊆ [n-1]`.
///
/// Panics if `S` is not contained in `[n-1]`.
pub fn comp_of_bits(n: u32, s: BitSet) -> Composition {
    let label = SubsetLabel::new(n, s).expect("split points lie inside [n-1]");
    comp_of_set(&label)
}

/// `set(α) = {α_1, α_1 + α_2, ...}` inside `[|α| - 1]`.
pub fn set_of_comp(alpha: &Composition) -> SubsetLabel {
    let mut members = BitSet::EMPTY;
    let mut acc = 0;
    if let Some((_, init)) = alpha.0.split_last() {
        for p in init {
            acc += p;
            members.insert(acc);
        }
    }
    SubsetLabel { ambient: alpha.size(), members }
}

pub fn complement(alpha: &Composition) -> Composition {
    comp_of_set(&set_of_comp(alpha).complement())
}

pub fn near_concat(alpha: &Composition, beta: &Composition) -> Composition {
    match (alpha.0.split_last(), beta.0.split_first()) {
        (None, _) => beta.clone(),
        (_, None) => alpha.clone(),
        (Some((&a_last, a_init)), Some((&b_first, b_tail))) => {
            let mut parts = a_init.to_vec();
            parts.push(a_last + b_first);
            parts.extend_from_slice(b_tail);
            Composition(parts)
        }
    }
}

/// Maximal runs of consecutive integers of a set, ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    /// Closed intervals `(min, max)`.
    pub runs: Vec<(u32, u32)>,
}

impl RunDecomposition {
    pub fn of(set: BitSet) -> Self {
        let mut runs: Vec<(u32, u32)> = Vec::new();
        for e in set.iter() {
            match runs.last_mut() {
                Some(last) if last.1 + 1 == e => last.1 = e,
                _ => runs.push((e, e)),
            }
        }
        RunDecomposition { runs }
    }

    pub fn maxima(&self) -> BitSet {
        let mut out = BitSet::EMPTY;
        for &(_, hi) in &self.runs {
            out.insert(hi);
        }
        out
    }

    /// Run lengths as a composition.
    pub fn lengths(&self) -> Composition {
        Composition(self.runs.iter().map(|&(lo, hi)| hi - lo + 1).collect())
    }
}

/// The markers `c_1(A)`, `c_2(A)` and `c(A) = c_1(A) ⊔ c_2(A)` of `A ⊆ [k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunMarkers {
    pub c1: BitSet,
    pub c2: BitSet,
    pub c: BitSet,
}

pub fn run_markers(a: BitSet, k: u32) -> RunMarkers {
    let mut c1 = RunDecomposition::of(a).maxima();
    let mut c2 = RunDecomposition::of(a.complement_in(k)).maxima();
    c1.remove(k);
    c2.remove(k);
    RunMarkers { c1, c2, c: c1.union(c2) }
}

fn check_selector(i: &SubsetLabel, j: &SubsetLabel, a: BitSet) -> Result<(u32, u32)> {
    let (m, n) = (i.ambient(), j.ambient());
    if m + n > MAX_DEGREE {
        return Err(Error::SubsetBound { element: m + n, bound: MAX_DEGREE });
    }
    if !a.is_subset(BitSet::range(m + n)) {
        return Err(Error::NotASubset { subset: a.to_string(), ambient_max: (m + n) as i64 });
    }
    if a.len() != n {
        return Err(Error::SelectorSize { got: a.len() as usize, expected: n as usize });
    }
    Ok((m, n))
}

/// The `A`-preshuffle `I #_A J = (A^c)_I ⊔ A_J`, read inside `[m+n-1]`.
pub fn preshuffle(i: &SubsetLabel, j: &SubsetLabel, a: BitSet) -> Result<SubsetLabel> {
    let (m, n) = check_selector(i, j, a)?;
    let ac = a.complement_in(m + n);
    let members = ac.select(i.members()).union(a.select(j.members()));
    SubsetLabel::new(m + n, members)
}

/// The `A`-shuffle `I ⧢_A J = c_1(A) ⊔ ((I #_A J) ∖ c(A))`.
///
/// With `m = 0` or `n = 0` the other subset is returned unchanged.
pub fn a_shuffle(i: &SubsetLabel, j: &SubsetLabel, a: BitSet) -> Result<SubsetLabel> {
    let (m, n) = check_selector(i, j, a)?;
    if m == 0 {
        return Ok(*j);
    }
    if n == 0 {
        return Ok(*i);
    }
    let pre = preshuffle(i, j, a)?;
    let markers = run_markers(a, m + n);
    SubsetLabel::new(m + n, markers.c1.union(pre.members().difference(markers.c)))
}

/// Weights of all overlapping shuffles (quasi-shuffles) of `α` and `β`, with
/// multiplicity. These are the coefficients `e^γ_{α,β}` in `M_α M_β`.
pub fn overlapping_shuffles(alpha: &Composition, beta: &Composition) -> BTreeMap<Composition, u64> {
    fn rec(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut BTreeMap<Composition, u64>) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            *out.entry(Composition(w)).or_insert(0) += 1;
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], prefix, out);
        prefix.pop();
        prefix.push(a[0] + b[0]);
        rec(&a[1..], &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = BTreeMap::new();
    rec(&alpha.0, &beta.0, &mut Vec::new(), &mut out);
    out
}

/// `Des(w) = {i : w_i > w_{i+1}}` inside `[|w| - 1]`.
pub fn descent_set(w: &[u32]) -> SubsetLabel {
    let mut members = BitSet::EMPTY;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            members.insert(i as u32);
        }
    }
    SubsetLabel { ambient: w.len() as u32, members }
}

/// Standardization: replace letters by their ranks, ties broken left to right.
pub fn standardize(w: &[u32]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    out
}

/// Place `v` at the positions of `A` and `u` at the remaining positions.
pub fn shuffle_at(u: &[u32], v: &[u32], a: BitSet) -> Vec<u32> {
    let total = (u.len() + v.len()) as u32;
    let (mut ui, mut vi) = (u.iter(), v.iter());
    (1..=total).map(|p| if a.contains(p) { *vi.next().unwrap() } else { *ui.next().unwrap() }).collect()
}

/// The multiset `u ⧢ v[m]`, where `v[m]` adds `m` to every letter of `v`.
pub fn shifted_shuffle(u: &[u32], v: &[u32], m: u32) -> BTreeMap<Vec<u32>, u64> {
    let shifted: Vec<u32> = v.iter().map(|x| x + m).collect();
    let total = (u.len() + v.len()) as u32;
    let mut out = BTreeMap::new();
    for a in subsets_of_size(total, v.len() as u32) {
        *out.entry(shuffle_at(u, &shifted, a)).or_insert(0) += 1;
    }
    out
}

/// A permutation of `[n]` with descent set exactly `S`: the blocks of
/// `comp(S)` are filled with increasing runs, the last block receiving the
/// smallest letters.
pub fn descent_representative(s: &SubsetLabel) -> Vec<u32> {
    let comp = comp_of_set(s);
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(comp.len());
    let mut next = 1;
    for &p in comp.parts().iter().rev() {
        blocks.push((next..next + p).collect());
        next += p;
    }
    blocks.into_iter().rev().flatten().collect()
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: u32) -> Vec<Vec<u32>> {
    fn rec(cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x as u32 + 1);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n as usize], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ambient: u32, e: &[u32]) -> SubsetLabel {
        SubsetLabel::from_elems(ambient, e.iter().copied()).unwrap()
    }

    fn bits(e: &[u32]) -> BitSet {
        BitSet::try_from_elems(e.iter().copied()).unwrap()
    }

    fn comp(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn comp_and_set_examples() {
        assert_eq!(comp_of_set(&set(6, &[1, 4])), comp(&[1, 3, 2]));
        assert_eq!(comp_of_set(&set(5, &[])), comp(&[5]));
        assert_eq!(comp_of_set(&set(5, &[1, 2, 3, 4])), comp(&[1, 1, 1, 1, 1]));
        assert_eq!(comp_of_set(&SubsetLabel::empty(0)), Composition::empty());
        assert_eq!(set_of_comp(&comp(&[1, 3, 2])), set(6, &[1, 4]));
        assert_eq!(set_of_comp(&comp(&[4])), set(4, &[]));
        assert_eq!(set_of_comp(&comp(&[1, 1, 1])), set(3, &[1, 2]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&comp(&[1, 3, 2])), comp(&[2, 1, 2, 1]));
        assert_eq!(complement(&comp(&[4])), comp(&[1, 1, 1, 1]));
        assert_eq!(complement(&Composition::empty()), Composition::empty());
    }

    #[test]
    fn near_concat_examples() {
        assert_eq!(near_concat(&comp(&[1, 1]), &comp(&[2, 2])), comp(&[1, 3, 2]));
        assert_eq!(near_concat(&comp(&[1, 3, 1]), &comp(&[1])), comp(&[1, 3, 2]));
        assert_eq!(near_concat(&Composition::empty(), &comp(&[1, 3, 2])), comp(&[1, 3, 2]));
        assert_eq!(near_concat(&comp(&[2]), &Composition::empty()), comp(&[2]));
    }

    #[test]
    fn run_marker_examples() {
        let r = run_markers(bits(&[1, 2, 5, 7, 8, 9]), 9);
        assert_eq!((r.c1, r.c2, r.c), (bits(&[2, 5]), bits(&[4, 6]), bits(&[2, 4, 5, 6])));
        let r = run_markers(bits(&[1, 3, 4]), 7);
        assert_eq!((r.c1, r.c2), (bits(&[1, 4]), bits(&[2])));
        // A^c = [6] is a single run whose maximum is the removed endpoint.
        let r = run_markers(BitSet::EMPTY, 6);
        assert_eq!((r.c1, r.c2, r.c), (BitSet::EMPTY, BitSet::EMPTY, BitSet::EMPTY));
        let r = run_markers(bits(&[6]), 6);
        assert_eq!((r.c1, r.c2), (BitSet::EMPTY, bits(&[5])));
    }

    #[test]
    fn preshuffle_examples() {
        let p = preshuffle(&set(4, &[2, 3]), &set(3, &[2]), bits(&[1, 3, 4])).unwrap();
        assert_eq!(p, set(7, &[3, 5, 6]));
        let p = preshuffle(&set(2, &[1]), &set(3, &[2]), bits(&[1, 2, 3])).unwrap();
        assert_eq!(p, set(5, &[2, 4]));
        let p = preshuffle(&set(3, &[]), &set(2, &[]), bits(&[2, 5])).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn a_shuffle_examples() {
        let s = a_shuffle(&set(4, &[2, 3]), &set(3, &[2]), bits(&[1, 3, 4])).unwrap();
        assert_eq!(s, set(7, &[1, 3, 4, 5, 6]));
        // m = n = 1: A = {2} has no marker, A = {1} marks 1.
        assert!(a_shuffle(&set(1, &[]), &set(1, &[]), bits(&[2])).unwrap().is_empty());
        assert_eq!(a_shuffle(&set(1, &[]), &set(1, &[]), bits(&[1])).unwrap(), set(2, &[1]));
        for (m, n) in [(1, 1), (2, 3), (4, 2)] {
            let a = BitSet::range(n);
            let s = a_shuffle(&SubsetLabel::empty(m), &SubsetLabel::empty(n), a).unwrap();
            assert_eq!(s, set(m + n, &[n]));
        }
    }

    #[test]
    fn a_shuffle_degenerate_arguments() {
        let j = set(4, &[1, 3]);
        assert_eq!(a_shuffle(&SubsetLabel::empty(0), &j, BitSet::range(4)).unwrap(), j);
        assert_eq!(a_shuffle(&j, &SubsetLabel::empty(0), BitSet::EMPTY).unwrap(), j);
    }

    #[test]
    fn preshuffle_rejects_bad_selectors() {
        let i = set(4, &[2]);
        let j = set(3, &[1]);
        assert!(matches!(preshuffle(&i, &j, bits(&[1, 2])), Err(Error::SelectorSize { .. })));
        assert!(matches!(preshuffle(&i, &j, bits(&[1, 2, 8])), Err(Error::NotASubset { .. })));
    }

    #[test]
    fn subset_label_bounds() {
        assert!(SubsetLabel::from_elems(4, [4]).is_err());
        assert!(SubsetLabel::new(MAX_DEGREE + 1, BitSet::EMPTY).is_err());
        assert!(SubsetLabel::from_elems(64, [63]).is_ok());
    }

    #[test]
    fn overlapping_shuffle_examples() {
        let e = overlapping_shuffles(&comp(&[1]), &comp(&[1]));
        assert_eq!(e.get(&comp(&[1, 1])), Some(&2));
        assert_eq!(e.get(&comp(&[2])), Some(&1));
        assert_eq!(e.len(), 2);
        let e = overlapping_shuffles(&Composition::empty(), &comp(&[2, 1]));
        assert_eq!(e.into_iter().collect::<Vec<_>>(), vec![(comp(&[2, 1]), 1)]);
        let e = overlapping_shuffles(&comp(&[1, 1]), &comp(&[2]));
        let expect: BTreeMap<_, _> = [
            (comp(&[1, 1, 2]), 1),
            (comp(&[1, 2, 1]), 1),
            (comp(&[2, 1, 1]), 1),
            (comp(&[1, 3]), 1),
            (comp(&[3, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(e, expect);
    }

    #[test]
    fn word_tool_examples() {
        let sh = shifted_shuffle(&[1, 2], &[2, 1], 2);
        let words: Vec<Vec<u32>> = sh.keys().cloned().collect();
        let expect = vec![
            vec![1, 2, 4, 3],
            vec![1, 4, 2, 3],
            vec![1, 4, 3, 2],
            vec![4, 1, 2, 3],
            vec![4, 1, 3, 2],
            vec![4, 3, 1, 2],
        ];
        assert_eq!(words, expect);
        assert!(sh.values().all(|&c| c == 1));
        assert_eq!(descent_set(&[1, 4, 3, 2]), set(4, &[2, 3]));
        assert_eq!(standardize(&[3, 1, 2]), vec![3, 1, 2]);
        assert_eq!(standardize(&[7, 2, 9, 2]), vec![3, 1, 4, 2]);
    }

    #[test]
    fn descent_representative_has_requested_descents() {
        for n in 0..7 {
            for s in SubsetLabel::all(n) {
                let w = descent_representative(&s);
                assert_eq!(descent_set(&w), s);
                let mut sorted = w.clone();
                sorted.sort();
                assert_eq!(sorted, (1..=n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn subsets_of_size_counts() {
        for k in 0..9u32 {
            for n in 0..=k + 1 {
                let all: Vec<BitSet> = subsets_of_size(k, n).collect();
                let expect = (0..(1u32 << k)).filter(|m| m.count_ones() == n).count();
                assert_eq!(all.len(), expect, "k={k} n={n}");
                assert!(all.iter().all(|a| a.len() == n && a.is_subset(BitSet::range(k))));
            }
        }
    }

    #[test]
    fn select_and_positions_are_inverse() {
        let s = bits(&[2, 5, 6, 9]);
        let pos = bits(&[1, 3]);
        assert_eq!(s.select(pos), bits(&[2, 6]));
        assert_eq!(s.positions_of(bits(&[2, 6])), pos);
    }

    #[test]
    fn composition_parsing() {
        assert_eq!("(1,3,2)".parse::<Composition>().unwrap(), comp(&[1, 3, 2]));
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
        assert!("(1,0)".parse::<Composition>().is_err());
        assert!("(a)".parse::<Composition>().is_err());
    }
}
