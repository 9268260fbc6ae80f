//! Constructive bijections between the avoidance classes and classical
//! objects: set partitions, Dyck paths, colored Dyck paths and ordered trees.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::core::{avoids_all, contains_pattern, InvSeq, Pattern};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("input does not avoid 021")]
    NotAvoiding021,
    #[error("input does not avoid 011")]
    NotAvoiding011,
    #[error("input does not avoid 210")]
    NotAvoiding210,
    #[error("input does not avoid 201")]
    NotAvoiding201,
    #[error("input is not in the domain class of the map: {0}")]
    NotInDomainClass(&'static str),
    #[error("subsequence has fewer than two distinct values")]
    DegenerateSubsequence,
    #[error("not a Dyck path in east-step form")]
    InvalidDyckPath,
    #[error("colored path violates the outline class conditions")]
    NotInColoredClass,
    #[error("blocks do not partition 1..=n")]
    InvalidPartition,
    #[error("malformed tree literal")]
    BadTreeLiteral,
}

fn pat(s: &str) -> Pattern {
    s.parse().expect("static pattern")
}

/// A Dyck path in east-step form: weakly increasing heights with
/// `0 <= h_i <= i-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    heights: Vec<u32>,
}

impl DyckPath {
    pub fn new(heights: Vec<u32>) -> Result<Self, BijectionError> {
        for (i, &h) in heights.iter().enumerate() {
            if h as usize > i || (i > 0 && h < heights[i - 1]) {
                return Err(BijectionError::InvalidDyckPath);
            }
        }
        Ok(DyckPath { heights })
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Height of the last east step.
    pub fn last(&self) -> u32 {
        self.heights.last().copied().unwrap_or(0)
    }

    /// `cap(D) = n - h_n`.
    pub fn cap(&self) -> usize {
        self.heights.len() - self.last() as usize
    }

    /// Run lengths of constant height: the path climbs exactly at the
    /// partial sums of its type.
    pub fn type_of(&self) -> Vec<usize> {
        let mut t = Vec::new();
        let mut run = 0usize;
        for (i, &h) in self.heights.iter().enumerate() {
            run += 1;
            if i + 1 == self.heights.len() || self.heights[i + 1] != h {
                t.push(run);
                run = 0;
            }
        }
        t
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.heights.iter().map(|h| h.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepColor {
    Black,
    Red,
}

/// A Dyck path whose east steps carry a black/red color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredDyckPath {
    heights: Vec<u32>,
    colors: Vec<StepColor>,
}

impl ColoredDyckPath {
    pub fn new(heights: Vec<u32>, colors: Vec<StepColor>) -> Result<Self, BijectionError> {
        if heights.len() != colors.len() {
            return Err(BijectionError::InvalidDyckPath);
        }
        DyckPath::new(heights.clone())?;
        Ok(ColoredDyckPath { heights, colors })
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn colors(&self) -> &[StepColor] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Class condition for outlines: height-0 steps are red and the first
    /// step of each positive height is black.
    pub fn in_class_a(&self) -> bool {
        for i in 0..self.len() {
            let h = self.heights[i];
            if h == 0 {
                if self.colors[i] != StepColor::Red {
                    return false;
                }
            } else if self.heights[..i].iter().all(|&g| g != h)
                && self.colors[i] != StepColor::Black
            {
                return false;
            }
        }
        true
    }

    /// Stricter class: red steps only at height 0 or at the smallest
    /// positive height of the path.
    pub fn in_class_b(&self) -> bool {
        if !self.in_class_a() {
            return false;
        }
        let min_pos = self.heights.iter().copied().filter(|&h| h > 0).min();
        self.colors
            .iter()
            .zip(&self.heights)
            .all(|(&c, &h)| c == StepColor::Black || h == 0 || Some(h) == min_pos)
    }
}

impl fmt::Display for ColoredDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .heights
            .iter()
            .zip(&self.colors)
            .map(|(h, c)| match c {
                StepColor::Black => h.to_string(),
                StepColor::Red => format!("{}r", h),
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The outline of a 021-avoiding inversion sequence: positive entries become
/// black steps at their own height, zeros become red steps at the running
/// maximum.
pub fn outline(e: &InvSeq) -> Result<ColoredDyckPath, BijectionError> {
    if contains_pattern(e.entries(), &pat("021")) {
        return Err(BijectionError::NotAvoiding021);
    }
    let mut heights = Vec::with_capacity(e.len());
    let mut colors = Vec::with_capacity(e.len());
    let mut max = 0u32;
    for &x in e.entries() {
        if x > 0 {
            max = max.max(x);
            heights.push(x);
            colors.push(StepColor::Black);
        } else {
            heights.push(max);
            colors.push(StepColor::Red);
        }
    }
    ColoredDyckPath::new(heights, colors)
}

/// Inverse of [`outline`]; the path must lie in the outline class.
pub fn outline_inv(d: &ColoredDyckPath) -> Result<InvSeq, BijectionError> {
    if !d.in_class_a() {
        return Err(BijectionError::NotInColoredClass);
    }
    let entries = d
        .heights()
        .iter()
        .zip(d.colors())
        .map(|(&h, &c)| if c == StepColor::Red { 0 } else { h })
        .collect();
    InvSeq::new(entries).map_err(|_| BijectionError::InvalidDyckPath)
}

/// A set partition of `[n]`: disjoint non-empty blocks covering `1..=n`.
/// Blocks are kept sorted internally and ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, BijectionError> {
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(BijectionError::InvalidPartition);
            }
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(BijectionError::InvalidPartition);
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(BijectionError::InvalidPartition);
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The block-insertion bijection from 011-avoiding inversion sequences to set
/// partitions: a zero opens the block `{i}`, a positive `e_i` inserts `i`
/// into the block containing the element `e_i`.
pub fn eta(e: &InvSeq) -> Result<SetPartition, BijectionError> {
    if contains_pattern(e.entries(), &pat("011")) {
        return Err(BijectionError::NotAvoiding011);
    }
    let n = e.len();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; n + 1];
    for (idx, &x) in e.entries().iter().enumerate() {
        let i = idx + 1;
        if x == 0 {
            block_of[i] = blocks.len();
            blocks.push(vec![i]);
        } else {
            let b = block_of[x as usize];
            blocks[b].push(i);
            block_of[i] = b;
        }
    }
    SetPartition::new(n, blocks)
}

/// Inverse of [`eta`]: block minima map to zeros, every other element maps to
/// its predecessor within its block.
pub fn eta_inv(p: &SetPartition) -> Result<InvSeq, BijectionError> {
    let mut entries = vec![0u32; p.n()];
    for b in p.blocks() {
        for w in b.windows(2) {
            entries[w[1] - 1] = w[0] as u32;
        }
    }
    InvSeq::new(entries).map_err(|_| BijectionError::InvalidPartition)
}

/// The statistic-preserving bijection from `I_n(010,101)` to `I_n(010,100)`:
/// a repeated entry strictly below the prefix maximum is lifted to that
/// maximum. Preserves `(dist, satu, zero)`.
pub fn phi_stat(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    if !avoids_all(e.entries(), &[pat("010"), pat("101")]) {
        return Err(BijectionError::NotInDomainClass("I_n(010,101)"));
    }
    let src = e.entries();
    let mut out = src.to_vec();
    for i in 2..src.len() {
        let m = *src[..i - 1].iter().max().unwrap();
        if src[i - 1] == src[i] && src[i] < m {
            out[i] = m;
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(010,101)"))
}

/// Inverse of [`phi_stat`].
pub fn phi_stat_inv(f: &InvSeq) -> Result<InvSeq, BijectionError> {
    if !avoids_all(f.entries(), &[pat("010"), pat("100")]) {
        return Err(BijectionError::NotInDomainClass("I_n(010,100)"));
    }
    let src = f.entries();
    let mut out = src.to_vec();
    for i in 2..src.len() {
        // prefix maxima agree between image and preimage
        let m = *src[..i - 1].iter().max().unwrap();
        if src[i] == m {
            out[i] = out[i - 1];
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(010,100)"))
}

/// From `I_n(011,012)` to `I_n(010,012)`: every zero after the leftmost
/// positive entry is replaced by the nearest positive entry to its left.
pub fn zero_propagate(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    if !avoids_all(e.entries(), &[pat("011"), pat("012")]) {
        return Err(BijectionError::NotInDomainClass("I_n(011,012)"));
    }
    let mut out = e.entries().to_vec();
    let mut last_pos = 0u32;
    for x in out.iter_mut() {
        if *x > 0 {
            last_pos = *x;
        } else if last_pos > 0 {
            *x = last_pos;
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(011,012)"))
}

/// Inverse of [`zero_propagate`]: repeated positive runs collapse back to
/// zeros.
pub fn zero_propagate_inv(f: &InvSeq) -> Result<InvSeq, BijectionError> {
    if !avoids_all(f.entries(), &[pat("010"), pat("012")]) {
        return Err(BijectionError::NotInDomainClass("I_n(010,012)"));
    }
    let src = f.entries();
    let mut out = src.to_vec();
    for i in 1..src.len() {
        if src[i] > 0 && src[i] == src[i - 1] {
            out[i] = 0;
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(010,012)"))
}

/// From weakly increasing sequences (`I_n(010,021)`) to `I_n(011,021)`:
/// every positive entry except the first occurrence of its value becomes 0.
pub fn first_occurrence_map(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    if !avoids_all(e.entries(), &[pat("010"), pat("021")]) {
        return Err(BijectionError::NotInDomainClass("I_n(010,021)"));
    }
    let src = e.entries();
    let mut out = src.to_vec();
    for i in 1..src.len() {
        if src[i] > 0 && src[..i].contains(&src[i]) {
            out[i] = 0;
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(010,021)"))
}

/// Inverse of [`first_occurrence_map`]: zeros after a positive entry pick up
/// the last positive value seen.
pub fn first_occurrence_inv(f: &InvSeq) -> Result<InvSeq, BijectionError> {
    if !avoids_all(f.entries(), &[pat("011"), pat("021")]) {
        return Err(BijectionError::NotInDomainClass("I_n(011,021)"));
    }
    let mut out = f.entries().to_vec();
    let mut last_pos = 0u32;
    for x in out.iter_mut() {
        if *x > 0 {
            last_pos = *x;
        } else {
            *x = last_pos;
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(011,021)"))
}

fn satu(e: &[u32]) -> usize {
    e.iter().enumerate().filter(|&(i, &x)| x as usize == i).count()
}

/// The size-reducing map on `(011,102)`-avoiding sequences with exactly two
/// saturated entries: with `j > 1` the saturated index, either subtract one
/// from `e_j` and drop the leading zero (when `j-2` is absent from the
/// entries), or delete `e_j`.
pub fn rho(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    let src = e.entries();
    if !avoids_all(src, &[pat("011"), pat("102")]) || satu(src) != 2 {
        return Err(BijectionError::NotInDomainClass("B_{n,1}"));
    }
    let j = (1..src.len())
        .find(|&i| src[i] as usize == i)
        .expect("satu = 2 guarantees a saturated index beyond the first");
    // the case split asks whether e_j - 1 (= position j - 2, 1-based) occurs
    // as an entry of e
    let out = if !src.contains(&(j as u32 - 1)) {
        // absent: drop e_1 and lower the saturated entry by one
        let mut v: Vec<u32> = src[1..].to_vec();
        v[j - 1] -= 1;
        v
    } else {
        let mut v = src.to_vec();
        v.remove(j);
        v
    };
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("B_{n,1}"))
}

/// Inverse of [`rho`]; defined on non-empty `(011,102)`-avoiding sequences.
pub fn rho_inv(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    let src = e.entries();
    if src.is_empty() || !avoids_all(src, &[pat("011"), pat("102")]) {
        return Err(BijectionError::NotInDomainClass("I_{n-1}(011,102)"));
    }
    let out = if satu(src) >= 2 {
        // prepend a zero and raise the largest entry by one
        let max = *src.iter().max().unwrap();
        let j = src.iter().position(|&x| x == max).unwrap();
        let mut v = Vec::with_capacity(src.len() + 1);
        v.push(0);
        v.extend_from_slice(src);
        v[j + 1] += 1;
        v
    } else {
        // insert the new saturated entry l+1 right after position l+1
        let l = src.iter().max().copied().unwrap_or(0) as usize;
        let mut v = src.to_vec();
        v.insert(l + 1, l as u32 + 1);
        v
    };
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_{n-1}(011,102)"))
}

/// Weak left-to-right maxima positions (0-based): `e_i >= e_j` for all `j < i`.
fn weak_lr_maxima(e: &[u32]) -> Vec<bool> {
    let mut out = vec![false; e.len()];
    let mut max: Option<u32> = None;
    for (i, &x) in e.iter().enumerate() {
        if max.is_none_or(|m| x >= m) {
            out[i] = true;
            max = Some(x);
        }
    }
    out
}

/// The rearrangement bijection from `I_n(210)` to `I_n(201)`: weak
/// left-to-right maxima stay put; the remaining entries are redistributed
/// greedily, each position taking the largest unused value below the prefix
/// maximum.
pub fn corteel_phi(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    let src = e.entries();
    if contains_pattern(src, &pat("210")) {
        return Err(BijectionError::NotAvoiding210);
    }
    let maxima = weak_lr_maxima(src);
    let mut pool: Vec<u32> = src
        .iter()
        .zip(&maxima)
        .filter(|&(_, &m)| !m)
        .map(|(&x, _)| x)
        .collect();
    pool.sort_unstable();
    let mut out = src.to_vec();
    for i in 0..src.len() {
        if maxima[i] {
            continue;
        }
        let bound = *src[..i].iter().max().expect("a non-maximum has a predecessor");
        let k = pool
            .iter()
            .rposition(|&v| v < bound)
            .expect("some pool value lies below the prefix maximum");
        out[i] = pool.remove(k);
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotAvoiding210)
}

/// The cyclic exchange on `e` along the positions `s` (0-based, ascending):
/// with a zero present the chosen entries are sorted weakly increasing in
/// place, otherwise each value steps to the next larger one cyclically.
pub fn cyclic_exchange(e: &[u32], s: &[usize]) -> Result<Vec<u32>, BijectionError> {
    let mut values: Vec<u32> = s.iter().map(|&i| e[i]).collect();
    let mut distinct = values.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(BijectionError::DegenerateSubsequence);
    }
    let mut out = e.to_vec();
    if distinct[0] == 0 {
        values.sort_unstable();
        for (&pos, &v) in s.iter().zip(&values) {
            out[pos] = v;
        }
    } else {
        for &pos in s {
            let t = distinct.iter().position(|&v| v == e[pos]).unwrap();
            out[pos] = distinct[(t + 1) % distinct.len()];
        }
    }
    Ok(out)
}

/// Is there a subsequence `e_a e_b e_c` order-isomorphic to 210 with
/// `e_a = k`?
fn has_k_occurrence_210(e: &[u32], k: u32) -> bool {
    let n = e.len();
    for a in 0..n {
        if e[a] != k {
            continue;
        }
        for b in a + 1..n {
            if e[b] >= k {
                continue;
            }
            if (b + 1..n).any(|c| e[c] < e[b]) {
                return true;
            }
        }
    }
    false
}

/// The staged bijection from `I_n(201)` to `I_n(210)`: for each distinct
/// entry `k >= 2` in increasing order, while the current sequence still has a
/// `k`-occurrence of 210, the entries after the leftmost `k` with values
/// below `k` undergo one cyclic exchange. Preserves `(zero, dist, satu)` and
/// the presence of the pattern 010.
pub fn psi(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    let src = e.entries();
    if contains_pattern(src, &pat("201")) {
        return Err(BijectionError::NotAvoiding201);
    }
    if !contains_pattern(src, &pat("210")) {
        return Ok(e.clone());
    }
    let mut ks: Vec<u32> = src.iter().copied().filter(|&x| x > 1).collect();
    ks.sort_unstable();
    ks.dedup();
    let mut cur = src.to_vec();
    for &k in &ks {
        if !has_k_occurrence_210(&cur, k) {
            continue;
        }
        let first = cur.iter().position(|&x| x == k).unwrap();
        let s: Vec<usize> = (first + 1..cur.len()).filter(|&i| cur[i] < k).collect();
        cur = cyclic_exchange(&cur, &s)?;
    }
    InvSeq::new(cur).map_err(|_| BijectionError::NotAvoiding201)
}

/// The two-case map from `I_n(100,021)` to `I_n(110,021)`: weakly increasing
/// sequences are fixed; otherwise there is exactly one zero after the first
/// positive entry, and every positive entry before it that repeats an
/// earlier value becomes zero.
pub fn cap_map(e: &InvSeq) -> Result<InvSeq, BijectionError> {
    let src = e.entries();
    if !avoids_all(src, &[pat("100"), pat("021")]) {
        return Err(BijectionError::NotInDomainClass("I_n(100,021)"));
    }
    if src.windows(2).all(|w| w[0] <= w[1]) {
        return Ok(e.clone());
    }
    let first_pos = src.iter().position(|&x| x > 0).expect("not weakly increasing");
    let zeros_after: Vec<usize> = (first_pos + 1..src.len()).filter(|&i| src[i] == 0).collect();
    if zeros_after.len() != 1 {
        return Err(BijectionError::NotInDomainClass("I_n(100,021)"));
    }
    let k = zeros_after[0];
    let mut out = src.to_vec();
    let mut seen = Vec::new();
    for i in 0..k {
        if src[i] > 0 {
            if seen.contains(&src[i]) {
                out[i] = 0;
            } else {
                seen.push(src[i]);
            }
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(100,021)"))
}

/// Inverse of [`cap_map`].
pub fn cap_map_inv(f: &InvSeq) -> Result<InvSeq, BijectionError> {
    let src = f.entries();
    if !avoids_all(src, &[pat("110"), pat("021")]) {
        return Err(BijectionError::NotInDomainClass("I_n(110,021)"));
    }
    if src.windows(2).all(|w| w[0] <= w[1]) {
        return Ok(f.clone());
    }
    let k = src.iter().rposition(|&x| x == 0).expect("a descent forces a zero");
    let first_pos = src.iter().position(|&x| x > 0).expect("not weakly increasing");
    let mut out = src.to_vec();
    let mut last_pos = 0u32;
    for x in &mut out[first_pos..k] {
        if *x > 0 {
            last_pos = *x;
        } else {
            *x = last_pos;
        }
    }
    InvSeq::new(out).map_err(|_| BijectionError::NotInDomainClass("I_n(110,021)"))
}

/// An ordered (plane) tree; a value is the subtree rooted at a node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree { children: Vec::new() }
    }

    pub fn node(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| c.edge_count() + 1).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.edge_count() + 1
    }

    /// Outdegrees of the root followed by the interior vertices in preorder.
    /// The 0-edge tree has the empty type.
    pub fn type_of(&self) -> Vec<usize> {
        if self.children.is_empty() {
            return Vec::new();
        }
        let mut t = vec![self.children.len()];
        fn walk(node: &OrderedTree, t: &mut Vec<usize>) {
            for c in &node.children {
                if !c.children.is_empty() {
                    t.push(c.children.len());
                }
                walk(c, t);
            }
        }
        walk(self, &mut t);
        t
    }

    /// Number of vertices after the latest interior vertex in preorder
    /// (after the root when there is no interior vertex).
    pub fn cap(&self) -> usize {
        let flags = self.preorder_flags();
        match flags.iter().rposition(|&f| f) {
            Some(idx) => flags.len() - 1 - idx,
            None => flags.len() - 1,
        }
    }

    /// Preorder list of "is interior" flags; the root is never interior.
    fn preorder_flags(&self) -> Vec<bool> {
        let mut flags = vec![false];
        fn walk(node: &OrderedTree, flags: &mut Vec<bool>) {
            for c in &node.children {
                flags.push(!c.children.is_empty());
                walk(c, flags);
            }
        }
        walk(self, &mut flags);
        flags
    }

    /// All ordered trees with `n` edges, by the standard first-subtree
    /// decomposition.
    pub fn enumerate(n: usize) -> Vec<OrderedTree> {
        if n == 0 {
            return vec![OrderedTree::leaf()];
        }
        let mut out = Vec::new();
        for a in 0..n {
            for first in OrderedTree::enumerate(a) {
                for rest in OrderedTree::enumerate(n - 1 - a) {
                    let mut children = vec![first.clone()];
                    children.extend(rest.children);
                    out.push(OrderedTree::node(children));
                }
            }
        }
        out
    }
}

impl fmt::Display for OrderedTree {
    /// Nested-parentheses literal; a leaf is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.children {
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl FromStr for OrderedTree {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, BijectionError> {
        fn parse(chars: &[u8], pos: &mut usize) -> Result<OrderedTree, BijectionError> {
            if *pos >= chars.len() || chars[*pos] != b'(' {
                return Err(BijectionError::BadTreeLiteral);
            }
            *pos += 1;
            let mut children = Vec::new();
            while *pos < chars.len() && chars[*pos] == b'(' {
                children.push(parse(chars, pos)?);
            }
            if *pos >= chars.len() || chars[*pos] != b')' {
                return Err(BijectionError::BadTreeLiteral);
            }
            *pos += 1;
            Ok(OrderedTree::node(children))
        }
        let trimmed: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let t = parse(&trimmed, &mut pos)?;
        if pos != trimmed.len() {
            return Err(BijectionError::BadTreeLiteral);
        }
        Ok(t)
    }
}

/// Path of child indices from the root to the latest interior vertex in
/// preorder, or `None` when the tree has no interior vertex.
fn last_interior_path(t: &OrderedTree) -> Option<Vec<usize>> {
    fn search(node: &OrderedTree) -> Option<Vec<usize>> {
        // interiors inside a child subtree come later in preorder than the
        // child itself, and later children beat earlier ones
        for (i, c) in node.children.iter().enumerate().rev() {
            if let Some(mut p) = search(c) {
                p.insert(0, i);
                return Some(p);
            }
            if !c.children.is_empty() {
                return Some(vec![i]);
            }
        }
        None
    }
    search(t)
}

fn node_at_mut<'a>(t: &'a mut OrderedTree, path: &[usize]) -> &'a mut OrderedTree {
    let mut cur = t;
    for &i in path {
        cur = &mut cur.children[i];
    }
    cur
}

/// Preorder index of the node at `path` (the root has index 0).
fn preorder_index(t: &OrderedTree, path: &[usize]) -> usize {
    let mut idx = 0;
    let mut cur = t;
    for &i in path {
        idx += 1;
        for sib in &cur.children[..i] {
            idx += sib.vertex_count();
        }
        cur = &cur.children[i];
    }
    idx
}

/// The type- and capacity-preserving bijection from ordered trees with `n`
/// edges to Dyck paths of length `n`: strip the latest interior vertex's
/// children, map the smaller tree, then append `deg` east steps at height
/// `h'_l + h`, where the stripped vertex is the `h`-th leaf after the new
/// latest interior vertex.
pub fn tree_to_dyck(t: &OrderedTree) -> DyckPath {
    fn phi(t: &OrderedTree) -> Vec<u32> {
        let n = t.edge_count();
        let Some(path) = last_interior_path(t) else {
            return vec![0; n];
        };
        let mut stripped = t.clone();
        let v = node_at_mut(&mut stripped, &path);
        let deg = v.children.len();
        v.children.clear();
        let base = phi(&stripped);
        let v_idx = preorder_index(&stripped, &path);
        let anchor = match last_interior_path(&stripped) {
            Some(p) => preorder_index(&stripped, &p),
            None => 0,
        };
        let h = (v_idx - anchor) as u32;
        let top = base.last().copied().unwrap_or(0) + h;
        let mut out = base;
        out.extend(std::iter::repeat_n(top, deg));
        out
    }
    DyckPath::new(phi(t)).expect("the construction yields a Dyck path")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> InvSeq {
        InvSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn outline_examples() {
        let d = outline(&seq(&[0, 1, 0, 0, 2, 0, 4])).unwrap();
        assert_eq!(d.heights(), &[0, 1, 1, 1, 2, 2, 4]);
        let reds: Vec<usize> = d
            .colors()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == StepColor::Red)
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(reds, vec![1, 3, 4, 6]);
        assert!(d.in_class_a());
        assert!(!d.in_class_b());
        assert_eq!(outline_inv(&d).unwrap(), seq(&[0, 1, 0, 0, 2, 0, 4]));

        let z = outline(&seq(&[0, 0, 0])).unwrap();
        assert_eq!(z.heights(), &[0, 0, 0]);
        assert!(z.colors().iter().all(|&c| c == StepColor::Red));

        let s = outline(&seq(&[0, 1, 2])).unwrap();
        assert_eq!(format!("{}", s), "0r,1,2");

        assert_eq!(outline(&seq(&[0, 0, 2, 1])), Err(BijectionError::NotAvoiding021));
    }

    #[test]
    fn eta_examples() {
        let p = eta(&seq(&[0, 0, 2, 1, 0, 4])).unwrap();
        assert_eq!(format!("{}", p), "{1,4,6},{2,3},{5}");
        assert_eq!(p.block_count(), 3);
        assert_eq!(eta_inv(&p).unwrap(), seq(&[0, 0, 2, 1, 0, 4]));

        let p = eta(&seq(&[0, 0, 0])).unwrap();
        assert_eq!(p.block_count(), 3);

        let p = eta(&seq(&[0, 1, 2, 3])).unwrap();
        assert_eq!(p.block_count(), 1);
        assert_eq!(p.blocks()[0], vec![1, 2, 3, 4]);

        assert_eq!(eta(&seq(&[0, 1, 1])), Err(BijectionError::NotAvoiding011));
    }

    #[test]
    fn phi_stat_example() {
        let e = seq(&[0, 0, 0, 0, 4, 3, 2, 2, 2, 5, 1, 1]);
        let f = phi_stat(&e).unwrap();
        assert_eq!(f, seq(&[0, 0, 0, 0, 4, 3, 2, 4, 4, 5, 1, 5]));
        assert_eq!(phi_stat_inv(&f).unwrap(), e);

        assert_eq!(phi_stat(&seq(&[0, 0, 0])).unwrap(), seq(&[0, 0, 0]));
        assert_eq!(phi_stat(&seq(&[0, 1, 1])).unwrap(), seq(&[0, 1, 1]));
    }

    #[test]
    fn zero_propagate_example() {
        let e = seq(&[0, 0, 0, 3, 0, 2, 0, 0, 1]);
        let f = zero_propagate(&e).unwrap();
        assert_eq!(f, seq(&[0, 0, 0, 3, 3, 2, 2, 2, 1]));
        assert_eq!(zero_propagate_inv(&f).unwrap(), e);
        assert_eq!(zero_propagate(&seq(&[0, 0, 2, 0])).unwrap(), seq(&[0, 0, 2, 2]));
        assert_eq!(zero_propagate(&seq(&[0, 0, 0])).unwrap(), seq(&[0, 0, 0]));
    }

    #[test]
    fn first_occurrence_example() {
        let e = seq(&[0, 1, 1, 3, 3]);
        let f = first_occurrence_map(&e).unwrap();
        assert_eq!(f, seq(&[0, 1, 0, 3, 0]));
        assert_eq!(first_occurrence_inv(&f).unwrap(), e);
        assert_eq!(
            first_occurrence_map(&seq(&[0, 0, 2, 2])).unwrap(),
            seq(&[0, 0, 2, 0])
        );
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&seq(&[0, 0, 0, 3])).unwrap(), seq(&[0, 0, 2]));
        assert_eq!(rho(&seq(&[0, 0, 1, 3])).unwrap(), seq(&[0, 1, 2]));
        assert_eq!(rho(&seq(&[0, 0, 2, 0])).unwrap(), seq(&[0, 1, 0]));
        assert_eq!(rho(&seq(&[0, 0, 2, 1])).unwrap(), seq(&[0, 0, 1]));
        assert_eq!(rho(&seq(&[0, 1, 0, 0])).unwrap(), seq(&[0, 0, 0]));

        assert_eq!(rho_inv(&seq(&[0, 0, 2])).unwrap(), seq(&[0, 0, 0, 3]));
        assert_eq!(rho_inv(&seq(&[0, 1, 0])).unwrap(), seq(&[0, 0, 2, 0]));
        assert_eq!(rho_inv(&seq(&[0, 0, 1])).unwrap(), seq(&[0, 0, 2, 1]));
        assert_eq!(rho_inv(&seq(&[0, 0, 0])).unwrap(), seq(&[0, 1, 0, 0]));

        // satu != 2 is outside the domain
        assert!(rho(&seq(&[0, 0, 0])).is_err());
    }

    #[test]
    fn corteel_example() {
        let e = seq(&[0, 0, 0, 3, 1, 4, 2, 2]);
        assert_eq!(corteel_phi(&e).unwrap(), seq(&[0, 0, 0, 3, 2, 4, 2, 1]));
        // weakly increasing inputs are fixed points
        let w = seq(&[0, 0, 1, 3]);
        assert_eq!(corteel_phi(&w).unwrap(), w);
        assert_eq!(corteel_phi(&seq(&[0, 1, 0])).unwrap(), seq(&[0, 1, 0]));
        assert!(corteel_phi(&seq(&[0, 0, 2, 1, 0])).is_err());
    }

    #[test]
    fn cyclic_exchange_examples() {
        let e = [0, 0, 0, 3, 2, 2, 4, 1, 3, 0, 1, 1];
        let s = [4, 5, 7, 9, 10, 11];
        assert_eq!(
            cyclic_exchange(&e, &s).unwrap(),
            vec![0, 0, 0, 3, 0, 1, 4, 1, 3, 1, 2, 2]
        );
        let e = [0, 0, 0, 3, 1, 4, 3, 1, 3, 1, 2, 2];
        let s = [4, 6, 7, 9, 10, 11];
        assert_eq!(
            cyclic_exchange(&e, &s).unwrap(),
            vec![0, 0, 0, 3, 2, 4, 1, 2, 3, 2, 3, 3]
        );
        assert_eq!(
            cyclic_exchange(&[0, 1, 1], &[1, 2]),
            Err(BijectionError::DegenerateSubsequence)
        );
    }

    #[test]
    fn psi_worked_example() {
        // 16-entry walk-through; published renditions of this example print
        // position 7 as 1, but that position is not touched by any cyclic
        // exchange, so the frozen expectation is the algorithm's own output
        let e = seq(&[0, 0, 1, 2, 3, 2, 2, 4, 3, 4, 8, 7, 5, 4, 3, 0]);
        let img = psi(&e).unwrap();
        assert_eq!(img, seq(&[0, 0, 1, 2, 3, 0, 2, 4, 2, 4, 8, 2, 3, 4, 5, 7]));
        assert!(!contains_pattern(img.entries(), &pat("210")));
        assert!(contains_pattern(img.entries(), &pat("201")));

        // identity on the intersection class
        let fixed = seq(&[0, 1, 0, 2]);
        assert_eq!(psi(&fixed).unwrap(), fixed);
        assert_eq!(psi(&seq(&[0, 0, 2, 0, 1])), Err(BijectionError::NotAvoiding201));
    }

    #[test]
    fn cap_map_examples() {
        let e = seq(&[0, 0, 1, 1, 2, 2, 2, 0, 3, 3, 5]);
        let f = cap_map(&e).unwrap();
        assert_eq!(f, seq(&[0, 0, 1, 0, 2, 0, 0, 0, 3, 3, 5]));
        assert_eq!(cap_map_inv(&f).unwrap(), e);

        let w = seq(&[0, 0, 1, 1, 2]);
        assert_eq!(cap_map(&w).unwrap(), w);
        assert_eq!(cap_map(&seq(&[0, 1, 1, 0])).unwrap(), seq(&[0, 1, 0, 0]));
        assert_eq!(cap_map_inv(&seq(&[0, 1, 0, 0])).unwrap(), seq(&[0, 1, 1, 0]));
    }

    #[test]
    fn tree_parse_roundtrip() {
        let t: OrderedTree = "(()((()()))(()))".parse().unwrap();
        assert_eq!(t.edge_count(), 7);
        assert_eq!(format!("{}", t), "(()((()()))(()))");
        assert!("(()".parse::<OrderedTree>().is_err());
        assert!("())(".parse::<OrderedTree>().is_err());
    }

    #[test]
    fn tree_to_dyck_figure_example() {
        // root a: children b (leaf), c -> d -> {e, f}, g -> h
        let t: OrderedTree = "(()((()()))(()))".parse().unwrap();
        assert_eq!(t.type_of(), vec![3, 1, 2, 1]);
        let d = tree_to_dyck(&t);
        assert_eq!(d.heights(), &[0, 0, 0, 2, 3, 3, 6]);
        assert_eq!(d.type_of(), vec![3, 1, 2, 1]);
        assert_eq!(t.cap(), d.cap());
    }

    #[test]
    fn tree_to_dyck_star_and_path() {
        let star: OrderedTree = "(()()()())".parse().unwrap();
        assert_eq!(tree_to_dyck(&star).heights(), &[0, 0, 0, 0]);

        let path: OrderedTree = "((((()))))".parse().unwrap();
        let d = tree_to_dyck(&path);
        assert_eq!(d.type_of(), path.type_of());
        assert_eq!(d.cap(), path.cap());
    }

    #[test]
    fn tree_enumeration_is_catalan() {
        assert_eq!(OrderedTree::enumerate(0).len(), 1);
        assert_eq!(OrderedTree::enumerate(4).len(), 14);
        assert_eq!(OrderedTree::enumerate(6).len(), 132);
    }
}
