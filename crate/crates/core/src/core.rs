//! Inversion sequences, word patterns, relation triples and their statistics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoreError {
    /// The entry at the given 1-based index violates `0 <= e_i <= i-1`.
    #[error("entry out of range at position {0}")]
    OutOfRange(usize),
    #[error("unparsable entry at position {0}")]
    BadEntry(usize),
    /// Pattern letters are not of the form `{0, ..., d-1}`.
    #[error("pattern {0:?} is not in canonical form")]
    NonCanonicalPattern(String),
    #[error("empty pattern")]
    EmptyPattern,
    #[error("invalid pattern letter {0:?}")]
    BadPatternLetter(char),
    #[error("not a permutation of 1..n")]
    NotAPermutation,
    #[error("unknown relation symbol {0:?}")]
    BadRelation(String),
    #[error("a relation triple needs exactly three relations")]
    BadTripleArity,
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
}

/// An inversion sequence: an integer sequence `e` with `0 <= e_i <= i-1`
/// (positions 1-based). The empty sequence is the unique element of length 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvSeq {
    entries: Vec<u32>,
}

impl InvSeq {
    /// Validates the defining bound; the error names the first offending
    /// 1-based index.
    pub fn new(entries: Vec<u32>) -> Result<Self, CoreError> {
        for (idx, &e) in entries.iter().enumerate() {
            if e as usize > idx {
                return Err(CoreError::OutOfRange(idx + 1));
            }
        }
        Ok(InvSeq { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn stats(&self) -> StatVector {
        stats_of(&self.entries)
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }
}

impl fmt::Display for InvSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for InvSeq {
    type Err = CoreError;

    /// Parses a comma-separated entry list, e.g. `0,0,2,1,0,4`.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        if s.trim().is_empty() {
            return InvSeq::new(Vec::new());
        }
        let mut entries = Vec::new();
        for (idx, part) in s.split(',').enumerate() {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| CoreError::BadEntry(idx + 1))?;
            entries.push(v);
        }
        InvSeq::new(entries)
    }
}

/// A permutation of `[n]` given by its one-line notation over `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, CoreError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(CoreError::NotAPermutation);
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The Lehmer code: `e_i = |{ j < i : pi_j > pi_i }|`.
pub fn lehmer_code(pi: &Permutation) -> InvSeq {
    let v = pi.values();
    let entries = v
        .iter()
        .enumerate()
        .map(|(i, &x)| v[..i].iter().filter(|&&y| y > x).count() as u32)
        .collect();
    // inversions at position i are bounded by i, so the bound always holds
    InvSeq { entries }
}

/// A word pattern in canonical form: the set of distinct letters is
/// `{0, ..., d-1}`. Containment is equality-significant, so e.g. `000`,
/// `011` and `110` are all distinct meaningful patterns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    letters: Vec<u8>,
}

impl Pattern {
    /// Rejects non-canonical input (e.g. `221`) rather than rewriting it.
    pub fn new(letters: Vec<u8>) -> Result<Self, CoreError> {
        if letters.is_empty() {
            return Err(CoreError::EmptyPattern);
        }
        let mut distinct: Vec<u8> = letters.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for (i, &d) in distinct.iter().enumerate() {
            if d as usize != i {
                return Err(CoreError::NonCanonicalPattern(
                    letters.iter().map(|l| l.to_string()).collect(),
                ));
            }
        }
        Ok(Pattern { letters })
    }

    /// Reads a classical (1-based, distinct-letter) permutation pattern such
    /// as `321` or `2143` and shifts it to canonical form. Letters must be a
    /// permutation of `1..=k`.
    pub fn from_classical(s: &str) -> Result<Self, CoreError> {
        let mut letters = Vec::new();
        for c in s.chars() {
            let d = c.to_digit(10).ok_or(CoreError::BadPatternLetter(c))? as u8;
            if d == 0 {
                return Err(CoreError::NonCanonicalPattern(s.to_string()));
            }
            letters.push(d - 1);
        }
        let p = Pattern::new(letters)?;
        let mut seen = p.letters.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != p.letters.len() {
            return Err(CoreError::NonCanonicalPattern(s.to_string()));
        }
        Ok(p)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        let mut letters = Vec::new();
        for c in s.trim().chars() {
            let d = c.to_digit(10).ok_or(CoreError::BadPatternLetter(c))?;
            letters.push(d as u8);
        }
        Pattern::new(letters)
    }
}

/// A binary relation on integers; `Any` (written `-`) holds for all pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    Any,
}

impl Rel {
    pub fn eval(self, x: u32, y: u32) -> bool {
        match self {
            Rel::Lt => x < y,
            Rel::Gt => x > y,
            Rel::Le => x <= y,
            Rel::Ge => x >= y,
            Rel::Eq => x == y,
            Rel::Ne => x != y,
            Rel::Any => true,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Gt => ">",
            Rel::Le => "<=",
            Rel::Ge => ">=",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Any => "-",
        }
    }
}

impl FromStr for Rel {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        match s.trim() {
            "<" => Ok(Rel::Lt),
            ">" => Ok(Rel::Gt),
            "<=" | "≤" => Ok(Rel::Le),
            ">=" | "≥" => Ok(Rel::Ge),
            "=" | "==" => Ok(Rel::Eq),
            "!=" | "≠" | "<>" => Ok(Rel::Ne),
            "-" | "−" => Ok(Rel::Any),
            other => Err(CoreError::BadRelation(other.to_string())),
        }
    }
}

/// A triple of binary relations `(rho1, rho2, rho3)`. A sequence avoids the
/// triple when no indices `i < j < k` satisfy `e_i rho1 e_j`, `e_j rho2 e_k`
/// and `e_i rho3 e_k` simultaneously.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelTriple {
    pub rho1: Rel,
    pub rho2: Rel,
    pub rho3: Rel,
}

impl RelTriple {
    pub fn new(rho1: Rel, rho2: Rel, rho3: Rel) -> Self {
        RelTriple { rho1, rho2, rho3 }
    }
}

impl fmt::Display for RelTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})",
            self.rho1.symbol(),
            self.rho2.symbol(),
            self.rho3.symbol()
        )
    }
}

impl FromStr for RelTriple {
    type Err = CoreError;

    /// Parses `">=,!=,>="` (ASCII) or `"≥,≠,≥"` (symbols), optionally
    /// parenthesised.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(CoreError::BadTripleArity);
        }
        Ok(RelTriple {
            rho1: parts[0].parse()?,
            rho2: parts[1].parse()?,
            rho3: parts[2].parse()?,
        })
    }
}

/// The seven statistics of one inversion sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StatVector {
    /// `|{i : e_i < e_{i+1}}|`
    pub asc: usize,
    /// number of distinct positive entries
    pub dist: usize,
    /// `|{i : e_i < e_j for all j > i}|`; the last index counts vacuously
    pub rmin: usize,
    /// number of zero entries
    pub zero: usize,
    /// `|{i : e_i = i-1}|`
    pub satu: usize,
    /// `n - dist`
    pub rep: usize,
    /// the final entry (0 for the empty sequence)
    pub last: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Asc,
    Dist,
    Rmin,
    Zero,
    Satu,
    Rep,
    Last,
}

impl Statistic {
    pub const ALL: [Statistic; 7] = [
        Statistic::Asc,
        Statistic::Dist,
        Statistic::Rmin,
        Statistic::Zero,
        Statistic::Satu,
        Statistic::Rep,
        Statistic::Last,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Asc => "asc",
            Statistic::Dist => "dist",
            Statistic::Rmin => "rmin",
            Statistic::Zero => "zero",
            Statistic::Satu => "satu",
            Statistic::Rep => "rep",
            Statistic::Last => "last",
        }
    }

    pub fn of(self, v: &StatVector) -> usize {
        match self {
            Statistic::Asc => v.asc,
            Statistic::Dist => v.dist,
            Statistic::Rmin => v.rmin,
            Statistic::Zero => v.zero,
            Statistic::Satu => v.satu,
            Statistic::Rep => v.rep,
            Statistic::Last => v.last,
        }
    }
}

impl FromStr for Statistic {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        match s.trim() {
            "asc" => Ok(Statistic::Asc),
            "dist" => Ok(Statistic::Dist),
            "rmin" => Ok(Statistic::Rmin),
            "zero" => Ok(Statistic::Zero),
            "satu" => Ok(Statistic::Satu),
            "rep" => Ok(Statistic::Rep),
            "last" => Ok(Statistic::Last),
            other => Err(CoreError::UnknownStatistic(other.to_string())),
        }
    }
}

pub(crate) fn stats_of(e: &[u32]) -> StatVector {
    let n = e.len();
    let asc = e.windows(2).filter(|w| w[0] < w[1]).count();
    let mut distinct: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let dist = distinct.len();
    let mut rmin = 0;
    for i in 0..n {
        if e[i + 1..].iter().all(|&x| e[i] < x) {
            rmin += 1;
        }
    }
    let zero = e.iter().filter(|&&x| x == 0).count();
    let satu = e
        .iter()
        .enumerate()
        .filter(|&(i, &x)| x as usize == i)
        .count();
    StatVector {
        asc,
        dist,
        rmin,
        zero,
        satu,
        rep: n - dist,
        last: e.last().map_or(0, |&x| x as usize),
    }
}

/// Does some subsequence of `word` carry the identical pairwise `<,=,>`
/// profile as `p`? Naive subsequence scan with early pruning; this is the
/// reference containment predicate for the whole crate.
pub fn contains_pattern(word: &[u32], p: &Pattern) -> bool {
    let k = p.len();
    if word.len() < k {
        return false;
    }
    let mut chosen = Vec::with_capacity(k);
    search(word, p.letters(), &mut chosen, 0)
}

fn profile_consistent(word: &[u32], pat: &[u8], chosen: &[usize], cand: usize) -> bool {
    let d = chosen.len();
    chosen.iter().enumerate().all(|(a, &pos)| {
        cmp_u32(word[pos], word[cand]) == cmp_u8(pat[a], pat[d])
    })
}

fn search(word: &[u32], pat: &[u8], chosen: &mut Vec<usize>, from: usize) -> bool {
    if chosen.len() == pat.len() {
        return true;
    }
    let remaining = pat.len() - chosen.len();
    if word.len() - from < remaining {
        return false;
    }
    for cand in from..word.len() {
        if profile_consistent(word, pat, chosen, cand) {
            chosen.push(cand);
            if search(word, pat, chosen, cand + 1) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn cmp_u32(a: u32, b: u32) -> Ordering {
    a.cmp(&b)
}

fn cmp_u8(a: u8, b: u8) -> Ordering {
    a.cmp(&b)
}

/// True iff `word` contains none of the given patterns.
pub fn avoids_all(word: &[u32], ps: &[Pattern]) -> bool {
    ps.iter().all(|p| !contains_pattern(word, p))
}

/// True iff no `i < j < k` satisfy all three relations of the triple.
pub fn avoids_triple(word: &[u32], t: &RelTriple) -> bool {
    let n = word.len();
    for i in 0..n {
        for j in i + 1..n {
            if !t.rho1.eval(word[i], word[j]) {
                continue;
            }
            for k in j + 1..n {
                if t.rho2.eval(word[j], word[k]) && t.rho3.eval(word[i], word[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Occurrence check restricted to subsequences that end at the last position
/// of `word`; used by the enumerator to prune prefixes incrementally.
pub(crate) fn occurrence_ends_at_last(word: &[u32], p: &Pattern) -> bool {
    let k = p.len();
    if word.len() < k || k == 0 {
        return false;
    }
    let last = word.len() - 1;
    // fix the final pattern letter at `last`, search the first k-1 letters
    let mut chosen = Vec::with_capacity(k);
    search_ending(word, p.letters(), &mut chosen, 0, last)
}

fn search_ending(word: &[u32], pat: &[u8], chosen: &mut Vec<usize>, from: usize, last: usize) -> bool {
    if chosen.len() == pat.len() - 1 {
        return profile_consistent(word, pat, chosen, last);
    }
    let remaining = pat.len() - 1 - chosen.len();
    if last - from < remaining {
        return false;
    }
    for cand in from..last {
        if profile_consistent(word, pat, chosen, cand) {
            chosen.push(cand);
            if search_ending(word, pat, chosen, cand + 1, last) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Triple-occurrence check with `k` fixed at the last position.
pub(crate) fn triple_ends_at_last(word: &[u32], t: &RelTriple) -> bool {
    let n = word.len();
    if n < 3 {
        return false;
    }
    let ek = word[n - 1];
    for i in 0..n - 1 {
        if !t.rho3.eval(word[i], ek) {
            continue;
        }
        for j in i + 1..n - 1 {
            if t.rho1.eval(word[i], word[j]) && t.rho2.eval(word[j], ek) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn seq(v: &[u32]) -> InvSeq {
        InvSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(InvSeq::new(vec![0, 0, 2, 1, 0, 4]).is_ok());
        assert!(InvSeq::new(vec![]).is_ok());
        assert_eq!(InvSeq::new(vec![0, 2]), Err(CoreError::OutOfRange(2)));
    }

    #[test]
    fn lehmer_examples() {
        let id = Permutation::new((1..=6).collect()).unwrap();
        assert_eq!(lehmer_code(&id).entries(), &[0, 0, 0, 0, 0, 0]);
        let p = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(lehmer_code(&p).entries(), &[0, 1]);
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(lehmer_code(&p).entries(), &[0, 1, 1]);
    }

    #[test]
    fn lehmer_injective_small() {
        // every Lehmer code is a valid inversion sequence and codes are distinct
        let n = 5;
        let mut seen = std::collections::HashSet::new();
        let mut perm = vec![0u32; n];
        let mut used = vec![false; n + 1];
        fn rec(
            perm: &mut Vec<u32>,
            used: &mut Vec<bool>,
            depth: usize,
            seen: &mut std::collections::HashSet<Vec<u32>>,
        ) {
            let n = perm.len();
            if depth == n {
                let p = Permutation::new(perm.clone()).unwrap();
                let code = lehmer_code(&p);
                assert!(InvSeq::new(code.entries().to_vec()).is_ok());
                assert!(seen.insert(code.entries().to_vec()));
                return;
            }
            for v in 1..=n as u32 {
                if !used[v as usize] {
                    used[v as usize] = true;
                    perm[depth] = v;
                    rec(perm, used, depth + 1, seen);
                    used[v as usize] = false;
                }
            }
        }
        rec(&mut perm, &mut used, 0, &mut seen);
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn pattern_canonical_form() {
        assert!(Pattern::new(vec![1, 1, 0]).is_ok());
        assert!(Pattern::new(vec![0, 2, 1]).is_ok());
        assert!(Pattern::new(vec![0, 0, 1, 2]).is_ok());
        assert!(matches!(
            Pattern::new(vec![2, 2, 1]),
            Err(CoreError::NonCanonicalPattern(_))
        ));
        assert!(matches!(Pattern::new(vec![]), Err(CoreError::EmptyPattern)));
        assert_eq!(Pattern::from_classical("321").unwrap(), pat("210"));
        assert_eq!(Pattern::from_classical("2143").unwrap(), pat("1032"));
        assert!(Pattern::from_classical("221").is_err());
    }

    #[test]
    fn containment_examples() {
        let w = [3, 2, 4, 2, 1];
        assert!(contains_pattern(&w, &Pattern::from_classical("231").unwrap()));
        assert!(!contains_pattern(&w, &pat("101")));
        assert!(!contains_pattern(&w, &Pattern::from_classical("123").unwrap()));
        assert!(!contains_pattern(&[0, 0], &pat("000")));
        assert!(contains_pattern(&[0, 0, 0], &pat("000")));
        // equalities are significant: 011 needs an equal pair above a smaller entry
        assert!(contains_pattern(&[0, 1, 1], &pat("011")));
        assert!(!contains_pattern(&[0, 1, 2], &pat("011")));
    }

    #[test]
    fn avoids_all_examples() {
        assert!(avoids_all(&[0, 1, 1], &[pat("001"), pat("110")]));
        assert!(!avoids_all(&[0, 0, 1], &[pat("001")]));
        assert!(avoids_all(&[0, 1, 1], &[]));
    }

    #[test]
    fn avoids_triple_examples() {
        let t: RelTriple = ">=,!=,>=".parse().unwrap();
        assert!(avoids_triple(&[0, 1, 0], &t));
        assert!(avoids_triple(&[0, 1], &t));
        assert!(avoids_triple(&[], &t));
        let lt_any_lt: RelTriple = "<,-,<".parse().unwrap();
        assert!(!avoids_triple(&[0, 1, 1], &lt_any_lt));
    }

    #[test]
    fn triple_parse_symbols() {
        let a: RelTriple = "≥,≠,≥".parse().unwrap();
        let b: RelTriple = ">=,!=,>=".parse().unwrap();
        assert_eq!(a, b);
        assert!("<,>".parse::<RelTriple>().is_err());
    }

    #[test]
    fn stats_examples() {
        let v = seq(&[0, 0, 2, 1, 0, 4]).stats();
        assert_eq!(
            v,
            StatVector { asc: 2, dist: 3, rmin: 2, zero: 3, satu: 2, rep: 3, last: 4 }
        );

        let n = 6;
        let zeros = seq(&vec![0; n]).stats();
        assert_eq!(
            zeros,
            StatVector { asc: 0, dist: 0, rmin: 1, zero: n, satu: 1, rep: n, last: 0 }
        );

        let stair = seq(&(0..n as u32).collect::<Vec<_>>()).stats();
        assert_eq!(
            stair,
            StatVector { asc: n - 1, dist: n - 1, rmin: n, zero: 1, satu: n, rep: 1, last: n - 1 }
        );
    }

    #[test]
    fn incremental_checks_agree_with_full_scan() {
        // every occurrence detected by the full scan appears "ending at last"
        // for some prefix, and vice versa; all words over {0,1,2} up to n=6
        let pats = ["000", "001", "010", "011", "012", "100", "101", "102", "110", "120", "201", "210", "021"];
        for n in 0..=6usize {
            for code in 0..3usize.pow(n as u32) {
                let mut word = Vec::with_capacity(n);
                let mut c = code;
                for _ in 0..n {
                    word.push((c % 3) as u32);
                    c /= 3;
                }
                for ps in pats {
                    let p = pat(ps);
                    let full = contains_pattern(&word, &p);
                    let inc = (1..=n).any(|m| occurrence_ends_at_last(&word[..m], &p));
                    assert_eq!(full, inc, "word={:?} pat={}", word, ps);
                }
            }
        }
    }

    #[test]
    fn triple_incremental_check_agrees() {
        let triples = [">=,!=,>=", "<,-,<", ">,-,<=", "!=,>=,>=", "-,>,>="];
        for ts in triples {
            let t: RelTriple = ts.parse().unwrap();
            for n in 0..=6usize {
                for code in 0..3usize.pow(n as u32) {
                    let mut word = Vec::with_capacity(n);
                    let mut c = code;
                    for _ in 0..n {
                        word.push((c % 3) as u32);
                        c /= 3;
                    }
                    let full = avoids_triple(&word, &t);
                    let inc = !(1..=n).any(|m| triple_ends_at_last(&word[..m], &t));
                    assert_eq!(full, inc, "word={:?} triple={}", word, ts);
                }
            }
        }
    }
}
