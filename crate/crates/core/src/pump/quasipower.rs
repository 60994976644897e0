//! Quasipowers: `u_0 ≠ ε` and `u_i = u_{i-1}·v_i·u_{i-1}`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `N_r` used as an exponent when computing `N_{r+1}`.
const MAX_EXPONENT: u64 = 1 << 20;

/// `N_0 = 1`, `N_{r+1} = N_r·(1 + σ^{N_r})`: every word of length at least
/// `N_r` over `σ` letters contains a quasipower of order `r`.
pub fn quasipower_constant(r: usize, sigma: usize) -> Result<BigUint> {
    if sigma == 0 {
        return Err(Error::InvalidArgument("alphabet size must be at least 1".into()));
    }
    let base = BigUint::from(sigma);
    let mut n = BigUint::one();
    for _ in 0..r {
        let exponent = match n.to_u64() {
            Some(e) if e <= MAX_EXPONENT || sigma == 1 => e,
            _ => return Err(Error::ConstantTooLarge { r, sigma }),
        };
        let power = if sigma == 1 {
            BigUint::one()
        } else {
            base.pow(exponent as u32)
        };
        n = &n * (power + 1u32);
    }
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasipowerMode {
    /// Pigeonhole construction; needs `|w| ≥ N_r`.
    Strict,
    /// Exhaustive search over subwords, shortest first.
    BestEffort,
}

/// A quasipower tower inside a host word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasipowerDecomposition {
    pub order: usize,
    /// `u_0, .., u_r`.
    pub levels: Vec<String>,
    /// `v_1, .., v_r`.
    pub middles: Vec<String>,
    /// Start of `u_r` in the host word, in letters.
    pub position: usize,
}

impl QuasipowerDecomposition {
    pub fn top(&self) -> &str {
        self.levels.last().map(String::as_str).unwrap_or("")
    }

    /// `u_r` occurs in `host` at `position`.
    pub fn occurs_in(&self, host: &str) -> bool {
        let top: Vec<char> = self.top().chars().collect();
        let host: Vec<char> = host.chars().collect();
        host.get(self.position..self.position + top.len()) == Some(&top[..])
    }
}

/// Checks the recurrence level by level and that `u_0 ≠ ε`.
pub fn verify_quasipower(d: &QuasipowerDecomposition) -> bool {
    if d.levels.len() != d.order + 1 || d.middles.len() != d.order {
        return false;
    }
    if d.levels[0].is_empty() {
        return false;
    }
    (1..=d.order).all(|i| {
        let prev = &d.levels[i - 1];
        d.levels[i] == format!("{prev}{}{prev}", d.middles[i - 1])
    })
}

/// Finds a quasipower of order `r` inside `word`.
pub fn find_quasipower(word: &str, r: usize, mode: QuasipowerMode) -> Result<QuasipowerDecomposition> {
    let chars: Vec<char> = word.chars().collect();
    match mode {
        QuasipowerMode::Strict => find_strict(&chars, r),
        QuasipowerMode::BestEffort => find_best_effort(&chars, r),
    }
}

fn effective_alphabet(chars: &[char]) -> usize {
    let mut letters = chars.to_vec();
    letters.sort_unstable();
    letters.dedup();
    letters.len()
}

fn find_strict(chars: &[char], r: usize) -> Result<QuasipowerDecomposition> {
    let sigma = effective_alphabet(chars).max(1);
    let too_short = |required: String| Error::WordTooShort {
        len: chars.len(),
        order: r,
        required,
    };
    let mut constants = Vec::with_capacity(r + 1);
    for k in 0..=r {
        let n = match quasipower_constant(k, sigma) {
            Ok(n) => n,
            Err(Error::ConstantTooLarge { .. }) => {
                return Err(too_short(format!("N_{r} (not materializable for {sigma} letters)")))
            }
            Err(e) => return Err(e),
        };
        match n.to_usize() {
            Some(n) if n <= chars.len() => constants.push(n),
            _ => return Err(too_short(n.to_string())),
        }
    }
    let (offset, levels, middles) = build(chars, r, &constants);
    Ok(QuasipowerDecomposition {
        order: r,
        levels: levels.into_iter().map(|l| l.iter().collect()).collect(),
        middles: middles.into_iter().map(|m| m.iter().collect()).collect(),
        position: offset,
    })
}

type Tower = (usize, Vec<Vec<char>>, Vec<Vec<char>>);

/// `w` has length at least `constants[r]`; returns the offset of `u_r` in
/// `w` with the levels and middles.
fn build(w: &[char], r: usize, constants: &[usize]) -> Tower {
    if r == 0 {
        return (0, vec![vec![w[0]]], Vec::new());
    }
    let block = constants[r - 1];
    let count = constants[r] / block;
    let mut classes: HashMap<&[char], Vec<usize>> = HashMap::new();
    for b in 0..count {
        classes.entry(&w[b * block..(b + 1) * block]).or_default().push(b);
    }
    // least i with a later equal block, then the least such j
    let (i, j) = classes
        .values()
        .filter(|idx| idx.len() >= 2)
        .map(|idx| (idx[0], idx[1]))
        .min()
        .expect("pigeonhole guarantees two equal blocks");
    let (inner, mut levels, mut middles) = build(&w[i * block..(i + 1) * block], r - 1, constants);
    let u_len = levels.last().map_or(0, Vec::len);
    let first = i * block + inner;
    let second = j * block + inner;
    middles.push(w[first + u_len..second].to_vec());
    levels.push(w[first..second + u_len].to_vec());
    (first, levels, middles)
}

fn find_best_effort(chars: &[char], r: usize) -> Result<QuasipowerDecomposition> {
    let mut memo: HashMap<(usize, usize, usize), Option<usize>> = HashMap::new();
    let n = chars.len();
    for len in 1..=n {
        for start in 0..=n - len {
            if search(chars, start, len, r, &mut memo) {
                return Ok(reconstruct(chars, start, len, r, &memo));
            }
        }
    }
    Err(Error::NoQuasipower(r))
}

/// Whether `w[start..start+len]` is a quasipower of order `r`; memoizes the
/// chosen `|u_{r-1}|`.
fn search(
    w: &[char],
    start: usize,
    len: usize,
    r: usize,
    memo: &mut HashMap<(usize, usize, usize), Option<usize>>,
) -> bool {
    if r == 0 {
        return len > 0;
    }
    if let Some(found) = memo.get(&(start, len, r)) {
        return found.is_some();
    }
    let mut found = None;
    for u_len in 1..=len / 2 {
        let prefix = &w[start..start + u_len];
        let suffix = &w[start + len - u_len..start + len];
        if prefix == suffix && search(w, start, u_len, r - 1, memo) {
            found = Some(u_len);
            break;
        }
    }
    memo.insert((start, len, r), found);
    found.is_some()
}

fn reconstruct(
    w: &[char],
    start: usize,
    len: usize,
    r: usize,
    memo: &HashMap<(usize, usize, usize), Option<usize>>,
) -> QuasipowerDecomposition {
    let mut lens = vec![len];
    for k in (1..=r).rev() {
        let u_len = memo[&(start, *lens.last().unwrap(), k)].expect("search succeeded");
        lens.push(u_len);
    }
    lens.reverse();
    let levels: Vec<String> = lens.iter().map(|&l| w[start..start + l].iter().collect()).collect();
    let middles: Vec<String> = (1..=r)
        .map(|i| w[start + lens[i - 1]..start + lens[i] - lens[i - 1]].iter().collect())
        .collect();
    QuasipowerDecomposition {
        order: r,
        levels,
        middles,
        position: start,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        for sigma in 1..5 {
            assert_eq!(quasipower_constant(0, sigma).unwrap(), BigUint::one());
        }
        assert_eq!(quasipower_constant(5, 1).unwrap(), BigUint::from(32u32));
        assert_eq!(quasipower_constant(1, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(quasipower_constant(2, 2).unwrap(), BigUint::from(27u32));
        assert_eq!(quasipower_constant(3, 2).unwrap(), BigUint::from(3_623_878_683u64));
        assert!(matches!(quasipower_constant(4, 2), Err(Error::ConstantTooLarge { .. })));
        assert!(quasipower_constant(1, 0).is_err());
    }

    #[test]
    fn unary_examples() {
        let d = find_quasipower("aa", 1, QuasipowerMode::Strict).unwrap();
        assert_eq!(d.levels, vec!["a", "aa"]);
        assert_eq!(d.middles, vec![""]);
        let d = find_quasipower("aaaa", 2, QuasipowerMode::Strict).unwrap();
        assert_eq!(d.levels, vec!["a", "aa", "aaaa"]);
        assert!(verify_quasipower(&d));
        assert!(d.occurs_in("aaaa"));
    }

    #[test]
    fn strict_mode_needs_length() {
        let w: String = "ab".repeat(13);
        assert_eq!(w.len(), 26);
        let err = find_quasipower(&w, 2, QuasipowerMode::Strict).unwrap_err();
        assert!(matches!(err, Error::WordTooShort { ref required, .. } if required == "27"));
        let w27 = format!("{w}a");
        let d = find_quasipower(&w27, 2, QuasipowerMode::Strict).unwrap();
        assert!(verify_quasipower(&d) && d.occurs_in(&w27));
    }

    #[test]
    fn pigeonhole_picks_least_pair() {
        // σ = 2, r = 1: blocks of length 1, three of them: b, a, a → (1, 2)
        let d = find_quasipower("baa", 1, QuasipowerMode::Strict).unwrap();
        assert_eq!(d.position, 1);
        assert_eq!(d.top(), "aa");
        // a, b, a → (0, 2): u_1 = a·b·a
        let d = find_quasipower("aba", 1, QuasipowerMode::Strict).unwrap();
        assert_eq!((d.position, d.top()), (0, "aba"));
    }

    #[test]
    fn verify_rejects_bad_towers() {
        let mut d = find_quasipower("aaaa", 2, QuasipowerMode::Strict).unwrap();
        d.levels[1] = "ab".into();
        assert!(!verify_quasipower(&d));
        let d = QuasipowerDecomposition {
            order: 0,
            levels: vec![String::new()],
            middles: vec![],
            position: 0,
        };
        assert!(!verify_quasipower(&d));
    }

    #[test]
    fn best_effort_finds_short_towers() {
        let d = find_quasipower("abcab", 1, QuasipowerMode::BestEffort).unwrap();
        assert_eq!(d.top(), "abca");
        assert!(verify_quasipower(&d) && d.occurs_in("abcab"));
        assert!(matches!(
            find_quasipower("abc", 1, QuasipowerMode::BestEffort),
            Err(Error::NoQuasipower(1))
        ));
        let d = find_quasipower("xyxzxyx", 2, QuasipowerMode::BestEffort).unwrap();
        assert!(verify_quasipower(&d));
    }
}
