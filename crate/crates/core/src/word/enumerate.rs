//! Lazy enumeration of reduced words by length, then lexicographically by
//! letter code (`x1 < x1^-1 < x2 < ...`).

use crate::word::{Alphabet, Letter, Word};

/// Number of reduced words of length at most `r` in a free group of rank
/// `n`: `1 + sum_{k=1..r} 2n (2n-1)^(k-1)`.
pub fn ball_size(n: usize, r: usize) -> u128 {
    let n = n as u128;
    let mut total = 1u128;
    let mut layer = 2 * n;
    for _ in 0..r {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul((2 * n).saturating_sub(1));
    }
    total
}

/// Reduced words of one fixed length, optionally with a fixed first letter.
#[derive(Clone, Debug)]
pub struct Sphere {
    letters: usize,
    codes: Vec<usize>,
    fixed_first: bool,
    started: bool,
    done: bool,
}

fn smallest_after(prev: usize) -> usize {
    if prev ^ 1 == 0 {
        1
    } else {
        0
    }
}

impl Sphere {
    fn new(arity: usize, len: usize, first: Option<Letter>) -> Sphere {
        let letters = 2 * arity;
        let mut codes = Vec::with_capacity(len);
        let mut done = false;
        if len > 0 {
            let c0 = first.map(|l| l.code()).unwrap_or(0);
            if c0 >= letters {
                done = true;
            }
            codes.push(c0);
            for j in 1..len {
                let prev = codes[j - 1];
                codes.push(smallest_after(prev));
            }
        } else if first.is_some() {
            done = true;
        }
        Sphere {
            letters,
            codes,
            fixed_first: first.is_some(),
            started: false,
            done,
        }
    }

    fn advance(&mut self) -> bool {
        let start = usize::from(self.fixed_first);
        let len = self.codes.len();
        let mut p = len;
        while p > start {
            p -= 1;
            let mut c = self.codes[p] + 1;
            if p > 0 && c == self.codes[p - 1] ^ 1 {
                c += 1;
            }
            if c < self.letters {
                self.codes[p] = c;
                for j in p + 1..len {
                    self.codes[j] = smallest_after(self.codes[j - 1]);
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Sphere {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        if self.codes.is_empty() {
            // length zero: a single empty word
            self.done = true;
        }
        Some(self.codes.iter().map(|&c| Letter::from_code(c)).collect())
    }
}

/// Reduced words of length exactly `len`.
pub fn sphere(alphabet: &Alphabet, len: usize) -> Sphere {
    Sphere::new(alphabet.arity(), len, None)
}

/// Reduced words of length at most `radius`, in length-then-lex order.
#[derive(Clone, Debug)]
pub struct Ball {
    arity: usize,
    radius: usize,
    first: Option<Letter>,
    len: usize,
    current: Sphere,
}

impl Iterator for Ball {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if let Some(w) = self.current.next() {
                return Some(w);
            }
            if self.len >= self.radius {
                return None;
            }
            self.len += 1;
            self.current = Sphere::new(self.arity, self.len, self.first);
        }
    }
}

fn ball_from(arity: usize, radius: usize, first: Option<Letter>) -> Ball {
    let len = usize::from(first.is_some());
    // with a fixed first letter and radius 0 the segment is empty
    let current = Sphere::new(arity, len.min(radius), first);
    Ball {
        arity,
        radius,
        first,
        len,
        current,
    }
}

/// Every reduced word of length at most `radius`.
pub fn ball(alphabet: &Alphabet, radius: usize) -> Ball {
    ball_from(alphabet.arity(), radius, None)
}

/// Splits the ball into `2n + 1` disjoint segments: the empty word, then the
/// words starting with each letter in code order. Concatenating the segments
/// in order does not reproduce the global order; callers sort if needed.
pub fn ball_partitions(alphabet: &Alphabet, radius: usize) -> Vec<Ball> {
    let n = alphabet.arity();
    let mut parts = vec![ball_from(n, 0, None)];
    for code in 0..2 * n {
        parts.push(ball_from(n, radius, Some(Letter::from_code(code))));
    }
    parts
}

/// Splits the sphere of length `len >= 1` into one segment per first letter.
pub fn sphere_partitions(alphabet: &Alphabet, len: usize) -> Vec<Sphere> {
    if len == 0 {
        return vec![sphere(alphabet, 0)];
    }
    (0..2 * alphabet.arity())
        .map(|code| Sphere::new(alphabet.arity(), len, Some(Letter::from_code(code))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn brute_force(n: usize, r: usize) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        let mut frontier = vec![Vec::<usize>::new()];
        out.insert(Word::empty());
        for _ in 0..r {
            let mut next = Vec::new();
            for codes in &frontier {
                for c in 0..2 * n {
                    let mut v = codes.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            for codes in &next {
                let w: Word = codes.iter().map(|&c| Letter::from_code(c)).collect();
                if w.is_reduced() {
                    out.insert(w);
                }
            }
            frontier = next;
        }
        out
    }

    #[test]
    fn small_ball_in_rank_one() {
        let al = Alphabet::new(["a"]).unwrap();
        let words: Vec<String> = ball(&al, 2).map(|w| al.render(&w)).collect();
        assert_eq!(words, ["1", "a", "a^-1", "a a", "a^-1 a^-1"]);
    }

    #[test]
    fn counts_match_closed_form() {
        assert_eq!(ball_size(2, 1), 5);
        assert_eq!(ball_size(6, 3), 1597);
        let six = Alphabet::standard(6).unwrap();
        assert_eq!(ball(&six, 3).count(), 1597);
        for n in 1..=3 {
            let al = Alphabet::standard(n).unwrap();
            for r in 0..=6 {
                assert_eq!(ball(&al, r).count() as u128, ball_size(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn ball_agrees_with_exhaustive_filter() {
        for n in 1..=3 {
            let al = Alphabet::standard(n).unwrap();
            for r in 0..=4 {
                let listed: Vec<Word> = ball(&al, r).collect();
                let mut sorted = listed.clone();
                sorted.sort();
                assert_eq!(listed, sorted, "order n={n} r={r}");
                let set: BTreeSet<Word> = listed.into_iter().collect();
                assert_eq!(set, brute_force(n, r));
            }
        }
    }

    #[test]
    fn partitions_cover_ball_once() {
        let al = Alphabet::standard(3).unwrap();
        for r in 0..=4 {
            let mut all: Vec<Word> = ball_partitions(&al, r).into_iter().flatten().collect();
            all.sort();
            let direct: Vec<Word> = ball(&al, r).collect();
            assert_eq!(all, direct);
        }
    }

    #[test]
    fn sphere_lengths() {
        let al = Alphabet::standard(2).unwrap();
        assert_eq!(sphere(&al, 0).count(), 1);
        assert_eq!(sphere(&al, 3).count(), 4 * 3 * 3);
        assert!(sphere(&al, 3).all(|w| w.len() == 3 && w.is_reduced()));
    }
}
