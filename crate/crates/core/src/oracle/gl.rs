//! Raw enumeration of `GL(n, p)` on small integer residues.

/// `GF(p)^n` with vectors indexed by their base-`p` digits, most significant
/// coordinate first, so index order is lexicographic coordinate order.
#[derive(Clone, Debug)]
pub(crate) struct Space {
    pub n: usize,
    pub p: u32,
    pub size: usize,
    digits: Vec<u32>,
}

impl Space {
    pub fn new(n: usize, p: u32) -> Space {
        let size = (p as usize).pow(n as u32);
        let mut digits = vec![0; size * n];
        for v in 0..size {
            let mut rest = v;
            for j in (0..n).rev() {
                digits[v * n + j] = (rest % p as usize) as u32;
                rest /= p as usize;
            }
        }
        Space { n, p, size, digits }
    }

    pub fn coords(&self, v: usize) -> &[u32] {
        &self.digits[v * self.n..(v + 1) * self.n]
    }

    pub fn index(&self, coords: &[u32]) -> usize {
        coords.iter().fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }

    /// `a + c * b`.
    fn add_scaled(&self, a: usize, c: u32, b: usize) -> usize {
        let p = self.p as u64;
        let (da, db) = (self.coords(a), self.coords(b));
        da.iter().zip(db).fold(0, |acc, (&x, &y)| {
            acc * self.p as usize + ((x as u64 + c as u64 * y as u64) % p) as usize
        })
    }

    /// Image of vector `v` under the matrix with the given rows.
    pub fn apply(&self, rows: &[usize], v: usize) -> usize {
        let p = self.p as u64;
        let dv = self.coords(v);
        rows.iter().fold(0, |acc, &r| {
            let dot = self
                .coords(r)
                .iter()
                .zip(dv)
                .fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p);
            acc * self.p as usize + dot as usize
        })
    }

    /// Index of the normalized representative (first nonzero coordinate 1).
    pub fn normalize(&self, v: usize) -> usize {
        let d = self.coords(v);
        let Some(&lead) = d.iter().find(|&&c| c != 0) else {
            return 0;
        };
        let inv = inverse_mod(lead, self.p);
        let p = self.p as u64;
        d.iter().fold(0, |acc, &c| {
            acc * self.p as usize + ((c as u64 * inv as u64) % p) as usize
        })
    }
}

pub(crate) fn inverse_mod(a: u32, p: u32) -> u32 {
    let (p64, mut base, mut exp, mut acc) = (p as u64, a as u64 % p as u64, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        exp >>= 1;
    }
    acc as u32
}

/// Invertible matrices as row lists (vector indices), generated row by row
/// with each row outside the span of the previous rows, in lexicographic
/// order of row indices. Restricted to the first rows whose ordinal among
/// nonzero vectors is congruent to `worker` modulo `workers`.
pub(crate) struct GlRows {
    space: Space,
    worker: usize,
    workers: usize,
    rows: Vec<usize>,
    /// `spans[l]`: membership in the span of the first `l` rows.
    spans: Vec<Vec<bool>>,
    span_elems: Vec<Vec<usize>>,
    started: bool,
    done: bool,
}

impl GlRows {
    pub fn new(space: Space, worker: usize, workers: usize) -> GlRows {
        let n = space.n;
        let mut zero_span = vec![false; space.size];
        zero_span[0] = true;
        let mut spans = vec![vec![false; space.size]; n];
        spans[0] = zero_span;
        let mut span_elems = vec![Vec::new(); n];
        span_elems[0] = vec![0];
        GlRows {
            space,
            worker,
            workers: workers.max(1),
            rows: vec![0; n],
            spans,
            span_elems,
            started: false,
            done: false,
        }
    }

    fn admissible(&self, level: usize, c: usize) -> bool {
        !self.spans[level][c] && (level > 0 || (c - 1) % self.workers == self.worker)
    }

    fn next_candidate(&self, level: usize, after: Option<usize>) -> Option<usize> {
        let start = after.map_or(0, |c| c + 1);
        (start..self.space.size).find(|&c| self.admissible(level, c))
    }

    fn place(&mut self, level: usize, c: usize) {
        self.rows[level] = c;
        if level + 1 < self.space.n {
            let mut member = std::mem::take(&mut self.spans[level + 1]);
            member.iter_mut().for_each(|m| *m = false);
            let mut elems = Vec::with_capacity(self.span_elems[level].len() * self.space.p as usize);
            for &s in &self.span_elems[level] {
                for a in 0..self.space.p {
                    let t = self.space.add_scaled(s, a, c);
                    if !member[t] {
                        member[t] = true;
                        elems.push(t);
                    }
                }
            }
            self.spans[level + 1] = member;
            self.span_elems[level + 1] = elems;
        }
    }

    /// Fills levels `from..n` with their first admissible candidates.
    fn fill(&mut self, from: usize) -> bool {
        for level in from..self.space.n {
            match self.next_candidate(level, None) {
                Some(c) => self.place(level, c),
                None => return false,
            }
        }
        true
    }
}

impl Iterator for GlRows {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.fill(0) {
                return Some(self.rows.clone());
            }
            self.done = true;
            return None;
        }
        let mut level = self.space.n;
        while level > 0 {
            level -= 1;
            if let Some(c) = self.next_candidate(level, Some(self.rows[level])) {
                self.place(level, c);
                if self.fill(level + 1) {
                    return Some(self.rows.clone());
                }
            }
        }
        self.done = true;
        None
    }
}

/// `|GL(n, p)| = (p^n - 1)(p^n - p)...(p^n - p^(n-1))`, saturating.
pub fn gl_order(n: usize, p: u64) -> u128 {
    let p = p as u128;
    let Some(q) = u32::try_from(n).ok().and_then(|n| p.checked_pow(n)) else {
        return u128::MAX;
    };
    let mut order: u128 = 1;
    let mut pk: u128 = 1;
    for _ in 0..n {
        order = match order.checked_mul(q - pk) {
            Some(o) => o,
            None => return u128::MAX,
        };
        pk *= p;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn orders() {
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(2, 3), 48);
        assert_eq!(gl_order(3, 2), 168);
        assert_eq!(gl_order(3, 3), 11232);
        assert_eq!(gl_order(4, 5), 624 * 620 * 600 * 500);
        assert_eq!(gl_order(40, 1_000_003), u128::MAX);
    }

    #[test]
    fn raw_enumeration_counts_and_partitions() {
        for (n, p) in [(2, 2), (2, 3), (3, 2), (2, 5), (3, 3)] {
            let space = Space::new(n, p);
            let all: Vec<Vec<usize>> = GlRows::new(space.clone(), 0, 1).collect();
            assert_eq!(all.len() as u128, gl_order(n, p as u64));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.windows(2).all(|w| w[0] < w[1]));

            let mut merged: Vec<Vec<usize>> = (0..3).flat_map(|w| GlRows::new(space.clone(), w, 3)).collect();
            merged.sort();
            assert_eq!(merged, all);
        }
    }

    #[test]
    fn normalize_and_apply() {
        let s = Space::new(2, 5);
        let v = s.index(&[0, 3]);
        assert_eq!(s.coords(s.normalize(v)), &[0, 1]);
        let swap = [s.index(&[0, 1]), s.index(&[1, 0])];
        assert_eq!(s.coords(s.apply(&swap, s.index(&[2, 4]))), &[4, 2]);
        assert_eq!(inverse_mod(3, 7), 5);
    }
}
