//! Littlewood-Richardson coefficients by counting LR tableaux.
//!
//! An LR tableau of shape `nu/lambda` and content `mu` is a filling of the
//! skew diagram with `mu_1` ones, `mu_2` twos, ... such that rows weakly
//! increase, columns strictly increase, and the reading word (rows top to
//! bottom, each row right to left) is a lattice word. The filler below
//! visits cells in reading order, so both tableau conditions and the lattice
//! condition are checked as each entry is placed.

use crate::grassmann::Partition;

/// One LR tableau. Row `r` holds the entries of cells `inner_r .. outer_r`,
/// left to right, with letters starting at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrTableau {
    inner: Partition,
    outer: Partition,
    rows: Vec<Vec<usize>>,
}

impl LrTableau {
    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn entry(&self, r: usize, c: usize) -> Option<usize> {
        let lo = self.inner.part(r);
        if c < lo || c >= self.outer.part(r) {
            return None;
        }
        Some(self.rows[r][c - lo])
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// Letter multiplicities `(#1, #2, ...)`.
    pub fn content(&self) -> Vec<usize> {
        let word = self.reading_word();
        let max = word.iter().copied().max().unwrap_or(0);
        (1..=max).map(|x| word.iter().filter(|&&w| w == x).count()).collect()
    }

    /// Re-checks every tableau condition from scratch.
    pub fn is_valid(&self) -> bool {
        let shape_ok = self.outer.contains(&self.inner)
            && self.rows.len() == self.outer.num_rows()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(r, row)| row.len() == self.outer.part(r) - self.inner.part(r));
        if !shape_ok {
            return false;
        }
        let rows_weak = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_strict = (1..self.rows.len()).all(|r| {
            (0..self.outer.part(r)).all(|c| match (self.entry(r - 1, c), self.entry(r, c)) {
                (Some(above), Some(here)) => above < here,
                _ => true,
            })
        });
        let letters_ok = self.rows.iter().flatten().all(|&x| x >= 1);
        let content = self.content();
        rows_weak
            && cols_strict
            && letters_ok
            && is_lattice_word(&self.reading_word())
            && content.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Every prefix contains at least as many `i` as `i+1`. Letters start at 1.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 2] < counts[x - 1] {
            return false;
        }
    }
    true
}

struct Filler {
    inner: Vec<usize>,
    outer: Vec<usize>,
    content: Vec<usize>,
    counts: Vec<usize>,
    grid: Vec<Vec<usize>>,
    cells: Vec<(usize, usize)>,
}

impl Filler {
    /// `None` when the shape is incompatible (no tableaux at all).
    fn new(lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<Filler> {
        if !nu.contains(lambda) || nu.weight() != lambda.weight() + mu.weight() {
            return None;
        }
        let rows = nu.num_rows();
        let inner: Vec<usize> = (0..rows).map(|r| lambda.part(r)).collect();
        let outer: Vec<usize> = (0..rows).map(|r| nu.part(r)).collect();
        let cells = (0..rows)
            .flat_map(|r| (inner[r]..outer[r]).rev().map(move |c| (r, c)))
            .collect();
        let content = mu.trimmed().parts().to_vec();
        Some(Filler {
            grid: outer.iter().map(|&w| vec![0; w]).collect(),
            counts: vec![0; content.len()],
            inner,
            outer,
            content,
            cells,
        })
    }

    fn run<F: FnMut(&Filler)>(&mut self, visit: &mut F) {
        self.place(0, visit);
    }

    fn place<F: FnMut(&Filler)>(&mut self, t: usize, visit: &mut F) {
        if t == self.cells.len() {
            visit(self);
            return;
        }
        let (r, c) = self.cells[t];
        // weakly increasing rows: bounded by the already-filled right neighbour
        let hi = if c + 1 < self.outer[r] {
            self.grid[r][c + 1]
        } else {
            self.content.len()
        };
        // strictly increasing columns
        let lo = if r > 0 && c >= self.inner[r - 1] {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        for x in lo..=hi {
            let v = x - 1;
            if self.counts[v] == self.content[v] {
                continue;
            }
            if v > 0 && self.counts[v - 1] <= self.counts[v] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = x;
            self.place(t + 1, visit);
            self.counts[v] -= 1;
        }
        self.grid[r][c] = 0;
    }

    fn snapshot(&self) -> LrTableau {
        LrTableau {
            inner: Partition::from_parts_unchecked(self.inner.clone()),
            outer: Partition::from_parts_unchecked(self.outer.clone()),
            rows: (0..self.outer.len())
                .map(|r| self.grid[r][self.inner[r]..].to_vec())
                .collect(),
        }
    }
}

/// `c^nu_{lambda,mu}`: the number of LR tableaux of shape `nu/lambda` and
/// content `mu`. Zero when `lambda` is not inside `nu` or the weights do not
/// add up.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let Some(mut filler) = Filler::new(lambda, mu, nu) else {
        return 0;
    };
    let mut count = 0u64;
    filler.run(&mut |_| count += 1);
    count
}

/// All LR tableaux of shape `nu/lambda` and content `mu`, in the order the
/// filler finds them.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<LrTableau> {
    let Some(mut filler) = Filler::new(lambda, mu, nu) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    filler.run(&mut |f| out.push(f.snapshot()));
    out
}
