//! Sparse exact linear algebra over a coefficient field.

use std::collections::BTreeMap;

use crate::arith::{Coef, Field};

/// Sparse vector: strictly increasing indices, nonzero entries.
pub type SparseVec = Vec<(usize, Coef)>;

pub fn sv_scale(v: &SparseVec, c: &Coef) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, a)| (*i, a.mul(c))).collect()
}

/// `a + c*b`.
pub fn sv_axpy(a: &SparseVec, c: &Coef, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c.mul(&b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.add(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_from_map(m: BTreeMap<usize, Coef>) -> SparseVec {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn acc_add(acc: &mut BTreeMap<usize, Coef>, i: usize, c: Coef) {
    use std::collections::btree_map::Entry;
    match acc.entry(i) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    v: SparseVec,
    combo: SparseVec,
}

/// Incremental row echelon form keyed by pivot column.
///
/// Each stored row has its pivot (smallest column) normalized to one. With
/// tracking enabled, each row also records how it was built from the
/// inserted vectors, identified by caller-chosen tags.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: BTreeMap<usize, Row>,
    track: bool,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
            track: false,
        }
    }

    pub fn tracking(field: Field) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
            track: true,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    /// Reduces `v` against all rows. Returns `(rem, combo)` with
    /// `v = rem + sum combo[t] * inserted[t]` and `rem` free of pivot columns.
    pub fn reduce_tracked(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut acc: BTreeMap<usize, Coef> = v.iter().cloned().collect();
        let mut combo: BTreeMap<usize, Coef> = BTreeMap::new();
        let mut out = Vec::new();
        while let Some((c, a)) = acc.pop_first() {
            match self.rows.get(&c) {
                Some(row) => {
                    let na = a.neg();
                    for (col, b) in &row.v[1..] {
                        acc_add(&mut acc, *col, na.mul(b));
                    }
                    if self.track {
                        for (t, b) in &row.combo {
                            acc_add(&mut combo, *t, a.mul(b));
                        }
                    }
                }
                None => out.push((c, a)),
            }
        }
        (out, sv_from_map(combo))
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Coef> = v.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((c, a)) = acc.pop_first() {
            match self.rows.get(&c) {
                Some(row) => {
                    let na = a.neg();
                    for (col, b) in &row.v[1..] {
                        acc_add(&mut acc, *col, na.mul(b));
                    }
                }
                None => out.push((c, a)),
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v` under `tag`. Returns `None` if `v` was independent, or the
    /// linear relation among inserted vectors (indexed by tag) it produced.
    pub fn insert_tagged(&mut self, v: &SparseVec, tag: usize) -> Option<SparseVec> {
        let (rem, combo) = if self.track {
            self.reduce_tracked(v)
        } else {
            (self.reduce(v), Vec::new())
        };
        let own = vec![(tag, self.field.one())];
        let rel = if self.track {
            sv_axpy(&own, &self.field.one().neg(), &combo)
        } else {
            Vec::new()
        };
        if rem.is_empty() {
            return Some(rel);
        }
        let inv = rem[0].1.inv().expect("pivot is nonzero");
        let row = Row {
            v: sv_scale(&rem, &inv),
            combo: sv_scale(&rel, &inv),
        };
        self.rows.insert(rem[0].0, row);
        None
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let rem = self.reduce(v);
        if rem.is_empty() {
            return false;
        }
        let inv = rem[0].1.inv().expect("pivot is nonzero");
        self.rows.insert(
            rem[0].0,
            Row {
                v: sv_scale(&rem, &inv),
                combo: Vec::new(),
            },
        );
        true
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values().map(|r| &r.v)
    }

    /// Back-substituted basis of the span: every pivot column appears in exactly one row.
    pub fn reduced_basis(&self) -> Vec<SparseVec> {
        let mut out: Vec<SparseVec> = Vec::with_capacity(self.rows.len());
        let mut done = Echelon::new(self.field);
        for (_, row) in self.rows.iter().rev() {
            let rest: SparseVec = row.v[1..].to_vec();
            let mut r = vec![row.v[0].clone()];
            // Clear later pivot columns using rows already made reduced.
            let red = done.reduce(&rest);
            r.extend(red);
            done.rows.insert(
                row.v[0].0,
                Row {
                    v: r.clone(),
                    combo: Vec::new(),
                },
            );
            out.push(r);
        }
        out.reverse();
        out
    }
}

/// Basis of `{c : sum c_j * vectors[j] = 0}`, as sparse vectors over the input indices.
pub fn kernel(field: Field, vectors: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::tracking(field);
    let mut out = Vec::new();
    for (j, v) in vectors.iter().enumerate() {
        if let Some(rel) = e.insert_tagged(v, j) {
            out.push(rel);
        }
    }
    out
}

pub fn rank(field: Field, vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
