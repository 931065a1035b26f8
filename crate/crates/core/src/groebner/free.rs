use std::fmt;

use crate::arith::{Coef, Field, Monomial, Poly};

/// Element of a graded free module `⊕ A(-a_i)`, stored sparsely by component.
///
/// Components are strictly increasing in index and never zero. Twists live
/// with the ambient module, not with the element.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeModElem {
    comps: Vec<(usize, Poly)>,
}

impl FreeModElem {
    pub fn zero() -> Self {
        FreeModElem { comps: Vec::new() }
    }

    /// The basis vector `e_i`.
    pub fn basis(i: usize, nvars: usize, field: Field) -> Self {
        FreeModElem {
            comps: vec![(i, Poly::one(nvars, field))],
        }
    }

    pub fn single(i: usize, p: Poly) -> Self {
        if p.is_zero() {
            FreeModElem::zero()
        } else {
            FreeModElem { comps: vec![(i, p)] }
        }
    }

    pub fn from_dense(v: Vec<Poly>) -> Self {
        FreeModElem {
            comps: v.into_iter().enumerate().filter(|(_, p)| !p.is_zero()).collect(),
        }
    }

    pub fn from_sparse(mut v: Vec<(usize, Poly)>) -> Self {
        v.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Poly)> = Vec::with_capacity(v.len());
        for (i, p) in v {
            match out.last_mut() {
                Some((j, q)) if *j == i => *q = q.add(&p),
                _ => out.push((i, p)),
            }
        }
        out.retain(|(_, p)| !p.is_zero());
        FreeModElem { comps: out }
    }

    pub fn comps(&self) -> &[(usize, Poly)] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<(usize, Poly)> {
        self.comps
    }

    pub fn get(&self, i: usize) -> Option<&Poly> {
        self.comps
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.comps[k].1)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.comps.last().map(|(i, _)| *i)
    }

    pub fn to_dense(&self, rank: usize, nvars: usize, field: Field) -> Vec<Poly> {
        let mut v = vec![Poly::zero(nvars, field); rank];
        for (i, p) in &self.comps {
            v[*i] = p.clone();
        }
        v
    }

    fn zip_with(&self, other: &FreeModElem, f: impl Fn(Option<&Poly>, Option<&Poly>) -> Poly) -> FreeModElem {
        let mut out = Vec::with_capacity(self.comps.len() + other.comps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.comps.len() || j < other.comps.len() {
            let a = self.comps.get(i);
            let b = other.comps.get(j);
            let (idx, p) = match (a, b) {
                (Some((ia, pa)), Some((ib, pb))) if ia == ib => {
                    i += 1;
                    j += 1;
                    (*ia, f(Some(pa), Some(pb)))
                }
                (Some((ia, pa)), Some((ib, _))) if ia < ib => {
                    i += 1;
                    (*ia, f(Some(pa), None))
                }
                (Some((ia, pa)), None) => {
                    i += 1;
                    (*ia, f(Some(pa), None))
                }
                (_, Some((ib, pb))) => {
                    j += 1;
                    (*ib, f(None, Some(pb)))
                }
                (None, None) => unreachable!(),
            };
            if !p.is_zero() {
                out.push((idx, p));
            }
        }
        FreeModElem { comps: out }
    }

    pub fn add(&self, other: &FreeModElem) -> FreeModElem {
        self.zip_with(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.add(b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => unreachable!(),
        })
    }

    pub fn sub(&self, other: &FreeModElem) -> FreeModElem {
        self.zip_with(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => a.sub(b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.neg(),
            (None, None) => unreachable!(),
        })
    }

    pub fn neg(&self) -> FreeModElem {
        FreeModElem {
            comps: self.comps.iter().map(|(i, p)| (*i, p.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coef) -> FreeModElem {
        if c.is_zero() {
            return FreeModElem::zero();
        }
        FreeModElem {
            comps: self.comps.iter().map(|(i, p)| (*i, p.scale(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coef) -> FreeModElem {
        if c.is_zero() {
            return FreeModElem::zero();
        }
        FreeModElem {
            comps: self.comps.iter().map(|(i, p)| (*i, p.mul_term(m, c))).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Poly) -> FreeModElem {
        FreeModElem {
            comps: self
                .comps
                .iter()
                .map(|(i, p)| (*i, p.mul(f)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Applies `f` to each component, dropping those that vanish.
    pub fn map_comps(&self, f: impl Fn(&Poly) -> Poly) -> FreeModElem {
        FreeModElem {
            comps: self
                .comps
                .iter()
                .map(|(i, p)| (*i, f(p)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    /// Reindexes components through `f`; components mapped to `None` are dropped.
    pub fn reindex(&self, f: impl Fn(usize) -> Option<usize>) -> FreeModElem {
        FreeModElem::from_sparse(
            self.comps
                .iter()
                .filter_map(|(i, p)| f(*i).map(|j| (j, p.clone())))
                .collect(),
        )
    }

    /// Position-over-term leading term: first component, its leading term.
    pub fn lead(&self) -> Option<(usize, &Monomial, &Coef)> {
        self.comps.first().map(|(i, p)| {
            let (m, c) = p.leading().expect("nonzero component");
            (*i, m, c)
        })
    }

    /// Degree with respect to the given twists, if homogeneous.
    pub fn degree(&self, twists: &[i32]) -> Option<i32> {
        let mut deg = None;
        for (i, p) in &self.comps {
            if !p.is_homogeneous() {
                return None;
            }
            let d = p.degree().unwrap() as i32 + twists[*i];
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self, twists: &[i32]) -> bool {
        self.is_zero() || self.degree(twists).is_some()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.comps.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(i, p)| format!("({})*e{}", p.fmt_with(names), i))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for FreeModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|(i, p)| format!("{i}:{p}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancels_components() {
        let q = Field::Rational;
        let x = Poly::var(2, q, 0);
        let y = Poly::var(2, q, 1);
        let a = FreeModElem::from_dense(vec![x.clone(), y.clone()]);
        let b = FreeModElem::from_dense(vec![x.neg(), Poly::zero(2, q)]);
        let s = a.add(&b);
        assert_eq!(s.comps().len(), 1);
        assert_eq!(s.get(1), Some(&y));
        assert_eq!(s.lead().unwrap().0, 1);
        assert_eq!(a.degree(&[0, 0]), Some(1));
        assert_eq!(a.degree(&[0, 1]), None);
    }
}
