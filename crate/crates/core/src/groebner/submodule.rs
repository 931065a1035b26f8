use super::buchberger::{groebner, Reducer};
use super::free::FreeModElem;
use super::freemodule::FreeModule;
use super::ring::Ring;
use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::linalg::Echelon;

/// Submodule of a graded free module over a ring, given by generators.
#[derive(Clone, Debug)]
pub struct SubmodulePres {
    ring: Ring,
    twists: Vec<i32>,
    gens: Vec<FreeModElem>,
    degrees: Vec<i32>,
}

impl SubmodulePres {
    /// Generators must be homogeneous; zero generators need `with_degrees`.
    pub fn new(ring: Ring, twists: Vec<i32>, gens: Vec<FreeModElem>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "generator {k} is zero and has no degree"
                )));
            }
            degrees.push(g.degree(&twists).ok_or(Error::NotHomogeneous { index: k })?);
        }
        Self::with_degrees(ring, twists, gens, degrees)
    }

    pub fn with_degrees(ring: Ring, twists: Vec<i32>, gens: Vec<FreeModElem>, degrees: Vec<i32>) -> Result<Self> {
        if degrees.len() != gens.len() {
            return Err(Error::InputMismatch("one degree per generator required".into()));
        }
        for (k, g) in gens.iter().enumerate() {
            if g.max_index().is_some_and(|i| i >= twists.len()) {
                return Err(Error::InputMismatch(format!(
                    "generator {k} has more components than the ambient rank {}",
                    twists.len()
                )));
            }
            for (_, p) in g.comps() {
                ring.check_poly(p)?;
            }
            if !g.is_zero() && g.degree(&twists) != Some(degrees[k]) {
                return Err(Error::NotHomogeneous { index: k });
            }
        }
        Ok(SubmodulePres {
            ring,
            twists,
            gens,
            degrees,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn ambient_rank(&self) -> usize {
        self.twists.len()
    }

    pub fn generators(&self) -> &[FreeModElem] {
        &self.gens
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn ambient(&self) -> FreeModule {
        FreeModule::new(self.ring.clone(), self.twists.clone())
    }

    /// `I * e_j` for the Gröbner basis of the defining ideal.
    fn ideal_multiples(&self) -> Vec<FreeModElem> {
        let mut out = Vec::new();
        for j in 0..self.twists.len() {
            for h in self.ring.ideal().groebner() {
                out.push(FreeModElem::single(j, h.clone()));
            }
        }
        out
    }

    /// Reduced Gröbner basis over the polynomial ring of the preimage of the
    /// submodule, i.e. the generators together with `I` times the ambient.
    pub fn groebner_basis(&self) -> Vec<FreeModElem> {
        let mut all = self.gens.clone();
        all.extend(self.ideal_multiples());
        groebner(&all, &self.twists, self.twists.len() == 1)
    }

    pub fn reducer(&self) -> Reducer {
        Reducer::new(&self.groebner_basis())
    }

    /// Normal form of `v` modulo the submodule (and the ring's ideal).
    pub fn normal_form(&self, v: &FreeModElem) -> Result<FreeModElem> {
        self.check_elem(v)?;
        Ok(self.reducer().reduce(v))
    }

    pub fn contains(&self, v: &FreeModElem) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    fn check_elem(&self, v: &FreeModElem) -> Result<()> {
        if v.max_index().is_some_and(|i| i >= self.twists.len()) {
            return Err(Error::InputMismatch(format!(
                "element has more components than the ambient rank {}",
                self.twists.len()
            )));
        }
        for (_, p) in v.comps() {
            self.ring.check_poly(p)?;
        }
        Ok(())
    }

    /// Generators of the kernel of `R^m -> F`, `e_k -> gens[k]`, over the ring.
    ///
    /// Computed from a position-over-term Gröbner basis of the graph
    /// `(g_k, e_k)` in `F ⊕ P^m` with the ambient positions first; elements
    /// vanishing on the ambient part generate the kernel over `P`, and their
    /// images modulo the ideal generate it over `R`.
    pub fn syzygies(&self) -> SubmodulePres {
        let r = self.twists.len();
        let m = self.gens.len();
        let (n, field) = (self.ring.nvars(), self.ring.field());
        let mut twists = self.twists.clone();
        twists.extend(self.degrees.iter().copied());
        let mut graph: Vec<FreeModElem> = self
            .gens
            .iter()
            .enumerate()
            .map(|(k, g)| g.add(&FreeModElem::basis(r + k, n, field)))
            .collect();
        graph.extend(self.ideal_multiples());
        let gb = groebner(&graph, &twists, false);
        let mut syz: Vec<FreeModElem> = Vec::new();
        for g in gb {
            if g.lead().is_some_and(|(p, _, _)| p >= r) {
                let s = g
                    .reindex(|i| i.checked_sub(r))
                    .map_comps(|p| self.ring.normal_form(p));
                if !s.is_zero() && !syz.contains(&s) {
                    syz.push(s);
                }
            }
        }
        let degrees = syz.iter().map(|s| s.degree(&self.degrees).expect("homogeneous")).collect();
        let out = SubmodulePres {
            ring: self.ring.clone(),
            twists: self.degrees.clone(),
            gens: syz,
            degrees,
        };
        debug_assert!(m == out.twists.len());
        out
    }

    /// `dim_k` of the degree `d` piece of the submodule, via leading terms.
    pub fn graded_piece_dim(&self, d: i32) -> usize {
        self.ambient().dim(d) - self.quotient_piece_dim(d)
    }

    /// `dim_k` of the degree `d` piece of the cokernel: module monomials of
    /// degree `d` under no leading term of the Gröbner basis.
    pub fn quotient_piece_dim(&self, d: i32) -> usize {
        let gb = self.reducer();
        let n = self.ring.nvars();
        let mut count = 0;
        for (j, &a) in self.twists.iter().enumerate() {
            if d < a {
                continue;
            }
            for m in crate::arith::Monomial::all_of_degree(n, (d - a) as u32) {
                if !gb.is_reducible(j, &m) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Indices of a minimal generating subset, by graded Nakayama: a generator
    /// is kept unless it lies in the span of multiples of earlier kept
    /// generators of lower degree and kept generators of its own degree.
    pub fn minimal_subset(&self) -> Vec<usize> {
        let fm = self.ambient();
        let mut order: Vec<usize> = (0..self.gens.len()).filter(|&k| !self.gens[k].is_zero()).collect();
        order.sort_by_key(|&k| (self.degrees[k], k));
        let mut kept: Vec<usize> = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let d = self.degrees[order[i]];
            let piece = fm.piece(d);
            let mut ech = Echelon::new(self.ring.field());
            for &k in &kept {
                let e = d - self.degrees[k];
                for mono in self.ring.std_basis(e).monos.iter() {
                    let t = Poly::monomial(mono.clone(), self.ring.field().one());
                    ech.insert(&fm.coords(&self.gens[k].mul_poly(&t), &piece));
                }
            }
            while i < order.len() && self.degrees[order[i]] == d {
                let k = order[i];
                if ech.insert(&fm.coords(&self.gens[k], &piece)) {
                    kept.push(k);
                }
                i += 1;
            }
        }
        kept.sort();
        kept
    }

    /// The same submodule with a minimal generating set.
    pub fn minimalized(&self) -> SubmodulePres {
        let keep = self.minimal_subset();
        SubmodulePres {
            ring: self.ring.clone(),
            twists: self.twists.clone(),
            gens: keep.iter().map(|&k| self.gens[k].clone()).collect(),
            degrees: keep.iter().map(|&k| self.degrees[k]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{default_var_names, Field};
    use crate::groebner::ring::GradedRing;

    fn vars(r: &Ring) -> Vec<Poly> {
        (0..r.nvars()).map(|i| r.var(i)).collect()
    }

    #[test]
    fn koszul_relation() {
        let r = GradedRing::polynomial(Field::Rational, 2);
        let v = vars(&r);
        let s = SubmodulePres::new(
            r.clone(),
            vec![0],
            vec![FreeModElem::single(0, v[0].clone()), FreeModElem::single(0, v[1].clone())],
        )
        .unwrap();
        let syz = s.syzygies().minimalized();
        assert_eq!(syz.generators().len(), 1);
        assert_eq!(syz.degrees(), &[2]);
        let g = &syz.generators()[0];
        // (y, -x) up to scalar
        let ratio = g.get(0).unwrap().leading().unwrap().1.clone();
        let expect = FreeModElem::from_dense(vec![v[1].clone(), v[0].neg()]).scale(&ratio);
        assert_eq!(g, &expect);
    }

    #[test]
    fn syzygy_over_quotient() {
        let f = Field::Prime(32003);
        let x = Poly::var(1, f, 0);
        let r = GradedRing::new(f, default_var_names(1), vec![x.mul(&x)]).unwrap();
        let s = SubmodulePres::new(r.clone(), vec![0], vec![FreeModElem::single(0, x.clone())]).unwrap();
        let syz = s.syzygies().minimalized();
        assert_eq!(syz.generators(), &[FreeModElem::single(0, x.clone())]);
        assert_eq!(syz.degrees(), &[2]);
    }

    #[test]
    fn unit_generator_has_no_syzygies() {
        let r = GradedRing::polynomial(Field::Rational, 2);
        let s = SubmodulePres::new(r.clone(), vec![0], vec![FreeModElem::single(0, r.one())]).unwrap();
        assert!(s.syzygies().generators().is_empty());
    }

    #[test]
    fn membership_and_dimensions() {
        let r = GradedRing::polynomial(Field::Rational, 2);
        let v = vars(&r);
        let gens = vec![
            FreeModElem::single(0, v[0].mul(&v[0])),
            FreeModElem::single(0, v[0].mul(&v[1])),
        ];
        let s = SubmodulePres::new(r.clone(), vec![0], gens).unwrap();
        let x2y = FreeModElem::single(0, v[0].mul(&v[0]).mul(&v[1]));
        assert!(s.contains(&x2y).unwrap());
        let y2 = FreeModElem::single(0, v[1].mul(&v[1]));
        assert_eq!(s.normal_form(&y2).unwrap(), y2);
        assert_eq!(s.graded_piece_dim(2), 2);
        assert_eq!(s.quotient_piece_dim(3), 1);
        let other = GradedRing::polynomial(Field::Rational, 3);
        assert!(matches!(
            s.normal_form(&FreeModElem::single(0, other.var(0))),
            Err(Error::InputMismatch(_))
        ));
    }

    #[test]
    fn inhomogeneous_generator_reports_index() {
        let r = GradedRing::polynomial(Field::Rational, 2);
        let v = vars(&r);
        let bad = FreeModElem::from_dense(vec![v[0].clone(), v[1].mul(&v[1])]);
        let err = SubmodulePres::new(r, vec![0, 0], vec![FreeModElem::single(0, v[0].clone()), bad]).unwrap_err();
        assert_eq!(err, Error::NotHomogeneous { index: 1 });
    }
}
