use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::buchberger::{groebner, Reducer};
use super::free::FreeModElem;
use crate::arith::{default_var_names, Coef, Field, Monomial, Poly};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;

/// Shared handle to a graded ring.
pub type Ring = Arc<GradedRing>;

/// Homogeneous ideal of a polynomial ring with its reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    gens: Vec<Poly>,
    gb: Vec<Poly>,
}

impl Ideal {
    /// Checks homogeneity and computes the reduced Gröbner basis.
    pub fn new(nvars: usize, field: Field, gens: Vec<Poly>) -> Result<Ideal> {
        for (k, g) in gens.iter().enumerate() {
            if g.nvars() != nvars || g.field() != field {
                return Err(Error::InputMismatch(format!(
                    "generator {k} lives in {}[{} vars], expected {}[{} vars]",
                    g.field(),
                    g.nvars(),
                    field,
                    nvars
                )));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous { index: k });
            }
        }
        let elems: Vec<FreeModElem> = gens.iter().map(|g| FreeModElem::single(0, g.clone())).collect();
        let gb = groebner(&elems, &[0], true)
            .into_iter()
            .map(|e| e.into_comps().pop().unwrap().1)
            .collect();
        Ok(Ideal { gens, gb })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn groebner(&self) -> &[Poly] {
        &self.gb
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }
}

/// Reduced Gröbner basis of a homogeneous ideal.
pub fn groebner_basis(nvars: usize, field: Field, gens: &[Poly]) -> Result<Vec<Poly>> {
    Ok(Ideal::new(nvars, field, gens.to_vec())?.gb)
}

/// Normal form of `f` with respect to a Gröbner basis of an ideal.
pub fn normal_form(f: &Poly, basis: &[Poly]) -> Result<Poly> {
    if let Some(b) = basis.iter().find(|b| b.nvars() != f.nvars() || b.field() != f.field()) {
        return Err(Error::InputMismatch(format!(
            "polynomial in {}[{} vars] reduced by basis in {}[{} vars]",
            f.field(),
            f.nvars(),
            b.field(),
            b.nvars()
        )));
    }
    let r = Reducer::new(&basis.iter().map(|b| FreeModElem::single(0, b.clone())).collect::<Vec<_>>());
    Ok(r.reduce(&FreeModElem::single(0, f.clone()))
        .into_comps()
        .pop()
        .map(|(_, p)| p)
        .unwrap_or_else(|| Poly::zero(f.nvars(), f.field())))
}

/// Standard monomials of one degree with a reverse index.
#[derive(Debug)]
pub struct StdBasis {
    pub monos: Vec<Monomial>,
    pub index: HashMap<Monomial, usize>,
}

impl StdBasis {
    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }
}

/// Records that a ring was built as `Q/(f)` for a `Q`-regular sequence `f`.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub base: Ring,
    pub sequence: Vec<Poly>,
}

/// A standard-graded quotient `k[x_1..x_n]/I` with cached Gröbner data.
pub struct GradedRing {
    label: String,
    field: Field,
    names: Vec<String>,
    ideal: Ideal,
    reducer: Reducer,
    deformation: Option<Deformation>,
    std_cache: Mutex<HashMap<u32, Arc<StdBasis>>>,
    top: OnceLock<Option<u32>>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedRing({self})")
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))?;
        if !self.ideal.gens.is_empty() {
            let g: Vec<String> = self.ideal.gens.iter().map(|p| p.fmt_with(&self.names)).collect();
            write!(f, "/({})", g.join(", "))?;
        }
        Ok(())
    }
}

impl GradedRing {
    pub fn new(field: Field, names: Vec<String>, gens: Vec<Poly>) -> Result<Ring> {
        Self::build(String::new(), field, names, gens, None)
    }

    pub fn with_label(label: &str, field: Field, names: Vec<String>, gens: Vec<Poly>) -> Result<Ring> {
        Self::build(label.to_string(), field, names, gens, None)
    }

    /// Polynomial ring in `n` variables with default names.
    pub fn polynomial(field: Field, n: usize) -> Ring {
        Self::build(String::new(), field, default_var_names(n), Vec::new(), None).expect("no generators")
    }

    pub(crate) fn build(
        label: String,
        field: Field,
        names: Vec<String>,
        gens: Vec<Poly>,
        deformation: Option<Deformation>,
    ) -> Result<Ring> {
        let n = names.len();
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let ideal = Ideal::new(n, field, gens)?;
        let reducer = Reducer::new(
            &ideal.gb.iter().map(|g| FreeModElem::single(0, g.clone())).collect::<Vec<_>>(),
        );
        Ok(Arc::new(GradedRing {
            label,
            field,
            names,
            ideal,
            reducer,
            deformation,
            std_cache: Mutex::new(HashMap::new()),
            top: OnceLock::new(),
        }))
    }

    /// The same ring with provenance `base/(sequence)` attached.
    pub fn with_deformation(&self, deformation: Deformation) -> Ring {
        Arc::new(GradedRing {
            label: self.label.clone(),
            field: self.field,
            names: self.names.clone(),
            ideal: self.ideal.clone(),
            reducer: self.reducer.clone(),
            deformation: Some(deformation),
            std_cache: Mutex::new(HashMap::new()),
            top: OnceLock::new(),
        })
    }

    pub fn relabeled(&self, label: &str) -> Ring {
        Arc::new(GradedRing {
            label: label.to_string(),
            field: self.field,
            names: self.names.clone(),
            ideal: self.ideal.clone(),
            reducer: self.reducer.clone(),
            deformation: self.deformation.clone(),
            std_cache: Mutex::new(HashMap::new()),
            top: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn deformation(&self) -> Option<&Deformation> {
        self.deformation.as_ref()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.ideal.is_zero()
    }

    /// The ambient polynomial ring `k[x_1..x_n]`.
    pub fn ambient(&self) -> Ring {
        Self::build(String::new(), self.field, self.names.clone(), Vec::new(), None).expect("no generators")
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.nvars(), self.field, i)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.nvars(), self.field)
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.nvars(), self.field)
    }

    pub fn constant(&self, c: Coef) -> Poly {
        Poly::constant(self.nvars(), c)
    }

    pub fn check_poly(&self, f: &Poly) -> Result<()> {
        if f.nvars() != self.nvars() || f.field() != self.field {
            return Err(Error::InputMismatch(format!(
                "polynomial in {}[{} vars] used in ring {}",
                f.field(),
                f.nvars(),
                self
            )));
        }
        Ok(())
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        if self.reducer.is_empty() {
            return f.clone();
        }
        self.reducer
            .reduce(&FreeModElem::single(0, f.clone()))
            .into_comps()
            .pop()
            .map(|(_, p)| p)
            .unwrap_or_else(|| self.zero())
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.reducer.is_reducible(0, m)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.normal_form(&a.mul(b))
    }

    /// Standard monomials of degree `d` (a basis of `R_d`), in descending order.
    pub fn std_basis(&self, d: i32) -> Arc<StdBasis> {
        let key = d.max(-1);
        if key < 0 {
            return Arc::new(StdBasis {
                monos: Vec::new(),
                index: HashMap::new(),
            });
        }
        let key = key as u32;
        if let Some(b) = self.std_cache.lock().unwrap().get(&key) {
            return b.clone();
        }
        let monos: Vec<Monomial> = Monomial::all_of_degree(self.nvars(), key)
            .into_iter()
            .filter(|m| self.is_standard(m))
            .collect();
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let b = Arc::new(StdBasis { monos, index });
        self.std_cache.lock().unwrap().insert(key, b.clone());
        b
    }

    /// `dim_k R_d`, by counting standard monomials.
    pub fn graded_piece_dim(&self, d: i32) -> usize {
        self.std_basis(d).len()
    }

    /// Coordinates of a homogeneous polynomial of degree `d` in the standard basis of `R_d`.
    pub fn coords(&self, f: &Poly, d: i32) -> SparseVec {
        let nf = self.normal_form(f);
        let b = self.std_basis(d);
        let mut out: SparseVec = nf
            .terms()
            .iter()
            .map(|(m, c)| {
                debug_assert_eq!(m.degree() as i32, d);
                (b.index[m], c.clone())
            })
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn from_coords(&self, v: &SparseVec, d: i32) -> Poly {
        let b = self.std_basis(d);
        Poly::from_terms(
            self.nvars(),
            self.field,
            v.iter().map(|(i, c)| (b.monos[*i].clone(), c.clone())).collect(),
        )
    }

    /// True when every variable has a pure power among the leading monomials.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars()).all(|i| {
            self.reducer
                .leads()
                .any(|(_, m)| m.exps()[i] > 0 && m.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0))
        })
    }

    /// Largest `d` with `R_d != 0`, for artinian rings.
    pub fn top_degree(&self) -> Option<u32> {
        *self.top.get_or_init(|| {
            if !self.is_artinian() {
                return None;
            }
            let mut d = 0u32;
            while self.graded_piece_dim(d as i32 + 1) > 0 {
                d += 1;
            }
            Some(d)
        })
    }

    /// `dim_k R` for artinian rings.
    pub fn length(&self) -> Option<usize> {
        self.top_degree()
            .map(|t| (0..=t).map(|d| self.graded_piece_dim(d as i32)).sum())
    }

    /// True when the defining ideal contains no linear forms.
    pub fn is_minimally_presented(&self) -> bool {
        self.ideal.gb.iter().all(|g| g.degree().unwrap_or(2) >= 2)
    }

    /// Removes variables that appear as leading terms of linear forms in the
    /// ideal, giving an isomorphic ring whose ideal lies in degrees two and up.
    pub fn minimalize(&self) -> Result<Ring> {
        if self.is_minimally_presented() {
            return Ok(self.relabeled(&self.label));
        }
        let linear: Vec<&Poly> = self.ideal.gb.iter().filter(|g| g.degree() == Some(1)).collect();
        // In a reduced basis each linear element has a distinct leading variable
        // that appears in no other element of the basis.
        let elim: Vec<usize> = linear
            .iter()
            .map(|g| g.leading_monomial().unwrap().exps().iter().position(|&e| e == 1).unwrap())
            .collect();
        let keep: Vec<usize> = (0..self.nvars()).filter(|i| !elim.contains(i)).collect();
        let new_n = keep.len();
        let names: Vec<String> = keep.iter().map(|&i| self.names[i].clone()).collect();
        let rest: Vec<Poly> = self
            .ideal
            .gb
            .iter()
            .filter(|g| g.degree() != Some(1))
            .map(|g| {
                Poly::from_terms(
                    new_n,
                    self.field,
                    g.terms()
                        .iter()
                        .map(|(m, c)| {
                            debug_assert!(elim.iter().all(|&i| m.exps()[i] == 0));
                            let e: Vec<u32> = keep.iter().map(|&i| m.exps()[i]).collect();
                            (Monomial::new(&e), c.clone())
                        })
                        .collect(),
                )
            })
            .collect();
        Self::build(self.label.clone(), self.field, names, rest, None)
    }

    /// Same ring over a different coefficient field (generators mapped coefficientwise).
    pub fn over_field(&self, field: Field) -> Result<Ring> {
        let gens = self
            .ideal
            .gens
            .iter()
            .map(|g| change_field(g, field))
            .collect::<Result<Vec<_>>>()?;
        Self::build(self.label.clone(), field, self.names.clone(), gens, None)
    }
}

/// Maps a polynomial to another coefficient field.
pub fn change_field(g: &Poly, field: Field) -> Result<Poly> {
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let v = match c {
                Coef::Rat(r) => field.from_rational(r)?,
                Coef::Mod(v, _) => match field {
                    Field::Rational => field.from_i64(*v as i64),
                    Field::Prime(_) => field.from_i64(*v as i64),
                },
            };
            Ok((m.clone(), v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_terms(g.nvars(), field, terms))
}
