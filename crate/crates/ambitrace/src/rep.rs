//! Representations and their symmetric ribbon structure.
//!
//! A [`Rep`] is a finite-dimensional module over one of three algebra
//! flavors, presented by generator matrices:
//! - `Group`: generators act invertibly; tensor action g ↦ g⊗g, dual action
//!   g ↦ (g⁻¹)ᵀ;
//! - `Lie`: tensor action x ↦ x⊗1 + 1⊗x, dual action x ↦ −xᵀ;
//! - `SuperLie`: ℤ/2-graded version with Koszul signs in the tensor and dual
//!   actions and a signed flip as braiding.
//!
//! [`Morphism`]s are intertwining matrices carrying their source and target.
//! The duality morphisms b_V, d_V, their twisted partners b′_V, d′_V, the
//! braiding, and the (identity) twist give the ribbon structure; partial and
//! categorical traces are computed by literally composing those structure
//! morphisms, so flavor-specific signs are never hand-inserted.
//!
//! [`hom_basis`] returns the canonical basis (row-major echelon order) of the
//! space of intertwiners between two objects. Three internally equivalent
//! strategies keep large instances fast; every returned element is validated
//! against the intertwining law regardless of strategy.

use std::fmt;
use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::field::{FieldKind, FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Errors from representation and morphism construction.
#[derive(Debug, Error)]
pub enum RepError {
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("operands have different flavors")]
    FlavorMismatch,
    #[error("generator {0} is a {1}x{2} block; generators must be dim x dim")]
    BadGeneratorShape(String, usize, usize),
    #[error("group generator {0} is not invertible")]
    NotInvertible(String),
    #[error("parity vector length {0} does not match dimension {1}")]
    BadParityLength(usize, usize),
    #[error("generator {0} is not parity-homogeneous")]
    MixedParityGenerator(String),
    #[error("algebra relation violated: {0}")]
    RelationViolated(String),
    #[error("matrix shape {0}x{1} does not map the source into the target")]
    ShapeMismatch(usize, usize),
    #[error("matrix does not intertwine generator {0}")]
    NotIntertwiner(String),
    #[error("matrix is not parity-preserving")]
    NotParityPreserving,
    #[error("generator names differ between the operands")]
    GeneratorNameMismatch,
    #[error("JSON interface: {0}")]
    Json(String),
}

/// The three supported representation flavors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Group,
    Lie,
    SuperLie,
}

impl Flavor {
    pub fn as_str(&self) -> &'static str {
        match self {
            Flavor::Group => "group",
            Flavor::Lie => "lie",
            Flavor::SuperLie => "super-lie",
        }
    }
    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "group" => Some(Flavor::Group),
            "lie" => Some(Flavor::Lie),
            "super-lie" => Some(Flavor::SuperLie),
            _ => None,
        }
    }
}

/// Which defining relations a constructed Rep was validated against.
/// Derived objects (tensors, duals, subquotients) carry `Derived`: the
/// categorical operations preserve relations, so they are checked once at the
/// leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationSet {
    CyclicGroup(u32),
    KleinFour,
    Sl2,
    Gl11,
    None,
    Derived,
}

impl RelationSet {
    pub fn as_str(&self) -> String {
        match self {
            RelationSet::CyclicGroup(n) => format!("cyclic:{n}"),
            RelationSet::KleinFour => "klein4".into(),
            RelationSet::Sl2 => "sl2".into(),
            RelationSet::Gl11 => "gl11".into(),
            RelationSet::None => "none".into(),
            RelationSet::Derived => "derived".into(),
        }
    }
    pub fn parse(s: &str) -> Option<RelationSet> {
        match s {
            "klein4" => Some(RelationSet::KleinFour),
            "sl2" => Some(RelationSet::Sl2),
            "gl11" => Some(RelationSet::Gl11),
            "none" => Some(RelationSet::None),
            "derived" => Some(RelationSet::Derived),
            _ => s
                .strip_prefix("cyclic:")
                .and_then(|n| n.parse().ok())
                .map(RelationSet::CyclicGroup),
        }
    }
}

struct RepInner {
    field: FieldSpec,
    flavor: Flavor,
    dim: usize,
    /// One parity bit per basis vector; empty means all-even (non-super).
    parity: Vec<u8>,
    gens: Vec<(String, Matrix)>,
    /// Parity of each generator's action (SuperLie; zeros otherwise).
    gen_parity: Vec<u8>,
    relations: RelationSet,
    label: String,
}

/// A representation (an object of the category). Cheap to clone; equality is
/// structural (field, flavor, dimension, parities and generator matrices).
#[derive(Clone)]
pub struct Rep {
    inner: Arc<RepInner>,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (&*self.inner, &*other.inner);
        a.field == b.field
            && a.flavor == b.flavor
            && a.dim == b.dim
            && a.parity == b.parity
            && a.gens == b.gens
    }
}
impl Eq for Rep {}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep({}, dim {})", self.inner.label, self.inner.dim)
    }
}

impl Rep {
    /// Construct and validate a representation. `parity` must be empty unless
    /// the flavor is super. Generator parities (super) are inferred from
    /// parity-homogeneity of the matrices.
    pub fn new(
        field: FieldSpec,
        flavor: Flavor,
        label: impl Into<String>,
        gens: Vec<(String, Matrix)>,
        parity: Vec<u8>,
        relations: RelationSet,
    ) -> Result<Rep, RepError> {
        let label = label.into();
        let dim = gens
            .first()
            .map(|(_, m)| m.rows())
            .unwrap_or_else(|| parity.len().max(1));
        for (name, m) in &gens {
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::BadGeneratorShape(name.clone(), m.rows(), m.cols()));
            }
            if m.field() != &field {
                return Err(RepError::FieldMismatch);
            }
            if flavor == Flavor::Group && m.inverse().is_none() {
                return Err(RepError::NotInvertible(name.clone()));
            }
        }
        let parity = match flavor {
            Flavor::SuperLie => {
                if parity.len() != dim {
                    return Err(RepError::BadParityLength(parity.len(), dim));
                }
                parity.iter().map(|p| p % 2).collect()
            }
            _ => {
                if !parity.is_empty() && parity.iter().any(|&p| p % 2 != 0) {
                    return Err(RepError::BadParityLength(parity.len(), dim));
                }
                Vec::new()
            }
        };
        let mut gen_parity = Vec::with_capacity(gens.len());
        for (name, m) in &gens {
            gen_parity.push(if flavor == Flavor::SuperLie {
                infer_parity(m, &parity).ok_or_else(|| RepError::MixedParityGenerator(name.clone()))?
            } else {
                0
            });
        }
        let rep = Rep {
            inner: Arc::new(RepInner {
                field,
                flavor,
                dim,
                parity,
                gens,
                gen_parity,
                relations,
                label,
            }),
        };
        rep.validate_relations()?;
        Ok(rep)
    }

    fn derived(
        field: FieldSpec,
        flavor: Flavor,
        label: String,
        gens: Vec<(String, Matrix)>,
        parity: Vec<u8>,
        gen_parity: Vec<u8>,
        dim: usize,
    ) -> Rep {
        Rep {
            inner: Arc::new(RepInner {
                field,
                flavor,
                dim,
                parity,
                gens,
                gen_parity,
                relations: RelationSet::Derived,
                label,
            }),
        }
    }

    /// The monoidal unit 𝟙: one-dimensional, no generators recorded; every
    /// generator of any object acts on it trivially (1 for groups, 0 for Lie
    /// flavors).
    pub fn unit(field: &FieldSpec, flavor: Flavor) -> Rep {
        Rep {
            inner: Arc::new(RepInner {
                field: field.clone(),
                flavor,
                dim: 1,
                parity: if flavor == Flavor::SuperLie { vec![0] } else { Vec::new() },
                gens: Vec::new(),
                gen_parity: Vec::new(),
                relations: RelationSet::Derived,
                label: "1".into(),
            }),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.inner.dim == 1 && self.inner.gens.is_empty()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.inner.field
    }
    pub fn flavor(&self) -> Flavor {
        self.inner.flavor
    }
    pub fn dim(&self) -> usize {
        self.inner.dim
    }
    pub fn label(&self) -> &str {
        &self.inner.label
    }
    pub fn relations(&self) -> &RelationSet {
        &self.inner.relations
    }
    /// Parity of basis vector i (0 outside the super flavor).
    pub fn parity(&self, i: usize) -> u8 {
        self.inner.parity.get(i).copied().unwrap_or(0)
    }
    pub fn parity_vec(&self) -> Vec<u8> {
        if self.inner.parity.is_empty() {
            vec![0; self.inner.dim]
        } else {
            self.inner.parity.clone()
        }
    }
    pub fn generators(&self) -> &[(String, Matrix)] {
        &self.inner.gens
    }
    pub fn gen_names(&self) -> Vec<String> {
        self.inner.gens.iter().map(|(n, _)| n.clone()).collect()
    }
    fn gen_parity_of(&self, idx: usize) -> u8 {
        self.inner.gen_parity.get(idx).copied().unwrap_or(0)
    }

    /// Action of the named generator; units answer with the trivial action.
    pub fn gen_action(&self, name: &str) -> Option<Matrix> {
        if self.is_unit() {
            let v = match self.inner.flavor {
                Flavor::Group => 1,
                Flavor::Lie | Flavor::SuperLie => 0,
            };
            return Some(Matrix::from_int_rows(&self.inner.field, &[vec![v]]));
        }
        self.inner
            .gens
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m.clone())
    }

    fn validate_relations(&self) -> Result<(), RepError> {
        let f = &self.inner.field;
        let n = self.inner.dim;
        let id = Matrix::identity(f, n);
        let get = |name: &str| -> Result<Matrix, RepError> {
            self.gen_action(name)
                .ok_or_else(|| RepError::RelationViolated(format!("missing generator {name}")))
        };
        match &self.inner.relations {
            RelationSet::None | RelationSet::Derived => Ok(()),
            RelationSet::CyclicGroup(ord) => {
                let g = get("g")?;
                if g.pow(*ord as u64) != id {
                    return Err(RepError::RelationViolated(format!("g^{ord} != 1")));
                }
                Ok(())
            }
            RelationSet::KleinFour => {
                let g = get("g")?;
                let h = get("h")?;
                if g.pow(2) != id || h.pow(2) != id {
                    return Err(RepError::RelationViolated("g^2 = h^2 = 1".into()));
                }
                if g.mul(&h) != h.mul(&g) {
                    return Err(RepError::RelationViolated("gh = hg".into()));
                }
                Ok(())
            }
            RelationSet::Sl2 => {
                let h = get("H")?;
                let e = get("E")?;
                let fm = get("F")?;
                let two = f.from_integer(2);
                let br = |a: &Matrix, b: &Matrix| a.mul(b).sub(&b.mul(a));
                if br(&h, &e) != e.scale(&two) {
                    return Err(RepError::RelationViolated("[H,E] = 2E".into()));
                }
                if br(&h, &fm) != fm.scale(&two).neg() {
                    return Err(RepError::RelationViolated("[H,F] = -2F".into()));
                }
                if br(&e, &fm) != h {
                    return Err(RepError::RelationViolated("[E,F] = H".into()));
                }
                Ok(())
            }
            RelationSet::Gl11 => {
                let e11 = get("E11")?;
                let e22 = get("E22")?;
                let e12 = get("E12")?;
                let e21 = get("E21")?;
                let br = |a: &Matrix, b: &Matrix| a.mul(b).sub(&b.mul(a));
                let abr = |a: &Matrix, b: &Matrix| a.mul(b).add(&b.mul(a));
                let checks: Vec<(&str, Matrix, Matrix)> = vec![
                    ("[E11,E22] = 0", br(&e11, &e22), Matrix::zeros(f, n, n)),
                    ("[E11,E12] = E12", br(&e11, &e12), e12.clone()),
                    ("[E22,E12] = -E12", br(&e22, &e12), e12.neg()),
                    ("[E11,E21] = -E21", br(&e11, &e21), e21.neg()),
                    ("[E22,E21] = E21", br(&e22, &e21), e21.clone()),
                    ("{E12,E21} = E11+E22", abr(&e12, &e21), e11.add(&e22)),
                    ("{E12,E12} = 0", abr(&e12, &e12), Matrix::zeros(f, n, n)),
                    ("{E21,E21} = 0", abr(&e21, &e21), Matrix::zeros(f, n, n)),
                ];
                for (law, got, want) in checks {
                    if got != want {
                        return Err(RepError::RelationViolated(law.into()));
                    }
                }
                Ok(())
            }
        }
    }

    // ----- monoidal structure -----

    /// Tensor product, strict and in Kronecker (row-major) index order:
    /// basis vector i⊗j of V⊗W sits at index i·dim(W)+j.
    pub fn tensor(&self, other: &Rep) -> Rep {
        assert!(self.inner.field == other.inner.field, "tensor: field mismatch");
        assert_eq!(self.inner.flavor, other.inner.flavor, "tensor: flavor mismatch");
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        assert_eq!(
            self.gen_names(),
            other.gen_names(),
            "tensor: generator names differ"
        );
        let f = &self.inner.field;
        let (dv, dw) = (self.inner.dim, other.inner.dim);
        let iv = Matrix::identity(f, dv);
        let iw = Matrix::identity(f, dw);
        let mut gens = Vec::with_capacity(self.inner.gens.len());
        for (idx, (name, gv)) in self.inner.gens.iter().enumerate() {
            let gw = &other.inner.gens[idx].1;
            let m = match self.inner.flavor {
                Flavor::Group => gv.kron(gw),
                Flavor::Lie => gv.kron(&iw).add(&iv.kron(gw)),
                Flavor::SuperLie => {
                    // Koszul: x·(v⊗w) = xv⊗w + (−1)^{|x||v|} v⊗xw
                    let sign = if self.gen_parity_of(idx) == 1 {
                        self.parity_sign_matrix()
                    } else {
                        iv.clone()
                    };
                    gv.kron(&iw).add(&sign.kron(gw))
                }
            };
            gens.push((name.clone(), m));
        }
        let parity = if self.inner.flavor == Flavor::SuperLie {
            let (pv, pw) = (self.parity_vec(), other.parity_vec());
            let mut p = Vec::with_capacity(dv * dw);
            for a in &pv {
                for b in &pw {
                    p.push((a + b) % 2);
                }
            }
            p
        } else {
            Vec::new()
        };
        Rep::derived(
            f.clone(),
            self.inner.flavor,
            format!("({})⊗({})", self.inner.label, other.inner.label),
            gens,
            parity,
            self.inner.gen_parity.clone(),
            dv * dw,
        )
    }

    /// diag((−1)^{parity(i)}).
    fn parity_sign_matrix(&self) -> Matrix {
        let f = &self.inner.field;
        let one = f.one();
        let neg = one.neg();
        Matrix::from_fn(f, self.inner.dim, self.inner.dim, |i, j| {
            if i != j {
                f.zero()
            } else if self.parity(i) == 1 {
                neg.clone()
            } else {
                one.clone()
            }
        })
    }

    /// The dual object V*, on the dual basis.
    pub fn dual(&self) -> Rep {
        if self.is_unit() {
            return self.clone();
        }
        let f = &self.inner.field;
        let n = self.inner.dim;
        let mut gens = Vec::with_capacity(self.inner.gens.len());
        for (idx, (name, g)) in self.inner.gens.iter().enumerate() {
            let m = match self.inner.flavor {
                Flavor::Group => g.inverse().expect("group generator invertible").transpose(),
                Flavor::Lie => g.transpose().neg(),
                Flavor::SuperLie => {
                    // (x·φ)(v) = −(−1)^{|x||φ|} φ(xv)
                    let gp = self.gen_parity_of(idx);
                    Matrix::from_fn(f, n, n, |k, j| {
                        let base = g.get(j, k).neg();
                        if gp == 1 && self.parity(j) == 1 {
                            base.neg()
                        } else {
                            base
                        }
                    })
                }
            };
            gens.push((name.clone(), m));
        }
        Rep::derived(
            f.clone(),
            self.inner.flavor,
            format!("({})*", self.inner.label),
            gens,
            self.inner.parity.clone(),
            self.inner.gen_parity.clone(),
            n,
        )
    }

    /// Direct sum (block diagonal action).
    pub fn direct_sum(&self, other: &Rep) -> Rep {
        assert!(self.inner.field == other.inner.field);
        assert_eq!(self.inner.flavor, other.inner.flavor);
        assert_eq!(self.gen_names(), other.gen_names(), "direct_sum: generator names differ");
        let gens = self
            .inner
            .gens
            .iter()
            .zip(&other.inner.gens)
            .map(|((n, a), (_, b))| (n.clone(), Matrix::direct_sum(a, b)))
            .collect();
        let parity = if self.inner.flavor == Flavor::SuperLie {
            let mut p = self.parity_vec();
            p.extend(other.parity_vec());
            p
        } else {
            Vec::new()
        };
        Rep::derived(
            self.inner.field.clone(),
            self.inner.flavor,
            format!("({})⊕({})", self.inner.label, other.inner.label),
            gens,
            parity,
            self.inner.gen_parity.clone(),
            self.inner.dim + other.inner.dim,
        )
    }
}

fn infer_parity(m: &Matrix, parity: &[u8]) -> Option<u8> {
    let mut found: Option<u8> = None;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                let p = (parity[i] + parity[j]) % 2;
                match found {
                    None => found = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
    }
    Some(found.unwrap_or(0))
}

/// A morphism of the category: an intertwining matrix with its source and
/// target objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Rep,
    target: Rep,
    mat: Matrix,
}

impl Morphism {
    /// Validated construction: checks shape, parity preservation (super) and
    /// the intertwining law against every generator.
    pub fn new(source: Rep, target: Rep, mat: Matrix) -> Result<Morphism, RepError> {
        if source.field() != target.field() || mat.field() != source.field() {
            return Err(RepError::FieldMismatch);
        }
        if source.flavor() != target.flavor() {
            return Err(RepError::FlavorMismatch);
        }
        if mat.rows() != target.dim() || mat.cols() != source.dim() {
            return Err(RepError::ShapeMismatch(mat.rows(), mat.cols()));
        }
        if source.flavor() == Flavor::SuperLie {
            for i in 0..mat.rows() {
                for j in 0..mat.cols() {
                    if !mat.get(i, j).is_zero() && target.parity(i) != source.parity(j) {
                        return Err(RepError::NotParityPreserving);
                    }
                }
            }
        }
        let names = shared_gen_names(&source, &target)?;
        for name in &names {
            let gs = source.gen_action(name).unwrap();
            let gt = target.gen_action(name).unwrap();
            if mat.mul(&gs) != gt.mul(&mat) {
                return Err(RepError::NotIntertwiner(name.clone()));
            }
        }
        Ok(Morphism { source, target, mat })
    }

    /// Construction without the intertwining check, for morphisms valid by
    /// construction (identities, composites/tensors of valid morphisms, and
    /// the ribbon structure maps, which are covered by dedicated tests).
    pub(crate) fn unchecked(source: Rep, target: Rep, mat: Matrix) -> Morphism {
        debug_assert_eq!(mat.rows(), target.dim());
        debug_assert_eq!(mat.cols(), source.dim());
        Morphism { source, target, mat }
    }

    pub fn identity(rep: &Rep) -> Morphism {
        Morphism::unchecked(rep.clone(), rep.clone(), Matrix::identity(rep.field(), rep.dim()))
    }

    pub fn zero(source: &Rep, target: &Rep) -> Morphism {
        Morphism::unchecked(
            source.clone(),
            target.clone(),
            Matrix::zeros(source.field(), target.dim(), source.dim()),
        )
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }
    pub fn target(&self) -> &Rep {
        &self.target
    }
    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }
    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }
    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }
    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        assert!(other.target == self.source, "compose: objects do not match");
        Morphism::unchecked(other.source.clone(), self.target.clone(), self.mat.mul(&other.mat))
    }

    pub fn tensor(&self, other: &Morphism) -> Morphism {
        // For parity-preserving (even) morphisms f⊗g is the plain Kronecker
        // product; the Koszul sign (−1)^{|g||v|} is trivial.
        let source = self.source.tensor(&other.source);
        let target = self.target.tensor(&other.target);
        let mat = if self.source.is_unit() && self.target.is_unit() {
            other.mat.scale(&self.mat.get(0, 0))
        } else if other.source.is_unit() && other.target.is_unit() {
            self.mat.scale(&other.mat.get(0, 0))
        } else {
            self.mat.kron(&other.mat)
        };
        Morphism::unchecked(source, target, mat)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert!(self.source == other.source && self.target == other.target);
        Morphism::unchecked(self.source.clone(), self.target.clone(), self.mat.add(&other.mat))
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        assert!(self.source == other.source && self.target == other.target);
        Morphism::unchecked(self.source.clone(), self.target.clone(), self.mat.sub(&other.mat))
    }

    pub fn neg(&self) -> Morphism {
        Morphism::unchecked(self.source.clone(), self.target.clone(), self.mat.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism::unchecked(self.source.clone(), self.target.clone(), self.mat.scale(c))
    }

    pub fn pow(&self, n: u64) -> Morphism {
        assert!(self.is_endo(), "pow of non-endomorphism");
        Morphism::unchecked(self.source.clone(), self.target.clone(), self.mat.pow(n))
    }
}

fn shared_gen_names(a: &Rep, b: &Rep) -> Result<Vec<String>, RepError> {
    match (a.is_unit(), b.is_unit()) {
        (true, _) => Ok(b.gen_names()),
        (_, true) => Ok(a.gen_names()),
        _ => {
            if a.gen_names() != b.gen_names() {
                Err(RepError::GeneratorNameMismatch)
            } else {
                Ok(a.gen_names())
            }
        }
    }
}

// ----- ribbon structure -----

/// Braiding c_{V,W}: V⊗W → W⊗V, the (super-)flip.
pub fn braiding(v: &Rep, w: &Rep) -> Morphism {
    let f = v.field();
    let (dv, dw) = (v.dim(), w.dim());
    let source = v.tensor(w);
    let target = w.tensor(v);
    let mut mat = Matrix::zeros(f, dw * dv, dv * dw);
    let one = f.one();
    let neg = one.neg();
    for i in 0..dv {
        for j in 0..dw {
            let sign = if v.flavor() == Flavor::SuperLie && v.parity(i) == 1 && w.parity(j) == 1 {
                &neg
            } else {
                &one
            };
            mat.set(j * dv + i, i * dw + j, sign);
        }
    }
    Morphism::unchecked(source, target, mat)
}

/// Inverse braiding c⁻¹_{V,W}: W⊗V → V⊗W.
pub fn braiding_inv(v: &Rep, w: &Rep) -> Morphism {
    let c = braiding(w, v);
    // the flip squared is the identity up to signs; invert exactly
    let m = braiding(v, w).matrix().inverse().expect("braiding invertible");
    Morphism::unchecked(c.source().clone(), c.target().clone(), m)
}

/// Twist θ_V (the identity throughout this toolkit: all categories here are
/// symmetric with trivial ribbon element).
pub fn twist(v: &Rep) -> Morphism {
    Morphism::identity(v)
}

/// Coevaluation b_V: 𝟙 → V⊗V*, 1 ↦ Σ vᵢ⊗vᵢ*.
pub fn coev(v: &Rep) -> Morphism {
    let f = v.field();
    let dv = v.dim();
    let unit = Rep::unit(f, v.flavor());
    let target = v.tensor(&v.dual());
    let mut mat = Matrix::zeros(f, dv * dv, 1);
    let one = f.one();
    for i in 0..dv {
        mat.set(i * dv + i, 0, &one);
    }
    Morphism::unchecked(unit, target, mat)
}

/// Evaluation d_V: V*⊗V → 𝟙, φ⊗v ↦ φ(v).
pub fn ev(v: &Rep) -> Morphism {
    let f = v.field();
    let dv = v.dim();
    let unit = Rep::unit(f, v.flavor());
    let source = v.dual().tensor(v);
    let mut mat = Matrix::zeros(f, 1, dv * dv);
    let one = f.one();
    for i in 0..dv {
        mat.set(0, i * dv + i, &one);
    }
    Morphism::unchecked(source, unit, mat)
}

/// Twisted coevaluation b′_V = (Id_{V*}⊗θ_V)∘c_{V,V*}∘b_V: 𝟙 → V*⊗V.
pub fn coev_tw(v: &Rep) -> Morphism {
    let theta = twist(v);
    Morphism::identity(&v.dual())
        .tensor(&theta)
        .compose(&braiding(v, &v.dual()))
        .compose(&coev(v))
}

/// Twisted evaluation d′_V = d_V∘c_{V,V*}∘(θ_V⊗Id_{V*}): V⊗V* → 𝟙.
pub fn ev_tw(v: &Rep) -> Morphism {
    ev(v)
        .compose(&braiding(v, &v.dual()))
        .compose(&twist(v).tensor(&Morphism::identity(&v.dual())))
}

/// Left partial trace of f ∈ End(V⊗W):
/// tr_L(f) = (d_V⊗Id_W) ∘ (Id_{V*}⊗f) ∘ (b′_V⊗Id_W) ∈ End(W).
pub fn tr_left(f: &Morphism, v: &Rep, w: &Rep) -> Morphism {
    let vw = v.tensor(w);
    assert!(f.source() == &vw && f.target() == &vw, "tr_left: f must lie in End(V⊗W)");
    let id_w = Morphism::identity(w);
    let first = coev_tw(v).tensor(&id_w);
    let middle = Morphism::identity(&v.dual()).tensor(f);
    let last = ev(v).tensor(&id_w);
    last.compose(&middle.compose(&first))
}

/// Right partial trace of f ∈ End(V⊗W):
/// tr_R(f) = (Id_V⊗d′_W) ∘ (f⊗Id_{W*}) ∘ (Id_V⊗b_W) ∈ End(V).
pub fn tr_right(f: &Morphism, v: &Rep, w: &Rep) -> Morphism {
    let vw = v.tensor(w);
    assert!(f.source() == &vw && f.target() == &vw, "tr_right: f must lie in End(V⊗W)");
    let id_v = Morphism::identity(v);
    let first = id_v.tensor(&coev(w));
    let middle = f.tensor(&Morphism::identity(&w.dual()));
    let last = id_v.tensor(&ev_tw(w));
    last.compose(&middle.compose(&first))
}

/// Categorical trace tr_C(f) = d′_V ∘ (f⊗Id_{V*}) ∘ b_V ∈ K for f ∈ End(V).
pub fn cat_trace(f: &Morphism) -> Scalar {
    assert!(f.is_endo(), "cat_trace of non-endomorphism");
    let v = f.source();
    let m = ev_tw(v)
        .compose(&f.tensor(&Morphism::identity(&v.dual())))
        .compose(&coev(v));
    m.matrix().get(0, 0)
}

/// Categorical dimension dim_C(V) = tr_C(Id_V).
pub fn cat_dim(v: &Rep) -> Scalar {
    cat_trace(&Morphism::identity(v))
}

// ----- intertwiner bases -----

/// Internal strategy marker, exposed for cross-checking tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum HomStrategy {
    JordanChains,
    DiagonalPrune,
    Stacked,
}

/// Canonical basis of Hom(M, N): the solution space of the intertwining
/// equations, reduced to row-major echelon form over the flattened matrices
/// (so the answer is independent of the internal solving strategy).
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<Morphism> {
    hom_basis_with(m, n).0
}

pub(crate) fn hom_basis_with(m: &Rep, n: &Rep) -> (Vec<Morphism>, HomStrategy) {
    assert!(m.field() == n.field(), "hom_basis: field mismatch");
    assert_eq!(m.flavor(), n.flavor(), "hom_basis: flavor mismatch");
    let names = shared_gen_names(m, n).expect("hom_basis: generator names differ");
    let strategy = pick_strategy(m, n, &names);
    let raw: Vec<Matrix> = match strategy {
        HomStrategy::JordanChains => hom_jordan(m, n, &names[0]),
        HomStrategy::DiagonalPrune => hom_linear(m, n, &names, true),
        HomStrategy::Stacked => hom_linear(m, n, &names, false),
    };
    let basis = canonicalize_basis(m, n, raw);
    (basis, strategy)
}

fn pick_strategy(m: &Rep, n: &Rep, names: &[String]) -> HomStrategy {
    if names.is_empty() {
        return HomStrategy::Stacked;
    }
    if m.flavor() == Flavor::Group && names.len() == 1 {
        let am = m.gen_action(&names[0]).unwrap();
        let an = n.gen_action(&names[0]).unwrap();
        let idm = Matrix::identity(m.field(), m.dim());
        let idn = Matrix::identity(n.field(), n.dim());
        let unipotent = |a: &Matrix, id: &Matrix| {
            a.sub(id).pow((a.rows() as u64).next_power_of_two()).is_zero()
        };
        if unipotent(&am, &idm) && unipotent(&an, &idn) {
            return HomStrategy::JordanChains;
        }
    }
    let has_diag = names.iter().any(|name| {
        is_diagonal(&m.gen_action(name).unwrap()) && is_diagonal(&n.gen_action(name).unwrap())
    });
    if has_diag {
        HomStrategy::DiagonalPrune
    } else {
        HomStrategy::Stacked
    }
}

fn is_diagonal(a: &Matrix) -> bool {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i != j && !a.get(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Solve the intertwining system as one linear system over the allowed
/// unknowns. With `prune`, generators diagonal on both sides cut the unknown
/// set by eigenvalue matching instead of contributing equation rows.
fn hom_linear(m: &Rep, n: &Rep, names: &[String], prune: bool) -> Vec<Matrix> {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let actions: Vec<(Matrix, Matrix, bool)> = names
        .iter()
        .map(|name| {
            let am = m.gen_action(name).unwrap();
            let an = n.gen_action(name).unwrap();
            let diag = prune && is_diagonal(&am) && is_diagonal(&an);
            (am, an, diag)
        })
        .collect();
    // unknown X_{ij} is admissible when parity-compatible and eigenvalue-
    // matched against every diagonal generator
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut index_of = vec![usize::MAX; dn * dm];
    let super_flavor = m.flavor() == Flavor::SuperLie;
    for i in 0..dn {
        for j in 0..dm {
            if super_flavor && n.parity(i) != m.parity(j) {
                continue;
            }
            if actions
                .iter()
                .filter(|(_, _, d)| *d)
                .any(|(am, an, _)| an.get(i, i) != am.get(j, j))
            {
                continue;
            }
            index_of[i * dm + j] = unknowns.len();
            unknowns.push((i, j));
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    // rows: (X·a_m − a_n·X)[r,c] = 0 for every non-pruned generator
    let mut rows: Vec<Matrix> = Vec::new();
    for (am, an, diag) in &actions {
        if *diag {
            continue;
        }
        for r in 0..dn {
            for c in 0..dm {
                let mut row = Matrix::zeros(f, 1, unknowns.len());
                let mut nonzero = false;
                for k in 0..dm {
                    let u = index_of[r * dm + k];
                    if u == usize::MAX {
                        continue;
                    }
                    let coef = am.get(k, c);
                    if !coef.is_zero() {
                        row.set(0, u, &row.get(0, u).add(&coef).unwrap());
                        nonzero = true;
                    }
                }
                for k in 0..dn {
                    let u = index_of[k * dm + c];
                    if u == usize::MAX {
                        continue;
                    }
                    let coef = an.get(r, k).neg();
                    if !coef.is_zero() {
                        row.set(0, u, &row.get(0, u).add(&coef).unwrap());
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(f, unknowns.len())
    } else {
        Matrix::vstack(&rows).kernel_basis()
    };
    (0..kernel.cols())
        .map(|k| {
            let mut x = Matrix::zeros(f, dn, dm);
            for (u, &(i, j)) in unknowns.iter().enumerate() {
                let v = kernel.get(u, k);
                if !v.is_zero() {
                    x.set(i, j, &v);
                }
            }
            x
        })
        .collect()
}

/// Hom between two modules of a cyclic unipotent generator, via Jordan chains
/// of g−1 and the classical basis of chain maps.
fn hom_jordan(m: &Rep, n: &Rep, name: &str) -> Vec<Matrix> {
    let f = m.field();
    let nil_m = m
        .gen_action(name)
        .unwrap()
        .sub(&Matrix::identity(f, m.dim()));
    let nil_n = n
        .gen_action(name)
        .unwrap()
        .sub(&Matrix::identity(f, n.dim()));
    let chains_m = jordan_chains(&nil_m);
    let chains_n = jordan_chains(&nil_n);
    // columns of P: the chain vectors of M in order
    let mut cols = Vec::new();
    let mut chain_offsets = Vec::new();
    for c in &chains_m {
        chain_offsets.push(cols.len());
        cols.extend(c.iter().cloned());
    }
    let p = Matrix::hstack(&cols);
    let p_inv = p.inverse().expect("jordan chain basis is a basis");
    let mut out = Vec::new();
    for (ci, cm) in chains_m.iter().enumerate() {
        let a = cm.len();
        for cn in &chains_n {
            let b = cn.len();
            // maps X with X v_1 = w_j, extended by X v_i = w_{j+i−1}
            let j_lo = if b >= a { b - a + 1 } else { 1 };
            for j in j_lo..=b {
                let mut xc = Matrix::zeros(f, n.dim(), m.dim());
                for i in 0..a {
                    let wi = j - 1 + i;
                    if wi < b {
                        let col = chain_offsets[ci] + i;
                        for r in 0..n.dim() {
                            let v = cn[wi].get(r, 0);
                            if !v.is_zero() {
                                xc.set(r, col, &v);
                            }
                        }
                    }
                }
                out.push(xc.mul(&p_inv));
            }
        }
    }
    out
}

/// Jordan chains of a nilpotent matrix: each chain is [v, Nv, N²v, …] with
/// the last entry in ker N.
pub(crate) fn jordan_chains(nil: &Matrix) -> Vec<Vec<Matrix>> {
    let f = nil.field();
    let n = nil.rows();
    // kernel filtration
    let mut powers = vec![Matrix::identity(f, n)];
    let mut kernels: Vec<Matrix> = Vec::new();
    loop {
        let next = powers.last().unwrap().mul(nil);
        let k = next.kernel_basis();
        let full = k.cols() == n;
        powers.push(next);
        kernels.push(k);
        if full {
            break;
        }
    }
    let s = kernels.len(); // nilpotency index
    let mut chains: Vec<Vec<Matrix>> = Vec::new();
    for k in (1..=s).rev() {
        let mut tracker = SpanTracker::new(f.clone(), n);
        if k >= 2 {
            let lower = &kernels[k - 2];
            for c in 0..lower.cols() {
                tracker.insert(&lower.col(c));
            }
        }
        for chain in &chains {
            // the element of height k in a longer chain
            let idx = chain.len() - k;
            tracker.insert(&chain[idx]);
        }
        let kk = &kernels[k - 1];
        let mut new_tops = Vec::new();
        for c in 0..kk.cols() {
            let v = kk.col(c);
            if tracker.insert(&v) {
                new_tops.push(v);
            }
        }
        for top in new_tops {
            let mut chain = vec![top];
            for _ in 1..k {
                let next = nil.mul(chain.last().unwrap());
                chain.push(next);
            }
            chains.push(chain);
        }
    }
    chains
}

/// Incremental echelonized span of row/column vectors.
pub(crate) struct SpanTracker {
    n: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanTracker {
    pub fn new(_field: FieldSpec, n: usize) -> SpanTracker {
        SpanTracker { n, rows: Vec::new(), pivots: Vec::new() }
    }

    #[allow(dead_code)]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Insert a column vector (n×1); returns true when it enlarges the span.
    pub fn insert(&mut self, v: &Matrix) -> bool {
        assert_eq!(v.rows(), self.n);
        let mut vec: Vec<Scalar> = (0..self.n).map(|i| v.get(i, 0)).collect();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = vec[piv].clone();
            if !c.is_zero() {
                for (x, r) in vec.iter_mut().zip(row) {
                    *x = x.sub(&c.mul(r).unwrap()).unwrap();
                }
            }
        }
        let Some(lead) = vec.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = vec[lead].inv().unwrap();
        for x in vec.iter_mut() {
            *x = x.mul(&inv).unwrap();
        }
        self.rows.push(vec);
        self.pivots.push(lead);
        true
    }
}

/// Echelonize a set of candidate solutions into the canonical basis and wrap
/// them as validated morphisms.
fn canonicalize_basis(m: &Rep, n: &Rep, raw: Vec<Matrix>) -> Vec<Morphism> {
    if raw.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Matrix> = raw.iter().map(|x| x.flatten_row_major()).collect();
    let (red, _) = Matrix::vstack(&rows).rref();
    (0..red.rows())
        .map(|i| {
            let mat = red.submatrix(i, 0, 1, red.cols()).reshape(n.dim(), m.dim());
            Morphism::new(m.clone(), n.clone(), mat).expect("solver produced a non-intertwiner")
        })
        .collect()
}

// ----- JSON interface -----

/// Serialize a Rep to the interchange JSON form. Matrix entries must be
/// integral: finite-field entries are written as their index encoding,
/// rational entries must have denominator 1.
pub fn rep_to_json(rep: &Rep) -> Result<serde_json::Value, RepError> {
    let (p, e) = match rep.field().kind() {
        FieldKind::Rationals => (0u32, 1u32),
        FieldKind::Finite { p, e, .. } => (*p, *e),
    };
    let mut gens = serde_json::Map::new();
    for (name, m) in rep.generators() {
        let mut rows = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            let mut row = Vec::with_capacity(m.cols());
            for j in 0..m.cols() {
                let s = m.get(i, j);
                let v: i64 = if let Some(idx) = s.index() {
                    idx as i64
                } else {
                    let r = s.rational().unwrap();
                    if !num_traits::One::is_one(r.denom()) {
                        return Err(RepError::Json(format!(
                            "entry {s} of generator {name} is not an integer"
                        )));
                    }
                    use num_traits::ToPrimitive;
                    r.numer().to_i64().ok_or_else(|| {
                        RepError::Json(format!("entry of generator {name} overflows i64"))
                    })?
                };
                row.push(json!(v));
            }
            rows.push(json!(row));
        }
        gens.insert(name.clone(), json!(rows));
    }
    let mut obj = serde_json::Map::new();
    obj.insert("field".into(), json!({"p": p, "e": e}));
    obj.insert("flavor".into(), json!(rep.flavor().as_str()));
    obj.insert("dim".into(), json!(rep.dim()));
    if rep.flavor() == Flavor::SuperLie {
        obj.insert("parity".into(), json!(rep.parity_vec()));
    }
    obj.insert("generators".into(), serde_json::Value::Object(gens));
    obj.insert("relations".into(), json!(rep.relations().as_str()));
    Ok(serde_json::Value::Object(obj))
}

/// Parse the interchange JSON form back into a validated Rep.
pub fn rep_from_json(v: &serde_json::Value) -> Result<Rep, RepError> {
    let obj = v.as_object().ok_or_else(|| RepError::Json("expected an object".into()))?;
    let jerr = |m: &str| RepError::Json(m.to_string());
    let fieldv = obj.get("field").ok_or_else(|| jerr("missing field"))?;
    let p = fieldv.get("p").and_then(|x| x.as_u64()).ok_or_else(|| jerr("field.p"))? as u32;
    let e = fieldv.get("e").and_then(|x| x.as_u64()).ok_or_else(|| jerr("field.e"))? as u32;
    let field = if p == 0 {
        FieldSpec::rationals()
    } else {
        FieldSpec::extension(p, e).map_err(|err| RepError::Json(err.to_string()))?
    };
    let flavor = obj
        .get("flavor")
        .and_then(|x| x.as_str())
        .and_then(Flavor::parse)
        .ok_or_else(|| jerr("flavor"))?;
    let dim = obj.get("dim").and_then(|x| x.as_u64()).ok_or_else(|| jerr("dim"))? as usize;
    let parity: Vec<u8> = match obj.get("parity") {
        None => Vec::new(),
        Some(pv) => pv
            .as_array()
            .ok_or_else(|| jerr("parity"))?
            .iter()
            .map(|x| x.as_u64().map(|b| (b % 2) as u8).ok_or_else(|| jerr("parity entry")))
            .collect::<Result<_, _>>()?,
    };
    let gensv = obj
        .get("generators")
        .and_then(|x| x.as_object())
        .ok_or_else(|| jerr("generators"))?;
    let mut gens = Vec::new();
    for (name, rowsv) in gensv {
        let rows = rowsv.as_array().ok_or_else(|| jerr("generator rows"))?;
        if rows.len() != dim {
            return Err(RepError::Json(format!("generator {name} has {} rows, dim {dim}", rows.len())));
        }
        let mut int_rows = Vec::with_capacity(dim);
        for row in rows {
            let row = row.as_array().ok_or_else(|| jerr("generator row"))?;
            let ints: Vec<i64> = row
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| jerr("generator entry")))
                .collect::<Result<_, _>>()?;
            int_rows.push(ints);
        }
        let m = if field.is_finite() && e > 1 {
            // index encoding: entries must already be in range
            let q = field.order().unwrap() as i64;
            Matrix::from_fn(&field, dim, dim, |i, j| {
                let v = int_rows[i][j];
                if (0..q).contains(&v) {
                    field.element(v as u64).unwrap()
                } else {
                    field.from_integer(v) // reduced into the prime subfield
                }
            })
        } else {
            Matrix::from_int_rows(&field, &int_rows)
        };
        gens.push((name.clone(), m));
    }
    let relations = obj
        .get("relations")
        .and_then(|x| x.as_str())
        .and_then(RelationSet::parse)
        .ok_or_else(|| jerr("relations"))?;
    let label = format!("json:{}", relations.as_str());
    Rep::new(field, flavor, label, gens, parity, relations)
}

/// Canonical (bit-exact reproducible) textual form of the interchange JSON.
pub fn rep_to_json_string(rep: &Rep) -> Result<String, RepError> {
    Ok(rep_to_json(rep)?.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2_rep() -> Rep {
        // the 2-dimensional indecomposable of the cyclic group of order 2:
        // g v1 = v1, g v2 = v1 + v2
        let f = FieldSpec::prime(2).unwrap();
        let g = Matrix::from_int_rows(&f, &[vec![1, 1], vec![0, 1]]);
        Rep::new(f, Flavor::Group, "A", vec![("g".into(), g)], vec![], RelationSet::CyclicGroup(2))
            .unwrap()
    }

    fn gl11_natural() -> Rep {
        let q = FieldSpec::rationals();
        let m = |rows: &[Vec<i64>]| Matrix::from_int_rows(&q, rows);
        Rep::new(
            q.clone(),
            Flavor::SuperLie,
            "C^{1|1}",
            vec![
                ("E11".into(), m(&[vec![1, 0], vec![0, 0]])),
                ("E22".into(), m(&[vec![0, 0], vec![0, 1]])),
                ("E12".into(), m(&[vec![0, 1], vec![0, 0]])),
                ("E21".into(), m(&[vec![0, 0], vec![1, 0]])),
            ],
            vec![0, 1],
            RelationSet::Gl11,
        )
        .unwrap()
    }

    fn sl2_l1(p: u32) -> Rep {
        let f = FieldSpec::prime(p).unwrap();
        let m = |rows: &[Vec<i64>]| Matrix::from_int_rows(&f, rows);
        Rep::new(
            f.clone(),
            Flavor::Lie,
            "L(1)",
            vec![
                ("H".into(), m(&[vec![1, 0], vec![0, -1]])),
                ("E".into(), m(&[vec![0, 1], vec![0, 0]])),
                ("F".into(), m(&[vec![0, 0], vec![1, 0]])),
            ],
            vec![],
            RelationSet::Sl2,
        )
        .unwrap()
    }

    #[test]
    fn zig_zag_identities_all_flavors() {
        for v in [c2_rep(), sl2_l1(5), gl11_natural()] {
            let idv = Morphism::identity(&v);
            let idvs = Morphism::identity(&v.dual());
            // (d_V⊗Id) ∘ (Id⊗b_V) = Id_{V*} and (Id⊗d_V) ∘ (b_V⊗Id) = Id_V
            let z1 = ev(&v).tensor(&idvs).compose(&idvs.tensor(&coev(&v)));
            assert!(z1.is_identity(), "zig-zag 1 failed for {:?}", v);
            let z2 = idv.tensor(&ev(&v)).compose(&coev(&v).tensor(&idv));
            assert!(z2.is_identity(), "zig-zag 2 failed for {:?}", v);
            // twisted versions
            let z3 = ev_tw(&v).tensor(&idv).compose(&idv.tensor(&coev_tw(&v)));
            assert!(z3.is_identity(), "twisted zig-zag failed for {:?}", v);
        }
    }

    #[test]
    fn structure_maps_are_intertwiners() {
        for v in [c2_rep(), sl2_l1(5), gl11_natural()] {
            for m in [coev(&v), coev_tw(&v)] {
                Morphism::new(m.source().clone(), m.target().clone(), m.matrix().clone())
                    .expect("coevaluation must intertwine");
            }
            for m in [ev(&v), ev_tw(&v)] {
                Morphism::new(m.source().clone(), m.target().clone(), m.matrix().clone())
                    .expect("evaluation must intertwine");
            }
            let c = braiding(&v, &v.dual());
            Morphism::new(c.source().clone(), c.target().clone(), c.matrix().clone())
                .expect("braiding must intertwine");
        }
    }

    #[test]
    fn braiding_symmetry() {
        for v in [c2_rep(), sl2_l1(3), gl11_natural()] {
            let c = braiding(&v, &v);
            assert!(c.compose(&c).is_identity(), "symmetric braiding squared");
            let cinv = braiding_inv(&v, &v);
            assert!(c.compose(&cinv).is_identity());
        }
    }

    #[test]
    fn cat_dim_values() {
        // group flavor: dim_C = dim mod p
        assert!(cat_dim(&c2_rep()).is_zero());
        // lie flavor: ordinary dimension
        assert_eq!(cat_dim(&sl2_l1(5)), FieldSpec::prime(5).unwrap().from_integer(2));
        // super flavor: superdimension 1 − 1 = 0
        assert!(cat_dim(&gl11_natural()).is_zero());
        // unit has dimension 1
        let f = FieldSpec::prime(3).unwrap();
        assert!(cat_dim(&Rep::unit(&f, Flavor::Group)).is_one());
    }

    #[test]
    fn partial_trace_of_identity() {
        for (v, w) in [(c2_rep(), c2_rep()), (sl2_l1(5), sl2_l1(5)), (gl11_natural(), gl11_natural())] {
            let vw = v.tensor(&w);
            let id = Morphism::identity(&vw);
            let l = tr_left(&id, &v, &w);
            assert_eq!(l.matrix(), &Matrix::identity(v.field(), w.dim()).scale(&cat_dim(&v)));
            let r = tr_right(&id, &v, &w);
            assert_eq!(r.matrix(), &Matrix::identity(v.field(), v.dim()).scale(&cat_dim(&w)));
        }
    }

    #[test]
    fn cat_trace_of_partial_traces() {
        // tr_C(tr_L(f)) = tr_C(f) = tr_C(tr_R(f)) for a non-trivial f
        let v = c2_rep();
        let w = c2_rep();
        let vw = v.tensor(&w);
        for h in hom_basis(&vw, &vw) {
            let t = cat_trace(&h);
            assert_eq!(cat_trace(&tr_left(&h, &v, &w)), t);
            assert_eq!(cat_trace(&tr_right(&h, &v, &w)), t);
        }
    }

    #[test]
    fn hom_basis_unit_unit() {
        let f = FieldSpec::prime(5).unwrap();
        let u = Rep::unit(&f, Flavor::Group);
        let b = hom_basis(&u, &u);
        assert_eq!(b.len(), 1);
        assert!(b[0].is_identity());
    }

    #[test]
    fn hom_strategies_agree_on_cyclic() {
        // End of the regular module over C_3: Jordan strategy vs dense
        let f = FieldSpec::prime(3).unwrap();
        let g = Matrix::from_int_rows(&f, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let a = Rep::new(
            f,
            Flavor::Group,
            "A",
            vec![("g".into(), g)],
            vec![],
            RelationSet::CyclicGroup(3),
        )
        .unwrap();
        let (basis, strat) = hom_basis_with(&a, &a);
        assert_eq!(strat, HomStrategy::JordanChains);
        assert_eq!(basis.len(), 3); // End(kC_3) = kC_3
        let dense = hom_linear(&a, &a, &["g".into()], false);
        let dense = canonicalize_basis(&a, &a, dense);
        assert_eq!(basis.len(), dense.len());
        for (x, y) in basis.iter().zip(&dense) {
            assert_eq!(x.matrix(), y.matrix());
        }
    }

    #[test]
    fn hom_diag_prune_matches_dense_on_sl2() {
        let v = sl2_l1(5);
        let vv = v.tensor(&v);
        let (basis, strat) = hom_basis_with(&vv, &vv);
        assert_eq!(strat, HomStrategy::DiagonalPrune);
        // L(1)⊗L(1) = L(2) ⊕ L(0) over GF(5): End has dimension 2
        assert_eq!(basis.len(), 2);
        let names: Vec<String> = vv.gen_names();
        let dense = canonicalize_basis(&vv, &vv, hom_linear(&vv, &vv, &names, false));
        assert_eq!(basis.len(), dense.len());
        for (x, y) in basis.iter().zip(&dense) {
            assert_eq!(x.matrix(), y.matrix());
        }
    }

    #[test]
    fn hom_basis_respects_parity() {
        let v = gl11_natural();
        let b = hom_basis(&v, &v);
        // the natural module is simple: End = K
        assert_eq!(b.len(), 1);
        assert!(b[0].is_identity());
    }

    #[test]
    fn json_round_trip_bit_exact() {
        for rep in [c2_rep(), sl2_l1(5), gl11_natural()] {
            let s1 = rep_to_json_string(&rep).unwrap();
            let parsed = rep_from_json(&serde_json::from_str(&s1).unwrap()).unwrap();
            let s2 = rep_to_json_string(&parsed).unwrap();
            assert_eq!(s1, s2, "round trip must be bit-exact");
            assert_eq!(parsed, rep);
        }
    }

    #[test]
    fn json_rejects_bad_input() {
        let v = serde_json::json!({
            "field": {"p": 2, "e": 1},
            "flavor": "group",
            "dim": 2,
            "generators": {"g": [[0, 1], [0, 0]]}, // singular: not a group action
            "relations": "cyclic:2"
        });
        assert!(rep_from_json(&v).is_err());
    }

    #[test]
    fn dual_of_dual_matches_original_action() {
        for v in [c2_rep(), sl2_l1(5)] {
            let dd = v.dual().dual();
            for ((_, a), (_, b)) in v.generators().iter().zip(dd.generators()) {
                assert_eq!(a, b);
            }
        }
        // super flavor: V** ≅ V via the parity sign matrix
        let v = gl11_natural();
        let s = v.parity_sign_matrix();
        Morphism::new(v.clone(), v.dual().dual(), s)
            .expect("parity sign matrix intertwines V and V**");
    }
}
