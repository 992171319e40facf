//! Constructors for the example categories and their witness morphisms.
//!
//! Covers modules over the cyclic group C_p in characteristic p, the Klein
//! four group in characteristic two, restricted sl₂(F_p) (simples and baby
//! Verma modules for the three χ orbit types), and the natural gl(1|1)
//! supermodule, together with the explicit endomorphisms used to exhibit
//! non-ambidextrous objects.

use thiserror::Error;

use crate::field::{FieldKind, FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::rep::{Flavor, Morphism, RelationSet, Rep, RepError};

/// Errors from example construction.
#[derive(Debug, Error)]
pub enum ZooError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

fn bad(msg: impl Into<String>) -> ZooError {
    ZooError::BadParameter(msg.into())
}

// ----- cyclic group C_p, characteristic p -----

/// The indecomposable C_p-module V_r (1 ≤ r ≤ p) over GF(p): the generator
/// acts by a single unipotent Jordan block of size r, so g v₁ = v₁ and
/// g v_{i+1} = v_i + v_{i+1}.
pub fn cyclic_module(p: u32, r: usize) -> Result<Rep, ZooError> {
    let field = FieldSpec::prime(p)?;
    if r == 0 || r > p as usize {
        return Err(bad(format!("V_r over C_{p} needs 1 <= r <= {p}, got {r}")));
    }
    let g = Matrix::from_fn(&field, r, r, |i, j| {
        if i == j || i + 1 == j {
            field.one()
        } else {
            field.zero()
        }
    });
    Ok(Rep::new(
        field,
        Flavor::Group,
        format!("V_{r}[C_{p}]"),
        vec![("g".into(), g)],
        vec![],
        RelationSet::CyclicGroup(p),
    )?)
}

/// The regular module A = kC_p in its permutation basis v_i = gⁱ, so
/// g v_i = v_{i+1 mod p}. Isomorphic to `cyclic_module(p, p)`; this basis is
/// the one the explicit witness endomorphism is written in.
pub fn cyclic_regular(p: u32) -> Result<Rep, ZooError> {
    let field = FieldSpec::prime(p)?;
    let n = p as usize;
    let g = Matrix::from_fn(&field, n, n, |i, j| {
        if i == (j + 1) % n {
            field.one()
        } else {
            field.zero()
        }
    });
    Ok(Rep::new(
        field,
        Flavor::Group,
        format!("A[C_{p}]"),
        vec![("g".into(), g)],
        vec![],
        RelationSet::CyclicGroup(p),
    )?)
}

/// The registered projective generator of the C_p example category.
pub fn cyclic_projective_generator(p: u32) -> Result<Rep, ZooError> {
    cyclic_module(p, p as usize)
}

/// The explicit endomorphism f of A⊗A (A the regular module of C_p, p odd)
/// that is zero on every summand of the E_k/O_k decomposition except for the
/// equivariant map E₁ → O-part determined by
/// f(v₁⊗v₀ + v₀⊗v₁) = v₂⊗v₁ − v₁⊗v₂.
pub fn cyclic_regular_witness(p: u32) -> Result<Morphism, ZooError> {
    if p % 2 == 0 {
        return Err(bad("the witness needs an odd prime"));
    }
    let a = cyclic_regular(p)?;
    let t = a.tensor(&a);
    let field = a.field().clone();
    let n = p as usize;
    let idx = |i: usize, j: usize| (i % n) * n + (j % n);
    let one = field.one();
    let neg = one.neg();
    // columns of the change of basis: the g-orbits spanning E_0, each E_k and
    // each O_k (k = 1..(p−1)/2)
    let mut cols: Vec<Matrix> = Vec::with_capacity(n * n);
    let mut images: Vec<Matrix> = Vec::with_capacity(n * n);
    let zero_col = Matrix::zeros(&field, n * n, 1);
    for tshift in 0..n {
        let mut c = Matrix::zeros(&field, n * n, 1);
        c.set(idx(tshift, tshift), 0, &one);
        cols.push(c);
        images.push(zero_col.clone());
    }
    for k in 1..=(n - 1) / 2 {
        for tshift in 0..n {
            let mut c = Matrix::zeros(&field, n * n, 1);
            c.set(idx(tshift, tshift + k), 0, &one);
            c.set(idx(tshift + k, tshift), 0, &one);
            cols.push(c);
            if k == 1 {
                // gᵗ·(v₂⊗v₁ − v₁⊗v₂)
                let mut img = Matrix::zeros(&field, n * n, 1);
                img.set(idx(2 + tshift, 1 + tshift), 0, &one);
                img.set(idx(1 + tshift, 2 + tshift), 0, &neg);
                images.push(img);
            } else {
                images.push(zero_col.clone());
            }
        }
    }
    for k in 1..=(n - 1) / 2 {
        for tshift in 0..n {
            let mut c = Matrix::zeros(&field, n * n, 1);
            c.set(idx(tshift, tshift + k), 0, &one);
            c.set(idx(tshift + k, tshift), 0, &neg);
            cols.push(c);
            images.push(zero_col.clone());
        }
    }
    let b = Matrix::hstack(&cols);
    let b_inv = b.inverse().ok_or_else(|| bad("summand basis is singular"))?;
    let f = Matrix::hstack(&images).mul(&b_inv);
    Ok(Morphism::new(t.clone(), t, f)?)
}

// ----- Klein four group, characteristic two -----

/// The parameter of the two-parameter Klein four family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KleinParam {
    Alpha(Scalar),
    Infinity,
}

/// Which indecomposable Klein four module to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KleinKind {
    Trivial,
    /// The 4-dimensional regular (projective) module.
    RegularD,
    /// V_n(α) or V_n(∞), of dimension 2n.
    V(usize, KleinParam),
}

/// Indecomposable modules of the Klein four group ⟨g, h⟩ over a field of
/// characteristic two, presented through x = 1+g, y = 1+h:
/// V_n(α) has x ↦ [[0, I_n],[0,0]], y ↦ [[0, J_n(α)],[0,0]] and V_n(∞) swaps
/// the two roles.
pub fn klein_module(field: &FieldSpec, kind: KleinKind) -> Result<Rep, ZooError> {
    match field.kind() {
        FieldKind::Finite { p: 2, .. } => {}
        _ => return Err(bad("Klein four modules need characteristic two")),
    }
    let (label, g, h) = match kind {
        KleinKind::Trivial => {
            let one = Matrix::identity(field, 1);
            ("k".to_string(), one.clone(), one)
        }
        KleinKind::RegularD => {
            // basis 1, x, y, xy of k[x,y]/(x², y²)
            let x = Matrix::from_int_rows(
                field,
                &[vec![0, 0, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 1, 0]],
            );
            let y = Matrix::from_int_rows(
                field,
                &[vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
            );
            let id = Matrix::identity(field, 4);
            ("D".to_string(), id.add(&x), id.add(&y))
        }
        KleinKind::V(n, param) => {
            if n == 0 {
                return Err(bad("V_n needs n >= 1"));
            }
            let (x_block, y_block, label) = match param {
                KleinParam::Alpha(alpha) => {
                    if alpha.field() != field {
                        return Err(bad("alpha lives in a different field"));
                    }
                    (
                        Matrix::identity(field, n),
                        jordan_block(field, n, &alpha),
                        format!("V_{n}({alpha})"),
                    )
                }
                KleinParam::Infinity => (
                    jordan_block(field, n, &field.zero()),
                    Matrix::identity(field, n),
                    format!("V_{n}(inf)"),
                ),
            };
            let embed = |blk: &Matrix| {
                Matrix::from_fn(field, 2 * n, 2 * n, |i, j| {
                    if i < n && j >= n {
                        blk.get(i, j - n)
                    } else {
                        field.zero()
                    }
                })
            };
            let id = Matrix::identity(field, 2 * n);
            (label, id.add(&embed(&x_block)), id.add(&embed(&y_block)))
        }
    };
    Ok(Rep::new(
        field.clone(),
        Flavor::Group,
        label,
        vec![("g".into(), g), ("h".into(), h)],
        vec![],
        RelationSet::KleinFour,
    )?)
}

fn jordan_block(field: &FieldSpec, n: usize, eigen: &Scalar) -> Matrix {
    Matrix::from_fn(field, n, n, |i, j| {
        if i == j {
            eigen.clone()
        } else if i + 1 == j {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// The registered projective generator of the Klein four example category.
pub fn klein_projective_generator(field: &FieldSpec) -> Result<Rep, ZooError> {
    klein_module(field, KleinKind::RegularD)
}

// ----- restricted sl₂(F_p) -----

/// Orbit representative of the p-character χ of a baby Verma module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiType {
    /// χ = 0.
    Restricted,
    /// χ(Hᵖ−H) = αᵖ ≠ 0, χ(Eᵖ) = χ(Fᵖ) = 0; realized over GF(p²) with
    /// α^{p−1} = −1 so that the H-eigenvalues exist in the field.
    Semisimple(Scalar),
    /// χ(Fᵖ) = 1, χ(Eᵖ) = 0, χ(Hᵖ−H) = 0.
    RegularNilpotent,
}

/// The restricted simple sl₂-module L(λ) of dimension λ+1 on the truncated
/// weight basis: H vᵢ = (λ−2i)vᵢ, F vᵢ = vᵢ₊₁, E vᵢ = i(λ−i+1)vᵢ₋₁.
pub fn sl2_restricted_simple(p: u32, lambda: u32) -> Result<Rep, ZooError> {
    if p <= 2 {
        return Err(bad("sl2 needs p > 2"));
    }
    if lambda >= p {
        return Err(bad(format!("L(lambda) needs 0 <= lambda < {p}")));
    }
    let field = FieldSpec::prime(p)?;
    let lam = field.from_integer(lambda as i64);
    let rep = sl2_weight_module(&field, lambda as usize + 1, &lam, &field.zero())?;
    Ok(Rep::new(
        field,
        Flavor::Lie,
        format!("L({lambda})[p={p}]"),
        rep,
        vec![],
        RelationSet::Sl2,
    )?)
}

/// The Steinberg module L(p−1): the registered projective generator of the
/// restricted sl₂ example category.
pub fn sl2_projective_generator(p: u32) -> Result<Rep, ZooError> {
    sl2_restricted_simple(p, p - 1)
}

/// The baby Verma module V_{χ,λ} of dimension p: H vᵢ = (λ̃−2i)vᵢ,
/// F vᵢ = vᵢ₊₁ (with F v_{p−1} = χ(Fᵖ)·v₀), E vᵢ = i(λ̃−i+1)vᵢ₋₁.
/// For the semisimple type λ̃ = α/2 + λ works over GF(p²); otherwise λ̃ = λ.
/// The χ values are validated numerically on the constructed matrices.
pub fn sl2_baby_verma(p: u32, chi: &ChiType, lambda: i64) -> Result<Rep, ZooError> {
    if p <= 2 {
        return Err(bad("sl2 needs p > 2"));
    }
    let (field, lam_tilde, f_wrap, chi_h) = match chi {
        ChiType::Restricted | ChiType::RegularNilpotent => {
            if !(0..p as i64).contains(&lambda) {
                return Err(bad(format!("lambda must lie in 0..{p}")));
            }
            let field = FieldSpec::prime(p)?;
            let lam = field.from_integer(lambda);
            let wrap = if matches!(chi, ChiType::RegularNilpotent) {
                field.one()
            } else {
                field.zero()
            };
            (field.clone(), lam, wrap, field.zero())
        }
        ChiType::Semisimple(alpha) => {
            let field = alpha.field().clone();
            if alpha.is_zero() {
                return Err(bad("semisimple type needs alpha != 0"));
            }
            let half = field.from_integer(2).inv()?;
            let lam = alpha.mul(&half)?.add(&field.from_integer(lambda))?;
            let chi_h = alpha.pow(p as u64);
            let zero = field.zero();
            (field, lam, zero, chi_h)
        }
    };
    let n = p as usize;
    let gens = sl2_weight_module_wrapped(&field, n, &lam_tilde, &f_wrap)?;
    let rep = Rep::new(
        field.clone(),
        Flavor::Lie,
        format!("V(chi,{lambda})[p={p}]"),
        gens,
        vec![],
        RelationSet::Sl2,
    )?;
    // numeric χ validation: Fᵖ, Eᵖ and Hᵖ−H must act by the declared scalars
    let fp = rep.gen_action("F").unwrap().pow(p as u64);
    if fp != Matrix::scalar(&field, n, &f_wrap) {
        return Err(bad("F^p does not act by chi(F^p)"));
    }
    if !rep.gen_action("E").unwrap().pow(p as u64).is_zero() {
        return Err(bad("E^p does not act by zero"));
    }
    let h = rep.gen_action("H").unwrap();
    if h.pow(p as u64).sub(&h) != Matrix::scalar(&field, n, &chi_h) {
        return Err(bad("H^p - H does not act by chi(H^p - H)"));
    }
    Ok(rep)
}

fn sl2_weight_module(
    field: &FieldSpec,
    dim: usize,
    lam: &Scalar,
    f_wrap: &Scalar,
) -> Result<Vec<(String, Matrix)>, ZooError> {
    sl2_weight_module_wrapped(field, dim, lam, f_wrap)
}

fn sl2_weight_module_wrapped(
    field: &FieldSpec,
    dim: usize,
    lam: &Scalar,
    f_wrap: &Scalar,
) -> Result<Vec<(String, Matrix)>, ZooError> {
    let mut h = Matrix::zeros(field, dim, dim);
    let mut e = Matrix::zeros(field, dim, dim);
    let mut f = Matrix::zeros(field, dim, dim);
    for i in 0..dim {
        let fi = field.from_integer(i as i64);
        let two_i = field.from_integer(2 * i as i64);
        h.set(i, i, &lam.sub(&two_i)?);
        if i + 1 < dim {
            f.set(i + 1, i, &field.one());
        } else if !f_wrap.is_zero() {
            f.set(0, i, f_wrap);
        }
        if i > 0 {
            // E vᵢ = i(λ−i+1) vᵢ₋₁
            let coef = fi.mul(&lam.sub(&fi)?.add(&field.one())?)?;
            e.set(i - 1, i, &coef);
        }
    }
    Ok(vec![("H".into(), h), ("E".into(), e), ("F".into(), f)])
}

/// The canonical α for the semisimple χ type over GF(p²): the least-indexed
/// field element with α^{p−1} = −1 (equivalently αᵖ = −α).
pub fn semisimple_alpha(p: u32) -> Result<Scalar, ZooError> {
    let field = FieldSpec::extension(p, 2)?;
    let neg_one = field.one().neg();
    for a in field.all_elements() {
        if !a.is_zero() && a.pow((p - 1) as u64) == neg_one {
            return Ok(a);
        }
    }
    Err(bad(format!("no alpha with alpha^(p-1) = -1 over GF({p}^2)")))
}

/// The Casimir Ω = EF + FE + H²/2 acting on an sl₂-module.
pub fn casimir_action(m: &Rep) -> Result<Morphism, ZooError> {
    if m.flavor() != Flavor::Lie {
        return Err(bad("Casimir needs the lie flavor"));
    }
    let field = m.field().clone();
    let half = field.from_integer(2).inv()?;
    let h = m.gen_action("H").ok_or_else(|| bad("missing H"))?;
    let e = m.gen_action("E").ok_or_else(|| bad("missing E"))?;
    let f = m.gen_action("F").ok_or_else(|| bad("missing F"))?;
    let omega = e.mul(&f).add(&f.mul(&e)).add(&h.mul(&h).scale(&half));
    Ok(Morphism::new(m.clone(), m.clone(), omega)?)
}

/// Ω₁,₂ = E⊗F + F⊗E + (H⊗H)/2 acting on M⊗N.
pub fn omega12(m: &Rep, n: &Rep) -> Result<Morphism, ZooError> {
    if m.flavor() != Flavor::Lie || n.flavor() != Flavor::Lie {
        return Err(bad("omega12 needs the lie flavor"));
    }
    let field = m.field().clone();
    let half = field.from_integer(2).inv()?;
    let act = |r: &Rep, g: &str| r.gen_action(g).ok_or_else(|| bad(format!("missing {g}")));
    let mat = act(m, "E")?
        .kron(&act(n, "F")?)
        .add(&act(m, "F")?.kron(&act(n, "E")?))
        .add(&act(m, "H")?.kron(&act(n, "H")?).scale(&half));
    let t = m.tensor(n);
    Ok(Morphism::new(t.clone(), t, mat)?)
}

/// The explicit endomorphism f of V⊗V for V = V_{χ,0} (χ regular nilpotent):
/// determined by f(v₀⊗v₁) = f(v₁⊗v₀) = v₀⊗v₁ − v₁⊗v₀, extended
/// F-equivariantly on the generalized 0-eigenspace of Ω₁,₂ and by zero on its
/// complement.
pub fn vzero_witness(p: u32) -> Result<Morphism, ZooError> {
    let v = sl2_baby_verma(p, &ChiType::RegularNilpotent, 0)?;
    let t = v.tensor(&v);
    let field = v.field().clone();
    let n = p as usize;
    let dim = n * n;
    let f_t = t.gen_action("F").unwrap();
    let one = field.one();
    // w± = v₀⊗v₁ ± v₁⊗v₀
    let mut w_plus = Matrix::zeros(&field, dim, 1);
    w_plus.set(1, 0, &one);
    w_plus.set(n, 0, &one);
    let mut w_minus = Matrix::zeros(&field, dim, 1);
    w_minus.set(1, 0, &one);
    w_minus.set(n, 0, &one.neg());
    let chain = |start: &Matrix| {
        let mut out = vec![start.clone()];
        for _ in 1..n {
            let next = f_t.mul(out.last().unwrap());
            out.push(next);
        }
        out
    };
    let plus_chain = chain(&w_plus);
    let minus_chain = chain(&w_minus);
    let omega = omega12(&v, &v)?;
    let (_, complement) = omega.matrix().fitting_split();
    let mut cols = Vec::with_capacity(dim);
    let mut images = Vec::with_capacity(dim);
    let zero_col = Matrix::zeros(&field, dim, 1);
    let two = field.from_integer(2);
    for (pv, mv) in plus_chain.iter().zip(&minus_chain) {
        cols.push(pv.clone());
        images.push(mv.scale(&two));
    }
    for mv in &minus_chain {
        cols.push(mv.clone());
        images.push(zero_col.clone());
    }
    for c in 0..complement.cols() {
        cols.push(complement.col(c));
        images.push(zero_col.clone());
    }
    let b = Matrix::hstack(&cols);
    let b_inv = b
        .inverse()
        .ok_or_else(|| bad("chains and Fitting complement do not span V⊗V"))?;
    let f = Matrix::hstack(&images).mul(&b_inv);
    Ok(Morphism::new(t.clone(), t, f)?)
}

// ----- gl(1|1) super demo -----

/// The natural gl(1|1) supermodule: dimension 1|1, matrix-unit generators.
pub fn gl11_natural() -> Rep {
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
    .expect("the natural supermodule satisfies the gl(1|1) relations")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{braiding, cat_dim, hom_basis, tr_left, tr_right, Morphism};

    #[test]
    fn cyclic_module_examples() {
        let v2 = cyclic_module(2, 2).unwrap();
        let g = v2.gen_action("g").unwrap();
        // g v₁ = v₁, g v₂ = v₁ + v₂
        let f = v2.field();
        assert_eq!(g, Matrix::from_int_rows(f, &[vec![1, 1], vec![0, 1]]));
        assert!(cat_dim(&cyclic_module(5, 4).unwrap()) == FieldSpec::prime(5).unwrap().from_integer(4));
        assert!(cat_dim(&cyclic_module(5, 5).unwrap()).is_zero());
        assert!(cyclic_module(5, 6).is_err());
        assert!(cyclic_module(5, 0).is_err());
    }

    #[test]
    fn cyclic_regular_witness_identities() {
        let p = 5u32;
        let a = cyclic_regular(p).unwrap();
        let f = cyclic_regular_witness(p).unwrap();
        let field = a.field().clone();
        let tl = tr_left(&f, &a, &a);
        let tr = tr_right(&f, &a, &a);
        // tr_R(f) = −tr_L(f)
        assert_eq!(tr.matrix(), &tl.matrix().neg());
        // tr_L(f)(v₀) = −1/2 · v₂
        let half_neg = field.from_integer(2).inv().unwrap().neg();
        let v0 = Matrix::from_fn(&field, p as usize, 1, |i, _| {
            if i == 0 { field.one() } else { field.zero() }
        });
        let got = tl.matrix().mul(&v0);
        let mut want = Matrix::zeros(&field, p as usize, 1);
        want.set(2, 0, &half_neg);
        assert_eq!(got, want);
        // tr_L(f)^p = (−1/2)^p Id
        let scal = half_neg.pow(p as u64);
        assert_eq!(tl.pow(p as u64).matrix(), &Matrix::scalar(&field, p as usize, &scal));
    }

    #[test]
    fn klein_modules() {
        let f4 = FieldSpec::extension(2, 2).unwrap();
        let alpha = f4.adjoined_generator().unwrap();
        let v1 = klein_module(&f4, KleinKind::V(1, KleinParam::Alpha(alpha.clone()))).unwrap();
        assert_eq!(v1.dim(), 2);
        // x = g − 1 ↦ [[0,1],[0,0]], y = h − 1 ↦ [[0,α],[0,0]]
        let id = Matrix::identity(&f4, 2);
        let x = v1.gen_action("g").unwrap().sub(&id);
        let y = v1.gen_action("h").unwrap().sub(&id);
        assert_eq!(x.get(0, 1), f4.one());
        assert_eq!(y.get(0, 1), alpha);
        assert!(x.get(1, 0).is_zero() && x.get(1, 1).is_zero() && x.get(0, 0).is_zero());
        for n in 1..=4 {
            assert_eq!(klein_module(&f4, KleinKind::V(n, KleinParam::Infinity)).unwrap().dim(), 2 * n);
        }
        let d = klein_module(&f4, KleinKind::RegularD).unwrap();
        assert_eq!(d.dim(), 4);
        assert!(cat_dim(&d).is_zero());
        assert!(cat_dim(&klein_module(&f4, KleinKind::Trivial).unwrap()).is_one());
    }

    #[test]
    fn sl2_simples_and_vermas() {
        let l1 = sl2_restricted_simple(5, 1).unwrap();
        assert_eq!(l1.dim(), 2);
        let st = sl2_projective_generator(5).unwrap();
        assert_eq!(st.dim(), 5);
        let v0 = sl2_baby_verma(5, &ChiType::RegularNilpotent, 0).unwrap();
        assert_eq!(v0.dim(), 5);
        // E vᵢ = i(1−i) vᵢ₋₁ at λ = 0
        let field = v0.field().clone();
        let e = v0.gen_action("E").unwrap();
        for i in 1..5i64 {
            assert_eq!(e.get(i as usize - 1, i as usize), field.from_integer(i * (1 - i)));
        }
        // F wraps around: χ(Fᵖ) = 1
        let f = v0.gen_action("F").unwrap();
        assert!(f.get(0, 4).is_one());
        // restricted type: F truncates
        let r0 = sl2_baby_verma(5, &ChiType::Restricted, 3).unwrap();
        assert!(r0.gen_action("F").unwrap().pow(5).is_zero());
    }

    #[test]
    fn regular_nilpotent_verma_lambda_star_isomorphism() {
        // V_{χ,λ} ≅ V_{χ,λ*} with λ* = p−2−λ
        let p = 5;
        let a = sl2_baby_verma(p, &ChiType::RegularNilpotent, 1).unwrap();
        let b = sl2_baby_verma(p, &ChiType::RegularNilpotent, (p as i64) - 2 - 1).unwrap();
        let homs = hom_basis(&a, &b);
        assert!(!homs.is_empty());
        assert!(homs.iter().any(|h| h.matrix().inverse().is_some()));
    }

    #[test]
    fn semisimple_verma_construction() {
        let p = 5;
        let alpha = semisimple_alpha(p).unwrap();
        assert_eq!(alpha.pow(p as u64), alpha.neg());
        let v = sl2_baby_verma(p, &ChiType::Semisimple(alpha.clone()), 0).unwrap();
        assert_eq!(v.dim(), 5);
        // simple: End = K
        assert_eq!(hom_basis(&v, &v).len(), 1);
    }

    #[test]
    fn casimir_scalar_values() {
        // Ω acts on V_{χ,λ} with single generalized eigenvalue c_λ = λ + λ²/2
        let p = 5;
        let field = FieldSpec::prime(p).unwrap();
        let half = field.from_integer(2).inv().unwrap();
        for lam in 0..3i64 {
            let v = sl2_baby_verma(p, &ChiType::RegularNilpotent, lam).unwrap();
            let omega = casimir_action(&v).unwrap();
            let c = field
                .from_integer(lam)
                .add(&field.from_integer(lam * lam).mul(&half).unwrap())
                .unwrap();
            let shifted = omega.matrix().sub(&Matrix::scalar(&field, v.dim(), &c));
            assert!(shifted.pow(v.dim() as u64).is_zero(), "c_{lam} wrong");
            if lam == 1 {
                assert_eq!(c, field.from_integer(4)); // c₁ = 4 in GF(5)
            }
        }
    }

    #[test]
    fn omega12_eigenspace_dims() {
        // generalized eigenspace dims of Ω₁,₂ on V_{χ,0}⊗V_{χ,0} at p = 5
        let v = sl2_baby_verma(5, &ChiType::RegularNilpotent, 0).unwrap();
        let om = omega12(&v, &v).unwrap();
        let field = v.field().clone();
        let mut dims = Vec::new();
        for c in 0..5i64 {
            let shifted = om.matrix().sub(&Matrix::scalar(&field, 25, &field.from_integer(c)));
            let (ker, _) = shifted.fitting_split();
            if ker.cols() > 0 {
                dims.push(ker.cols());
            }
        }
        dims.sort();
        assert_eq!(dims, vec![5, 10, 10]);
    }

    #[test]
    fn vzero_witness_identities() {
        let p = 5;
        let v = sl2_baby_verma(p, &ChiType::RegularNilpotent, 0).unwrap();
        let f = vzero_witness(p).unwrap();
        let om = omega12(&v, &v).unwrap();
        // f ∘ Ω₁,₂ = Ω₁,₂ ∘ f = 0
        assert!(f.compose(&om).is_zero());
        assert!(om.compose(&f).is_zero());
        // tr_R(f) = −Id_V and tr_L(f) = +Id_V
        let field = v.field();
        let id = Matrix::identity(field, v.dim());
        assert_eq!(tr_right(&f, &v, &v).matrix(), &id.neg());
        assert_eq!(tr_left(&f, &v, &v).matrix(), &id);
    }

    #[test]
    fn gl11_braiding_sign() {
        let v = gl11_natural();
        assert!(cat_dim(&v).is_zero());
        let c = braiding(&v, &v);
        // odd⊗odd basis vector (index 1·2+1 = 3) carries sign −1
        let q = v.field();
        assert_eq!(c.matrix().get(3, 3), q.from_integer(-1));
        assert_eq!(hom_basis(&v, &v).len(), 1);
        let _ = Morphism::identity(&v);
    }
}
