//! Endomorphism-algebra analysis: canonical scalars, indecomposability,
//! splitting into indecomposable summands, retract discovery and ideal
//! membership.
//!
//! The canonical scalar ⟨f⟩ of an endomorphism of an absolutely
//! indecomposable object is the unique c with f − c·Id nilpotent. Splitting
//! uses the Fitting decomposition of endomorphisms drawn from a deterministic
//! candidate stream (basis elements, then seeded random combinations, then
//! pairwise products). Ideal membership V ∈ I_J is decided by one canonical
//! linear splitting problem through J⊗J*⊗V.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{FieldKind, Scalar};
use crate::matrix::Matrix;
use crate::rep::{ev_tw, hom_basis, Flavor, Morphism, Rep, RepError};

/// Default seed for the deterministic candidate stream.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Cap on candidates tried per search level inside the splitter.
const SPLIT_CANDIDATE_CAP: usize = 200;

/// Errors from endomorphism-algebra analysis.
#[derive(Debug, Error)]
pub enum DecompError {
    #[error("no scalar c makes f - c·Id nilpotent; the object is not absolutely indecomposable over this field (a field extension may be needed)")]
    NoCanonicalScalar,
    #[error("candidate cap exceeded without certifying indecomposability; a field extension or larger search set is needed")]
    SplitCapExceeded,
    #[error("invariant subspace basis mixes parities; cannot form a super subrepresentation")]
    MixedParityBasis,
    #[error("canonical scalar of a non-endomorphism")]
    NotEndomorphism,
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// The canonical scalar ⟨f⟩: the unique c ∈ K with f − c·Id nilpotent.
/// Finite fields scan every candidate root of the characteristic polynomial
/// constraint; over ℚ the only candidate is trace/dim.
pub fn canonical_scalar(f: &Morphism) -> Result<Scalar, DecompError> {
    if !f.is_endo() {
        return Err(DecompError::NotEndomorphism);
    }
    let field = f.source().field();
    let n = f.source().dim();
    let m = f.matrix();
    let nil_pow = (n as u64).next_power_of_two();
    let is_answer = |c: &Scalar| m.sub(&Matrix::scalar(field, n, c)).pow(nil_pow).is_zero();
    match field.kind() {
        FieldKind::Finite { .. } => {
            for c in field.all_elements() {
                if is_answer(&c) {
                    return Ok(c);
                }
            }
            Err(DecompError::NoCanonicalScalar)
        }
        FieldKind::Rationals => {
            let c = m
                .trace()
                .mul(&field.from_integer(n as i64).inv().expect("dim invertible in Q"))
                .unwrap();
            if is_answer(&c) {
                Ok(c)
            } else {
                Err(DecompError::NoCanonicalScalar)
            }
        }
    }
}

/// One direct summand with its inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Rep,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

/// A complete decomposition into indecomposables: projectionᵢ∘inclusionᵢ = Id
/// on each summand and Σ inclusionᵢ∘projectionᵢ = Id on the ambient object.
pub type SummandList = Vec<Summand>;

/// The subrepresentation spanned by the columns of `basis` (assumed invariant
/// and linearly independent), with its inclusion.
fn subrep_on_basis(m: &Rep, basis: &Matrix) -> Result<(Rep, Morphism), DecompError> {
    let field = m.field();
    let k = basis.cols();
    let mut gens = Vec::with_capacity(m.generators().len());
    for (name, g) in m.generators() {
        let x = basis
            .solve(&g.mul(basis))
            .expect("basis must span an invariant subspace");
        gens.push((name.clone(), x));
    }
    let parity = if m.flavor() == Flavor::SuperLie {
        let mut p = Vec::with_capacity(k);
        for c in 0..k {
            let mut par: Option<u8> = None;
            for r in 0..basis.rows() {
                if !basis.get(r, c).is_zero() {
                    let q = m.parity(r);
                    match par {
                        None => par = Some(q),
                        Some(existing) if existing != q => {
                            return Err(DecompError::MixedParityBasis)
                        }
                        _ => {}
                    }
                }
            }
            p.push(par.unwrap_or(0));
        }
        p
    } else {
        Vec::new()
    };
    let sub = Rep::new(
        field.clone(),
        m.flavor(),
        format!("{}|sub{k}", m.label()),
        gens,
        parity,
        crate::rep::RelationSet::Derived,
    )?;
    let inc = Morphism::new(sub.clone(), m.clone(), basis.clone())?;
    Ok((sub, inc))
}

/// Split M completely into indecomposable summands. Deterministic for a
/// fixed seed: candidate endomorphisms are tried in a fixed order (End basis,
/// then seeded random combinations, then pairwise products, capped per
/// level); each Fitting split recurses on both parts.
pub fn split_indecomposables(m: &Rep, seed: u64) -> Result<SummandList, DecompError> {
    let id = Morphism::identity(m);
    split_rec(m, &id, &id, seed)
}

fn split_rec(
    part: &Rep,
    inclusion: &Morphism,
    projection: &Morphism,
    seed: u64,
) -> Result<SummandList, DecompError> {
    let basis = hom_basis(part, part);
    match find_fitting_split(part, &basis, seed) {
        Some((ker, img)) => {
            let (rep_a, inc_a) = subrep_on_basis(part, &ker)?;
            let (rep_b, inc_b) = subrep_on_basis(part, &img)?;
            // projections from the combined change of basis
            let b = Matrix::hstack(&[ker.clone(), img.clone()]);
            let b_inv = b.inverse().expect("Fitting parts are complementary");
            let proj_a = Morphism::new(
                part.clone(),
                rep_a.clone(),
                b_inv.submatrix(0, 0, rep_a.dim(), part.dim()),
            )?;
            let proj_b = Morphism::new(
                part.clone(),
                rep_b.clone(),
                b_inv.submatrix(rep_a.dim(), 0, rep_b.dim(), part.dim()),
            )?;
            let mut out = split_rec(
                &rep_a,
                &inclusion.compose(&inc_a),
                &proj_a.compose(projection),
                seed,
            )?;
            out.extend(split_rec(
                &rep_b,
                &inclusion.compose(&inc_b),
                &proj_b.compose(projection),
                seed,
            )?);
            Ok(out)
        }
        None => {
            // no candidate splits; certify locality of End(part)
            for h in &basis {
                canonical_scalar(h).map_err(|_| DecompError::SplitCapExceeded)?;
            }
            Ok(vec![Summand {
                rep: part.clone(),
                inclusion: inclusion.clone(),
                projection: projection.clone(),
            }])
        }
    }
}

/// Try the candidate stream; return the (kernel part, image part) bases of
/// the first candidate whose Fitting decomposition is nontrivial.
fn find_fitting_split(part: &Rep, basis: &[Morphism], seed: u64) -> Option<(Matrix, Matrix)> {
    let n = part.dim();
    let field = part.field();
    let try_split = |mat: &Matrix| -> Option<(Matrix, Matrix)> {
        let (ker, img) = mat.fitting_split();
        if ker.cols() > 0 && img.cols() > 0 {
            Some((ker, img))
        } else {
            None
        }
    };
    // level 1: basis elements
    for h in basis.iter().take(SPLIT_CANDIDATE_CAP) {
        if let Some(s) = try_split(h.matrix()) {
            return Some(s);
        }
    }
    if basis.len() <= 1 {
        return None;
    }
    // level 2: seeded random combinations
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_scalar = |rng: &mut ChaCha8Rng| -> Scalar {
        match field.kind() {
            FieldKind::Finite { .. } => {
                let q = field.order().unwrap() as u64;
                field.element(rng.gen_range(0..q)).unwrap()
            }
            FieldKind::Rationals => field.from_integer(rng.gen_range(-5..=5)),
        }
    };
    for _ in 0..SPLIT_CANDIDATE_CAP {
        let mut mat = Matrix::zeros(field, n, n);
        for h in basis {
            let c = random_scalar(&mut rng);
            if !c.is_zero() {
                mat = mat.add(&h.matrix().scale(&c));
            }
        }
        if let Some(s) = try_split(&mat) {
            return Some(s);
        }
    }
    // level 3: pairwise products in index order
    let mut tried = 0;
    for (i, hi) in basis.iter().enumerate() {
        for hj in basis.iter().skip(i) {
            if tried >= SPLIT_CANDIDATE_CAP {
                return None;
            }
            tried += 1;
            if let Some(s) = try_split(&hi.matrix().mul(hj.matrix())) {
                return Some(s);
            }
        }
    }
    None
}

/// True iff End(M) is local with residue field K: M admits no splitting and
/// every End basis element has a canonical scalar.
pub fn is_absolutely_indecomposable(m: &Rep) -> bool {
    let basis = hom_basis(m, m);
    if basis.iter().any(|h| canonical_scalar(h).is_err()) {
        return false;
    }
    find_fitting_split(m, &basis, DEFAULT_SEED).is_none()
}

/// A witness that V is a retract of J⊗W.
#[derive(Clone, Debug)]
pub struct RetractWitness {
    pub w: Rep,
    /// α: V → J⊗W.
    pub alpha: Morphism,
    /// β: J⊗W → V with β∘α = Id_V.
    pub beta: Morphism,
}

/// Decide V ∈ I_J by the canonical splitting test with W = J*⊗V: search σ in
/// the span of Hom(V, J⊗J*⊗V) with π∘σ = Id_V where π = d′_J⊗Id_V. Any
/// retract through some J⊗W′ induces one of this shape, so the single test
/// is complete.
pub fn find_retract(v: &Rep, j: &Rep) -> Option<RetractWitness> {
    assert!(v.field() == j.field(), "find_retract: field mismatch");
    assert_eq!(v.flavor(), j.flavor(), "find_retract: flavor mismatch");
    let w = j.dual().tensor(v);
    let jw = j.tensor(&w);
    let pi = ev_tw(j).tensor(&Morphism::identity(v));
    debug_assert!(pi.source() == &jw && pi.target() == v);
    let alpha = split_epimorphism(&pi)?;
    Some(RetractWitness { w, alpha, beta: pi })
}

/// Search the span of Hom(target(π), source(π)) for a section σ with
/// π∘σ = Id; the splitting engine behind retracts and the splitting
/// criterion.
pub fn split_epimorphism(pi: &Morphism) -> Option<Morphism> {
    let v = pi.target();
    let jw = pi.source();
    let sigmas = hom_basis(v, jw);
    if sigmas.is_empty() {
        return None;
    }
    // linear system: Σ cᵢ · flatten(π∘σᵢ) = flatten(Id_V)
    let field = v.field();
    let cols: Vec<Matrix> = sigmas
        .iter()
        .map(|s| pi.compose(s).matrix().flatten_row_major().transpose())
        .collect();
    let a = Matrix::hstack(&cols);
    let rhs = Matrix::identity(field, v.dim()).flatten_row_major().transpose();
    let coeffs = a.solve(&rhs)?;
    let mut sigma = Morphism::zero(v, jw);
    for (i, s) in sigmas.iter().enumerate() {
        let c = coeffs.get(i, 0);
        if !c.is_zero() {
            sigma = sigma.add(&s.scale(&c));
        }
    }
    debug_assert!(pi.compose(&sigma).is_identity());
    Some(sigma)
}

/// V ∈ I_J.
pub fn in_ideal(v: &Rep, j: &Rep) -> bool {
    find_retract(v, j).is_some()
}

/// I_V = I_J.
pub fn ideal_equal(v: &Rep, j: &Rep) -> bool {
    in_ideal(v, j) && in_ideal(j, v)
}

/// P is projective iff it lies in the ideal of the registered projective
/// generator of its example category.
pub fn is_projective(p: &Rep, projective_generator: &Rep) -> bool {
    in_ideal(p, projective_generator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::cat_dim;
    use crate::zoo;

    #[test]
    fn canonical_scalar_basics() {
        let v = zoo::cyclic_module(5, 3).unwrap();
        let id = Morphism::identity(&v);
        assert!(canonical_scalar(&id).unwrap().is_one());
        let field = v.field().clone();
        let g = Morphism::new(v.clone(), v.clone(), v.gen_action("g").unwrap()).unwrap();
        // g = Id + nilpotent, so ⟨g⟩ = 1; ⟨g − Id⟩ = 0
        assert!(canonical_scalar(&g).unwrap().is_one());
        assert!(canonical_scalar(&g.sub(&id)).unwrap().is_zero());
        let three = field.from_integer(3);
        assert_eq!(canonical_scalar(&g.scale(&three)).unwrap(), three);
    }

    #[test]
    fn canonical_scalar_error_path() {
        // a semisimple non-scalar endomorphism has no canonical scalar
        let v = zoo::cyclic_module(3, 1).unwrap().direct_sum(&zoo::cyclic_module(3, 1).unwrap());
        let field = v.field().clone();
        let diag = Matrix::from_int_rows(&field, &[vec![1, 0], vec![0, 2]]);
        let f = Morphism::new(v.clone(), v, diag).unwrap();
        assert!(matches!(canonical_scalar(&f), Err(DecompError::NoCanonicalScalar)));
    }

    #[test]
    fn klein_v1_socle_rule() {
        // any h ∈ End(V₁(α)) satisfies h(v₁) = ⟨h⟩·v₁
        let f4 = crate::field::FieldSpec::extension(2, 2).unwrap();
        let alpha = f4.adjoined_generator().unwrap();
        let v1 = zoo::klein_module(&f4, zoo::KleinKind::V(1, zoo::KleinParam::Alpha(alpha))).unwrap();
        for h in hom_basis(&v1, &v1) {
            let c = canonical_scalar(&h).unwrap();
            assert_eq!(h.matrix().get(0, 0), c);
            assert!(h.matrix().get(1, 0).is_zero());
        }
    }

    #[test]
    fn split_a_tensor_a_over_c2() {
        let a = zoo::cyclic_module(2, 2).unwrap();
        let t = a.tensor(&a);
        let parts = split_indecomposables(&t, DEFAULT_SEED).unwrap();
        assert_eq!(parts.len(), 2);
        for s in &parts {
            assert_eq!(s.rep.dim(), 2);
            assert!(s.projection.compose(&s.inclusion).is_identity());
        }
        let total = parts
            .iter()
            .map(|s| s.inclusion.compose(&s.projection))
            .reduce(|x, y| x.add(&y))
            .unwrap();
        assert!(total.is_identity());
    }

    #[test]
    fn split_klein_v1_tensor_v1() {
        let f4 = crate::field::FieldSpec::extension(2, 2).unwrap();
        let alpha = f4.adjoined_generator().unwrap();
        let v1 = zoo::klein_module(&f4, zoo::KleinKind::V(1, zoo::KleinParam::Alpha(alpha.clone()))).unwrap();
        let t = v1.tensor(&v1);
        let parts = split_indecomposables(&t, DEFAULT_SEED).unwrap();
        // V₁(α)⊗V₁(α) ≅ V₂(α): indecomposable of dimension 4
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].rep.dim(), 4);
        let v2 = zoo::klein_module(&f4, zoo::KleinKind::V(2, zoo::KleinParam::Alpha(alpha))).unwrap();
        assert!(!hom_basis(&t, &v2).iter().all(|h| h.matrix().inverse().is_none()));
    }

    #[test]
    fn krull_schmidt_seed_stability() {
        let a = zoo::cyclic_module(3, 3).unwrap();
        let t = a.tensor(&a);
        let dims = |seed: u64| {
            let mut d: Vec<usize> = split_indecomposables(&t, seed)
                .unwrap()
                .iter()
                .map(|s| s.rep.dim())
                .collect();
            d.sort();
            d
        };
        assert_eq!(dims(DEFAULT_SEED), dims(0xfeedbeef));
        assert_eq!(dims(DEFAULT_SEED), vec![3, 3, 3]);
    }

    #[test]
    fn indecomposability_of_cyclic_modules() {
        for r in 1..=5 {
            assert!(is_absolutely_indecomposable(&zoo::cyclic_module(5, r).unwrap()));
        }
        let v = zoo::cyclic_module(5, 2).unwrap();
        assert!(!is_absolutely_indecomposable(&v.direct_sum(&v)));
    }

    #[test]
    fn retract_basics() {
        let v = zoo::cyclic_module(3, 2).unwrap();
        // V is always a retract of J⊗J*⊗V for J = V (zig-zag)
        let w = find_retract(&v, &v).expect("V ∈ I_V");
        assert!(w.beta.compose(&w.alpha).is_identity());
        // over C₂: k ∉ I_{V₂} = Proj
        let k = zoo::cyclic_module(2, 1).unwrap();
        let v2 = zoo::cyclic_module(2, 2).unwrap();
        assert!(!in_ideal(&k, &v2));
        assert!(in_ideal(&v2, &k)); // I_k is everything
    }

    #[test]
    fn klein_ideal_facts() {
        let f4 = crate::field::FieldSpec::extension(2, 2).unwrap();
        let alpha = f4.adjoined_generator().unwrap();
        let v = |n: usize| {
            zoo::klein_module(&f4, zoo::KleinKind::V(n, zoo::KleinParam::Alpha(alpha.clone())))
                .unwrap()
        };
        // I_{V₂(α)} = I_{V₁(α)}
        assert!(ideal_equal(&v(1), &v(2)));
        // I_{V₂(α)} ⊊ I_{V₃(α)}
        assert!(in_ideal(&v(2), &v(3)));
        assert!(!in_ideal(&v(3), &v(2)));
        // Proj = I_D inside everything
        let d = zoo::klein_projective_generator(&f4).unwrap();
        assert!(in_ideal(&d, &v(1)));
        assert!(!in_ideal(&v(1), &d));
    }

    #[test]
    fn ideal_equal_dual() {
        for v in [
            zoo::cyclic_module(3, 2).unwrap(),
            zoo::sl2_restricted_simple(5, 2).unwrap(),
        ] {
            assert!(ideal_equal(&v, &v.dual()));
        }
    }

    #[test]
    fn nonzero_cat_dim_generates_everything() {
        // indecomposable with cat_dim ≠ 0 generates the unit ideal
        let field = crate::field::FieldSpec::prime(5).unwrap();
        let unit = Rep::unit(&field, Flavor::Group);
        for r in 1..5 {
            let v = zoo::cyclic_module(5, r).unwrap();
            assert!(!cat_dim(&v).is_zero());
            assert!(in_ideal(&unit, &v), "unit ∈ I_V for V = V_{r}");
        }
    }

    #[test]
    fn projectivity_via_registered_generator() {
        let a = zoo::cyclic_projective_generator(5).unwrap();
        assert!(is_projective(&a, &a));
        let v2 = zoo::cyclic_module(5, 2).unwrap();
        assert!(!is_projective(&v2, &a));
        // projectives lie in every ideal
        assert!(in_ideal(&a, &v2));
    }
}
