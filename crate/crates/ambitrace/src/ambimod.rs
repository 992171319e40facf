//! Ambidexterity checking, the induced trace on an ideal, modified
//! dimensions, and the canonical splitting criterion.
//!
//! An absolutely indecomposable object J is ambidextrous when
//! ⟨tr_L(h)⟩ = ⟨tr_R(h)⟩ for every h ∈ End(J⊗J); by linearity a basis sweep
//! is exhaustive and produces either a full table of agreeing pairs or an
//! explicit witness index. An ambidextrous J induces a trace on its ideal:
//! t_V(f) = ⟨tr_R(α∘f∘β)⟩ for any retract witness (α, β) of V through J⊗W,
//! and mod_dim(J, V) = t_V(Id_V).

use serde_json::json;
use thiserror::Error;

use crate::decomp::{
    canonical_scalar, find_retract, is_absolutely_indecomposable, split_epimorphism,
    DecompError, RetractWitness,
};
use crate::field::Scalar;
use crate::rep::{ev, hom_basis, tr_left, tr_right, Morphism, Rep};

/// Errors from trace-on-ideal computations.
#[derive(Debug, Error)]
pub enum AmbiError {
    #[error("J is not ambidextrous; it induces no trace on its ideal")]
    NotAmbidextrous,
    #[error("V does not lie in the ideal of J; the trace is undefined there")]
    NotInIdeal,
    #[error("f is not an endomorphism of V")]
    NotEndomorphism,
    #[error(transparent)]
    Decomp(#[from] DecompError),
}

/// Outcome of an ambidexterity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiVerdict {
    Ambidextrous,
    NotAmbidextrous,
    /// J failed absolute indecomposability over the working field.
    NotApplicable,
}

impl AmbiVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            AmbiVerdict::Ambidextrous => "ambidextrous",
            AmbiVerdict::NotAmbidextrous => "not-ambidextrous",
            AmbiVerdict::NotApplicable => "not-applicable",
        }
    }
}

/// Result of sweeping a basis of End(J⊗J).
#[derive(Debug, Clone)]
pub struct AmbiReport {
    pub object: String,
    pub dim: usize,
    pub verdict: AmbiVerdict,
    /// (basis index, ⟨tr_L(h)⟩, ⟨tr_R(h)⟩) per basis element.
    pub basis_results: Vec<(usize, Scalar, Scalar)>,
    /// First basis index where the two scalars differ.
    pub witness: Option<usize>,
}

impl AmbiReport {
    /// JSON form with canonically rendered scalars.
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("object".into(), json!(self.object));
        obj.insert("dim".into(), json!(self.dim));
        obj.insert("verdict".into(), json!(self.verdict.as_str()));
        obj.insert("basis_dim".into(), json!(self.basis_results.len()));
        if let Some(w) = self.witness {
            obj.insert("witness_index".into(), json!(w));
        }
        let pairs: Vec<serde_json::Value> = self
            .basis_results
            .iter()
            .map(|(_, l, r)| json!([l.canonical_string(), r.canonical_string()]))
            .collect();
        obj.insert("pairs".into(), json!(pairs));
        serde_json::Value::Object(obj)
    }
}

/// Check whether J is ambidextrous: compare ⟨tr_L(h)⟩ with ⟨tr_R(h)⟩ over a
/// basis of End(J⊗J).
pub fn ambi_check(j: &Rep) -> AmbiReport {
    if !is_absolutely_indecomposable(j) {
        return AmbiReport {
            object: j.label().to_string(),
            dim: j.dim(),
            verdict: AmbiVerdict::NotApplicable,
            basis_results: Vec::new(),
            witness: None,
        };
    }
    let jj = j.tensor(j);
    let basis = hom_basis(&jj, &jj);
    let mut results = Vec::with_capacity(basis.len());
    let mut witness = None;
    for (i, h) in basis.iter().enumerate() {
        let l = canonical_scalar(&tr_left(h, j, j))
            .expect("partial traces of End(J⊗J) land in the local algebra End(J)");
        let r = canonical_scalar(&tr_right(h, j, j))
            .expect("partial traces of End(J⊗J) land in the local algebra End(J)");
        if l != r && witness.is_none() {
            witness = Some(i);
        }
        results.push((i, l, r));
    }
    AmbiReport {
        object: j.label().to_string(),
        dim: j.dim(),
        verdict: if witness.is_none() {
            AmbiVerdict::Ambidextrous
        } else {
            AmbiVerdict::NotAmbidextrous
        },
        basis_results: results,
        witness,
    }
}

/// The trace induced on I_J by an ambidextrous J, evaluated at f ∈ End(V):
/// t_V(f) = ⟨tr_R(α∘f∘β)⟩. Supply a retract witness to pin the (provably
/// witness-independent) computation, or let one be found.
pub fn trace_on_ideal(
    j: &Rep,
    v: &Rep,
    f: &Morphism,
    witness: Option<&RetractWitness>,
) -> Result<Scalar, AmbiError> {
    if !f.is_endo() || f.source() != v {
        return Err(AmbiError::NotEndomorphism);
    }
    if ambi_check(j).verdict != AmbiVerdict::Ambidextrous {
        return Err(AmbiError::NotAmbidextrous);
    }
    trace_on_ideal_unchecked(j, v, f, witness)
}

/// As `trace_on_ideal` but trusting the caller that J is ambidextrous
/// (used internally to avoid re-running the basis sweep).
pub fn trace_on_ideal_unchecked(
    j: &Rep,
    v: &Rep,
    f: &Morphism,
    witness: Option<&RetractWitness>,
) -> Result<Scalar, AmbiError> {
    let found;
    let wit = match witness {
        Some(w) => w,
        None => {
            found = find_retract(v, j).ok_or(AmbiError::NotInIdeal)?;
            &found
        }
    };
    let inner = wit.alpha.compose(&f.compose(&wit.beta)); // ∈ End(J⊗W)
    let reduced = tr_right(&inner, j, &wit.w); // ∈ End(J)
    Ok(canonical_scalar(&reduced)?)
}

/// The modified dimension d_J(V) = t_V(Id_V). V ∉ I_J is an error, not zero.
pub fn mod_dim(j: &Rep, v: &Rep) -> Result<Scalar, AmbiError> {
    trace_on_ideal(j, v, &Morphism::identity(v), None)
}

/// Decide whether the canonical epimorphism d_V⊗Id_J: V*⊗V⊗J → J splits.
pub fn check_split_canonical(v: &Rep, j: &Rep) -> bool {
    let pi = ev(v).tensor(&Morphism::identity(j));
    split_epimorphism(&pi).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::rep::{cat_dim, cat_trace, Flavor};
    use crate::zoo;

    #[test]
    fn unit_is_ambidextrous() {
        let f = FieldSpec::prime(2).unwrap();
        let unit = Rep::unit(&f, crate::rep::Flavor::Group);
        let rep = ambi_check(&unit);
        assert_eq!(rep.verdict, AmbiVerdict::Ambidextrous);
        assert_eq!(rep.basis_results.len(), 1);
    }

    #[test]
    fn c2_regular_not_ambidextrous() {
        let a = zoo::cyclic_module(2, 2).unwrap();
        let rep = ambi_check(&a);
        assert_eq!(rep.verdict, AmbiVerdict::NotAmbidextrous);
        let w = rep.witness.expect("witness index");
        let (_, l, r) = &rep.basis_results[w];
        // up to sign/order the canonical witness pair is (1, 0)
        assert!(l != r);
        assert!(
            (l.is_one() && r.is_zero()) || (l.is_zero() && r.is_one()),
            "witness pair should be (1,0) or (0,1), got ({l}, {r})"
        );
        let json = rep.to_json();
        assert_eq!(json["verdict"], "not-ambidextrous");
        assert!(json["witness_index"].is_u64());
    }

    #[test]
    fn small_cyclic_modules_are_ambidextrous() {
        for r in 1..5 {
            let v = zoo::cyclic_module(5, r).unwrap();
            assert_eq!(ambi_check(&v).verdict, AmbiVerdict::Ambidextrous, "V_{r}");
        }
    }

    #[test]
    fn not_applicable_on_decomposable() {
        let v = zoo::cyclic_module(3, 1).unwrap();
        let rep = ambi_check(&v.direct_sum(&v));
        assert_eq!(rep.verdict, AmbiVerdict::NotApplicable);
    }

    #[test]
    fn trace_on_ideal_basics() {
        let k = zoo::cyclic_module(3, 1).unwrap();
        let v2 = zoo::cyclic_module(3, 2).unwrap();
        // t_J(Id_J) = 1
        assert!(mod_dim(&k, &k).unwrap().is_one());
        // the unit recovers the categorical trace
        let field = k.field().clone();
        let unit = Rep::unit(&field, Flavor::Group);
        let g = Morphism::new(v2.clone(), v2.clone(), v2.gen_action("g").unwrap()).unwrap();
        assert_eq!(
            trace_on_ideal(&unit, &v2, &g, None).unwrap(),
            cat_trace(&g)
        );
        assert_eq!(mod_dim(&unit, &v2).unwrap(), cat_dim(&v2));
    }

    #[test]
    fn klein_v1_ambidextrous_and_moddim_vanishes() {
        let f4 = FieldSpec::extension(2, 2).unwrap();
        let alpha = f4.adjoined_generator().unwrap();
        let v1 = zoo::klein_module(&f4, zoo::KleinKind::V(1, zoo::KleinParam::Alpha(alpha.clone()))).unwrap();
        let rep = ambi_check(&v1);
        assert_eq!(rep.verdict, AmbiVerdict::Ambidextrous);
        // d_{V₁(α)}(V₂(α)) = 0 even though I_{V₂(α)} = I_{V₁(α)}: the
        // canonical epi still splits (V₂(α) is not simple, so vanishing
        // modified dimension does not obstruct the splitting)
        let v2 = zoo::klein_module(&f4, zoo::KleinKind::V(2, zoo::KleinParam::Alpha(alpha.clone()))).unwrap();
        assert!(trace_on_ideal(&v1, &v2, &Morphism::identity(&v2), None)
            .unwrap()
            .is_zero());
        assert!(check_split_canonical(&v2, &v1));
        // splitting of V*⊗V⊗J → J forces J ∈ I_V, so with V = V₁(α) and
        // J = V₃(α) ∉ I_{V₁(α)} it cannot split
        let v3 = zoo::klein_module(&f4, zoo::KleinKind::V(3, zoo::KleinParam::Alpha(alpha))).unwrap();
        assert!(!check_split_canonical(&v1, &v3));
    }

    #[test]
    fn moddim_error_outside_ideal() {
        // k ∉ I_{V₂} over C₂ and V₂ = A is not ambidextrous anyway
        let k = zoo::cyclic_module(2, 1).unwrap();
        let v2 = zoo::cyclic_module(2, 2).unwrap();
        assert!(matches!(mod_dim(&v2, &k), Err(AmbiError::NotAmbidextrous)));
        // an ambidextrous J with V outside I_J: the trivial Klein module lies
        // outside I_{V₁(α)} (otherwise I_k ⊆ I_{V₁(α)}, contradicting the
        // strict chain of ideals)
        let f4 = FieldSpec::extension(2, 2).unwrap();
        let alpha = f4.adjoined_generator().unwrap();
        let v1 =
            zoo::klein_module(&f4, zoo::KleinKind::V(1, zoo::KleinParam::Alpha(alpha))).unwrap();
        let triv = zoo::klein_module(&f4, zoo::KleinKind::Trivial).unwrap();
        assert!(matches!(mod_dim(&v1, &triv), Err(AmbiError::NotInIdeal)));
    }

    #[test]
    fn split_canonical_examples() {
        let f5 = FieldSpec::prime(5).unwrap();
        let unit = Rep::unit(&f5, Flavor::Group);
        assert!(check_split_canonical(&unit, &unit));
        // p ∤ dim V: the canonical epi onto the unit splits
        for r in 1..5 {
            let v = zoo::cyclic_module(5, r).unwrap();
            assert!(check_split_canonical(&v, &unit), "V_{r}");
        }
        // p | dim V: it does not
        let vp = zoo::cyclic_module(5, 5).unwrap();
        assert!(!check_split_canonical(&vp, &unit));
    }

    #[test]
    fn witness_independence_spot_check() {
        // pad W with a free summand to get a second witness and compare
        let j = zoo::cyclic_module(3, 2).unwrap();
        let v = zoo::cyclic_module(3, 3).unwrap();
        let w1 = find_retract(&v, &j).expect("V₃ ∈ I_{V₂}");
        let t1 = trace_on_ideal(&j, &v, &Morphism::identity(&v), Some(&w1)).unwrap();
        let t2 = trace_on_ideal(&j, &v, &Morphism::identity(&v), None).unwrap();
        assert_eq!(t1, t2);
        // padded witness: W′ = W⊕W via inclusion into the first component
        let w_pad = w1.w.direct_sum(&w1.w);
        let jw = j.tensor(&w1.w);
        let jw_pad = j.tensor(&w_pad);
        let field = j.field().clone();
        // J⊗(W⊕W) ≅ (J⊗W)⊕(J⊗W) after a permutation of coordinates
        let mut perm = crate::matrix::Matrix::zeros(&field, jw_pad.dim(), jw.dim());
        let (dj, dw) = (j.dim(), w1.w.dim());
        for a in 0..dj {
            for b in 0..dw {
                perm.set(a * 2 * dw + b, a * dw + b, &field.one());
            }
        }
        let inc = Morphism::new(jw.clone(), jw_pad.clone(), perm).unwrap();
        let mut proj_m = crate::matrix::Matrix::zeros(&field, jw.dim(), jw_pad.dim());
        for a in 0..dj {
            for b in 0..dw {
                proj_m.set(a * dw + b, a * 2 * dw + b, &field.one());
            }
        }
        let proj = Morphism::new(jw_pad, jw, proj_m).unwrap();
        let w2 = RetractWitness {
            w: w_pad,
            alpha: inc.compose(&w1.alpha),
            beta: w1.beta.compose(&proj),
        };
        assert!(w2.beta.compose(&w2.alpha).is_identity());
        let t3 = trace_on_ideal(&j, &v, &Morphism::identity(&v), Some(&w2)).unwrap();
        assert_eq!(t1, t3, "trace must not depend on the retract witness");
    }
}
