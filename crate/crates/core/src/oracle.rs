//! Decides whether an element acts nilpotently in every representation.
//!
//! An element `a` of `g` acts nilpotently in all representations exactly
//! when `a ∈ [g, g]` and the image of `a` in `g / rad g` is a nilpotent
//! element of that semisimple quotient. A negative answer comes with a
//! witness representation; [`cross_validate`] checks positive answers
//! against a finite, deterministically enumerated corpus.

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ensure_len, Error, Result};
use crate::exactlinalg::{dot, Scalar, Subspace};
use crate::liecore::{Element, LieAlgebra, QuotientMap};
use crate::reps::{
    acts_nilpotently, adjoint_rep, direct_sum, dual, one_dim_rep, pullback, tensor, validate_rep,
    Representation,
};
use crate::semisimple::{is_nilpotent_element_image, radical};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub answer: bool,
    pub in_derived: bool,
    pub image_nilpotent: bool,
    pub radical_dim: usize,
    pub derived_dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCase {
    /// One-dimensional representation through `g / [g, g]`.
    DerivedCharacter,
    /// Adjoint representation of `g / rad g`, pulled back to `g`.
    AdjointPullback,
}

impl WitnessCase {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::DerivedCharacter => "derived_character",
            Self::AdjointPullback => "adjoint_pullback",
        }
    }
}

/// A representation in which the queried element acts non-nilpotently.
#[derive(Clone, Debug)]
pub struct Witness {
    pub rep: Representation,
    pub case: WitnessCase,
    /// Exponent `k` for which `ρ(a)^k ≠ 0` was confirmed (the dimension).
    pub exponent_checked: usize,
}

/// Derived algebra, radical and the radical quotient of an algebra.
struct Structure {
    derived: Subspace,
    radical: Subspace,
    quotient: QuotientMap,
}

impl Structure {
    fn of(l: &LieAlgebra) -> Result<Self> {
        let radical = radical(l)?;
        Ok(Self {
            derived: l.derived_algebra(),
            quotient: l.quotient(&radical)?,
            radical,
        })
    }

    fn verdict(&self, a: &Element) -> Result<Verdict> {
        let in_derived = self.derived.contains(a.coords())?;
        let target = self.quotient.target();
        let image_nilpotent = if target.dim() == 0 {
            true
        } else {
            is_nilpotent_element_image(target, &self.quotient.apply(a)?)?
        };
        Ok(Verdict {
            answer: in_derived && image_nilpotent,
            in_derived,
            image_nilpotent,
            radical_dim: self.radical.dim(),
            derived_dim: self.derived.dim(),
        })
    }

    /// Characters `g → g/[g,g] → Q` for each complement coordinate of the
    /// derived algebra, as (basis index, functional).
    fn characters(&self, l: &LieAlgebra) -> Result<Vec<(usize, Vec<Scalar>)>> {
        let q = l.quotient(&self.derived)?;
        Ok(self
            .derived
            .complement_axes()
            .into_iter()
            .enumerate()
            .map(|(r, axis)| (axis, q.matrix().row(r).to_vec()))
            .collect())
    }

    fn adjoint_pullback(&self, shared: &Arc<LieAlgebra>) -> Result<Representation> {
        let target = Arc::new(self.quotient.target().clone());
        let pulled = pullback(&adjoint_rep(&target), &self.quotient)?;
        rebase(&pulled, shared, "pullback(adjoint(g/rad))")
    }
}

fn rebase(rho: &Representation, shared: &Arc<LieAlgebra>, label: &str) -> Result<Representation> {
    if rho.algebra().as_ref() != shared.as_ref() {
        return Err(Error::AlgebraMismatch);
    }
    Representation::new(shared.clone(), rho.dim(), rho.matrices().to_vec(), label)
}

fn character_label(l: &LieAlgebra, axis: usize) -> String {
    format!("character({})", l.names()[axis])
}

pub fn nilpotent_in_all_reps(l: &LieAlgebra, a: &Element) -> Result<Verdict> {
    ensure_len(l.dim(), a.dim())?;
    Structure::of(l)?.verdict(a)
}

fn witness_with(l: &LieAlgebra, s: &Structure, a: &Element, v: &Verdict) -> Result<Witness> {
    if v.answer {
        return Err(Error::NoWitness);
    }
    let shared = Arc::new(l.clone());
    let (rep, case) = if !v.in_derived {
        // smallest complement coordinate on which a has a nonzero component
        let (axis, xi) = s
            .characters(l)?
            .into_iter()
            .find(|(_, xi)| !dot(xi, a.coords()).is_zero())
            .ok_or_else(|| {
                Error::Internal("no character separates the element from [g,g]".into())
            })?;
        let rep = one_dim_rep(&shared, &xi)?.with_label(character_label(l, axis));
        (rep, WitnessCase::DerivedCharacter)
    } else {
        (s.adjoint_pullback(&shared)?, WitnessCase::AdjointPullback)
    };
    if !validate_rep(&rep).is_empty() {
        return Err(Error::Internal("witness is not a representation".into()));
    }
    if acts_nilpotently(&rep, a)? {
        return Err(Error::Internal("witness action is nilpotent".into()));
    }
    Ok(Witness {
        exponent_checked: rep.dim(),
        rep,
        case,
    })
}

/// A representation certifying a negative verdict.
pub fn find_witness(l: &LieAlgebra, a: &Element) -> Result<Witness> {
    ensure_len(l.dim(), a.dim())?;
    let s = Structure::of(l)?;
    let v = s.verdict(a)?;
    witness_with(l, &s, a, &v)
}

#[derive(Clone, Debug)]
pub struct CrossOptions {
    pub depth: usize,
    pub max_dim: usize,
    /// Extra seeds known to be irreducible representations of the algebra.
    pub irreducibles: Vec<Representation>,
}

impl Default for CrossOptions {
    fn default() -> Self {
        Self {
            depth: 2,
            max_dim: 128,
            irreducibles: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusOutcome {
    pub label: String,
    pub dim: usize,
    pub nilpotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessOutcome {
    pub case: WitnessCase,
    pub label: String,
    pub dim: usize,
    pub nilpotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub verdict: Verdict,
    pub depth: usize,
    pub max_dim: usize,
    pub outcomes: Vec<CorpusOutcome>,
    pub witness: Option<WitnessOutcome>,
    pub consistent: bool,
}

#[derive(Clone, Copy)]
enum Construction {
    Sum(usize, usize),
    Dual(usize),
    Tensor(usize, usize),
}

struct Member {
    rep: Representation,
    is_dual: bool,
}

/// Seed representations in their fixed order: adjoint, adjoint of the
/// radical quotient pulled back, the supplied irreducibles, then one
/// character per complement coordinate of `[g, g]`. Exact duplicates are
/// dropped, keeping the first occurrence.
pub fn corpus_seeds(
    l: &LieAlgebra,
    irreducibles: &[Representation],
) -> Result<Vec<Representation>> {
    let s = Structure::of(l)?;
    seeds_with(l, &s, irreducibles)
}

fn seeds_with(
    l: &LieAlgebra,
    s: &Structure,
    irreducibles: &[Representation],
) -> Result<Vec<Representation>> {
    let shared = Arc::new(l.clone());
    let mut candidates = vec![adjoint_rep(&shared), s.adjoint_pullback(&shared)?];
    for rho in irreducibles {
        candidates.push(rebase(rho, &shared, rho.label())?);
    }
    for (axis, xi) in s.characters(l)? {
        candidates.push(one_dim_rep(&shared, &xi)?.with_label(character_label(l, axis)));
    }
    let mut seeds: Vec<Representation> = Vec::new();
    for c in candidates {
        if !seeds.contains(&c) {
            seeds.push(c);
        }
    }
    Ok(seeds)
}

/// Checks the verdict for `a` against a corpus of representations.
///
/// The corpus starts from [`corpus_seeds`] (those of dimension at most
/// `max_dim`). Each further level, up to `depth`, applies in order
/// `direct_sum(m, s)` over members `m` of the previous level and seeds `s`,
/// `dual(m)` for members that are not themselves duals, and
/// `tensor(m, s)`; results above `max_dim` are skipped before they are
/// built. The report lists every member in that order. It is consistent
/// when a positive verdict sees only nilpotent actions and a negative
/// verdict has a witness with a non-nilpotent action.
pub fn cross_validate(l: &LieAlgebra, a: &Element, opts: &CrossOptions) -> Result<CrossReport> {
    ensure_len(l.dim(), a.dim())?;
    let s = Structure::of(l)?;
    let verdict = s.verdict(a)?;
    let seeds: Vec<Representation> = seeds_with(l, &s, &opts.irreducibles)?
        .into_iter()
        .filter(|r| r.dim() <= opts.max_dim)
        .collect();

    let evaluate = |rep: &Representation| -> Result<CorpusOutcome> {
        Ok(CorpusOutcome {
            label: rep.label().to_string(),
            dim: rep.dim(),
            nilpotent: acts_nilpotently(rep, a)?,
        })
    };

    let mut outcomes = seeds.par_iter().map(evaluate).collect::<Result<Vec<_>>>()?;
    let mut frontier: Vec<Member> = seeds
        .iter()
        .map(|r| Member {
            rep: r.clone(),
            is_dual: false,
        })
        .collect();

    for level in 1..=opts.depth {
        let keep = level < opts.depth;
        let mut plan = Vec::new();
        for (i, m) in frontier.iter().enumerate() {
            for (j, s) in seeds.iter().enumerate() {
                if m.rep.dim() + s.dim() <= opts.max_dim {
                    plan.push(Construction::Sum(i, j));
                }
            }
        }
        for (i, m) in frontier.iter().enumerate() {
            if !m.is_dual {
                plan.push(Construction::Dual(i));
            }
        }
        for (i, m) in frontier.iter().enumerate() {
            for (j, s) in seeds.iter().enumerate() {
                if m.rep.dim() * s.dim() <= opts.max_dim {
                    plan.push(Construction::Tensor(i, j));
                }
            }
        }
        let built = plan
            .par_iter()
            .map(|c| -> Result<(Option<Member>, CorpusOutcome)> {
                let member = match *c {
                    Construction::Sum(i, j) => Member {
                        rep: direct_sum(&frontier[i].rep, &seeds[j])?,
                        is_dual: false,
                    },
                    Construction::Dual(i) => Member {
                        rep: dual(&frontier[i].rep),
                        is_dual: true,
                    },
                    Construction::Tensor(i, j) => Member {
                        rep: tensor(&frontier[i].rep, &seeds[j])?,
                        is_dual: false,
                    },
                };
                let outcome = evaluate(&member.rep)?;
                Ok((keep.then_some(member), outcome))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for (member, outcome) in built {
            outcomes.push(outcome);
            next.extend(member);
        }
        frontier = next;
    }

    let witness = if verdict.answer {
        None
    } else {
        let w = witness_with(l, &s, a, &verdict)?;
        Some(WitnessOutcome {
            case: w.case,
            label: w.rep.label().to_string(),
            dim: w.rep.dim(),
            nilpotent: acts_nilpotently(&w.rep, a)?,
        })
    };
    let consistent = if verdict.answer {
        outcomes.iter().all(|o| o.nilpotent)
    } else {
        witness.as_ref().is_some_and(|w| !w.nilpotent)
    };
    Ok(CrossReport {
        verdict,
        depth: opts.depth,
        max_dim: opts.max_dim,
        outcomes,
        witness,
        consistent,
    })
}
