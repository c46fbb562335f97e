//! Infinite-order and rank-2 witnesses.
//!
//! Every witness is exact data that can be recomputed from the elements it
//! talks about; nothing here samples or approximates.

use serde::{Deserialize, Serialize};

use crate::engine::{commutes, power, relation_search, Group, GroupElement};
use crate::error::{Error, Result};
use crate::matrix::{linearly_independent, unipotent_log, IntMatrix};

/// Bound used for the `relation_search` cross-check recorded with each
/// rank-2 witness.
pub const SANITY_BOUND: u32 = 5;

/// Homomorphisms through which a witness may be transported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Homomorphism {
    /// Aut(F_n) -> GL(n, Z), exponent sums of the basis images as columns.
    Abelianization,
    /// F_n -> Z^n -> unipotent (n+1)x(n+1) matrices, exponent vector in the
    /// last column.
    WordAbelianization,
    /// F -> Z^2, base-2 logarithms of the slopes at 0 and 1.
    SlopeExponents,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "strategy", content = "payload", rename_all = "kebab-case")]
pub enum InfiniteOrderWitness {
    /// A unipotent matrix other than `I`: `(m - I)` nilpotent and nonzero.
    NontrivialUnipotent { matrix: Vec<Vec<String>> },
    /// The image under `homomorphism` is a nontrivial unipotent.
    UnipotentHomomorphicImage { homomorphism: Homomorphism, image: Vec<Vec<String>> },
    /// Any nonidentity element of the torsion-free group F.
    ThompsonNonidentity { breakpoints: Vec<String>, values: Vec<String> },
}

impl InfiniteOrderWitness {
    pub fn strategy_name(&self) -> &'static str {
        match self {
            InfiniteOrderWitness::NontrivialUnipotent { .. } => "nontrivial-unipotent",
            InfiniteOrderWitness::UnipotentHomomorphicImage { .. } => "unipotent-homomorphic-image",
            InfiniteOrderWitness::ThompsonNonidentity { .. } => "thompson-nonidentity",
        }
    }
}

fn word_image(w: &crate::autfree::Word) -> IntMatrix {
    let n = w.rank();
    let mut entries = IntMatrix::identity(n + 1).entries().to_vec();
    for (i, s) in w.exponent_sums().into_iter().enumerate() {
        entries[i * (n + 1) + n] = s.into();
    }
    IntMatrix::new(n + 1, entries).expect("unitriangular")
}

fn nontrivial_unipotent(m: &IntMatrix) -> bool {
    !m.is_identity() && m.is_unipotent()
}

/// The strongest applicable infinite-order witness for `g`.
pub fn infinite_order_witness(g: &GroupElement) -> Result<InfiniteOrderWitness> {
    if g.is_identity() {
        return Err(Error::InvalidParameter("the identity has finite order".into()));
    }
    match g {
        GroupElement::Matrix(m) => {
            if nontrivial_unipotent(m) {
                Ok(InfiniteOrderWitness::NontrivialUnipotent { matrix: m.rows_as_strings() })
            } else {
                Err(Error::StrategyInapplicable(format!("{m} is not unipotent")))
            }
        }
        GroupElement::Automorphism(f) => {
            let image = f.abelianization().matrix;
            if nontrivial_unipotent(&image) {
                Ok(InfiniteOrderWitness::UnipotentHomomorphicImage {
                    homomorphism: Homomorphism::Abelianization,
                    image: image.rows_as_strings(),
                })
            } else {
                Err(Error::StrategyInapplicable(format!("abelianization {image} is not a nontrivial unipotent")))
            }
        }
        GroupElement::Word(w) => {
            let image = word_image(w);
            if nontrivial_unipotent(&image) {
                Ok(InfiniteOrderWitness::UnipotentHomomorphicImage {
                    homomorphism: Homomorphism::WordAbelianization,
                    image: image.rows_as_strings(),
                })
            } else {
                Err(Error::StrategyInapplicable(format!("word {w} has zero exponent sums")))
            }
        }
        GroupElement::Thompson(p) => Ok(InfiniteOrderWitness::ThompsonNonidentity {
            breakpoints: p.breakpoints().iter().map(|d| d.to_string()).collect(),
            values: p.values().iter().map(|d| d.to_string()).collect(),
        }),
    }
}

/// Re-derives the witness for `g` and checks it against `claimed`.
pub fn check_infinite_order(g: &GroupElement, claimed: &InfiniteOrderWitness) -> std::result::Result<(), String> {
    let fresh = infinite_order_witness(g).map_err(|e| e.to_string())?;
    if &fresh != claimed {
        return Err(format!("claimed {} witness does not match the element", claimed.strategy_name()));
    }
    // the payload itself must satisfy the strategy's soundness condition
    let sound = match claimed {
        InfiniteOrderWitness::NontrivialUnipotent { matrix } => {
            IntMatrix::from_string_rows(matrix).map(|m| nontrivial_unipotent(&m)).unwrap_or(false)
        }
        InfiniteOrderWitness::UnipotentHomomorphicImage { image, .. } => {
            IntMatrix::from_string_rows(image).map(|m| nontrivial_unipotent(&m)).unwrap_or(false)
        }
        InfiniteOrderWitness::ThompsonNonidentity { breakpoints, .. } => breakpoints.len() > 2,
    };
    if sound {
        Ok(())
    } else {
        Err("witness payload fails its soundness condition".into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "homomorphism", rename_all = "kebab-case")]
pub enum ImageWitness {
    /// Abelianized powers; their logs are independent over Q.
    Abelianization { images: [Vec<Vec<String>>; 2], logs: [Vec<Vec<String>>; 2] },
    /// Slope-exponent vectors in Z^2 with nonzero determinant.
    SlopeExponents { vectors: [[i64; 2]; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "strategy", content = "payload", rename_all = "kebab-case")]
pub enum Rank2Witness {
    /// Both powers are unipotent and their logarithms are independent over Q.
    CommutingUnipotentLogs { logs: [Vec<Vec<String>>; 2] },
    /// A homomorphic image of the commuting pair is free abelian of rank 2.
    HomomorphicImage(ImageWitness),
}

impl Rank2Witness {
    pub fn strategy_name(&self) -> &'static str {
        match self {
            Rank2Witness::CommutingUnipotentLogs { .. } => "commuting-unipotent-logs",
            Rank2Witness::HomomorphicImage(_) => "homomorphic-image",
        }
    }

    /// The one-line argument a reader needs to accept the witness.
    pub fn justification(&self) -> &'static str {
        match self {
            Rank2Witness::CommutingUnipotentLogs { .. } => {
                "for commuting unipotents, m1^p m2^q = I iff p log m1 + q log m2 = 0, so independent logs give Z^2"
            }
            Rank2Witness::HomomorphicImage(_) => {
                "a 2-generated abelian group with a free abelian quotient of rank 2 is itself free abelian of rank 2"
            }
        }
    }
}

/// Rank-2 witness for `<s^n_s, t^n_t>`.
pub fn rank2_witness(s: &GroupElement, t: &GroupElement, powers: (i64, i64)) -> Result<Rank2Witness> {
    let (n_s, n_t) = powers;
    if n_s == 0 || n_t == 0 {
        return Err(Error::InvalidParameter("rank-2 powers must be nonzero".into()));
    }
    let ps = power(s, n_s);
    let pt = power(t, n_t);
    if !commutes(&ps, &pt)? {
        return Err(Error::NonCommuting(format!("powers ({n_s}, {n_t}) do not commute")));
    }
    match (&ps, &pt) {
        (GroupElement::Matrix(a), GroupElement::Matrix(b)) => {
            let logs = independent_unipotent_logs(a, b)?;
            Ok(Rank2Witness::CommutingUnipotentLogs { logs })
        }
        (GroupElement::Automorphism(f), GroupElement::Automorphism(g)) => {
            let a = f.abelianization().matrix;
            let b = g.abelianization().matrix;
            let logs = independent_unipotent_logs(&a, &b)?;
            Ok(Rank2Witness::HomomorphicImage(ImageWitness::Abelianization {
                images: [a.rows_as_strings(), b.rows_as_strings()],
                logs,
            }))
        }
        (GroupElement::Thompson(f), GroupElement::Thompson(g)) => {
            let (u, v) = (f.slope_hom(), g.slope_hom());
            if u.0 * v.1 - u.1 * v.0 == 0 {
                return Err(Error::StrategyInapplicable(format!("slope vectors {u:?} and {v:?} are dependent")));
            }
            Ok(Rank2Witness::HomomorphicImage(ImageWitness::SlopeExponents { vectors: [[u.0, u.1], [v.0, v.1]] }))
        }
        (GroupElement::Word(_), GroupElement::Word(_)) => {
            Err(Error::StrategyInapplicable("commuting elements of a free group generate a cyclic group".into()))
        }
        _ => Err(Error::MixedEngines { left: s.engine(), right: t.engine() }),
    }
}

fn independent_unipotent_logs(a: &IntMatrix, b: &IntMatrix) -> Result<[Vec<Vec<String>>; 2]> {
    let la = unipotent_log(a).map_err(|e| Error::StrategyInapplicable(e.to_string()))?;
    let lb = unipotent_log(b).map_err(|e| Error::StrategyInapplicable(e.to_string()))?;
    if !linearly_independent(&la, &lb) {
        return Err(Error::StrategyInapplicable("logarithms are linearly dependent".into()));
    }
    Ok([la.rows_as_strings(), lb.rows_as_strings()])
}

/// Number of relations `relation_search` finds for the powered pair.
pub fn sanity_relations(s: &GroupElement, t: &GroupElement, powers: (i64, i64)) -> Result<usize> {
    Ok(relation_search(&power(s, powers.0), &power(t, powers.1), SANITY_BOUND)?.len())
}
