use serde::{Deserialize, Serialize};

use crate::classify::{is_cyclic, is_generalized_quaternion};
use crate::error::{Error, Result};
use crate::forcing::witness::{central_step_witness, ForcingWitness};
use crate::group::{FiniteGroup, Subgroup};

/// Identifies the construction, not the crate release, so certificate
/// digests stay stable across releases.
pub const BUILDER_VERSION: &str = "forcing-lab/greedy-refinement-v1";

/// One index-`p` link `N_i > N_{i+1}` of a forcing sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingStep {
    /// Position of `N_i` in the certificate chain (`chain[0]` is `G`).
    pub index_in_chain: usize,
    /// `[N_i : N_{i+1}]`.
    pub kernel_order: u64,
    /// Witness class in `G/N_i`, indexed by least coset representative.
    pub witness: ForcingWitness,
    /// `|G/N_{i+1}|`.
    pub quotient_order: usize,
    pub quotient_is_quaternion: bool,
}

/// `G > Phi(G) = N_0 > N_1 > ... > N_m = 1` with one step record per link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingCertificate {
    pub group_spec: String,
    /// Sorted element-index sets, `chain[0] = G`, `chain[1] = Phi(G)`.
    pub chain: Vec<Vec<usize>>,
    pub steps: Vec<ForcingStep>,
    pub builder_version: String,
}

impl ForcingCertificate {
    /// `m`, the number of index-`p` links below `Phi(G)`.
    pub fn length(&self) -> usize {
        self.steps.len()
    }
}

/// Per-step number of candidates skipped because their quotient was
/// generalized quaternion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildTrace {
    pub rejected: Vec<usize>,
}

pub fn build_forcing_sequence(g: &FiniteGroup, group_spec: &str) -> Result<ForcingCertificate> {
    build_forcing_sequence_traced(g, group_spec).map(|(cert, _)| cert)
}

/// Refines the lower exponent-p series one index-p step at a time, taking
/// the first candidate (in canonical order) whose quotient is not
/// generalized quaternion, and attaches a central-step witness per link.
pub fn build_forcing_sequence_traced(
    g: &FiniteGroup,
    group_spec: &str,
) -> Result<(ForcingCertificate, BuildTrace)> {
    let p = g.p_group_prime()?;
    if is_cyclic(g) {
        return Err(Error::CyclicGroup { order: g.order() });
    }
    if let Some(n) = is_generalized_quaternion(g) {
        return Err(Error::QuaternionGroup { n });
    }

    let series = g.lower_exponent_p_series()?;
    let mut chain: Vec<Subgroup> = vec![series[0].clone(), series[1].clone()];
    let mut steps = Vec::new();
    let mut trace = BuildTrace::default();

    for layer in series.windows(2).skip(1) {
        let bottom = &layer[1];
        while chain.last().unwrap() != bottom {
            let upper = chain.last().unwrap().clone();
            let position = chain.len() - 1;
            let candidates = g.intermediate_index_p_subgroups(&upper, bottom, p)?;
            let mut rejected = 0;
            let mut accepted = None;
            for s in candidates {
                match forcing_link(g, &upper, &s)? {
                    Some(link) => {
                        accepted = Some((s, link));
                        break;
                    }
                    None => rejected += 1,
                }
            }
            let (s, (witness, quotient_order)) =
                accepted.ok_or(Error::NoForcingCandidate { position })?;
            steps.push(ForcingStep {
                index_in_chain: position,
                kernel_order: p,
                witness,
                quotient_order,
                quotient_is_quaternion: false,
            });
            trace.rejected.push(rejected);
            chain.push(s);
        }
    }

    let cert = ForcingCertificate {
        group_spec: group_spec.to_string(),
        chain: chain.iter().map(|s| s.members().to_vec()).collect(),
        steps,
        builder_version: BUILDER_VERSION.to_string(),
    };
    Ok((cert, trace))
}

/// The link `G/lower -> G/upper`, if `G/lower` is not quaternion and the
/// extension has a central-step witness.
fn forcing_link(
    g: &FiniteGroup,
    upper: &Subgroup,
    lower: &Subgroup,
) -> Result<Option<(ForcingWitness, usize)>> {
    let fine = g.quotient(lower)?;
    if is_generalized_quaternion(fine.target()).is_some() {
        return Ok(None);
    }
    let kernel = fine.image(upper);
    let step = fine.target().quotient(&kernel)?;
    let witness = central_step_witness(&step)?;
    Ok(witness.map(|w| (w, fine.target().order())))
}
