//! JSON documents for the command line and their conversion into core
//! values. Integers travel as decimal strings so consumers never overflow
//! a fixed-width type; plain JSON numbers are also accepted on input.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use deltastar_core::monoid::{AffineSemigroup, MonoidPresentation};
use deltastar_core::{EquationSystem, Int, IntVector, LatticeBasis};

/// Arbitrary-precision integer serialized as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub Int);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

struct NumVisitor;

impl Visitor<'_> for NumVisitor {
    type Value = Num;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "an integer or a decimal string")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Num, E> {
        Int::from_str(v.trim())
            .map(Num)
            .map_err(|_| E::custom(format!("invalid integer literal {v:?}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Num, E> {
        Ok(Num(Int::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Num, E> {
        Ok(Num(Int::from(v)))
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Num, D::Error> {
        deserializer.deserialize_any(NumVisitor)
    }
}

pub fn to_core_vec(v: &[Num]) -> IntVector {
    v.iter().map(|n| n.0.clone()).collect()
}

pub fn from_core_vec(v: &[Int]) -> Vec<Num> {
    v.iter().map(|x| Num(x.clone())).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CongruenceDoc {
    pub coeffs: Vec<Num>,
    pub modulus: Num,
}

/// The single input format: an affine generator list, or a presentation
/// given either by defining equations or by group generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InputDocument {
    Affine {
        generators: Vec<Vec<Num>>,
    },
    Presentation {
        p: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        congruences: Option<Vec<CongruenceDoc>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        equations: Option<Vec<Vec<Num>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        group_generators: Option<Vec<Vec<Num>>>,
    },
}

/// Structured failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<deltastar_core::Error> for CliError {
    fn from(e: deltastar_core::Error) -> Self {
        use deltastar_core::Error::*;
        let code = match &e {
            NotReduced | NotDivisorClosed => 3,
            Internal(_) => 4,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

pub enum ParsedInput {
    Affine(AffineSemigroup),
    Presentation(MonoidPresentation),
}

pub fn parse_input(doc: &InputDocument) -> Result<ParsedInput, CliError> {
    match doc {
        InputDocument::Affine { generators } => {
            let dim = generators
                .first()
                .map(|g| g.len())
                .ok_or_else(|| CliError::validation("affine input needs at least one generator"))?;
            let gens: Vec<IntVector> = generators.iter().map(|g| to_core_vec(g)).collect();
            Ok(ParsedInput::Affine(AffineSemigroup::new(dim, gens)?))
        }
        InputDocument::Presentation {
            p,
            congruences,
            equations,
            group_generators,
        } => {
            if *p == 0 {
                return Err(CliError::validation("presentation needs p >= 1"));
            }
            let has_equations = congruences.is_some() || equations.is_some();
            match (group_generators, has_equations) {
                (Some(_), true) => Err(CliError::validation(
                    "give either group_generators or congruences/equations, not both",
                )),
                (None, false) => Err(CliError::validation(
                    "presentation needs group_generators or congruences/equations",
                )),
                (Some(gens), false) => {
                    let rows: Vec<IntVector> = gens.iter().map(|g| to_core_vec(g)).collect();
                    Ok(ParsedInput::Presentation(
                        MonoidPresentation::from_group_generators(*p, &rows)?,
                    ))
                }
                (None, true) => {
                    let mut congruence_rows = Vec::new();
                    for c in congruences.iter().flatten() {
                        if c.modulus.0 < Int::from(2) {
                            return Err(CliError::validation(format!(
                                "congruence modulus must be at least 2, got {}",
                                c.modulus.0
                            )));
                        }
                        congruence_rows.push((to_core_vec(&c.coeffs), c.modulus.0.clone()));
                    }
                    let linear: Vec<IntVector> = equations
                        .iter()
                        .flatten()
                        .map(|e| to_core_vec(e))
                        .collect();
                    let sys = EquationSystem::new(*p, congruence_rows, linear)?;
                    Ok(ParsedInput::Presentation(MonoidPresentation::from_equations(
                        sys,
                    )))
                }
            }
        }
    }
}

/// Parses a comma-separated list of 1-based generator indices into the
/// 0-based set used by the library.
pub fn parse_index_set(raw: &str, p: usize) -> Result<BTreeSet<usize>, CliError> {
    let mut out = BTreeSet::new();
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(out);
    }
    for piece in trimmed.split(',') {
        let idx: usize = piece
            .trim()
            .parse()
            .map_err(|_| CliError::validation(format!("invalid index {piece:?}")))?;
        if idx == 0 || idx > p {
            return Err(CliError::validation(format!(
                "index {idx} out of range (1..={p})"
            )));
        }
        out.insert(idx - 1);
    }
    Ok(out)
}

pub fn parse_element(raw: &str) -> Result<IntVector, CliError> {
    raw.trim()
        .split(',')
        .map(|piece| {
            Int::from_str(piece.trim())
                .map_err(|_| CliError::validation(format!("invalid coordinate {piece:?}")))
        })
        .collect()
}

// --------------------------------------------------------------------------
// output side
// --------------------------------------------------------------------------

#[derive(Serialize)]
pub struct FaceDoc {
    pub generator_indices: Vec<usize>,
    pub ray_indices: Vec<usize>,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct FacesDoc {
    pub faces: Vec<FaceDoc>,
    pub hasse_edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
pub struct NodeDoc {
    pub generators: Vec<usize>,
}

#[derive(Serialize)]
pub struct DcLatticeDoc {
    pub nodes: Vec<NodeDoc>,
    pub hasse_edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
pub struct PerSubmonoidDoc {
    pub generators: Vec<usize>,
    pub min_delta: Option<Num>,
}

#[derive(Serialize)]
pub struct DeltaReportDoc {
    pub delta_star: Vec<Num>,
    pub per_submonoid: Vec<PerSubmonoidDoc>,
}

#[derive(Serialize)]
pub struct EquationSystemDoc {
    pub p: usize,
    pub congruences: Vec<CongruenceDoc>,
    pub equations: Vec<Vec<Num>>,
}

#[derive(Serialize)]
pub struct FactorizationsDoc {
    pub factorizations: Vec<Vec<Num>>,
    pub lengths: Vec<Num>,
    pub delta: Vec<Num>,
}

/// Echo of the input followed by the requested results; absent fields are
/// omitted so each command has a stable, deterministic shape.
#[derive(Serialize)]
pub struct OutputDocument {
    pub input: InputDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub submonoid: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<Vec<Num>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicial: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<Num>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<Num>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<FacesDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dc_lattice: Option<DcLatticeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_report: Option<DeltaReportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_delta: Option<Option<Num>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor_closed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equation_system: Option<EquationSystemDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_generators: Option<Vec<Vec<Num>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorizations: Option<FactorizationsDoc>,
}

impl OutputDocument {
    pub fn new(input: InputDocument) -> Self {
        OutputDocument {
            input,
            submonoid: None,
            element: None,
            dim: None,
            simplicial: None,
            rays: None,
            facets: None,
            faces: None,
            dc_lattice: None,
            delta_report: None,
            min_delta: None,
            divisor_closed: None,
            equation_system: None,
            group_generators: None,
            factorizations: None,
        }
    }
}

pub fn equation_system_doc(sys: &EquationSystem) -> EquationSystemDoc {
    EquationSystemDoc {
        p: sys.ambient_dim(),
        congruences: sys
            .congruences()
            .iter()
            .map(|c| CongruenceDoc {
                coeffs: from_core_vec(&c.coeffs),
                modulus: Num(c.modulus.clone()),
            })
            .collect(),
        equations: sys
            .linear_equations()
            .iter()
            .map(|e| from_core_vec(e))
            .collect(),
    }
}

pub fn lattice_doc(basis: &LatticeBasis) -> Vec<Vec<Num>> {
    basis.basis().iter().map(|r| from_core_vec(r)).collect()
}

/// 1-based, sorted copy of an index set.
pub fn one_based(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().map(|&i| i + 1).collect()
}
