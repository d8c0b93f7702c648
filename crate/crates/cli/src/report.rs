//! JSON reports. Keys are emitted in sorted order (serde_json's default map
//! is ordered), so output is byte-stable for a fixed input.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use moufang_core::decomp::Decomposition;
use moufang_core::suite::PropertyReport;
use moufang_core::{IdentityReport, Magma};

use crate::table::write_table;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityEntry {
    pub formula: &'static str,
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl From<&IdentityReport> for IdentityEntry {
    fn from(r: &IdentityReport) -> Self {
        IdentityEntry {
            formula: r.kind.formula(),
            holds: r.holds(),
            counterexample: r
                .counterexample
                .as_ref()
                .map(|t| t.iter().map(|e| e.index()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentEntry {
    pub index: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub min: usize,
    pub idempotents: Vec<usize>,
    pub closed: bool,
    pub archimedean: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagsEntry {
    pub input_commutative: bool,
    pub input_moufang: bool,
    pub sigma_is_congruence: bool,
    pub quotient_is_semilattice: bool,
    pub components_archimedean: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionEntry {
    pub mode: &'static str,
    pub certified: bool,
    pub sigma_is_equivalence: bool,
    pub component_count: usize,
    pub sizes: Vec<usize>,
    pub components: Vec<ComponentEntry>,
    pub quotient: Option<Vec<Vec<usize>>>,
    pub flags: FlagsEntry,
}

impl DecompositionEntry {
    pub fn new(d: &Decomposition, explorative: bool) -> Self {
        let f = d.flags;
        DecompositionEntry {
            mode: if explorative {
                "explorative"
            } else {
                "certified"
            },
            certified: f.all(),
            sigma_is_equivalence: d.sigma_is_equivalence,
            component_count: d.components.len(),
            sizes: d.components.iter().map(|c| c.members.len()).collect(),
            components: d
                .components
                .iter()
                .enumerate()
                .map(|(index, c)| ComponentEntry {
                    index,
                    members: c.members.iter().map(|e| e.index()).collect(),
                    size: c.members.len(),
                    min: c.members[0].index(),
                    idempotents: c.idempotents.iter().map(|e| e.index()).collect(),
                    closed: c.submagma.is_some(),
                    archimedean: c.archimedean,
                })
                .collect(),
            quotient: d.quotient.as_ref().map(Magma::rows),
            flags: FlagsEntry {
                input_commutative: f.input_commutative,
                input_moufang: f.input_moufang,
                sigma_is_congruence: f.sigma_is_congruence,
                quotient_is_semilattice: f.quotient_is_semilattice,
                components_archimedean: f.components_archimedean,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyEntry {
    pub holds: bool,
    pub instances: usize,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub input_digest: String,
    pub order: usize,
    pub identities: std::collections::BTreeMap<&'static str, IdentityEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<std::collections::BTreeMap<&'static str, PropertyEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nmax: Option<u32>,
}

/// SHA-256 of the canonical table text.
pub fn input_digest(magma: &Magma) -> String {
    let hash = Sha256::digest(write_table(magma).as_bytes());
    format!("sha256:{}", hex::encode(hash))
}

impl Report {
    pub fn new(magma: &Magma, identities: &[IdentityReport]) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            input_digest: input_digest(magma),
            order: magma.order(),
            identities: identities
                .iter()
                .map(|r| (r.kind.name(), IdentityEntry::from(r)))
                .collect(),
            decomposition: None,
            properties: None,
            nmax: None,
        }
    }

    pub fn with_properties(mut self, props: &PropertyReport) -> Self {
        self.nmax = Some(props.nmax);
        self.properties = Some(
            props
                .checks
                .iter()
                .map(|c| {
                    (
                        c.name,
                        PropertyEntry {
                            holds: c.holds(),
                            instances: c.instances,
                            witness: c.witness.clone(),
                        },
                    )
                })
                .collect(),
        );
        self
    }

    /// Pretty-printed JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value: Value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }
}
