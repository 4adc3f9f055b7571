//! TOML spec files describing a Krull monoid by its class data.
//!
//! ```toml
//! classes = [[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [-1, -1]]
//! mult = [1, 1, 1, 1, 1, 1]          # optional; "inf" allowed
//! labels = ["e1", "-e1", "e2", "-e2", "f", "-f"]   # optional
//!
//! [group]
//! free_rank = 2
//! torsion = []
//! ```
//!
//! Coordinates list the free part first, then one entry per torsion order;
//! torsion coordinates are reduced on load.

use serde::{Deserialize, Serialize};

use strong_atoms::krull::{KrullSpec, Multiplicity};
use strong_atoms::zsm::{ClassSet, Sequence};
use strong_atoms::{Group, Int, Spec};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub classes: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<MultEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub group: GroupSection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    #[serde(default)]
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultEntry {
    Count(u32),
    Word(String),
}

/// A validated spec with one display label per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedSpec {
    pub spec: Spec,
    pub labels: Vec<String>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| input(format!("spec file: {e}")))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec files serialize")
    }

    pub fn load(&self) -> Result<LoadedSpec, CliError> {
        let torsion: Vec<Int> = self.group.torsion.iter().map(|&d| Int::from(d)).collect();
        let group = Group::new(self.group.free_rank, torsion).map_err(|e| input(format!("[group]: {e}")))?;
        let width = group.coord_len();
        let mut classes = Vec::with_capacity(self.classes.len());
        for (i, c) in self.classes.iter().enumerate() {
            if c.len() != width {
                return Err(input(format!("classes[{i}]: expected {width} coordinates, found {}", c.len())));
            }
            classes.push(group.element_i64(c).map_err(|e| input(format!("classes[{i}]: {e}")))?);
        }
        for i in 0..classes.len() {
            if let Some(j) = (0..i).find(|&j| classes[j] == classes[i]) {
                return Err(input(format!("classes[{i}]: duplicates classes[{j}] after reduction")));
            }
        }
        let n = classes.len();
        let cs = ClassSet::new(group, classes).map_err(|e| input(format!("classes: {e}")))?;
        let mult = match &self.mult {
            None => vec![Multiplicity::Finite(1); n],
            Some(entries) => {
                if entries.len() != n {
                    return Err(input(format!("mult: expected {n} entries, found {}", entries.len())));
                }
                entries
                    .iter()
                    .enumerate()
                    .map(|(i, e)| match e {
                        MultEntry::Count(0) => Err(input(format!("mult[{i}]: must be at least 1"))),
                        MultEntry::Count(k) => Ok(Multiplicity::Finite(*k)),
                        MultEntry::Word(w) if w == "inf" => Ok(Multiplicity::Infinite),
                        MultEntry::Word(w) => Err(input(format!("mult[{i}]: expected a count or \"inf\", found {w:?}"))),
                    })
                    .collect::<Result<_, _>>()?
            }
        };
        let labels = match &self.labels {
            None => cs.classes().iter().map(ToString::to_string).collect(),
            Some(l) if l.len() != n => {
                return Err(input(format!("labels: expected {n} entries, found {}", l.len())));
            }
            Some(l) => {
                for i in 0..n {
                    if l[..i].contains(&l[i]) {
                        return Err(input(format!("labels[{i}]: duplicate label {:?}", l[i])));
                    }
                }
                l.clone()
            }
        };
        let spec = KrullSpec::new(cs, mult).map_err(|e| input(e.to_string()))?;
        Ok(LoadedSpec { spec, labels })
    }

    /// The file describing `loaded`, with reduced coordinates.
    pub fn from_loaded(loaded: &LoadedSpec) -> Self {
        let g = loaded.spec.group();
        let coord = |x: &Int| i64::try_from(x).expect("coordinates fit i64");
        let mult = loaded
            .spec
            .mult()
            .iter()
            .map(|m| match m {
                Multiplicity::Finite(k) => MultEntry::Count(*k),
                Multiplicity::Infinite => MultEntry::Word("inf".into()),
            })
            .collect();
        SpecFile {
            classes: loaded
                .spec
                .class_set()
                .classes()
                .iter()
                .map(|c| c.coords().iter().map(coord).collect())
                .collect(),
            mult: Some(mult),
            labels: Some(loaded.labels.clone()),
            group: GroupSection {
                free_rank: g.free_rank(),
                torsion: g.torsion().iter().map(coord).collect(),
            },
        }
    }
}

impl LoadedSpec {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        SpecFile::parse(text)?.load()
    }

    pub fn class_set(&self) -> &ClassSet<Int> {
        self.spec.class_set()
    }

    /// `e1^2*f` style rendering with the spec's labels.
    pub fn render(&self, s: &Sequence) -> String {
        render_with(&self.labels, s)
    }

    /// Either a product of labels with optional powers (`e1*e2^2*-f`) or a
    /// comma-separated exponent list (`1,0,2`). Labels win when both readings
    /// parse.
    pub fn parse_sequence(&self, text: &str) -> Result<Sequence, CliError> {
        let text = text.trim();
        let n = self.labels.len();
        let exps = match self.parse_product(text) {
            Ok(exps) => exps,
            Err(e) if text.is_empty() || !text.chars().all(|c| c.is_ascii_digit() || c == ',' || c == ' ') => {
                return Err(e);
            }
            Err(_) => text
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| input(format!("sequence: bad exponent {t:?}"))))
                .collect::<Result<Vec<u32>, _>>()?,
        };
        if exps.len() != n {
            return Err(input(format!("sequence: expected {n} exponents, found {}", exps.len())));
        }
        Ok(self.class_set().sequence(exps)?)
    }

    fn parse_product(&self, text: &str) -> Result<Vec<u32>, CliError> {
        let mut exps = vec![0u32; self.labels.len()];
        for token in text.split('*').map(str::trim) {
            let (name, power) = match token.rsplit_once('^') {
                Some((name, p)) => {
                    let p = p.parse::<u32>().map_err(|_| input(format!("sequence: bad power in {token:?}")))?;
                    (name, p)
                }
                None => (token, 1),
            };
            let i = self
                .labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| input(format!("sequence: unknown class {name:?}")))?;
            exps[i] += power;
        }
        Ok(exps)
    }
}

pub fn render_with(labels: &[String], s: &Sequence) -> String {
    if s.is_empty() {
        return "1".into();
    }
    s.support()
        .into_iter()
        .map(|i| match s.exponent(i) {
            1 => labels[i].clone(),
            e => format!("{}^{e}", labels[i]),
        })
        .collect::<Vec<_>>()
        .join("*")
}
