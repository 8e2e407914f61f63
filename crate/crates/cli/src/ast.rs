//! Declarations of an input document, as written (polynomials stay strings).
//! The JSON input format is the serde encoding of [`Document`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Row-major matrix of polynomial strings.
pub type Matrix = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleBody {
    /// Cokernel of a matrix; rows index generators, columns relations.
    Coker(Matrix),
    Free(usize),
    /// `R/(gens)`.
    Cyclic(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexBody {
    Koszul(Vec<String>),
    /// `φ_1, φ_2, …` with `φ_i : F_i → F_{i-1}`.
    Maps(Vec<Matrix>),
    /// Minimal resolution of a declared module, optionally truncated.
    Resolution { module: String, cap: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Decl {
    Ring {
        name: String,
        characteristic: u32,
        vars: Vec<String>,
        order: String,
    },
    Quotient {
        name: String,
        parent: String,
        relations: Vec<String>,
        #[serde(default)]
        domain: bool,
    },
    Ideal {
        name: String,
        over: String,
        gens: Vec<String>,
    },
    Module {
        name: String,
        over: String,
        body: ModuleBody,
    },
    Extension {
        name: String,
        base: String,
        adjoin: Vec<String>,
        relations: Vec<String>,
    },
    Sequence {
        name: String,
        over: String,
        elements: Vec<String>,
    },
    Complex {
        name: String,
        over: String,
        body: ComplexBody,
    },
    /// A command stored in the document, run by `run` and `corpus-run`.
    Check {
        verb: String,
        #[serde(default)]
        args: BTreeMap<String, String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<String>,
    },
}

impl Decl {
    pub fn name(&self) -> Option<&str> {
        match self {
            Decl::Ring { name, .. }
            | Decl::Quotient { name, .. }
            | Decl::Ideal { name, .. }
            | Decl::Module { name, .. }
            | Decl::Extension { name, .. }
            | Decl::Sequence { name, .. }
            | Decl::Complex { name, .. } => Some(name),
            Decl::Check { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub declarations: Vec<Decl>,
}

impl Document {
    pub fn checks(&self) -> impl Iterator<Item = (&str, &BTreeMap<String, String>, Option<&str>)> {
        self.declarations.iter().filter_map(|d| match d {
            Decl::Check { verb, args, expect } => Some((verb.as_str(), args, expect.as_deref())),
            _ => None,
        })
    }
}
