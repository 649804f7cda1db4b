use crate::error::{Error, Result};
use crate::field::Field;
use crate::varset::MAX_VARSET;

/// Variable names and coefficient field of `k[x_1, .., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    field: Field,
}

impl RingSpec {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: Field) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::Ring("at least one variable is required".into()));
        }
        if vars.len() > MAX_VARSET {
            return Err(Error::SizeLimit(format!("{} variables (max {MAX_VARSET})", vars.len())));
        }
        for (k, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Ring(format!("invalid variable name {v:?}")));
            }
            if vars[..k].contains(v) {
                return Err(Error::Ring(format!("duplicate variable name {v:?}")));
            }
        }
        Ok(RingSpec { vars, field })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
