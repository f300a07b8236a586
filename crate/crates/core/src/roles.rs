use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Exposure,
    Outcome,
    Adjusted,
    Latent,
}

impl Role {
    pub const ALL: [Role; 4] = [Role::Exposure, Role::Outcome, Role::Adjusted, Role::Latent];

    pub fn keyword(self) -> &'static str {
        match self {
            Role::Exposure => "exposure",
            Role::Outcome => "outcome",
            Role::Adjusted => "adjusted",
            Role::Latent => "latent",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Role> {
        Role::ALL.into_iter().find(|r| r.keyword() == word)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Exposures `X`, outcomes `Y`, adjusted covariates `Z` and latent variables `L`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoleAssignment {
    pub exposure: VertexSet,
    pub outcome: VertexSet,
    pub adjusted: VertexSet,
    pub latent: VertexSet,
}

impl RoleAssignment {
    pub fn set(&self, role: Role) -> &VertexSet {
        match role {
            Role::Exposure => &self.exposure,
            Role::Outcome => &self.outcome,
            Role::Adjusted => &self.adjusted,
            Role::Latent => &self.latent,
        }
    }

    pub fn set_mut(&mut self, role: Role) -> &mut VertexSet {
        match role {
            Role::Exposure => &mut self.exposure,
            Role::Outcome => &mut self.outcome,
            Role::Adjusted => &mut self.adjusted,
            Role::Latent => &mut self.latent,
        }
    }

    pub fn role_of(&self, v: Vertex) -> Option<Role> {
        Role::ALL.into_iter().find(|&r| self.set(r).contains(&v))
    }

    /// Checks that all four sets are pairwise disjoint subsets of `g`'s vertices.
    pub fn validate(&self, g: &MixedGraph) -> Result<()> {
        for role in Role::ALL {
            g.check_vertices(self.set(role).iter().copied())?;
        }
        for (i, a) in Role::ALL.iter().enumerate() {
            for b in &Role::ALL[i + 1..] {
                if let Some(&v) = self.set(*a).intersection(self.set(*b)).next() {
                    return Err(Error::InvalidArgument(format!("`{}` is both {a} and {b}", g.name(v))));
                }
            }
        }
        Ok(())
    }

    /// Exposure and outcome must both be non-empty before any criterion query.
    pub fn require_query(&self) -> Result<()> {
        if self.exposure.is_empty() {
            return Err(Error::InvalidArgument("no exposure variable".into()));
        }
        if self.outcome.is_empty() {
            return Err(Error::InvalidArgument("no outcome variable".into()));
        }
        Ok(())
    }
}

/// Fails unless the given sets are pairwise disjoint.
pub(crate) fn require_disjoint(g: &MixedGraph, sets: &[(&str, &VertexSet)]) -> Result<()> {
    for (name, set) in sets {
        g.check_vertices(set.iter().copied())
            .map_err(|e| Error::InvalidArgument(format!("{name}: {e}")))?;
    }
    for (i, (na, a)) in sets.iter().enumerate() {
        for (nb, b) in &sets[i + 1..] {
            if let Some(&v) = a.intersection(b).next() {
                return Err(Error::InvalidArgument(format!(
                    "`{}` is in both {na} and {nb}",
                    g.name(v)
                )));
            }
        }
    }
    Ok(())
}
