//! Brute-force maximal clique check over all projective k-codes.

use serde::Serialize;

use crate::codeprof::columns_projective;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grassmann::{adjacent, check_guard, gaussian_binomial, Grassmannian};
use crate::matfq::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub maximal: bool,
    /// First projective code, in enumeration order, that extends the clique.
    pub witness: Option<Subspace>,
}

/// Every projective k-code of F_q^n, in enumeration order.
pub struct ProjectiveCodes {
    field: Field,
    n: usize,
    k: usize,
    codes: Vec<Subspace>,
}

impl ProjectiveCodes {
    pub fn enumerate(field: &Field, n: usize, k: usize, force: bool) -> Result<Self> {
        let size = gaussian_binomial(n as i64, k as i64, field.q() as u64)?;
        check_guard(size, force)?;
        let codes = Grassmannian::new(field, n, k)?
            .filter(|c| columns_projective(c.basis()))
            .collect();
        Ok(ProjectiveCodes {
            field: field.clone(),
            n,
            k,
            codes,
        })
    }

    pub fn codes(&self) -> &[Subspace] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    fn validate(&self, members: &[Subspace]) -> Result<()> {
        if members.is_empty() {
            return Err(Error::NotAClique("empty member list".into()));
        }
        for m in members {
            if m.field() != &self.field || m.ambient_dim() != self.n || m.dim() != self.k {
                return Err(Error::NotAClique(format!(
                    "{m:?} is not a {}-code in F^{}",
                    self.k, self.n
                )));
            }
            if !columns_projective(m.basis()) {
                return Err(Error::NotAClique(format!("{m:?} is not projective")));
            }
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if !adjacent(a, b)? {
                    return Err(Error::NotAClique(format!(
                        "{a:?} and {b:?} are not adjacent"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Scans for a projective code outside `members` adjacent to all of them.
    pub fn verdict(&self, members: &[Subspace]) -> Result<OracleVerdict> {
        self.validate(members)?;
        for q in &self.codes {
            if members.contains(q) {
                continue;
            }
            if members.iter().all(|m| adjacent(q, m).unwrap_or(false)) {
                return Ok(OracleVerdict {
                    maximal: false,
                    witness: Some(q.clone()),
                });
            }
        }
        Ok(OracleVerdict {
            maximal: true,
            witness: None,
        })
    }
}

/// Whether `candidate` is a projective code, outside `members`, adjacent to each member.
pub fn extends_clique(members: &[Subspace], candidate: &Subspace) -> bool {
    columns_projective(candidate.basis())
        && !members.contains(candidate)
        && members
            .iter()
            .all(|m| adjacent(candidate, m).unwrap_or(false))
}

/// Oracle on a clique of projective codes, enumerating the code space itself.
pub fn is_maximal_clique_oracle(members: &[Subspace]) -> Result<OracleVerdict> {
    let first = members
        .first()
        .ok_or_else(|| Error::NotAClique("empty member list".into()))?;
    let universe =
        ProjectiveCodes::enumerate(first.field(), first.ambient_dim(), first.dim(), false)?;
    universe.verdict(members)
}
