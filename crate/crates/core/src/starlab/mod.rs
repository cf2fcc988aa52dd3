//! Stars and tops of the graph of projective codes.
//!
//! For a (k-1)-dimensional code S the star `[S>` of the projective-code graph
//! is the set of projective k-codes containing S. Each such code is
//! `S + <w>` for a vector w that vanishes on the pivot columns of S; that w
//! is unique up to a nonzero scalar, so the star is read off by walking one
//! w per projective point of the non-pivot coordinates. The set W of all
//! valid w decides maximality through its span: dimension 1 never gives a
//! maximal clique, dimension above 2 always does, and dimension 2 gives a
//! maximal clique exactly when the star coincides with the top of the
//! (k+1)-space `S + <W>`.
//!
//! Two independent routes are kept side by side: closed-form counting and
//! the case tables in [`predicted_star_size`] and [`classify_star`], and the
//! brute-force scan in [`oracle`].

mod census;
mod graph;
pub mod oracle;

pub use census::{census, census_reports, Census, CensusRow, CensusSummary};
pub use graph::{component_count, graph_summary, GraphSummary};
pub use oracle::{is_maximal_clique_oracle, OracleVerdict, ProjectiveCodes};

use serde::Serialize;

use crate::codeprof::is_projective;
use crate::codeprof::{column_profile, columns_projective, puncture_zero, ColumnProfile};
use crate::error::{Error, Result};
use crate::grassmann::{projective_points, q_integer, top_subspaces};
use crate::matfq::{MatFq, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    Empty,
    NotMaximal,
    Star,
}

/// Which branch of the classification produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// A class larger than q, or two or more zero columns.
    Empty,
    Projective,
    NondegenerateTable,
    PuncturedProjective,
    DegenerateTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: Kind,
    pub rule: Rule,
    pub equals_top: bool,
    pub top_witness: Option<Subspace>,
}

/// A projective code of the star together with its extension vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    /// Vanishes on the pivot columns of S; first nonzero entry is 1.
    pub w: Vec<u8>,
    pub code: Subspace,
}

/// Returns k for a star centre `s`, checking 1 < k < n - 1.
fn star_k(s: &Subspace) -> Result<usize> {
    let k = s.dim() + 1;
    let n = s.ambient_dim();
    if !(1 < k && k + 1 < n) {
        return Err(Error::Dimension(format!(
            "star centre of dimension {} in F^{n}: need 1 < k < n - 1 with k = {k}",
            s.dim()
        )));
    }
    Ok(k)
}

/// All projective k-codes containing `s` with their extension vectors, in canonical order.
pub fn star_extensions(s: &Subspace) -> Result<Vec<Extension>> {
    star_k(s)?;
    let n = s.ambient_dim();
    let free: Vec<usize> = (0..n).filter(|c| !s.pivots().contains(c)).collect();
    let mut out = Vec::new();
    for x in projective_points(s.field(), free.len()) {
        let mut w = vec![0u8; n];
        for (&c, &v) in free.iter().zip(&x) {
            w[c] = v;
        }
        let m = s.basis().stack(&MatFq::from_rows(s.field(), &[&w])?)?;
        if columns_projective(&m) {
            out.push(Extension {
                code: Subspace::span(&m),
                w,
            });
        }
    }
    out.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(out)
}

pub fn star_pi(s: &Subspace) -> Result<Vec<Subspace>> {
    Ok(star_extensions(s)?.into_iter().map(|e| e.code).collect())
}

/// Projective k-codes inside the (k+1)-dimensional `u`.
pub fn top_pi(u: &Subspace) -> Result<Vec<Subspace>> {
    if u.dim() < 2 {
        return Err(Error::Dimension("top needs dim u >= 2".into()));
    }
    Ok(top_subspaces(u, u.dim() - 1)?
        .into_iter()
        .filter(is_projective)
        .collect())
}

fn span_rank(exts: &[Extension], s: &Subspace) -> Result<usize> {
    if exts.is_empty() {
        return Ok(0);
    }
    let rows: Vec<&[u8]> = exts.iter().map(|e| e.w.as_slice()).collect();
    Ok(MatFq::from_rows(s.field(), &rows)?.rank())
}

/// Dimension of the span of all extension vectors; 0 for an empty star.
pub fn w_dim(s: &Subspace) -> Result<usize> {
    span_rank(&star_extensions(s)?, s)
}

/// `prod over classes of size l > 1 of (q-1)(q-2)...(q-l+1)`.
fn falling_product(profile: &ColumnProfile, q: u64) -> u64 {
    profile
        .big_l()
        .map(|c| {
            (1..c.size as u64)
                .map(|i| q.saturating_sub(i))
                .product::<u64>()
        })
        .product()
}

/// Closed-form size of the star of `s`.
pub fn predicted_star_size(s: &Subspace) -> Result<u64> {
    let k = star_k(s)?;
    let profile = column_profile(s);
    Ok(predicted_size_from_profile(
        &profile,
        s.field().q() as u64,
        s.ambient_dim(),
        k,
    ))
}

fn predicted_size_from_profile(profile: &ColumnProfile, q: u64, n: usize, k: usize) -> u64 {
    if profile.zero_count >= 2 || profile.max_l() as u64 > q {
        return 0;
    }
    let classes = profile.class_count();
    let projective_rest = profile.max_l() <= 1;
    match (profile.zero_count, projective_rest) {
        (0, true) => q_integer((n - k + 1) as u32, q) as u64,
        (0, false) => falling_product(profile, q) * q.pow((classes + 1 - k) as u32) / (q - 1),
        (_, true) => q.pow((n - k) as u32),
        (_, false) => falling_product(profile, q) * q.pow((classes + 1 - k) as u32),
    }
}

/// Maximality table for a non-degenerate, non-projective centre with all classes of size <= q.
fn nondegenerate_is_star(q: u32, n: usize, k: usize, classes: usize, big_l: usize) -> bool {
    match q {
        2 => (classes == 3 && k == 3 && n == 6) || classes > k,
        3 => (classes + 1 == k && big_l >= 3) || (classes == k && big_l >= 2) || classes > k,
        4 => (classes + 1 == k && k == 2) || (classes + 1 == k && big_l >= 2) || classes >= k,
        _ => true,
    }
}

/// Maximality table for a centre with one zero column whose puncture is not projective.
fn degenerate_is_star(q: u32, n: usize, k: usize, classes: usize, big_l: usize) -> bool {
    match q {
        2 => (classes == 3 && k == 3 && k + 2 < n) || (classes > k && k + 2 < n),
        3 => (classes + 1 == k && k == 2) || (classes + 1 == k && big_l >= 2) || classes >= k,
        _ => true,
    }
}

/// Verdict of the classification tables alone, from the column profile.
pub fn theorem_kind(profile: &ColumnProfile, q: u32, n: usize, k: usize) -> (Kind, Rule) {
    if predicted_size_from_profile(profile, q as u64, n, k) == 0 {
        return (Kind::Empty, Rule::Empty);
    }
    let classes = profile.class_count();
    let big_l = profile.big_l_count();
    let star = |b: bool| if b { Kind::Star } else { Kind::NotMaximal };
    match (profile.zero_count, profile.max_l() <= 1) {
        (0, true) => (Kind::Star, Rule::Projective),
        (0, false) => (
            star(nondegenerate_is_star(q, n, k, classes, big_l)),
            Rule::NondegenerateTable,
        ),
        (_, true) => (Kind::Star, Rule::PuncturedProjective),
        (_, false) => (
            star(degenerate_is_star(q, n, k, classes, big_l)),
            Rule::DegenerateTable,
        ),
    }
}

fn classify_with(s: &Subspace, exts: &[Extension]) -> Result<Classification> {
    let k = star_k(s)?;
    let profile = column_profile(s);
    if profile.zero_count == 1 {
        // The punctured code carries the same classes; checked for consistency.
        debug_assert_eq!(
            column_profile(&puncture_zero(s)?).size_multiset(),
            profile.size_multiset()
        );
    }
    let (kind, rule) = theorem_kind(&profile, s.field().q(), s.ambient_dim(), k);
    let equals_top = kind == Kind::Star && span_rank(exts, s)? == 2;
    let top_witness = if equals_top {
        let rows: Vec<&[u8]> = exts.iter().map(|e| e.w.as_slice()).collect();
        Some(s.sum(&Subspace::span(&MatFq::from_rows(s.field(), &rows)?))?)
    } else {
        None
    };
    Ok(Classification {
        kind,
        rule,
        equals_top,
        top_witness,
    })
}

pub fn classify_star(s: &Subspace) -> Result<Classification> {
    let exts = star_extensions(s)?;
    classify_with(s, &exts)
}

/// Everything known about one star: prediction, enumeration and oracle verdict.
#[derive(Clone, Debug, Serialize)]
pub struct StarReport {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub s: Subspace,
    pub profile: ColumnProfile,
    pub predicted_size: u64,
    pub actual_size: usize,
    pub members: Vec<Subspace>,
    pub extensions: Vec<Vec<u8>>,
    pub w_dim: usize,
    pub kind: Kind,
    pub rule: Rule,
    pub equals_top: bool,
    pub top_witness: Option<Subspace>,
    /// `None` when the star is empty and there is nothing to scan.
    pub oracle_maximal: Option<bool>,
    pub oracle_witness: Option<Subspace>,
    pub agree: bool,
}

impl StarReport {
    /// Builds the report using an already enumerated set of projective codes.
    pub fn build(s: &Subspace, universe: &ProjectiveCodes) -> Result<StarReport> {
        let k = star_k(s)?;
        let exts = star_extensions(s)?;
        let class = classify_with(s, &exts)?;
        let predicted_size = predicted_star_size(s)?;
        let members: Vec<Subspace> = exts.iter().map(|e| e.code.clone()).collect();
        let (oracle_maximal, oracle_witness) = if members.is_empty() {
            (None, None)
        } else {
            let v = universe.verdict(&members)?;
            (Some(v.maximal), v.witness)
        };
        let theorem_agrees = matches!(
            (class.kind, oracle_maximal),
            (Kind::Empty, None) | (Kind::Star, Some(true)) | (Kind::NotMaximal, Some(false))
        );
        Ok(StarReport {
            q: s.field().q(),
            n: s.ambient_dim(),
            k,
            s: s.clone(),
            profile: column_profile(s),
            predicted_size,
            actual_size: members.len(),
            w_dim: span_rank(&exts, s)?,
            extensions: exts.into_iter().map(|e| e.w).collect(),
            agree: theorem_agrees && predicted_size == members.len() as u64,
            members,
            kind: class.kind,
            rule: class.rule,
            equals_top: class.equals_top,
            top_witness: class.top_witness,
            oracle_maximal,
            oracle_witness,
        })
    }
}

/// Full report for a single star centre; enumerates the projective k-codes itself.
pub fn analyze(s: &Subspace, force: bool) -> Result<StarReport> {
    let k = star_k(s)?;
    let universe = ProjectiveCodes::enumerate(s.field(), s.ambient_dim(), k, force)?;
    StarReport::build(s, &universe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::matfq::{parse_matrix, rowspace};

    fn gf(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    fn code(q: u32, text: &str) -> Subspace {
        rowspace(&parse_matrix(text, &gf(q)).unwrap()).unwrap()
    }

    #[test]
    fn dimension_checks() {
        // k = 2 needs n >= 4
        assert!(star_pi(&code(2, "1 1 1")).is_err());
        assert!(star_pi(&code(2, "1 1 1 1")).is_ok());
        // k = 1 is outside the graph range
        assert!(classify_star(&Subspace::zero(&gf(2), 5)).is_err());
        assert!(top_pi(&code(2, "1 1 1 1")).is_err());
    }

    #[test]
    fn q4_line_star() {
        let s = code(4, "1 1 1 1");
        let exts = star_extensions(&s).unwrap();
        let mut ws: Vec<_> = exts.iter().map(|e| e.w.clone()).collect();
        ws.sort();
        assert_eq!(ws, vec![vec![0, 1, 2, 3], vec![0, 1, 3, 2]]);
        assert_eq!(predicted_star_size(&s).unwrap(), 2);
        assert_eq!(w_dim(&s).unwrap(), 2);
        let c = classify_star(&s).unwrap();
        assert_eq!(c.kind, Kind::Star);
        assert!(c.equals_top);
        let u = c.top_witness.unwrap();
        assert_eq!(u.dim(), 3);
        assert!(u.contains(&s).unwrap());
        assert_eq!(top_pi(&u).unwrap(), star_pi(&s).unwrap());
    }

    #[test]
    fn empty_stars() {
        // A class of size 3 over GF(2).
        let s = code(2, "1 0 1 1 0 0; 0 1 0 0 1 1");
        assert_eq!(predicted_star_size(&s).unwrap(), 0);
        assert!(star_pi(&s).unwrap().is_empty());
        assert_eq!(w_dim(&s).unwrap(), 0);
        assert_eq!(classify_star(&s).unwrap().kind, Kind::Empty);
        // Two zero columns.
        let s = code(3, "1 0 1 0 0; 0 1 1 0 0");
        assert_eq!(predicted_star_size(&s).unwrap(), 0);
        assert!(star_pi(&s).unwrap().is_empty());
    }

    #[test]
    fn projective_centre() {
        let s = code(2, "1 0 0 1 1 0; 0 1 0 1 0 1; 0 0 1 0 1 1");
        assert_eq!(predicted_star_size(&s).unwrap(), 7);
        assert_eq!(star_pi(&s).unwrap().len(), 7);
        let c = classify_star(&s).unwrap();
        assert_eq!((c.kind, c.rule), (Kind::Star, Rule::Projective));
    }

    #[test]
    fn table_rows() {
        use Kind::*;
        // q = 2, non-degenerate: l(S) = k = 3 is a star only at n = 6.
        assert!(nondegenerate_is_star(2, 6, 3, 3, 3));
        assert!(!nondegenerate_is_star(2, 5, 3, 3, 2));
        assert!(!nondegenerate_is_star(2, 7, 3, 2, 2));
        assert!(nondegenerate_is_star(2, 8, 4, 5, 1));
        assert!(!nondegenerate_is_star(2, 8, 4, 4, 1));
        // q = 3
        assert!(nondegenerate_is_star(3, 8, 4, 3, 3));
        assert!(!nondegenerate_is_star(3, 8, 4, 3, 2));
        assert!(nondegenerate_is_star(3, 8, 4, 4, 2));
        assert!(!nondegenerate_is_star(3, 8, 4, 4, 1));
        // q = 4
        assert!(nondegenerate_is_star(4, 4, 2, 1, 1));
        assert!(!nondegenerate_is_star(4, 5, 3, 2, 1));
        assert!(nondegenerate_is_star(4, 5, 3, 2, 2));
        assert!(nondegenerate_is_star(4, 5, 3, 3, 1));
        assert!(nondegenerate_is_star(5, 5, 3, 2, 1));
        // degenerate
        assert!(degenerate_is_star(2, 6, 3, 3, 2));
        assert!(!degenerate_is_star(2, 5, 3, 3, 2));
        assert!(!degenerate_is_star(2, 7, 3, 2, 2));
        assert!(degenerate_is_star(3, 4, 2, 1, 1));
        assert!(!degenerate_is_star(3, 5, 3, 2, 1));
        assert!(degenerate_is_star(3, 5, 3, 2, 2));
        assert!(degenerate_is_star(3, 6, 3, 3, 1));
        assert!(degenerate_is_star(4, 5, 3, 2, 1));
        let p = column_profile(&code(4, "1 0 1 1 1; 0 1 0 0 0"));
        assert_eq!(
            theorem_kind(&p, 4, 5, 3),
            (NotMaximal, Rule::NondegenerateTable)
        );
    }
}
