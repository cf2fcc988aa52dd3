//! Exhaustive sweep over every star centre of one parameter set.

use rayon::prelude::*;
use serde::Serialize;

use super::{Kind, ProjectiveCodes, StarReport};
use crate::error::{Error, Result};
use crate::grassmann::{check_guard, GrassmannParams, Grassmannian};
use crate::matfq::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub s: Subspace,
    pub c: usize,
    pub class_sizes: Vec<usize>,
    pub l_s: usize,
    #[serde(rename = "L_size")]
    pub big_l: usize,
    pub predicted_size: u64,
    pub actual_size: usize,
    pub w_dim: usize,
    pub kind: Kind,
    pub equals_top: bool,
    pub oracle_maximal: Option<bool>,
    pub agree: bool,
}

impl From<&StarReport> for CensusRow {
    fn from(r: &StarReport) -> Self {
        CensusRow {
            s: r.s.clone(),
            c: r.profile.zero_count,
            class_sizes: r.profile.size_multiset(),
            l_s: r.profile.class_count(),
            big_l: r.profile.big_l_count(),
            predicted_size: r.predicted_size,
            actual_size: r.actual_size,
            w_dim: r.w_dim,
            kind: r.kind,
            equals_top: r.equals_top,
            oracle_maximal: r.oracle_maximal,
            agree: r.agree,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub centres: usize,
    pub projective_codes: usize,
    pub empty: usize,
    pub not_maximal: usize,
    pub star: usize,
    pub equals_top: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub summary: CensusSummary,
    pub rows: Vec<CensusRow>,
}

/// One row per (k-1)-subspace, in enumeration order. `jobs` sets the worker
/// count; the output does not depend on it.
pub fn census(params: &GrassmannParams, jobs: usize, force: bool) -> Result<Census> {
    let (reports, projective_codes) = sweep(params, jobs, force)?;
    let rows: Vec<CensusRow> = reports.iter().map(CensusRow::from).collect();
    let mut summary = CensusSummary {
        q: params.q(),
        n: params.n,
        k: params.k,
        centres: rows.len(),
        projective_codes,
        ..Default::default()
    };
    for row in &rows {
        match row.kind {
            Kind::Empty => summary.empty += 1,
            Kind::NotMaximal => summary.not_maximal += 1,
            Kind::Star => summary.star += 1,
        }
        summary.equals_top += row.equals_top as usize;
        summary.mismatches += !row.agree as usize;
    }
    Ok(Census { summary, rows })
}

/// Full per-centre reports for a sweep; see [`census`].
pub fn census_reports(
    params: &GrassmannParams,
    jobs: usize,
    force: bool,
) -> Result<Vec<StarReport>> {
    Ok(sweep(params, jobs, force)?.0)
}

fn sweep(params: &GrassmannParams, jobs: usize, force: bool) -> Result<(Vec<StarReport>, usize)> {
    check_guard(params.centre_count().max(params.vertex_count()), force)?;
    let universe = ProjectiveCodes::enumerate(&params.field, params.n, params.k, true)?;
    let centres: Vec<Subspace> =
        Grassmannian::new(&params.field, params.n, params.k - 1)?.collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    let reports = pool.install(|| {
        centres
            .par_iter()
            .map(|s| StarReport::build(s, &universe))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok((reports, universe.len()))
}
