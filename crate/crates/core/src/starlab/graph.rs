use std::collections::VecDeque;

use serde::Serialize;

use super::ProjectiveCodes;
use crate::error::Result;
use crate::grassmann::{adjacent, GrassmannParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
}

/// Vertex, edge and component counts of the projective-code graph.
pub fn graph_summary(params: &GrassmannParams, force: bool) -> Result<GraphSummary> {
    let universe = ProjectiveCodes::enumerate(&params.field, params.n, params.k, force)?;
    let codes = universe.codes();
    let v = codes.len();
    let mut neighbours = vec![Vec::new(); v];
    let mut edges = 0;
    for i in 0..v {
        for j in i + 1..v {
            if adjacent(&codes[i], &codes[j])? {
                neighbours[i].push(j);
                neighbours[j].push(i);
                edges += 1;
            }
        }
    }
    let mut seen = vec![false; v];
    let mut components = 0;
    for start in 0..v {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &neighbours[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(GraphSummary {
        vertices: v,
        edges,
        components,
    })
}

/// Connected components of the projective-code graph, by breadth-first search.
pub fn component_count(params: &GrassmannParams, force: bool) -> Result<usize> {
    Ok(graph_summary(params, force)?.components)
}
