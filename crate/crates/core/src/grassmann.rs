//! Grassmannians over GF(q): counting, enumeration, stars and tops.
//!
//! Enumeration order is fixed so that every downstream report is
//! reproducible: subspaces are produced pivot pattern by pivot pattern
//! (pivot column sets in lexicographic order), and within one pattern the
//! free RREF entries (read row-major) run through all q-ary words in
//! lexicographic order. This is the same order as `Ord` on [`Subspace`].

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matfq::{MatFq, Subspace};

/// Default ceiling on the number of subspaces a single enumeration may visit.
pub const DEFAULT_GUARD: u128 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_GUARD`].
pub const GUARD_ENV: &str = "GRASSCLIQUE_GUARD";

pub fn enumeration_guard() -> u128 {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GUARD)
}

/// Fails with [`Error::GuardExceeded`] when `size` is above the guard and `force` is off.
pub fn check_guard(size: u128, force: bool) -> Result<()> {
    let guard = enumeration_guard();
    if size > guard && !force {
        return Err(Error::GuardExceeded { size, guard });
    }
    Ok(())
}

/// Number of k-subspaces of F_q^n, by the exact product formula
/// `prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1)`.
///
/// Out-of-range `k` gives 0; negative `n` is an error.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> Result<u128> {
    if n < 0 {
        return Err(Error::Dimension(format!("negative n = {n}")));
    }
    if q < 2 {
        return Err(Error::UnsupportedOrder(q as u32));
    }
    if k < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let q = q as u128;
    let pow = |e: i64| -> Result<u128> {
        q.checked_pow(e as u32)
            .ok_or(Error::Overflow("gaussian_binomial"))
    };
    let mut acc: u128 = 1;
    for i in 0..k {
        // After step i, acc = [n choose i+1]_q, so the division is exact.
        let num = pow(n - i)? - 1;
        let den = pow(i + 1)? - 1;
        acc = acc
            .checked_mul(num)
            .ok_or(Error::Overflow("gaussian_binomial"))?
            / den;
    }
    Ok(acc)
}

/// `[n]_q = (q^n - 1) / (q - 1)`, the number of points of PG(n-1, q).
pub fn q_integer(n: u32, q: u64) -> u128 {
    (0..n).map(|i| (q as u128).pow(i)).sum()
}

/// Parameters of a graph on k-subspaces of F_q^n with 1 < k < n - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannParams {
    pub field: Field,
    pub n: usize,
    pub k: usize,
}

impl GrassmannParams {
    pub fn new(field: Field, n: usize, k: usize) -> Result<Self> {
        if !(1 < k && k + 1 < n) {
            return Err(Error::Dimension(format!(
                "need 1 < k < n - 1, got n = {n}, k = {k}"
            )));
        }
        Ok(GrassmannParams { field, n, k })
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// Number of vertices of the Grassmann graph.
    pub fn vertex_count(&self) -> u128 {
        gaussian_binomial(self.n as i64, self.k as i64, self.q() as u64).unwrap_or(u128::MAX)
    }

    /// Number of (k-1)-subspaces, i.e. possible star centres.
    pub fn centre_count(&self) -> u128 {
        gaussian_binomial(self.n as i64, self.k as i64 - 1, self.q() as u64).unwrap_or(u128::MAX)
    }
}

/// Streaming enumeration of all k-subspaces of F_q^n in canonical order.
pub struct Grassmannian {
    field: Field,
    n: usize,
    k: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    word: Vec<u8>,
}

impl Grassmannian {
    pub fn new(field: &Field, n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Dimension(format!("k = {k} > n = {n}")));
        }
        let mut g = Grassmannian {
            field: field.clone(),
            n,
            k,
            pivots: None,
            free: Vec::new(),
            word: Vec::new(),
        };
        g.enter_pattern((0..k).collect());
        Ok(g)
    }

    fn enter_pattern(&mut self, pivots: Vec<usize>) {
        self.free.clear();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..self.n {
                if !pivots.contains(&j) {
                    self.free.push((i, j));
                }
            }
        }
        self.word = vec![0; self.free.len()];
        self.pivots = Some(pivots);
    }

    fn next_pattern(pivots: &[usize], n: usize) -> Option<Vec<usize>> {
        let k = pivots.len();
        let mut next = pivots.to_vec();
        let i = (0..k).rev().find(|&i| next[i] < n - k + i)?;
        next[i] += 1;
        for j in i + 1..k {
            next[j] = next[j - 1] + 1;
        }
        Some(next)
    }

    fn current(&self) -> Subspace {
        let pivots = self.pivots.as_ref().unwrap();
        let mut m = MatFq::zeros(&self.field, self.k, self.n);
        for (i, &p) in pivots.iter().enumerate() {
            m.set(i, p, 1);
        }
        for (&(i, j), &v) in self.free.iter().zip(&self.word) {
            m.set(i, j, v);
        }
        Subspace::from_canonical(m, pivots.clone())
    }

    /// Advances the free-entry word; false once it wraps around.
    fn bump_word(&mut self) -> bool {
        let q = self.field.q() as u8;
        for d in self.word.iter_mut().rev() {
            *d += 1;
            if *d < q {
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for Grassmannian {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        self.pivots.as_ref()?;
        let out = self.current();
        if !self.bump_word() {
            match Self::next_pattern(self.pivots.as_ref().unwrap(), self.n) {
                Some(p) => self.enter_pattern(p),
                None => self.pivots = None,
            }
        }
        Some(out)
    }
}

pub fn enumerate_grassmannian(field: &Field, n: usize, k: usize) -> Result<Grassmannian> {
    Grassmannian::new(field, n, k)
}

/// Vectors of F_q^dim with first nonzero entry 1, one per 1-subspace,
/// in lexicographic order.
pub fn projective_points(field: &Field, dim: usize) -> Vec<Vec<u8>> {
    let q = field.q() as usize;
    let mut out = Vec::new();
    for lead in (0..dim).rev() {
        let tail = dim - lead - 1;
        let count = q.pow(tail as u32);
        for code in 0..count {
            let mut v = vec![0u8; dim];
            v[lead] = 1;
            let mut c = code;
            for t in (lead + 1..dim).rev() {
                v[t] = (c % q) as u8;
                c /= q;
            }
            out.push(v);
        }
    }
    out
}

/// All (dim s + 1)-dimensional superspaces of `s`, in canonical order.
///
/// One extension vector is taken per 1-subspace of the coordinate
/// complement spanned by the non-pivot columns of `s`.
pub fn star_superspaces(s: &Subspace) -> Result<Vec<Subspace>> {
    let n = s.ambient_dim();
    if s.dim() >= n {
        return Err(Error::Dimension("the full space has no superspaces".into()));
    }
    let free: Vec<usize> = (0..n).filter(|c| !s.pivots().contains(c)).collect();
    let mut out = projective_points(s.field(), free.len())
        .into_iter()
        .map(|x| {
            let mut w = vec![0u8; n];
            for (&c, &v) in free.iter().zip(&x) {
                w[c] = v;
            }
            s.extend(&w)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// All k-dimensional subspaces of `u` (its hyperplanes), in canonical order.
pub fn top_subspaces(u: &Subspace, k: usize) -> Result<Vec<Subspace>> {
    if u.dim() != k + 1 {
        return Err(Error::Dimension(format!(
            "top of {k}-subspaces needs a {}-dimensional span, got {}",
            k + 1,
            u.dim()
        )));
    }
    let f = u.field();
    let mut out = Vec::new();
    for a in projective_points(f, k + 1) {
        let functional = Subspace::span(&MatFq::from_rows(f, &[a])?);
        let coords = functional.dual();
        let rows = coords.basis().mul(u.basis())?;
        out.push(Subspace::span(&rows));
    }
    out.sort();
    Ok(out)
}

/// Grassmann graph adjacency: distinct k-subspaces meeting in dimension k - 1.
pub fn adjacent(a: &Subspace, b: &Subspace) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!(
            "adjacency between dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(a.dim() > 0 && a.intersect_dim(b)? + 1 == a.dim())
}
