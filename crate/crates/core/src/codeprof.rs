//! Column structure of a linear code.
//!
//! Columns of a generator matrix are grouped into proportionality classes.
//! Zero columns are counted separately and never form a class, so the class
//! count and the set of repeated classes are the same for a code and for
//! the code obtained by deleting its zero columns.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matfq::{MatFq, Subspace};

/// One proportionality class of nonzero columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnClass {
    /// The column scaled so its first nonzero coordinate is 1.
    pub rep: Vec<u8>,
    /// Number of columns in the class.
    #[serde(rename = "l")]
    pub size: usize,
    #[serde(skip)]
    pub columns: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnProfile {
    pub zero_count: usize,
    /// Classes in order of their first column.
    pub classes: Vec<ColumnClass>,
}

impl ColumnProfile {
    pub fn of_matrix(m: &MatFq) -> ColumnProfile {
        let f = m.field();
        let mut zero_count = 0;
        let mut classes: Vec<ColumnClass> = Vec::new();
        for j in 0..m.cols() {
            let Some(rep) = normalize(f, &m.column(j)) else {
                zero_count += 1;
                continue;
            };
            match classes.iter_mut().find(|c| c.rep == rep) {
                Some(c) => {
                    c.size += 1;
                    c.columns.push(j);
                }
                None => classes.push(ColumnClass {
                    rep,
                    size: 1,
                    columns: vec![j],
                }),
            }
        }
        ColumnProfile {
            zero_count,
            classes,
        }
    }

    /// Number of nonzero classes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Classes with more than one column.
    pub fn big_l(&self) -> impl Iterator<Item = &ColumnClass> {
        self.classes.iter().filter(|c| c.size > 1)
    }

    pub fn big_l_count(&self) -> usize {
        self.big_l().count()
    }

    pub fn max_l(&self) -> usize {
        self.classes.iter().map(|c| c.size).max().unwrap_or(0)
    }

    /// Class sizes in descending order.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

impl Serialize for ColumnProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ColumnProfile", 4)?;
        st.serialize_field("c", &self.zero_count)?;
        st.serialize_field("classes", &self.classes)?;
        st.serialize_field("lS", &self.class_count())?;
        st.serialize_field("L_size", &self.big_l_count())?;
        st.end()
    }
}

fn normalize(f: &Field, v: &[u8]) -> Option<Vec<u8>> {
    let lead = *v.iter().find(|&&c| c != 0)?;
    let inv = f.inv(lead).unwrap();
    Some(v.iter().map(|&c| f.mul(c, inv)).collect())
}

/// Whether the columns of `m` are nonzero and pairwise non-proportional.
pub(crate) fn columns_projective(m: &MatFq) -> bool {
    let f = m.field();
    let mut seen: Vec<Vec<u8>> = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        match normalize(f, &m.column(j)) {
            None => return false,
            Some(rep) if seen.contains(&rep) => return false,
            Some(rep) => seen.push(rep),
        }
    }
    true
}

/// Profile of the canonical generator matrix of `s`.
pub fn column_profile(s: &Subspace) -> ColumnProfile {
    ColumnProfile::of_matrix(s.basis())
}

pub fn is_nondegenerate(s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.cols()).all(|j| (0..b.rows()).any(|i| b.get(i, j) != 0))
}

pub fn is_projective(s: &Subspace) -> bool {
    s.dim() > 0 && columns_projective(s.basis())
}

/// Deletes the single zero column of `s`.
pub fn puncture_zero(s: &Subspace) -> Result<Subspace> {
    let profile = column_profile(s);
    if profile.zero_count != 1 {
        return Err(Error::ZeroColumnCount(profile.zero_count));
    }
    let b = s.basis();
    let z = (0..b.cols())
        .find(|&j| (0..b.rows()).all(|i| b.get(i, j) == 0))
        .unwrap();
    let rows: Vec<Vec<u8>> = b
        .row_iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != z)
                .map(|(_, &c)| c)
                .collect()
        })
        .collect();
    Ok(Subspace::span(&MatFq::from_rows(s.field(), &rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{star_superspaces, Grassmannian};
    use crate::matfq::{parse_matrix, rowspace};
    use proptest::prelude::*;

    fn gf(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    fn code(q: u32, text: &str) -> Subspace {
        rowspace(&parse_matrix(text, &gf(q)).unwrap()).unwrap()
    }

    #[test]
    fn profile_examples() {
        let s = code(2, "1 0 1 1 0 1; 0 1 1 0 1 1");
        let p = column_profile(&s);
        assert_eq!(p.zero_count, 0);
        assert_eq!(p.size_multiset(), vec![2, 2, 2]);
        assert_eq!(p.class_count(), 3);
        assert_eq!(p.big_l_count(), 3);

        let p = column_profile(&code(4, "1 1 1 1"));
        assert_eq!((p.zero_count, p.class_count(), p.max_l()), (0, 1, 4));
        assert_eq!(p.classes[0].rep, vec![1]);

        let s = code(3, "1 0 0 0 0 0 0; 0 1 0 0 1 0 1; 0 0 1 0 0 1 0");
        let p = column_profile(&s);
        assert_eq!(p.zero_count, 1);
        let sizes: Vec<usize> = p.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(p.classes[1].columns, vec![1, 4, 6]);
    }

    #[test]
    fn profile_json() {
        let p = column_profile(&code(4, "1 1 1 1"));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"c":0,"classes":[{"rep":[1],"l":4}],"lS":1,"L_size":1}"#
        );
    }

    #[test]
    fn predicates() {
        assert!(is_nondegenerate(&code(3, "1 0 1; 0 1 1")));
        assert!(!is_nondegenerate(&code(
            3,
            "1 0 0 0 0 0 0; 0 1 0 0 1 0 1; 0 0 1 0 0 1 0"
        )));
        assert!(is_nondegenerate(&code(5, "1 2 3 4")));
        assert!(is_projective(&code(2, "1 0 0 1 1; 0 1 0 1 0; 0 0 1 1 1")));
        assert!(!is_projective(&code(4, "1 1 1 1")));
        for text in [
            "0 1 2 3; 0 1 3 2",
            "0 1 2 3; 1 0 2 3",
            "1 0 3 2; 0 1 3 2",
            "1 0 3 2; 1 0 2 3",
        ] {
            assert!(!is_projective(&code(4, text)), "{text}");
        }
    }

    #[test]
    fn puncture() {
        let s = code(3, "1 0 0 0 0 0 0; 0 1 0 0 1 0 1; 0 0 1 0 0 1 0");
        let p = puncture_zero(&s).unwrap();
        assert_eq!((p.dim(), p.ambient_dim()), (3, 6));
        assert!(is_nondegenerate(&p));
        let sizes: Vec<usize> = column_profile(&p).classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);

        let s = code(5, "1 2 0; 0 4 0");
        assert_eq!(puncture_zero(&s).unwrap(), code(5, "1 2; 0 4"));

        assert_eq!(
            puncture_zero(&code(2, "1 1 0 0")).unwrap_err(),
            Error::ZeroColumnCount(2)
        );
        assert_eq!(
            puncture_zero(&code(2, "1 1")).unwrap_err(),
            Error::ZeroColumnCount(0)
        );
    }

    #[test]
    fn superspaces_of_projective_codes_are_projective() {
        let f = gf(2);
        for k1 in 1..4 {
            for s in Grassmannian::new(&f, 5, k1).unwrap().filter(is_projective) {
                for t in star_superspaces(&s).unwrap() {
                    assert!(is_projective(&t), "{s:?} -> {t:?}");
                }
            }
        }
    }

    fn code_strategy() -> impl Strategy<Value = (Subspace, MatFq)> {
        (
            prop_oneof![Just(2u32), Just(3), Just(4)],
            1usize..4,
            4usize..8,
        )
            .prop_flat_map(|(q, k, n)| {
                let data = proptest::collection::vec(0..q as u8, k * n);
                let t = proptest::collection::vec(0..q as u8, k * k);
                (data, t).prop_filter_map("rank", move |(d, t)| {
                    let f = gf(q);
                    let m = MatFq::new(&f, k, n, d).ok()?;
                    let t = MatFq::new(&f, k, k, t).ok()?;
                    (m.rank() == k && t.rank() == k).then(|| (Subspace::span(&m), t))
                })
            })
    }

    fn summary(p: &ColumnProfile) -> (usize, Vec<usize>) {
        (p.zero_count, p.size_multiset())
    }

    proptest! {
        #[test]
        fn profile_generator_independent((s, t) in code_strategy()) {
            let raw = t.mul(s.basis()).unwrap();
            prop_assert_eq!(summary(&ColumnProfile::of_matrix(&raw)), summary(&column_profile(&s)));
            prop_assert_eq!(summary(&column_profile(&Subspace::span(&raw))), summary(&column_profile(&s)));
        }

        #[test]
        fn profile_permutation_invariant((s, sigma) in code_strategy().prop_flat_map(|(s, _)| {
            let n = s.ambient_dim();
            (Just(s), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })) {
            let p = s.permute_columns(&sigma).unwrap();
            prop_assert_eq!(summary(&column_profile(&p)), summary(&column_profile(&s)));
        }

        #[test]
        fn projective_implies_nondegenerate((s, _t) in code_strategy()) {
            let p = column_profile(&s);
            prop_assert_eq!(p.zero_count + p.classes.iter().map(|c| c.size).sum::<usize>(), s.ambient_dim());
            if is_projective(&s) {
                prop_assert!(is_nondegenerate(&s));
            }
        }
    }
}
