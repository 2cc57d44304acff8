//! Standardness criteria, quiver-level Calabi-Yau dimension and maximal
//! `d`-CY generators for orbit categories `D^b(mod k Delta) / <g>`.

use std::sync::Arc;

use serde::Serialize;

use crate::automorphism::{enumerate_weakly_admissible, AutError, SlicedAutomorphism};
use crate::dynkin::{DynkinTree, Family};
use crate::mesh::{hom_knit, orbit_hom, MeshError};
use crate::zquiver::repetition::successors;
use crate::zquiver::{orbit_quotient, QuiverError, ZVertex};

/// Default upper bound for [`cy_dimension`].
pub const DEFAULT_D_MAX: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("{0} is not a generator from the list of weakly admissible groups")]
    UnrecognizedGenerator(String),
    #[error("d = {0} is out of range (need d >= 2)")]
    DOutOfRange(u32),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

impl From<QuiverError> for ClassifyError {
    fn from(e: QuiverError) -> Self {
        ClassifyError::Mesh(e.into())
    }
}

impl From<crate::dynkin::DynkinError> for ClassifyError {
    fn from(e: crate::dynkin::DynkinError) -> Self {
        ClassifyError::Mesh(e.into())
    }
}

impl From<AutError> for ClassifyError {
    fn from(e: AutError) -> Self {
        ClassifyError::Mesh(e.into())
    }
}

impl ClassifyError {
    pub fn code(&self) -> &'static str {
        match self {
            ClassifyError::UnrecognizedGenerator(_) => "UnrecognizedGenerator",
            ClassifyError::DOutOfRange(_) => "DOutOfRange",
            ClassifyError::Mesh(e) => e.code(),
        }
    }
}

/// Which sufficient condition for standardness applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum TableCase {
    /// `A_n` with `g = tau^r`, any `r >= 1`.
    Cylindric,
    /// A listed family whose exponent reaches the threshold.
    Threshold { threshold: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableVerdict {
    pub standard: bool,
    /// Name of the matching list entry, e.g. `phi*tau^2`.
    pub generator: String,
    pub exponent: u32,
    pub case: Option<TableCase>,
    /// Threshold of the family, when the family has one.
    pub threshold: Option<u32>,
}

fn not_weakly_admissible(g: &SlicedAutomorphism) -> Result<(), ClassifyError> {
    if g.is_identity() {
        return Err(AutError::IdentityInput.into());
    }
    if g.period().1 == 0 || !g.is_weakly_admissible()? {
        return Err(QuiverError::NotWeaklyAdmissible(format!("{g:?}")).into());
    }
    Ok(())
}

fn threshold(tree: &DynkinTree, name: &str) -> Option<u32> {
    let n = tree.rank() as u32;
    match tree.family() {
        Family::A if name.starts_with("rho") => Some(n - 1),
        Family::A => Some((n - 1) / 2),
        Family::D if n == 4 => Some(2),
        Family::D => Some(n - 2),
        Family::E => Some(match n {
            6 => 5,
            7 => 8,
            _ => 14,
        }),
        Family::L => None,
    }
}

/// Recognize `g` in the generator list and apply the sufficient conditions.
pub fn standard_by_table(g: &SlicedAutomorphism) -> Result<TableVerdict, ClassifyError> {
    not_weakly_admissible(g)?;
    let tree = g.tree();
    let (period, s) = g.period();
    let n = tree.rank() as i64;
    let vertices = s.abs() * n / period as i64;
    let r = if tree.family() == Family::A && n % 2 == 0 {
        2 * vertices / n
    } else {
        vertices / n
    } as u32;
    let inv = g.inverse();
    let list = enumerate_weakly_admissible(tree.clone(), r)?;
    let same_group = list
        .iter()
        .filter(|e| e.exponent == r)
        .find(|e| e.aut == *g || e.aut == inv);
    let entry = match same_group {
        Some(e) => e,
        None => {
            let mut found = None;
            for e in list.iter().filter(|e| e.exponent == r) {
                if e.aut.conjugacy_equal(g)? {
                    found = Some(e);
                    break;
                }
            }
            found.ok_or_else(|| ClassifyError::UnrecognizedGenerator(format!("{g:?}")))?
        }
    };
    let thr = threshold(tree, &entry.name);
    let case = if tree.family() == Family::A && g.as_tau_power().is_some() {
        Some(TableCase::Cylindric)
    } else {
        thr.filter(|&t| r >= t)
            .map(|threshold| TableCase::Threshold { threshold })
    };
    Ok(TableVerdict {
        standard: case.is_some(),
        generator: entry.name.clone(),
        exponent: r,
        case,
        threshold: thr,
    })
}

/// Hom data along one arrow `x -> y` of `Z Delta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowHom {
    pub from: String,
    pub to: String,
    /// `dim Hom(x, y)`.
    pub direct: u64,
    /// `sum_{r != 0} dim Hom(x, g^r y)`.
    pub others: u64,
    pub pass: bool,
}

/// For each arrow `x -> y` leaving slice 0: `Hom(x, y) = k` and
/// `Hom(x, g^r y) = 0` for `r != 0`.
pub fn standard_by_hom_condition(g: &SlicedAutomorphism) -> Result<(bool, Vec<ArrowHom>), ClassifyError> {
    not_weakly_admissible(g)?;
    let tree = g.tree();
    let mut details = Vec::new();
    for q in 0..tree.rank() {
        let x = ZVertex::new(0, q);
        let d = hom_knit(tree, x)?;
        for y in successors(tree, x) {
            let direct = d.get(y);
            let total = orbit_hom(g, x, y)?;
            let others = total - direct;
            details.push(ArrowHom {
                from: x.display(tree),
                to: y.display(tree),
                direct,
                others,
                pass: direct == 1 && others == 0,
            });
        }
    }
    Ok((details.iter().all(|a| a.pass), details))
}

/// More orbits than indecomposable `k Delta`-modules.
pub fn vertex_count_criterion(g: &SlicedAutomorphism) -> Result<bool, ClassifyError> {
    let q = orbit_quotient(g)?;
    Ok(q.vertex_count() > g.tree().positive_root_count()?)
}

/// Smallest `d` in `1..=d_max` with `S^d nu^{-1}` in `<g>`.
pub fn cy_dimension(g: &SlicedAutomorphism, d_max: u32) -> Result<Option<u32>, ClassifyError> {
    not_weakly_admissible(g)?;
    let tree = g.tree();
    let s = SlicedAutomorphism::suspension(tree.clone())?;
    let nu_inv = SlicedAutomorphism::serre_nu(tree.clone())?.inverse();
    for d in 1..=d_max {
        if s.power(d as i64).compose(&nu_inv)?.is_in_group_of(g)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// `tau^{-1} S^{d-1}`.
pub fn maximal_cy_generator(tree: Arc<DynkinTree>, d: u32) -> Result<SlicedAutomorphism, ClassifyError> {
    if d < 2 {
        return Err(ClassifyError::DOutOfRange(d));
    }
    let s = SlicedAutomorphism::suspension(tree.clone())?;
    Ok(SlicedAutomorphism::tau_power(tree, -1).compose(&s.power(d as i64 - 1))?)
}

/// Everything the `classify` command reports.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub schema_version: &'static str,
    pub tree: String,
    pub generator: String,
    pub by_table: bool,
    pub table: TableVerdict,
    pub by_hom_condition: bool,
    pub by_vertex_count: bool,
    pub cy_dimension: Option<u32>,
    pub vertex_count: usize,
    pub root_count: usize,
    pub details: Vec<ArrowHom>,
}

pub fn classify(g: &SlicedAutomorphism, d_max: u32) -> Result<ClassifyReport, ClassifyError> {
    let table = standard_by_table(g)?;
    let (by_hom, details) = standard_by_hom_condition(g)?;
    let q = orbit_quotient(g)?;
    let roots = g.tree().positive_root_count()?;
    Ok(ClassifyReport {
        schema_version: "1",
        tree: g.tree().name(),
        generator: table.generator.clone(),
        by_table: table.standard,
        table,
        by_hom_condition: by_hom,
        by_vertex_count: q.vertex_count() > roots,
        cy_dimension: cy_dimension(g, d_max)?,
        vertex_count: q.vertex_count(),
        root_count: roots,
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::parse_generator;
    use crate::dynkin::simply_laced_up_to;

    fn gen(f: Family, n: usize, s: &str) -> SlicedAutomorphism {
        parse_generator(Arc::new(DynkinTree::build(f, n).unwrap()), s).unwrap()
    }

    #[test]
    fn table_examples() {
        let v = standard_by_table(&gen(Family::A, 4, "rho^3")).unwrap();
        assert!(v.standard);
        assert_eq!(v.case, Some(TableCase::Threshold { threshold: 3 }));
        assert!(standard_by_table(&gen(Family::E, 8, "tau^14")).unwrap().standard);
        assert!(!standard_by_table(&gen(Family::E, 8, "tau^13")).unwrap().standard);
        let v = standard_by_table(&gen(Family::A, 5, "tau^2")).unwrap();
        assert_eq!(v.case, Some(TableCase::Cylindric));
        // rho^2 = tau^-1 on A_4 is cylindric as well
        let v = standard_by_table(&gen(Family::A, 4, "rho^2")).unwrap();
        assert_eq!(v.case, Some(TableCase::Cylindric));
        // inverse and commuted forms are recognized
        assert_eq!(
            standard_by_table(&gen(Family::D, 5, "tau^-3")).unwrap().generator,
            "tau^3"
        );
        assert_eq!(
            standard_by_table(&gen(Family::D, 5, "tau^3*phi")).unwrap().generator,
            "phi*tau^3"
        );
    }

    #[test]
    fn recognition() {
        // tau^-1 S = rho^5 on A_2
        assert_eq!(
            standard_by_table(&gen(Family::A, 2, "tau^-1*S")).unwrap().generator,
            "rho^5"
        );
        let e = standard_by_table(&gen(Family::A, 3, "phi")).unwrap_err();
        assert_eq!(e.code(), "NotWeaklyAdmissible");
    }

    #[test]
    fn hom_condition_examples() {
        assert!(standard_by_hom_condition(&gen(Family::E, 7, "tau^8")).unwrap().0);
        let (ok, details) = standard_by_hom_condition(&gen(Family::E, 7, "tau^7")).unwrap();
        assert!(!ok);
        assert!(details.iter().any(|a| !a.pass));
        assert!(standard_by_hom_condition(&gen(Family::A, 3, "tau")).unwrap().0);
        // cylindric but fails the arrow condition
        assert!(!standard_by_hom_condition(&gen(Family::A, 5, "tau")).unwrap().0);
    }

    #[test]
    fn vertex_count_examples() {
        assert!(vertex_count_criterion(&gen(Family::A, 3, "tau^4")).unwrap());
        assert!(!vertex_count_criterion(&gen(Family::A, 3, "tau")).unwrap());
        assert!(!vertex_count_criterion(&gen(Family::A, 1, "tau")).unwrap());
    }

    #[test]
    fn cy_examples() {
        assert_eq!(cy_dimension(&gen(Family::A, 3, "tau^-1*S"), 24).unwrap(), Some(2));
        assert_eq!(cy_dimension(&gen(Family::A, 3, "tau^3"), 1).unwrap(), None);
        for t in simply_laced_up_to(8) {
            let g = SlicedAutomorphism::translation(Arc::new(t));
            assert_eq!(cy_dimension(&g, 1).unwrap(), Some(1));
        }
    }

    #[test]
    fn maximal_generators() {
        let a3 = Arc::new(DynkinTree::build(Family::A, 3).unwrap());
        assert_eq!(
            maximal_cy_generator(a3.clone(), 2).unwrap(),
            gen(Family::A, 3, "tau^-1*S")
        );
        assert_eq!(maximal_cy_generator(a3, 1).unwrap_err().code(), "DOutOfRange");
        let d4 = Arc::new(DynkinTree::build(Family::D, 4).unwrap());
        assert_eq!(maximal_cy_generator(d4, 3).unwrap().as_tau_power(), Some(-7));
        for t in simply_laced_up_to(8) {
            let t = Arc::new(t);
            for d in 2..=6 {
                let g = maximal_cy_generator(t.clone(), d).unwrap();
                assert!(g.is_weakly_admissible().unwrap(), "{} d={d}", t.name());
                assert!(cy_dimension(&g, 24).unwrap().unwrap() <= d);
            }
        }
    }

    #[test]
    fn report_serializes() {
        let r = classify(&gen(Family::E, 8, "tau^14"), DEFAULT_D_MAX).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["by_table"], true);
        assert_eq!(json["schema_version"], "1");
        assert_eq!(json["vertex_count"], 112);
    }
}
