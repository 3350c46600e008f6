//! Reports produced by the commands, in JSON and plain text.

use super::formats::CodeFile;
use super::Config;
use crate::braiding::{braiding_form, BraidingForm};
use crate::code::{unimodular_check, PauliCode};
use crate::error::{Error, Result};
use crate::forms::{l_group, LGroup, QuadraticSpace, WittGroupStructure};
use crate::homology::{analyze, charge_modules, DualityReport, MobilityReport};
use crate::qca::CliffordQca;
use crate::surgery::{LClass, LClassReport, PoincareComplex, SurgeryStep};
use serde::Serialize;
use std::fmt::Write;

pub trait Render: Serialize {
    fn text(&self) -> String;
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub p: u64,
    pub spatial_dims: usize,
    pub qudits_per_site: usize,
    pub generators: usize,
    pub unimodular: bool,
    pub isotropic: Option<bool>,
    pub lagrangian: Option<bool>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.unimodular && self.isotropic == Some(true) && self.lagrangian == Some(true)
    }
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let opt = |v: Option<bool>| v.map_or("not checked", mark);
        format!(
            "code: p = {}, {} spatial dims, {} qudits per site, {} generators\nunimodular form: {}\nisotropic: {}\nlagrangian: {}\n",
            self.p,
            self.spatial_dims,
            self.qudits_per_site,
            self.generators,
            mark(self.unimodular),
            opt(self.isotropic),
            opt(self.lagrangian)
        )
    }
}

pub fn verify(cf: &CodeFile, cfg: &Config) -> Result<VerifyReport> {
    let mut r = VerifyReport {
        p: cf.p,
        spatial_dims: cf.spatial_dims,
        qudits_per_site: cf.qudits_per_site,
        generators: cf.generators.len(),
        unimodular: true,
        isotropic: None,
        lagrangian: None,
    };
    if let Some(om) = cf.omega_matrix()? {
        if om.rows() != om.cols() || om.rows() != 2 * cf.qudits_per_site {
            return Err(Error::Shape("omega must be 2q x 2q".into()));
        }
        r.unimodular = unimodular_check(&om)?;
        if !r.unimodular {
            return Ok(r);
        }
    }
    let code = cf.to_code()?;
    r.isotropic = Some(code.is_isotropic());
    r.lagrangian = Some(code.is_lagrangian(&cfg.groebner())?);
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeSummary {
    pub degree: usize,
    pub generators: usize,
    pub relations: usize,
    pub krull_dim: i32,
    pub cardinality: String,
    pub zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargesReport {
    pub p: u32,
    pub spatial_dims: usize,
    pub fully_mobile: bool,
    pub degrees: Vec<ChargeSummary>,
}

impl Render for ChargesReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for d in &self.degrees {
            if d.zero {
                writeln!(s, "degree {}: zero", d.degree).unwrap();
            } else {
                writeln!(
                    s,
                    "degree {}: {} generators, {} relations, Krull dimension {}, cardinality {}",
                    d.degree, d.generators, d.relations, d.krull_dim, d.cardinality
                )
                .unwrap();
            }
        }
        writeln!(s, "fully mobile: {}", mark(self.fully_mobile)).unwrap();
        s
    }
}

pub fn charges(code: &PauliCode, degree: Option<usize>, cfg: &Config) -> Result<ChargesReport> {
    let all = charge_modules(code, &cfg.groebner())?;
    let fully_mobile = all.iter().all(|c| c.krull_dim <= 0);
    if let Some(d) = degree {
        if d >= all.len().max(1) && d >= code.nvars() {
            return Err(Error::Invalid(format!("degree {d} is out of range 0..{}", code.nvars())));
        }
    }
    let degrees = all
        .iter()
        .filter(|c| degree.is_none_or(|d| d == c.degree))
        .map(|c| ChargeSummary {
            degree: c.degree,
            generators: c.presentation.rank,
            relations: c.presentation.generators.len(),
            krull_dim: c.krull_dim,
            cardinality: c.cardinality(),
            zero: c.is_zero(),
        })
        .collect();
    Ok(ChargesReport {
        p: code.modulus(),
        spatial_dims: code.nvars(),
        fully_mobile,
        degrees,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub p: u32,
    pub spatial_dims: usize,
    pub spacetime_dim: usize,
    pub group: LGroup,
    pub group_label: String,
    pub mobility: MobilityReport,
    pub duality: DualityReport,
    pub braiding: Option<BraidingForm>,
    /// The class, when it is determined by the data computed here.
    pub class: Option<String>,
    pub arf: Option<u32>,
    pub notes: Vec<String>,
}

impl Render for ClassifyReport {
    fn text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "spatial dims {}, spacetime dim {}, classifying group {}",
            self.spatial_dims, self.spacetime_dim, self.group_label
        )
        .unwrap();
        for d in &self.mobility.degrees {
            writeln!(s, "charges in degree {}: cardinality {}", d.degree, d.cardinality).unwrap();
        }
        writeln!(s, "duality of charge counts: {}", mark(self.duality.holds)).unwrap();
        if let Some(b) = &self.braiding {
            writeln!(s, "charge basis: {}", b.generators.join(", ")).unwrap();
            for row in &b.gram {
                let r: Vec<String> = row.iter().map(u32::to_string).collect();
                writeln!(s, "  braiding [{}]", r.join(" ")).unwrap();
            }
            let th: Vec<String> = b
                .theta_labels
                .iter()
                .zip(&b.theta)
                .map(|(l, t)| format!("{l}: {t}"))
                .collect();
            writeln!(s, "self-statistics (mod {}): {}", 2 * b.p, th.join(", ")).unwrap();
        }
        match &self.class {
            Some(c) => writeln!(s, "class: {c}").unwrap(),
            None => writeln!(s, "class: not determined").unwrap(),
        }
        if let Some(a) = self.arf {
            writeln!(s, "arf: {a}").unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        s
    }
}

pub fn classify(code: &PauliCode, cfg: &Config) -> Result<ClassifyReport> {
    let gb = cfg.groebner();
    if !code.is_lagrangian(&gb)? {
        return Err(Error::Precondition("code is not Lagrangian".into()));
    }
    let (_, mobility, duality) = analyze(code, &gb)?;
    let Some(duality) = duality else {
        let bad: Vec<String> = mobility
            .degrees
            .iter()
            .filter(|d| d.krull_dim > 0)
            .map(|d| format!("degree {} has Krull dimension {}", d.degree, d.krull_dim))
            .collect();
        return Err(Error::Precondition(format!(
            "code is not fully mobile ({}); classification needs finite charge modules",
            bad.join(", ")
        )));
    };
    let (p, m) = (code.modulus(), code.nvars());
    let n = m + 2;
    let group = l_group(n as i64, p);
    let mut notes = Vec::new();
    let (mut braiding, mut class, mut arf) = (None, None, None);
    if m == 2 {
        let form = braiding_form(code, &gb, cfg.max_torus_doublings)?;
        if !form.refinement_consistent {
            notes.push("self-statistics do not refine the braiding form".into());
        }
        match form.witt_class()? {
            Some(w) => {
                arf = w.arf();
                class = Some(w.to_string());
            }
            None => notes.push("self-statistics take values outside {0, 2}; only the braiding data is reported".into()),
        }
        notes.push(
            "in spacetime dimension 4 some codes admit no gapped boundary; the class is the Witt reduction of the braiding data"
                .into(),
        );
        braiding = Some(form);
    } else if group == LGroup::Trivial {
        class = Some("0".into());
    } else {
        notes.push("the middle form is not computed for this dimension; pass it to the surgery command".into());
    }
    Ok(ClassifyReport {
        p,
        spatial_dims: m,
        spacetime_dim: n,
        group_label: group.to_string(),
        group,
        mobility,
        duality,
        braiding,
        class,
        arf,
        notes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WittReport {
    pub p: u32,
    pub dim: usize,
    pub hyperbolic_planes: usize,
    pub anisotropic_dim: usize,
    pub class: String,
    pub arf: Option<u32>,
    pub group_structure: String,
}

impl Render for WittReport {
    fn text(&self) -> String {
        let mut s = format!(
            "dim {} over Z/{}: {} hyperbolic planes + anisotropic part of dim {}\nWitt class: {} in a group {}\n",
            self.dim, self.p, self.hyperbolic_planes, self.anisotropic_dim, self.class, self.group_structure
        );
        if let Some(a) = self.arf {
            writeln!(s, "arf: {a}").unwrap();
        }
        s
    }
}

pub fn witt(v: &QuadraticSpace) -> Result<WittReport> {
    let d = v.witt_decompose()?;
    Ok(WittReport {
        p: v.modulus(),
        dim: v.dim(),
        hyperbolic_planes: d.hyperbolic,
        anisotropic_dim: d.anisotropic.dim(),
        class: d.class.to_string(),
        arf: d.class.arf(),
        group_structure: WittGroupStructure::of_prime(v.modulus()).to_string(),
    })
}

pub fn class_label(c: &LClass) -> String {
    match c {
        LClass::Zero => "0".into(),
        LClass::Witt { label, .. } => label.clone(),
        LClass::Arf { value } => format!("arf {value}"),
        LClass::SymmetricRank { value } => format!("rank {value} mod 2"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub class_label: String,
    #[serde(flatten)]
    pub report: LClassReport,
    pub steps: Vec<SurgeryStep>,
}

impl Render for SurgeryReport {
    fn text(&self) -> String {
        format!(
            "degree {} over Z/{}: group {}, {} surgery steps\nclass: {}\n",
            self.report.degree,
            self.report.p,
            self.report.group,
            self.report.surgery_steps,
            self.class_label
        )
    }
}

pub fn surgery(x: &PoincareComplex) -> Result<SurgeryReport> {
    let (_, trace) = x.reduce_to_middle()?;
    let report = x.classify()?;
    Ok(SurgeryReport {
        class_label: class_label(&report.class),
        report,
        steps: trace.steps,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QcaReport {
    pub p: u32,
    pub m: usize,
    pub q: usize,
    pub symplectic: bool,
    pub separated: Option<bool>,
    pub range: u32,
}

impl Render for QcaReport {
    fn text(&self) -> String {
        format!(
            "QCA on {} qudits per site over Z/{}, {} dims\nsymplectic: {}\nseparated: {}\nrange: {}\n",
            self.q,
            self.p,
            self.m,
            mark(self.symplectic),
            self.separated.map_or("not checked", mark),
            self.range
        )
    }
}

pub fn qca_verify(u: &CliffordQca) -> Result<QcaReport> {
    let symplectic = u.verify_symplectic();
    Ok(QcaReport {
        p: u.modulus(),
        m: u.nvars(),
        q: u.qudits(),
        symplectic,
        separated: if symplectic { Some(u.is_separated()?) } else { None },
        range: u.range(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleEntry {
    pub name: String,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleList {
    pub examples: Vec<ExampleEntry>,
}

impl Render for ExampleList {
    fn text(&self) -> String {
        self.examples
            .iter()
            .map(|e| format!("{:<16} {}\n", e.name, e.description))
            .collect()
    }
}
